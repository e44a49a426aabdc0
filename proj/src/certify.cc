// Copyright 2026 The ldigraph Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "ldigraph/certify.h"

#include <map>
#include <string>

#include "ldigraph/error.h"

namespace ldigraph {

std::string_view ClaimName(Claim claim) {
  switch (claim) {
    case Claim::kDominating: return "dominating";
    case Claim::kLocating: return "locating";
    case Claim::kLocatingDominating: return "ld";
  }
  return "ld";
}

std::optional<Claim> ParseClaim(std::string_view text) {
  if (text == "dominating" || text == "dom") return Claim::kDominating;
  if (text == "locating" || text == "loc") return Claim::kLocating;
  if (text == "ld" || text == "locating-dominating") {
    return Claim::kLocatingDominating;
  }
  return std::nullopt;
}

namespace {

std::optional<Witness> FindUndominated(const Digraph& g, const VertexSet& s) {
  for (Vertex v = 0; v < g.order(); ++v) {
    if (!s.contains(v) && !g.in(v).Intersects(s)) {
      return Witness{Witness::Kind::kUndominated, v};
    }
  }
  return std::nullopt;
}

std::optional<Witness> FindUnlocated(const Digraph& g, const VertexSet& s) {
  // Least two members of each trace class; the answer is the least such pair.
  std::map<VertexSet, std::pair<Vertex, Vertex>> first_two;
  for (Vertex v = 0; v < g.order(); ++v) {
    if (s.contains(v)) continue;
    auto [it, inserted] = first_two.try_emplace(TraceOn(g, v, s), v, -1);
    if (!inserted && it->second.second == -1) it->second.second = v;
  }
  std::optional<Witness> best;
  for (const auto& [trace, pair] : first_two) {
    if (pair.second == -1) continue;
    Witness w{Witness::Kind::kUnlocated, pair.first, pair.second};
    if (!best || std::pair(w.first, w.second) <
                     std::pair(best->first, best->second)) {
      best = w;
    }
  }
  return best;
}

Certificate Make(const VertexSet& s, Claim claim, std::optional<Witness> w) {
  Certificate c{s, claim, !w.has_value(), w};
  return c;
}

void CheckUniverse(const Digraph& g, const VertexSet& s) {
  if (s.universe() != g.order()) {
    throw Error(ErrorCode::kVertexOutOfRange,
                "vertex set universe " + std::to_string(s.universe()) +
                    " does not match digraph order " +
                    std::to_string(g.order()),
                {s.universe()});
  }
}

}  // namespace

Certificate IsDominating(const Digraph& g, const VertexSet& s) {
  CheckUniverse(g, s);
  return Make(s, Claim::kDominating, FindUndominated(g, s));
}

Certificate IsLocating(const Digraph& g, const VertexSet& s) {
  CheckUniverse(g, s);
  return Make(s, Claim::kLocating, FindUnlocated(g, s));
}

Certificate IsLocatingDominating(const Digraph& g, const VertexSet& s) {
  CheckUniverse(g, s);
  std::optional<Witness> w = FindUndominated(g, s);
  if (!w) w = FindUnlocated(g, s);
  return Make(s, Claim::kLocatingDominating, w);
}

Certificate Certify(const Digraph& g, const VertexSet& s, Claim claim) {
  switch (claim) {
    case Claim::kDominating: return IsDominating(g, s);
    case Claim::kLocating: return IsLocating(g, s);
    case Claim::kLocatingDominating: return IsLocatingDominating(g, s);
  }
  return IsLocatingDominating(g, s);
}

SPartition ComputeSPartition(const Digraph& g, const VertexSet& s) {
  CheckUniverse(g, s);
  SPartition p;
  p.base = s;
  std::map<VertexSet, size_t> index;
  for (Vertex v = 0; v < g.order(); ++v) {
    if (s.contains(v)) continue;
    VertexSet trace = TraceOn(g, v, s);
    auto [it, inserted] = index.try_emplace(trace, p.parts.size());
    if (inserted) p.parts.push_back({trace, VertexSet(g.order())});
    p.parts[it->second].members.insert(v);
  }
  for (const SPartitionPart& part : p.parts) {
    (part.members.size() == 1 ? p.singletons : p.larger) += 1;
  }
  return p;
}

int CountSPartitionParts(const Digraph& g, const VertexSet& s) {
  std::map<VertexSet, int> seen;
  for (Vertex v = 0; v < g.order(); ++v) {
    if (!s.contains(v)) seen.try_emplace(TraceOn(g, v, s), 0);
  }
  return static_cast<int>(seen.size());
}

VertexSet ExternalPrivateNeighbours(const Digraph& g, const VertexSet& s,
                                    Vertex v) {
  CheckUniverse(g, s);
  if (v < 0 || v >= g.order() || !s.contains(v)) {
    throw Error(ErrorCode::kVertexNotInSet,
                "vertex " + std::to_string(v) + " is not in the set", {v});
  }
  VertexSet out(g.order());
  for (Vertex w : g.out_list(v)) {
    if (s.contains(w)) continue;
    VertexSet trace = TraceOn(g, w, s);
    if (trace.size() == 1) out.insert(w);
  }
  return out;
}

}  // namespace ldigraph
