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


#include "ldigraph/acyclic.h"

#include <string>

#include "ldigraph/certify.h"
#include "ldigraph/error.h"

namespace ldigraph {
namespace {

[[noreturn]] void Invariant(const std::string& what) {
  throw Error(ErrorCode::kInternalInvariantViolation, what);
}

// Index pair of the first two members with equal traces on `l`, if any.
bool FindCollision(const std::vector<VertexSet>& members, const VertexSet& l,
                   int* first, int* second) {
  for (size_t i = 0; i < members.size(); ++i) {
    const VertexSet ti = members[i] & l;
    for (size_t j = i + 1; j < members.size(); ++j) {
      if ((members[j] & l) == ti) {
        *first = static_cast<int>(i);
        *second = static_cast<int>(j);
        return true;
      }
    }
  }
  return false;
}

bool AllDistinct(const std::vector<VertexSet>& members, const VertexSet& l) {
  int a, b;
  return !FindCollision(members, l, &a, &b);
}

}  // namespace

VertexSet BondyReduce(const SetFamily& family) {
  const auto& members = family.members;
  if (members.empty()) {
    throw Error(ErrorCode::kBadParams, "set family has no members");
  }
  int a, b;
  if (FindCollision(members, family.ground, &a, &b)) {
    throw Error(ErrorCode::kDuplicateMembers,
                "members " + std::to_string(a) + " and " + std::to_string(b) +
                    " coincide on the ground set",
                {a, b});
  }
  VertexSet l = family.ground;
  while (l.size() >= static_cast<int>(members.size())) {
    bool removed = false;
    for (Vertex x : l) {
      VertexSet candidate = l;
      candidate.erase(x);
      if (AllDistinct(members, candidate)) {
        l = std::move(candidate);
        removed = true;
        break;
      }
    }
    if (!removed) Invariant("no removable element although |L| >= |B|");
  }
  return l;
}

VertexSet BondyLocateDominate(const SetFamily& family) {
  for (size_t i = 0; i < family.members.size(); ++i) {
    if (!family.members[i].Intersects(family.ground)) {
      throw Error(ErrorCode::kEmptyMember,
                  "member " + std::to_string(i) + " is empty on the ground set",
                  {static_cast<long long>(i)});
    }
  }
  SetFamily extended = family;
  extended.members.push_back(VertexSet(family.ground.universe()));
  return BondyReduce(extended);
}

LevelDecomposition ComputeLevels(const Digraph& g) {
  const int n = g.order();
  if (n == 0) throw Error(ErrorCode::kNoVertices, "digraph has no vertices");
  if (!IsAcyclic(g)) throw Error(ErrorCode::kNotAcyclic, "digraph has a cycle");
  const std::vector<Vertex> sources = Sources(g);
  if (sources.size() != 1) {
    throw Error(ErrorCode::kMultipleSources,
                std::to_string(sources.size()) + " sources",
                std::vector<long long>(sources.begin(), sources.end()));
  }

  LevelDecomposition d;
  d.level_of.assign(n, -1);
  VertexSet left = g.vertices();
  while (!left.empty()) {
    VertexSet level(n);
    for (Vertex v : left) {
      if (!g.in(v).Intersects(left)) level.insert(v);
    }
    if (level.empty()) Invariant("acyclic remainder without a source");
    for (Vertex v : level) d.level_of[v] = static_cast<int>(d.levels.size());
    left -= level;
    d.levels.push_back(std::move(level));
  }

  for (Vertex v = 0; v < n; ++v) {
    const int i = d.level_of[v];
    for (Vertex u : g.in(v)) {
      if (d.level_of[u] >= i) Invariant("arc into an equal or earlier level");
    }
    if (i > 0 && !g.in(v).Intersects(d.levels[i - 1])) {
      Invariant("vertex without an in-neighbour one level up");
    }
  }
  return d;
}

VertexSet AcyclicLdSet(const Digraph& g, AcyclicTrace* trace) {
  const int n = g.order();
  if (!IsAcyclic(g)) throw Error(ErrorCode::kNotAcyclic, "digraph has a cycle");
  const auto twins = TwinPairs(g);
  if (!twins.empty()) {
    throw Error(ErrorCode::kNotTwinFree,
                "vertices " + std::to_string(twins[0].first) + " and " +
                    std::to_string(twins[0].second) + " are twins",
                {twins[0].first, twins[0].second});
  }
  LevelDecomposition d = ComputeLevels(g);
  const int m = static_cast<int>(d.levels.size()) - 1;

  std::vector<VertexSet> below(m + 1, VertexSet(n));  // union of L_0..L_{i-1}
  for (int i = 1; i <= m; ++i) below[i] = below[i - 1] | d.levels[i - 1];

  VertexSet result(n);
  for (int i = m; i >= 1; --i) {
    AcyclicLevelStep step;
    step.level = i;
    step.remaining = d.levels[i] - result;
    const VertexSet& prev = d.levels[i - 1];

    std::vector<VertexSet> part_traces;
    for (Vertex v : step.remaining) {
      const VertexSet t = g.in(v) & prev;
      size_t k = 0;
      while (k < part_traces.size() && part_traces[k] != t) ++k;
      if (k == part_traces.size()) {
        part_traces.push_back(t);
        step.parts.emplace_back(n);
      }
      step.parts[k].insert(v);
    }

    step.locate_dominate = VertexSet(n);
    if (!part_traces.empty()) {
      step.locate_dominate = BondyLocateDominate({prev, part_traces});
    }
    step.added = step.locate_dominate;
    for (const VertexSet& part : step.parts) {
      if (part.size() < 2) continue;
      // Members share their trace on the previous level, so twin-freeness
      // must separate them further down.
      const VertexSet& lower = below[i - 1];
      std::vector<VertexSet> members;
      for (Vertex v : part) members.push_back(g.in(v) & lower);
      if (!AllDistinct(members, lower)) {
        Invariant("part members not separated below the previous level");
      }
      VertexSet sj = BondyReduce({lower, members});
      step.added |= sj;
      step.part_locators.push_back(std::move(sj));
    }
    if (step.added.size() > step.remaining.size()) {
      Invariant("level " + std::to_string(i) + " adds more vertices than it has");
    }
    result |= step.added;
    if (trace) trace->steps.push_back(std::move(step));
  }
  result |= d.levels[0];

  if (result.size() > (n + 1) / 2) Invariant("acyclic LD set exceeds ceil(n/2)");
  if (!IsLocatingDominating(g, result).valid) Invariant("acyclic LD set invalid");
  if (trace) trace->levels = std::move(d);
  return result;
}

}  // namespace ldigraph
