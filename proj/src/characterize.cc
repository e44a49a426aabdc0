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


#include "ldigraph/characterize.h"

#include <array>
#include <string>
#include <vector>

#include "ldigraph/error.h"

namespace ldigraph {

std::string_view ExtremalReasonName(ExtremalReason reason) {
  switch (reason) {
    case ExtremalReason::kNotExtremal:
      return "NotExtremal";
    case ExtremalReason::kUniversalOrSink:
      return "UniversalOrSink";
    case ExtremalReason::kOrderThree:
      return "OrderThree";
    case ExtremalReason::kDirectedStar:
      return "DirectedStar";
    case ExtremalReason::kS1CS2Partition:
      return "S1CS2Partition";
  }
  return "?";
}

ExtremalVerdict SepIsNMinus1(const Digraph& g) {
  const int n = g.order();
  ExtremalVerdict verdict;
  verdict.s1 = VertexSet(n);
  verdict.c = VertexSet(n);
  verdict.s2 = VertexSet(n);
  for (Vertex v = 0; v < n; ++v) {
    if (g.out_degree(v) == 0) {
      verdict.s2.insert(v);
    } else if (g.out_degree(v) == n - 1) {
      verdict.s1.insert(v);
    } else {
      verdict.counterexample = v;
      return verdict;
    }
  }
  verdict.holds = true;
  verdict.reason = ExtremalReason::kUniversalOrSink;
  return verdict;
}

Vertex DirectedStarCentre(const Digraph& g) {
  const int n = g.order();
  if (n < 2) return -1;
  for (Vertex v = 0; v < n; ++v) {
    if (g.in_degree(v) + g.out_degree(v) == 0) return -1;
  }
  for (Vertex x = 0; x < n; ++x) {
    bool in_every_arc = true;
    for (const Arc& a : g.arcs()) {
      if (a.tail != x && a.head != x) {
        in_every_arc = false;
        break;
      }
    }
    if (in_every_arc) return x;
  }
  return -1;
}

bool IsS1CS2Partition(const Digraph& g, const VertexSet& s1, const VertexSet& c,
                      const VertexSet& s2) {
  const int n = g.order();
  if ((s1 & c).size() + (s1 & s2).size() + (c & s2).size() != 0) return false;
  if ((s1 | c | s2).size() != n) return false;
  const VertexSet c_or_s2 = c | s2;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = 0; v < n; ++v) {
      if (u == v) continue;
      bool expected = (s1.contains(u) && c_or_s2.contains(v)) ||
                      (c.contains(u) && c_or_s2.contains(v));
      if (g.has_arc(u, v) != expected) return false;
    }
  }
  return true;
}

ExtremalVerdict LdIsNMinus1(const Digraph& g) {
  const int n = g.order();
  if (n < 2) {
    throw Error(ErrorCode::kTooSmall, "order must be at least 2", {n, 2});
  }
  if (!IsConnected(g)) {
    throw Error(ErrorCode::kNotConnected, "digraph is not connected");
  }
  ExtremalVerdict verdict;
  verdict.s1 = VertexSet(n);
  verdict.c = VertexSet(n);
  verdict.s2 = VertexSet(n);
  if (n == 3) {
    verdict.holds = true;
    verdict.reason = ExtremalReason::kOrderThree;
    return verdict;
  }
  if (Vertex x = DirectedStarCentre(g); x >= 0) {
    verdict.holds = true;
    verdict.reason = ExtremalReason::kDirectedStar;
    verdict.centre = x;
    return verdict;
  }

  // Sources can only sit in S1 and sinks in S2, up to a single vertex that
  // may equally be read as C; everything else must be in C.
  VertexSet sources(n), sinks(n), rest(n);
  for (Vertex v = 0; v < n; ++v) {
    if (g.in_degree(v) == 0) {
      sources.insert(v);
    } else if (g.out_degree(v) == 0) {
      sinks.insert(v);
    } else {
      rest.insert(v);
    }
  }
  std::vector<std::array<VertexSet, 3>> candidates = {{sources, rest, sinks}};
  for (Vertex v : sources) {
    VertexSet a = sources, c = rest;
    a.erase(v);
    c.insert(v);
    candidates.push_back({a, c, sinks});
  }
  for (Vertex v : sinks) {
    VertexSet b = sinks, c = rest;
    b.erase(v);
    c.insert(v);
    candidates.push_back({sources, c, b});
  }
  for (const auto& [a, c, b] : candidates) {
    if (IsS1CS2Partition(g, a, c, b)) {
      verdict.holds = true;
      verdict.reason = ExtremalReason::kS1CS2Partition;
      verdict.s1 = a;
      verdict.c = c;
      verdict.s2 = b;
      return verdict;
    }
  }
  return verdict;
}

}  // namespace ldigraph
