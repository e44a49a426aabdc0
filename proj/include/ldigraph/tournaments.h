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

#ifndef LDIGRAPH_TOURNAMENTS_H_
#define LDIGRAPH_TOURNAMENTS_H_

#include <array>
#include <memory>
#include <string>
#include <vector>

#include "ldigraph/digraph.h"
#include "ldigraph/vertex_set.h"

namespace ldigraph {

// Vertices sorted so that every arc goes forward. Throws NotTournament or
// NotTransitive.
std::vector<Vertex> TransitiveOrder(const Digraph& t);

// {v1, v3, v5, ...} in the transitive order: ceil(n/2) vertices.
VertexSet TransitiveLdSet(const Digraph& t);
// {v2, v4, ...} for odd n; the LD set above for even n. floor(n/2) vertices.
VertexSet TransitiveLocatingSet(const Digraph& t);

// Least directed triangle: x is the smallest of the three, and x->y->z->x.
// Throws NotTournament or IsTransitive.
std::array<Vertex, 3> FindDirectedTriangle(const Digraph& t);

// One step of the recursive split: the pivot (1, 2 or 3 vertices) and the
// parts of the remaining vertices keyed by their in-neighbours among the
// pivot. Part i collects the vertices whose in-neighbours among the pivot are
// {pivot[j] : bit j of i is set}, so part 0 holds the vertices that no pivot
// vertex dominates.
struct TournamentSplit {
  std::string kind;  // "transitive", "dominator", "vertex", "arc", "triangle"
  std::vector<Vertex> vertices;
  std::vector<Vertex> pivot;
  std::vector<std::vector<Vertex>> parts;
  std::vector<std::unique_ptr<TournamentSplit>> children;
  std::vector<Vertex> result;
  bool dominating = false;
};

// Locating set of size <= floor(n/2). Throws NotTournament,
// InternalInvariantViolation.
VertexSet TournamentLocatingSet(const Digraph& t,
                                TournamentSplit* trace = nullptr);
// Locating-dominating set of size <= ceil(n/2).
VertexSet TournamentLdSet(const Digraph& t, TournamentSplit* trace = nullptr);

}  // namespace ldigraph

#endif  // LDIGRAPH_TOURNAMENTS_H_
