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


// Bondy's distinguishing-subset theorem as a constructive routine, and the
// level-by-level construction of small locating-dominating sets in twin-free
// acyclic digraphs.

#ifndef LDIGRAPH_ACYCLIC_H_
#define LDIGRAPH_ACYCLIC_H_

#include <vector>

#include "ldigraph/digraph.h"
#include "ldigraph/vertex_set.h"

namespace ldigraph {

// Members are read as subsets of `ground` (anything outside is ignored).
struct SetFamily {
  VertexSet ground;
  std::vector<VertexSet> members;
};

// L within the ground, |L| <= |members| - 1, on which the members stay
// pairwise distinct. Elements are dropped least-first while |L| >= |members|.
// Throws DuplicateMembers (data: the two indices) or BadParams (no members).
VertexSet BondyReduce(const SetFamily& family);

// L with |L| <= |members| on which the members are distinct and nonempty.
// Throws EmptyMember (data: index), DuplicateMembers.
VertexSet BondyLocateDominate(const SetFamily& family);

struct LevelDecomposition {
  std::vector<VertexSet> levels;
  std::vector<int> level_of;
};

// Throws NoVertices, NotAcyclic, MultipleSources (data: the sources).
LevelDecomposition ComputeLevels(const Digraph& g);

struct AcyclicLevelStep {
  int level = 0;
  VertexSet remaining;  // L'_i: level vertices not already in the set
  std::vector<VertexSet> parts;
  VertexSet locate_dominate;  // S, inside the previous level
  std::vector<VertexSet> part_locators;  // S_j for parts of size >= 2
  VertexSet added;                       // D_i
};

struct AcyclicTrace {
  LevelDecomposition levels;
  std::vector<AcyclicLevelStep> steps;  // deepest level first
};

// Locating-dominating set of size <= ceil(n/2). Throws NotAcyclic,
// NotTwinFree (data: the pair), InternalInvariantViolation.
VertexSet AcyclicLdSet(const Digraph& g, AcyclicTrace* trace = nullptr);

}  // namespace ldigraph

#endif  // LDIGRAPH_ACYCLIC_H_
