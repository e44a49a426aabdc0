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

#ifndef LDIGRAPH_EXACT_H_
#define LDIGRAPH_EXACT_H_

#include <cstdint>
#include <vector>

#include "ldigraph/certify.h"
#include "ldigraph/digraph.h"

namespace ldigraph {

// The solvers work on 64-bit masks, so no limit above this is accepted.
inline constexpr int kMaxExactOrder = 64;
inline constexpr int kDefaultExactLimit = 24;

struct ExactOptions {
  int limit = kDefaultExactLimit;
};

struct ExactResult {
  int value = 0;
  // The first valid set in (cardinality, lexicographic) order.
  VertexSet witness;
  // Search nodes visited; diagnostics only.
  int64_t explored = 0;
};

// All three throw TooLarge(n, limit) when the order exceeds the limit.
ExactResult ExactGamma(const Digraph& g, const ExactOptions& options = {});
ExactResult ExactSep(const Digraph& g, const ExactOptions& options = {});
ExactResult ExactLd(const Digraph& g, const ExactOptions& options = {});
ExactResult ExactMinimum(const Digraph& g, Claim claim,
                         const ExactOptions& options = {});

// Disjoint classes of pairwise twins / quasi-twins, built greedily in vertex
// order: each unassigned vertex opens a class and absorbs every later
// unassigned vertex related to all current members. Singletons included.
std::vector<VertexSet> TwinClasses(const Digraph& g);

// Sum over TwinClasses of (size - 1); never exceeds LD(g) or SEP(g).
int TwinClassLowerBound(const Digraph& g);

}  // namespace ldigraph

#endif  // LDIGRAPH_EXACT_H_
