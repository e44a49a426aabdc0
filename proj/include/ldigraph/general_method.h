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

// Locating-dominating sets of twin-free digraphs grown from dominating sets
// whose S-partition has many parts, and the pipelines that feed them.

#ifndef LDIGRAPH_GENERAL_METHOD_H_
#define LDIGRAPH_GENERAL_METHOD_H_

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "ldigraph/digraph.h"
#include "ldigraph/exact.h"
#include "ldigraph/vertex_set.h"

namespace ldigraph {

// Positive rational num/den with 0 < num/den <= 1.
struct Ratio {
  int64_t num = 1;
  int64_t den = 2;

  // Throws BadParams outside (0, 1].
  static Ratio Make(int64_t num, int64_t den);
  std::string ToString() const;
};

// Size bound carried by every construction: the set returned has at most
// `value` vertices, `value` already floored.
struct SizeBound {
  std::string name;
  int64_t value = 0;
};

struct GeneralMethodTrace {
  VertexSet initial_s;
  VertexSet final_s;
  Ratio x;
  int singleton_parts = 0;  // n1
  int larger_parts = 0;     // n2
  VertexSet d1;
  VertexSet d1_prime;
  VertexSet d2;
  // Quasi-twin pairs outside D1 (inner, outer); pairwise disjoint.
  std::vector<std::pair<Vertex, Vertex>> quasi_twin_pairs;
  std::string chosen;  // "D1", "D1'" or "D2"
  bool quasi_twin_free = false;
  SizeBound bound;
};

// True when S has at least x*|S| parts.
bool HasEnoughParts(const Digraph& g, const VertexSet& s, Ratio x);

// Repeatedly adds the least vertex whose addition keeps the part-count
// property. Throws PropertyViolatedAtInput when S does not have it.
VertexSet GrowToMaximal(const Digraph& g, const VertexSet& s, Ratio x);

// floor((2x+1)/(3x+1) n) in general; floor((x+1)/(2x+1) n) when the digraph
// is quasi-twin-free.
SizeBound GeneralMethodBound(int n, Ratio x, bool quasi_twin_free);

// Requires a twin-free digraph and a dominating S with at least x|S| parts.
// Throws NotTwinFree (data: the pair), NotDominating (data: the vertex) or
// PropertyViolatedAtInput.
std::pair<VertexSet, GeneralMethodTrace> LdFromDominating(const Digraph& g,
                                                          const VertexSet& s,
                                                          Ratio x);

struct HalfPartsTrace {
  VertexSet minimum;     // the exact minimum dominating set
  bool exchanged = false;
  int evaluations = 0;   // part-count evaluations, at most 2
  VertexSet s1, s2, s3;  // split of `minimum` when an exchange happened
};

// A minimum dominating set S with at least |S|/2 parts. Requires a
// source-free digraph within the exact limit. Throws HasSource, TooLarge,
// InternalInvariantViolation.
VertexSet HalfPartsDominatingSet(const Digraph& g,
                                 const ExactOptions& options = {},
                                 HalfPartsTrace* trace = nullptr);

struct PipelineTrace {
  HalfPartsTrace half_parts;
  GeneralMethodTrace general;
  // Only for digraphs with a source.
  Vertex source = -1;
  VertexSet patch;  // the set X whose vertices received arcs into the source
  // Set when every candidate X was excluded (only at order 3) and the exact
  // optimum was returned instead; `patch` is then empty.
  bool exact_fallback = false;
  SizeBound bound;
};

// Size at most floor(4n/5), or floor(3n/4) when quasi-twin-free.
// Throws HasSource, NotTwinFree, TooLarge.
VertexSet LdSourceFreeTwinFree(const Digraph& g,
                               const ExactOptions& options = {},
                               PipelineTrace* trace = nullptr);

// Size at most floor(4n/5)+1, or floor(3n/4)+1 when quasi-twin-free.
// Throws NotTwinFree, TooSmall (n < 3), TooLarge.
VertexSet LdTwinFree(const Digraph& g, const ExactOptions& options = {},
                     PipelineTrace* trace = nullptr);

}  // namespace ldigraph

#endif  // LDIGRAPH_GENERAL_METHOD_H_
