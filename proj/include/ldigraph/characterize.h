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


// Polynomial checks for the digraphs whose location numbers reach n - 1.

#ifndef LDIGRAPH_CHARACTERIZE_H_
#define LDIGRAPH_CHARACTERIZE_H_

#include <string_view>

#include "ldigraph/digraph.h"
#include "ldigraph/vertex_set.h"

namespace ldigraph {

enum class ExtremalReason {
  kNotExtremal,
  // Locating sets: every vertex is universal or a sink.
  kUniversalOrSink,
  // Locating-dominating sets.
  kOrderThree,
  kDirectedStar,
  kS1CS2Partition,
};

std::string_view ExtremalReasonName(ExtremalReason reason);

struct ExtremalVerdict {
  bool holds = false;
  ExtremalReason reason = ExtremalReason::kNotExtremal;
  // kUniversalOrSink: the two classes (s1 = universal, s2 = sinks).
  // kS1CS2Partition: the partition. kDirectedStar: centre.
  VertexSet s1, c, s2;
  Vertex centre = -1;
  // A vertex that is neither universal nor a sink, when the locating check
  // fails.
  Vertex counterexample = -1;
};

// SEP(G) = n - 1 exactly when every vertex is universal or a sink.
ExtremalVerdict SepIsNMinus1(const Digraph& g);

// LD(G) = n - 1 for a connected digraph of order >= 2 exactly when n = 3,
// G is a directed star, or V splits into S1, C, S2 as in the extremal
// family. Throws TooSmall, NotConnected.
ExtremalVerdict LdIsNMinus1(const Digraph& g);

// Checks the arc constraints of an S1/C/S2 split: S1 and S2 independent, C a
// bidirected clique, all arcs S1 -> C+S2 and C -> S2 present, nothing else.
bool IsS1CS2Partition(const Digraph& g, const VertexSet& s1, const VertexSet& c,
                      const VertexSet& s2);

// Centre of a directed star, or -1.
Vertex DirectedStarCentre(const Digraph& g);

}  // namespace ldigraph

#endif  // LDIGRAPH_CHARACTERIZE_H_
