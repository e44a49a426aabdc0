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

#ifndef LDIGRAPH_CERTIFY_H_
#define LDIGRAPH_CERTIFY_H_

#include <optional>
#include <string_view>
#include <utility>
#include <vector>

#include "ldigraph/digraph.h"
#include "ldigraph/vertex_set.h"

namespace ldigraph {

enum class Claim { kDominating, kLocating, kLocatingDominating };

// "dominating", "locating", "ld".
std::string_view ClaimName(Claim claim);
std::optional<Claim> ParseClaim(std::string_view text);

// Why a certificate failed: either a vertex outside the set with no
// in-neighbour in it, or two outside vertices with the same trace.
struct Witness {
  enum class Kind { kUndominated, kUnlocated };
  Kind kind;
  Vertex first;
  Vertex second = -1;  // only for kUnlocated; first < second

  bool operator==(const Witness&) const = default;
};

struct Certificate {
  VertexSet set;
  Claim claim;
  bool valid = false;
  std::optional<Witness> witness;  // present iff !valid
};

// Witnesses are canonical: the least undominated vertex, and the
// lexicographically least unlocated pair. For the locating-dominating claim a
// domination failure is reported before a location failure.
Certificate IsDominating(const Digraph& g, const VertexSet& s);
Certificate IsLocating(const Digraph& g, const VertexSet& s);
Certificate IsLocatingDominating(const Digraph& g, const VertexSet& s);
Certificate Certify(const Digraph& g, const VertexSet& s, Claim claim);

// Trace of v on s: N-(v) & s.
inline VertexSet TraceOn(const Digraph& g, Vertex v, const VertexSet& s) {
  return g.in(v) & s;
}

struct SPartitionPart {
  VertexSet trace;
  VertexSet members;
};

// Partition of V \ S by trace on S. Parts are ordered by their least member.
struct SPartition {
  VertexSet base;
  std::vector<SPartitionPart> parts;
  int singletons = 0;  // n1: parts of size 1
  int larger = 0;      // n2: parts of size >= 2

  int count() const { return static_cast<int>(parts.size()); }
};

SPartition ComputeSPartition(const Digraph& g, const VertexSet& s);

// Number of parts only; cheaper than building the partition.
int CountSPartitionParts(const Digraph& g, const VertexSet& s);

// { w not in S : N-(w) & S == {v} }. Throws VertexNotInS if v is not in s.
VertexSet ExternalPrivateNeighbours(const Digraph& g, const VertexSet& s,
                                    Vertex v);

}  // namespace ldigraph

#endif  // LDIGRAPH_CERTIFY_H_
