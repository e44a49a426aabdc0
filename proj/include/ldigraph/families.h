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


// Named extremal digraph families, seeded random models and exhaustive
// enumeration of small labelled digraphs.

#ifndef LDIGRAPH_FAMILIES_H_
#define LDIGRAPH_FAMILIES_H_

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "ldigraph/digraph.h"

namespace ldigraph {

enum class Family {
  kGk,                  // gk:k=        k triangles plus a source-side and a sink-side hub
  kTk,                  // tk:k=        tournament of k stacked triangles
  kTransitiveTournament,  // tt:n=
  kDirectedPath,        // path:n=
  kDirectedCycle,       // cycle:n=
  kDirectedStar,        // star:n=,pattern=
  kLayered,             // layered:s1=,c=,s2=
  kBidirectedComplete,  // kn:n=
  kBidirectedStar,      // bstar:n=
  kDisjointTriangles,   // triangles:k=
  kRandomDigraph,       // rand-digraph:n=,p=,seed=
  kRandomTournament,    // rand-tournament:n=,seed=
  kRandomDag,           // rand-dag:n=,p=,seed=
  kRandomSourceFree,    // rand-sf:n=,p=,seed=
  kRandomSourceFreeTwinFree,    // rand-sftf:n=,p=,seed=
  kRandomTwinFreeDag,           // rand-tfdag:n=,p=,seed=
  kRandomSingleSourceTwinFree,  // rand-1stf:n=,p=,seed=
};

struct FamilySpec {
  Family family = Family::kDirectedPath;
  int k = 0;
  int n = 0;
  // Arc probability p_num/p_den for the random models.
  int64_t p_num = 1;
  int64_t p_den = 2;
  // Directed star leaves, one character per leaf (or one for all leaves):
  // 'o' arc from the centre, 'i' arc into the centre, 'b' both.
  std::string pattern = "o";
  int s1 = 0, c = 0, s2 = 0;
  uint64_t seed = 0;

  bool operator==(const FamilySpec&) const = default;
};

bool IsRandomFamily(Family family);

// Parses the textual form, e.g. "gk:k=3" or "rand-tournament:n=50,seed=9".
// Throws BadSpec.
FamilySpec ParseFamilySpec(std::string_view text);
// Canonical textual form; ParseFamilySpec(FormatFamilySpec(s)) == s.
std::string FormatFamilySpec(const FamilySpec& spec);

// Builds the instance and checks the family's defining predicate.
// Throws BadParams, PredicateFailed, RetryLimitExceeded.
//
// Labelling: G_k and the triangle families put triangle b on 3b, 3b+1, 3b+2
// with 3b -> 3b+1 -> 3b+2 -> 3b; G_k adds s = 3k (receiving arcs from every
// triangle vertex) and t = 3k+1 (sending arcs to every triangle vertex) with
// s -> t. T_k sends all arcs from a lower block to a higher one. Transitive
// tournaments and paths send arcs from lower to higher labels. Stars have
// centre 0. Layered digraphs place S1 first, then C, then S2.
Digraph Generate(const FamilySpec& spec);

// Same as Generate, restricted to the seeded random models.
Digraph Random(const FamilySpec& spec);

inline constexpr int kMaxEnumerationOrder = 5;
inline constexpr int kRandomRetryLimit = 200;

// Every labelled loopless digraph of order n, in increasing arc-set mask
// order, where bit i stands for the i-th ordered pair (u, v), u != v, in
// lexicographic order.
class DigraphEnumerator {
 public:
  // Throws TooLarge for n > kMaxEnumerationOrder.
  explicit DigraphEnumerator(int n);

  uint64_t count() const { return count_; }
  // Writes the next digraph and returns true, or returns false when done.
  bool Next(Digraph* out);
  // The digraph with the given mask, independent of iteration state.
  Digraph At(uint64_t mask) const;

 private:
  int n_;
  uint64_t count_;
  uint64_t next_ = 0;
  std::vector<Arc> pairs_;
};

}  // namespace ldigraph

#endif  // LDIGRAPH_FAMILIES_H_
