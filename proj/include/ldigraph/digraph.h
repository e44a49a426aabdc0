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

#ifndef LDIGRAPH_DIGRAPH_H_
#define LDIGRAPH_DIGRAPH_H_

#include <compare>
#include <initializer_list>
#include <span>
#include <utility>
#include <vector>

#include "ldigraph/vertex_set.h"

namespace ldigraph {

struct Arc {
  Vertex tail;
  Vertex head;
  auto operator<=>(const Arc&) const = default;
};

// Loopless simple digraph on vertices 0..n-1. Immutable once built; both
// neighbourhood directions are stored as bit sets and as sorted lists.
class Digraph {
 public:
  Digraph() = default;

  // Throws LoopArc, DuplicateArc or VertexOutOfRange naming the offending
  // datum. Arc order does not matter.
  static Digraph Build(int n, std::span<const Arc> arcs);
  static Digraph Build(int n, std::initializer_list<Arc> arcs) {
    return Build(n, std::span<const Arc>(arcs.begin(), arcs.size()));
  }

  int order() const { return n_; }
  int arc_count() const { return arc_count_; }

  const VertexSet& in(Vertex v) const { return in_[v]; }
  const VertexSet& out(Vertex v) const { return out_[v]; }
  VertexSet closed_in(Vertex v) const {
    VertexSet s = in_[v];
    s.insert(v);
    return s;
  }
  const std::vector<Vertex>& in_list(Vertex v) const { return in_list_[v]; }
  const std::vector<Vertex>& out_list(Vertex v) const { return out_list_[v]; }
  int in_degree(Vertex v) const { return static_cast<int>(in_list_[v].size()); }
  int out_degree(Vertex v) const {
    return static_cast<int>(out_list_[v].size());
  }
  bool has_arc(Vertex u, Vertex v) const { return out_[u].contains(v); }

  // Sorted by (tail, head).
  std::vector<Arc> arcs() const;
  VertexSet vertices() const { return VertexSet::Full(n_); }
  VertexSet EmptySet() const { return VertexSet(n_); }

  // Copy of this digraph with `extra` arcs added. Same errors as Build.
  Digraph WithArcs(std::span<const Arc> extra) const;

  bool operator==(const Digraph& o) const {
    return n_ == o.n_ && out_ == o.out_;
  }

 private:
  int n_ = 0;
  int arc_count_ = 0;
  std::vector<VertexSet> in_;
  std::vector<VertexSet> out_;
  std::vector<std::vector<Vertex>> in_list_;
  std::vector<std::vector<Vertex>> out_list_;
};

enum class PairKind { kNone, kOpenTwin, kClosedTwin, kQuasiTwin };

struct PairRelation {
  PairKind kind = PairKind::kNone;
  // For kQuasiTwin: `inner` is the vertex y with N-(x) = N-(y) + {y}, i.e. the
  // one that is an in-neighbour of the other (`outer` = x). Unset otherwise.
  Vertex inner = -1;
  Vertex outer = -1;

  bool IsTwin() const {
    return kind == PairKind::kOpenTwin || kind == PairKind::kClosedTwin;
  }
  bool operator==(const PairRelation&) const = default;
};

const char* PairKindName(PairKind kind);

// Throws SameVertex when u == v.
PairRelation GetPairRelation(const Digraph& g, Vertex u, Vertex v);

struct StructuralProfile {
  std::vector<Vertex> sources;
  std::vector<Vertex> sinks;
  bool is_source_free = false;
  bool is_twin_free = false;
  bool is_quasi_twin_free = false;
  bool is_acyclic = false;
  bool is_tournament = false;
  bool is_transitive_tournament = false;
  bool is_strongly_connected = false;
  bool is_connected = false;
};

StructuralProfile GetStructuralProfile(const Digraph& g);

// Individual predicates, usable without computing the whole profile.
std::vector<Vertex> Sources(const Digraph& g);
std::vector<Vertex> Sinks(const Digraph& g);
bool IsAcyclic(const Digraph& g);
bool IsTournament(const Digraph& g);
bool IsStronglyConnected(const Digraph& g);
bool IsConnected(const Digraph& g);

// All unordered pairs (u < v) in the given relation class, lexicographic.
std::vector<std::pair<Vertex, Vertex>> TwinPairs(const Digraph& g);
std::vector<std::pair<Vertex, Vertex>> QuasiTwinPairs(const Digraph& g);
bool IsTwinFree(const Digraph& g);
bool IsQuasiTwinFree(const Digraph& g);

// Topological order (Kahn, least available vertex first), or empty with
// `ok=false` when a cycle exists.
std::vector<Vertex> TopologicalOrder(const Digraph& g, bool* ok);

}  // namespace ldigraph

#endif  // LDIGRAPH_DIGRAPH_H_
