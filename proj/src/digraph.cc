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

#include "ldigraph/digraph.h"

#include <algorithm>
#include <queue>
#include <string>

#include "ldigraph/error.h"

namespace ldigraph {

Digraph Digraph::Build(int n, std::span<const Arc> arcs) {
  if (n < 0) {
    throw Error(ErrorCode::kVertexOutOfRange, "negative vertex count", {n});
  }
  Digraph g;
  g.n_ = n;
  g.in_.assign(n, VertexSet(n));
  g.out_.assign(n, VertexSet(n));
  for (const Arc& a : arcs) {
    for (Vertex v : {a.tail, a.head}) {
      if (v < 0 || v >= n) {
        throw Error(ErrorCode::kVertexOutOfRange,
                    "vertex " + std::to_string(v) + " not in 0.." +
                        std::to_string(n - 1),
                    {v});
      }
    }
    if (a.tail == a.head) {
      throw Error(ErrorCode::kLoopArc,
                  "loop at vertex " + std::to_string(a.tail), {a.tail});
    }
    if (g.out_[a.tail].contains(a.head)) {
      throw Error(ErrorCode::kDuplicateArc,
                  "arc " + std::to_string(a.tail) + "->" +
                      std::to_string(a.head) + " given twice",
                  {a.tail, a.head});
    }
    g.out_[a.tail].insert(a.head);
    g.in_[a.head].insert(a.tail);
    ++g.arc_count_;
  }
  g.in_list_.resize(n);
  g.out_list_.resize(n);
  for (Vertex v = 0; v < n; ++v) {
    g.in_list_[v] = g.in_[v].ToVector();
    g.out_list_[v] = g.out_[v].ToVector();
  }
  return g;
}

std::vector<Arc> Digraph::arcs() const {
  std::vector<Arc> out;
  out.reserve(arc_count_);
  for (Vertex u = 0; u < n_; ++u) {
    for (Vertex v : out_list_[u]) out.push_back({u, v});
  }
  return out;
}

Digraph Digraph::WithArcs(std::span<const Arc> extra) const {
  std::vector<Arc> all = arcs();
  all.insert(all.end(), extra.begin(), extra.end());
  return Build(n_, all);
}

const char* PairKindName(PairKind kind) {
  switch (kind) {
    case PairKind::kNone: return "none";
    case PairKind::kOpenTwin: return "open_twin";
    case PairKind::kClosedTwin: return "closed_twin";
    case PairKind::kQuasiTwin: return "quasi_twin";
  }
  return "none";
}

PairRelation GetPairRelation(const Digraph& g, Vertex u, Vertex v) {
  if (u == v) {
    throw Error(ErrorCode::kSameVertex,
                "pair relation needs two distinct vertices", {u});
  }
  const VertexSet& in_u = g.in(u);
  const VertexSet& in_v = g.in(v);
  if (in_u == in_v) return {PairKind::kOpenTwin, -1, -1};
  if (g.closed_in(u) == g.closed_in(v)) return {PairKind::kClosedTwin, -1, -1};
  // N-(u) = N-(v) + {v}: v is the inner vertex.
  if (in_u.contains(v) && !in_v.contains(u)) {
    VertexSet t = in_v;
    t.insert(v);
    if (t == in_u) return {PairKind::kQuasiTwin, v, u};
  }
  if (in_v.contains(u) && !in_u.contains(v)) {
    VertexSet t = in_u;
    t.insert(u);
    if (t == in_v) return {PairKind::kQuasiTwin, u, v};
  }
  return {};
}

std::vector<Vertex> Sources(const Digraph& g) {
  std::vector<Vertex> out;
  for (Vertex v = 0; v < g.order(); ++v) {
    if (g.in_degree(v) == 0) out.push_back(v);
  }
  return out;
}

std::vector<Vertex> Sinks(const Digraph& g) {
  std::vector<Vertex> out;
  for (Vertex v = 0; v < g.order(); ++v) {
    if (g.out_degree(v) == 0) out.push_back(v);
  }
  return out;
}

std::vector<Vertex> TopologicalOrder(const Digraph& g, bool* ok) {
  const int n = g.order();
  std::vector<int> indegree(n);
  std::priority_queue<Vertex, std::vector<Vertex>, std::greater<>> ready;
  for (Vertex v = 0; v < n; ++v) {
    indegree[v] = g.in_degree(v);
    if (indegree[v] == 0) ready.push(v);
  }
  std::vector<Vertex> order;
  order.reserve(n);
  while (!ready.empty()) {
    Vertex v = ready.top();
    ready.pop();
    order.push_back(v);
    for (Vertex w : g.out_list(v)) {
      if (--indegree[w] == 0) ready.push(w);
    }
  }
  *ok = static_cast<int>(order.size()) == n;
  if (!*ok) order.clear();
  return order;
}

bool IsAcyclic(const Digraph& g) {
  bool ok = false;
  TopologicalOrder(g, &ok);
  return ok;
}

bool IsTournament(const Digraph& g) {
  const int n = g.order();
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      if (g.has_arc(u, v) == g.has_arc(v, u)) return false;
    }
  }
  return true;
}

namespace {

VertexSet Reach(const Digraph& g, Vertex root, bool forward, bool undirected) {
  VertexSet seen(g.order());
  std::vector<Vertex> stack = {root};
  seen.insert(root);
  while (!stack.empty()) {
    Vertex v = stack.back();
    stack.pop_back();
    auto visit = [&](const std::vector<Vertex>& nbrs) {
      for (Vertex w : nbrs) {
        if (!seen.contains(w)) {
          seen.insert(w);
          stack.push_back(w);
        }
      }
    };
    if (forward || undirected) visit(g.out_list(v));
    if (!forward || undirected) visit(g.in_list(v));
  }
  return seen;
}

}  // namespace

bool IsStronglyConnected(const Digraph& g) {
  if (g.order() == 0) return true;
  return Reach(g, 0, true, false).size() == g.order() &&
         Reach(g, 0, false, false).size() == g.order();
}

bool IsConnected(const Digraph& g) {
  if (g.order() == 0) return true;
  return Reach(g, 0, true, true).size() == g.order();
}

std::vector<std::pair<Vertex, Vertex>> TwinPairs(const Digraph& g) {
  std::vector<std::pair<Vertex, Vertex>> out;
  for (Vertex u = 0; u < g.order(); ++u) {
    for (Vertex v = u + 1; v < g.order(); ++v) {
      if (GetPairRelation(g, u, v).IsTwin()) out.emplace_back(u, v);
    }
  }
  return out;
}

std::vector<std::pair<Vertex, Vertex>> QuasiTwinPairs(const Digraph& g) {
  std::vector<std::pair<Vertex, Vertex>> out;
  for (Vertex u = 0; u < g.order(); ++u) {
    for (Vertex v = u + 1; v < g.order(); ++v) {
      if (GetPairRelation(g, u, v).kind == PairKind::kQuasiTwin) {
        out.emplace_back(u, v);
      }
    }
  }
  return out;
}

bool IsTwinFree(const Digraph& g) {
  for (Vertex u = 0; u < g.order(); ++u) {
    for (Vertex v = u + 1; v < g.order(); ++v) {
      if (GetPairRelation(g, u, v).IsTwin()) return false;
    }
  }
  return true;
}

bool IsQuasiTwinFree(const Digraph& g) {
  for (Vertex u = 0; u < g.order(); ++u) {
    for (Vertex v = u + 1; v < g.order(); ++v) {
      if (GetPairRelation(g, u, v).kind == PairKind::kQuasiTwin) return false;
    }
  }
  return true;
}

StructuralProfile GetStructuralProfile(const Digraph& g) {
  StructuralProfile p;
  p.sources = Sources(g);
  p.sinks = Sinks(g);
  p.is_source_free = p.sources.empty();
  p.is_twin_free = true;
  p.is_quasi_twin_free = true;
  for (Vertex u = 0; u < g.order(); ++u) {
    for (Vertex v = u + 1; v < g.order(); ++v) {
      PairRelation r = GetPairRelation(g, u, v);
      if (r.IsTwin()) p.is_twin_free = false;
      if (r.kind == PairKind::kQuasiTwin) p.is_quasi_twin_free = false;
    }
  }
  p.is_acyclic = IsAcyclic(g);
  p.is_tournament = IsTournament(g);
  p.is_transitive_tournament = p.is_tournament && p.is_acyclic;
  p.is_strongly_connected = IsStronglyConnected(g);
  p.is_connected = IsConnected(g);
  return p;
}

}  // namespace ldigraph
