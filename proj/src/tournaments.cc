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

#include "ldigraph/tournaments.h"

#include <algorithm>
#include <optional>
#include <string>

#include "ldigraph/certify.h"
#include "ldigraph/error.h"

namespace ldigraph {
namespace {

[[noreturn]] void Invariant(const std::string& what) {
  throw Error(ErrorCode::kInternalInvariantViolation, what);
}

void RequireTournament(const Digraph& t) {
  for (Vertex u = 0; u < t.order(); ++u) {
    for (Vertex v = u + 1; v < t.order(); ++v) {
      if (t.has_arc(u, v) == t.has_arc(v, u)) {
        throw Error(ErrorCode::kNotTournament,
                    "pair " + std::to_string(u) + "," + std::to_string(v) +
                        " does not carry exactly one arc",
                    {u, v});
      }
    }
  }
}

using Vertices = std::vector<Vertex>;

int OutDegreeWithin(const Digraph& t, Vertex v, const Vertices& w) {
  int d = 0;
  for (Vertex u : w) d += t.has_arc(v, u);
  return d;
}

// Transitive order of the sub-tournament induced by `w`, or nullopt.
std::optional<Vertices> OrderWithin(const Digraph& t, const Vertices& w) {
  const int m = static_cast<int>(w.size());
  Vertices order(m, -1);
  for (Vertex v : w) {
    const int pos = m - 1 - OutDegreeWithin(t, v, w);
    if (order[pos] != -1) return std::nullopt;
    order[pos] = v;
  }
  return order;
}

Vertices Positions(const Vertices& order, int first) {
  Vertices out;
  for (size_t i = first; i < order.size(); i += 2) out.push_back(order[i]);
  return out;
}

std::vector<Vertices> Split(const Digraph& t, const Vertices& w,
                            const Vertices& pivot) {
  std::vector<Vertices> parts(size_t{1} << pivot.size());
  for (Vertex v : w) {
    if (std::find(pivot.begin(), pivot.end(), v) != pivot.end()) continue;
    size_t key = 0;
    for (size_t j = 0; j < pivot.size(); ++j) {
      if (t.has_arc(pivot[j], v)) key |= size_t{1} << j;
    }
    parts[key].push_back(v);
  }
  return parts;
}

std::optional<std::array<Vertex, 3>> TriangleWithin(const Digraph& t,
                                                    const Vertices& w) {
  const size_t m = w.size();
  for (size_t i = 0; i < m; ++i) {
    for (size_t j = i + 1; j < m; ++j) {
      for (size_t k = j + 1; k < m; ++k) {
        const Vertex a = w[i], b = w[j], c = w[k];
        if (t.has_arc(a, b) && t.has_arc(b, c) && t.has_arc(c, a)) {
          return std::array<Vertex, 3>{a, b, c};
        }
        if (t.has_arc(a, c) && t.has_arc(c, b) && t.has_arc(b, a)) {
          return std::array<Vertex, 3>{a, c, b};
        }
      }
    }
  }
  return std::nullopt;
}

int CountOdd(const std::vector<Vertices>& parts, size_t from) {
  int odd = 0;
  for (size_t i = from; i < parts.size(); ++i) odd += parts[i].size() % 2;
  return odd;
}

class Recursion {
 public:
  explicit Recursion(const Digraph& t) : t_(t) {}

  Vertices Locate(const Vertices& w, TournamentSplit* node) {
    const int m = static_cast<int>(w.size());
    Record(node, w, false);
    Vertices result;
    if (auto order = OrderWithin(t_, w)) {
      // {v2, v4, ...} for odd order, {v1, v3, ...} for even.
      result = Positions(*order, m % 2 == 1 ? 1 : 0);
      return Finish(node, "transitive", {}, {}, std::move(result));
    }
    for (Vertex x : w) {
      if (OutDegreeWithin(t_, x, w) % 2 == 1 ||
          (m - 1 - OutDegreeWithin(t_, x, w)) % 2 == 1) {
        return SplitLocate(w, {x}, node, "vertex");
      }
    }
    for (Vertex x : w) {
      for (Vertex y : w) {
        if (!t_.has_arc(x, y)) continue;
        if (CountOdd(Split(t_, w, {x, y}), 0) >= 3) {
          return SplitLocate(w, {x, y}, node, "arc");
        }
      }
    }
    auto tri = TriangleWithin(t_, w);
    if (!tri) Invariant("non-transitive tournament without a triangle");
    const Vertices pivot(tri->begin(), tri->end());
    if (CountOdd(Split(t_, w, pivot), 0) < 4) {
      Invariant("triangle split has fewer than four odd parts");
    }
    return SplitLocate(w, pivot, node, "triangle");
  }

  Vertices LocateDominate(const Vertices& w, TournamentSplit* node) {
    const int m = static_cast<int>(w.size());
    Record(node, w, true);
    if (auto order = OrderWithin(t_, w)) {
      return Finish(node, "transitive", {}, {}, Positions(*order, 0));
    }
    if (m % 2 == 1) {
      TournamentSplit* child = Child(node);
      Vertices result = Locate(w, child);
      VertexSet in_result(t_.order());
      for (Vertex v : result) in_result.insert(v);
      // A locating set leaves at most one vertex undominated.
      for (Vertex u : w) {
        if (in_result.contains(u) || t_.in(u).Intersects(in_result)) continue;
        Vertex dominator = u;
        for (Vertex v : w) {
          if (t_.has_arc(v, u)) {
            dominator = v;
            break;
          }
        }
        result.push_back(dominator);
        std::sort(result.begin(), result.end());
        return Finish(node, "dominator", {dominator}, {}, std::move(result));
      }
      return Finish(node, "dominator", {}, {}, std::move(result));
    }
    const int target = m / 2;
    for (Vertex x : w) {
      if ((m - 1 - OutDegreeWithin(t_, x, w)) % 2 == 0) {
        return SplitLocateDominate(w, {x}, node, "vertex");
      }
    }
    for (Vertex x : w) {
      for (Vertex y : w) {
        if (!t_.has_arc(x, y)) continue;
        if (SplitBound(Split(t_, w, {x, y}), 2) <= target) {
          return SplitLocateDominate(w, {x, y}, node, "arc");
        }
      }
    }
    auto tri = TriangleWithin(t_, w);
    if (!tri) Invariant("non-transitive tournament without a triangle");
    const Vertices pivot(tri->begin(), tri->end());
    if (SplitBound(Split(t_, w, pivot), 3) > target) {
      Invariant("triangle split exceeds n/2");
    }
    return SplitLocateDominate(w, pivot, node, "triangle");
  }

 private:
  // Size guaranteed by recursing: LD on part 0, locating elsewhere.
  static int SplitBound(const std::vector<Vertices>& parts, int pivot_size) {
    int total = pivot_size + static_cast<int>(parts[0].size() + 1) / 2;
    for (size_t i = 1; i < parts.size(); ++i) {
      total += static_cast<int>(parts[i].size()) / 2;
    }
    return total;
  }

  Vertices SplitLocate(const Vertices& w, const Vertices& pivot,
                       TournamentSplit* node, const char* kind) {
    std::vector<Vertices> parts = Split(t_, w, pivot);
    Vertices result = pivot;
    for (const Vertices& part : parts) {
      Vertices sub = Locate(part, Child(node));
      result.insert(result.end(), sub.begin(), sub.end());
    }
    std::sort(result.begin(), result.end());
    if (static_cast<int>(result.size()) > static_cast<int>(w.size()) / 2) {
      Invariant(std::string("locating split by ") + kind + " exceeds n/2");
    }
    return Finish(node, kind, pivot, std::move(parts), std::move(result));
  }

  Vertices SplitLocateDominate(const Vertices& w, const Vertices& pivot,
                               TournamentSplit* node, const char* kind) {
    std::vector<Vertices> parts = Split(t_, w, pivot);
    Vertices result = pivot;
    for (size_t i = 0; i < parts.size(); ++i) {
      Vertices sub = i == 0 ? LocateDominate(parts[i], Child(node))
                            : Locate(parts[i], Child(node));
      result.insert(result.end(), sub.begin(), sub.end());
    }
    std::sort(result.begin(), result.end());
    if (static_cast<int>(result.size()) > (static_cast<int>(w.size()) + 1) / 2) {
      Invariant(std::string("LD split by ") + kind + " exceeds ceil(n/2)");
    }
    return Finish(node, kind, pivot, std::move(parts), std::move(result));
  }

  void Record(TournamentSplit* node, const Vertices& w, bool dominating) {
    if (!node) return;
    node->vertices = w;
    node->dominating = dominating;
  }

  TournamentSplit* Child(TournamentSplit* node) {
    if (!node) return nullptr;
    node->children.push_back(std::make_unique<TournamentSplit>());
    return node->children.back().get();
  }

  Vertices Finish(TournamentSplit* node, const char* kind, Vertices pivot,
                  std::vector<Vertices> parts, Vertices result) {
    if (node) {
      node->kind = kind;
      node->pivot = std::move(pivot);
      node->parts = std::move(parts);
      node->result = result;
    }
    return result;
  }

  const Digraph& t_;
};

Vertices AllVertices(const Digraph& t) {
  Vertices w(t.order());
  for (Vertex v = 0; v < t.order(); ++v) w[v] = v;
  return w;
}

}  // namespace

std::vector<Vertex> TransitiveOrder(const Digraph& t) {
  RequireTournament(t);
  auto order = OrderWithin(t, AllVertices(t));
  if (!order) {
    throw Error(ErrorCode::kNotTransitive, "tournament contains a 3-cycle");
  }
  return *order;
}

VertexSet TransitiveLdSet(const Digraph& t) {
  return VertexSet::FromVector(t.order(), Positions(TransitiveOrder(t), 0));
}

VertexSet TransitiveLocatingSet(const Digraph& t) {
  const Vertices order = TransitiveOrder(t);
  return VertexSet::FromVector(t.order(),
                               Positions(order, t.order() % 2 == 1 ? 1 : 0));
}

std::array<Vertex, 3> FindDirectedTriangle(const Digraph& t) {
  RequireTournament(t);
  auto tri = TriangleWithin(t, AllVertices(t));
  if (!tri) throw Error(ErrorCode::kIsTransitive, "tournament is transitive");
  return *tri;
}

VertexSet TournamentLocatingSet(const Digraph& t, TournamentSplit* trace) {
  RequireTournament(t);
  Recursion rec(t);
  VertexSet result =
      VertexSet::FromVector(t.order(), rec.Locate(AllVertices(t), trace));
  if (!IsLocating(t, result).valid) Invariant("tournament locating set invalid");
  return result;
}

VertexSet TournamentLdSet(const Digraph& t, TournamentSplit* trace) {
  RequireTournament(t);
  Recursion rec(t);
  VertexSet result = VertexSet::FromVector(
      t.order(), rec.LocateDominate(AllVertices(t), trace));
  if (!IsLocatingDominating(t, result).valid) {
    Invariant("tournament LD set invalid");
  }
  return result;
}

}  // namespace ldigraph
