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

#include "ldigraph/exact.h"

#include <algorithm>
#include <bit>
#include <string>

#include "ldigraph/error.h"

namespace ldigraph {

std::vector<VertexSet> TwinClasses(const Digraph& g) {
  const int n = g.order();
  std::vector<VertexSet> classes;
  std::vector<bool> assigned(n, false);
  for (Vertex v = 0; v < n; ++v) {
    if (assigned[v]) continue;
    VertexSet cls(n);
    cls.insert(v);
    assigned[v] = true;
    for (Vertex u = v + 1; u < n; ++u) {
      if (assigned[u]) continue;
      bool related_to_all = true;
      for (Vertex w : cls) {
        if (GetPairRelation(g, w, u).kind == PairKind::kNone) {
          related_to_all = false;
          break;
        }
      }
      if (related_to_all) {
        cls.insert(u);
        assigned[u] = true;
      }
    }
    classes.push_back(std::move(cls));
  }
  return classes;
}

int TwinClassLowerBound(const Digraph& g) {
  int bound = 0;
  for (const VertexSet& cls : TwinClasses(g)) bound += cls.size() - 1;
  return bound;
}

namespace {

inline uint64_t Bit(int v) { return uint64_t{1} << v; }

// Decides "is there T within `allowed`, |T| <= budget, such that
// chosen + T has the property" by branching on the cheapest violation.
// Every valid superset of `chosen` must repair each violation, so branching
// over the repair options (forbidding earlier options in later branches) is
// complete.
class Searcher {
 public:
  Searcher(const Digraph& g, Claim claim)
      : n_(g.order()),
        dominate_(claim != Claim::kLocating),
        locate_(claim != Claim::kDominating) {
    all_ = n_ == 64 ? ~uint64_t{0} : Bit(n_) - 1;
    in_.resize(n_);
    out_closed_.resize(n_);
    for (Vertex v = 0; v < n_; ++v) {
      in_[v] = g.in(v).mask();
      out_closed_[v] = g.out(v).mask() | Bit(v);
    }
    if (dominate_) {
      for (Vertex v : Sources(g)) mandatory_ |= Bit(v);
    }
    if (locate_) {
      for (const VertexSet& cls : TwinClasses(g)) {
        if (cls.size() >= 2) classes_.push_back(cls.mask());
      }
    }
  }

  uint64_t all() const { return all_; }
  uint64_t mandatory() const { return mandatory_; }
  int64_t explored() const { return explored_; }

  bool Feasible(uint64_t chosen, uint64_t allowed, int budget) {
    ++explored_;
    if (budget < 0) return false;
    const uint64_t reachable = chosen | allowed;
    if (mandatory_ & ~reachable) return false;
    for (uint64_t cls : classes_) {
      if (std::popcount(cls & ~reachable) >= 2) return false;
    }

    uint64_t best = 0;
    int best_count = 65;
    bool violated = false;
    auto consider = [&](uint64_t options) {
      violated = true;
      int c = std::popcount(options);
      if (c < best_count) {
        best_count = c;
        best = options;
      }
    };

    uint64_t undominated = 0;
    if (dominate_) {
      for (Vertex v = 0; v < n_; ++v) {
        if ((chosen & Bit(v)) == 0 && (in_[v] & chosen) == 0) {
          undominated |= Bit(v);
          consider((in_[v] | Bit(v)) & allowed);
        }
      }
    }
    if (locate_) {
      for (Vertex u = 0; u < n_; ++u) {
        if (chosen & Bit(u)) continue;
        const uint64_t tu = in_[u] & chosen;
        for (Vertex v = u + 1; v < n_; ++v) {
          if ((chosen & Bit(v)) || (in_[v] & chosen) != tu) continue;
          consider((Bit(u) | Bit(v) | (in_[u] ^ in_[v])) & allowed);
        }
      }
    }
    if (!violated) return true;
    if (best_count == 0 || budget == 0) return false;

    if (undominated != 0) {
      int max_cover = 0;
      for (uint64_t rest = allowed; rest; rest &= rest - 1) {
        int c = std::countr_zero(rest);
        max_cover = std::max(max_cover, std::popcount(out_closed_[c] & undominated));
      }
      if (max_cover == 0) return false;
      const int need = (std::popcount(undominated) + max_cover - 1) / max_cover;
      if (need > budget) return false;
    }

    uint64_t tried = 0;
    for (uint64_t rest = best; rest; rest &= rest - 1) {
      const uint64_t b = rest & -rest;
      tried |= b;
      if (Feasible(chosen | b, allowed & ~tried, budget - 1)) return true;
    }
    return false;
  }

 private:
  int n_;
  bool dominate_;
  bool locate_;
  uint64_t all_ = 0;
  uint64_t mandatory_ = 0;
  std::vector<uint64_t> in_;
  std::vector<uint64_t> out_closed_;
  std::vector<uint64_t> classes_;
  int64_t explored_ = 0;
};

int StartingSize(const Digraph& g, Claim claim, const Searcher& searcher) {
  const int n = g.order();
  int lb = 0;
  if (claim != Claim::kLocating) {
    lb = std::max(lb, std::popcount(searcher.mandatory()));
    if (n > 0) lb = std::max(lb, 1);
  }
  if (claim != Claim::kDominating) lb = std::max(lb, TwinClassLowerBound(g));
  return std::min(lb, n);
}

}  // namespace

ExactResult ExactMinimum(const Digraph& g, Claim claim,
                         const ExactOptions& options) {
  const int n = g.order();
  const int limit = std::min(options.limit, kMaxExactOrder);
  if (n > limit) {
    throw Error(ErrorCode::kTooLarge,
                "order " + std::to_string(n) + " exceeds exact limit " +
                    std::to_string(limit),
                {n, limit});
  }
  Searcher searcher(g, claim);
  int value = StartingSize(g, claim, searcher);
  while (!searcher.Feasible(0, searcher.all(), value)) ++value;

  // Fix members one at a time: the least candidate that still admits a
  // completion of the optimal size from larger vertices.
  uint64_t chosen = 0;
  Vertex last = -1;
  for (int slot = 0; slot < value; ++slot) {
    bool placed = false;
    for (Vertex c = last + 1; c < n && !placed; ++c) {
      const uint64_t above = searcher.all() & ~((Bit(c) << 1) - 1);
      if (searcher.Feasible(chosen | Bit(c), above, value - slot - 1)) {
        chosen |= Bit(c);
        last = c;
        placed = true;
      }
    }
    if (!placed) {
      throw Error(ErrorCode::kInternalInvariantViolation,
                  "canonical witness reconstruction failed");
    }
  }

  ExactResult result;
  result.value = value;
  result.witness = VertexSet::FromMask(n, chosen);
  result.explored = searcher.explored();
  return result;
}

ExactResult ExactGamma(const Digraph& g, const ExactOptions& options) {
  return ExactMinimum(g, Claim::kDominating, options);
}

ExactResult ExactSep(const Digraph& g, const ExactOptions& options) {
  return ExactMinimum(g, Claim::kLocating, options);
}

ExactResult ExactLd(const Digraph& g, const ExactOptions& options) {
  return ExactMinimum(g, Claim::kLocatingDominating, options);
}

}  // namespace ldigraph
