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


#include "ldigraph/families.h"

#include <charconv>
#include <map>
#include <random>
#include <set>
#include <utility>

#include "ldigraph/error.h"

namespace ldigraph {
namespace {

struct FamilyInfo {
  Family family;
  const char* name;
  std::vector<const char*> keys;  // accepted keys, in canonical order
  std::vector<const char*> required;
};

const std::vector<FamilyInfo>& Registry() {
  static const std::vector<FamilyInfo> kRegistry = {
      {Family::kGk, "gk", {"k"}, {"k"}},
      {Family::kTk, "tk", {"k"}, {"k"}},
      {Family::kTransitiveTournament, "tt", {"n"}, {"n"}},
      {Family::kDirectedPath, "path", {"n"}, {"n"}},
      {Family::kDirectedCycle, "cycle", {"n"}, {"n"}},
      {Family::kDirectedStar, "star", {"n", "pattern"}, {"n"}},
      {Family::kLayered, "layered", {"s1", "c", "s2"}, {}},
      {Family::kBidirectedComplete, "kn", {"n"}, {"n"}},
      {Family::kBidirectedStar, "bstar", {"n"}, {"n"}},
      {Family::kDisjointTriangles, "triangles", {"k"}, {"k"}},
      {Family::kRandomDigraph, "rand-digraph", {"n", "p", "seed"}, {"n"}},
      {Family::kRandomTournament, "rand-tournament", {"n", "seed"}, {"n"}},
      {Family::kRandomDag, "rand-dag", {"n", "p", "seed"}, {"n"}},
      {Family::kRandomSourceFree, "rand-sf", {"n", "p", "seed"}, {"n"}},
      {Family::kRandomSourceFreeTwinFree, "rand-sftf", {"n", "p", "seed"}, {"n"}},
      {Family::kRandomTwinFreeDag, "rand-tfdag", {"n", "p", "seed"}, {"n"}},
      {Family::kRandomSingleSourceTwinFree, "rand-1stf", {"n", "p", "seed"}, {"n"}},
  };
  return kRegistry;
}

const FamilyInfo& InfoFor(Family family) {
  for (const FamilyInfo& info : Registry()) {
    if (info.family == family) return info;
  }
  throw Error(ErrorCode::kBadParams, "unknown family");
}

[[noreturn]] void BadSpec(std::string_view text, const std::string& why) {
  throw Error(ErrorCode::kBadSpec,
              "bad family spec '" + std::string(text) + "': " + why);
}

template <typename T>
bool ParseNumber(std::string_view s, T* out) {
  if (s.empty()) return false;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), *out);
  return ec == std::errc() && ptr == s.data() + s.size();
}

[[noreturn]] void BadParams(const std::string& why) {
  throw Error(ErrorCode::kBadParams, why);
}

void Require(bool ok, const std::string& why) {
  if (!ok) BadParams(why);
}

void Check(bool ok, const FamilySpec& spec, const std::string& what) {
  if (!ok) {
    throw Error(ErrorCode::kPredicateFailed,
                FormatFamilySpec(spec) + " is not " + what);
  }
}

// Order cap for generated instances; keeps adjacency allocation sane.
constexpr int kMaxGeneratedOrder = 100000;

void AddTriangle(std::vector<Arc>& arcs, int base) {
  arcs.push_back({base, base + 1});
  arcs.push_back({base + 1, base + 2});
  arcs.push_back({base + 2, base});
}

bool Coin(std::mt19937_64& rng, const FamilySpec& spec) {
  return static_cast<int64_t>(rng() % static_cast<uint64_t>(spec.p_den)) <
         spec.p_num;
}

uint64_t Below(std::mt19937_64& rng, uint64_t bound) { return rng() % bound; }

std::vector<int> RandomRanks(std::mt19937_64& rng, int n) {
  std::vector<int> rank(n);
  for (int i = 0; i < n; ++i) rank[i] = i;
  for (int i = n - 1; i > 0; --i) {
    std::swap(rank[i], rank[Below(rng, i + 1)]);
  }
  return rank;
}

// One candidate per attempt; `make` returns the candidate, accepted when
// twin-free. Reports how many candidates were rejected on failure.
template <typename Make>
Digraph RejectTwins(const FamilySpec& spec, Make make) {
  std::mt19937_64 rng(spec.seed);
  for (int attempt = 0; attempt < kRandomRetryLimit; ++attempt) {
    Digraph g = make(rng);
    if (IsTwinFree(g)) return g;
  }
  throw Error(ErrorCode::kRetryLimitExceeded,
              FormatFamilySpec(spec) + ": all " +
                  std::to_string(kRandomRetryLimit) +
                  " candidates had twins",
              {kRandomRetryLimit, kRandomRetryLimit});
}

bool IsDirectedStarShape(const Digraph& g) {
  for (const Arc& a : g.arcs()) {
    if (a.tail != 0 && a.head != 0) return false;
  }
  for (Vertex v = 0; v < g.order(); ++v) {
    if (g.in_degree(v) + g.out_degree(v) == 0) return false;
  }
  return true;
}

// Random arcs, then one random in-arc for every vertex left without one.
Digraph SourceFreeCandidate(std::mt19937_64& rng, const FamilySpec& spec) {
  const int n = spec.n;
  std::vector<Arc> a;
  std::vector<bool> has_in(n, false);
  for (int u = 0; u < n; ++u) {
    for (int v = 0; v < n; ++v) {
      if (u != v && Coin(rng, spec)) {
        a.push_back({u, v});
        has_in[v] = true;
      }
    }
  }
  for (int v = 0; v < n; ++v) {
    if (has_in[v]) continue;
    int u = static_cast<int>(Below(rng, n - 1));
    if (u >= v) ++u;
    a.push_back({u, v});
  }
  return Digraph::Build(n, a);
}

}  // namespace

bool IsRandomFamily(Family family) {
  switch (family) {
    case Family::kRandomDigraph:
    case Family::kRandomTournament:
    case Family::kRandomDag:
    case Family::kRandomSourceFree:
    case Family::kRandomSourceFreeTwinFree:
    case Family::kRandomTwinFreeDag:
    case Family::kRandomSingleSourceTwinFree:
      return true;
    default:
      return false;
  }
}

FamilySpec ParseFamilySpec(std::string_view text) {
  const size_t colon = text.find(':');
  const std::string_view name = text.substr(0, colon);
  const FamilyInfo* info = nullptr;
  for (const FamilyInfo& candidate : Registry()) {
    if (name == candidate.name) info = &candidate;
  }
  if (!info) BadSpec(text, "unknown family '" + std::string(name) + "'");

  FamilySpec spec;
  spec.family = info->family;
  std::set<std::string> seen;
  std::string_view rest =
      colon == std::string_view::npos ? std::string_view() : text.substr(colon + 1);
  bool more = colon != std::string_view::npos && !rest.empty();
  while (more) {
    const size_t comma = rest.find(',');
    const std::string_view item = rest.substr(0, comma);
    more = comma != std::string_view::npos;
    if (more) rest = rest.substr(comma + 1);
    const size_t eq = item.find('=');
    if (eq == std::string_view::npos) BadSpec(text, "expected key=value");
    const std::string key(item.substr(0, eq));
    const std::string_view value = item.substr(eq + 1);
    bool known = false;
    for (const char* k : info->keys) known |= key == k;
    if (!known) BadSpec(text, "key '" + key + "' does not apply");
    if (!seen.insert(key).second) BadSpec(text, "key '" + key + "' repeated");

    bool ok = true;
    if (key == "k") {
      ok = ParseNumber(value, &spec.k);
    } else if (key == "n") {
      ok = ParseNumber(value, &spec.n);
    } else if (key == "s1") {
      ok = ParseNumber(value, &spec.s1);
    } else if (key == "c") {
      ok = ParseNumber(value, &spec.c);
    } else if (key == "s2") {
      ok = ParseNumber(value, &spec.s2);
    } else if (key == "seed") {
      ok = ParseNumber(value, &spec.seed);
    } else if (key == "pattern") {
      spec.pattern = std::string(value);
      ok = !value.empty() &&
           value.find_first_not_of("iob") == std::string_view::npos;
    } else if (key == "p") {
      const size_t slash = value.find('/');
      if (slash == std::string_view::npos) {
        ok = ParseNumber(value, &spec.p_num);
        spec.p_den = 1;
      } else {
        ok = ParseNumber(value.substr(0, slash), &spec.p_num) &&
             ParseNumber(value.substr(slash + 1), &spec.p_den);
      }
      ok = ok && spec.p_den > 0 && spec.p_num >= 0 && spec.p_num <= spec.p_den;
    }
    if (!ok) BadSpec(text, "invalid value for '" + key + "'");
  }
  for (const char* k : info->required) {
    if (!seen.count(k)) BadSpec(text, std::string("missing '") + k + "'");
  }
  return spec;
}

std::string FormatFamilySpec(const FamilySpec& spec) {
  const FamilyInfo& info = InfoFor(spec.family);
  std::string out = info.name;
  char sep = ':';
  for (const char* key : info.keys) {
    const std::string k = key;
    std::string value;
    if (k == "k") value = std::to_string(spec.k);
    if (k == "n") value = std::to_string(spec.n);
    if (k == "s1") value = std::to_string(spec.s1);
    if (k == "c") value = std::to_string(spec.c);
    if (k == "s2") value = std::to_string(spec.s2);
    if (k == "seed") value = std::to_string(spec.seed);
    if (k == "pattern") value = spec.pattern;
    if (k == "p") {
      value = std::to_string(spec.p_num) + "/" + std::to_string(spec.p_den);
    }
    out += sep + k + "=" + value;
    sep = ',';
  }
  return out;
}

Digraph Generate(const FamilySpec& spec) {
  std::vector<Arc> arcs;
  const int n = spec.n;
  const int k = spec.k;
  auto require_order = [](long long order, long long min) {
    Require(order >= min && order <= kMaxGeneratedOrder,
            "order " + std::to_string(order) + " outside [" +
                std::to_string(min) + ", " + std::to_string(kMaxGeneratedOrder) +
                "]");
  };
  auto require_p = [&] {
    Require(spec.p_den > 0 && spec.p_num >= 0 && spec.p_num <= spec.p_den,
            "arc probability must lie in [0, 1]");
  };

  switch (spec.family) {
    case Family::kGk: {
      require_order(3LL * k + 2, 5);
      const int s = 3 * k, t = 3 * k + 1;
      for (int b = 0; b < k; ++b) AddTriangle(arcs, 3 * b);
      for (int v = 0; v < 3 * k; ++v) {
        arcs.push_back({v, s});
        arcs.push_back({t, v});
      }
      arcs.push_back({s, t});
      Digraph g = Digraph::Build(3 * k + 2, arcs);
      Check(IsStronglyConnected(g) && IsTwinFree(g) && IsQuasiTwinFree(g), spec,
            "strongly connected, twin-free and quasi-twin-free");
      return g;
    }
    case Family::kTk: {
      require_order(3LL * k, 3);
      for (int b = 0; b < k; ++b) {
        AddTriangle(arcs, 3 * b);
        for (int c = b + 1; c < k; ++c) {
          for (int i = 0; i < 3; ++i) {
            for (int j = 0; j < 3; ++j) arcs.push_back({3 * b + i, 3 * c + j});
          }
        }
      }
      Digraph g = Digraph::Build(3 * k, arcs);
      Check(IsTournament(g) && IsTwinFree(g), spec, "a twin-free tournament");
      return g;
    }
    case Family::kTransitiveTournament: {
      require_order(n, 1);
      for (int u = 0; u < n; ++u) {
        for (int v = u + 1; v < n; ++v) arcs.push_back({u, v});
      }
      Digraph g = Digraph::Build(n, arcs);
      Check(IsTournament(g) && IsAcyclic(g), spec, "a transitive tournament");
      return g;
    }
    case Family::kDirectedPath: {
      require_order(n, 1);
      for (int v = 0; v + 1 < n; ++v) arcs.push_back({v, v + 1});
      Digraph g = Digraph::Build(n, arcs);
      Check(IsAcyclic(g) && IsConnected(g), spec, "a directed path");
      return g;
    }
    case Family::kDirectedCycle: {
      require_order(n, 2);
      for (int v = 0; v < n; ++v) arcs.push_back({v, (v + 1) % n});
      Digraph g = Digraph::Build(n, arcs);
      Check(IsStronglyConnected(g), spec, "strongly connected");
      return g;
    }
    case Family::kDirectedStar: {
      require_order(n, 2);
      const size_t len = spec.pattern.size();
      Require(len == 1 || len == static_cast<size_t>(n - 1),
              "star pattern needs one character or one per leaf");
      for (int leaf = 1; leaf < n; ++leaf) {
        const char c = spec.pattern[len == 1 ? 0 : leaf - 1];
        Require(c == 'i' || c == 'o' || c == 'b', "star pattern uses i, o, b");
        if (c != 'i') arcs.push_back({0, leaf});
        if (c != 'o') arcs.push_back({leaf, 0});
      }
      Digraph g = Digraph::Build(n, arcs);
      Check(IsDirectedStarShape(g), spec, "a directed star");
      return g;
    }
    case Family::kLayered: {
      Require(spec.s1 >= 0 && spec.c >= 0 && spec.s2 >= 0,
              "part sizes must be non-negative");
      const long long total = 0LL + spec.s1 + spec.c + spec.s2;
      require_order(total, 1);
      const int c0 = spec.s1, s20 = spec.s1 + spec.c, order = s20 + spec.s2;
      for (int u = 0; u < c0; ++u) {
        for (int v = c0; v < order; ++v) arcs.push_back({u, v});
      }
      for (int u = c0; u < s20; ++u) {
        for (int v = c0; v < order; ++v) {
          if (u != v) arcs.push_back({u, v});
        }
      }
      Digraph g = Digraph::Build(order, arcs);
      Require(IsConnected(g), "part sizes give a disconnected digraph");
      return g;
    }
    case Family::kBidirectedComplete: {
      require_order(n, 1);
      for (int u = 0; u < n; ++u) {
        for (int v = 0; v < n; ++v) {
          if (u != v) arcs.push_back({u, v});
        }
      }
      return Digraph::Build(n, arcs);
    }
    case Family::kBidirectedStar: {
      require_order(n, 2);
      for (int leaf = 1; leaf < n; ++leaf) {
        arcs.push_back({0, leaf});
        arcs.push_back({leaf, 0});
      }
      Digraph g = Digraph::Build(n, arcs);
      Check(IsDirectedStarShape(g), spec, "a directed star");
      return g;
    }
    case Family::kDisjointTriangles: {
      require_order(3LL * k, 3);
      for (int b = 0; b < k; ++b) AddTriangle(arcs, 3 * b);
      Digraph g = Digraph::Build(3 * k, arcs);
      Check(Sources(g).empty() && IsTwinFree(g), spec,
            "source-free and twin-free");
      return g;
    }
    case Family::kRandomDigraph: {
      require_order(n, 0);
      require_p();
      std::mt19937_64 rng(spec.seed);
      for (int u = 0; u < n; ++u) {
        for (int v = 0; v < n; ++v) {
          if (u != v && Coin(rng, spec)) arcs.push_back({u, v});
        }
      }
      return Digraph::Build(n, arcs);
    }
    case Family::kRandomTournament: {
      require_order(n, 0);
      std::mt19937_64 rng(spec.seed);
      for (int u = 0; u < n; ++u) {
        for (int v = u + 1; v < n; ++v) {
          if (rng() & 1) {
            arcs.push_back({u, v});
          } else {
            arcs.push_back({v, u});
          }
        }
      }
      Digraph g = Digraph::Build(n, arcs);
      Check(IsTournament(g), spec, "a tournament");
      return g;
    }
    case Family::kRandomDag: {
      require_order(n, 0);
      require_p();
      std::mt19937_64 rng(spec.seed);
      const std::vector<int> rank = RandomRanks(rng, n);
      for (int u = 0; u < n; ++u) {
        for (int v = 0; v < n; ++v) {
          if (rank[u] < rank[v] && Coin(rng, spec)) arcs.push_back({u, v});
        }
      }
      Digraph g = Digraph::Build(n, arcs);
      Check(IsAcyclic(g), spec, "acyclic");
      return g;
    }
    case Family::kRandomSourceFree: {
      require_order(n, 2);
      require_p();
      std::mt19937_64 rng(spec.seed);
      Digraph g = SourceFreeCandidate(rng, spec);
      Check(Sources(g).empty(), spec, "source-free");
      return g;
    }
    case Family::kRandomSourceFreeTwinFree: {
      require_order(n, 2);
      require_p();
      Digraph g = RejectTwins(spec, [&](std::mt19937_64& rng) {
        return SourceFreeCandidate(rng, spec);
      });
      Check(Sources(g).empty() && IsTwinFree(g), spec,
            "source-free and twin-free");
      return g;
    }
    case Family::kRandomTwinFreeDag: {
      require_order(n, 1);
      require_p();
      Digraph g = RejectTwins(spec, [&](std::mt19937_64& rng) {
        const std::vector<int> rank = RandomRanks(rng, n);
        std::vector<int> by_rank(n);
        for (int v = 0; v < n; ++v) by_rank[rank[v]] = v;
        std::vector<Arc> a;
        for (int r = 1; r < n; ++r) {
          const int v = by_rank[r];
          bool any = false;
          for (int q = 0; q < r; ++q) {
            if (Coin(rng, spec)) {
              a.push_back({by_rank[q], v});
              any = true;
            }
          }
          if (!any) a.push_back({by_rank[Below(rng, r)], v});
        }
        return Digraph::Build(n, a);
      });
      Check(IsAcyclic(g) && IsTwinFree(g), spec, "acyclic and twin-free");
      return g;
    }
    case Family::kRandomSingleSourceTwinFree: {
      require_order(n, 3);
      require_p();
      Digraph g = RejectTwins(spec, [&](std::mt19937_64& rng) {
        const int s = static_cast<int>(Below(rng, n));
        std::vector<Arc> a;
        std::vector<bool> has_in(n, false);
        for (int u = 0; u < n; ++u) {
          for (int v = 0; v < n; ++v) {
            if (u != v && v != s && Coin(rng, spec)) {
              a.push_back({u, v});
              has_in[v] = true;
            }
          }
        }
        for (int v = 0; v < n; ++v) {
          if (v == s || has_in[v]) continue;
          int u = static_cast<int>(Below(rng, n - 1));
          if (u >= v) ++u;
          a.push_back({u, v});
        }
        return Digraph::Build(n, a);
      });
      Check(Sources(g).size() == 1 && IsTwinFree(g), spec,
            "twin-free with exactly one source");
      return g;
    }
  }
  BadParams("unknown family");
}

Digraph Random(const FamilySpec& spec) {
  Require(IsRandomFamily(spec.family),
          FormatFamilySpec(spec) + " is not a random model");
  return Generate(spec);
}

DigraphEnumerator::DigraphEnumerator(int n) : n_(n) {
  if (n < 0 || n > kMaxEnumerationOrder) {
    throw Error(ErrorCode::kTooLarge,
                "enumeration supports orders up to " +
                    std::to_string(kMaxEnumerationOrder),
                {n, kMaxEnumerationOrder});
  }
  for (int u = 0; u < n; ++u) {
    for (int v = 0; v < n; ++v) {
      if (u != v) pairs_.push_back({u, v});
    }
  }
  count_ = uint64_t{1} << pairs_.size();
}

Digraph DigraphEnumerator::At(uint64_t mask) const {
  std::vector<Arc> arcs;
  for (size_t i = 0; i < pairs_.size(); ++i) {
    if ((mask >> i) & 1) arcs.push_back(pairs_[i]);
  }
  return Digraph::Build(n_, arcs);
}

bool DigraphEnumerator::Next(Digraph* out) {
  if (next_ >= count_) return false;
  *out = At(next_++);
  return true;
}

}  // namespace ldigraph
