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

#include "ldigraph/general_method.h"

#include <algorithm>
#include <numeric>
#include <set>

#include "ldigraph/certify.h"
#include "ldigraph/error.h"

namespace ldigraph {

Ratio Ratio::Make(int64_t num, int64_t den) {
  if (den <= 0 || num <= 0 || num > den) {
    throw Error(ErrorCode::kBadParams,
                "ratio " + std::to_string(num) + "/" + std::to_string(den) +
                    " is not in (0,1]",
                {num, den});
  }
  const int64_t g = std::gcd(num, den);
  return Ratio{num / g, den / g};
}

std::string Ratio::ToString() const {
  return std::to_string(num) + "/" + std::to_string(den);
}

bool HasEnoughParts(const Digraph& g, const VertexSet& s, Ratio x) {
  return CountSPartitionParts(g, s) * x.den >= x.num * s.size();
}

VertexSet GrowToMaximal(const Digraph& g, const VertexSet& s, Ratio x) {
  if (!HasEnoughParts(g, s, x)) {
    throw Error(ErrorCode::kPropertyViolatedAtInput,
                "S-partition has " + std::to_string(CountSPartitionParts(g, s)) +
                    " parts, fewer than " + x.ToString() + " * " +
                    std::to_string(s.size()),
                {CountSPartitionParts(g, s), s.size()});
  }
  VertexSet grown = s;
  bool changed = true;
  while (changed) {
    changed = false;
    for (Vertex v = 0; v < g.order(); ++v) {
      if (grown.contains(v)) continue;
      VertexSet candidate = grown;
      candidate.insert(v);
      if (HasEnoughParts(g, candidate, x)) {
        grown = std::move(candidate);
        changed = true;
        break;
      }
    }
  }
  return grown;
}

SizeBound GeneralMethodBound(int n, Ratio x, bool quasi_twin_free) {
  SizeBound b;
  const std::string xs = "x=" + x.ToString();
  if (quasi_twin_free) {
    // (x+1)/(2x+1) = (p+q)/(2p+q)
    b.name = "general method (x+1)n/(2x+1), " + xs;
    b.value = n * (x.num + x.den) / (2 * x.num + x.den);
  } else {
    // (2x+1)/(3x+1) = (2p+q)/(3p+q)
    b.name = "general method (2x+1)n/(3x+1), " + xs;
    b.value = n * (2 * x.num + x.den) / (3 * x.num + x.den);
  }
  return b;
}

namespace {

[[noreturn]] void Invariant(const std::string& what) {
  throw Error(ErrorCode::kInternalInvariantViolation, what);
}

void RequireTwinFree(const Digraph& g) {
  auto twins = TwinPairs(g);
  if (!twins.empty()) {
    throw Error(ErrorCode::kNotTwinFree,
                "vertices " + std::to_string(twins[0].first) + " and " +
                    std::to_string(twins[0].second) + " are twins",
                {twins[0].first, twins[0].second});
  }
}

void RequireSourceFree(const Digraph& g) {
  auto sources = Sources(g);
  if (!sources.empty()) {
    throw Error(ErrorCode::kHasSource,
                "vertex " + std::to_string(sources[0]) + " is a source",
                {sources[0]});
  }
}

}  // namespace

std::pair<VertexSet, GeneralMethodTrace> LdFromDominating(const Digraph& g,
                                                          const VertexSet& s,
                                                          Ratio x) {
  RequireTwinFree(g);
  Certificate dom = IsDominating(g, s);
  if (!dom.valid) {
    throw Error(ErrorCode::kNotDominating,
                "vertex " + std::to_string(dom.witness->first) +
                    " is not dominated",
                {dom.witness->first});
  }
  const int n = g.order();
  GeneralMethodTrace trace;
  trace.initial_s = s;
  trace.x = x;
  trace.final_s = GrowToMaximal(g, s, x);
  const VertexSet& grown = trace.final_s;

  const SPartition partition = ComputeSPartition(g, grown);
  trace.singleton_parts = partition.singletons;
  trace.larger_parts = partition.larger;

  trace.d1 = grown;
  for (const SPartitionPart& part : partition.parts) {
    if (part.members.size() == 1) trace.d1 |= part.members;
  }
  if (trace.d1.size() != grown.size() + partition.singletons) {
    Invariant("|D1| != |S| + n1");
  }

  // Quasi-twins outside D1 share their part and come in disjoint pairs.
  trace.d1_prime = trace.d1;
  VertexSet paired(n);
  for (auto [u, v] : QuasiTwinPairs(g)) {
    if (trace.d1.contains(u) || trace.d1.contains(v)) continue;
    if (TraceOn(g, u, grown) != TraceOn(g, v, grown)) {
      Invariant("quasi-twins " + std::to_string(u) + "," + std::to_string(v) +
                " lie in different parts");
    }
    if (paired.contains(u) || paired.contains(v)) {
      Invariant("quasi-twin pairs outside D1 overlap at " + std::to_string(u) +
                "," + std::to_string(v));
    }
    paired.insert(u);
    paired.insert(v);
    PairRelation rel = GetPairRelation(g, u, v);
    trace.quasi_twin_pairs.emplace_back(rel.inner, rel.outer);
    trace.d1_prime.insert(std::min(u, v));
  }

  trace.d2 = g.vertices();
  for (const SPartitionPart& part : partition.parts) {
    trace.d2.erase(part.members.front());
  }
  if (trace.d2.size() != n - partition.count()) {
    Invariant("|D2| != n - (n1 + n2)");
  }

  trace.quasi_twin_free = IsQuasiTwinFree(g);
  const VertexSet& first = trace.quasi_twin_free ? trace.d1 : trace.d1_prime;
  VertexSet result;
  if (first.size() < trace.d2.size()) {
    trace.chosen = trace.quasi_twin_free ? "D1" : "D1'";
    result = first;
  } else {
    trace.chosen = "D2";
    result = trace.d2;
  }
  trace.bound = GeneralMethodBound(n, x, trace.quasi_twin_free);

  Certificate cert = IsLocatingDominating(g, result);
  if (!cert.valid) Invariant("general method produced an invalid set");
  if (result.size() > trace.bound.value) {
    Invariant("general method exceeded " + trace.bound.name);
  }
  return {std::move(result), std::move(trace)};
}

VertexSet HalfPartsDominatingSet(const Digraph& g, const ExactOptions& options,
                                 HalfPartsTrace* trace) {
  RequireSourceFree(g);
  HalfPartsTrace local;
  HalfPartsTrace& t = trace ? *trace : local;
  t = HalfPartsTrace{};
  const int n = g.order();

  const VertexSet s = ExactGamma(g, options).witness;
  t.minimum = s;
  const SPartition partition = ComputeSPartition(g, s);
  t.evaluations = 1;
  if (2 * partition.count() >= s.size()) return s;

  // Members with an S-external private neighbour.
  VertexSet s1(n);
  for (Vertex v : s) {
    if (!ExternalPrivateNeighbours(g, s, v).empty()) s1.insert(v);
  }
  // One dominator per part not reached by S1; those parts have >= 2
  // in-neighbours in S, none of them in S1.
  VertexSet s2(n);
  for (const SPartitionPart& part : partition.parts) {
    if (part.trace.Intersects(s1) || part.trace.Intersects(s2)) continue;
    if (part.trace.size() < 2) Invariant("private neighbour missed by S1");
    s2.insert(part.trace.front());
  }
  const VertexSet s3 = s - s1 - s2;
  t.s1 = s1;
  t.s2 = s2;
  t.s3 = s3;

  // Minimality of S forbids in-neighbours of S3 inside S and forces the
  // chosen in-neighbours to be distinct.
  VertexSet exchanged = s1 | s2;
  for (Vertex x : s3) {
    if (g.in(x).Intersects(s)) {
      Invariant("vertex " + std::to_string(x) +
                " of S3 has an in-neighbour in S");
    }
    const Vertex f = g.in(x).front();
    if (exchanged.contains(f)) {
      Invariant("exchange map is not injective at " + std::to_string(f));
    }
    exchanged.insert(f);
  }
  t.exchanged = true;
  t.evaluations = 2;
  if (exchanged.size() != s.size() || !IsDominating(g, exchanged).valid ||
      2 * CountSPartitionParts(g, exchanged) < exchanged.size()) {
    Invariant("exchanged dominating set lacks |S|/2 parts");
  }
  return exchanged;
}

VertexSet LdSourceFreeTwinFree(const Digraph& g, const ExactOptions& options,
                               PipelineTrace* trace) {
  RequireSourceFree(g);
  RequireTwinFree(g);
  PipelineTrace local;
  PipelineTrace& t = trace ? *trace : local;
  const VertexSet s = HalfPartsDominatingSet(g, options, &t.half_parts);
  auto [result, general] = LdFromDominating(g, s, Ratio{1, 2});
  t.general = std::move(general);
  const int n = g.order();
  if (t.general.quasi_twin_free) {
    t.bound = {"source-free twin-free quasi-twin-free 3n/4",
               static_cast<int64_t>(3 * n / 4)};
  } else {
    t.bound = {"source-free twin-free 4n/5", static_cast<int64_t>(4 * n / 5)};
  }
  if (result.size() > t.bound.value) Invariant("exceeded " + t.bound.name);
  return result;
}

namespace {

// Advances `idx` (sorted indices into a pool of size m) to the next
// combination of the same size in lexicographic order.
SizeBound PatchedBound(int n, bool quasi_twin_free) {
  if (quasi_twin_free) {
    return {"twin-free quasi-twin-free 3n/4+1", static_cast<int64_t>(3 * n / 4 + 1)};
  }
  return {"twin-free 4n/5+1", static_cast<int64_t>(4 * n / 5 + 1)};
}

bool NextCombination(std::vector<int>& idx, int m) {
  const int k = static_cast<int>(idx.size());
  int i = k - 1;
  while (i >= 0 && idx[i] == m - k + i) --i;
  if (i < 0) return false;
  ++idx[i];
  for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
  return true;
}

}  // namespace

VertexSet LdTwinFree(const Digraph& g, const ExactOptions& options,
                     PipelineTrace* trace) {
  const int n = g.order();
  if (n < 3) {
    throw Error(ErrorCode::kTooSmall, "order must be at least 3", {n});
  }
  RequireTwinFree(g);
  const std::vector<Vertex> sources = Sources(g);
  PipelineTrace local;
  PipelineTrace& t = trace ? *trace : local;
  const bool quasi_twin_free = IsQuasiTwinFree(g);
  if (sources.empty()) return LdSourceFreeTwinFree(g, options, &t);

  const Vertex s = sources.front();
  std::set<VertexSet> excluded;
  for (Vertex v = 0; v < n; ++v) {
    excluded.insert(g.in(v));
    if (quasi_twin_free) {
      VertexSet closed = g.closed_in(v);
      closed.erase(s);
      excluded.insert(closed);
      VertexSet open = g.in(v);
      open.erase(s);
      excluded.insert(open);
    }
  }

  std::vector<Vertex> pool;
  for (Vertex v = 0; v < n; ++v) {
    if (v != s) pool.push_back(v);
  }
  const int m = static_cast<int>(pool.size());
  for (int k = 1; k <= m; ++k) {
    std::vector<int> idx(k);
    std::iota(idx.begin(), idx.end(), 0);
    do {
      VertexSet x(n);
      for (int i : idx) x.insert(pool[i]);
      if (excluded.count(x)) continue;
      std::vector<Arc> extra;
      for (Vertex v : x) extra.push_back({v, s});
      const Digraph patched = g.WithArcs(extra);
      if (!Sources(patched).empty() || !IsTwinFree(patched)) continue;
      if (quasi_twin_free && !IsQuasiTwinFree(patched)) continue;

      VertexSet result = LdSourceFreeTwinFree(patched, options, &t);
      result.insert(s);
      t.source = s;
      t.patch = x;
      t.bound = PatchedBound(n, quasi_twin_free);
      if (!IsLocatingDominating(g, result).valid) {
        Invariant("source patching produced an invalid set");
      }
      if (result.size() > t.bound.value) Invariant("exceeded " + t.bound.name);
      return result;
    } while (NextCombination(idx, m));
  }
  // The counting argument behind the enumeration needs a few vertices; on
  // the smallest orders every X can be excluded, so fall back to the optimum.
  VertexSet result = ExactLd(g, options).witness;
  t.source = s;
  t.patch = VertexSet(n);
  t.exact_fallback = true;
  t.bound = PatchedBound(n, quasi_twin_free);
  if (result.size() > t.bound.value) Invariant("exceeded " + t.bound.name);
  return result;
}

}  // namespace ldigraph
