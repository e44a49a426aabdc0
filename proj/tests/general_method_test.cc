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

#include <functional>

#include <gtest/gtest.h>

#include "ldigraph/certify.h"
#include "ldigraph/error.h"
#include "ldigraph/families.h"
#include "oracle.h"

namespace ldigraph {
namespace {

Digraph Family(const std::string& spec) {
  return Generate(ParseFamilySpec(spec));
}

Digraph Seeded(const std::string& model, uint64_t seed) {
  FamilySpec spec = ParseFamilySpec(model);
  spec.seed = seed;
  return Generate(spec);
}

ErrorCode CodeOf(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error raised";
  return ErrorCode::kInternalInvariantViolation;
}

const Ratio kHalf{1, 2};

TEST(RatioTest, ReducesAndValidates) {
  const Ratio r = Ratio::Make(2, 4);
  EXPECT_EQ(r.num, 1);
  EXPECT_EQ(r.den, 2);
  EXPECT_EQ(Ratio::Make(3, 3).ToString(), "1/1");
  EXPECT_EQ(CodeOf([] { Ratio::Make(0, 3); }), ErrorCode::kBadParams);
  EXPECT_EQ(CodeOf([] { Ratio::Make(4, 3); }), ErrorCode::kBadParams);
  EXPECT_EQ(CodeOf([] { Ratio::Make(1, 0); }), ErrorCode::kBadParams);
}

TEST(GeneralMethodTest, BoundsUseIntegerFloors) {
  EXPECT_EQ(GeneralMethodBound(3, kHalf, true).value, 2);    // 2.25
  EXPECT_EQ(GeneralMethodBound(4, kHalf, false).value, 3);   // 3.2
  EXPECT_EQ(GeneralMethodBound(10, {1, 1}, false).value, 7);  // 3n/4
  EXPECT_EQ(GeneralMethodBound(10, {1, 1}, true).value, 6);   // 2n/3
}

TEST(GeneralMethodTest, GrowthStopsWhenNoVertexFits) {
  const Digraph c3 = Family("cycle:n=3");
  EXPECT_EQ(GrowToMaximal(c3, VertexSet(3, {0, 1}), kHalf), VertexSet(3, {0, 1}));
  EXPECT_EQ(CodeOf([&] { GrowToMaximal(c3, VertexSet::Full(3), kHalf); }),
            ErrorCode::kPropertyViolatedAtInput);

  const Digraph two = Family("triangles:k=2");
  const VertexSet grown = GrowToMaximal(two, VertexSet(6, {0, 1, 3, 4}), kHalf);
  EXPECT_TRUE(HasEnoughParts(two, grown, kHalf));
  EXPECT_TRUE(VertexSet(6, {0, 1, 3, 4}).IsSubsetOf(grown));
}

TEST(GeneralMethodTest, TriangleExample) {
  auto [set, trace] =
      LdFromDominating(Family("cycle:n=3"), VertexSet(3, {0, 1}), kHalf);
  EXPECT_EQ(trace.d1, VertexSet(3, {0, 1, 2}));
  EXPECT_EQ(trace.d2, VertexSet(3, {0, 1}));
  EXPECT_EQ(trace.chosen, "D2");
  EXPECT_EQ(set, VertexSet(3, {0, 1}));
  EXPECT_EQ(trace.bound.value, 2);
}

TEST(GeneralMethodTest, TransitiveTournamentWithQuasiTwins) {
  const Digraph tt4 = Family("tt:n=4");
  auto [set, trace] = LdFromDominating(tt4, VertexSet(4, {0}), kHalf);
  EXPECT_FALSE(trace.quasi_twin_free);
  EXPECT_TRUE(IsLocatingDominating(tt4, set).valid);
  EXPECT_LE(set.size(), 3);
}

TEST(GeneralMethodTest, RejectsBadInput) {
  const Digraph k2 = Family("kn:n=2");
  EXPECT_EQ(CodeOf([&] { LdFromDominating(k2, VertexSet(2, {0}), kHalf); }),
            ErrorCode::kNotTwinFree);
  const Digraph c3 = Family("cycle:n=3");
  EXPECT_EQ(CodeOf([&] { LdFromDominating(c3, VertexSet(3, {0}), kHalf); }),
            ErrorCode::kNotDominating);
  EXPECT_EQ(CodeOf([&] { LdFromDominating(c3, VertexSet::Full(3), kHalf); }),
            ErrorCode::kPropertyViolatedAtInput);
}

// Checks every documented invariant of one run of the general method.
void CheckGeneralMethod(const Digraph& g, const VertexSet& s, Ratio x) {
  auto [set, t] = LdFromDominating(g, s, x);
  const int n = g.order();
  ASSERT_TRUE(s.IsSubsetOf(t.final_s));
  ASSERT_TRUE(HasEnoughParts(g, t.final_s, x));
  for (Vertex v = 0; v < n; ++v) {
    if (t.final_s.contains(v)) continue;
    VertexSet bigger = t.final_s;
    bigger.insert(v);
    ASSERT_FALSE(HasEnoughParts(g, bigger, x));
  }
  const SPartition p = ComputeSPartition(g, t.final_s);
  ASSERT_EQ(t.d1.size(), t.final_s.size() + p.singletons);
  ASSERT_EQ(t.d2.size(), n - p.count());
  VertexSet seen(n);
  for (const auto& [inner, outer] : t.quasi_twin_pairs) {
    ASSERT_EQ(TraceOn(g, inner, t.final_s), TraceOn(g, outer, t.final_s));
    ASSERT_FALSE(seen.contains(inner) || seen.contains(outer));
    seen.insert(inner);
    seen.insert(outer);
  }
  ASSERT_TRUE(IsLocatingDominating(g, set).valid);
  ASSERT_LE(set.size(), GeneralMethodBound(n, x, IsQuasiTwinFree(g)).value);
}

TEST(GeneralMethodTest, InvariantsOnRandomTwinFreeDigraphs) {
  int runs = 0;
  for (const char* model : {"rand-sftf:n=12,p=1/4", "rand-sftf:n=14,p=1/6",
                            "rand-1stf:n=12,p=1/3"}) {
    for (uint64_t seed = 0; seed < 120; ++seed) {
      const Digraph g = Seeded(model, seed);
      const VertexSet gamma = ExactGamma(g).witness;
      for (Ratio x : {Ratio{1, 3}, Ratio{1, 2}, Ratio{2, 3}, Ratio{1, 1}}) {
        if (!HasEnoughParts(g, gamma, x)) continue;
        CheckGeneralMethod(g, gamma, x);
        ++runs;
      }
    }
  }
  EXPECT_GT(runs, 1000);
}

TEST(HalfPartsTest, TrianglesAreTight) {
  for (int k = 1; k <= 4; ++k) {
    const Digraph g = Family("triangles:k=" + std::to_string(k));
    HalfPartsTrace t;
    const VertexSet s = HalfPartsDominatingSet(g, {}, &t);
    EXPECT_EQ(s.size(), 2 * k);
    EXPECT_EQ(CountSPartitionParts(g, s), k);
  }
}

TEST(HalfPartsTest, RejectsSources) {
  EXPECT_EQ(CodeOf([] { HalfPartsDominatingSet(Family("path:n=3")); }),
            ErrorCode::kHasSource);
}

TEST(HalfPartsTest, MinimumWithHalfTheParts) {
  int exchanges = 0;
  for (const char* model : {"rand-sf:n=5,p=1/8", "rand-sf:n=8,p=1/8",
                            "rand-sf:n=10,p=1/5", "rand-sftf:n=12,p=1/6"}) {
    for (uint64_t seed = 0; seed < 400; ++seed) {
      const Digraph g = Seeded(model, seed);
      HalfPartsTrace t;
      const VertexSet s = HalfPartsDominatingSet(g, {}, &t);
      const oracle::Minimum brute = oracle::BruteMinimum(g, oracle::Kind::kDominating);
      ASSERT_EQ(s.size(), brute.value);
      ASSERT_EQ(t.minimum.mask(), brute.witness);
      ASSERT_TRUE(IsDominating(g, s).valid);
      ASSERT_GE(2 * oracle::CountParts(g, s.mask()), s.size());
      if (t.exchanged) {
        ++exchanges;
        ASSERT_EQ(t.evaluations, 2);
        ASSERT_EQ(t.s1 | t.s2 | t.s3, t.minimum);
        ASSERT_EQ(t.s1.size() + t.s2.size() + t.s3.size(), t.minimum.size());
        ASSERT_TRUE((t.s1 | t.s2).IsSubsetOf(s));
      } else {
        ASSERT_EQ(t.evaluations, 1);
        ASSERT_EQ(s, t.minimum);
      }
    }
  }
  EXPECT_GT(exchanges, 0);
}

TEST(PipelineTest, SourceFreeExamples) {
  const Digraph g3 = Family("gk:k=3");
  const VertexSet a = LdSourceFreeTwinFree(g3);
  EXPECT_TRUE(IsLocatingDominating(g3, a).valid);
  EXPECT_LE(a.size(), 8);
  const Digraph c3 = Family("cycle:n=3");
  PipelineTrace t;
  const VertexSet b = LdSourceFreeTwinFree(c3, {}, &t);
  EXPECT_EQ(b.size(), 2);
  EXPECT_EQ(t.bound.value, 2);
  EXPECT_EQ(CodeOf([] { LdSourceFreeTwinFree(Family("path:n=4")); }),
            ErrorCode::kHasSource);
  EXPECT_EQ(CodeOf([] { LdSourceFreeTwinFree(Family("kn:n=3")); }),
            ErrorCode::kNotTwinFree);
}

TEST(PipelineTest, SourcePatching) {
  const Digraph p3 = Family("path:n=3");
  PipelineTrace t;
  const VertexSet a = LdTwinFree(p3, {}, &t);
  EXPECT_EQ(t.source, 0);
  EXPECT_EQ(t.patch, VertexSet(3, {2}));
  EXPECT_TRUE(IsLocatingDominating(p3, a).valid);
  EXPECT_LE(a.size(), 3);

  const Digraph p5 = Family("path:n=5");
  const VertexSet b = LdTwinFree(p5);
  EXPECT_TRUE(IsLocatingDominating(p5, b).valid);
  EXPECT_LE(b.size(), 5);

  const Digraph g2 = Family("gk:k=2");
  EXPECT_EQ(LdTwinFree(g2), LdSourceFreeTwinFree(g2));
  EXPECT_EQ(CodeOf([] { LdTwinFree(Family("path:n=2")); }), ErrorCode::kTooSmall);
}

TEST(PipelineTest, RandomInstancesRespectTheBounds) {
  for (uint64_t seed = 0; seed < 150; ++seed) {
    for (const char* model : {"rand-sftf:n=9,p=1/3", "rand-sftf:n=16,p=1/4"}) {
      const Digraph g = Seeded(model, seed);
      PipelineTrace t;
      const VertexSet a = LdSourceFreeTwinFree(g, {}, &t);
      const int n = g.order();
      ASSERT_TRUE(IsLocatingDominating(g, a).valid);
      ASSERT_LE(a.size(), IsQuasiTwinFree(g) ? 3 * n / 4 : 4 * n / 5);
      ASSERT_LE(a.size(), t.bound.value);
    }
    const Digraph h = Seeded("rand-1stf:n=12,p=1/3", seed);
    PipelineTrace t;
    const VertexSet b = LdTwinFree(h, {}, &t);
    const int n = h.order();
    ASSERT_EQ(t.source, Sources(h)[0]);
    ASSERT_FALSE(t.patch.empty());
    ASSERT_FALSE(t.patch.contains(t.source));
    ASSERT_TRUE(IsLocatingDominating(h, b).valid);
    ASSERT_LE(b.size(), (IsQuasiTwinFree(h) ? 3 * n / 4 : 4 * n / 5) + 1);
    ASSERT_LE(oracle::BruteMinimum(h, oracle::Kind::kLd).value, b.size());
  }
}

TEST(PipelineTest, EveryOneSourceDigraphUpToOrderFour) {
  int fallbacks = 0;
  for (int n = 3; n <= 4; ++n) {
    DigraphEnumerator all(n);
    Digraph g;
    while (all.Next(&g)) {
      if (Sources(g).size() != 1 || !IsTwinFree(g)) continue;
      PipelineTrace t;
      const VertexSet s = LdTwinFree(g, {}, &t);
      const bool qtf = IsQuasiTwinFree(g);
      ASSERT_TRUE(IsLocatingDominating(g, s).valid);
      ASSERT_LE(s.size(), (qtf ? 3 * n / 4 : 4 * n / 5) + 1);
      ASSERT_EQ(t.exact_fallback, t.patch.empty());
      if (t.exact_fallback) {
        ++fallbacks;
        EXPECT_EQ(n, 3);
        EXPECT_EQ(s.size(), oracle::BruteMinimum(g, oracle::Kind::kLd).value);
      }
    }
  }
  // Six labelled copies of 0->1, 1<->2 leave no admissible patch.
  EXPECT_EQ(fallbacks, 6);
}

TEST(PipelineTest, ExactFallbackOnTheSmallestOrder) {
  const Digraph g = Digraph::Build(3, {{0, 1}, {1, 2}, {2, 1}});
  PipelineTrace t;
  const VertexSet s = LdTwinFree(g, {}, &t);
  EXPECT_TRUE(t.exact_fallback);
  EXPECT_EQ(t.source, 0);
  EXPECT_EQ(s, VertexSet(3, {0, 1}));
  EXPECT_EQ(t.bound.value, 3);
}

TEST(PipelineTest, OrderFortyWithRaisedLimit) {
  for (uint64_t seed = 0; seed < 5; ++seed) {
    const Digraph g = Seeded("rand-sftf:n=40,p=1/4", seed);
    const VertexSet a = LdSourceFreeTwinFree(g, {40});
    EXPECT_TRUE(IsLocatingDominating(g, a).valid);
    EXPECT_LE(a.size(), 32);
  }
  EXPECT_EQ(CodeOf([] { LdSourceFreeTwinFree(Seeded("rand-sftf:n=40,p=1/4", 0)); }),
            ErrorCode::kTooLarge);
}

TEST(PipelineTest, PathValues) {
  EXPECT_EQ(ExactLd(Family("path:n=3")).value, 2);
  EXPECT_EQ(ExactLd(Family("path:n=5")).value, 3);
  EXPECT_EQ(ExactLd(Family("gk:k=3")).value, 6);
}

}  // namespace
}  // namespace ldigraph
