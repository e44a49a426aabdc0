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

#include <gtest/gtest.h>

#include "ldigraph/error.h"
#include "ldigraph/families.h"
#include "oracle.h"

namespace ldigraph {
namespace {

Digraph Family(const std::string& spec) {
  return Generate(ParseFamilySpec(spec));
}

oracle::Kind KindOf(Claim c) {
  switch (c) {
    case Claim::kDominating:
      return oracle::Kind::kDominating;
    case Claim::kLocating:
      return oracle::Kind::kLocating;
    default:
      return oracle::Kind::kLd;
  }
}

TEST(ExactTest, Domination) {
  EXPECT_EQ(ExactGamma(Family("cycle:n=3")).value, 2);
  EXPECT_EQ(ExactGamma(Family("path:n=5")).value, 3);
  EXPECT_EQ(ExactGamma(Family("path:n=1")).value, 1);
}

TEST(ExactTest, Location) {
  EXPECT_EQ(ExactSep(Family("tt:n=5")).value, 2);
  EXPECT_EQ(ExactSep(Family("tt:n=4")).value, 2);
  EXPECT_EQ(ExactSep(Digraph::Build(2, {})).value, 1);
}

TEST(ExactTest, LocationDomination) {
  EXPECT_EQ(ExactLd(Family("gk:k=1")).value, 2);
  EXPECT_EQ(ExactLd(Family("tt:n=5")).value, 3);
  EXPECT_EQ(ExactLd(Family("tk:k=2")).value, 3);
}

TEST(ExactTest, TwinClassBound) {
  EXPECT_EQ(TwinClassLowerBound(Family("kn:n=4")), 3);
  EXPECT_EQ(ExactLd(Family("kn:n=4")).value, 3);
  EXPECT_EQ(TwinClassLowerBound(Family("gk:k=2")), 0);
  EXPECT_EQ(TwinClassLowerBound(Family("tt:n=4")), 2);
}

TEST(ExactTest, RefusesLargeInputs) {
  try {
    ExactLd(Family("path:n=25"));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kTooLarge);
    EXPECT_EQ(e.data(), (std::vector<long long>{25, 24}));
  }
  EXPECT_EQ(ExactLd(Family("path:n=25"), {30}).value, 13);
  EXPECT_THROW(ExactLd(Family("path:n=65"), {100}), Error);
}

TEST(ExactTest, EmptyDigraph) {
  const Digraph g = Digraph::Build(0, {});
  EXPECT_EQ(ExactGamma(g).value, 0);
  EXPECT_EQ(ExactLd(g).value, 0);
}

// Values and canonical witnesses match full enumeration on every digraph of
// order 4.
TEST(ExactTest, MatchesEnumerationOnAllOrderFourDigraphs) {
  DigraphEnumerator all(4);
  Digraph g;
  while (all.Next(&g)) {
    for (Claim c : {Claim::kDominating, Claim::kLocating,
                    Claim::kLocatingDominating}) {
      const ExactResult r = ExactMinimum(g, c);
      const oracle::Minimum o = oracle::BruteMinimum(g, KindOf(c));
      ASSERT_EQ(r.value, o.value);
      ASSERT_EQ(r.witness.mask(), o.witness);
    }
  }
}

TEST(ExactTest, MatchesEnumerationOnRandomDigraphs) {
  for (const char* model : {"rand-digraph:n=9,p=1/4", "rand-digraph:n=9,p=1/2",
                            "rand-sftf:n=10,p=1/5", "rand-tournament:n=10"}) {
    for (uint64_t seed = 0; seed < 40; ++seed) {
      FamilySpec spec = ParseFamilySpec(model);
      spec.seed = seed;
      const Digraph g = Generate(spec);
      for (Claim c : {Claim::kDominating, Claim::kLocating,
                      Claim::kLocatingDominating}) {
        const ExactResult r = ExactMinimum(g, c);
        const oracle::Minimum o = oracle::BruteMinimum(g, KindOf(c));
        ASSERT_EQ(r.value, o.value) << model << " seed " << seed;
        ASSERT_EQ(r.witness.mask(), o.witness) << model << " seed " << seed;
      }
    }
  }
}

TEST(ExactTest, StructuralInequalities) {
  for (uint64_t seed = 0; seed < 200; ++seed) {
    FamilySpec spec = ParseFamilySpec("rand-digraph:n=10,p=1/3");
    spec.seed = seed;
    const Digraph g = Generate(spec);
    const int gamma = ExactGamma(g).value;
    const int sep = ExactSep(g).value;
    const int ld = ExactLd(g).value;
    ASSERT_LE(ld - 1, sep);
    ASSERT_LE(sep, ld);
    ASSERT_LE(gamma, ld);
    ASSERT_LE(sep, g.order() - 1);
    if (g.arc_count() > 0) {
      ASSERT_LE(ld, g.order() - 1);
    }
    ASSERT_LE(TwinClassLowerBound(g), ld);
  }
}

TEST(ExactTest, WitnessIsDeterministic) {
  const Digraph g = Family("rand-sftf:n=16,p=1/4,seed=3");
  const ExactResult a = ExactLd(g);
  const ExactResult b = ExactLd(g);
  EXPECT_EQ(a.witness, b.witness);
  EXPECT_EQ(a.explored, b.explored);
  EXPECT_TRUE(IsLocatingDominating(g, a.witness).valid);
}

}  // namespace
}  // namespace ldigraph
