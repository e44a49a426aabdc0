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

#include <gtest/gtest.h>

#include <functional>

#include "ldigraph/certify.h"
#include "ldigraph/error.h"
#include "ldigraph/exact.h"

namespace ldigraph {
namespace {

ErrorCode CodeOf(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error raised";
  return ErrorCode::kInternalInvariantViolation;
}

Digraph Make(const std::string& text) { return Generate(ParseFamilySpec(text)); }

TEST(FamilySpecTest, ParsesAndFormats) {
  const FamilySpec a = ParseFamilySpec("rand-digraph:n=12,p=2/6,seed=7");
  EXPECT_EQ(a.family, Family::kRandomDigraph);
  EXPECT_EQ(a.n, 12);
  EXPECT_EQ(a.p_num, 2);
  EXPECT_EQ(a.p_den, 6);
  EXPECT_EQ(a.seed, 7u);
  EXPECT_EQ(FormatFamilySpec(ParseFamilySpec("rand-dag:seed=3,n=5")),
            "rand-dag:n=5,p=1/2,seed=3");
  EXPECT_EQ(FormatFamilySpec(ParseFamilySpec("gk:k=3")), "gk:k=3");
  EXPECT_EQ(FormatFamilySpec(ParseFamilySpec("star:n=4,pattern=iob")),
            "star:n=4,pattern=iob");
  for (const char* text : {"gk:k=2", "tk:k=4", "tt:n=3", "path:n=2", "cycle:n=9",
                           "star:n=5,pattern=b", "layered:s1=1,c=2,s2=0", "kn:n=3",
                           "bstar:n=4", "triangles:k=2", "rand-tournament:n=8,seed=1",
                           "rand-sf:n=4,p=1/3,seed=0", "rand-sftf:n=5,p=1/2,seed=2",
                           "rand-tfdag:n=6,p=1/2,seed=2", "rand-1stf:n=6,p=1/2,seed=2"}) {
    const FamilySpec spec = ParseFamilySpec(text);
    EXPECT_EQ(ParseFamilySpec(FormatFamilySpec(spec)), spec) << text;
  }
}

TEST(FamilySpecTest, RejectsMalformedText) {
  for (const char* text : {"", "nosuch:n=3", "gk", "gk:n=3", "gk:k=", "gk:k=x",
                           "gk:k=2,k=3", "path:n=3,", "rand-dag:n=4,p=3",
                           "rand-dag:n=4,p=1/0", "star:n=3,pattern=x",
                           "gk:,k=2", "cycle:n=4,seed=1"}) {
    EXPECT_EQ(CodeOf([&] { ParseFamilySpec(text); }), ErrorCode::kBadSpec) << text;
  }
}

TEST(GenerateTest, NamedFamilies) {
  const Digraph g3 = Make("gk:k=3");
  EXPECT_EQ(g3.order(), 11);
  EXPECT_TRUE(IsStronglyConnected(g3));
  EXPECT_TRUE(IsTwinFree(g3));
  EXPECT_TRUE(IsQuasiTwinFree(g3));
  EXPECT_TRUE(g3.has_arc(9, 10));
  EXPECT_TRUE(g3.has_arc(0, 9));
  EXPECT_TRUE(g3.has_arc(10, 0));

  const Digraph t3 = Make("tk:k=3");
  EXPECT_EQ(t3.order(), 9);
  EXPECT_TRUE(IsTournament(t3));
  EXPECT_TRUE(t3.has_arc(2, 0));
  EXPECT_TRUE(t3.has_arc(2, 3));

  EXPECT_EQ(Make("tt:n=6").arc_count(), 15);
  EXPECT_EQ(Make("path:n=6").arc_count(), 5);
  EXPECT_EQ(Make("cycle:n=6").arc_count(), 6);
  EXPECT_EQ(Make("kn:n=4").arc_count(), 12);
  EXPECT_EQ(Make("bstar:n=4").arc_count(), 6);
  EXPECT_EQ(Make("triangles:k=3").arc_count(), 9);

  const Digraph star = Make("star:n=4,pattern=iob");
  EXPECT_TRUE(star.has_arc(1, 0));
  EXPECT_FALSE(star.has_arc(0, 1));
  EXPECT_TRUE(star.has_arc(0, 2));
  EXPECT_FALSE(star.has_arc(2, 0));
  EXPECT_TRUE(star.has_arc(0, 3) && star.has_arc(3, 0));

  // S1 = {0}, C = {1, 2}, S2 = {3}.
  const Digraph t = Make("layered:s1=1,c=2,s2=1");
  EXPECT_EQ(t.order(), 4);
  EXPECT_EQ(t.arc_count(), 3 + 2 * 2);
  EXPECT_TRUE(t.has_arc(1, 2) && t.has_arc(2, 1) && t.has_arc(1, 3));
  EXPECT_FALSE(t.has_arc(3, 1));
}

TEST(GenerateTest, KnownExactValues) {
  // Twin-free digraphs of order 3k+2 with LD number 2k.
  for (int k = 1; k <= 4; ++k) {
    EXPECT_EQ(ExactLd(Make("gk:k=" + std::to_string(k))).value, 2 * k);
  }
  // Tournaments of order 3k with LD number ceil(3k/2).
  for (int k = 1; k <= 5; ++k) {
    EXPECT_EQ(ExactLd(Make("tk:k=" + std::to_string(k))).value, (3 * k + 1) / 2);
  }
  for (int n = 1; n <= 14; ++n) {
    const Digraph p = Make("path:n=" + std::to_string(n));
    EXPECT_EQ(ExactGamma(p).value, (n + 1) / 2);
    EXPECT_EQ(ExactLd(p).value, (n + 1) / 2);
  }
  for (int k = 1; k <= 5; ++k) {
    EXPECT_EQ(ExactGamma(Make("triangles:k=" + std::to_string(k))).value, 2 * k);
  }
}

TEST(GenerateTest, SmallInstanceProperties) {
  const StructuralProfile g1 = GetStructuralProfile(Make("gk:k=1"));
  EXPECT_EQ(Make("gk:k=1").order(), 5);
  EXPECT_TRUE(g1.is_source_free && g1.is_twin_free && g1.is_quasi_twin_free &&
              g1.is_strongly_connected);
  const Digraph p1 = Make("path:n=1");
  EXPECT_EQ(p1.order(), 1);
  EXPECT_EQ(p1.arc_count(), 0);
  EXPECT_TRUE(IsTournament(Make("rand-tournament:n=10,seed=1")));
  const Digraph sftf = Make("rand-sftf:n=20,seed=2");
  EXPECT_TRUE(Sources(sftf).empty() && IsTwinFree(sftf));
  EXPECT_TRUE(IsAcyclic(Make("rand-dag:n=8,p=1/2,seed=3")));
  for (int n = 2; n <= 8; ++n) {
    for (const char* pattern : {"o", "i", "b"}) {
      const Digraph star =
          Make("star:n=" + std::to_string(n) + ",pattern=" + pattern);
      EXPECT_EQ(ExactLd(star).value, n - 1) << n << pattern;
    }
  }
}

TEST(GenerateTest, ParameterErrors) {
  EXPECT_EQ(CodeOf([] { Make("gk:k=0"); }), ErrorCode::kBadParams);
  EXPECT_EQ(CodeOf([] { Make("cycle:n=1"); }), ErrorCode::kBadParams);
  EXPECT_EQ(CodeOf([] { Make("tt:n=-1"); }), ErrorCode::kBadParams);
  EXPECT_EQ(CodeOf([] { Make("star:n=4,pattern=io"); }), ErrorCode::kBadParams);
  EXPECT_EQ(CodeOf([] { Make("layered:s1=2,c=0,s2=0"); }), ErrorCode::kBadParams);
  EXPECT_EQ(CodeOf([] { Make("rand-1stf:n=2,p=1/2"); }), ErrorCode::kBadParams);
  EXPECT_EQ(CodeOf([] { Random(ParseFamilySpec("path:n=3")); }), ErrorCode::kBadParams);
}

TEST(GenerateTest, RandomModelsHoldTheirPredicates) {
  for (uint64_t seed = 0; seed < 40; ++seed) {
    for (int n : {3, 8, 20}) {
      auto spec = [&](const std::string& name) {
        FamilySpec s = ParseFamilySpec(name + ":n=" + std::to_string(n));
        s.seed = seed;
        return s;
      };
      EXPECT_TRUE(IsTournament(Generate(spec("rand-tournament"))));
      EXPECT_TRUE(IsAcyclic(Generate(spec("rand-dag"))));
      EXPECT_TRUE(Sources(Generate(spec("rand-sf"))).empty());
      const Digraph sftf = Generate(spec("rand-sftf"));
      EXPECT_TRUE(Sources(sftf).empty() && IsTwinFree(sftf));
      const Digraph dag = Generate(spec("rand-tfdag"));
      EXPECT_TRUE(IsAcyclic(dag) && IsTwinFree(dag));
      const Digraph one = Generate(spec("rand-1stf"));
      EXPECT_EQ(Sources(one).size(), 1u);
      EXPECT_TRUE(IsTwinFree(one));
    }
  }
}

TEST(GenerateTest, SeedsAreReproducible) {
  FamilySpec a = ParseFamilySpec("rand-digraph:n=30,p=1/3,seed=4");
  EXPECT_EQ(Generate(a).arcs(), Generate(a).arcs());
  FamilySpec b = a;
  b.seed = 5;
  EXPECT_NE(Generate(a).arcs(), Generate(b).arcs());
  const Digraph empty = Generate(ParseFamilySpec("rand-digraph:n=10,p=0/1"));
  EXPECT_EQ(empty.arc_count(), 0);
  const Digraph full = Generate(ParseFamilySpec("rand-digraph:n=10,p=1/1"));
  EXPECT_EQ(full.arc_count(), 90);
}

TEST(EnumeratorTest, CountsAndOrder) {
  DigraphEnumerator e(3);
  EXPECT_EQ(e.count(), 64u);
  Digraph g;
  uint64_t seen = 0;
  while (e.Next(&g)) {
    EXPECT_EQ(g.arcs(), e.At(seen).arcs());
    ++seen;
  }
  EXPECT_EQ(seen, 64u);
  // Bit 0 is the pair (0, 1); bit 1 is (0, 2); bit 2 is (1, 0).
  EXPECT_EQ(e.At(0b101).arcs(), (std::vector<Arc>{{0, 1}, {1, 0}}));
  EXPECT_EQ(DigraphEnumerator(0).count(), 1u);
  EXPECT_EQ(DigraphEnumerator(1).count(), 1u);
  EXPECT_EQ(DigraphEnumerator(2).count(), 4u);
  EXPECT_EQ(DigraphEnumerator(4).count(), 4096u);
  EXPECT_EQ(CodeOf([] { DigraphEnumerator e6(6); }), ErrorCode::kTooLarge);
}

TEST(EnumeratorTest, CountsTournamentsAtOrderFour) {
  DigraphEnumerator e(4);
  Digraph g;
  int tournaments = 0;
  while (e.Next(&g)) tournaments += IsTournament(g);
  EXPECT_EQ(tournaments, 64);
}

}  // namespace
}  // namespace ldigraph
