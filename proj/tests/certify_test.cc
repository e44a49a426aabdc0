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


#include "ldigraph/certify.h"

#include <random>

#include <gtest/gtest.h>

#include "ldigraph/error.h"
#include "ldigraph/exact.h"
#include "ldigraph/families.h"
#include "oracle.h"

namespace ldigraph {
namespace {

Digraph C3() { return Digraph::Build(3, {{0, 1}, {1, 2}, {2, 0}}); }
Digraph TwoTriangles() { return Generate(ParseFamilySpec("triangles:k=2")); }

VertexSet RandomSubset(std::mt19937_64& rng, int n) {
  VertexSet s(n);
  for (Vertex v = 0; v < n; ++v) {
    if (rng() & 1) s.insert(v);
  }
  return s;
}

TEST(CertifyTest, Domination) {
  EXPECT_TRUE(IsDominating(C3(), VertexSet(3, {0, 1})).valid);
  const Certificate bad = IsDominating(C3(), VertexSet(3, {0}));
  EXPECT_FALSE(bad.valid);
  ASSERT_TRUE(bad.witness.has_value());
  EXPECT_EQ(*bad.witness, (Witness{Witness::Kind::kUndominated, 2}));
  EXPECT_TRUE(IsDominating(C3(), VertexSet::Full(3)).valid);
  EXPECT_FALSE(IsDominating(C3(), VertexSet::Full(3)).witness.has_value());
}

TEST(CertifyTest, Location) {
  const Digraph tt5 = Generate(ParseFamilySpec("tt:n=5"));
  EXPECT_TRUE(IsLocating(tt5, VertexSet(5, {1, 3})).valid);
  const Certificate empty = IsLocating(C3(), VertexSet(3));
  EXPECT_FALSE(empty.valid);
  EXPECT_EQ(*empty.witness, (Witness{Witness::Kind::kUnlocated, 0, 1}));
  for (Vertex v = 0; v < 5; ++v) {
    VertexSet all_but = VertexSet::Full(5);
    all_but.erase(v);
    EXPECT_TRUE(IsLocating(tt5, all_but).valid);
  }
}

TEST(CertifyTest, LocationDomination) {
  const Digraph g1 = Generate(ParseFamilySpec("gk:k=1"));
  EXPECT_TRUE(IsLocatingDominating(g1, VertexSet(5, {4, 0})).valid);
  const Digraph star = Generate(ParseFamilySpec("star:n=6,pattern=ioobb"));
  EXPECT_TRUE(IsLocatingDominating(star, VertexSet(6, {1, 2, 3, 4, 5})).valid);
  EXPECT_FALSE(IsLocatingDominating(C3(), VertexSet(3, {0})).valid);
  EXPECT_EQ(Certify(C3(), VertexSet(3, {0}), Claim::kLocatingDominating).claim,
            Claim::kLocatingDominating);
}

TEST(CertifyTest, ClaimNames) {
  for (Claim c : {Claim::kDominating, Claim::kLocating,
                  Claim::kLocatingDominating}) {
    EXPECT_EQ(ParseClaim(ClaimName(c)), c);
  }
  EXPECT_FALSE(ParseClaim("identifying").has_value());
}

TEST(CertifyTest, UniverseMismatchIsRejected) {
  EXPECT_THROW(IsDominating(C3(), VertexSet(4)), Error);
}

// Verdicts and canonical witnesses agree with a from-scratch check.
TEST(CertifyTest, AgreesWithOracleOnRandomSets) {
  std::mt19937_64 rng(5);
  for (int round = 0; round < 400; ++round) {
    FamilySpec spec = ParseFamilySpec("rand-digraph:n=9,p=1/3");
    spec.seed = round;
    const Digraph g = Generate(spec);
    const oracle::Matrix m(g);
    const VertexSet s = RandomSubset(rng, 9);
    const Certificate d = IsDominating(g, s);
    const Certificate l = IsLocating(g, s);
    const Certificate ld = IsLocatingDominating(g, s);
    ASSERT_EQ(d.valid, oracle::Valid(m, s.mask(), oracle::Kind::kDominating));
    ASSERT_EQ(l.valid, oracle::Valid(m, s.mask(), oracle::Kind::kLocating));
    ASSERT_EQ(ld.valid, d.valid && l.valid);

    if (!d.valid) {
      Vertex least = -1;
      for (Vertex v = 0; v < 9 && least < 0; ++v) {
        if (!s.contains(v) && m.Trace(v, s.mask()) == 0) least = v;
      }
      ASSERT_EQ(d.witness->first, least);
      ASSERT_EQ(*ld.witness, *d.witness);
    }
    if (!l.valid) {
      std::pair<Vertex, Vertex> least{-1, -1};
      for (Vertex u = 0; u < 9 && least.first < 0; ++u) {
        for (Vertex v = u + 1; v < 9 && least.first < 0; ++v) {
          if (!s.contains(u) && !s.contains(v) &&
              m.Trace(u, s.mask()) == m.Trace(v, s.mask())) {
            least = {u, v};
          }
        }
      }
      ASSERT_EQ(l.witness->first, least.first);
      ASSERT_EQ(l.witness->second, least.second);
    }
  }
}

TEST(CertifyTest, AddingAVertexKeepsLocationDomination) {
  for (uint64_t seed = 0; seed < 100; ++seed) {
    FamilySpec spec = ParseFamilySpec("rand-sftf:n=8,p=1/3");
    spec.seed = seed;
    const Digraph g = Generate(spec);
    const VertexSet d = ExactLd(g).witness;
    for (Vertex v = 0; v < 8; ++v) {
      VertexSet bigger = d;
      bigger.insert(v);
      ASSERT_TRUE(IsLocatingDominating(g, bigger).valid);
    }
  }
}

TEST(CertifyTest, SPartitionExamples) {
  const SPartition p = ComputeSPartition(C3(), VertexSet(3, {0, 1}));
  ASSERT_EQ(p.count(), 1);
  EXPECT_EQ(p.parts[0].members, VertexSet(3, {2}));
  EXPECT_EQ(p.parts[0].trace, VertexSet(3, {1}));
  EXPECT_EQ(p.singletons, 1);
  EXPECT_EQ(p.larger, 0);
  EXPECT_EQ(ComputeSPartition(C3(), VertexSet::Full(3)).count(), 0);

  const SPartition q =
      ComputeSPartition(TwoTriangles(), VertexSet(6, {0, 1, 3, 4}));
  ASSERT_EQ(q.count(), 2);
  EXPECT_EQ(q.parts[0].members, VertexSet(6, {2}));
  EXPECT_EQ(q.parts[0].trace, VertexSet(6, {1}));
  EXPECT_EQ(q.parts[1].members, VertexSet(6, {5}));
  EXPECT_EQ(q.parts[1].trace, VertexSet(6, {4}));
}

TEST(CertifyTest, SPartitionRoundTrip) {
  std::mt19937_64 rng(9);
  for (uint64_t seed = 0; seed < 200; ++seed) {
    FamilySpec spec = ParseFamilySpec("rand-digraph:n=10,p=1/4");
    spec.seed = seed;
    const Digraph g = Generate(spec);
    const VertexSet s = RandomSubset(rng, 10);
    const SPartition p = ComputeSPartition(g, s);
    ASSERT_EQ(p.count(), oracle::CountParts(g, s.mask()));
    ASSERT_EQ(p.singletons + p.larger, p.count());
    VertexSet covered(10);
    Vertex previous_least = -1;
    for (const SPartitionPart& part : p.parts) {
      ASSERT_FALSE(part.members.empty());
      ASSERT_FALSE(part.members.Intersects(covered));
      ASSERT_GT(part.members.front(), previous_least);
      previous_least = part.members.front();
      covered |= part.members;
      for (Vertex v : part.members) ASSERT_EQ(TraceOn(g, v, s), part.trace);
    }
    ASSERT_EQ(covered, s.Complement());
  }
}

TEST(CertifyTest, ExternalPrivateNeighbours) {
  const VertexSet s(3, {0, 1});
  EXPECT_EQ(ExternalPrivateNeighbours(C3(), s, 1), VertexSet(3, {2}));
  EXPECT_TRUE(ExternalPrivateNeighbours(C3(), s, 0).empty());
  EXPECT_TRUE(ExternalPrivateNeighbours(C3(), VertexSet::Full(3), 2).empty());
  try {
    ExternalPrivateNeighbours(C3(), s, 2);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kVertexNotInSet);
  }
}

// Every LD set misses at most one vertex of a class of mutual twins.
TEST(CertifyTest, TwinClassesAreAlmostFullyChosen) {
  for (uint64_t seed = 0; seed < 150; ++seed) {
    FamilySpec spec = ParseFamilySpec("rand-digraph:n=8,p=1/2");
    spec.seed = seed;
    const Digraph g = Generate(spec);
    const oracle::Matrix m(g);
    const auto classes = TwinClasses(g);
    for (uint64_t mask = 0; mask < 256; ++mask) {
      if (!oracle::Valid(m, mask, oracle::Kind::kLd)) continue;
      const VertexSet d = VertexSet::FromMask(8, mask);
      for (const VertexSet& c : classes) {
        ASSERT_GE((c & d).size(), c.size() - 1);
      }
    }
  }
}

}  // namespace
}  // namespace ldigraph
