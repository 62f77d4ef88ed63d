// Copyright 2026 The Authors.
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

#include "skewmat/root_matroid.h"

#include <gtest/gtest.h>

#include <algorithm>
#include <random>
#include <set>
#include <thread>

#include "oracle/oracle.h"
#include "skewmat/error.h"
#include "test_util.h"

namespace skewmat {
namespace {

using testing::ForEachPoly;
using testing::Gf9Example;
using testing::Subset;

class RootsGf9 : public ::testing::Test {
 protected:
  Ring r = RingCtx::Create(Gf9Example());
  const FieldCtx& f = r->field_ctx();
  FieldElem a(int64_t k) const { return f.alpha(k); }
  ElemSet ClassOne() const { return {a(0), a(2), a(4), a(6)}; }
};

TEST_F(RootsGf9, ClassOfOne) {
  EXPECT_EQ(ConjugacyClass(f.one(), *r).members, ClassOne());
  EXPECT_EQ(ConjugacyClass(f.zero(), *r).members, ElemSet{f.zero()});
  EXPECT_EQ(ConjugacyClass(a(5), *r).rep, a(1));
  EXPECT_TRUE(InClassOfOne(a(6), *r));
  EXPECT_FALSE(InClassOfOne(a(3), *r));
  EXPECT_FALSE(InClassOfOne(f.zero(), *r));
}

TEST(Roots, ClassesPartitionTheField) {
  for (auto [p, n] : {std::pair{2u, 2u}, std::pair{2u, 3u}, std::pair{3u, 2u},
                      std::pair{2u, 4u}, std::pair{3u, 3u}}) {
    const Ring r = testing::RingOver(p, n);
    const auto classes = ConjugacyClasses(*r);
    ASSERT_EQ(classes.size(), r->q());  // [0] plus q - 1 cosets
    std::set<uint32_t> seen;
    for (size_t i = 1; i < classes.size(); ++i) {
      EXPECT_EQ(BigInt(classes[i].members.size()), Bracket(r->m(), r->q()));
      for (const FieldElem& x : classes[i].members) {
        seen.insert(x.key());
        // members = rep * c^{q-1}
        EXPECT_EQ(ClassRep(x, *r), classes[i].rep);
      }
    }
    EXPECT_EQ(seen.size() + 1, r->field_ctx().order());
  }
  EXPECT_EQ(ConjugacyClasses(*testing::RingOver(2, 3))[1].members.size(), 7u);
}

TEST(Roots, ClassesNeedZeroDelta) {
  const Field f = DefaultField(3, 2);
  const Ring r = RingCtx::Create(f, 1, f->alpha(1));
  EXPECT_THROW(ConjugacyClasses(*r), Error);
  EXPECT_THROW(ClosureRight(ElemSet{f->one()}, *r), Error);
  EXPECT_THROW(Matroid(r, Side::kRight), Error);
}

TEST(Roots, LeftAndRightConjugacyCoincide) {
  for (auto [p, n] : {std::pair{3u, 2u}, std::pair{2u, 3u}, std::pair{2u, 4u},
                      std::pair{5u, 2u}}) {
    EXPECT_TRUE(LeftRightConjugacyAgree(*testing::RingOver(p, n)));
  }
}

TEST_F(RootsGf9, MinimalPolynomials) {
  EXPECT_EQ(FormatPoly(MinPolyRight(ElemSet{f.one()}, *r)), "x + a^4");
  EXPECT_EQ(MinPolyRight(ElemSet{}, *r), SkewPoly::Constant(*r, f.one()));
  const ElemSet z = {a(0), a(2)};
  const SkewPoly mu = MinPolyRight(z, *r);
  EXPECT_EQ(*mu.degree(), 2u);
  EXPECT_TRUE(mu.is_monic());
  for (const FieldElem& x : z) EXPECT_TRUE(EvalRight(mu, x).is_zero());
  EXPECT_EQ(mu, oracle::OracleMinPoly(z, *r, Side::kRight));
  EXPECT_EQ(MinPolyLeft(z, *r), mu);  // sigma^{-1} = sigma when m = 2
  EXPECT_EQ(*MinPolyRight(ClassOne(), *r).degree(), 2u);
  for (const FieldElem& x : f.Elements()) {
    EXPECT_EQ(MinPolyLeft(ElemSet{x}, *r), SkewPoly::Linear(*r, x));
  }
}

TEST_F(RootsGf9, Closures) {
  EXPECT_EQ(ClosureRight(ElemSet{f.one()}, *r), ElemSet{f.one()});
  EXPECT_EQ(ClosureRight(ElemSet{a(0), a(2)}, *r), ClassOne());
  EXPECT_EQ(ClosureLeft(ElemSet{a(0), a(2)}, *r), ClassOne());
  EXPECT_TRUE(ClosureRight(ElemSet{}, *r).empty());
}

TEST_F(RootsGf9, SpanClosures) {
  // The (q-1)-th powers of F_3^* collapse to 1.
  EXPECT_EQ(ClosureSpanRight(ElemSet{f.one()}, *r), ElemSet{f.one()});
  EXPECT_EQ(ClosureSpanRight(ElemSet{a(0), a(2)}, *r), ClassOne());
  EXPECT_EQ(ClosureSpanLeft(ElemSet{a(0), a(2)}, *r), ClassOne());
  EXPECT_THROW(ClosureSpanRight(ElemSet{a(1)}, *r), Error);
  EXPECT_THROW(ClosureSpanRight(ElemSet{}, *r), Error);
  for (uint64_t mask = 1; mask < 16; ++mask) {
    const ElemSet z = Subset(ClassOne(), mask);
    const ElemSet span = ClosureSpanRight(z, *r);
    EXPECT_FALSE(std::binary_search(span.begin(), span.end(), f.zero()));
  }
}

TEST(Roots, ClosureOperatorLaws) {
  for (auto [p, n] : {std::pair{2u, 3u}, std::pair{3u, 2u}}) {
    const Ring r = testing::RingOver(p, n);
    const auto elems = r->field_ctx().Elements();
    for (Side side : {Side::kRight, Side::kLeft}) {
      for (uint64_t mask = 0; mask < (uint64_t{1} << elems.size()); mask += 7) {
        const ElemSet z = Subset(elems, mask);
        const ElemSet cl = Closure(z, *r, side);
        ASSERT_TRUE(std::includes(cl.begin(), cl.end(), z.begin(), z.end()));
        ASSERT_EQ(Closure(cl, *r, side), cl);
        ASSERT_EQ(Rank(cl, *r, side), Rank(z, *r, side));
        ASSERT_EQ(IsIndependent(z, *r, side), IsIndependentByClosure(z, *r, side));
        // Every closure element is conjugate to an element of Z.
        for (const FieldElem& x : cl) {
          ASSERT_TRUE(std::any_of(z.begin(), z.end(), [&](const FieldElem& y) {
            return ClassRep(x, *r) == ClassRep(y, *r);
          }));
        }
        const ElemSet sub = Subset(elems, mask & (mask >> 1));
        const ElemSet sub_cl = Closure(sub, *r, side);
        ASSERT_TRUE(std::includes(cl.begin(), cl.end(), sub_cl.begin(), sub_cl.end()));
      }
    }
  }
}

TEST(Roots, MinimalPolynomialDividesVanishingPolynomials) {
  const Ring r = testing::RingOver(2, 2);
  const auto elems = r->field_ctx().Elements();
  for (uint64_t mask = 0; mask < 16; ++mask) {
    const ElemSet z = Subset(elems, mask);
    const SkewPoly mu_r = MinPolyRight(z, *r), mu_l = MinPolyLeft(z, *r);
    ForEachPoly(*r, 3, [&](const SkewPoly& g) {
      bool right = true, left = true;
      for (const FieldElem& x : z) {
        right = right && EvalRight(g, x).is_zero();
        left = left && EvalLeft(g, x).is_zero();
      }
      if (right) ASSERT_TRUE(DividesRight(mu_r, g));
      if (left) ASSERT_TRUE(DividesLeft(mu_l, g));
    });
  }
}

TEST(Roots, InterpolationIsOrderIndependent) {
  const Ring r = testing::RingOver(2, 4);
  const auto elems = r->field_ctx().Elements();
  std::mt19937_64 rng(9);
  for (int t = 0; t < 50; ++t) {
    ElemSet z = Subset(elems, rng() & 0xffff);
    const SkewPoly mu = MinPolyRight(z, *r);
    std::shuffle(z.begin(), z.end(), rng);
    // Interpolate in the shuffled order by hand.
    SkewPoly g = SkewPoly::Constant(*r, r->field_ctx().one());
    for (const FieldElem& x : z) {
      const FieldElem c = EvalRight(g, x);
      if (!c.is_zero()) g = SkewPoly::Linear(*r, Conj(x, c, *r)) * g;
    }
    ASSERT_EQ(g, mu);
  }
}

TEST_F(RootsGf9, RankExamples) {
  EXPECT_EQ(Rank(ElemSet{}, *r, Side::kRight), 0u);
  EXPECT_TRUE(IsIndependent(ElemSet{f.zero()}, *r, Side::kRight));
  EXPECT_TRUE(IsIndependent(ElemSet{f.zero()}, *r, Side::kLeft));
  EXPECT_EQ(Rank(ClassOne(), *r, Side::kRight), 2u);
  EXPECT_FALSE(IsIndependent(ClassOne(), *r, Side::kRight));
  EXPECT_EQ(Rank(ElemSet{f.zero(), f.one()}, *r, Side::kRight), 2u);
}

TEST(Matroid, BasesHaveEqualSize) {
  for (auto [p, n] : {std::pair{2u, 2u}, std::pair{2u, 3u}, std::pair{3u, 2u}}) {
    for (Side side : {Side::kRight, Side::kLeft}) {
      const Matroid m(testing::RingOver(p, n), side);
      const auto bases = m.Bases();
      ASSERT_FALSE(bases.empty());
      for (const ElemSet& b : bases) EXPECT_EQ(b.size(), bases[0].size());
      EXPECT_EQ(m.Closure(m.ground()), m.ground());
    }
  }
}

TEST(Matroid, FlatCountsAgreeAcrossSides) {
  const Ring r = testing::RingOver(2, 3);
  const Matroid right(r, Side::kRight), left(r, Side::kLeft);
  const auto fr = right.Flats(), fl = left.Flats();
  EXPECT_EQ(fr.size(), fl.size());
  for (const ElemSet& flat : fr) EXPECT_EQ(right.Closure(flat), flat);
  EXPECT_EQ(fr.front(), ElemSet{});
}

TEST(Matroid, EnumerationGuard) {
  const Matroid m(testing::RingOver(2, 5), Side::kRight);
  EXPECT_THROW(m.Flats(), Error);
  EXPECT_THROW(m.Bases(), Error);
  const auto& g = m.ground();
  EXPECT_EQ(m.Rank(ElemSet{g[1], g[2]}), 2u);
}

TEST(Matroid, RestrictedGroundSet) {
  const Ring r = RingCtx::Create(Gf9Example());
  const FieldCtx& f = r->field_ctx();
  const ElemSet ground = {f.alpha(0), f.alpha(2), f.alpha(4)};
  const Matroid m(r, Side::kRight, ground);
  EXPECT_EQ(m.Closure(ElemSet{f.alpha(0), f.alpha(2)}), ground);
  EXPECT_THROW(m.Rank(ElemSet{f.alpha(1)}), Error);
  EXPECT_EQ(m.Bases().size(), 3u);
}

TEST(Matroid, ConcurrentRankQueries) {
  const Ring r = testing::RingOver(2, 4);
  const Matroid m(r, Side::kLeft);
  const auto elems = m.ground();
  std::vector<std::thread> workers;
  std::vector<int> bad(4, 0);
  for (int w = 0; w < 4; ++w) {
    workers.emplace_back([&, w] {
      for (uint64_t mask = 0; mask < 2000; ++mask) {
        const ElemSet z = Subset(elems, mask * 37 % 65536);
        if (m.Rank(z) != Rank(z, *r, Side::kLeft)) ++bad[w];
      }
    });
  }
  for (auto& t : workers) t.join();
  for (int b : bad) EXPECT_EQ(b, 0);
  EXPECT_LE(m.memo_size(), 2000u);
}

TEST_F(RootsGf9, GammaMap) {
  for (const FieldElem& x : ClassOne()) EXPECT_EQ(GammaMap(0, x, *r), x);
  EXPECT_EQ(GammaMap(1, f.one(), *r), a(1));
  EXPECT_THROW(GammaMap(2, f.one(), *r), Error);
  EXPECT_THROW(GammaMap(1, a(1), *r), Error);
  for (uint64_t mask = 0; mask < 16; ++mask) {
    const ElemSet z = Subset(ClassOne(), mask);
    ElemSet image;
    for (const FieldElem& x : z) image.push_back(GammaMap(1, x, *r));
    EXPECT_EQ(IsIndependent(z, *r, Side::kRight), IsIndependent(image, *r, Side::kRight));
  }
}

TEST(Roots, PhiExponents) {
  EXPECT_EQ(PhiExponent(*testing::RingOver(2, 3)), 3);
  EXPECT_EQ(PhiExponent(*testing::RingOver(3, 2)), 1);
  EXPECT_EQ(PhiExponent(*testing::RingOver(2, 4)), 7);
  const Ring r8 = testing::RingOver(2, 3);
  for (const FieldElem& x : r8->field_ctx().Elements()) {
    if (!x.is_zero()) EXPECT_EQ(PhiMap(x, *r8), Pow(x, 3));
  }
}

TEST(Roots, PhiAndBigPhiAreClassPreservingBijections) {
  for (auto [p, n] : {std::pair{2u, 3u}, std::pair{3u, 2u}, std::pair{2u, 4u},
                      std::pair{3u, 3u}}) {
    const Ring r = testing::RingOver(p, n);
    std::set<uint32_t> image;
    for (const FieldElem& x : r->field_ctx().Elements()) {
      const FieldElem y = BigPhi(x, *r);
      image.insert(y.key());
      EXPECT_EQ(ClassRep(y, *r), ClassRep(x, *r));
      if (r->m() == 2) EXPECT_EQ(y, x);
    }
    EXPECT_EQ(image.size(), r->field_ctx().order());
  }
  EXPECT_TRUE(BigPhi(DefaultField(2, 3)->zero(), *testing::RingOver(2, 3)).is_zero());
}

TEST(Roots, GeneralSigmaPower) {
  // sigma(a) = a^4 on GF(8).
  const Ring r = RingCtx::Create(DefaultField(2, 3), 1, std::nullopt, 2);
  const auto elems = r->field_ctx().Elements();
  for (uint64_t mask = 0; mask < 256; mask += 3) {
    const ElemSet z = Subset(elems, mask);
    if (z.size() > 3) continue;
    for (Side side : {Side::kRight, Side::kLeft}) {
      ASSERT_EQ(MinPoly(z, *r, side), oracle::OracleMinPoly(z, *r, side));
    }
    ElemSet image;
    for (const FieldElem& x : z) image.push_back(BigPhi(x, *r));
    ASSERT_EQ(IsIndependent(z, *r, Side::kRight), IsIndependent(image, *r, Side::kLeft));
  }
}

}  // namespace
}  // namespace skewmat
