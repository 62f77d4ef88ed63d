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

#include "skewmat/skew_ring.h"

#include <gtest/gtest.h>

#include <random>

#include "skewmat/error.h"
#include "test_util.h"

namespace skewmat {
namespace {

using testing::Gf9Example;
using testing::RandomElem;
using testing::RandomPoly;

SkewPoly P(const char* text, const RingCtx& ring) { return ParsePoly(text, ring); }

TEST(SkewRing, WorkedExampleProducts) {
  const Ring r = RingCtx::Create(Gf9Example());
  EXPECT_EQ(FormatPoly(P("x + 1", *r) * P("x + a", *r)), "x^2 + a^6*x + a");
  EXPECT_EQ(FormatPoly(P("x + a", *r) * P("x + 1", *r)), "x^2 + a^2*x + a");
}

TEST(SkewRing, WorkedExampleDivision) {
  const Ring r = RingCtx::Create(Gf9Example());
  const SkewPoly f = P("x^2 + a^5*x + a^7", *r);
  const SkewPoly g = P("x - 1", *r);
  const DivModResult right = DivModRight(f, g);
  EXPECT_EQ(FormatPoly(right.quotient), "x + a^3");
  EXPECT_TRUE(right.remainder.is_zero());
  const DivModResult left = DivModLeft(f, g);
  EXPECT_EQ(FormatPoly(left.quotient), "x + a");
  EXPECT_EQ(FormatPoly(left.remainder), "a^6");
}

TEST(SkewRing, CommutationRule) {
  for (const Field& f : {DefaultField(3, 2), DefaultField(2, 3)}) {
    for (const FieldElem& d : {f->zero(), f->alpha(1)}) {
      const Ring r = RingCtx::Create(f, 1, d);
      const SkewPoly x = SkewPoly::X(*r);
      for (const FieldElem& a : f->Elements()) {
        const SkewPoly lhs = x * SkewPoly::Constant(*r, a);
        const SkewPoly rhs = SkewPoly::Monomial(*r, r->Sigma(a), 1) +
                             SkewPoly::Constant(*r, r->Delta(a));
        ASSERT_EQ(lhs, rhs);
      }
    }
  }
}

TEST(SkewRing, RingAxiomsOnRandomPolys) {
  std::mt19937_64 rng(11);
  for (const Field& f : {DefaultField(3, 2), DefaultField(2, 3), DefaultField(2, 4)}) {
    for (const FieldElem& d : {f->zero(), f->alpha(3)}) {
      const Ring r = RingCtx::Create(f, 1, d);
      for (int t = 0; t < 60; ++t) {
        const SkewPoly a = RandomPoly(*r, rng() % 4, rng);
        const SkewPoly b = RandomPoly(*r, rng() % 4, rng);
        const SkewPoly c = RandomPoly(*r, rng() % 4, rng);
        ASSERT_EQ((a * b) * c, a * (b * c));
        ASSERT_EQ(a * (b + c), a * b + a * c);
        ASSERT_EQ((a + b) * c, a * c + b * c);
        ASSERT_EQ(*(a * b).degree(), *a.degree() + *b.degree());
      }
    }
  }
}

TEST(SkewRing, DivisionIdentities) {
  std::mt19937_64 rng(5);
  for (const Field& f : {DefaultField(3, 2), DefaultField(2, 3), DefaultField(5, 2)}) {
    for (const FieldElem& d : {f->zero(), f->alpha(2)}) {
      const Ring r = RingCtx::Create(f, 1, d);
      for (int t = 0; t < 80; ++t) {
        const SkewPoly a = RandomPoly(*r, rng() % 6, rng);
        const SkewPoly g = RandomPoly(*r, 1 + rng() % 3, rng);
        const DivModResult right = DivModRight(a, g);
        ASSERT_EQ(right.quotient * g + right.remainder, a);
        const DivModResult left = DivModLeft(a, g);
        ASSERT_EQ(g * left.quotient + left.remainder, a);
        if (!left.remainder.is_zero()) ASSERT_LT(*left.remainder.degree(), *g.degree());
        if (!right.remainder.is_zero()) ASSERT_LT(*right.remainder.degree(), *g.degree());
        ASSERT_TRUE(DividesRight(g, a * g));
        ASSERT_TRUE(DividesLeft(g, g * a));
      }
    }
  }
}

TEST(SkewRing, DivisionByZeroThrows) {
  const Ring r = RingCtx::Create(Gf9Example());
  EXPECT_THROW(DivModRight(P("x", *r), SkewPoly(*r)), Error);
  EXPECT_THROW(DivModLeft(P("x", *r), SkewPoly(*r)), Error);
}

TEST(SkewRing, RightCoefficientsRoundTrip) {
  std::mt19937_64 rng(3);
  const Field f = DefaultField(2, 4);
  for (const FieldElem& d : {f->zero(), f->alpha(5)}) {
    const Ring r = RingCtx::Create(f, 1, d);
    for (int t = 0; t < 50; ++t) {
      const SkewPoly a = RandomPoly(*r, rng() % 5, rng);
      const auto c = RightCoeffs(a);
      ASSERT_EQ(FromRightCoeffs(*r, c), a);
      SkewPoly sum(*r);
      SkewPoly xi = SkewPoly::Constant(*r, f->one());
      for (const FieldElem& ci : c) {
        sum = sum + xi * SkewPoly::Constant(*r, ci);
        xi = MulX(xi);
      }
      ASSERT_EQ(sum, a);
    }
  }
}

TEST(SkewRing, SubfieldAndSigmaPower) {
  const Field f = DefaultField(2, 4);
  const Ring r = RingCtx::Create(f, 2);
  EXPECT_EQ(r->q(), 4u);
  EXPECT_EQ(r->m(), 2u);
  for (const FieldElem& a : f->Elements()) EXPECT_EQ(r->Sigma(a), Pow(a, 4));
  EXPECT_THROW(RingCtx::Create(f, 3), Error);

  const Ring r3 = RingCtx::Create(DefaultField(2, 3), 1, std::nullopt, 2);
  EXPECT_EQ(r3->sigma_base(), 4u);
  EXPECT_EQ(r3->sigma_inverse_base(), 2u);
  EXPECT_EQ(r3->dual().sigma_power(), 1u);
}

TEST(SkewRing, DeltaIsSigmaDerivation) {
  const Field f = DefaultField(3, 3);
  const Ring r = RingCtx::Create(f, 1, f->alpha(7));
  std::mt19937_64 rng(1);
  for (int t = 0; t < 500; ++t) {
    const FieldElem a = RandomElem(*f, rng), b = RandomElem(*f, rng);
    ASSERT_EQ(r->Delta(a * b), r->Sigma(a) * r->Delta(b) + r->Delta(a) * b);
    ASSERT_EQ(r->Delta(a + b), r->Delta(a) + r->Delta(b));
  }
}

TEST(SkewRing, TextRoundTrip) {
  const Ring r = RingCtx::Create(Gf9Example());
  std::mt19937_64 rng(2);
  for (int t = 0; t < 100; ++t) {
    const SkewPoly a = RandomPoly(*r, rng() % 5, rng);
    ASSERT_EQ(ParsePoly(FormatPoly(a), *r), a);
  }
  EXPECT_EQ(FormatPoly(SkewPoly(*r)), "0");
  EXPECT_EQ(P("x - 1", *r), P("x + a^4", *r));
  EXPECT_EQ(P("x + x", *r), P("2*x", *r));
  EXPECT_EQ(FormatPoly(P("a^3*x^3 + [1,1]", *r)), "a^3*x^3 + a^2");
  EXPECT_THROW(P("x +", *r), Error);
  EXPECT_THROW(P("y^2", *r), Error);
}

}  // namespace
}  // namespace skewmat
