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

#include "skewmat/evaluation.h"

#include <gtest/gtest.h>

#include <random>

#include "skewmat/error.h"
#include "test_util.h"

namespace skewmat {
namespace {

using testing::ForEachPoly;
using testing::Gf9Example;
using testing::RandomElem;
using testing::RandomPoly;

TEST(Evaluation, WorkedExample) {
  const Ring r = RingCtx::Create(Gf9Example());
  const SkewPoly f = ParsePoly("x^2 + a^5*x + a^7", *r);
  const FieldElem one = r->field_ctx().one();
  EXPECT_TRUE(EvalRight(f, one).is_zero());
  EXPECT_EQ(FormatElement(EvalLeft(f, one)), "a^6");
}

TEST(Evaluation, ThreeWaysAgreeOnGf4) {
  const Ring r = testing::RingOver(2, 2);
  const auto elems = r->field_ctx().Elements();
  ForEachPoly(*r, 2, [&](const SkewPoly& f) {
    const CommPoly fr = RightEvalPoly(f), fl = LeftEvalPoly(f);
    for (const FieldElem& a : elems) {
      ASSERT_EQ(EvalRightBySum(f, a), EvalRightByDivision(f, a));
      ASSERT_EQ(EvalRightBySum(f, a), fr(a));
      ASSERT_EQ(EvalLeftBySum(f, a), EvalLeftByDivision(f, a));
      ASSERT_EQ(EvalLeftBySum(f, a), fl(a));
    }
  });
}

TEST(Evaluation, RecursionsMatchDivisionWithDerivation) {
  std::mt19937_64 rng(17);
  for (const Field& field : {DefaultField(3, 2), DefaultField(2, 4), DefaultField(5, 2)}) {
    const Ring r = RingCtx::Create(field, 1, field->alpha(1));
    for (int t = 0; t < 200; ++t) {
      const SkewPoly f = RandomPoly(*r, rng() % 5, rng);
      const FieldElem a = RandomElem(*field, rng);
      ASSERT_EQ(EvalRightBySum(f, a), EvalRightByDivision(f, a));
      ASSERT_EQ(EvalLeftBySum(f, a), EvalLeftByDivision(f, a));
    }
    EXPECT_THROW(RightEvalPoly(SkewPoly::X(*r)), Error);
    EXPECT_THROW(LeftEvalPoly(SkewPoly::X(*r)), Error);
  }
}

TEST(Evaluation, ClosedFormsOfSequences) {
  const Ring r = testing::RingOver(2, 3);
  for (const FieldElem& a : r->field_ctx().Elements()) {
    for (uint64_t i = 0; i < 6; ++i) {
      ASSERT_EQ(NSeq(a, i, *r), Pow(a, Bracket(i, 2)));
      ASSERT_EQ(MSeq(a, i, *r), Pow(a, Cobracket(i, 2, 3)));
    }
  }
}

TEST(Evaluation, BracketValues) {
  EXPECT_EQ(Bracket(0, 3), 0);
  EXPECT_EQ(Bracket(2, 3), 4);
  EXPECT_EQ(Bracket(3, 2), 7);
  EXPECT_EQ(Cobracket(2, 2, 3), 5);
  EXPECT_EQ(Cobracket(3, 3, 2), 13);
  EXPECT_EQ(GeometricSum(4, 1), 4);
  EXPECT_THROW(Cobracket(2, 3, 1), Error);
  EXPECT_THROW(Bracket(2, 1), Error);
}

TEST(Evaluation, LeftIsRightInDualRing) {
  std::mt19937_64 rng(4);
  for (const Field& field : {DefaultField(2, 3), DefaultField(3, 2), DefaultField(2, 4)}) {
    for (const FieldElem& d : {field->zero(), field->alpha(2)}) {
      const Ring r = RingCtx::Create(field, 1, d);
      for (int t = 0; t < 100; ++t) {
        const SkewPoly f = RandomPoly(*r, rng() % 5, rng);
        const SkewPoly g = DualPoly(f);
        ASSERT_EQ(&g.ring(), &r->dual());
        ASSERT_EQ(FromDualPoly(g, *r), f);
        const FieldElem a = RandomElem(*field, rng);
        ASSERT_EQ(EvalLeft(f, a), EvalRight(g, a));
      }
    }
  }
}

TEST(Evaluation, DualOfProductReversesOrder) {
  std::mt19937_64 rng(8);
  const Ring r = testing::RingOver(2, 3);
  for (int t = 0; t < 50; ++t) {
    const SkewPoly f = RandomPoly(*r, rng() % 4, rng);
    const SkewPoly g = RandomPoly(*r, rng() % 4, rng);
    ASSERT_EQ(DualPoly(f * g), DualPoly(g) * DualPoly(f));
  }
}

TEST(Evaluation, ProductRule) {
  std::mt19937_64 rng(21);
  for (const Field& field : {DefaultField(3, 2), DefaultField(2, 4)}) {
    for (const FieldElem& d : {field->zero(), field->alpha(3)}) {
      const Ring r = RingCtx::Create(field, 1, d);
      for (int t = 0; t < 200; ++t) {
        const SkewPoly f = RandomPoly(*r, rng() % 4, rng);
        const SkewPoly g = RandomPoly(*r, rng() % 4, rng);
        const FieldElem a = RandomElem(*field, rng);
        ASSERT_EQ(EvalProduct(f, g, a), EvalRight(f * g, a));
      }
    }
  }
}

TEST(Evaluation, Conjugation) {
  const Ring r = RingCtx::Create(Gf9Example());
  const FieldCtx& f = r->field_ctx();
  // a^c = a c^2 over GF(9) with q = 3.
  EXPECT_EQ(Conj(f.one(), f.alpha(1), *r), f.alpha(2));
  EXPECT_EQ(Conj(f.alpha(3), f.one(), *r), f.alpha(3));
  EXPECT_THROW(Conj(f.one(), f.zero(), *r), Error);
}

TEST(Evaluation, SideNames) {
  EXPECT_EQ(ParseSide("left"), Side::kLeft);
  EXPECT_EQ(ParseSide("right"), Side::kRight);
  EXPECT_EQ(SideName(Side::kLeft), "left");
  EXPECT_THROW(ParseSide("up"), Error);
}

}  // namespace
}  // namespace skewmat
