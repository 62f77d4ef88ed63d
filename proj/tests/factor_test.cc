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

#include "skewmat/factor.h"

#include <gtest/gtest.h>

#include <random>

#include "skewmat/error.h"
#include "test_util.h"

namespace skewmat {
namespace {

using testing::RandomElem;

CommPoly RandomCommPoly(const FieldCtx& f, size_t degree, std::mt19937_64& rng) {
  std::vector<FieldElem> c(degree + 1);
  for (auto& x : c) x = RandomElem(f, rng);
  c.back() = f.one();
  return CommPoly(f, std::move(c));
}

// Irreducible by trial division against every monic polynomial of degree
// at most deg/2.
bool IrreducibleByTrialDivision(const CommPoly& g) {
  const FieldCtx& f = g.field();
  const size_t n = *g.degree();
  const auto elems = f.Elements();
  for (size_t d = 1; 2 * d <= n; ++d) {
    uint64_t count = 1;
    for (size_t i = 0; i < d; ++i) count *= elems.size();
    for (uint64_t idx = 0; idx < count; ++idx) {
      std::vector<FieldElem> c(d + 1, f.one());
      uint64_t t = idx;
      for (size_t i = 0; i < d; ++i) {
        c[i] = elems[t % elems.size()];
        t /= elems.size();
      }
      if (DivMod(g, CommPoly(f, c)).remainder.is_zero()) return false;
    }
  }
  return true;
}

TEST(Factor, ProductOfFactorsRebuildsInput) {
  std::mt19937_64 rng(31);
  for (const Field& f : {DefaultField(2, 2), DefaultField(3, 2), DefaultField(2, 3),
                         DefaultField(5, 1), DefaultField(2, 1)}) {
    for (int t = 0; t < 60; ++t) {
      CommPoly g = RandomCommPoly(*f, 1 + rng() % 6, rng);
      // Force repeated factors now and then.
      if (t % 3 == 0) g = g * g;
      if (t % 5 == 0) g = Pow(g, f->characteristic());
      const Factorization fac = Factorize(g, t);
      CommPoly prod = CommPoly::Constant(*f, fac.unit);
      for (const Factor& x : fac.factors) {
        ASSERT_TRUE(x.poly.leading().is_one());
        ASSERT_TRUE(IrreducibleByTrialDivision(x.poly)) << FormatCommPoly(x.poly);
        prod = prod * Pow(x.poly, x.multiplicity);
      }
      ASSERT_EQ(prod, g) << FormatCommPoly(g);
      for (size_t i = 1; i < fac.factors.size(); ++i) {
        ASSERT_FALSE(fac.factors[i].poly == fac.factors[i - 1].poly);
      }
    }
  }
}

TEST(Factor, DeterministicForFixedSeed) {
  std::mt19937_64 rng(1);
  const Field f = DefaultField(3, 2);
  const CommPoly g = RandomCommPoly(*f, 8, rng);
  const Factorization a = Factorize(g, 4), b = Factorize(g, 4);
  ASSERT_EQ(a.factors.size(), b.factors.size());
  for (size_t i = 0; i < a.factors.size(); ++i) EXPECT_EQ(a.factors[i].poly, b.factors[i].poly);
}

TEST(Factor, RootsMatchScan) {
  std::mt19937_64 rng(13);
  for (const Field& f : {DefaultField(2, 4), DefaultField(3, 2), DefaultField(7, 1)}) {
    for (int t = 0; t < 40; ++t) {
      const CommPoly g = RandomCommPoly(*f, 1 + rng() % 7, rng);
      std::vector<FieldElem> scan;
      for (const FieldElem& a : f->Elements()) {
        if (g(a).is_zero()) scan.push_back(a);
      }
      ASSERT_EQ(DistinctRoots(g, t), scan);
    }
  }
}

TEST(Factor, Multiplicities) {
  const Field f = DefaultField(2, 2);
  const CommPoly y = CommPoly::Y(*f);
  const CommPoly one = CommPoly::Constant(*f, f->one());
  // y^3 + y = y (y + 1)^2 over GF(4).
  const CommPoly g = y * y * y + y;
  EXPECT_EQ(RootMultiplicity(g, f->zero()), 1u);
  EXPECT_EQ(RootMultiplicity(g, f->one()), 2u);
  EXPECT_EQ(RootMultiplicity(g, f->alpha(1)), 0u);
  EXPECT_EQ(DistinctRoots(g), (std::vector<FieldElem>{f->zero(), f->one()}));
  EXPECT_THROW(Factorize(CommPoly(*f)), Error);
  EXPECT_TRUE(Factorize(one).factors.empty());
}

}  // namespace
}  // namespace skewmat
