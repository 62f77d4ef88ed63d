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

#include <algorithm>
#include <utility>

#include "skewmat/error.h"

namespace skewmat {
namespace {

CommPoly One(const FieldCtx& field) {
  return CommPoly::Constant(field, field.one());
}

size_t Deg(const CommPoly& f) { return f.degree().value_or(0); }

CommPoly Quotient(const CommPoly& f, const CommPoly& g) {
  return DivMod(f, g).quotient;
}

// g with g^p = f, for f whose exponents are all multiples of p.
CommPoly PthRoot(const CommPoly& f) {
  const FieldCtx& field = f.field();
  const uint32_t p = field.characteristic();
  std::vector<FieldElem> v;
  for (size_t i = 0; i < f.coeffs().size(); i += p) {
    v.push_back(field.FrobeniusP(f.coeffs()[i], -1));
  }
  return CommPoly(field, std::move(v));
}

FieldElem RandomElement(const FieldCtx& field, std::mt19937_64& rng) {
  const uint64_t i = rng() % field.order();
  return i == 0 ? field.zero() : field.alpha(static_cast<int64_t>(i - 1));
}

bool FactorLess(const Factor& a, const Factor& b) {
  if (Deg(a.poly) != Deg(b.poly)) return Deg(a.poly) < Deg(b.poly);
  const auto ca = a.poly.coeffs(), cb = b.poly.coeffs();
  for (size_t i = 0; i < ca.size(); ++i) {
    if (ca[i] != cb[i]) return ca[i] < cb[i];
  }
  return a.multiplicity < b.multiplicity;
}

uint64_t MixSeed(const CommPoly& f, uint64_t seed) {
  // FNV-1a over the coefficient keys.
  uint64_t h = 1469598103934665603ull ^ seed;
  for (const FieldElem& c : f.coeffs()) {
    h ^= c.key();
    h *= 1099511628211ull;
  }
  return h;
}

// Trace-like map used to split in characteristic 2: a + a^2 + ... +
// a^{2^{nd-1}} mod f, where the coefficient field has 2^n elements.
CommPoly TraceMap(const CommPoly& a, uint64_t steps, const CommPoly& f) {
  CommPoly term = DivMod(a, f).remainder;
  CommPoly sum = term;
  for (uint64_t i = 1; i < steps; ++i) {
    term = DivMod(term * term, f).remainder;
    sum = sum + term;
  }
  return sum;
}

}  // namespace

std::vector<Factor> SquareFreeFactorization(const CommPoly& f) {
  if (f.is_zero()) {
    throw Error(ErrorCode::kZeroPolynomial, "factoring the zero polynomial");
  }
  const FieldCtx& field = f.field();
  std::vector<Factor> out;
  CommPoly g = f.Monic();
  if (Deg(g) == 0) return out;
  CommPoly c = Gcd(g, g.Derivative());
  CommPoly w = Quotient(g, c);
  uint32_t i = 1;
  while (!w.is_one()) {
    const CommPoly y = Gcd(w, c);
    const CommPoly fac = Quotient(w, y);
    if (!fac.is_one()) out.push_back({fac, i});
    w = y;
    c = Quotient(c, y);
    ++i;
  }
  if (!c.is_one()) {
    for (Factor& sub : SquareFreeFactorization(PthRoot(c))) {
      sub.multiplicity *= field.characteristic();
      out.push_back(std::move(sub));
    }
  }
  return out;
}

std::vector<Factor> DistinctDegreeFactorization(const CommPoly& f) {
  const FieldCtx& field = f.field();
  std::vector<Factor> out;
  CommPoly rest = f.Monic();
  const CommPoly y = CommPoly::Y(field);
  CommPoly h = DivMod(y, rest).remainder;
  for (uint32_t d = 1; 2 * d <= Deg(rest); ++d) {
    h = PowMod(h, BigInt(field.order()), rest);
    const CommPoly g = Gcd(h - y, rest);
    if (!g.is_one()) {
      out.push_back({g, d});
      rest = Quotient(rest, g);
      h = DivMod(h, rest).remainder;
    }
  }
  if (Deg(rest) > 0) out.push_back({rest, static_cast<uint32_t>(Deg(rest))});
  return out;
}

std::vector<CommPoly> EqualDegreeFactorization(const CommPoly& f, uint32_t d,
                                               std::mt19937_64& rng) {
  const FieldCtx& field = f.field();
  const size_t n = Deg(f);
  if (n == d) return {f.Monic()};
  if (d == 0 || n % d != 0) {
    throw Error(ErrorCode::kInvalidArgument, "degree is not a multiple of d");
  }
  const BigInt half = (IntPow(BigInt(field.order()), d) - 1) / 2;
  const bool even = field.characteristic() == 2;
  for (;;) {
    std::vector<FieldElem> v(n);
    for (auto& c : v) c = RandomElement(field, rng);
    const CommPoly a(field, std::move(v));
    if (Deg(a) == 0) continue;
    CommPoly b = even ? TraceMap(a, uint64_t{field.degree()} * d, f)
                      : PowMod(a, half, f) - One(field);
    const CommPoly g = Gcd(b, f);
    if (Deg(g) == 0 || Deg(g) == n) continue;
    std::vector<CommPoly> out = EqualDegreeFactorization(g, d, rng);
    for (CommPoly& h : EqualDegreeFactorization(Quotient(f, g), d, rng)) {
      out.push_back(std::move(h));
    }
    return out;
  }
}

Factorization Factorize(const CommPoly& f, uint64_t seed) {
  if (f.is_zero()) {
    throw Error(ErrorCode::kZeroPolynomial, "factoring the zero polynomial");
  }
  std::mt19937_64 rng(MixSeed(f, seed));
  Factorization out{f.leading(), {}};
  for (const Factor& sq : SquareFreeFactorization(f)) {
    for (const Factor& dd : DistinctDegreeFactorization(sq.poly)) {
      for (CommPoly& irr : EqualDegreeFactorization(dd.poly, dd.multiplicity, rng)) {
        out.factors.push_back({std::move(irr), sq.multiplicity});
      }
    }
  }
  std::sort(out.factors.begin(), out.factors.end(), FactorLess);
  return out;
}

std::vector<FieldElem> DistinctRoots(const CommPoly& f, uint64_t seed) {
  if (f.is_zero()) {
    throw Error(ErrorCode::kZeroPolynomial, "roots of the zero polynomial");
  }
  const FieldCtx& field = f.field();
  const CommPoly y = CommPoly::Y(field);
  const CommPoly g = Gcd(PowMod(y, BigInt(field.order()), f) - y, f);
  std::vector<FieldElem> roots;
  if (Deg(g) == 0) return roots;
  std::mt19937_64 rng(MixSeed(f, seed));
  for (const CommPoly& lin : EqualDegreeFactorization(g, 1, rng)) {
    roots.push_back(-lin.coeff(0));
  }
  std::sort(roots.begin(), roots.end());
  return roots;
}

uint32_t RootMultiplicity(const CommPoly& f, const FieldElem& r) {
  if (f.is_zero()) {
    throw Error(ErrorCode::kZeroPolynomial, "multiplicity in the zero polynomial");
  }
  const CommPoly lin = CommPoly::Y(f.field()) -
                       CommPoly::Constant(f.field(), r);
  CommPoly g = f;
  uint32_t j = 0;
  for (;;) {
    CommDivModResult qr = DivMod(g, lin);
    if (!qr.remainder.is_zero()) return j;
    g = std::move(qr.quotient);
    ++j;
  }
}

}  // namespace skewmat
