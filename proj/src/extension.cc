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

#include "skewmat/extension.h"

#include <numeric>
#include <random>
#include <string>
#include <utility>

#include "skewmat/error.h"
#include "skewmat/factor.h"
#include "skewmat/root_matroid.h"

namespace skewmat {
namespace {

constexpr uint64_t kExhaustiveCheckOrder = 4096;

void RequireZeroDelta(const RingCtx& ring) {
  if (!ring.delta_is_zero()) {
    throw Error(ErrorCode::kDeltaNotZero, "splitting requires delta = 0");
  }
}

void RequireNonzero(const SkewPoly& f) {
  if (f.is_zero()) {
    throw Error(ErrorCode::kZeroPolynomial, "the zero polynomial has no splitting field");
  }
}

size_t LowestIndex(const SkewPoly& f) {
  size_t k = 0;
  while (f.coeff(k).is_zero()) ++k;
  return k;
}

Field ExtensionField(const FieldCtx& base, uint32_t j) {
  if (j == 1) return base.shared_from_this();
  const BigInt order = IntPow(BigInt(base.characteristic()), uint64_t{base.degree()} * j);
  if (order > TableCap()) {
    throw Error(ErrorCode::kTableCapExceeded,
                "extension of degree " + std::to_string(j) + " has order " +
                    order.str() + ", above the table cap");
  }
  return DefaultField(base.characteristic(), base.degree() * j);
}

void CheckEmbedding(const RingEmbedding& emb) {
  const RingCtx& small = emb.small();
  const RingCtx& big = emb.big();
  std::vector<FieldElem> sample;
  const FieldCtx& field = small.field_ctx();
  if (field.order() <= kExhaustiveCheckOrder) {
    sample = field.Elements();
  } else {
    std::mt19937_64 rng(field.order());
    for (int i = 0; i < 256; ++i) {
      sample.push_back(field.alpha(static_cast<int64_t>(rng() % field.unit_order())));
    }
  }
  for (const FieldElem& a : sample) {
    const FieldElem b = emb.Lift(a);
    if (big.Sigma(b) != emb.Lift(small.Sigma(a)) ||
        big.SigmaInv(b) != emb.Lift(small.SigmaInv(a)) ||
        big.Delta(b) != emb.Lift(small.Delta(a))) {
      throw Error(ErrorCode::kInternal,
                  "extended ring does not restrict to the base ring");
    }
  }
}

}  // namespace

SkewPoly RingEmbedding::Lift(const SkewPoly& f) const {
  std::vector<FieldElem> v;
  v.reserve(f.coeffs().size());
  for (const FieldElem& c : f.coeffs()) v.push_back(elem_map_(c));
  return SkewPoly(*big_, std::move(v));
}

std::vector<FieldElem> RingEmbedding::Lift(std::span<const FieldElem> z) const {
  std::vector<FieldElem> out;
  out.reserve(z.size());
  for (const FieldElem& a : z) out.push_back(elem_map_(a));
  return out;
}

RingEmbedding ExtendRing(const Ring& ring, uint32_t k) {
  if (k == 0) throw Error(ErrorCode::kInvalidArgument, "extension degree must be >= 1");
  const Field big_field = ExtensionField(ring->field_ctx(), k);
  FieldEmbedding map = FieldEmbedding::Create(ring->field(), big_field);
  std::optional<FieldElem> d;
  if (!ring->delta_is_zero()) d = map(ring->delta_parameter());
  const Ring big = RingCtx::Create(big_field, ring->base_degree(), d,
                                   ring->sigma_power());
  RingEmbedding emb(ring, big, std::move(map), k);
  CheckEmbedding(emb);
  return emb;
}

FieldElem Eta(const FieldElem& d, const FieldElem& a, const RingCtx& ring) {
  return d * (a - ring.Sigma(a));
}

bool EvalPreserved(const SkewPoly& f, const FieldElem& a,
                   const RingEmbedding& emb) {
  const SkewPoly g = emb.Lift(f);
  const FieldElem b = emb.Lift(a);
  return EvalRight(g, b) == emb.Lift(EvalRight(f, a)) &&
         EvalLeft(g, b) == emb.Lift(EvalLeft(f, a));
}

bool IndependencePreserved(std::span<const FieldElem> z,
                           const RingEmbedding& emb, Side side) {
  RequireZeroDelta(emb.small());
  const std::vector<FieldElem> lifted = emb.Lift(z);
  const SkewPoly mu = MinPoly(z, emb.small(), side);
  const SkewPoly mu_big = MinPoly(lifted, emb.big(), side);
  return IsIndependent(z, emb.small(), side) ==
             IsIndependent(lifted, emb.big(), side) &&
         emb.Lift(mu) == mu_big;
}

uint32_t SplittingDegree(const SkewPoly& f, uint64_t seed) {
  RequireNonzero(f);
  const CommPoly fbar = RightEvalPoly(f);
  uint32_t l = 1;
  for (const Factor& fac : Factorize(fbar, seed).factors) {
    l = std::lcm(l, static_cast<uint32_t>(*fac.poly.degree()));
  }
  return l;
}

uint64_t CountNonzeroRootsByScan(const SkewPoly& f, uint32_t j) {
  const FieldCtx& base = f.ring().field_ctx();
  const Field ext = ExtensionField(base, j);
  const FieldEmbedding map = FieldEmbedding::Create(f.ring().field(), ext);
  const CommPoly fbar = Lift(RightEvalPoly(f), map);
  uint64_t count = 0;
  for (const FieldElem& a : ext->Elements()) {
    if (!a.is_zero() && fbar(a).is_zero()) ++count;
  }
  return count;
}

RingEmbedding SplittingField(const SkewPoly& f, uint64_t seed) {
  RequireNonzero(f);
  const RingCtx& ring = f.ring();
  RequireZeroDelta(ring);
  const uint32_t l = SplittingDegree(f, seed);
  const BigInt order = IntPow(BigInt(ring.field_ctx().order()), l);
  if (order > TableCap()) {
    throw Error(ErrorCode::kTableCapExceeded,
                "splitting field needs degree " + std::to_string(l) +
                    " over the base field (order " + order.str() +
                    "), above the table cap");
  }
  if (l <= 4 && ring.sigma_base() > 1) {
    const size_t n = *f.degree();
    const BigInt expected = GeometricSum(n - LowestIndex(f), BigInt(ring.sigma_base()));
    uint32_t first = 0;
    for (uint32_t j = 1; j <= l && first == 0; ++j) {
      if (CountNonzeroRootsByScan(f, j) == expected) first = j;
    }
    if (first != l) {
      throw Error(ErrorCode::kInternal,
                  "splitting degree " + std::to_string(l) +
                      " disagrees with the root scan (" + std::to_string(first) + ")");
    }
  }
  return ExtendRing(ring.shared(), l);
}

RootReport MakeRootReport(const SkewPoly& f, uint64_t seed) {
  RequireNonzero(f);
  const RingCtx& ring = f.ring();
  RequireZeroDelta(ring);
  RingEmbedding emb = SplittingField(f, seed);
  RootReport rep{.poly = f, .splitting = emb, .roots = {}, .class_rep = {},
                 .expected_count = 0, .expected_multiplicity = 0};
  rep.n = *f.degree();
  rep.k0 = LowestIndex(f);
  rep.splitting_degree = emb.k();
  const BigInt base(ring.sigma_base());
  rep.expected_count = GeometricSum(rep.n - rep.k0, base);
  rep.expected_multiplicity = IntPow(base, rep.k0);

  const CommPoly fbar = RightEvalPoly(f);
  const CommPoly big_fbar = RightEvalPoly(emb.Lift(f));
  if (!(big_fbar == Lift(fbar, emb.elem_map()))) {
    throw Error(ErrorCode::kInternal, "evaluation polynomial changed under lifting");
  }
  const FieldCtx& big_field = emb.big().field_ctx();
  rep.zero_multiplicity = RootMultiplicity(big_fbar, big_field.zero());
  for (const FieldElem& r : DistinctRoots(big_fbar, seed)) {
    if (r.is_zero()) continue;
    rep.roots.push_back({r, RootMultiplicity(big_fbar, r)});
  }

  rep.count_ok = BigInt(rep.roots.size()) == rep.expected_count;
  rep.multiplicity_ok = true;
  rep.single_class_ok = true;
  for (const RootMult& rm : rep.roots) {
    if (BigInt(rm.multiplicity) != rep.expected_multiplicity) rep.multiplicity_ok = false;
    const FieldElem cls = ClassRep(rm.root, emb.big());
    if (rm.root == rep.roots.front().root) rep.class_rep = cls;
    if (cls != rep.class_rep) rep.single_class_ok = false;
  }

  const FieldCtx& field = ring.field_ctx();
  const CommPoly y = CommPoly::Y(field);
  rep.derivative_ok =
      fbar == y * fbar.Derivative() + CommPoly::Constant(field, f.coeff(0));

  const auto k0 = static_cast<int64_t>(rep.k0);
  std::vector<FieldElem> shifted;
  for (size_t i = rep.k0; i <= rep.n; ++i) {
    shifted.push_back(ring.SigmaPow(f.coeff(i), -k0));
  }
  const CommPoly inner = RightEvalPoly(SkewPoly(ring, shifted));
  const CommPoly y_power = CommPoly::Monomial(
      field, field.one(), static_cast<size_t>(GeometricSum(rep.k0, base)));
  rep.bracket_ok =
      fbar == y_power * Pow(inner, static_cast<uint64_t>(rep.expected_multiplicity));
  rep.inner_squarefree_ok = Gcd(inner, inner.Derivative()).is_one();
  rep.left_factor_ok = DividesLeft(SkewPoly::Monomial(ring, field.one(), rep.k0), f);
  return rep;
}

bool BracketIdentity(uint64_t s, const BigInt& q) {
  const BigInt lhs = (q - 1) * Bracket(s, q);
  const BigInt qs = IntPow(q, s);
  return lhs == qs - 1 && lhs < qs;
}

}  // namespace skewmat
