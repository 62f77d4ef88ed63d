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

#include <algorithm>
#include <bit>
#include <iterator>
#include <mutex>
#include <numeric>
#include <string>
#include <tuple>
#include <utility>

#include "skewmat/error.h"

namespace skewmat {
namespace {

void RequireZeroDelta(const RingCtx& ring) {
  if (!ring.delta_is_zero()) {
    throw Error(ErrorCode::kDeltaNotZero, "root structure requires delta = 0");
  }
}

void RequireClassOne(const FieldElem& a, const RingCtx& ring) {
  if (!InClassOfOne(a, ring)) {
    throw Error(ErrorCode::kNotInClassOne,
                FormatElement(a) + " is not conjugate to 1");
  }
}

std::vector<uint32_t> Keys(const ElemSet& z) {
  std::vector<uint32_t> k;
  k.reserve(z.size());
  for (const FieldElem& a : z) k.push_back(a.key());
  return k;
}

// (x - b) f.
SkewPoly LinearTimes(const FieldElem& b, const SkewPoly& f) {
  return MulX(f) - b * f;
}

// Smallest e >= 0 with alpha^{e * exponent} = a.
FieldElem SmallestRoot(const FieldElem& a, uint64_t exponent) {
  const FieldCtx& field = *a.ctx();
  const uint64_t n = field.unit_order();
  const uint64_t step = exponent % n;
  const uint64_t target = a.log();
  for (uint64_t e = 0; e < n; ++e) {
    if (e * step % n == target) return field.alpha(static_cast<int64_t>(e));
  }
  throw Error(ErrorCode::kNotInClassOne, "no root of the required power");
}

ElemSet SpanClosure(std::span<const FieldElem> z, const RingCtx& ring,
                    uint64_t base) {
  RequireZeroDelta(ring);
  const ElemSet zs = Canonicalize(z);
  if (zs.empty()) {
    throw Error(ErrorCode::kInvalidArgument, "span closure of the empty set");
  }
  for (const FieldElem& a : zs) RequireClassOne(a, ring);
  const FieldCtx& field = ring.field_ctx();
  ElemSet scalars;
  for (const FieldElem& c : field.Elements()) {
    if (ring.Sigma(c) == c) scalars.push_back(c);
  }
  const uint64_t power = base - 1;
  std::vector<char> in_span(field.order(), 0);
  ElemSet span = {field.zero()};
  in_span[0] = 1;
  for (const FieldElem& a : zs) {
    const FieldElem b = SmallestRoot(a, power);
    const size_t before = span.size();
    for (size_t i = 0; i < before; ++i) {
      for (const FieldElem& c : scalars) {
        const FieldElem s = span[i] + c * b;
        if (!in_span[s.key()]) {
          in_span[s.key()] = 1;
          span.push_back(s);
        }
      }
    }
  }
  ElemSet out;
  for (const FieldElem& s : span) {
    if (!s.is_zero()) out.push_back(Pow(s, static_cast<int64_t>(power)));
  }
  return Canonicalize(out);
}

int64_t ModInverse(int64_t a, int64_t mod) {
  int64_t g = mod, x = 0, x1 = 1, r = a % mod;
  while (r != 0) {
    const int64_t t = g / r;
    std::tie(g, r) = std::make_pair(r, g - t * r);
    std::tie(x, x1) = std::make_pair(x1, x - t * x1);
  }
  if (g != 1) throw Error(ErrorCode::kInternal, "exponent is not invertible");
  return ((x % mod) + mod) % mod;
}

}  // namespace

ElemSet Canonicalize(std::span<const FieldElem> z) {
  ElemSet out(z.begin(), z.end());
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

uint64_t ClassModulus(const RingCtx& ring) {
  return std::gcd(ring.sigma_base() - 1,
                  uint64_t{ring.field_ctx().unit_order()});
}

FieldElem ClassRep(const FieldElem& a, const RingCtx& ring) {
  RequireZeroDelta(ring);
  if (a.is_zero()) return a;
  return ring.field_ctx().alpha(a.log() % ClassModulus(ring));
}

ConjClass ConjugacyClass(const FieldElem& a, const RingCtx& ring) {
  const FieldElem rep = ClassRep(a, ring);
  if (rep.is_zero()) return {rep, {rep}};
  const FieldCtx& field = ring.field_ctx();
  const uint64_t g = ClassModulus(ring);
  ConjClass cls{rep, {}};
  for (uint64_t e = rep.log(); e < field.unit_order(); e += g) {
    cls.members.push_back(field.alpha(static_cast<int64_t>(e)));
  }
  return cls;
}

std::vector<ConjClass> ConjugacyClasses(const RingCtx& ring) {
  RequireZeroDelta(ring);
  const FieldCtx& field = ring.field_ctx();
  std::vector<ConjClass> out = {ConjugacyClass(field.zero(), ring)};
  const uint64_t g = ClassModulus(ring);
  for (uint64_t i = 0; i < g; ++i) {
    out.push_back(ConjugacyClass(field.alpha(static_cast<int64_t>(i)), ring));
  }
  return out;
}

bool InClassOfOne(const FieldElem& a, const RingCtx& ring) {
  RequireZeroDelta(ring);
  return !a.is_zero() && a.log() % ClassModulus(ring) == 0;
}

bool LeftRightConjugacyAgree(const RingCtx& ring) {
  RequireZeroDelta(ring);
  const FieldCtx& field = ring.field_ctx();
  if (field.order() > 4096) {
    throw Error(ErrorCode::kCapExceeded,
                "pairwise conjugacy check limited to order 4096");
  }
  const ElemSet all = field.Elements();
  const auto right_exp = static_cast<int64_t>(ring.sigma_base()) - 1;
  const auto left_exp = static_cast<int64_t>(ring.sigma_inverse_base()) - 1;
  for (const FieldElem& a : all) {
    std::vector<char> right(field.order(), 0), left(field.order(), 0);
    for (const FieldElem& c : all) {
      if (c.is_zero()) continue;
      right[(a * Pow(c, right_exp)).key()] = 1;
      left[(a * Pow(c, left_exp)).key()] = 1;
    }
    if (right != left) return false;
  }
  return true;
}

SkewPoly MinPolyRight(std::span<const FieldElem> z, const RingCtx& ring) {
  SkewPoly f = SkewPoly::Constant(ring, ring.field_ctx().one());
  for (const FieldElem& a : Canonicalize(z)) {
    const FieldElem c = EvalRight(f, a);
    if (c.is_zero()) continue;
    f = LinearTimes(Conj(a, c, ring), f);
  }
  return f;
}

SkewPoly MinPolyLeft(std::span<const FieldElem> z, const RingCtx& ring) {
  return FromDualPoly(MinPolyRight(z, ring.dual()), ring);
}

SkewPoly MinPoly(std::span<const FieldElem> z, const RingCtx& ring, Side side) {
  return side == Side::kRight ? MinPolyRight(z, ring) : MinPolyLeft(z, ring);
}

ElemSet Closure(std::span<const FieldElem> z, const RingCtx& ring, Side side) {
  RequireZeroDelta(ring);
  if (z.empty()) return {};
  const SkewPoly mu = MinPoly(z, ring, side);
  ElemSet out;
  for (const FieldElem& a : ring.field_ctx().Elements()) {
    if (Eval(mu, a, side).is_zero()) out.push_back(a);
  }
  return Canonicalize(out);
}

ElemSet ClosureRight(std::span<const FieldElem> z, const RingCtx& ring) {
  return Closure(z, ring, Side::kRight);
}

ElemSet ClosureLeft(std::span<const FieldElem> z, const RingCtx& ring) {
  return Closure(z, ring, Side::kLeft);
}

ElemSet ClosureSpanRight(std::span<const FieldElem> z, const RingCtx& ring) {
  return SpanClosure(z, ring, ring.sigma_base());
}

ElemSet ClosureSpanLeft(std::span<const FieldElem> z, const RingCtx& ring) {
  return SpanClosure(z, ring, ring.sigma_inverse_base());
}

size_t Rank(std::span<const FieldElem> z, const RingCtx& ring, Side side) {
  return MinPoly(z, ring, side).degree().value_or(0);
}

bool IsIndependent(std::span<const FieldElem> z, const RingCtx& ring,
                   Side side) {
  const ElemSet zs = Canonicalize(z);
  return Rank(zs, ring, side) == zs.size();
}

bool IsIndependentByClosure(std::span<const FieldElem> z, const RingCtx& ring,
                            Side side) {
  const ElemSet zs = Canonicalize(z);
  for (size_t i = 0; i < zs.size(); ++i) {
    ElemSet rest = zs;
    rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(i));
    const ElemSet cl = Closure(rest, ring, side);
    if (std::binary_search(cl.begin(), cl.end(), zs[i])) return false;
  }
  return true;
}

Matroid::Matroid(Ring ring, Side side)
    : Matroid(ring, side, ring->field_ctx().Elements()) {}

Matroid::Matroid(Ring ring, Side side, std::span<const FieldElem> ground)
    : ring_(std::move(ring)), side_(side), ground_(Canonicalize(ground)) {
  RequireZeroDelta(*ring_);
  for (const FieldElem& a : ground_) {
    if (!ring_->field_ctx().Owns(a)) {
      throw Error(ErrorCode::kCtxMismatch, "ground element not in the field");
    }
  }
}

void Matroid::RequireInGround(const ElemSet& z) const {
  for (const FieldElem& a : z) {
    if (!std::binary_search(ground_.begin(), ground_.end(), a)) {
      throw Error(ErrorCode::kInvalidArgument,
                  FormatElement(a) + " is not in the ground set");
    }
  }
}

void Matroid::RequireEnumerable() const {
  if (ground_.size() > kEnumerationGuard) {
    throw Error(ErrorCode::kGroundSetTooLarge,
                "ground set of size " + std::to_string(ground_.size()) +
                    " exceeds the enumeration guard");
  }
}

size_t Matroid::Rank(std::span<const FieldElem> z) const {
  const ElemSet zs = Canonicalize(z);
  RequireInGround(zs);
  std::vector<uint32_t> key = Keys(zs);
  {
    std::shared_lock lock(mu_);
    auto it = memo_.find(key);
    if (it != memo_.end()) return it->second;
  }
  const size_t r = skewmat::Rank(zs, *ring_, side_);
  std::unique_lock lock(mu_);
  memo_.emplace(std::move(key), r);
  return r;
}

bool Matroid::IsIndependent(std::span<const FieldElem> z) const {
  const ElemSet zs = Canonicalize(z);
  return Rank(zs) == zs.size();
}

ElemSet Matroid::Closure(std::span<const FieldElem> z) const {
  const ElemSet zs = Canonicalize(z);
  RequireInGround(zs);
  ElemSet out;
  const ElemSet full = skewmat::Closure(zs, *ring_, side_);
  std::set_intersection(full.begin(), full.end(), ground_.begin(),
                        ground_.end(), std::back_inserter(out));
  return out;
}

std::vector<ElemSet> Matroid::Flats() const {
  RequireEnumerable();
  std::map<std::vector<uint32_t>, ElemSet> seen;
  const uint64_t count = uint64_t{1} << ground_.size();
  for (uint64_t mask = 0; mask < count; ++mask) {
    ElemSet z;
    for (size_t i = 0; i < ground_.size(); ++i) {
      if (mask >> i & 1) z.push_back(ground_[i]);
    }
    ElemSet cl = Closure(z);
    std::vector<uint32_t> key = Keys(cl);
    seen.emplace(std::move(key), std::move(cl));
  }
  std::vector<ElemSet> out;
  for (auto& [key, flat] : seen) out.push_back(std::move(flat));
  return out;
}

std::vector<ElemSet> Matroid::Bases() const {
  RequireEnumerable();
  const size_t r = Rank(ground_);
  std::vector<ElemSet> out;
  const uint64_t count = uint64_t{1} << ground_.size();
  for (uint64_t mask = 0; mask < count; ++mask) {
    if (static_cast<size_t>(std::popcount(mask)) != r) continue;
    ElemSet z;
    for (size_t i = 0; i < ground_.size(); ++i) {
      if (mask >> i & 1) z.push_back(ground_[i]);
    }
    if (IsIndependent(z)) out.push_back(std::move(z));
  }
  return out;
}

size_t Matroid::memo_size() const {
  std::shared_lock lock(mu_);
  return memo_.size();
}

FieldElem GammaMap(int64_t i, const FieldElem& a, const RingCtx& ring) {
  RequireClassOne(a, ring);
  if (i < 0 || static_cast<uint64_t>(i) >= ClassModulus(ring)) {
    throw Error(ErrorCode::kInvalidArgument,
                "gamma index out of range: " + std::to_string(i));
  }
  return ring.field_ctx().alpha(i) * a;
}

BigInt PhiExponent(const RingCtx& ring) {
  if (ring.sigma_power() == 1 && ring.m() >= 2) {
    return Bracket(ring.m() - 1, BigInt(ring.q()));
  }
  const uint64_t g = ClassModulus(ring);
  const auto mod = static_cast<int64_t>(ring.field_ctx().unit_order() / g);
  if (mod == 1) return 0;
  const auto a = static_cast<int64_t>(((ring.sigma_base() - 1) / g) % mod);
  const auto b = static_cast<int64_t>(((ring.sigma_inverse_base() - 1) / g) % mod);
  return BigInt(b * ModInverse(a, mod) % mod);
}

FieldElem PhiMap(const FieldElem& a, const RingCtx& ring) {
  RequireClassOne(a, ring);
  return Pow(a, PhiExponent(ring));
}

FieldElem BigPhi(const FieldElem& a, const RingCtx& ring) {
  RequireZeroDelta(ring);
  if (a.is_zero()) return a;
  const auto i = static_cast<int64_t>(a.log() % ClassModulus(ring));
  const FieldCtx& field = ring.field_ctx();
  return GammaMap(i, PhiMap(field.alpha(-i) * a, ring), ring);
}

}  // namespace skewmat
