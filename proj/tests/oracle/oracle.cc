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

#include "oracle/oracle.h"

#include <algorithm>
#include <bit>
#include <string>

#include "skewmat/error.h"

namespace skewmat::oracle {
namespace {

void RequireOrder(const FieldCtx& field, const OracleConfig& cfg) {
  if (field.order() > cfg.max_field_order) {
    throw Error(ErrorCode::kCapExceeded,
                "oracle limited to field order " + std::to_string(cfg.max_field_order));
  }
}

std::vector<FieldElem> Dedup(std::span<const FieldElem> z) {
  std::vector<FieldElem> v(z.begin(), z.end());
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

bool VanishesOn(const SkewPoly& f, const std::vector<FieldElem>& z, Side side) {
  for (const FieldElem& a : z) {
    if (!DivisionEval(f, a, side).is_zero()) return false;
  }
  return true;
}

}  // namespace

FieldElem DivisionEval(const SkewPoly& f, const FieldElem& a, Side side) {
  const SkewPoly lin = SkewPoly::Linear(f.ring(), a);
  const DivModResult qr = side == Side::kRight ? DivModRight(f, lin) : DivModLeft(f, lin);
  return qr.remainder.coeff(0);
}

SkewPoly OracleMinPoly(std::span<const FieldElem> z, const RingCtx& ring,
                       Side side, const OracleConfig& cfg) {
  const FieldCtx& field = ring.field_ctx();
  RequireOrder(field, cfg);
  const std::vector<FieldElem> zs = Dedup(z);
  const std::vector<FieldElem> elems = field.Elements();
  const uint64_t q = elems.size();
  for (size_t d = 0; d <= zs.size(); ++d) {
    if (d > cfg.max_degree) {
      throw Error(ErrorCode::kCapExceeded, "oracle degree limit reached");
    }
    uint64_t count = 1;
    for (size_t i = 0; i < d; ++i) {
      count *= q;
      if (count > cfg.max_candidates) {
        throw Error(ErrorCode::kCapExceeded, "oracle candidate limit reached");
      }
    }
    for (uint64_t idx = 0; idx < count; ++idx) {
      std::vector<FieldElem> c(d + 1, field.one());
      uint64_t t = idx;
      for (size_t i = 0; i < d; ++i) {
        c[i] = elems[t % q];
        t /= q;
      }
      SkewPoly f(ring, std::move(c));
      if (VanishesOn(f, zs, side)) return f;
    }
  }
  throw Error(ErrorCode::kInternal, "no vanishing polynomial of degree <= |Z|");
}

size_t OracleRank(std::span<const FieldElem> z, const RingCtx& ring, Side side,
                  const OracleConfig& cfg) {
  const std::vector<FieldElem> zs = Dedup(z);
  if (zs.size() > 12) throw Error(ErrorCode::kCapExceeded, "oracle rank limited to 12 elements");
  size_t best = 0;
  for (uint32_t mask = 0; mask < (1u << zs.size()); ++mask) {
    const auto size = static_cast<size_t>(std::popcount(mask));
    if (size <= best) continue;
    std::vector<FieldElem> s;
    for (size_t i = 0; i < zs.size(); ++i) {
      if (mask >> i & 1) s.push_back(zs[i]);
    }
    if (*OracleMinPoly(s, ring, side, cfg).degree() == size) best = size;
  }
  return best;
}

std::vector<std::pair<FieldElem, uint64_t>> OracleRoots(const SkewPoly& f,
                                                        Side side,
                                                        const OracleConfig& cfg) {
  const RingCtx& ring = f.ring();
  const FieldCtx& field = ring.field_ctx();
  RequireOrder(field, cfg);
  std::vector<std::pair<FieldElem, uint64_t>> out;
  // Right evaluation polynomial built from its exponents directly.
  std::vector<FieldElem> fbar;
  if (side == Side::kRight && ring.delta_is_zero() && !f.is_zero()) {
    uint64_t e = 0, power = 1;
    for (size_t i = 0; i < f.coeffs().size(); ++i) {
      if (fbar.size() <= e) fbar.resize(e + 1, field.zero());
      fbar[e] = fbar[e] + f.coeffs()[i];
      e += power;
      power *= ring.sigma_base();
    }
  }
  for (const FieldElem& a : field.Elements()) {
    if (!DivisionEval(f, a, side).is_zero()) continue;
    uint64_t mult = 1;
    if (!fbar.empty()) {
      mult = 0;
      std::vector<FieldElem> g = fbar;
      for (;;) {
        // Synthetic division by (y - a).
        std::vector<FieldElem> quo(g.size() - 1, field.zero());
        FieldElem carry = field.zero();
        for (size_t i = g.size(); i-- > 1;) {
          carry = carry * a + g[i];
          quo[i - 1] = carry;
        }
        if (!(carry * a + g[0]).is_zero() || quo.empty()) break;
        ++mult;
        g = std::move(quo);
      }
    }
    out.emplace_back(a, mult);
  }
  return out;
}

SkewPoly OracleMinPolyLeftInterp(std::span<const FieldElem> z,
                                 const RingCtx& ring) {
  if (!ring.delta_is_zero()) {
    throw Error(ErrorCode::kDeltaNotZero, "left interpolation oracle needs delta = 0");
  }
  const FieldCtx& field = ring.field_ctx();
  const auto exponent = static_cast<int64_t>(ring.sigma_inverse_base()) - 1;
  SkewPoly f = SkewPoly::Constant(ring, field.one());
  for (const FieldElem& a : Dedup(z)) {
    const FieldElem c = DivisionEval(f, a, Side::kLeft);
    if (c.is_zero()) continue;
    f = f * SkewPoly::Linear(ring, a * Pow(c, exponent));
  }
  return f;
}

}  // namespace skewmat::oracle
