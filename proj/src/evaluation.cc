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

#include <string>
#include <utility>
#include <vector>

#include "skewmat/error.h"

namespace skewmat {
namespace {

// Evaluation polynomials are stored densely.
constexpr uint64_t kMaxEvalPolyDegree = uint64_t{1} << 24;

void RequireOwned(const SkewPoly& f, const FieldElem& a) {
  if (!f.ring().field_ctx().Owns(a)) {
    throw Error(ErrorCode::kCtxMismatch, "point is not in the ring's field");
  }
}

void RequireZeroDelta(const RingCtx& ring, std::string_view what) {
  if (!ring.delta_is_zero()) {
    throw Error(ErrorCode::kDeltaNotZero,
                std::string(what) + " is only defined for delta = 0");
  }
}

#ifndef NDEBUG
void CheckAgree(const FieldElem& a, const FieldElem& b, std::string_view what) {
  if (a != b) {
    throw Error(ErrorCode::kInternal,
                std::string(what) + ": recursion and division disagree");
  }
}
#endif

CommPoly EvalPolyFromExponents(const FieldCtx& field,
                               const std::vector<FieldElem>& coeffs,
                               const BigInt& base) {
  if (coeffs.empty()) return CommPoly(field);
  const BigInt top = GeometricSum(coeffs.size() - 1, base);
  if (top > kMaxEvalPolyDegree) {
    throw Error(ErrorCode::kCapExceeded,
                "evaluation polynomial degree " + top.str() + " is too large");
  }
  std::vector<FieldElem> v(static_cast<size_t>(top) + 1, field.zero());
  for (size_t i = 0; i < coeffs.size(); ++i) {
    v[static_cast<size_t>(GeometricSum(i, base))] += coeffs[i];
  }
  return CommPoly(field, std::move(v));
}

}  // namespace

std::string_view SideName(Side side) {
  return side == Side::kRight ? "right" : "left";
}

Side ParseSide(std::string_view text) {
  if (text == "right" || text == "r") return Side::kRight;
  if (text == "left" || text == "l") return Side::kLeft;
  throw Error(ErrorCode::kSyntaxError, "side must be 'left' or 'right'");
}

BigInt GeometricSum(uint64_t i, const BigInt& base) {
  BigInt sum = 0, term = 1;
  for (uint64_t k = 0; k < i; ++k) {
    sum += term;
    term *= base;
  }
  return sum;
}

BigInt Bracket(uint64_t i, const BigInt& q) {
  if (q < 2) throw Error(ErrorCode::kInvalidArgument, "bracket requires q >= 2");
  return (IntPow(q, i) - 1) / (q - 1);
}

BigInt Cobracket(uint64_t i, const BigInt& q, uint32_t m) {
  if (q < 2) throw Error(ErrorCode::kInvalidArgument, "cobracket requires q >= 2");
  if (m < 2) {
    throw Error(ErrorCode::kDegenerateModulus,
                "cobracket needs m >= 2 (q^{m-1} - 1 vanishes)");
  }
  const BigInt base = IntPow(q, m - 1);
  return (IntPow(base, i) - 1) / (base - 1);
}

FieldElem NSeq(const FieldElem& a, uint64_t i, const RingCtx& ring) {
  FieldElem n = ring.field_ctx().one();
  for (uint64_t k = 0; k < i; ++k) n = ring.Sigma(n) * a + ring.Delta(n);
  return n;
}

FieldElem MSeq(const FieldElem& a, uint64_t i, const RingCtx& ring) {
  FieldElem m = ring.field_ctx().one();
  for (uint64_t k = 0; k < i; ++k) {
    const FieldElem s = ring.SigmaInv(m);
    m = a * s - ring.Delta(s);
  }
  return m;
}

FieldElem EvalRightBySum(const SkewPoly& f, const FieldElem& a) {
  RequireOwned(f, a);
  const RingCtx& ring = f.ring();
  const auto c = f.coeffs();
  if (c.empty()) return ring.field_ctx().zero();
  FieldElem n = ring.field_ctx().one();
  FieldElem acc = c[0];
  const bool has_delta = !ring.delta_is_zero();
  for (size_t i = 1; i < c.size(); ++i) {
    n = has_delta ? ring.Sigma(n) * a + ring.Delta(n) : ring.Sigma(n) * a;
    acc += c[i] * n;
  }
  return acc;
}

FieldElem EvalRightByDivision(const SkewPoly& f, const FieldElem& a) {
  RequireOwned(f, a);
  return DivModRight(f, SkewPoly::Linear(f.ring(), a)).remainder.coeff(0);
}

FieldElem EvalLeftBySum(const SkewPoly& f, const FieldElem& a) {
  RequireOwned(f, a);
  const RingCtx& ring = f.ring();
  const std::vector<FieldElem> c = RightCoeffs(f);
  if (c.empty()) return ring.field_ctx().zero();
  FieldElem m = ring.field_ctx().one();
  FieldElem acc = c[0];
  for (size_t i = 1; i < c.size(); ++i) {
    const FieldElem s = ring.SigmaInv(m);
    m = a * s - ring.Delta(s);
    acc += m * c[i];
  }
  return acc;
}

FieldElem EvalLeftByDivision(const SkewPoly& f, const FieldElem& a) {
  RequireOwned(f, a);
  return DivModLeft(f, SkewPoly::Linear(f.ring(), a)).remainder.coeff(0);
}

FieldElem EvalRight(const SkewPoly& f, const FieldElem& a) {
  FieldElem v = EvalRightBySum(f, a);
#ifndef NDEBUG
  CheckAgree(v, EvalRightByDivision(f, a), "right evaluation");
#endif
  return v;
}

FieldElem EvalLeft(const SkewPoly& f, const FieldElem& a) {
  FieldElem v = EvalLeftBySum(f, a);
#ifndef NDEBUG
  CheckAgree(v, EvalLeftByDivision(f, a), "left evaluation");
#endif
  return v;
}

FieldElem Eval(const SkewPoly& f, const FieldElem& a, Side side) {
  return side == Side::kRight ? EvalRight(f, a) : EvalLeft(f, a);
}

const RingCtx& DualRing(const RingCtx& ring) { return ring.dual(); }

SkewPoly DualPoly(const SkewPoly& f) {
  return SkewPoly(f.ring().dual(), RightCoeffs(f));
}

SkewPoly FromDualPoly(const SkewPoly& g, const RingCtx& ring) {
  if (&g.ring() != &ring.dual()) {
    throw Error(ErrorCode::kCtxMismatch, "polynomial is not in the dual ring");
  }
  return FromRightCoeffs(ring, g.coeffs());
}

CommPoly RightEvalPoly(const SkewPoly& f) {
  const RingCtx& ring = f.ring();
  RequireZeroDelta(ring, "the right evaluation polynomial");
  std::vector<FieldElem> c(f.coeffs().begin(), f.coeffs().end());
  return EvalPolyFromExponents(ring.field_ctx(), c, BigInt(ring.sigma_base()));
}

CommPoly LeftEvalPoly(const SkewPoly& f) {
  const RingCtx& ring = f.ring();
  RequireZeroDelta(ring, "the left evaluation polynomial");
  std::vector<FieldElem> c;
  for (size_t i = 0; i < f.coeffs().size(); ++i) {
    c.push_back(ring.SigmaPow(f.coeffs()[i], -static_cast<int64_t>(i)));
  }
  return EvalPolyFromExponents(ring.field_ctx(), c,
                               BigInt(ring.sigma_inverse_base()));
}

FieldElem Conj(const FieldElem& a, const FieldElem& c, const RingCtx& ring) {
  if (c.is_zero()) throw Error(ErrorCode::kDivisionByZero, "conjugation by zero");
  const FieldElem general = (ring.Sigma(c) * a + ring.Delta(c)) / c;
  if (ring.delta_is_zero()) {
    const FieldElem power =
        a * Pow(c, static_cast<int64_t>(ring.sigma_base()) - 1);
#ifndef NDEBUG
    if (power != general) {
      throw Error(ErrorCode::kInternal, "conjugation forms disagree");
    }
#endif
    return power;
  }
  return general;
}

FieldElem EvalProduct(const SkewPoly& f, const SkewPoly& g, const FieldElem& a) {
  const FieldElem ga = EvalRight(g, a);
  if (ga.is_zero()) return ga;
  return EvalRight(f, Conj(a, ga, f.ring())) * ga;
}

}  // namespace skewmat
