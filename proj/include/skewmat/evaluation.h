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

// Left and right evaluation of skew polynomials.
//
// f(a)_r is the remainder of f on division by (x - a) on the right, f(a)_l
// the remainder on the left. Each is computed two ways: from the N_i / M_i
// recursions and from explicit division. Debug builds assert that the two
// agree on every call.
//
// When delta = 0 the recursions have closed forms
//   N_i(a) = a^[[i]],  [[i]] = (Q^i - 1) / (Q - 1),  Q = sigma_base()
//   M_i(a) = a^]]i[[,  ]]i[[ = (Q'^i - 1) / (Q' - 1), Q' = sigma_inverse_base()
// which give the evaluation polynomials f^r(y) and f^l(y).

#ifndef SKEWMAT_EVALUATION_H_
#define SKEWMAT_EVALUATION_H_

#include <cstdint>
#include <string_view>

#include "skewmat/bigint.h"
#include "skewmat/comm_poly.h"
#include "skewmat/field.h"
#include "skewmat/skew_ring.h"

namespace skewmat {

enum class Side { kRight, kLeft };

std::string_view SideName(Side side);
Side ParseSide(std::string_view text);

// (q^i - 1) / (q - 1); requires q >= 2.
BigInt Bracket(uint64_t i, const BigInt& q);
// (q^{i(m-1)} - 1) / (q^{m-1} - 1); throws kDegenerateModulus for m = 1.
BigInt Cobracket(uint64_t i, const BigInt& q, uint32_t m);
// 1 + Q + ... + Q^{i-1}, also defined for Q = 1.
BigInt GeometricSum(uint64_t i, const BigInt& base);

FieldElem NSeq(const FieldElem& a, uint64_t i, const RingCtx& ring);
FieldElem MSeq(const FieldElem& a, uint64_t i, const RingCtx& ring);

FieldElem EvalRight(const SkewPoly& f, const FieldElem& a);
FieldElem EvalLeft(const SkewPoly& f, const FieldElem& a);
FieldElem Eval(const SkewPoly& f, const FieldElem& a, Side side);

// sum f_i N_i(a).
FieldElem EvalRightBySum(const SkewPoly& f, const FieldElem& a);
// Remainder of f by (x - a) on the right.
FieldElem EvalRightByDivision(const SkewPoly& f, const FieldElem& a);
// sum M_i(a) f'_i.
FieldElem EvalLeftBySum(const SkewPoly& f, const FieldElem& a);
FieldElem EvalLeftByDivision(const SkewPoly& f, const FieldElem& a);

const RingCtx& DualRing(const RingCtx& ring);
// f' = sum f'_i x^i in the dual ring, where f = sum x^i f'_i.
SkewPoly DualPoly(const SkewPoly& f);
// Inverse of DualPoly: sum x^i g_i in `ring` for g in ring.dual().
SkewPoly FromDualPoly(const SkewPoly& g, const RingCtx& ring);

// Require delta = 0; throw kDeltaNotZero otherwise.
CommPoly RightEvalPoly(const SkewPoly& f);
CommPoly LeftEvalPoly(const SkewPoly& f);

// a^c = (sigma(c) a + delta(c)) c^{-1}; c != 0.
FieldElem Conj(const FieldElem& a, const FieldElem& c, const RingCtx& ring);

// (f g)(a)_r via the conjugate shift: 0 if g(a)_r = 0, otherwise
// f(a^{g(a)_r})_r g(a)_r.
FieldElem EvalProduct(const SkewPoly& f, const SkewPoly& g, const FieldElem& a);

}  // namespace skewmat

#endif  // SKEWMAT_EVALUATION_H_
