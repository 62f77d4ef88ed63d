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

// Roots of skew polynomials: conjugacy classes, minimal polynomials,
// closures and the root matroids M_r, M_l.
//
// Element sets are passed as vectors; every function canonicalizes its input
// (duplicates removed, ascending key) before use, and every returned set is
// canonical.

#ifndef SKEWMAT_ROOT_MATROID_H_
#define SKEWMAT_ROOT_MATROID_H_

#include <cstdint>
#include <map>
#include <shared_mutex>
#include <span>
#include <vector>

#include "skewmat/bigint.h"
#include "skewmat/evaluation.h"
#include "skewmat/field.h"
#include "skewmat/skew_ring.h"

namespace skewmat {

using ElemSet = std::vector<FieldElem>;

// Sorted by key, duplicates removed.
ElemSet Canonicalize(std::span<const FieldElem> z);

struct ConjClass {
  // alpha^e with e the smallest exponent in the class, or 0.
  FieldElem rep;
  ElemSet members;
};

// gcd(Q - 1, p^n - 1): nonzero classes are the cosets of the subgroup of
// (Q-1)-th powers, which has index ClassModulus(ring).
uint64_t ClassModulus(const RingCtx& ring);

// All of these require delta = 0.
FieldElem ClassRep(const FieldElem& a, const RingCtx& ring);
ConjClass ConjugacyClass(const FieldElem& a, const RingCtx& ring);
// [0] first, then [alpha^0], [alpha^1], ...
std::vector<ConjClass> ConjugacyClasses(const RingCtx& ring);
bool InClassOfOne(const FieldElem& a, const RingCtx& ring);
// Exhaustive pair check that right and left conjugacy coincide. Field order
// at most 4096.
bool LeftRightConjugacyAgree(const RingCtx& ring);

// Interpolation f_i = (x - a_i^{c_i}) f_{i-1}, c_i = f_{i-1}(a_i)_r.
SkewPoly MinPolyRight(std::span<const FieldElem> z, const RingCtx& ring);
// Right minimal polynomial in the dual ring, transported back.
SkewPoly MinPolyLeft(std::span<const FieldElem> z, const RingCtx& ring);
SkewPoly MinPoly(std::span<const FieldElem> z, const RingCtx& ring, Side side);

// Roots of the minimal polynomial, by evaluating at every field element.
ElemSet ClosureRight(std::span<const FieldElem> z, const RingCtx& ring);
ElemSet ClosureLeft(std::span<const FieldElem> z, const RingCtx& ring);
ElemSet Closure(std::span<const FieldElem> z, const RingCtx& ring, Side side);

// {(sum c_j b_j)^{Q-1}} \ {0} with b_j^{Q-1} = a_j and c_j in the fixed
// field of sigma; the left form uses Q' - 1. Z must be a nonempty subset of
// [1].
ElemSet ClosureSpanRight(std::span<const FieldElem> z, const RingCtx& ring);
ElemSet ClosureSpanLeft(std::span<const FieldElem> z, const RingCtx& ring);

size_t Rank(std::span<const FieldElem> z, const RingCtx& ring, Side side);
// rank(Z) = |Z|.
bool IsIndependent(std::span<const FieldElem> z, const RingCtx& ring,
                   Side side);
// No a in Z lies in the closure of Z \ {a}.
bool IsIndependentByClosure(std::span<const FieldElem> z, const RingCtx& ring,
                            Side side);

inline constexpr size_t kEnumerationGuard = 16;

// M_r or M_l restricted to a ground set. Rank queries are memoized and the
// object may be shared between threads.
class Matroid {
 public:
  // Whole field as ground set.
  Matroid(Ring ring, Side side);
  Matroid(Ring ring, Side side, std::span<const FieldElem> ground);

  const RingCtx& ring() const { return *ring_; }
  Side side() const { return side_; }
  const ElemSet& ground() const { return ground_; }

  size_t Rank(std::span<const FieldElem> z) const;
  bool IsIndependent(std::span<const FieldElem> z) const;
  // Closure within the ground set.
  ElemSet Closure(std::span<const FieldElem> z) const;

  // Enumerate all subsets; |ground| <= kEnumerationGuard.
  std::vector<ElemSet> Flats() const;
  std::vector<ElemSet> Bases() const;

  size_t memo_size() const;

 private:
  void RequireInGround(const ElemSet& z) const;
  void RequireEnumerable() const;

  Ring ring_;
  Side side_;
  ElemSet ground_;
  mutable std::shared_mutex mu_;
  mutable std::map<std::vector<uint32_t>, size_t> memo_;
};

// alpha^i a for a in [1] and 0 <= i < ClassModulus(ring).
FieldElem GammaMap(int64_t i, const FieldElem& a, const RingCtx& ring);
// Exponent e with b^{(Q-1) e} = b^{Q'-1} for all b; [[m-1]] when sigma is
// the q-Frobenius.
BigInt PhiExponent(const RingCtx& ring);
// a^{PhiExponent} for a in [1].
FieldElem PhiMap(const FieldElem& a, const RingCtx& ring);
// gamma_i o phi o gamma_i^{-1} on [alpha^i], 0 -> 0.
FieldElem BigPhi(const FieldElem& a, const RingCtx& ring);

}  // namespace skewmat

#endif  // SKEWMAT_ROOT_MATROID_H_
