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

// Extension of F_{q^m}[x; sigma, delta_d] to F_{q^{km}}[x; gamma, eta_d] and
// splitting fields of skew polynomials.

#ifndef SKEWMAT_EXTENSION_H_
#define SKEWMAT_EXTENSION_H_

#include <cstdint>
#include <optional>
#include <vector>

#include "skewmat/bigint.h"
#include "skewmat/comm_poly.h"
#include "skewmat/evaluation.h"
#include "skewmat/field.h"
#include "skewmat/skew_ring.h"

namespace skewmat {

class RingEmbedding {
 public:
  RingEmbedding(Ring small, Ring big, FieldEmbedding elem_map, uint32_t k)
      : small_(std::move(small)), big_(std::move(big)),
        elem_map_(std::move(elem_map)), k_(k) {}

  const RingCtx& small() const { return *small_; }
  const RingCtx& big() const { return *big_; }
  const Ring& small_ring() const { return small_; }
  const Ring& big_ring() const { return big_; }
  const FieldEmbedding& elem_map() const { return elem_map_; }
  uint32_t k() const { return k_; }

  FieldElem Lift(const FieldElem& a) const { return elem_map_(a); }
  SkewPoly Lift(const SkewPoly& f) const;
  std::vector<FieldElem> Lift(std::span<const FieldElem> z) const;
  std::optional<FieldElem> Restrict(const FieldElem& b) const {
    return elem_map_.Preimage(b);
  }

 private:
  Ring small_;
  Ring big_;
  FieldEmbedding elem_map_;
  uint32_t k_;
};

// Ring over F_{q^{km}} with gamma(a) = a^{q^s} for the same s and eta_d with
// the embedded d. k = 1 reuses the ring's own field. Checks gamma and eta
// against sigma and delta on the image (all elements up to order 4096, a
// sample beyond).
RingEmbedding ExtendRing(const Ring& ring, uint32_t k);

// d (a - gamma(a)) in `ring`'s field.
FieldElem Eta(const FieldElem& d, const FieldElem& a, const RingCtx& ring);

// Right and left values of f at a agree before and after lifting.
bool EvalPreserved(const SkewPoly& f, const FieldElem& a,
                   const RingEmbedding& emb);
// Independence status and minimal polynomial of Z agree before and after
// lifting.
bool IndependencePreserved(std::span<const FieldElem> z,
                           const RingEmbedding& emb, Side side);

// Least l such that the right evaluation polynomial of f splits over
// F_{q^{ml}}; lcm of the degrees of its irreducible factors.
uint32_t SplittingDegree(const SkewPoly& f, uint64_t seed = 0);
// Brute-force count of distinct nonzero roots of the right evaluation
// polynomial over the degree-j extension of the base field.
uint64_t CountNonzeroRootsByScan(const SkewPoly& f, uint32_t j);
// Embedding into the splitting field. Throws kTableCapExceeded, naming the
// required degree, when it cannot be tabulated. When l <= 4 the degree is
// re-derived by scanning extensions j = 1..l.
RingEmbedding SplittingField(const SkewPoly& f, uint64_t seed = 0);

struct RootMult {
  FieldElem root;
  uint64_t multiplicity = 0;
};

struct RootReport {
  SkewPoly poly;
  RingEmbedding splitting;
  size_t n = 0;
  size_t k0 = 0;
  uint32_t splitting_degree = 1;
  // Nonzero roots in the splitting field, ascending key.
  std::vector<RootMult> roots;
  uint64_t zero_multiplicity = 0;
  FieldElem class_rep;

  BigInt expected_count;
  BigInt expected_multiplicity;
  bool count_ok = false;
  bool multiplicity_ok = false;
  bool single_class_ok = false;
  // fbar = y fbar' + f_0.
  bool derivative_ok = false;
  // fbar = y^[[k]] (sum sigma^{-k}(f_{i+k}) y^[[i]])^{Q^k}.
  bool bracket_ok = false;
  // The inner polynomial in the identity above is squarefree.
  bool inner_squarefree_ok = false;
  // x^k divides f on the left.
  bool left_factor_ok = false;

  bool ok() const {
    return count_ok && multiplicity_ok && single_class_ok && derivative_ok &&
           bracket_ok && inner_squarefree_ok && left_factor_ok;
  }
};

RootReport MakeRootReport(const SkewPoly& f, uint64_t seed = 0);

// (q-1)[[s]] = q^s - 1 and (q-1)[[s]] < q^s.
bool BracketIdentity(uint64_t s, const BigInt& q);

}  // namespace skewmat

#endif  // SKEWMAT_EXTENSION_H_
