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

// Skew polynomial rings F_{q^m}[x; sigma, delta] with sigma a power of the
// q-Frobenius and delta in the inner family delta_d(a) = d (a - sigma(a)).
//
// Polynomials are written with coefficients on the left, f = sum f_i x^i,
// and multiply by the rule x a = sigma(a) x + delta(a).

#ifndef SKEWMAT_SKEW_RING_H_
#define SKEWMAT_SKEW_RING_H_

#include <cstdint>
#include <memory>
#include <mutex>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "skewmat/field.h"

namespace skewmat {

class RingCtx;
using Ring = std::shared_ptr<const RingCtx>;

class RingCtx : public std::enable_shared_from_this<RingCtx> {
 public:
  // q = p^base_degree must divide the field, so m = n / base_degree.
  // sigma(a) = a^{q^sigma_power}; d = nullopt or zero gives delta = 0.
  static Ring Create(Field field, uint32_t base_degree = 1,
                     std::optional<FieldElem> d = std::nullopt,
                     uint32_t sigma_power = 1);

  RingCtx(const RingCtx&) = delete;
  RingCtx& operator=(const RingCtx&) = delete;

  const Field& field() const { return field_; }
  const FieldCtx& field_ctx() const { return *field_; }
  uint32_t base_degree() const { return base_degree_; }
  uint64_t q() const { return q_; }
  uint32_t m() const { return m_; }
  // In [0, m); 0 means sigma is the identity.
  uint32_t sigma_power() const { return sigma_power_; }
  // Q with sigma(a) = a^Q, and Q' with sigma^{-1}(a) = a^{Q'}.
  uint64_t sigma_base() const { return sigma_base_; }
  uint64_t sigma_inverse_base() const { return sigma_inverse_base_; }

  const FieldElem& delta_parameter() const { return d_; }
  bool delta_is_zero() const { return d_.is_zero(); }

  FieldElem Sigma(const FieldElem& a) const { return SigmaPow(a, 1); }
  FieldElem SigmaInv(const FieldElem& a) const { return SigmaPow(a, -1); }
  FieldElem SigmaPow(const FieldElem& a, int64_t i) const;
  FieldElem Delta(const FieldElem& a) const;

  // The ring with sigma' = sigma^{-1} and delta' = -delta o sigma^{-1}.
  // Created on first use and owned by this context.
  const RingCtx& dual() const;
  Ring shared() const { return shared_from_this(); }

  std::string Describe() const;

 private:
  RingCtx() = default;

  Field field_;
  uint32_t base_degree_ = 1;
  uint64_t q_ = 0;
  uint32_t m_ = 1;
  uint32_t sigma_power_ = 1;
  uint64_t sigma_base_ = 0;
  uint64_t sigma_inverse_base_ = 0;
  FieldElem d_;

  mutable std::once_flag dual_once_;
  mutable Ring dual_;
};

class SkewPoly {
 public:
  explicit SkewPoly(const RingCtx& ring) : ring_(&ring) {}
  SkewPoly(const RingCtx& ring, std::vector<FieldElem> coeffs);

  static SkewPoly Constant(const RingCtx& ring, const FieldElem& c);
  // c x^degree.
  static SkewPoly Monomial(const RingCtx& ring, const FieldElem& c,
                           size_t degree);
  static SkewPoly X(const RingCtx& ring);
  // x - a.
  static SkewPoly Linear(const RingCtx& ring, const FieldElem& a);

  const RingCtx& ring() const { return *ring_; }
  bool is_zero() const { return coeffs_.empty(); }
  // nullopt for the zero polynomial.
  std::optional<size_t> degree() const;
  std::span<const FieldElem> coeffs() const { return coeffs_; }
  // Zero beyond the degree.
  FieldElem coeff(size_t i) const;
  FieldElem leading() const;
  bool is_monic() const;

  SkewPoly operator+(const SkewPoly& g) const;
  SkewPoly operator-(const SkewPoly& g) const;
  SkewPoly operator-() const;
  SkewPoly operator*(const SkewPoly& g) const;
  // c f, scaling coefficients on the left.
  friend SkewPoly operator*(const FieldElem& c, const SkewPoly& f);

  friend bool operator==(const SkewPoly& f, const SkewPoly& g) {
    return f.ring_ == g.ring_ && f.coeffs_ == g.coeffs_;
  }

 private:
  void Normalize();

  const RingCtx* ring_;
  std::vector<FieldElem> coeffs_;
};

// x * f, one application of the commutation rule to every coefficient.
SkewPoly MulX(const SkewPoly& f);

struct DivModResult {
  SkewPoly quotient;
  SkewPoly remainder;
};

// f = quotient * g + remainder, deg remainder < deg g.
DivModResult DivModRight(const SkewPoly& f, const SkewPoly& g);
// f = g * quotient + remainder, deg remainder < deg g.
DivModResult DivModLeft(const SkewPoly& f, const SkewPoly& g);

bool DividesRight(const SkewPoly& g, const SkewPoly& f);
bool DividesLeft(const SkewPoly& g, const SkewPoly& f);

// Coefficients f'_i with f = sum x^i f'_i.
std::vector<FieldElem> RightCoeffs(const SkewPoly& f);
// sum x^i c_i, the inverse of RightCoeffs.
SkewPoly FromRightCoeffs(const RingCtx& ring, std::span<const FieldElem> c);

// Polynomial grammar: terms C, C*x, C*x^K, x, x^K joined by '+'.
SkewPoly ParsePoly(std::string_view text, const RingCtx& ring);
// Highest degree first, e.g. "x^2 + a^6*x + a".
std::string FormatPoly(const SkewPoly& f);

}  // namespace skewmat

#endif  // SKEWMAT_SKEW_RING_H_
