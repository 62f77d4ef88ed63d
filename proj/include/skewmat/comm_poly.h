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

// Ordinary univariate polynomials F[y], used for evaluation polynomials and
// splitting-field computations.

#ifndef SKEWMAT_COMM_POLY_H_
#define SKEWMAT_COMM_POLY_H_

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "skewmat/bigint.h"
#include "skewmat/field.h"

namespace skewmat {

class CommPoly {
 public:
  explicit CommPoly(const FieldCtx& field) : field_(&field) {}
  CommPoly(const FieldCtx& field, std::vector<FieldElem> coeffs);

  static CommPoly Constant(const FieldCtx& field, const FieldElem& c);
  static CommPoly Monomial(const FieldCtx& field, const FieldElem& c,
                           size_t degree);
  static CommPoly Y(const FieldCtx& field);

  const FieldCtx& field() const { return *field_; }
  bool is_zero() const { return coeffs_.empty(); }
  std::optional<size_t> degree() const;
  std::span<const FieldElem> coeffs() const { return coeffs_; }
  FieldElem coeff(size_t i) const;
  FieldElem leading() const;
  bool is_one() const { return coeffs_.size() == 1 && coeffs_[0].is_one(); }

  FieldElem operator()(const FieldElem& a) const;

  CommPoly operator+(const CommPoly& g) const;
  CommPoly operator-(const CommPoly& g) const;
  CommPoly operator-() const;
  CommPoly operator*(const CommPoly& g) const;
  friend CommPoly operator*(const FieldElem& c, const CommPoly& f);

  friend bool operator==(const CommPoly& f, const CommPoly& g) {
    return f.field_ == g.field_ && f.coeffs_ == g.coeffs_;
  }

  CommPoly Derivative() const;
  CommPoly Monic() const;

 private:
  void Normalize();

  const FieldCtx* field_;
  std::vector<FieldElem> coeffs_;
};

struct CommDivModResult {
  CommPoly quotient;
  CommPoly remainder;
};

CommDivModResult DivMod(const CommPoly& f, const CommPoly& g);
// Monic gcd; gcd(0, 0) = 0.
CommPoly Gcd(const CommPoly& f, const CommPoly& g);
CommPoly PowMod(const CommPoly& base, const BigInt& e, const CommPoly& mod);
CommPoly Pow(const CommPoly& base, uint64_t e);
// Coefficientwise image under a field embedding.
CommPoly Lift(const CommPoly& f, const FieldEmbedding& emb);

// "y^4 + a^5*y + a^7".
std::string FormatCommPoly(const CommPoly& f);

}  // namespace skewmat

#endif  // SKEWMAT_COMM_POLY_H_
