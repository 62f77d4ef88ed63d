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

// Exact arithmetic in GF(p^n).
//
// A FieldCtx owns the log/antilog tables for a fixed primitive element alpha
// together with a Zech table, so every element is stored as a discrete-log
// exponent (or ZERO). Multiplication is exponent addition, addition is one
// Zech lookup. The coefficient-vector view over F_p (in the basis of powers
// of the residue x of the modulus) is available on demand.
//
// Elements keep a raw pointer to their context; the context must outlive
// them. Contexts are immutable once built and may be shared across threads.

#ifndef SKEWMAT_FIELD_H_
#define SKEWMAT_FIELD_H_

#include <compare>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "skewmat/bigint.h"

namespace skewmat {

inline constexpr uint64_t kDefaultTableCap = uint64_t{1} << 20;

// Largest field order that may be tabulated. Process-wide, defaults to 2^20.
uint64_t TableCap();
void SetTableCap(uint64_t cap);

class FieldCtx;
using Field = std::shared_ptr<const FieldCtx>;

class FieldElem {
 public:
  static constexpr uint32_t kZeroExp = 0xffffffffu;

  FieldElem() = default;

  const FieldCtx* ctx() const { return ctx_; }
  bool is_zero() const { return exp_ == kZeroExp; }
  bool is_one() const { return exp_ == 0; }

  // Discrete log base alpha. Throws kDivisionByZero for zero.
  uint32_t log() const;

  // Total order used for canonical sorting: zero first, then by exponent.
  uint32_t key() const { return exp_ == kZeroExp ? 0 : exp_ + 1; }

  FieldElem operator+(const FieldElem& b) const;
  FieldElem operator-(const FieldElem& b) const;
  FieldElem operator*(const FieldElem& b) const;
  FieldElem operator/(const FieldElem& b) const;
  FieldElem operator-() const;
  FieldElem& operator+=(const FieldElem& b) { return *this = *this + b; }
  FieldElem& operator-=(const FieldElem& b) { return *this = *this - b; }
  FieldElem& operator*=(const FieldElem& b) { return *this = *this * b; }

  friend bool operator==(const FieldElem& a, const FieldElem& b) {
    return a.ctx_ == b.ctx_ && a.exp_ == b.exp_;
  }
  friend std::strong_ordering operator<=>(const FieldElem& a,
                                          const FieldElem& b) {
    return a.key() <=> b.key();
  }

 private:
  friend class FieldCtx;
  FieldElem(const FieldCtx* ctx, uint32_t exp) : ctx_(ctx), exp_(exp) {}

  const FieldCtx* ctx_ = nullptr;
  uint32_t exp_ = kZeroExp;
};

struct FieldOptions {
  // Accept an irreducible modulus whose residue x is not primitive. A
  // primitive element is then searched for and used as alpha.
  bool allow_nonprimitive_modulus = false;
};

class FieldCtx : public std::enable_shared_from_this<FieldCtx> {
 public:
  // Builds GF(p^n). When `modulus` (monic, lowest coefficient first) is
  // omitted, the lexicographically smallest primitive irreducible of degree
  // n is used, comparing coefficients with the constant term most
  // significant.
  static Field Create(uint32_t p, uint32_t n,
                      std::optional<std::vector<uint32_t>> modulus = {},
                      FieldOptions options = {});

  FieldCtx(const FieldCtx&) = delete;
  FieldCtx& operator=(const FieldCtx&) = delete;

  uint32_t characteristic() const { return p_; }
  uint32_t degree() const { return n_; }
  uint64_t order() const { return order_; }
  uint32_t unit_order() const { return unit_order_; }
  std::span<const uint32_t> modulus() const { return modulus_; }
  bool modulus_is_primitive() const { return modulus_is_primitive_; }

  FieldElem zero() const { return FieldElem(this, FieldElem::kZeroExp); }
  FieldElem one() const { return FieldElem(this, 0); }
  // alpha^k, k reduced modulo p^n - 1.
  FieldElem alpha(int64_t k = 1) const;
  // Image of the integer c in the prime subfield.
  FieldElem FromInt(int64_t c) const;
  // sum_i c_i x^i with c_i in [0, p); at most n entries.
  FieldElem FromVector(std::span<const uint32_t> coeffs) const;
  // The residue class of x modulo the modulus.
  FieldElem residue_x() const;

  // 0, alpha^0, alpha^1, ..., alpha^{p^n - 2}.
  std::vector<FieldElem> Elements() const;

  // Coefficients of a over F_p, length n.
  std::vector<uint32_t> ToVector(const FieldElem& a) const;

  // a^{p^t}; t may be negative.
  FieldElem FrobeniusP(const FieldElem& a, int64_t t) const;

  bool Owns(const FieldElem& a) const { return a.ctx() == this; }

 private:
  friend class FieldElem;

  FieldCtx() = default;

  FieldElem Make(uint32_t exp) const { return FieldElem(this, exp); }
  uint32_t Reduce(int64_t k) const;
  void BuildTables(const std::vector<uint32_t>& generator);

  uint32_t p_ = 0;
  uint32_t n_ = 0;
  uint64_t order_ = 0;
  uint32_t unit_order_ = 0;
  std::vector<uint32_t> modulus_;
  bool modulus_is_primitive_ = true;
  uint32_t neg_one_exp_ = 0;
  // exp_table_[k] = base-p code of alpha^k; log_table_[code] = k.
  std::vector<uint32_t> exp_table_;
  std::vector<uint32_t> log_table_;
  // 1 + alpha^k = alpha^{zech_[k]}.
  std::vector<uint32_t> zech_;
  // p^t mod (p^n - 1) for t in [0, n).
  std::vector<uint32_t> frobenius_exp_;
};

// Exact inverse; throws kDivisionByZero.
FieldElem Inverse(const FieldElem& a);
// a^k for any integer k; negative powers require a != 0.
FieldElem Pow(const FieldElem& a, int64_t k);
FieldElem Pow(const FieldElem& a, const BigInt& k);
// a^{q^e} where q = p^base_degree; e may be negative.
FieldElem Frobenius(const FieldElem& a, int64_t e, uint32_t base_degree = 1);
// Multiplicative order of a nonzero element.
uint64_t MultiplicativeOrder(const FieldElem& a);
// Minimal polynomial of a over F_p, monic, lowest coefficient first.
std::vector<uint32_t> MinimalPolynomialOverPrime(const FieldElem& a);

// Cached default-modulus field, shared by everything that needs GF(p^n)
// without caring about the modulus.
Field DefaultField(uint32_t p, uint32_t n);

bool IsPrime(uint64_t n);
std::vector<uint64_t> PrimeFactors(uint64_t n);

// Injective ring homomorphism GF(p^n) -> GF(p^N) for n | N. alpha^k maps to
// beta^{k e} where e is the smallest multiple of (p^N-1)/(p^n-1) such that
// beta^e has alpha's minimal polynomial.
class FieldEmbedding {
 public:
  static FieldEmbedding Create(Field small, Field big);

  FieldElem operator()(const FieldElem& a) const;
  std::optional<FieldElem> Preimage(const FieldElem& b) const;

  const Field& small() const { return small_; }
  const Field& big() const { return big_; }
  uint32_t generator_exponent() const { return exponent_; }
  uint32_t index() const { return index_; }

 private:
  Field small_;
  Field big_;
  uint32_t exponent_ = 0;
  // (p^N - 1) / (p^n - 1).
  uint32_t index_ = 0;
  // exponent_ / index_ inverted modulo p^n - 1.
  uint32_t inverse_multiplier_ = 0;
};

// Element grammar: 0 | 1 | a | a^K | [c0,c1,...].
FieldElem ParseElement(std::string_view text, const FieldCtx& field);
std::string FormatElement(const FieldElem& a);

struct FieldSpec {
  uint32_t p = 0;
  uint32_t n = 1;
  std::optional<std::vector<uint32_t>> modulus;
};

// Field grammar: gf(P^N) | gf(P^N:[m0,...,1]) | gf(P).
FieldSpec ParseFieldSpec(std::string_view text);
std::string FormatFieldSpec(const FieldCtx& field);
Field MakeField(const FieldSpec& spec);

}  // namespace skewmat

#endif  // SKEWMAT_FIELD_H_
