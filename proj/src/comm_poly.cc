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

#include "skewmat/comm_poly.h"

#include <algorithm>
#include <utility>

#include "skewmat/error.h"

namespace skewmat {
namespace {

void RequireSameField(const CommPoly& f, const CommPoly& g) {
  if (&f.field() != &g.field()) {
    throw Error(ErrorCode::kCtxMismatch, "polynomials over different fields");
  }
}

}  // namespace

CommPoly::CommPoly(const FieldCtx& field, std::vector<FieldElem> coeffs)
    : field_(&field), coeffs_(std::move(coeffs)) {
  for (const FieldElem& c : coeffs_) {
    if (!field.Owns(c)) {
      throw Error(ErrorCode::kCtxMismatch, "coefficient is not in the field");
    }
  }
  Normalize();
}

void CommPoly::Normalize() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

CommPoly CommPoly::Constant(const FieldCtx& field, const FieldElem& c) {
  return CommPoly(field, {c});
}

CommPoly CommPoly::Monomial(const FieldCtx& field, const FieldElem& c,
                            size_t degree) {
  std::vector<FieldElem> v(degree + 1, field.zero());
  v[degree] = c;
  return CommPoly(field, std::move(v));
}

CommPoly CommPoly::Y(const FieldCtx& field) {
  return Monomial(field, field.one(), 1);
}

std::optional<size_t> CommPoly::degree() const {
  if (coeffs_.empty()) return std::nullopt;
  return coeffs_.size() - 1;
}

FieldElem CommPoly::coeff(size_t i) const {
  return i < coeffs_.size() ? coeffs_[i] : field_->zero();
}

FieldElem CommPoly::leading() const {
  return coeffs_.empty() ? field_->zero() : coeffs_.back();
}

FieldElem CommPoly::operator()(const FieldElem& a) const {
  FieldElem acc = field_->zero();
  for (size_t i = coeffs_.size(); i-- > 0;) acc = acc * a + coeffs_[i];
  return acc;
}

CommPoly CommPoly::operator+(const CommPoly& g) const {
  RequireSameField(*this, g);
  const size_t len = std::max(coeffs_.size(), g.coeffs_.size());
  std::vector<FieldElem> v(len);
  for (size_t i = 0; i < len; ++i) v[i] = coeff(i) + g.coeff(i);
  return CommPoly(*field_, std::move(v));
}

CommPoly CommPoly::operator-() const {
  std::vector<FieldElem> v = coeffs_;
  for (auto& c : v) c = -c;
  return CommPoly(*field_, std::move(v));
}

CommPoly CommPoly::operator-(const CommPoly& g) const { return *this + (-g); }

CommPoly CommPoly::operator*(const CommPoly& g) const {
  RequireSameField(*this, g);
  if (is_zero() || g.is_zero()) return CommPoly(*field_);
  std::vector<FieldElem> v(coeffs_.size() + g.coeffs_.size() - 1, field_->zero());
  for (size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i].is_zero()) continue;
    for (size_t j = 0; j < g.coeffs_.size(); ++j) v[i + j] += coeffs_[i] * g.coeffs_[j];
  }
  return CommPoly(*field_, std::move(v));
}

CommPoly operator*(const FieldElem& c, const CommPoly& f) {
  std::vector<FieldElem> v = f.coeffs_;
  for (auto& x : v) x = c * x;
  return CommPoly(*f.field_, std::move(v));
}

CommPoly CommPoly::Derivative() const {
  if (coeffs_.size() <= 1) return CommPoly(*field_);
  std::vector<FieldElem> v(coeffs_.size() - 1);
  for (size_t i = 1; i < coeffs_.size(); ++i) {
    v[i - 1] = field_->FromInt(static_cast<int64_t>(i % field_->characteristic())) * coeffs_[i];
  }
  return CommPoly(*field_, std::move(v));
}

CommPoly CommPoly::Monic() const {
  if (is_zero()) return *this;
  return Inverse(leading()) * *this;
}

CommDivModResult DivMod(const CommPoly& f, const CommPoly& g) {
  RequireSameField(f, g);
  const FieldCtx& field = f.field();
  if (g.is_zero()) throw Error(ErrorCode::kDivisionByZero, "division by the zero polynomial");
  const size_t n = *g.degree();
  if (f.is_zero() || *f.degree() < n) return {CommPoly(field), f};
  const size_t top = *f.degree();
  std::vector<FieldElem> r(f.coeffs().begin(), f.coeffs().end());
  std::vector<FieldElem> q(top - n + 1, field.zero());
  const FieldElem inv_lead = Inverse(g.leading());
  const auto gc = g.coeffs();
  for (size_t d = top + 1; d-- > n;) {
    if (r[d].is_zero()) continue;
    const FieldElem c = r[d] * inv_lead;
    q[d - n] = c;
    for (size_t i = 0; i <= n; ++i) r[d - n + i] -= c * gc[i];
  }
  r.resize(n, field.zero());
  return {CommPoly(field, std::move(q)), CommPoly(field, std::move(r))};
}

CommPoly Gcd(const CommPoly& f, const CommPoly& g) {
  CommPoly a = f, b = g;
  while (!b.is_zero()) {
    CommPoly r = DivMod(a, b).remainder;
    a = std::move(b);
    b = std::move(r);
  }
  return a.Monic();
}

CommPoly PowMod(const CommPoly& base, const BigInt& e, const CommPoly& mod) {
  if (e < 0) throw Error(ErrorCode::kInvalidArgument, "negative exponent");
  const FieldCtx& field = base.field();
  CommPoly result = DivMod(CommPoly::Constant(field, field.one()), mod).remainder;
  CommPoly b = DivMod(base, mod).remainder;
  const size_t bits = e == 0 ? 0 : boost::multiprecision::msb(e) + 1;
  for (size_t i = bits; i-- > 0;) {
    result = DivMod(result * result, mod).remainder;
    if (boost::multiprecision::bit_test(e, i)) result = DivMod(result * b, mod).remainder;
  }
  return result;
}

CommPoly Pow(const CommPoly& base, uint64_t e) {
  const FieldCtx& field = base.field();
  CommPoly result = CommPoly::Constant(field, field.one());
  CommPoly b = base;
  while (e > 0) {
    if (e & 1) result = result * b;
    e >>= 1;
    if (e > 0) b = b * b;
  }
  return result;
}

CommPoly Lift(const CommPoly& f, const FieldEmbedding& emb) {
  std::vector<FieldElem> v;
  v.reserve(f.coeffs().size());
  for (const FieldElem& c : f.coeffs()) v.push_back(emb(c));
  return CommPoly(*emb.big(), std::move(v));
}

std::string FormatCommPoly(const CommPoly& f) {
  if (f.is_zero()) return "0";
  std::string out;
  for (size_t i = f.coeffs().size(); i-- > 0;) {
    const FieldElem& c = f.coeffs()[i];
    if (c.is_zero()) continue;
    std::string term;
    if (i == 0) {
      term = FormatElement(c);
    } else {
      const std::string mono = i == 1 ? "y" : "y^" + std::to_string(i);
      term = c.is_one() ? mono : FormatElement(c) + "*" + mono;
    }
    if (!out.empty()) out += " + ";
    out += term;
  }
  return out;
}

}  // namespace skewmat
