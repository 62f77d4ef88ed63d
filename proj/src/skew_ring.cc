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

#include "skewmat/skew_ring.h"

#include <algorithm>
#include <cctype>
#include <map>
#include <random>
#include <utility>

#include "skewmat/error.h"

namespace skewmat {
namespace {

uint64_t PowU64(uint64_t base, uint64_t e) {
  uint64_t r = 1;
  for (uint64_t i = 0; i < e; ++i) r *= base;
  return r;
}

void RequireSameRing(const SkewPoly& f, const SkewPoly& g) {
  if (&f.ring() != &g.ring()) {
    throw Error(ErrorCode::kCtxMismatch, "polynomials belong to different rings");
  }
}

std::string TrimCopy(std::string_view s) {
  size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return std::string(s.substr(b, e - b));
}

}  // namespace

// ---------------------------------------------------------------------------
// RingCtx

Ring RingCtx::Create(Field field, uint32_t base_degree,
                     std::optional<FieldElem> d, uint32_t sigma_power) {
  const uint32_t n = field->degree();
  if (base_degree == 0 || n % base_degree != 0) {
    throw Error(ErrorCode::kInvalidArgument,
                "q = p^" + std::to_string(base_degree) +
                    " is not a subfield order of " + FormatFieldSpec(*field));
  }
  std::shared_ptr<RingCtx> ring(new RingCtx());
  ring->field_ = field;
  ring->base_degree_ = base_degree;
  ring->q_ = PowU64(field->characteristic(), base_degree);
  ring->m_ = n / base_degree;
  ring->sigma_power_ = sigma_power % ring->m_;
  ring->sigma_base_ = PowU64(ring->q_, ring->sigma_power_);
  ring->sigma_inverse_base_ =
      PowU64(ring->q_, (ring->m_ - ring->sigma_power_) % ring->m_);
  if (d.has_value()) {
    if (!field->Owns(*d)) {
      throw Error(ErrorCode::kCtxMismatch, "derivation parameter is not in the field");
    }
    ring->d_ = *d;
  } else {
    ring->d_ = field->zero();
  }

  // delta_d(ab) = sigma(a) delta_d(b) + delta_d(a) b.
  if (!ring->d_.is_zero()) {
    std::vector<FieldElem> elems = field->Elements();
    std::vector<std::pair<FieldElem, FieldElem>> pairs;
    if (elems.size() <= 64) {
      for (const auto& a : elems) {
        for (const auto& b : elems) pairs.emplace_back(a, b);
      }
    } else {
      std::mt19937_64 rng(field->order());
      std::uniform_int_distribution<size_t> pick(0, elems.size() - 1);
      for (int i = 0; i < 256; ++i) pairs.emplace_back(elems[pick(rng)], elems[pick(rng)]);
    }
    for (const auto& [a, b] : pairs) {
      if (ring->Delta(a * b) != ring->Sigma(a) * ring->Delta(b) + ring->Delta(a) * b) {
        throw Error(ErrorCode::kInternal, "delta fails the sigma-derivation rule");
      }
    }
  }
  return ring;
}

FieldElem RingCtx::SigmaPow(const FieldElem& a, int64_t i) const {
  const int64_t m = m_;
  int64_t t = (i % m) * static_cast<int64_t>(sigma_power_) % m;
  if (t < 0) t += m;
  return field_->FrobeniusP(a, t * static_cast<int64_t>(base_degree_));
}

FieldElem RingCtx::Delta(const FieldElem& a) const {
  if (d_.is_zero()) {
    if (!field_->Owns(a)) throw Error(ErrorCode::kCtxMismatch, "element of another field");
    return field_->zero();
  }
  return d_ * (a - Sigma(a));
}

const RingCtx& RingCtx::dual() const {
  std::call_once(dual_once_, [this] {
    dual_ = Create(field_, base_degree_, d_, (m_ - sigma_power_) % m_);
  });
  return *dual_;
}

std::string RingCtx::Describe() const {
  std::string s = FormatFieldSpec(*field_) + " q=" + std::to_string(q_) +
                  " m=" + std::to_string(m_) + " sigma=a^" +
                  std::to_string(sigma_base_) + " delta=";
  s += d_.is_zero() ? "0" : FormatElement(d_) + "*(a-sigma(a))";
  return s;
}

// ---------------------------------------------------------------------------
// SkewPoly

SkewPoly::SkewPoly(const RingCtx& ring, std::vector<FieldElem> coeffs)
    : ring_(&ring), coeffs_(std::move(coeffs)) {
  for (const FieldElem& c : coeffs_) {
    if (!ring.field_ctx().Owns(c)) {
      throw Error(ErrorCode::kCtxMismatch, "coefficient is not in the ring's field");
    }
  }
  Normalize();
}

void SkewPoly::Normalize() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

SkewPoly SkewPoly::Constant(const RingCtx& ring, const FieldElem& c) {
  return SkewPoly(ring, {c});
}

SkewPoly SkewPoly::Monomial(const RingCtx& ring, const FieldElem& c,
                            size_t degree) {
  std::vector<FieldElem> v(degree + 1, ring.field_ctx().zero());
  v[degree] = c;
  return SkewPoly(ring, std::move(v));
}

SkewPoly SkewPoly::X(const RingCtx& ring) {
  return Monomial(ring, ring.field_ctx().one(), 1);
}

SkewPoly SkewPoly::Linear(const RingCtx& ring, const FieldElem& a) {
  return SkewPoly(ring, {-a, ring.field_ctx().one()});
}

std::optional<size_t> SkewPoly::degree() const {
  if (coeffs_.empty()) return std::nullopt;
  return coeffs_.size() - 1;
}

FieldElem SkewPoly::coeff(size_t i) const {
  return i < coeffs_.size() ? coeffs_[i] : ring_->field_ctx().zero();
}

FieldElem SkewPoly::leading() const {
  if (coeffs_.empty()) return ring_->field_ctx().zero();
  return coeffs_.back();
}

bool SkewPoly::is_monic() const { return !coeffs_.empty() && coeffs_.back().is_one(); }

SkewPoly SkewPoly::operator+(const SkewPoly& g) const {
  RequireSameRing(*this, g);
  const size_t len = std::max(coeffs_.size(), g.coeffs_.size());
  std::vector<FieldElem> v(len);
  for (size_t i = 0; i < len; ++i) v[i] = coeff(i) + g.coeff(i);
  return SkewPoly(*ring_, std::move(v));
}

SkewPoly SkewPoly::operator-() const {
  std::vector<FieldElem> v = coeffs_;
  for (auto& c : v) c = -c;
  return SkewPoly(*ring_, std::move(v));
}

SkewPoly SkewPoly::operator-(const SkewPoly& g) const { return *this + (-g); }

SkewPoly operator*(const FieldElem& c, const SkewPoly& f) {
  std::vector<FieldElem> v(f.coeffs_.begin(), f.coeffs_.end());
  for (auto& x : v) x = c * x;
  return SkewPoly(*f.ring_, std::move(v));
}

SkewPoly MulX(const SkewPoly& f) {
  const RingCtx& ring = f.ring();
  if (f.is_zero()) return f;
  const size_t n = f.coeffs().size();
  std::vector<FieldElem> v(n + 1, ring.field_ctx().zero());
  const bool has_delta = !ring.delta_is_zero();
  for (size_t j = 0; j < n; ++j) {
    v[j + 1] += ring.Sigma(f.coeffs()[j]);
    if (has_delta) v[j] += ring.Delta(f.coeffs()[j]);
  }
  return SkewPoly(ring, std::move(v));
}

SkewPoly SkewPoly::operator*(const SkewPoly& g) const {
  RequireSameRing(*this, g);
  if (is_zero() || g.is_zero()) return SkewPoly(*ring_);
  const FieldElem zero = ring_->field_ctx().zero();
  std::vector<FieldElem> acc(coeffs_.size() + g.coeffs_.size() - 1, zero);
  SkewPoly shifted = g;  // x^i g
  for (size_t i = 0; i < coeffs_.size(); ++i) {
    if (i > 0) shifted = MulX(shifted);
    const FieldElem& c = coeffs_[i];
    if (c.is_zero()) continue;
    const auto sc = shifted.coeffs();
    for (size_t j = 0; j < sc.size(); ++j) acc[j] += c * sc[j];
  }
  return SkewPoly(*ring_, std::move(acc));
}

// ---------------------------------------------------------------------------
// Division

DivModResult DivModRight(const SkewPoly& f, const SkewPoly& g) {
  RequireSameRing(f, g);
  const RingCtx& ring = f.ring();
  if (g.is_zero()) throw Error(ErrorCode::kDivisionByZero, "division by the zero polynomial");
  const size_t n = *g.degree();
  if (f.is_zero() || *f.degree() < n) return {SkewPoly(ring), f};

  const size_t top = *f.degree();
  std::vector<SkewPoly> shifts = {g};  // shifts[j] = x^j g
  for (size_t j = 1; j <= top - n; ++j) shifts.push_back(MulX(shifts.back()));

  std::vector<FieldElem> r(f.coeffs().begin(), f.coeffs().end());
  std::vector<FieldElem> q(top - n + 1, ring.field_ctx().zero());
  for (size_t d = top + 1; d-- > n;) {
    if (r[d].is_zero()) continue;
    const SkewPoly& s = shifts[d - n];
    const FieldElem c = r[d] / s.leading();
    q[d - n] = c;
    const auto sc = s.coeffs();
    for (size_t i = 0; i < sc.size(); ++i) r[i] -= c * sc[i];
  }
  r.resize(n, ring.field_ctx().zero());
  return {SkewPoly(ring, std::move(q)), SkewPoly(ring, std::move(r))};
}

namespace {

// g * c for a constant c, i.e. sum g_i (x^i c).
SkewPoly TimesConstant(const SkewPoly& g, const FieldElem& c) {
  const RingCtx& ring = g.ring();
  if (ring.delta_is_zero()) {
    std::vector<FieldElem> v(g.coeffs().begin(), g.coeffs().end());
    for (size_t i = 0; i < v.size(); ++i) v[i] = v[i] * ring.SigmaPow(c, static_cast<int64_t>(i));
    return SkewPoly(ring, std::move(v));
  }
  return g * SkewPoly::Constant(ring, c);
}

}  // namespace

DivModResult DivModLeft(const SkewPoly& f, const SkewPoly& g) {
  RequireSameRing(f, g);
  const RingCtx& ring = f.ring();
  if (g.is_zero()) throw Error(ErrorCode::kDivisionByZero, "division by the zero polynomial");
  const size_t n = *g.degree();
  if (f.is_zero() || *f.degree() < n) return {SkewPoly(ring), f};

  const size_t top = *f.degree();
  const FieldElem zero = ring.field_ctx().zero();
  std::vector<FieldElem> r(f.coeffs().begin(), f.coeffs().end());
  std::vector<FieldElem> q(top - n + 1, zero);
  for (size_t d = top + 1; d-- > n;) {
    if (r[d].is_zero()) continue;
    // g * (c x^j) has leading term g_n sigma^n(c) x^{n+j}.
    const FieldElem c = ring.SigmaPow(r[d] / g.leading(), -static_cast<int64_t>(n));
    const size_t j = d - n;
    q[j] = c;
    const SkewPoly gc = TimesConstant(g, c);
    const auto sc = gc.coeffs();
    for (size_t i = 0; i < sc.size(); ++i) r[i + j] -= sc[i];
  }
  r.resize(n, zero);
  return {SkewPoly(ring, std::move(q)), SkewPoly(ring, std::move(r))};
}

bool DividesRight(const SkewPoly& g, const SkewPoly& f) {
  return DivModRight(f, g).remainder.is_zero();
}

bool DividesLeft(const SkewPoly& g, const SkewPoly& f) {
  return DivModLeft(f, g).remainder.is_zero();
}

std::vector<FieldElem> RightCoeffs(const SkewPoly& f) {
  const RingCtx& ring = f.ring();
  std::vector<FieldElem> out;
  if (f.is_zero()) return out;
  if (ring.delta_is_zero()) {
    for (size_t i = 0; i < f.coeffs().size(); ++i) {
      out.push_back(ring.SigmaPow(f.coeffs()[i], -static_cast<int64_t>(i)));
    }
    return out;
  }
  // f = r_0 + x (r_1 + x (r_2 + ...)).
  const SkewPoly x = SkewPoly::X(ring);
  SkewPoly cur = f;
  while (!cur.is_zero()) {
    DivModResult dm = DivModLeft(cur, x);
    out.push_back(dm.remainder.coeff(0));
    cur = std::move(dm.quotient);
  }
  return out;
}

SkewPoly FromRightCoeffs(const RingCtx& ring, std::span<const FieldElem> c) {
  if (c.empty()) return SkewPoly(ring);
  if (ring.delta_is_zero()) {
    std::vector<FieldElem> v;
    for (size_t i = 0; i < c.size(); ++i) v.push_back(ring.SigmaPow(c[i], static_cast<int64_t>(i)));
    return SkewPoly(ring, std::move(v));
  }
  SkewPoly h = SkewPoly::Constant(ring, c.back());
  for (size_t i = c.size() - 1; i-- > 0;) h = MulX(h) + SkewPoly::Constant(ring, c[i]);
  return h;
}

// ---------------------------------------------------------------------------
// Text forms

SkewPoly ParsePoly(std::string_view text, const RingCtx& ring) {
  const FieldCtx& field = ring.field_ctx();
  struct Term {
    std::string body;
    bool negate;
  };
  std::vector<Term> terms;
  std::string cur;
  bool negate = false;
  int depth = 0;
  char prev = '\0';
  for (char ch : text) {
    if (ch == '[') ++depth;
    if (ch == ']') --depth;
    const bool sep = depth == 0 && (ch == '+' || (ch == '-' && prev != '^'));
    if (sep) {
      if (!TrimCopy(cur).empty()) terms.push_back({cur, negate});
      else if (prev != '\0') {
        throw Error(ErrorCode::kSyntaxError, "empty term in '" + std::string(text) + "'");
      }
      cur.clear();
      negate = ch == '-';
    } else {
      cur += ch;
    }
    if (!std::isspace(static_cast<unsigned char>(ch))) prev = ch;
  }
  if (TrimCopy(cur).empty()) {
    throw Error(ErrorCode::kSyntaxError, "dangling operator or empty polynomial '" +
                                             std::string(text) + "'");
  }
  terms.push_back({cur, negate});

  std::map<size_t, FieldElem> acc;
  for (const Term& t : terms) {
    const std::string body = TrimCopy(t.body);
    const size_t xpos = body.find('x');
    FieldElem c;
    size_t deg = 0;
    if (xpos == std::string::npos) {
      c = ParseElement(body, field);
    } else {
      std::string coef = TrimCopy(body.substr(0, xpos));
      if (!coef.empty()) {
        if (coef.back() != '*') {
          throw Error(ErrorCode::kSyntaxError, "expected '*' before x in '" + body + "'");
        }
        coef.pop_back();
        c = ParseElement(coef, field);
      } else {
        c = field.one();
      }
      const std::string rest = TrimCopy(body.substr(xpos + 1));
      if (rest.empty()) {
        deg = 1;
      } else {
        if (rest[0] != '^' || rest.size() < 2) {
          throw Error(ErrorCode::kSyntaxError, "bad exponent in '" + body + "'");
        }
        const std::string digits = TrimCopy(rest.substr(1));
        if (digits.empty() || digits.size() > 9) {
          throw Error(ErrorCode::kSyntaxError, "bad exponent in '" + body + "'");
        }
        for (char d : digits) {
          if (!std::isdigit(static_cast<unsigned char>(d))) {
            throw Error(ErrorCode::kSyntaxError, "bad exponent in '" + body + "'");
          }
        }
        deg = std::stoul(digits);
      }
    }
    if (t.negate) c = -c;
    auto it = acc.find(deg);
    if (it == acc.end()) acc.emplace(deg, c);
    else it->second += c;
  }
  std::vector<FieldElem> v(acc.rbegin()->first + 1, field.zero());
  for (const auto& [deg, c] : acc) v[deg] = c;
  return SkewPoly(ring, std::move(v));
}

std::string FormatPoly(const SkewPoly& f) {
  if (f.is_zero()) return "0";
  std::string out;
  for (size_t i = f.coeffs().size(); i-- > 0;) {
    const FieldElem& c = f.coeffs()[i];
    if (c.is_zero()) continue;
    std::string term;
    if (i == 0) {
      term = FormatElement(c);
    } else {
      const std::string mono = i == 1 ? "x" : "x^" + std::to_string(i);
      term = c.is_one() ? mono : FormatElement(c) + "*" + mono;
    }
    if (!out.empty()) out += " + ";
    out += term;
  }
  return out;
}

}  // namespace skewmat
