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

#include "skewmat/field.h"

#include <algorithm>
#include <atomic>
#include <cctype>
#include <map>
#include <mutex>
#include <numeric>
#include <sstream>
#include <utility>

#include "skewmat/error.h"

namespace skewmat {
namespace {

std::atomic<uint64_t> g_table_cap{kDefaultTableCap};

// Dense polynomials over F_p, lowest coefficient first. Only used while
// constructing a field, before any tables exist.
using PrimePoly = std::vector<uint32_t>;

void Trim(PrimePoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

uint32_t PowModP(uint64_t base, uint64_t e, uint32_t p) {
  uint64_t r = 1 % p;
  base %= p;
  while (e > 0) {
    if (e & 1) r = r * base % p;
    base = base * base % p;
    e >>= 1;
  }
  return static_cast<uint32_t>(r);
}

uint32_t InvModP(uint32_t a, uint32_t p) { return PowModP(a, p - 2, p); }

// a mod f, f monic.
PrimePoly Mod(PrimePoly a, const PrimePoly& f, uint32_t p) {
  const size_t n = f.size() - 1;
  Trim(a);
  while (a.size() > n) {
    const uint64_t lead = a.back();
    const size_t shift = a.size() - 1 - n;
    for (size_t i = 0; i <= n; ++i) {
      a[shift + i] = static_cast<uint32_t>(
          (a[shift + i] + (p - lead) * f[i] % p) % p);
    }
    Trim(a);
  }
  return a;
}

PrimePoly MulMod(const PrimePoly& a, const PrimePoly& b, const PrimePoly& f,
                 uint32_t p) {
  if (a.empty() || b.empty()) return {};
  PrimePoly r(a.size() + b.size() - 1, 0);
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (size_t j = 0; j < b.size(); ++j) {
      r[i + j] = static_cast<uint32_t>((r[i + j] + uint64_t{a[i]} * b[j]) % p);
    }
  }
  return Mod(std::move(r), f, p);
}

PrimePoly PowMod(PrimePoly base, uint64_t e, const PrimePoly& f, uint32_t p) {
  PrimePoly r = Mod({1}, f, p);
  base = Mod(std::move(base), f, p);
  while (e > 0) {
    if (e & 1) r = MulMod(r, base, f, p);
    base = MulMod(base, base, f, p);
    e >>= 1;
  }
  return r;
}

PrimePoly Sub(PrimePoly a, const PrimePoly& b, uint32_t p) {
  if (a.size() < b.size()) a.resize(b.size(), 0);
  for (size_t i = 0; i < b.size(); ++i) a[i] = (a[i] + p - b[i]) % p;
  Trim(a);
  return a;
}

PrimePoly Gcd(PrimePoly a, PrimePoly b, uint32_t p) {
  Trim(a);
  Trim(b);
  while (!b.empty()) {
    const uint32_t inv = InvModP(b.back(), p);
    PrimePoly monic = b;
    for (auto& c : monic) c = static_cast<uint32_t>(uint64_t{c} * inv % p);
    a = Mod(std::move(a), monic, p);
    std::swap(a, b);
  }
  return a;
}

bool IsIrreducible(const PrimePoly& f, uint32_t p) {
  const size_t n = f.size() - 1;
  if (n == 1) return true;
  // Divisible by y.
  if (f[0] == 0) return false;
  const PrimePoly x = {0, 1};
  // powers[i] = x^{p^i} mod f.
  std::vector<PrimePoly> powers = {Mod(x, f, p)};
  for (size_t i = 1; i <= n; ++i) powers.push_back(PowMod(powers.back(), p, f, p));
  if (Sub(powers[n], x, p) != PrimePoly{}) return false;
  for (uint64_t r : PrimeFactors(n)) {
    PrimePoly g = Gcd(f, Sub(powers[n / r], x, p), p);
    if (g.size() != 1) return false;
  }
  return true;
}

bool ResidueIsPrimitive(const PrimePoly& f, uint32_t p, uint64_t unit_order) {
  // Only possible for f = y.
  if (Mod({0, 1}, f, p).empty()) return false;
  for (uint64_t r : PrimeFactors(unit_order)) {
    if (PowMod({0, 1}, unit_order / r, f, p) == PrimePoly{1}) return false;
  }
  return true;
}

// The norm of a root, (-1)^n f_0, must generate F_p^* when the root is
// primitive.
bool NormIsPrimitive(const PrimePoly& f, uint32_t p) {
  const size_t n = f.size() - 1;
  const uint32_t norm = n % 2 == 0 ? f[0] : (p - f[0]) % p;
  if (norm == 0) return false;
  for (uint64_t r : PrimeFactors(p - 1)) {
    if (PowModP(norm, (p - 1) / r, p) == 1) return false;
  }
  return true;
}

bool IsPrimitiveElement(const PrimePoly& g, const PrimePoly& f, uint32_t p,
                        uint64_t unit_order) {
  if (g.empty()) return false;
  for (uint64_t r : PrimeFactors(unit_order)) {
    if (PowMod(g, unit_order / r, f, p) == PrimePoly{1}) return false;
  }
  return true;
}

uint64_t CheckedOrder(uint32_t p, uint32_t n) {
  uint64_t order = 1;
  const uint64_t cap = TableCap();
  for (uint32_t i = 0; i < n; ++i) {
    order *= p;
    if (order > cap) {
      throw Error(ErrorCode::kTableCapExceeded,
                  "GF(" + std::to_string(p) + "^" + std::to_string(n) +
                      ") exceeds the table cap of " + std::to_string(cap));
    }
  }
  return order;
}

std::string Trimmed(std::string_view s) {
  size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return std::string(s.substr(b, e - b));
}

BigInt ParseInteger(std::string_view text, std::string_view context) {
  std::string t = Trimmed(text);
  bool negative = false;
  size_t i = 0;
  if (!t.empty() && (t[0] == '-' || t[0] == '+')) {
    negative = t[0] == '-';
    i = 1;
  }
  if (i == t.size()) {
    throw Error(ErrorCode::kSyntaxError,
                "expected an integer in '" + std::string(context) + "'");
  }
  BigInt v = 0;
  for (; i < t.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(t[i]))) {
      throw Error(ErrorCode::kSyntaxError,
                  "expected an integer in '" + std::string(context) + "'");
    }
    v = v * 10 + (t[i] - '0');
  }
  return negative ? BigInt(-v) : v;
}

std::vector<uint32_t> ParseIntList(std::string_view text,
                                   std::string_view context) {
  std::string t = Trimmed(text);
  if (t.size() < 2 || t.front() != '[' || t.back() != ']') {
    throw Error(ErrorCode::kSyntaxError,
                "expected a bracketed list in '" + std::string(context) + "'");
  }
  std::vector<uint32_t> out;
  std::string inner = t.substr(1, t.size() - 2);
  if (Trimmed(inner).empty()) return out;
  std::stringstream ss(inner);
  std::string item;
  while (std::getline(ss, item, ',')) {
    BigInt v = ParseInteger(item, context);
    if (v < 0 || v > 0xffffffffu) {
      throw Error(ErrorCode::kSyntaxError,
                  "list entry out of range in '" + std::string(context) + "'");
    }
    out.push_back(static_cast<uint32_t>(v));
  }
  return out;
}

}  // namespace

uint64_t TableCap() { return g_table_cap.load(); }
void SetTableCap(uint64_t cap) { g_table_cap.store(cap); }

bool IsPrime(uint64_t n) {
  if (n < 2) return false;
  for (uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

std::vector<uint64_t> PrimeFactors(uint64_t n) {
  std::vector<uint64_t> out;
  for (uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

// ---------------------------------------------------------------------------
// FieldCtx

Field FieldCtx::Create(uint32_t p, uint32_t n,
                       std::optional<std::vector<uint32_t>> modulus,
                       FieldOptions options) {
  if (!IsPrime(p)) {
    throw Error(ErrorCode::kNotPrime, std::to_string(p) + " is not prime");
  }
  if (n < 1) throw Error(ErrorCode::kInvalidArgument, "degree must be >= 1");
  const uint64_t order = CheckedOrder(p, n);
  const uint64_t unit_order = order - 1;

  PrimePoly f;
  bool primitive = true;
  if (modulus) {
    f = *modulus;
    if (f.size() != n + 1 || f.back() != 1) {
      throw Error(ErrorCode::kInvalidArgument,
                  "modulus must be monic of degree " + std::to_string(n));
    }
    for (uint32_t c : f) {
      if (c >= p) {
        throw Error(ErrorCode::kInvalidArgument,
                    "modulus coefficients must lie in [0, p)");
      }
    }
    if (!IsIrreducible(f, p)) {
      throw Error(ErrorCode::kReducible, "modulus is reducible over F_" +
                                             std::to_string(p));
    }
    primitive = ResidueIsPrimitive(f, p, unit_order);
    if (!primitive && !options.allow_nonprimitive_modulus) {
      throw Error(ErrorCode::kNotPrimitive,
                  "residue of x is not a primitive element");
    }
  } else {
    // Enumerate (c0, ..., c_{n-1}) lexicographically, c0 most significant.
    bool found = false;
    for (uint64_t idx = 0; idx < order && !found; ++idx) {
      PrimePoly cand(n + 1, 0);
      cand[n] = 1;
      uint64_t v = idx;
      for (uint32_t i = n; i-- > 0;) {
        cand[i] = static_cast<uint32_t>(v % p);
        v /= p;
      }
      if (NormIsPrimitive(cand, p) && IsIrreducible(cand, p) &&
          ResidueIsPrimitive(cand, p, unit_order)) {
        f = std::move(cand);
        found = true;
      }
    }
    if (!found) {
      throw Error(ErrorCode::kInternal, "no primitive modulus found");
    }
  }

  std::shared_ptr<FieldCtx> ctx(new FieldCtx());
  ctx->p_ = p;
  ctx->n_ = n;
  ctx->order_ = order;
  ctx->unit_order_ = static_cast<uint32_t>(unit_order);
  ctx->modulus_ = f;
  ctx->modulus_is_primitive_ = primitive;

  PrimePoly generator = Mod({0, 1}, f, p);
  if (!primitive) {
    // Smallest element, by base-p code, of full multiplicative order.
    for (uint64_t code = 1; code < order; ++code) {
      PrimePoly g(n, 0);
      uint64_t v = code;
      for (uint32_t i = 0; i < n; ++i) {
        g[i] = static_cast<uint32_t>(v % p);
        v /= p;
      }
      Trim(g);
      if (IsPrimitiveElement(g, f, p, unit_order)) {
        generator = std::move(g);
        break;
      }
    }
  }
  ctx->BuildTables(generator);
  return ctx;
}

void FieldCtx::BuildTables(const std::vector<uint32_t>& generator) {
  const uint32_t n = n_;
  const uint32_t p = p_;
  exp_table_.assign(unit_order_, 0);
  log_table_.assign(order_, FieldElem::kZeroExp);

  const bool generator_is_x =
      n >= 2 && generator == std::vector<uint32_t>{0, 1};
  std::vector<uint32_t> digits(n, 0);
  digits[0] = 1;
  auto code_of = [&](const std::vector<uint32_t>& d) {
    uint64_t c = 0;
    for (uint32_t i = n; i-- > 0;) c = c * p + d[i];
    return static_cast<uint32_t>(c);
  };
  for (uint32_t k = 0; k < unit_order_; ++k) {
    const uint32_t code = code_of(digits);
    if (log_table_[code] != FieldElem::kZeroExp) {
      throw Error(ErrorCode::kInternal, "generator is not primitive");
    }
    exp_table_[k] = code;
    log_table_[code] = k;
    if (generator_is_x) {
      const uint64_t top = digits[n - 1];
      for (uint32_t i = n - 1; i > 0; --i) digits[i] = digits[i - 1];
      digits[0] = 0;
      if (top != 0) {
        for (uint32_t i = 0; i < n; ++i) {
          digits[i] = static_cast<uint32_t>(
              (digits[i] + (p - top) * modulus_[i] % p) % p);
        }
      }
    } else {
      PrimePoly cur(digits);
      Trim(cur);
      cur = MulMod(cur, generator, modulus_, p);
      cur.resize(n, 0);
      digits = std::move(cur);
    }
  }

  zech_.assign(unit_order_, FieldElem::kZeroExp);
  for (uint32_t k = 0; k < unit_order_; ++k) {
    const uint32_t code = exp_table_[k];
    const uint32_t d0 = code % p;
    const uint32_t shifted = code - d0 + (d0 + 1) % p;
    zech_[k] = log_table_[shifted];
  }
  neg_one_exp_ = (p == 2) ? 0 : unit_order_ / 2;

  frobenius_exp_.assign(n, 0);
  uint64_t pt = 1;
  for (uint32_t t = 0; t < n; ++t) {
    frobenius_exp_[t] = static_cast<uint32_t>(pt % unit_order_);
    pt = pt * p % unit_order_;
  }
}

uint32_t FieldCtx::Reduce(int64_t k) const {
  int64_t r = k % static_cast<int64_t>(unit_order_);
  if (r < 0) r += unit_order_;
  return static_cast<uint32_t>(r);
}

FieldElem FieldCtx::alpha(int64_t k) const { return Make(Reduce(k)); }

FieldElem FieldCtx::FromInt(int64_t c) const {
  int64_t r = c % static_cast<int64_t>(p_);
  if (r < 0) r += p_;
  return Make(log_table_[static_cast<uint32_t>(r)]);
}

FieldElem FieldCtx::FromVector(std::span<const uint32_t> coeffs) const {
  if (coeffs.size() > n_) {
    throw Error(ErrorCode::kSyntaxError,
                "vector has more than " + std::to_string(n_) + " entries");
  }
  uint64_t code = 0;
  for (size_t i = coeffs.size(); i-- > 0;) {
    if (coeffs[i] >= p_) {
      throw Error(ErrorCode::kSyntaxError, "vector entry outside [0, p)");
    }
    code = code * p_ + coeffs[i];
  }
  return Make(log_table_[code]);
}

FieldElem FieldCtx::residue_x() const {
  if (n_ >= 2) return Make(log_table_[p_]);
  return FromInt(-static_cast<int64_t>(modulus_[0]));
}

std::vector<FieldElem> FieldCtx::Elements() const {
  std::vector<FieldElem> out;
  out.reserve(order_);
  out.push_back(zero());
  for (uint32_t k = 0; k < unit_order_; ++k) out.push_back(Make(k));
  return out;
}

std::vector<uint32_t> FieldCtx::ToVector(const FieldElem& a) const {
  if (!Owns(a)) throw Error(ErrorCode::kCtxMismatch, "element of another field");
  std::vector<uint32_t> out(n_, 0);
  if (a.is_zero()) return out;
  uint32_t code = exp_table_[a.exp_];
  for (uint32_t i = 0; i < n_; ++i) {
    out[i] = code % p_;
    code /= p_;
  }
  return out;
}

FieldElem FieldCtx::FrobeniusP(const FieldElem& a, int64_t t) const {
  if (!Owns(a)) throw Error(ErrorCode::kCtxMismatch, "element of another field");
  if (a.is_zero()) return a;
  int64_t s = t % static_cast<int64_t>(n_);
  if (s < 0) s += n_;
  const uint64_t e = uint64_t{a.exp_} * frobenius_exp_[s] % unit_order_;
  return Make(static_cast<uint32_t>(e));
}

// ---------------------------------------------------------------------------
// FieldElem

namespace {

const FieldCtx* Common(const FieldElem& a, const FieldElem& b) {
  if (a.ctx() == nullptr || a.ctx() != b.ctx()) {
    throw Error(ErrorCode::kCtxMismatch,
                "field elements belong to different contexts");
  }
  return a.ctx();
}

}  // namespace

uint32_t FieldElem::log() const {
  if (is_zero()) throw Error(ErrorCode::kDivisionByZero, "log of zero");
  return exp_;
}

FieldElem FieldElem::operator+(const FieldElem& b) const {
  const FieldCtx* f = Common(*this, b);
  if (is_zero()) return b;
  if (b.is_zero()) return *this;
  const uint32_t n = f->unit_order_;
  const uint32_t d = b.exp_ >= exp_ ? b.exp_ - exp_ : b.exp_ + n - exp_;
  const uint32_t z = f->zech_[d];
  if (z == kZeroExp) return f->zero();
  return FieldElem(f, (exp_ + z) % n);
}

FieldElem FieldElem::operator-() const {
  if (ctx_ == nullptr) throw Error(ErrorCode::kCtxMismatch, "unbound element");
  if (is_zero()) return *this;
  return FieldElem(ctx_, (exp_ + ctx_->neg_one_exp_) % ctx_->unit_order_);
}

FieldElem FieldElem::operator-(const FieldElem& b) const { return *this + (-b); }

FieldElem FieldElem::operator*(const FieldElem& b) const {
  const FieldCtx* f = Common(*this, b);
  if (is_zero() || b.is_zero()) return f->zero();
  return FieldElem(f, static_cast<uint32_t>(
                          (uint64_t{exp_} + b.exp_) % f->unit_order_));
}

FieldElem FieldElem::operator/(const FieldElem& b) const {
  const FieldCtx* f = Common(*this, b);
  if (b.is_zero()) throw Error(ErrorCode::kDivisionByZero, "division by zero");
  if (is_zero()) return *this;
  const uint32_t n = f->unit_order_;
  return FieldElem(f, exp_ >= b.exp_ ? exp_ - b.exp_ : exp_ + n - b.exp_);
}

FieldElem Inverse(const FieldElem& a) {
  if (a.ctx() == nullptr) throw Error(ErrorCode::kCtxMismatch, "unbound element");
  return a.ctx()->one() / a;
}

FieldElem Pow(const FieldElem& a, int64_t k) {
  const FieldCtx* f = a.ctx();
  if (f == nullptr) throw Error(ErrorCode::kCtxMismatch, "unbound element");
  if (a.is_zero()) {
    if (k < 0) throw Error(ErrorCode::kDivisionByZero, "negative power of zero");
    return k == 0 ? f->one() : a;
  }
  const int64_t n = f->unit_order();
  int64_t r = k % n;
  if (r < 0) r += n;
  return f->alpha(static_cast<int64_t>(uint64_t{a.log()} * r % n));
}

FieldElem Pow(const FieldElem& a, const BigInt& k) {
  const FieldCtx* f = a.ctx();
  if (f == nullptr) throw Error(ErrorCode::kCtxMismatch, "unbound element");
  if (a.is_zero()) {
    if (k < 0) throw Error(ErrorCode::kDivisionByZero, "negative power of zero");
    return k == 0 ? f->one() : a;
  }
  return Pow(a, static_cast<int64_t>(ModReduce(k, f->unit_order())));
}

FieldElem Frobenius(const FieldElem& a, int64_t e, uint32_t base_degree) {
  const FieldCtx* f = a.ctx();
  if (f == nullptr) throw Error(ErrorCode::kCtxMismatch, "unbound element");
  const int64_t n = f->degree();
  int64_t er = e % n;
  return f->FrobeniusP(a, er * static_cast<int64_t>(base_degree % n));
}

uint64_t MultiplicativeOrder(const FieldElem& a) {
  const uint64_t n = a.ctx()->unit_order();
  return n / std::gcd(uint64_t{a.log()}, n);
}

std::vector<uint32_t> MinimalPolynomialOverPrime(const FieldElem& a) {
  const FieldCtx& f = *a.ctx();
  std::vector<FieldElem> conjugates = {a};
  for (;;) {
    FieldElem next = f.FrobeniusP(conjugates.back(), 1);
    if (next == a) break;
    conjugates.push_back(next);
  }
  // prod (y - c), lowest coefficient first.
  std::vector<FieldElem> poly = {f.one()};
  for (const FieldElem& c : conjugates) {
    std::vector<FieldElem> next(poly.size() + 1, f.zero());
    for (size_t i = 0; i < poly.size(); ++i) {
      next[i + 1] += poly[i];
      next[i] -= poly[i] * c;
    }
    poly = std::move(next);
  }
  std::vector<uint32_t> out;
  for (const FieldElem& c : poly) {
    std::vector<uint32_t> v = f.ToVector(c);
    for (size_t i = 1; i < v.size(); ++i) {
      if (v[i] != 0) {
        throw Error(ErrorCode::kInternal, "minimal polynomial not over F_p");
      }
    }
    out.push_back(v[0]);
  }
  return out;
}

Field DefaultField(uint32_t p, uint32_t n) {
  static std::mutex mu;
  static std::map<std::pair<uint32_t, uint32_t>, Field> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find({p, n});
  if (it != cache.end()) return it->second;
  Field f = FieldCtx::Create(p, n);
  cache.emplace(std::make_pair(p, n), f);
  return f;
}

// ---------------------------------------------------------------------------
// FieldEmbedding

FieldEmbedding FieldEmbedding::Create(Field small, Field big) {
  if (small->characteristic() != big->characteristic() ||
      big->degree() % small->degree() != 0) {
    throw Error(ErrorCode::kNotASubfield,
                FormatFieldSpec(*small) + " is not a subfield of " +
                    FormatFieldSpec(*big));
  }
  FieldEmbedding emb;
  emb.small_ = small;
  emb.big_ = big;
  const uint32_t small_units = small->unit_order();
  emb.index_ = big->unit_order() / small_units;
  const std::vector<uint32_t> minpoly =
      MinimalPolynomialOverPrime(small->alpha(1));
  for (uint32_t j = 1; j <= small_units; ++j) {
    if (std::gcd(j, small_units) != 1) continue;
    const uint64_t e = uint64_t{emb.index_} * j % big->unit_order();
    const FieldElem cand = big->alpha(static_cast<int64_t>(e));
    FieldElem acc = big->zero();
    for (size_t i = minpoly.size(); i-- > 0;) {
      acc = acc * cand + big->FromInt(minpoly[i]);
    }
    if (acc.is_zero()) {
      emb.exponent_ = static_cast<uint32_t>(e);
      uint32_t inv = 0;
      for (uint32_t t = 0; t < small_units; ++t) {
        if (uint64_t{j} * t % small_units == 1 % small_units) {
          inv = t;
          break;
        }
      }
      emb.inverse_multiplier_ = inv;
      return emb;
    }
  }
  throw Error(ErrorCode::kInternal, "no root of the minimal polynomial found");
}

FieldElem FieldEmbedding::operator()(const FieldElem& a) const {
  if (!small_->Owns(a)) {
    throw Error(ErrorCode::kCtxMismatch, "element is not in the small field");
  }
  if (a.is_zero()) return big_->zero();
  return big_->alpha(static_cast<int64_t>(uint64_t{a.log()} * exponent_ %
                                          big_->unit_order()));
}

std::optional<FieldElem> FieldEmbedding::Preimage(const FieldElem& b) const {
  if (!big_->Owns(b)) {
    throw Error(ErrorCode::kCtxMismatch, "element is not in the big field");
  }
  if (b.is_zero()) return small_->zero();
  const uint32_t t = b.log();
  if (t % index_ != 0) return std::nullopt;
  const uint64_t k =
      uint64_t{t / index_} * inverse_multiplier_ % small_->unit_order();
  return small_->alpha(static_cast<int64_t>(k));
}

// ---------------------------------------------------------------------------
// Text forms

FieldElem ParseElement(std::string_view text, const FieldCtx& field) {
  const std::string t = Trimmed(text);
  if (t.empty()) throw Error(ErrorCode::kSyntaxError, "empty element");
  if (t.front() == '[') {
    std::vector<uint32_t> v = ParseIntList(t, t);
    return field.FromVector(v);
  }
  if (t == "a") return field.alpha(1);
  if (t.size() > 2 && t[0] == 'a' && t[1] == '^') {
    const BigInt k = ParseInteger(t.substr(2), t);
    return field.alpha(static_cast<int64_t>(ModReduce(k, field.unit_order())));
  }
  if (std::isdigit(static_cast<unsigned char>(t[0])) || t[0] == '-') {
    const BigInt v = ParseInteger(t, t);
    return field.FromInt(static_cast<int64_t>(ModReduce(v, field.characteristic())));
  }
  throw Error(ErrorCode::kSyntaxError, "cannot parse element '" + t + "'");
}

std::string FormatElement(const FieldElem& a) {
  if (a.is_zero()) return "0";
  const uint32_t k = a.log();
  if (k == 0) return "1";
  if (k == 1) return "a";
  return "a^" + std::to_string(k);
}

FieldSpec ParseFieldSpec(std::string_view text) {
  std::string t = Trimmed(text);
  std::string lower = t;
  std::transform(lower.begin(), lower.end(), lower.begin(),
                 [](unsigned char c) { return std::tolower(c); });
  if (lower.rfind("gf(", 0) != 0 || t.back() != ')') {
    throw Error(ErrorCode::kSyntaxError, "expected gf(P^N) but got '" + t + "'");
  }
  std::string body = t.substr(3, t.size() - 4);
  FieldSpec spec;
  std::string head = body;
  const size_t colon = body.find(':');
  if (colon != std::string::npos) {
    head = body.substr(0, colon);
    spec.modulus = ParseIntList(body.substr(colon + 1), t);
  }
  const size_t caret = head.find('^');
  const BigInt p = ParseInteger(head.substr(0, caret), t);
  const BigInt n =
      caret == std::string::npos ? BigInt(1) : ParseInteger(head.substr(caret + 1), t);
  if (p < 2 || p > 0xffffffffu || n < 1 || n > 64) {
    throw Error(ErrorCode::kSyntaxError, "field parameters out of range in '" + t + "'");
  }
  spec.p = static_cast<uint32_t>(p);
  spec.n = static_cast<uint32_t>(n);
  if (spec.modulus && spec.modulus->size() != spec.n + 1) {
    throw Error(ErrorCode::kSyntaxError,
                "modulus must list " + std::to_string(spec.n + 1) +
                    " coefficients in '" + t + "'");
  }
  return spec;
}

std::string FormatFieldSpec(const FieldCtx& field) {
  std::string s = "gf(" + std::to_string(field.characteristic()) + "^" +
                  std::to_string(field.degree()) + ":[";
  for (size_t i = 0; i < field.modulus().size(); ++i) {
    if (i) s += ",";
    s += std::to_string(field.modulus()[i]);
  }
  return s + "])";
}

Field MakeField(const FieldSpec& spec) {
  if (!IsPrime(spec.p)) {
    throw Error(ErrorCode::kNotPrime, std::to_string(spec.p) + " is not prime");
  }
  if (!spec.modulus) return DefaultField(spec.p, spec.n);
  return FieldCtx::Create(spec.p, spec.n, spec.modulus);
}

}  // namespace skewmat
