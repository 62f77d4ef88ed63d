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

#include "verify.h"

#include <algorithm>
#include <bit>
#include <functional>
#include <iterator>
#include <memory>
#include <random>
#include <string>
#include <utility>

#include "skewmat/error.h"
#include "skewmat/evaluation.h"
#include "skewmat/extension.h"
#include "skewmat/root_matroid.h"

namespace skewmat::cli {
namespace {

// Largest set whose subsets are enumerated exhaustively.
constexpr size_t kExhaustiveLimit = 16;

using SubsetFn = std::function<void(const ElemSet&)>;

// FNV-1a, so suite streams do not depend on the standard library's hash.
uint64_t MixName(uint64_t seed, std::string_view name) {
  uint64_t h = 1469598103934665603ull ^ seed;
  for (char c : name) {
    h ^= static_cast<unsigned char>(c);
    h *= 1099511628211ull;
  }
  return h;
}

std::string FormatSet(const ElemSet& z) {
  std::string s = "{";
  for (size_t i = 0; i < z.size(); ++i) {
    if (i) s += ", ";
    s += FormatElement(z[i]);
  }
  return s + "}";
}

void Expect(Check& c, bool ok, const std::function<std::string()>& what) {
  ++c.count;
  if (!ok && c.pass) {
    c.pass = false;
    c.counterexample = what();
  }
}

void RequireZeroDelta(const RingCtx& ring, std::string_view suite) {
  if (!ring.delta_is_zero()) {
    throw Error(ErrorCode::kDeltaNotZero,
                "suite " + std::string(suite) + " requires delta = 0");
  }
}

FieldElem RandomElem(const FieldCtx& field, std::mt19937_64& rng) {
  const uint64_t i = rng() % field.order();
  return i == 0 ? field.zero() : field.alpha(static_cast<int64_t>(i - 1));
}

SkewPoly RandomPoly(const RingCtx& ring, size_t max_degree, std::mt19937_64& rng) {
  std::vector<FieldElem> c(max_degree + 1);
  for (auto& x : c) x = RandomElem(ring.field_ctx(), rng);
  return SkewPoly(ring, std::move(c));
}

class Suite {
 public:
  Suite(std::string name, const Ring& ring, const VerifyOptions& opts)
      : ring_(ring), opts_(opts), rng_(MixName(opts.seed, name)) {
    result_.suite = std::move(name);
    result_.mode = "exhaustive";
  }

  const RingCtx& ring() const { return *ring_; }
  const FieldCtx& field() const { return ring_->field_ctx(); }
  std::mt19937_64& rng() { return rng_; }
  uint64_t trials() const { return opts_.trials; }

  Check& Add(std::string name) {
    checks_.push_back(std::make_unique<Check>());
    checks_.back()->name = std::move(name);
    return *checks_.back();
  }

  void MarkSampled() { result_.mode = "sampled"; }

  void Note(std::string key, uint64_t value) {
    result_.notes.emplace_back(std::move(key), value);
  }

  // True when a set of this size can be enumerated. Otherwise switches to
  // sampling, or throws when sampling was not requested.
  bool Exhaustive(size_t size, std::string_view what) {
    if (size <= kExhaustiveLimit) return true;
    if (!opts_.sampled) {
      throw Error(ErrorCode::kTableCapExceeded,
                  std::string(what) + " has " + std::to_string(size) +
                      " elements, above the exhaustive limit of " +
                      std::to_string(kExhaustiveLimit) + "; pass --sampled");
    }
    MarkSampled();
    return false;
  }

  // Subsets of ground with at most max_size elements: all of them, or
  // trials random ones.
  void ForSubsets(const ElemSet& ground, size_t max_size, std::string_view what,
                  const SubsetFn& fn) {
    if (Exhaustive(ground.size(), what)) {
      for (uint64_t mask = 0; mask < (uint64_t{1} << ground.size()); ++mask) {
        if (static_cast<size_t>(std::popcount(mask)) > max_size) continue;
        ElemSet z;
        for (size_t i = 0; i < ground.size(); ++i) {
          if (mask >> i & 1) z.push_back(ground[i]);
        }
        fn(z);
      }
      return;
    }
    for (uint64_t t = 0; t < opts_.trials; ++t) fn(RandomSubset(ground, max_size));
  }

  ElemSet RandomSubset(const ElemSet& ground, size_t max_size) {
    const size_t size = rng_() % (std::min(max_size, ground.size()) + 1);
    ElemSet z;
    std::sample(ground.begin(), ground.end(), std::back_inserter(z), size, rng_);
    return z;
  }

  // Polynomials of degree <= max_degree: all when the field is small,
  // otherwise trials random ones.
  void ForPolys(size_t max_degree, const std::function<void(const SkewPoly&)>& fn) {
    const ElemSet elems = field().Elements();
    if (!Exhaustive(elems.size(), "the coefficient field")) {
      for (uint64_t t = 0; t < opts_.trials; ++t) fn(RandomPoly(ring(), max_degree, rng_));
      return;
    }
    uint64_t count = 1;
    for (size_t i = 0; i <= max_degree; ++i) count *= elems.size();
    std::vector<FieldElem> c(max_degree + 1);
    for (uint64_t idx = 0; idx < count; ++idx) {
      uint64_t t = idx;
      for (auto& x : c) {
        x = elems[t % elems.size()];
        t /= elems.size();
      }
      fn(SkewPoly(ring(), c));
    }
  }

  // Field elements, or trials random ones on large fields.
  ElemSet Points() {
    if (field().order() <= 256) return field().Elements();
    ElemSet out;
    for (uint64_t t = 0; t < opts_.trials; ++t) out.push_back(RandomElem(field(), rng_));
    MarkSampled();
    return out;
  }

  SuiteResult Finish() {
    for (auto& c : checks_) result_.checks.push_back(std::move(*c));
    return std::move(result_);
  }

 private:
  Ring ring_;
  VerifyOptions opts_;
  std::mt19937_64 rng_;
  std::vector<std::unique_ptr<Check>> checks_;
  SuiteResult result_;
};

SuiteResult MatroidAxioms(Suite& s) {
  RequireZeroDelta(s.ring(), "matroid-axioms");
  const ElemSet elems = s.field().Elements();
  const size_t small = s.ring().m() + 1;
  for (Side side : {Side::kRight, Side::kLeft}) {
    const std::string tag(SideName(side));
    Check& i1 = s.Add("I1 " + tag);
    Check& i2 = s.Add("I2 " + tag);
    Check& i3 = s.Add("I3 " + tag);
    Check& by_closure = s.Add("independence by closure " + tag);
    const Matroid m(s.ring().shared(), side);
    Expect(i1, m.IsIndependent(ElemSet{}), [] { return "{}"; });
    if (s.Exhaustive(elems.size(), "the field")) {
      const uint64_t count = uint64_t{1} << elems.size();
      auto subset = [&](uint64_t mask) {
        ElemSet z;
        for (size_t i = 0; i < elems.size(); ++i) {
          if (mask >> i & 1) z.push_back(elems[i]);
        }
        return z;
      };
      std::vector<char> indep(count);
      for (uint64_t mask = 0; mask < count; ++mask) indep[mask] = m.IsIndependent(subset(mask));
      for (uint64_t mask = 0; mask < count; ++mask) {
        if (indep[mask]) {
          for (uint64_t rest = mask; rest; rest &= rest - 1) {
            const uint64_t sub = mask & ~(rest & -rest);
            Expect(i2, indep[sub], [&] { return FormatSet(subset(mask)); });
          }
        }
        if (static_cast<size_t>(std::popcount(mask)) <= small) {
          const ElemSet z = subset(mask);
          Expect(by_closure, IsIndependentByClosure(z, s.ring(), side) == indep[mask],
                 [&] { return FormatSet(z); });
        }
      }
      for (uint64_t a = 0; a < count; ++a) {
        if (!indep[a]) continue;
        for (uint64_t b = 0; b < count; ++b) {
          if (!indep[b] || std::popcount(b) <= std::popcount(a)) continue;
          bool found = false;
          for (uint64_t rest = b & ~a; rest && !found; rest &= rest - 1) {
            found = indep[a | (rest & -rest)];
          }
          Expect(i3, found, [&] { return FormatSet(subset(a)) + " " + FormatSet(subset(b)); });
        }
      }
      continue;
    }
    for (uint64_t t = 0; t < s.trials(); ++t) {
      const ElemSet a = Canonicalize(s.RandomSubset(elems, small));
      const ElemSet b = Canonicalize(s.RandomSubset(elems, small));
      const bool ia = m.IsIndependent(a), ib = m.IsIndependent(b);
      Expect(by_closure, IsIndependentByClosure(a, s.ring(), side) == ia,
             [&] { return FormatSet(a); });
      if (ia && !a.empty()) {
        ElemSet sub = a;
        sub.erase(sub.begin() + static_cast<std::ptrdiff_t>(s.rng()() % sub.size()));
        Expect(i2, m.IsIndependent(sub), [&] { return FormatSet(a); });
      }
      if (ia && ib && a.size() < b.size()) {
        bool found = false;
        for (const FieldElem& e : b) {
          if (std::binary_search(a.begin(), a.end(), e)) continue;
          ElemSet grown = a;
          grown.push_back(e);
          if (m.IsIndependent(Canonicalize(grown))) found = true;
        }
        Expect(i3, found, [&] { return FormatSet(a) + " " + FormatSet(b); });
      }
    }
  }
  return s.Finish();
}

ElemSet Image(const ElemSet& z, const std::function<FieldElem(const FieldElem&)>& fn) {
  ElemSet out;
  for (const FieldElem& a : z) out.push_back(fn(a));
  return Canonicalize(out);
}

SuiteResult IsoPhi(Suite& s) {
  RequireZeroDelta(s.ring(), "iso-phi");
  const RingCtx& r = s.ring();
  const ElemSet one = ConjugacyClass(s.field().one(), r).members;
  const size_t all = s.field().order();
  Check& gamma = s.Add("gamma_i preserves independence");
  Check& phi = s.Add("phi on [1]");
  Check& big_phi = s.Add("Phi on the field");
  for (uint64_t i = 0; i < ClassModulus(r); ++i) {
    s.ForSubsets(one, all, "[1]", [&](const ElemSet& z) {
      const ElemSet img = Image(z, [&](const FieldElem& a) {
        return GammaMap(static_cast<int64_t>(i), a, r);
      });
      for (Side side : {Side::kRight, Side::kLeft}) {
        Expect(gamma, IsIndependent(z, r, side) == IsIndependent(img, r, side), [&] {
          return "i=" + std::to_string(i) + " " + FormatSet(z) + " " +
                 std::string(SideName(side));
        });
      }
    });
  }
  auto iso = [&](Check& c, const ElemSet& z, auto map) {
    const ElemSet img = Image(z, map);
    Expect(c, img.size() == z.size() &&
                  IsIndependent(z, r, Side::kRight) == IsIndependent(img, r, Side::kLeft),
           [&] { return FormatSet(z); });
  };
  s.ForSubsets(one, all, "[1]", [&](const ElemSet& z) {
    iso(phi, z, [&](const FieldElem& a) { return PhiMap(a, r); });
  });
  s.ForSubsets(s.field().Elements(), all, "the field", [&](const ElemSet& z) {
    iso(big_phi, z, [&](const FieldElem& a) { return BigPhi(a, r); });
  });
  return s.Finish();
}

SuiteResult ClosureChecks(Suite& s) {
  RequireZeroDelta(s.ring(), "closure-lemmas");
  const RingCtx& r = s.ring();
  const ElemSet one = ConjugacyClass(s.field().one(), r).members;
  Check& span_right = s.Add("span closure right");
  Check& span_left = s.Add("span closure left");
  s.ForSubsets(one, one.size(), "[1]", [&](const ElemSet& z) {
    if (z.empty()) return;
    Expect(span_right, ClosureSpanRight(z, r) == ClosureRight(z, r),
           [&] { return FormatSet(z); });
    Expect(span_left, ClosureSpanLeft(z, r) == ClosureLeft(z, r),
           [&] { return FormatSet(z); });
  });
  for (Side side : {Side::kRight, Side::kLeft}) {
    const std::string tag(SideName(side));
    Check& laws = s.Add("closure laws " + tag);
    Check& minpoly = s.Add("minimal polynomial " + tag);
    s.ForSubsets(s.field().Elements(), r.m() + 1, "the field", [&](const ElemSet& raw) {
      const ElemSet z = Canonicalize(raw);
      const ElemSet cl = Closure(z, r, side);
      const bool contains = std::includes(cl.begin(), cl.end(), z.begin(), z.end());
      Expect(laws, contains && Closure(cl, r, side) == cl && Rank(cl, r, side) == Rank(z, r, side),
             [&] { return FormatSet(z); });
      const SkewPoly mu = MinPoly(z, r, side);
      bool vanishes = mu.is_monic() && *mu.degree() == Rank(z, r, side);
      for (const FieldElem& a : cl) vanishes = vanishes && Eval(mu, a, side).is_zero();
      Expect(minpoly, vanishes, [&] { return FormatSet(z); });
    });
  }
  return s.Finish();
}

SuiteResult Splitting(Suite& s) {
  RequireZeroDelta(s.ring(), "splitting");
  s.MarkSampled();
  Check& count = s.Add("distinct nonzero root count");
  Check& mult = s.Add("root multiplicity");
  Check& cls = s.Add("roots in one class");
  Check& deriv = s.Add("derivative identity");
  Check& factor = s.Add("x^k factorization");
  Check& verified = s.Add("verified cases");
  uint64_t done = 0, skipped = 0;
  for (uint64_t t = 0; t < s.trials(); ++t) {
    SkewPoly f = RandomPoly(s.ring(), 1 + s.rng()() % 4, s.rng());
    if (f.is_zero()) f = SkewPoly::X(s.ring());
    try {
      const RootReport rep = MakeRootReport(f, s.rng()());
      auto what = [&] { return FormatPoly(f); };
      Expect(count, rep.count_ok, what);
      Expect(mult, rep.multiplicity_ok, what);
      Expect(cls, rep.single_class_ok, what);
      Expect(deriv, rep.derivative_ok, what);
      Expect(factor, rep.bracket_ok && rep.inner_squarefree_ok && rep.left_factor_ok, what);
      ++done;
    } catch (const Error& e) {
      if (e.code() != ErrorCode::kTableCapExceeded) throw;
      ++skipped;
    }
  }
  Expect(verified, done > 0, [] { return "every trial was above the table cap"; });
  verified.count = done;
  s.Note("skipped_above_table_cap", skipped);
  return s.Finish();
}

SuiteResult DualRingSuite(Suite& s) {
  const RingCtx& r = s.ring();
  Check& dual = s.Add("left value equals dual right value");
  Check& round_trip = s.Add("dual round trip");
  Check& anti = s.Add("dual reverses products");
  Check& paths = s.Add("recursion equals division");
  const ElemSet points = s.Points();
  s.ForPolys(2, [&](const SkewPoly& f) {
    const SkewPoly fd = DualPoly(f);
    Expect(round_trip, FromDualPoly(fd, r) == f, [&] { return FormatPoly(f); });
    for (const FieldElem& a : points) {
      auto what = [&] { return FormatPoly(f) + " at " + FormatElement(a); };
      Expect(dual, EvalLeft(f, a) == EvalRight(fd, a), what);
      Expect(paths,
             EvalRightBySum(f, a) == EvalRightByDivision(f, a) &&
                 EvalLeftBySum(f, a) == EvalLeftByDivision(f, a),
             what);
    }
  });
  std::vector<SkewPoly> linear;
  s.ForPolys(1, [&](const SkewPoly& f) { linear.push_back(f); });
  for (const SkewPoly& f : linear) {
    for (const SkewPoly& g : linear) {
      Expect(anti, DualPoly(f * g) == DualPoly(g) * DualPoly(f),
             [&] { return FormatPoly(f) + " ; " + FormatPoly(g); });
    }
  }
  return s.Finish();
}

SuiteResult Extension(Suite& s) {
  const RingCtx& r = s.ring();
  const RingEmbedding emb = ExtendRing(r.shared(), 2);
  const RingCtx& big = emb.big();
  Check& restrict = s.Add("sigma and delta restrict");
  Check& ring_map = s.Add("lift preserves sums and products");
  Check& eval = s.Add("evaluation preserved");
  const ElemSet points = s.Points();
  for (const FieldElem& a : points) {
    const FieldElem b = emb.Lift(a);
    Expect(restrict,
           big.Sigma(b) == emb.Lift(r.Sigma(a)) && big.Delta(b) == emb.Lift(r.Delta(a)) &&
               emb.Restrict(b) == a,
           [&] { return FormatElement(a); });
  }
  std::vector<SkewPoly> linear;
  s.ForPolys(1, [&](const SkewPoly& f) { linear.push_back(f); });
  for (const SkewPoly& f : linear) {
    for (const SkewPoly& g : linear) {
      Expect(ring_map,
             emb.Lift(f * g) == emb.Lift(f) * emb.Lift(g) &&
                 emb.Lift(f + g) == emb.Lift(f) + emb.Lift(g),
             [&] { return FormatPoly(f) + " ; " + FormatPoly(g); });
    }
  }
  s.ForPolys(2, [&](const SkewPoly& f) {
    for (const FieldElem& a : points) {
      Expect(eval, EvalPreserved(f, a, emb),
             [&] { return FormatPoly(f) + " at " + FormatElement(a); });
    }
  });
  if (!r.delta_is_zero()) return s.Finish();

  Check& roots = s.Add("no roots gained or lost");
  const ElemSet big_points =
      big.field_ctx().order() <= 4096 ? big.field_ctx().Elements() : ElemSet{};
  s.ForPolys(2, [&](const SkewPoly& f) {
    if (f.is_zero() || big_points.empty()) return;
    const SkewPoly g = emb.Lift(f);
    for (Side side : {Side::kRight, Side::kLeft}) {
      ElemSet small_roots, restricted;
      for (const FieldElem& a : points) {
        if (Eval(f, a, side).is_zero()) small_roots.push_back(a);
      }
      for (const FieldElem& b : big_points) {
        const auto a = emb.Restrict(b);
        if (a && Eval(g, b, side).is_zero()) restricted.push_back(*a);
      }
      Expect(roots, Canonicalize(small_roots) == Canonicalize(restricted),
             [&] { return FormatPoly(f); });
    }
  });
  for (Side side : {Side::kRight, Side::kLeft}) {
    Check& indep = s.Add("independence preserved " + std::string(SideName(side)));
    s.ForSubsets(s.field().Elements(), 3, "the field", [&](const ElemSet& z) {
      Expect(indep, IndependencePreserved(z, emb, side), [&] { return FormatSet(z); });
    });
  }
  return s.Finish();
}

using SuiteFn = SuiteResult (*)(Suite&);

struct SuiteEntry {
  std::string name;
  SuiteFn fn;
  bool needs_zero_delta;
};

const std::vector<SuiteEntry>& Suites() {
  static const std::vector<SuiteEntry> suites = {
      {"matroid-axioms", MatroidAxioms, true}, {"iso-phi", IsoPhi, true},
      {"closure-lemmas", ClosureChecks, true}, {"splitting", Splitting, true},
      {"dual-ring", DualRingSuite, false},     {"extension", Extension, false},
  };
  return suites;
}

}  // namespace

bool SuiteResult::pass() const {
  return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.pass; });
}

const std::vector<std::string>& SuiteNames() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const SuiteEntry& e : Suites()) out.push_back(e.name);
    return out;
  }();
  return names;
}

bool IsSuiteName(std::string_view name) {
  const auto& names = SuiteNames();
  return std::find(names.begin(), names.end(), name) != names.end();
}

SuiteResult RunSuite(std::string_view name, const Ring& ring, const VerifyOptions& opts) {
  for (const SuiteEntry& e : Suites()) {
    if (e.name != name) continue;
    Suite s(e.name, ring, opts);
    return e.fn(s);
  }
  throw Error(ErrorCode::kSyntaxError, "unknown suite: " + std::string(name));
}

std::vector<SuiteResult> RunAllSuites(const Ring& ring, const VerifyOptions& opts) {
  std::vector<SuiteResult> out;
  for (const SuiteEntry& e : Suites()) {
    if (e.needs_zero_delta && !ring->delta_is_zero()) {
      SuiteResult skipped;
      skipped.suite = e.name;
      skipped.skipped = true;
      skipped.skip_reason = std::string(ErrorCodeName(ErrorCode::kDeltaNotZero));
      out.push_back(std::move(skipped));
      continue;
    }
    out.push_back(RunSuite(e.name, ring, opts));
  }
  return out;
}

}  // namespace skewmat::cli
