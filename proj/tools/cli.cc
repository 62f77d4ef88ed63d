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

#include "cli.h"

#include <charconv>
#include <chrono>
#include <cstdlib>
#include <functional>
#include <map>
#include <optional>
#include <stdexcept>
#include <string_view>
#include <utility>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "skewmat/error.h"
#include "skewmat/evaluation.h"
#include "skewmat/extension.h"
#include "skewmat/field.h"
#include "skewmat/root_matroid.h"
#include "skewmat/skew_ring.h"
#include "verify.h"

namespace skewmat::cli {
namespace {

using Json = nlohmann::ordered_json;

// Bad command line: unknown verb, wrong operand count, missing option.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Invocation {
  std::string verb;
  std::vector<std::string> args;
  std::string field;
  std::string side = "right";
  std::string format = "text";
  uint64_t seed = 0;
  std::optional<std::string> set;
  uint64_t trials = 100;
  bool sampled = false;
  std::string suite = "all";
  std::optional<uint64_t> q;
  std::optional<std::string> delta;
  bool timing = false;
};

struct Outcome {
  Json result;
  // False when a verification inside the command failed.
  bool pass = true;
};

Json Echo(const Invocation& inv) {
  Json j;
  j["verb"] = inv.verb;
  j["args"] = inv.args;
  j["field"] = inv.field;
  j["side"] = inv.side;
  j["seed"] = inv.seed;
  j["set"] = inv.set ? Json(*inv.set) : Json(nullptr);
  j["trials"] = inv.trials;
  j["sampled"] = inv.sampled;
  j["suite"] = inv.suite;
  j["q"] = inv.q ? Json(*inv.q) : Json(nullptr);
  j["delta"] = inv.delta ? Json(*inv.delta) : Json(nullptr);
  return j;
}

// Commas inside [...] belong to vector elements.
ElemSet ParseSet(std::string_view text, const FieldCtx& field) {
  ElemSet out;
  if (text.find_first_not_of(" \t") == std::string_view::npos) return out;
  int depth = 0;
  size_t start = 0;
  for (size_t i = 0; i <= text.size(); ++i) {
    if (i == text.size() || (text[i] == ',' && depth == 0)) {
      out.push_back(ParseElement(text.substr(start, i - start), field));
      start = i + 1;
    } else if (text[i] == '[') {
      ++depth;
    } else if (text[i] == ']') {
      --depth;
    }
  }
  return Canonicalize(out);
}

Json SetJson(const ElemSet& z) {
  Json j = Json::array();
  for (const FieldElem& a : z) j.push_back(FormatElement(a));
  return j;
}

Ring MakeRing(const Invocation& inv) {
  const Field field = MakeField(ParseFieldSpec(inv.field));
  uint32_t base_degree = 1;
  if (inv.q) {
    uint64_t power = field->characteristic();
    while (power < *inv.q) {
      power *= field->characteristic();
      ++base_degree;
    }
    if (power != *inv.q || field->degree() % base_degree != 0) {
      throw Error(ErrorCode::kNotASubfield,
                  "q = " + std::to_string(*inv.q) + " is not a subfield order of " +
                      FormatFieldSpec(*field));
    }
  }
  std::optional<FieldElem> d;
  if (inv.delta) d = ParseElement(*inv.delta, *field);
  return RingCtx::Create(field, base_degree, d);
}

void RequireArgs(const Invocation& inv, size_t n, const char* what) {
  if (inv.args.size() != n) {
    throw UsageError(inv.verb + " expects " + what);
  }
}

const ElemSet& RequireSet(const Invocation& inv, const std::optional<ElemSet>& set) {
  if (!set) throw UsageError(inv.verb + " requires --set");
  return *set;
}

Json SuiteJson(const SuiteResult& r) {
  Json j;
  j["suite"] = r.suite;
  if (r.skipped) {
    j["skipped"] = true;
    j["reason"] = r.skip_reason;
    return j;
  }
  j["mode"] = r.mode;
  j["pass"] = r.pass();
  Json checks = Json::array();
  for (const Check& c : r.checks) {
    Json cj;
    cj["name"] = c.name;
    cj["count"] = c.count;
    cj["pass"] = c.pass;
    if (!c.pass) cj["counterexample"] = c.counterexample;
    checks.push_back(std::move(cj));
  }
  j["checks"] = std::move(checks);
  for (const auto& [key, value] : r.notes) j[key] = value;
  return j;
}

Outcome SuitesOutcome(const std::vector<SuiteResult>& results) {
  Outcome o;
  Json suites = Json::array();
  for (const SuiteResult& r : results) {
    o.pass = o.pass && (r.skipped || r.pass());
    suites.push_back(SuiteJson(r));
  }
  o.result["pass"] = o.pass;
  o.result["suites"] = std::move(suites);
  return o;
}

VerifyOptions ToVerifyOptions(const Invocation& inv) {
  return {.seed = inv.seed, .trials = inv.trials, .sampled = inv.sampled};
}

// ---------------------------------------------------------------------------
// Verbs

using Handler = std::function<Outcome(const Invocation&, const Ring&,
                                      const std::optional<ElemSet>&)>;

Outcome FieldInfo(const Invocation& inv, const Ring& ring, const std::optional<ElemSet>&) {
  RequireArgs(inv, 0, "no operands");
  const FieldCtx& f = ring->field_ctx();
  Outcome o;
  Json& j = o.result;
  j["field"] = FormatFieldSpec(f);
  j["p"] = f.characteristic();
  j["n"] = f.degree();
  j["order"] = f.order();
  j["modulus"] = std::vector<uint32_t>(f.modulus().begin(), f.modulus().end());
  j["modulus_primitive"] = f.modulus_is_primitive();
  j["q"] = ring->q();
  j["m"] = ring->m();
  j["sigma"] = "a^" + std::to_string(ring->sigma_base());
  j["delta_parameter"] = FormatElement(ring->delta_parameter());
  if (ring->delta_is_zero()) {
    j["class_modulus"] = ClassModulus(*ring);
    j["class_size"] = (f.order() - 1) / ClassModulus(*ring);
    j["phi_exponent"] = PhiExponent(*ring).str();
  }
  return o;
}

Outcome Mul(const Invocation& inv, const Ring& ring, const std::optional<ElemSet>&) {
  RequireArgs(inv, 2, "two polynomials");
  Outcome o;
  o.result["value"] =
      FormatPoly(ParsePoly(inv.args[0], *ring) * ParsePoly(inv.args[1], *ring));
  return o;
}

Outcome DivModVerb(const Invocation& inv, const Ring& ring, const std::optional<ElemSet>&) {
  RequireArgs(inv, 2, "a dividend and a divisor");
  const SkewPoly f = ParsePoly(inv.args[0], *ring);
  const SkewPoly g = ParsePoly(inv.args[1], *ring);
  const Side side = ParseSide(inv.side);
  const DivModResult r = side == Side::kRight ? DivModRight(f, g) : DivModLeft(f, g);
  Outcome o;
  o.result["side"] = SideName(side);
  o.result["quotient"] = FormatPoly(r.quotient);
  o.result["remainder"] = FormatPoly(r.remainder);
  return o;
}

Outcome EvalVerb(const Invocation& inv, const Ring& ring, const std::optional<ElemSet>&) {
  RequireArgs(inv, 2, "a polynomial and an element");
  const SkewPoly f = ParsePoly(inv.args[0], *ring);
  const FieldElem a = ParseElement(inv.args[1], ring->field_ctx());
  Outcome o;
  o.result["value"] = FormatElement(Eval(f, a, ParseSide(inv.side)));
  return o;
}

Outcome MinPolyVerb(const Invocation& inv, const Ring& ring, const std::optional<ElemSet>& set) {
  RequireArgs(inv, 0, "no operands");
  Outcome o;
  o.result["value"] = FormatPoly(MinPoly(RequireSet(inv, set), *ring, ParseSide(inv.side)));
  return o;
}

Outcome ClosureVerb(const Invocation& inv, const Ring& ring, const std::optional<ElemSet>& set) {
  RequireArgs(inv, 0, "no operands");
  Outcome o;
  o.result["value"] = SetJson(Closure(RequireSet(inv, set), *ring, ParseSide(inv.side)));
  return o;
}

Outcome RankVerb(const Invocation& inv, const Ring& ring, const std::optional<ElemSet>& set) {
  RequireArgs(inv, 0, "no operands");
  Outcome o;
  o.result["value"] = Rank(RequireSet(inv, set), *ring, ParseSide(inv.side));
  return o;
}

Outcome MatroidReport(const Invocation& inv, const Ring& ring,
                      const std::optional<ElemSet>& set) {
  RequireArgs(inv, 0, "no operands");
  const Side side = ParseSide(inv.side);
  const Matroid m = set ? Matroid(ring, side, *set) : Matroid(ring, side);
  const ElemSet& g = m.ground();
  if (g.size() > kEnumerationGuard) {
    throw Error(ErrorCode::kGroundSetTooLarge,
                "ground set has " + std::to_string(g.size()) + " elements; at most " +
                    std::to_string(kEnumerationGuard) + " can be enumerated");
  }
  uint64_t independent = 0;
  for (uint64_t mask = 0; mask < (uint64_t{1} << g.size()); ++mask) {
    ElemSet z;
    for (size_t i = 0; i < g.size(); ++i) {
      if (mask >> i & 1) z.push_back(g[i]);
    }
    independent += m.IsIndependent(z);
  }
  const size_t rank = m.Rank(g);
  std::vector<uint64_t> flats_by_rank(rank + 1);
  for (const ElemSet& f : m.Flats()) ++flats_by_rank[m.Rank(f)];
  Outcome o;
  Json& j = o.result;
  j["side"] = SideName(side);
  j["ground"] = SetJson(g);
  j["rank"] = rank;
  j["independent_sets"] = independent;
  j["bases"] = m.Bases().size();
  j["flats_by_rank"] = flats_by_rank;
  return o;
}

Outcome IsoCheck(const Invocation& inv, const Ring& ring, const std::optional<ElemSet>& set) {
  RequireArgs(inv, 0, "no operands");
  if (!set) return SuitesOutcome({RunSuite("iso-phi", ring, ToVerifyOptions(inv))});
  ElemSet image;
  for (const FieldElem& a : *set) image.push_back(BigPhi(a, *ring));
  image = Canonicalize(image);
  const bool right = IsIndependent(*set, *ring, Side::kRight);
  const bool left = IsIndependent(image, *ring, Side::kLeft);
  Outcome o;
  o.pass = right == left && image.size() == set->size();
  Json& j = o.result;
  j["phi_exponent"] = PhiExponent(*ring).str();
  j["set"] = SetJson(*set);
  j["image"] = SetJson(image);
  j["right_independent"] = right;
  j["image_left_independent"] = left;
  j["pass"] = o.pass;
  return o;
}

Outcome Split(const Invocation& inv, const Ring& ring, const std::optional<ElemSet>&) {
  RequireArgs(inv, 1, "one polynomial");
  const RootReport rep = MakeRootReport(ParsePoly(inv.args[0], *ring), inv.seed);
  Outcome o;
  o.pass = rep.ok();
  Json& j = o.result;
  j["poly"] = FormatPoly(rep.poly);
  j["n"] = rep.n;
  j["k0"] = rep.k0;
  j["splitting_degree"] = rep.splitting_degree;
  j["splitting_field"] = FormatFieldSpec(rep.splitting.big().field_ctx());
  j["embedding"] = "a -> " + FormatElement(rep.splitting.Lift(ring->field_ctx().alpha()));
  j["expected_count"] = rep.expected_count.str();
  j["expected_multiplicity"] = rep.expected_multiplicity.str();
  j["zero_multiplicity"] = rep.zero_multiplicity;
  j["class_rep"] = rep.roots.empty() ? Json(nullptr) : Json(FormatElement(rep.class_rep));
  Json roots = Json::array();
  for (const RootMult& r : rep.roots) {
    roots.push_back({{"root", FormatElement(r.root)}, {"multiplicity", r.multiplicity}});
  }
  j["roots"] = std::move(roots);
  j["checks"] = {{"count", rep.count_ok},
                 {"multiplicity", rep.multiplicity_ok},
                 {"single_class", rep.single_class_ok},
                 {"derivative", rep.derivative_ok},
                 {"bracket", rep.bracket_ok},
                 {"inner_squarefree", rep.inner_squarefree_ok},
                 {"left_factor", rep.left_factor_ok}};
  j["pass"] = o.pass;
  return o;
}

Outcome Verify(const Invocation& inv, const Ring& ring, const std::optional<ElemSet>&) {
  RequireArgs(inv, 0, "no operands");
  const VerifyOptions opts = ToVerifyOptions(inv);
  if (inv.suite == "all") return SuitesOutcome(RunAllSuites(ring, opts));
  return SuitesOutcome({RunSuite(inv.suite, ring, opts)});
}

const std::map<std::string, Handler>& Verbs() {
  static const std::map<std::string, Handler> verbs = {
      {"field-info", FieldInfo}, {"mul", Mul},
      {"divmod", DivModVerb},    {"eval", EvalVerb},
      {"minpoly", MinPolyVerb},  {"closure", ClosureVerb},
      {"rank", RankVerb},        {"matroid-report", MatroidReport},
      {"iso-check", IsoCheck},   {"split", Split},
      {"verify", Verify},
  };
  return verbs;
}

// ---------------------------------------------------------------------------
// Text rendering

std::string Scalar(const Json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_array()) {
    std::string s = "{";
    for (size_t i = 0; i < v.size(); ++i) {
      if (i) s += ", ";
      s += Scalar(v[i]);
    }
    return s + "}";
  }
  return v.dump();
}

void RenderObject(const Json& obj, const std::string& indent, std::ostream& out) {
  for (const auto& [key, v] : obj.items()) {
    if (v.is_object()) {
      out << indent << key << ":\n";
      RenderObject(v, indent + "  ", out);
    } else if (v.is_array() && !v.empty() && v[0].is_object()) {
      out << indent << key << ":\n";
      for (const Json& item : v) {
        out << indent << "  -";
        for (const auto& [k, x] : item.items()) out << ' ' << k << '=' << Scalar(x);
        out << '\n';
      }
    } else {
      out << indent << key << ": " << Scalar(v) << '\n';
    }
  }
}

void RenderSuites(const Json& result, std::ostream& out) {
  for (const Json& s : result["suites"]) {
    const std::string name = s["suite"];
    if (s.contains("skipped")) {
      out << name << ": SKIPPED (" << s["reason"].get<std::string>() << ")\n";
      continue;
    }
    out << name << " [" << s["mode"].get<std::string>() << "]: "
        << (s["pass"].get<bool>() ? "PASS" : "FAIL") << '\n';
    for (const Json& c : s["checks"]) {
      out << "  " << c["name"].get<std::string>() << ": "
          << (c["pass"].get<bool>() ? "PASS" : "FAIL") << " (" << c["count"].dump()
          << " checked)";
      if (c.contains("counterexample")) {
        out << " counterexample " << c["counterexample"].get<std::string>();
      }
      out << '\n';
    }
    for (const auto& [key, v] : s.items()) {
      if (key != "suite" && key != "mode" && key != "pass" && key != "checks") {
        out << "  " << key << ": " << Scalar(v) << '\n';
      }
    }
  }
  out << (result["pass"].get<bool>() ? "PASS" : "FAIL") << '\n';
}

void RenderText(const Json& report, std::ostream& out) {
  const Json& result = report["result"];
  if (result.contains("suites")) {
    RenderSuites(result, out);
  } else if (result.size() == 1 && result.contains("value")) {
    out << Scalar(result["value"]) << '\n';
  } else {
    RenderObject(result, "", out);
  }
  if (report.contains("timing_ms")) out << "timing_ms: " << report["timing_ms"].dump() << '\n';
}

void ApplyTableCap() {
  const char* env = std::getenv("SKEWMAT_TABLE_CAP");
  if (env == nullptr || *env == '\0') {
    SetTableCap(kDefaultTableCap);
    return;
  }
  const std::string_view text(env);
  uint64_t cap = 0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), cap);
  if (ec != std::errc() || ptr != text.data() + text.size() || cap < 2) {
    throw UsageError("SKEWMAT_TABLE_CAP must be an integer >= 2");
  }
  SetTableCap(cap);
}

int ReportError(const Invocation& inv, std::string_view code, const std::string& message,
                int exit_code, std::ostream& out, std::ostream& err) {
  if (inv.format == "json") {
    Json report;
    report["schema_version"] = kSchemaVersion;
    report["command"] = Echo(inv);
    report["error"] = {{"code", code}, {"message", message}};
    out << report.dump(2) << '\n';
  }
  err << "error: " << code << ": " << message << '\n';
  return exit_code;
}

}  // namespace

int RunCli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Invocation inv;
  CLI::App app{"Exact arithmetic, evaluation and root matroids of skew polynomial rings "
               "over finite fields.",
               "skewmat"};
  std::vector<std::string> verb_names;
  for (const auto& [name, handler] : Verbs()) verb_names.push_back(name);
  std::vector<std::string> suites = SuiteNames();
  suites.push_back("all");
  std::string set_text;
  uint64_t q = 0;
  std::string delta;

  app.add_option("verb", inv.verb, "Command")->required()->check(CLI::IsMember(verb_names));
  app.add_option("args", inv.args, "Polynomials and elements the command operates on");
  app.add_option("--field", inv.field, "Field, e.g. gf(3^2) or gf(3^2:[2,2,1])")->required();
  app.add_option("--side", inv.side, "right or left")
      ->check(CLI::IsMember({"right", "left", "r", "l"}));
  app.add_option("--format", inv.format, "text or json")->check(CLI::IsMember({"text", "json"}));
  app.add_option("--seed", inv.seed, "Seed for randomized checks");
  app.add_option("--set", set_text, "Comma-separated elements; empty means the empty set");
  app.add_option("--trials", inv.trials, "Random trials for sampled checks")
      ->check(CLI::Range(uint64_t{1}, uint64_t{1} << 32));
  app.add_flag("--sampled", inv.sampled, "Sample instead of failing on large fields");
  app.add_option("--suite", inv.suite, "Verification suite")->check(CLI::IsMember(suites));
  app.add_option("--q", q, "Order q of the fixed field of sigma (default p)");
  app.add_option("--delta", delta, "d in delta(a) = d (a - sigma(a)) (default 0)");
  app.add_flag("--timing", inv.timing, "Include timing_ms in the report");

  std::vector<const char*> argv{"skewmat"};
  for (const std::string& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }
  if (app.count("--set")) inv.set = set_text;
  if (app.count("--q")) inv.q = q;
  if (app.count("--delta")) inv.delta = delta;

  const auto start = std::chrono::steady_clock::now();
  try {
    ApplyTableCap();
    const Ring ring = MakeRing(inv);
    std::optional<ElemSet> set;
    if (inv.set) set = ParseSet(*inv.set, ring->field_ctx());
    const Outcome o = Verbs().at(inv.verb)(inv, ring, set);

    Json report;
    report["schema_version"] = kSchemaVersion;
    report["command"] = Echo(inv);
    report["result"] = o.result;
    if (inv.timing) {
      report["timing_ms"] = std::chrono::duration<double, std::milli>(
                                std::chrono::steady_clock::now() - start)
                                .count();
    }
    if (inv.format == "json") {
      out << report.dump(2) << '\n';
    } else {
      RenderText(report, out);
    }
    return o.pass ? kExitOk : kExitDomainError;
  } catch (const UsageError& e) {
    return ReportError(inv, ErrorCodeName(ErrorCode::kSyntaxError), e.what(), kExitUsage, out,
                       err);
  } catch (const Error& e) {
    const int code = e.code() == ErrorCode::kSyntaxError ? kExitUsage : kExitDomainError;
    return ReportError(inv, ErrorCodeName(e.code()), e.what(), code, out, err);
  } catch (const std::exception& e) {
    return ReportError(inv, ErrorCodeName(ErrorCode::kInternal), e.what(), kExitDomainError,
                       out, err);
  }
}

}  // namespace skewmat::cli
