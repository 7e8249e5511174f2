#pragma once

#include <cstddef>
#include <cstdint>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "json.hpp"

#include "akp/base_field.hpp"
#include "akp/error.hpp"
#include "akp/keypoly.hpp"
#include "akp/oracle.hpp"
#include "akp/parse.hpp"
#include "akp/poly.hpp"
#include "akp/properties.hpp"
#include "akp/valuation.hpp"

// Scenario documents (JSON), the query runner, and the two report formats.
// The machine report is JSON with a fixed key order, so a fixed scenario
// always renders to the same bytes.

namespace akp::cli {

using Json = nlohmann::ordered_json;

enum ExitCode : int { kOk = 0, kCheckFailed = 1, kInputError = 2 };

struct RunOptions {
  bool oracle = false;                 // add brute-force cross-checks to the queries that have one
  std::optional<std::string> budget;   // overrides the scenario budget: "c1,c2,...;maxdeg" or "default[;maxdeg]"
};

struct Outcome {
  Json report;
  int exit_code = kOk;
};

/// Scenario-level problems: missing keys, wrong types, unknown ops.
class ScenarioError : public Error {
 public:
  using Error::Error;
};

namespace detail {

inline std::string json_type_name(const Json& j) { return j.type_name(); }

inline void check_keys(const Json& obj, std::initializer_list<std::string_view> allowed, const std::string& where) {
  if (!obj.is_object()) throw ScenarioError(where + ": expected an object");
  for (auto it = obj.begin(); it != obj.end(); ++it) {
    bool ok = false;
    for (auto a : allowed) ok = ok || it.key() == a;
    if (!ok) throw ScenarioError(where + ": unknown key \"" + it.key() + "\"");
  }
}

inline const Json& require(const Json& obj, const char* key, const std::string& where) {
  auto it = obj.find(key);
  if (it == obj.end()) throw ScenarioError(where + ": missing \"" + key + "\"");
  return *it;
}

/// Strings stay as they are; integers become their decimal form, so
/// "gamma": 2 and "gamma": "2" mean the same.
inline std::string scalar_text(const Json& j, const std::string& where) {
  if (j.is_string()) return j.get<std::string>();
  if (j.is_number_integer()) return std::to_string(j.get<std::int64_t>());
  throw ScenarioError(where + ": expected a string or an integer, got " + json_type_name(j));
}

inline std::size_t index_value(const Json& j, const std::string& where) {
  if (!j.is_number_unsigned() && !(j.is_number_integer() && j.get<std::int64_t>() >= 0)) {
    throw ScenarioError(where + ": expected a non-negative integer");
  }
  return j.get<std::size_t>();
}

inline Json index_array(const std::vector<std::size_t>& v) {
  Json out = Json::array();
  for (std::size_t i : v) out.push_back(i);
  return out;
}

/// Attaches the location inside the scenario to parse errors.
template <class Fn>
auto located(const std::string& where, Fn&& fn) -> decltype(fn()) {
  try {
    return fn();
  } catch (const ParseError& e) {
    throw ParseError(where + ": " + e.message(), e.position());
  }
}

struct BudgetSpec {
  std::optional<std::vector<std::string>> coefficients;  // nullopt = the field's default set
  std::size_t max_degree = kDefaultBudgetDegree;
};

/// "c1,c2,...;maxdeg", "c1,c2,...", "default" or "default;maxdeg".
inline BudgetSpec parse_budget_flag(std::string_view text) {
  BudgetSpec spec;
  std::string_view coeffs = text;
  if (auto semi = text.find(';'); semi != std::string_view::npos) {
    coeffs = text.substr(0, semi);
    std::string deg(text.substr(semi + 1));
    if (deg.empty() || deg.find_first_not_of("0123456789") != std::string::npos || deg.size() > 3) {
      throw ScenarioError("--budget: bad max degree \"" + deg + "\"");
    }
    spec.max_degree = std::stoul(deg);
  }
  if (coeffs == "default") return spec;
  std::vector<std::string> values;
  std::size_t start = 0;
  while (start <= coeffs.size()) {
    std::size_t comma = coeffs.find(',', start);
    if (comma == std::string_view::npos) comma = coeffs.size();
    values.emplace_back(coeffs.substr(start, comma - start));
    start = comma + 1;
  }
  spec.coefficients = std::move(values);
  return spec;
}

inline BudgetSpec parse_budget_json(const Json& j) {
  check_keys(j, {"coefficients", "max_degree"}, "budget");
  BudgetSpec spec;
  if (auto it = j.find("coefficients"); it != j.end()) {
    if (!it->is_array()) throw ScenarioError("budget.coefficients: expected an array");
    std::vector<std::string> values;
    for (std::size_t i = 0; i < it->size(); ++i) {
      values.push_back(scalar_text((*it)[i], "budget.coefficients[" + std::to_string(i) + "]"));
    }
    spec.coefficients = std::move(values);
  }
  if (auto it = j.find("max_degree"); it != j.end()) spec.max_degree = index_value(*it, "budget.max_degree");
  return spec;
}

template <ValuedField F>
Json budget_json(const CoefficientSet<F>& set) {
  Json c = Json::array();
  for (const auto& v : set.values()) c.push_back(set.field().render(v));
  Json out;
  out["coefficients"] = std::move(c);
  out["max_degree"] = set.max_degree();
  return out;
}

template <ValuedField F>
Json chain_json(const ValuationChain<F>& chain) {
  Json out = Json::array();
  for (const auto& s : chain.steps()) {
    Json step;
    step["key"] = s.key.str();
    step["gamma"] = s.gamma.str();
    out.push_back(std::move(step));
  }
  return out;
}

inline Json epsilon_json(const EpsilonReport& e) {
  Json out;
  out["epsilon"] = e.epsilon.str();
  out["maximizers"] = index_array(e.maximizers);
  out["b"] = e.b;
  return out;
}

inline Json property_json(const PropertyResult& r) {
  Json out;
  out["name"] = r.name;
  out["cases"] = r.cases;
  out["failures"] = r.failures;
  if (r.first_failure) out["first_failure"] = *r.first_failure;
  if (!r.notes.empty()) {
    Json notes;
    for (const auto& [k, v] : r.notes) notes[k] = v;
    out["notes"] = std::move(notes);
  }
  out["status"] = r.ok() ? "ok" : "failed";
  return out;
}

/// Runs one scenario over a concrete field.
template <ValuedField F>
class Runner {
 public:
  Runner(F field, const Json& doc, const RunOptions& opts) : field_(std::move(field)), doc_(doc), opts_(opts) {}

  Outcome run() {
    load_polynomials();
    build_chain();
    build_budget();

    Json report;
    report["field"] = field_.describe();
    report["chain"] = chain_json(*chain_);
    report["budget"] = budget_json(*budget_);
    report["oracle"] = opts_.oracle;

    Json queries = Json::array();
    std::size_t failed = 0;
    std::size_t inconclusive = 0;
    if (auto it = doc_.find("queries"); it != doc_.end()) {
      if (!it->is_array()) throw ScenarioError("queries: expected an array");
      for (std::size_t i = 0; i < it->size(); ++i) {
        Json rec = run_query((*it)[i], "queries[" + std::to_string(i) + "]");
        const std::string status = rec["status"].template get<std::string>();
        failed += status == "failed";
        inconclusive += status == "inconclusive";
        queries.push_back(std::move(rec));
      }
    }
    report["queries"] = std::move(queries);

    Json summary;
    summary["queries"] = report["queries"].size();
    summary["failed"] = failed;
    summary["inconclusive"] = inconclusive;
    summary["status"] = failed ? "failed" : "ok";
    report["summary"] = std::move(summary);
    return {std::move(report), failed ? kCheckFailed : kOk};
  }

 private:
  using P = Poly<F>;

  void load_polynomials() {
    auto it = doc_.find("polynomials");
    if (it == doc_.end()) return;
    if (!it->is_object()) throw ScenarioError("polynomials: expected an object");
    for (auto p = it->begin(); p != it->end(); ++p) {
      const std::string where = "polynomials." + p.key();
      if (!p->is_string()) throw ScenarioError(where + ": expected a string");
      names_.emplace_back(p.key(), located(where, [&] { return parse_poly(field_, p->template get<std::string>()); }));
    }
  }

  /// A polynomial field of the scenario: a name from "polynomials" or an expression.
  P poly_arg(const Json& j, const std::string& where) const {
    if (!j.is_string()) throw ScenarioError(where + ": expected a polynomial string");
    const std::string text = j.get<std::string>();
    for (const auto& [name, poly] : names_) {
      if (name == text) return poly;
    }
    return located(where, [&] { return parse_poly(field_, text); });
  }

  void build_chain() {
    const Json& steps = require(doc_, "chain", "scenario");
    if (!steps.is_array() || steps.empty()) throw ScenarioError("chain: expected a non-empty array of steps");
    for (std::size_t i = 0; i < steps.size(); ++i) {
      const std::string where = "chain[" + std::to_string(i) + "]";
      check_keys(steps[i], {"key", "gamma", "unchecked"}, where);
      P key = poly_arg(require(steps[i], "key", where), where + ".key");
      const std::string gtext = scalar_text(require(steps[i], "gamma", where), where + ".gamma");
      Value gamma = located(where + ".gamma", [&] { return Value::parse(gtext); });
      bool unchecked = false;
      if (auto u = steps[i].find("unchecked"); u != steps[i].end()) {
        if (!u->is_boolean()) throw ScenarioError(where + ".unchecked: expected a boolean");
        unchecked = u->template get<bool>();
      }
      if (i == 0) {
        if (!(key == P::x(field_))) throw ChainError("gauss-key", where + ": the first step must be the Gauss step on x");
        chain_ = ValuationChain<F>::gauss(field_, std::move(gamma));
        continue;
      }
      if (!budget_) build_budget();
      chain_ = augment(*chain_, std::move(key), std::move(gamma), *budget_,
                       unchecked ? KeyCheck::Skip : KeyCheck::Enforce);
    }
  }

  void build_budget() {
    if (budget_) return;
    BudgetSpec spec;
    if (opts_.budget) {
      spec = parse_budget_flag(*opts_.budget);
    } else if (auto it = doc_.find("budget"); it != doc_.end()) {
      spec = parse_budget_json(*it);
    }
    if (!spec.coefficients) {
      budget_ = default_budget(field_, spec.max_degree);
      return;
    }
    std::vector<typename F::element> values;
    for (std::size_t i = 0; i < spec.coefficients->size(); ++i) {
      const std::string where = "budget[" + std::to_string(i) + "]";
      values.push_back(located(where, [&] { return parse_field_elem(field_, (*spec.coefficients)[i]); }));
    }
    budget_ = CoefficientSet<F>(field_, std::move(values), spec.max_degree);
  }

  const ValuationChain<F>& chain() const { return *chain_; }

  ValuationChain<F> prefix_arg(const Json& q, const std::string& where) const {
    auto it = q.find("prefix");
    if (it == q.end()) return chain();
    const std::size_t i = index_value(*it, where + ".prefix");
    if (i >= chain().length()) {
      throw DomainError(where + ".prefix: chain has " + std::to_string(chain().length()) + " steps");
    }
    return chain().truncate(i);
  }

  std::size_t step_arg(const Json& q, const std::string& where) const {
    const std::size_t i = index_value(require(q, "step", where), where + ".step");
    if (i >= chain().length()) {
      throw DomainError(where + ".step: chain has " + std::to_string(chain().length()) + " steps");
    }
    return i;
  }

  Json run_query(const Json& q, const std::string& where) {
    if (!q.is_object()) throw ScenarioError(where + ": expected an object");
    const Json& op_json = require(q, "op", where);
    if (!op_json.is_string()) throw ScenarioError(where + ".op: expected a string");
    const std::string op = op_json.get<std::string>();

    Json rec;
    rec["op"] = op;
    Json input = q;
    input.erase("op");
    input.erase("expect");
    rec["input"] = std::move(input);

    Json out;
    std::string status = "ok";
    if (op == "eval") {
      check_keys(q, {"op", "f", "prefix", "expect"}, where);
      P f = poly_arg(require(q, "f", where), where + ".f");
      out["value"] = prefix_arg(q, where).evaluate(f).str();
    } else if (op == "expand") {
      check_keys(q, {"op", "q", "f", "prefix", "expect"}, where);
      const ValuationChain<F> mu = prefix_arg(q, where);
      P Q = q.contains("q") ? poly_arg(q["q"], where + ".q") : mu.last_key();
      P f = poly_arg(require(q, "f", where), where + ".f");
      if (Q.is_zero() || !Q.is_monic() || Q.deg() < 1) throw DomainError(where + ".q: expansion needs a monic Q of degree >= 1");
      QExpansionView<F> v = expansion_view(mu, Q, f);
      Json coeffs = Json::array();
      Json values = Json::array();
      for (const auto& c : v.expansion.coefficients) coeffs.push_back(c.str());
      for (const auto& t : v.term_values) values.push_back(t.str());
      out["q"] = Q.str();
      out["coefficients"] = std::move(coeffs);
      out["term_values"] = std::move(values);
      out["truncated_value"] = v.truncated_value.str();
      out["support"] = index_array(v.support);
      out["delta"] = v.delta;
      out["initial"] = v.initial.str();
    } else if (op == "epsilon") {
      check_keys(q, {"op", "p", "prefix", "expect"}, where);
      const ValuationChain<F> mu = prefix_arg(q, where);
      P p = poly_arg(require(q, "p", where), where + ".p");
      EpsilonReport e = epsilon(mu, p);
      out = epsilon_json(e);
      if (opts_.oracle) {
        EpsilonReport o = epsilon_bruteforce(mu, p);
        out["oracle"] = epsilon_json(o);
        out["agrees"] = o == e;
        if (!(o == e)) status = "failed";
      }
    } else if (op == "check-akp") {
      check_keys(q, {"op", "step", "expect"}, where);
      const std::size_t i = step_arg(q, where);
      KeyCertificate<F> c = certify_abstract(chain(), i, *budget_);
      out["step"] = i;
      out["key"] = chain().key(i).str();
      out["verdict"] = to_string(c.verdict);
      out["method"] = to_string(c.method);
      if (c.counterexample) out["counterexample"] = c.counterexample->str();
      out["note"] = c.note;
      status = c.verdict == Verdict::Certified ? "ok" : c.verdict == Verdict::Refuted ? "failed" : "inconclusive";
      if (opts_.oracle) {
        KeyCertificate<F> s = refute_abstract(chain(), chain().key(i), *budget_);
        Json o;
        o["verdict"] = to_string(s.verdict);
        if (s.counterexample) o["counterexample"] = s.counterexample->str();
        out["oracle"] = std::move(o);
        if (s.verdict == Verdict::Refuted) status = "failed";
      }
    } else if (op == "check-mlv") {
      check_keys(q, {"op", "q", "prefix", "expect"}, where);
      const ValuationChain<F> mu = prefix_arg(q, where);
      P Q = q.contains("q") ? poly_arg(q["q"], where + ".q") : mu.last_key();
      MlvVerdict<F> v = check_mlv_last(mu, Q, *budget_);
      out["q"] = Q.str();
      out["is_last_key"] = v.is_last_key;
      out["minimal"] = v.minimal;
      out["minimal_evidence"] = to_string(v.minimal_evidence);
      out["checked"] = v.checked;
      if (v.minimality_witness) out["minimality_witness"] = v.minimality_witness->str();
      out["irreducible"] = to_string(v.irreducible);
      out["irreducible_evidence"] = to_string(v.irreducible_evidence);
      if (v.factorization) out["factorization"] = Json::array({v.factorization->first.str(), v.factorization->second.str()});
      out["accepted"] = v.accepted();
      out["reason"] = v.reason;
      if (v.accepted()) {
        status = "ok";
      } else if (v.minimal && v.irreducible == Ternary::Unknown) {
        status = "inconclusive";
      } else {
        status = "failed";
      }
      if (opts_.oracle) {
        Json o = minimality_oracle(mu, Q, v.is_last_key);
        if (v.minimal && o["divisible"].template get<std::size_t>() > 0) status = "failed";
        out["oracle"] = std::move(o);
      }
    } else if (op == "successor") {
      check_keys(q, {"op", "step", "expect"}, where);
      const std::size_t i = step_arg(q, where);
      SuccessorReport s = is_immediate_successor(chain(), i, *budget_);
      out["step"] = i;
      out["successor"] = i + 1 < chain().length() ? Json(chain().key(i + 1).str()) : Json();
      out["value_jump"] = s.value_jump;
      out["lower_degree_jump"] = s.lower_degree_jump ? Json(s.lower_degree_jump->str()) : Json();
      out["checked"] = s.checked;
      out["result"] = s.result;
      if (!s.result) status = "failed";
      if (opts_.oracle && i + 1 < chain().length()) {
        Json o = successor_oracle(i);
        if (o["disagreements"].template get<std::size_t>() > 0) status = "failed";
        out["oracle"] = std::move(o);
      }
    } else if (op == "depth") {
      check_keys(q, {"op", "f", "expect"}, where);
      P f = poly_arg(require(q, "f", where), where + ".f");
      const std::size_t i = truncation_depth(chain(), f);
      out["step"] = i;
      out["key"] = chain().key(i).str();
      out["value"] = chain().evaluate(f).str();
    } else if (op == "refute" || op == "refute-akp") {
      check_keys(q, {"op", "q", "prefix", "expect"}, where);
      const ValuationChain<F> mu = prefix_arg(q, where);
      P Q = poly_arg(require(q, "q", where), where + ".q");
      KeyCertificate<F> c = refute_abstract(mu, Q, *budget_);
      out["verdict"] = to_string(c.verdict);
      if (c.counterexample) out["counterexample"] = c.counterexample->str();
      out["note"] = c.note;
      if (c.verdict == Verdict::Refuted) status = "failed";
    } else if (op == "witness") {
      check_keys(q, {"op", "q", "g", "prefix", "expect"}, where);
      const ValuationChain<F> mu = prefix_arg(q, where);
      P Q = poly_arg(require(q, "q", where), where + ".q");
      P g = poly_arg(require(q, "g", where), where + ".g");
      try {
        WitnessReport w = witness_b(mu, Q, g);
        out["b"] = w.b;
        out["l"] = w.l;
        out["e"] = w.e;
        out["ratio"] = w.ratio.str();
      } catch (const InternalError& e) {
        out["error"] = e.what();
        status = "failed";
      }
    } else if (op == "oracle-compare") {
      check_keys(q, {"op", "kind", "family_degree", "expect"}, where);
      const std::string kind = scalar_text(require(q, "kind", where), where + ".kind");
      const std::size_t deg = q.contains("family_degree") ? index_value(q["family_degree"], where + ".family_degree") : 3;
      PropertyResult r("");
      if (kind == "successor") {
        r = check_successor_divisibility(chain(), *budget_, deg);
      } else if (kind == "last-key") {
        r = check_last_key_divisibility(chain(), *budget_, deg);
      } else {
        throw ScenarioError(where + ".kind: expected \"successor\" or \"last-key\"");
      }
      out = property_json(r);
      out.erase("name");
      status = out["status"].template get<std::string>();
      out.erase("status");
    } else if (op == "properties") {
      check_keys(q, {"op", "seed", "counts", "expect"}, where);
      const std::uint64_t seed = q.contains("seed") ? index_value(q["seed"], where + ".seed") : 1;
      PropertyCounts counts;
      if (auto c = q.find("counts"); c != q.end()) counts = counts_arg(*c, where + ".counts");
      Json list = Json::array();
      for (const PropertyResult& r : run_properties(seed, counts)) {
        if (!r.ok()) status = "failed";
        list.push_back(property_json(r));
      }
      out["seed"] = seed;
      out["properties"] = std::move(list);
    } else {
      throw ScenarioError(where + ".op: unknown op \"" + op + "\"");
    }

    rec["output"] = out;
    if (auto e = q.find("expect"); e != q.end()) {
      if (!e->is_object()) throw ScenarioError(where + ".expect: expected an object");
      Json mismatches = Json::array();
      for (auto it = e->begin(); it != e->end(); ++it) {
        auto got = out.find(it.key());
        if (got == out.end() || !(*got == *it)) mismatches.push_back(it.key());
      }
      rec["expect"] = *e;
      status = mismatches.empty() ? "ok" : "failed";
      if (!mismatches.empty()) rec["mismatches"] = std::move(mismatches);
    }
    rec["status"] = status;
    return rec;
  }

  /// Graded divisibility of every monic f of degree < deg Q over the budget
  /// by Q, from the cofactor search.
  Json minimality_oracle(const ValuationChain<F>& mu, const P& Q, bool is_last_key) const {
    GradedDivisibilityOracle<F> oracle(mu, *budget_);
    std::size_t checked = 0;
    std::size_t divisible = 0;
    std::size_t unknown = 0;
    std::optional<P> first;
    for (std::size_t d = 0; d < Q.deg() && d <= budget_->max_degree(); ++d) {
      PolyStream<F> s(*budget_, d, true);
      while (auto f = s.next()) {
        ++checked;
        DivisibilityVerdict<F> v = oracle.divides(Q, *f, is_last_key ? DivisorRole::LastKey : DivisorRole::General);
        if (v.result == Ternary::True) {
          ++divisible;
          if (!first) first = *f;
        }
        unknown += v.result == Ternary::Unknown;
      }
    }
    Json o;
    o["checked"] = checked;
    o["divisible"] = divisible;
    o["unknown"] = unknown;
    if (first) o["first_divisible"] = first->str();
    return o;
  }

  Json successor_oracle(std::size_t i) const {
    GradedDivisibilityOracle<F> oracle(chain().truncate(i), *budget_);
    std::size_t cases = 0;
    std::size_t disagreements = 0;
    std::size_t unknown = 0;
    for (std::size_t d = 0; d <= std::min<std::size_t>(budget_->max_degree(), 3); ++d) {
      PolyStream<F> s(*budget_, d, true);
      while (auto f = s.next()) {
        ++cases;
        DivisibilityVerdict<F> v = oracle.divides(chain().key(i + 1), *f, DivisorRole::Successor);
        if (v.result == Ternary::Unknown) {
          ++unknown;
        } else if ((v.result == Ternary::True) != divides_successor(chain(), i, *f)) {
          ++disagreements;
        }
      }
    }
    Json o;
    o["cases"] = cases;
    o["disagreements"] = disagreements;
    o["unknown"] = unknown;
    return o;
  }

  PropertyCounts counts_arg(const Json& j, const std::string& where) const {
    check_keys(j,
               {"pairs", "tuples", "derivative", "witness", "monotone", "prefix", "depth", "epsilon", "family_degree",
                "max_degree"},
               where);
    PropertyCounts c;
    auto read = [&](const char* key, std::size_t& slot) {
      if (auto it = j.find(key); it != j.end()) slot = index_value(*it, where + "." + key);
    };
    read("pairs", c.pairs);
    read("tuples", c.tuples);
    read("derivative", c.derivative);
    read("witness", c.witness);
    read("monotone", c.monotone);
    read("prefix", c.prefix);
    read("depth", c.depth);
    read("epsilon", c.epsilon);
    read("family_degree", c.family_degree);
    read("max_degree", c.max_degree);
    return c;
  }

  std::vector<PropertyResult> run_properties(std::uint64_t seed, const PropertyCounts& counts) const {
    return run_property_suite(chain(), *budget_, family_budget(field_, budget_->max_degree()), seed, counts);
  }

  F field_;
  const Json& doc_;
  const RunOptions& opts_;
  std::vector<std::pair<std::string, P>> names_;
  std::optional<ValuationChain<F>> chain_;
  std::optional<CoefficientSet<F>> budget_;
};

inline std::variant<PadicRationals, RationalFunctions> field_from_json(const Json& doc) {
  const Json& f = require(doc, "field", "scenario");
  check_keys(f, {"type", "p", "var"}, "field");
  const Json& type = require(f, "type", "field");
  if (!type.is_string()) throw ScenarioError("field.type: expected a string");
  const std::size_t p = index_value(require(f, "p", "field"), "field.p");
  if (p > 0xffffffffULL) throw DomainError("field.p: prime out of range");
  const std::string t = type.get<std::string>();
  if (t == "padic") {
    if (f.contains("var")) throw ScenarioError("field.var: only rational_functions fields have a variable");
    return PadicRationals(static_cast<std::uint32_t>(p));
  }
  if (t == "rational_functions") {
    char var = 't';
    if (auto v = f.find("var"); v != f.end()) {
      if (!v->is_string() || v->get<std::string>().size() != 1) throw ScenarioError("field.var: expected one letter");
      var = v->get<std::string>()[0];
    }
    return RationalFunctions(static_cast<std::uint32_t>(p), var);
  }
  throw ScenarioError("field.type: expected \"padic\" or \"rational_functions\", got \"" + t + "\"");
}

inline Json error_json(const std::string& kind, const std::string& message) {
  Json err;
  err["kind"] = kind;
  err["message"] = message;
  Json report;
  report["error"] = std::move(err);
  Json summary;
  summary["status"] = "error";
  report["summary"] = std::move(summary);
  return report;
}

}  // namespace detail

/// Runs a parsed scenario document. Input problems (bad JSON shape, parse
/// errors, chain violations, out-of-range arguments) give exit code 2 and an
/// error report; failed checks give 1.
inline Outcome run_document(const Json& doc, const RunOptions& opts) {
  try {
    if (!doc.is_object()) throw ScenarioError("scenario: expected a JSON object");
    detail::check_keys(doc, {"field", "chain", "budget", "polynomials", "queries", "description"}, "scenario");
    auto field = detail::field_from_json(doc);
    return std::visit([&](auto&& f) { return detail::Runner(f, doc, opts).run(); }, field);
  } catch (const ChainError& e) {
    Outcome o{detail::error_json("chain", e.what()), kInputError};
    o.report["error"]["condition"] = e.condition();
    return o;
  } catch (const ParseError& e) {
    Outcome o{detail::error_json("parse", e.what()), kInputError};
    o.report["error"]["column"] = e.position();
    return o;
  } catch (const InternalError& e) {
    return {detail::error_json("internal", e.what()), kCheckFailed};
  } catch (const ScenarioError& e) {
    return {detail::error_json("scenario", e.what()), kInputError};
  } catch (const Error& e) {
    return {detail::error_json("domain", e.what()), kInputError};
  }
}

inline Outcome run_text(std::string_view text, const RunOptions& opts) {
  Json doc;
  try {
    doc = Json::parse(text.begin(), text.end());
  } catch (const Json::parse_error& e) {
    return {detail::error_json("json", e.what()), kInputError};
  }
  return run_document(doc, opts);
}

inline Outcome run_file(const std::string& path, const RunOptions& opts) {
  std::ifstream in(path, std::ios::binary);
  if (!in) return {detail::error_json("io", "cannot read scenario file " + path), kInputError};
  std::ostringstream buf;
  buf << in.rdbuf();
  return run_text(buf.str(), opts);
}

/// Built-in scenarios: the two worked chains with their anchor queries and
/// the full property suite.
inline std::optional<std::string> demo_scenario(std::string_view name) {
  if (name == "sqrt-minus-2") {
    return R"({
  "description": "2-adic chain approximating a root of x^2+2",
  "field": {"type": "padic", "p": 2},
  "chain": [{"key": "x", "gamma": "1/2"}, {"key": "x^2+2", "gamma": "2"}],
  "polynomials": {"Q": "x^2+2"},
  "queries": [
    {"op": "eval", "f": "x^4+4", "expect": {"value": "3"}},
    {"op": "eval", "f": "2*x", "expect": {"value": "3/2"}},
    {"op": "expand", "f": "x^4+4", "expect": {"coefficients": ["8", "-4", "1"]}},
    {"op": "epsilon", "p": "Q", "prefix": 0, "expect": {"epsilon": "1/2", "maximizers": [2], "b": 2}},
    {"op": "epsilon", "p": "Q", "expect": {"epsilon": "1", "b": 2}},
    {"op": "check-akp", "step": 0, "expect": {"verdict": "certified"}},
    {"op": "check-akp", "step": 1, "expect": {"verdict": "certified"}},
    {"op": "check-mlv", "expect": {"accepted": true}},
    {"op": "successor", "step": 0, "expect": {"result": true}},
    {"op": "refute", "q": "Q", "prefix": 0, "expect": {"verdict": "refuted", "counterexample": "x"}},
    {"op": "refute", "q": "Q", "expect": {"verdict": "inconclusive"}},
    {"op": "witness", "q": "Q", "g": "Q", "expect": {"b": 2, "ratio": "1"}},
    {"op": "depth", "f": "x", "expect": {"step": 0}},
    {"op": "depth", "f": "x^4+4", "expect": {"step": 1}},
    {"op": "properties", "seed": 1}
  ]
}
)";
  }
  if (name == "char2-xsq-t") {
    return R"({
  "description": "t-adic chain over F_2(t) with an inseparable key x^2+t",
  "field": {"type": "rational_functions", "p": 2, "var": "t"},
  "chain": [{"key": "x", "gamma": "1/2"}, {"key": "x^2+t", "gamma": "3/2"}],
  "polynomials": {"Q": "x^2+t"},
  "queries": [
    {"op": "eval", "f": "x^4+t^2", "expect": {"value": "3"}},
    {"op": "epsilon", "p": "Q", "prefix": 0, "expect": {"epsilon": "1/2", "b": 2}},
    {"op": "epsilon", "p": "Q", "expect": {"epsilon": "3/4", "maximizers": [2], "b": 2}},
    {"op": "check-akp", "step": 1, "expect": {"verdict": "certified"}},
    {"op": "check-mlv", "expect": {"accepted": true}},
    {"op": "successor", "step": 0, "expect": {"result": true}},
    {"op": "refute", "q": "Q", "expect": {"verdict": "inconclusive"}},
    {"op": "witness", "q": "Q", "g": "x^4+t^2", "expect": {"b": 4, "l": 2, "e": 1, "ratio": "3/4"}},
    {"op": "depth", "f": "x^2", "expect": {"step": 0}},
    {"op": "properties", "seed": 1}
  ]
}
)";
  }
  return std::nullopt;
}

inline std::vector<std::string> demo_names() { return {"sqrt-minus-2", "char2-xsq-t"}; }

inline Outcome run_demo(std::string_view name, const RunOptions& opts) {
  auto text = demo_scenario(name);
  if (!text) {
    std::string known;
    for (const auto& n : demo_names()) known += (known.empty() ? "" : ", ") + n;
    return {detail::error_json("demo", "unknown demo \"" + std::string(name) + "\"; known: " + known), kInputError};
  }
  return run_text(*text, opts);
}

inline std::string render_machine(const Json& report) { return report.dump(2) + "\n"; }

namespace detail {

inline std::string inline_json(const Json& j) {
  if (j.is_string()) return j.get<std::string>();
  if (j.is_array()) {
    std::string out = "[";
    for (std::size_t i = 0; i < j.size(); ++i) out += (i ? ", " : "") + inline_json(j[i]);
    return out + "]";
  }
  if (j.is_object()) {
    std::string out = "{";
    bool first = true;
    for (auto it = j.begin(); it != j.end(); ++it) {
      out += (first ? "" : ", ") + it.key() + ": " + inline_json(*it);
      first = false;
    }
    return out + "}";
  }
  return j.dump();
}

}  // namespace detail

/// One line per query, property suites one line per property.
inline std::string render_human(const Json& report) {
  std::ostringstream out;
  if (report.contains("error")) {
    const Json& e = report["error"];
    out << "error (" << e["kind"].get<std::string>() << "): " << e["message"].get<std::string>() << "\n";
    return out.str();
  }
  out << "field:  " << report["field"].get<std::string>() << "\n";
  std::string chain;
  for (const auto& s : report["chain"]) {
    chain += (chain.empty() ? "" : ", ") + s["key"].get<std::string>() + " -> " + s["gamma"].get<std::string>();
  }
  out << "chain:  [" << chain << "]\n";
  out << "budget: " << detail::inline_json(report["budget"]["coefficients"]) << " deg<="
      << report["budget"]["max_degree"].get<std::size_t>() << "\n";
  std::size_t n = 0;
  for (const auto& q : report["queries"]) {
    out << "[" << ++n << "] " << q["op"].get<std::string>();
    for (auto it = q["input"].begin(); it != q["input"].end(); ++it) out << " " << it.key() << "=" << detail::inline_json(*it);
    out << ": " << q["status"].get<std::string>() << "\n";
    const Json& o = q["output"];
    for (auto it = o.begin(); it != o.end(); ++it) {
      if (it.key() == "properties") continue;
      out << "      " << it.key() << " = " << detail::inline_json(*it) << "\n";
    }
    if (o.contains("properties")) {
      for (const auto& p : o["properties"]) {
        out << "      " << p["status"].get<std::string>() << "  " << p["name"].get<std::string>() << " ("
            << p["cases"].get<std::size_t>() << " cases, " << p["failures"].get<std::size_t>() << " failures)";
        if (p.contains("first_failure")) out << ": " << p["first_failure"].get<std::string>();
        out << "\n";
      }
    }
    if (q.contains("mismatches")) out << "      expectation mismatch on " << detail::inline_json(q["mismatches"]) << "\n";
  }
  const Json& s = report["summary"];
  out << "summary: " << s["queries"].get<std::size_t>() << " queries, " << s["failed"].get<std::size_t>() << " failed, "
      << s["inconclusive"].get<std::size_t>() << " inconclusive: " << s["status"].get<std::string>() << "\n";
  return out.str();
}

}  // namespace akp::cli
