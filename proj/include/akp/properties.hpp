#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "akp/keypoly.hpp"
#include "akp/oracle.hpp"
#include "akp/poly.hpp"
#include "akp/valuation.hpp"

// Executable forms of the structural results about abstract key polynomials,
// run over a concrete chain with exact arithmetic. Each check returns a
// PropertyResult; a property holds when failures == 0.

namespace akp {

struct PropertyResult {
  std::string name;
  std::size_t cases = 0;
  std::size_t failures = 0;
  std::optional<std::string> first_failure;
  std::vector<std::pair<std::string, std::string>> notes;

  explicit PropertyResult(std::string n) : name(std::move(n)) {}

  bool ok() const { return failures == 0 && cases > 0; }

  void fail(std::string what) {
    ++failures;
    if (!first_failure) first_failure = std::move(what);
  }
  void note(std::string key, std::string value) { notes.emplace_back(std::move(key), std::move(value)); }
};

/// Deterministic source of random polynomials over a coefficient set.
/// Only mt19937_64 output (fully specified by the standard) is used, so a
/// seed gives the same sequence on every platform.
template <ValuedField F>
class RandomPolys {
 public:
  RandomPolys(CoefficientSet<F> set, std::uint64_t seed) : set_(std::move(set)), rng_(seed) {
    for (const auto& v : set_.values()) {
      if (!set_.field().is_zero(v)) nonzero_.push_back(v);
    }
  }

  std::size_t index(std::size_t n) { return static_cast<std::size_t>(rng_() % n); }

  /// Nonzero polynomial of degree exactly d.
  Poly<F> of_degree(std::size_t d) {
    std::vector<typename F::element> c;
    c.reserve(d + 1);
    for (std::size_t k = 0; k < d; ++k) c.push_back(set_.values()[index(set_.size())]);
    c.push_back(nonzero_[index(nonzero_.size())]);
    return Poly<F>(set_.field(), std::move(c));
  }

  /// Nonzero polynomial with degree uniform in [lo, hi].
  Poly<F> between(std::size_t lo, std::size_t hi) { return of_degree(lo + index(hi - lo + 1)); }

  /// Possibly zero polynomial of degree < d (zero with probability 1/4).
  Poly<F> below(std::size_t d) {
    if (d == 0 || index(4) == 0) return Poly<F>(set_.field());
    return between(0, d - 1);
  }

 private:
  CoefficientSet<F> set_;
  std::mt19937_64 rng_;
  std::vector<typename F::element> nonzero_;
};

/// mu(fg) = mu(f) + mu(g); mu(f+g) >= min, with equality when the values differ.
template <ValuedField F>
PropertyResult check_valuation_axioms(const ValuationChain<F>& chain, RandomPolys<F>& gen, std::size_t pairs,
                                      std::size_t max_degree) {
  PropertyResult r{"valuation axioms"};
  for (std::size_t n = 0; n < pairs; ++n) {
    Poly<F> f = gen.between(0, max_degree);
    Poly<F> g = gen.between(0, max_degree);
    ++r.cases;
    const Value mf = chain.evaluate(f);
    const Value mg = chain.evaluate(g);
    if (!(chain.evaluate(f * g) == mf + mg)) r.fail("mu(fg) != mu(f)+mu(g) for f = " + f.str() + ", g = " + g.str());
    const Value ms = chain.evaluate(f + g);
    if (ms < min(mf, mg)) r.fail("mu(f+g) < min for f = " + f.str() + ", g = " + g.str());
    if (!(mf == mg) && !(ms == min(mf, mg))) r.fail("mu(f+g) != min with distinct values for f = " + f.str());
  }
  return r;
}

namespace detail {

template <ValuedField F>
std::vector<std::size_t> nonlinear_key_steps(const ValuationChain<F>& chain) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < chain.length(); ++i) {
    if (chain.key(i).deg() >= 2) out.push_back(i);
  }
  if (out.empty()) {
    for (std::size_t i = 0; i < chain.length(); ++i) out.push_back(i);
  }
  return out;
}

}  // namespace detail

/// For a key Q and P_1..P_t of degree < deg Q with prod P_i = qQ + r:
/// mu(r) = mu(prod P_i) < mu(qQ), for mu any chain prefix at or after Q.
template <ValuedField F>
PropertyResult check_product_remainder(const ValuationChain<F>& full, RandomPolys<F>& gen, std::size_t tuples) {
  PropertyResult r{"product remainder"};
  const auto steps = detail::nonlinear_key_steps(full);
  for (std::size_t n = 0; n < tuples; ++n) {
    const std::size_t i = steps[gen.index(steps.size())];
    const std::size_t j = i + gen.index(full.length() - i);
    const ValuationChain<F> mu = full.truncate(j);
    const Poly<F>& Q = full.key(i);
    const std::size_t t = 2 + gen.index(3);
    Poly<F> prod = Poly<F>::constant(full.field(), full.field().one());
    for (std::size_t k = 0; k < t; ++k) prod *= gen.between(0, Q.deg() - 1);
    auto [q, rem] = euclid_div(prod, Q);
    ++r.cases;
    const Value v_prod = mu.evaluate(prod);
    if (!(mu.evaluate(rem) == v_prod) || !(v_prod < mu.evaluate(q * Q))) {
      r.fail("Q = " + Q.str() + ", prefix " + std::to_string(j) + ", product " + prod.str());
    }
  }
  return r;
}

/// mu_Q(d_b f) >= mu_Q(f) - b*epsilon(Q) for every key Q of the chain,
/// mu_Q the truncation of the full valuation with respect to Q.
template <ValuedField F>
PropertyResult check_derivative_bound(const ValuationChain<F>& full, RandomPolys<F>& gen, std::size_t per_key,
                                      std::size_t max_degree) {
  PropertyResult r{"derivative bound"};
  for (std::size_t i = 0; i < full.length(); ++i) {
    const Poly<F>& Q = full.key(i);
    const Value eps = epsilon(full, Q).epsilon;
    for (std::size_t n = 0; n < per_key; ++n) {
      Poly<F> f = gen.between(1, max_degree);
      const std::size_t b = 1 + gen.index(f.deg());
      ++r.cases;
      const Value lhs = truncated_value(full, Q, hasse_derivative(f, b));
      const Value rhs = truncated_value(full, Q, f) - eps.times(b);
      if (lhs < rhs) r.fail("Q = " + Q.str() + ", f = " + f.str() + ", b = " + std::to_string(b));
    }
  }
  return r;
}

/// For g with S_Q(g) != {0}, witness_b finds b with
/// (mu_Q(g) - mu_Q(d_b g)) / b = epsilon(Q). Samples are built from random
/// Q-expansions; a third of them have no terms of index 1..p-1 (p the
/// residue characteristic), which makes l a multiple of p whenever p is in
/// S_Q(g).
template <ValuedField F>
PropertyResult check_witness_index(const ValuationChain<F>& full, RandomPolys<F>& gen, std::size_t samples,
                                   std::size_t max_power) {
  PropertyResult r{"derivative witness"};
  const std::uint32_t p = full.field().residue_characteristic();
  std::size_t with_e = 0;
  std::size_t attempts = 0;
  while (r.cases < samples && attempts < samples * 50) {
    ++attempts;
    const std::size_t i = gen.index(full.length());
    const Poly<F>& Q = full.key(i);
    const bool skip_low = gen.index(3) == 0;
    std::size_t top = 1 + gen.index(max_power);
    if (skip_low) top = std::max<std::size_t>(top, p);
    Poly<F> g(full.field());
    for (std::size_t j = 0; j <= top; ++j) {
      if (skip_low && j >= 1 && j < p) continue;
      Poly<F> a = j == top ? gen.between(0, Q.deg() - 1) : gen.below(Q.deg());
      g += a * Q.pow(j);
    }
    QExpansionView<F> view = expansion_view(full, Q, g);
    if (view.support.size() == 1 && view.support[0] == 0) continue;
    ++r.cases;
    try {
      WitnessReport w = witness_b(full, Q, g);
      if (w.e > 0) ++with_e;
    } catch (const Error& e) {
      r.fail("Q = " + Q.str() + ", g = " + g.str() + ": " + e.what());
    }
  }
  if (r.cases < samples) r.fail("only " + std::to_string(r.cases) + " samples with S_Q(g) != {0}");
  r.note("cases_with_e_positive", std::to_string(with_e));
  if (with_e == 0) r.fail("no sample with e >= 1 for residue characteristic " + std::to_string(p));
  return r;
}

/// Prefix values are non-decreasing, end at the full value, and once a
/// prefix reaches the full value every later prefix does too.
template <ValuedField F>
PropertyResult check_truncation_monotone(const ValuationChain<F>& full, RandomPolys<F>& gen, std::size_t samples,
                                         std::size_t max_degree) {
  PropertyResult r{"truncation monotone"};
  for (std::size_t n = 0; n < samples; ++n) {
    Poly<F> f = gen.between(0, max_degree);
    ++r.cases;
    const Value target = full.evaluate(f);
    std::optional<Value> prev;
    bool reached = false;
    for (std::size_t i = 0; i < full.length(); ++i) {
      Value v = full.truncate(i).evaluate(f);
      if (prev && v < *prev) r.fail("decrease at step " + std::to_string(i) + " for f = " + f.str());
      if (reached && !(v == target)) r.fail("attainment lost at step " + std::to_string(i) + " for f = " + f.str());
      if (target < v) r.fail("prefix above full value for f = " + f.str());
      reached = reached || v == target;
      prev = std::move(v);
    }
    if (!reached) r.fail("full value never reached for f = " + f.str());
  }
  return r;
}

/// The prefix through step i is the truncation of the full valuation with
/// respect to key_i.
template <ValuedField F>
PropertyResult check_prefix_is_truncation(const ValuationChain<F>& full, RandomPolys<F>& gen, std::size_t samples,
                                          std::size_t max_degree) {
  PropertyResult r{"prefix is truncation"};
  for (std::size_t n = 0; n < samples; ++n) {
    Poly<F> f = gen.between(0, max_degree);
    const std::size_t i = gen.index(full.length());
    ++r.cases;
    if (!(full.truncate(i).evaluate(f) == truncated_value(full, full.key(i), f))) {
      r.fail("step " + std::to_string(i) + ", f = " + f.str());
    }
  }
  return r;
}

/// The truncation reaching the full value of f sits at a key of degree <= deg f.
template <ValuedField F>
PropertyResult check_truncation_depth(const ValuationChain<F>& full, RandomPolys<F>& gen, std::size_t samples,
                                      std::size_t max_degree) {
  PropertyResult r{"truncation depth"};
  for (std::size_t n = 0; n < samples; ++n) {
    Poly<F> f = gen.between(1, max_degree);
    ++r.cases;
    const std::size_t i = truncation_depth(full, f);
    if (full.key(i).deg() > f.deg()) r.fail("key " + full.key(i).str() + " deeper than deg f for f = " + f.str());
    for (std::size_t j = i; j < full.length(); ++j) {
      if (!(full.truncate(j).evaluate(f) == full.evaluate(f))) r.fail("value lost after depth for f = " + f.str());
    }
  }
  return r;
}

/// Each key is a MacLane-Vaquie key polynomial for its own prefix:
/// exhaustive minimality over the budget plus the structural irreducibility
/// certificate.
template <ValuedField F>
PropertyResult check_last_key_mlv(const ValuationChain<F>& full, const CoefficientSet<F>& budget) {
  PropertyResult r{"last key is MacLane-Vaquie"};
  for (std::size_t i = 0; i < full.length(); ++i) {
    const ValuationChain<F> prefix = full.truncate(i);
    MlvVerdict<F> v = check_mlv_last(prefix, full.key(i), budget);
    r.cases += std::max<std::size_t>(v.checked, 1);
    if (!v.minimal || v.minimal_evidence != Evidence::ByEnumeration) {
      r.fail("key " + full.key(i).str() + " not minimal" +
             (v.minimality_witness ? ": divides " + v.minimality_witness->str() : std::string()));
    }
    if (v.irreducible != Ternary::True || v.irreducible_evidence != Evidence::Structural) {
      r.fail("key " + full.key(i).str() + " lacks the structural irreducibility certificate");
    }
    r.note("key_" + std::to_string(i), v.reason);
  }
  return r;
}

/// divides_successor (kernel criterion) against the cofactor-search oracle,
/// on every monic f over the budget of degree <= family_degree.
template <ValuedField F>
PropertyResult check_successor_divisibility(const ValuationChain<F>& full, const CoefficientSet<F>& budget,
                                            std::size_t family_degree) {
  PropertyResult r{"successor divisibility vs oracle"};
  std::size_t unknown = 0;
  std::size_t divisible = 0;
  for (std::size_t i = 0; i + 1 < full.length(); ++i) {
    GradedDivisibilityOracle<F> oracle(full.truncate(i), budget);
    const Poly<F>& next = full.key(i + 1);
    for (std::size_t d = 0; d <= family_degree; ++d) {
      PolyStream<F> s(budget, d, true);
      while (auto f = s.next()) {
        const bool structural = divides_successor(full, i, *f);
        DivisibilityVerdict<F> o = oracle.divides(next, *f, DivisorRole::Successor);
        ++r.cases;
        divisible += structural;
        if (o.result == Ternary::Unknown) {
          ++unknown;
          continue;
        }
        if ((o.result == Ternary::True) != structural) {
          r.fail("step " + std::to_string(i) + ", f = " + f->str() + ": criterion " + (structural ? "true" : "false") +
                 ", oracle " + to_string(o.result));
        }
      }
    }
  }
  r.note("divisible", std::to_string(divisible));
  r.note("unknown", std::to_string(unknown));
  return r;
}

/// divides_last_key (S_Q criterion) against the cofactor-search oracle for
/// every prefix, on every monic f over the budget of degree <= family_degree.
template <ValuedField F>
PropertyResult check_last_key_divisibility(const ValuationChain<F>& full, const CoefficientSet<F>& budget,
                                           std::size_t family_degree) {
  PropertyResult r{"last-key divisibility vs oracle"};
  std::size_t unknown = 0;
  std::size_t divisible = 0;
  for (std::size_t i = 0; i < full.length(); ++i) {
    const ValuationChain<F> prefix = full.truncate(i);
    GradedDivisibilityOracle<F> oracle(prefix, budget);
    for (std::size_t d = 0; d <= family_degree; ++d) {
      PolyStream<F> s(budget, d, true);
      while (auto f = s.next()) {
        const bool structural = divides_last_key(prefix, *f);
        DivisibilityVerdict<F> o = oracle.divides(prefix.last_key(), *f, DivisorRole::LastKey);
        ++r.cases;
        divisible += structural;
        if (o.result == Ternary::Unknown) {
          ++unknown;
          continue;
        }
        if ((o.result == Ternary::True) != structural) {
          r.fail("step " + std::to_string(i) + ", f = " + f->str() + ": criterion " + (structural ? "true" : "false") +
                 ", oracle " + to_string(o.result));
        }
      }
    }
  }
  r.note("divisible", std::to_string(divisible));
  r.note("unknown", std::to_string(unknown));
  return r;
}

/// Every key is certified abstract, and the one-sided refutation search
/// finds no counterexample for it over the budget.
template <ValuedField F>
PropertyResult check_keys_not_refuted(const ValuationChain<F>& full, const CoefficientSet<F>& budget) {
  PropertyResult r{"certified keys are not refuted"};
  for (std::size_t i = 0; i < full.length(); ++i) {
    ++r.cases;
    KeyCertificate<F> c = certify_abstract(full, i, budget);
    KeyCertificate<F> s = refute_abstract(full, full.key(i), budget);
    if (c.verdict != Verdict::Certified) r.fail("key " + full.key(i).str() + " not certified: " + c.note);
    if (s.verdict != Verdict::Inconclusive) {
      r.fail("key " + full.key(i).str() + " refuted by " + (s.counterexample ? s.counterexample->str() : "?"));
    }
  }
  return r;
}

/// keypoly's epsilon agrees with the brute-force definition.
template <ValuedField F>
PropertyResult check_epsilon_differential(const ValuationChain<F>& full, RandomPolys<F>& gen, std::size_t samples,
                                          std::size_t max_degree) {
  PropertyResult r{"epsilon differential"};
  for (std::size_t n = 0; n < samples; ++n) {
    Poly<F> P = gen.between(1, max_degree);
    const ValuationChain<F> mu = full.truncate(gen.index(full.length()));
    ++r.cases;
    if (!(epsilon(mu, P) == epsilon_bruteforce(mu, P))) r.fail("P = " + P.str() + " under " + mu.str());
  }
  return r;
}

/// Along the chain: epsilon of successive keys strictly increases, the next
/// key's value jumps under the truncation, the gap corollary is strict for it,
/// and it is an immediate successor within the budget.
template <ValuedField F>
PropertyResult check_successor_chain(const ValuationChain<F>& full, const CoefficientSet<F>& budget) {
  PropertyResult r{"successor chain"};
  for (std::size_t i = 0; i + 1 < full.length(); ++i) {
    const Poly<F>& Q = full.key(i);
    const Poly<F>& next = full.key(i + 1);
    ++r.cases;
    const std::string at = "step " + std::to_string(i) + ": ";
    if (!(epsilon(full, Q).epsilon < epsilon(full, next).epsilon)) r.fail(at + "epsilon not increasing");
    if (!(truncated_value(full, Q, next) < full.evaluate(next))) r.fail(at + "no value jump for the next key");
    try {
      WitnessReport w = witness_b(full, Q, next);
      GapVerdict<F> gap = epsilon_gap(full, Q, next, w.b);
      if (!gap.strict || !(gap.epsilon_q < gap.epsilon_f)) r.fail(at + "gap not strict");
    } catch (const Error& e) {
      r.fail(at + e.what());
    }
    if (!is_immediate_successor(full, i, budget).result) r.fail(at + "not an immediate successor");
  }
  if (full.length() == 1) r.cases = 1;
  return r;
}

/// Sample sizes for run_property_suite; the defaults are the acceptance sizes.
struct PropertyCounts {
  std::size_t pairs = 1000;
  std::size_t tuples = 500;
  std::size_t derivative = 500;  // per key
  std::size_t witness = 200;
  std::size_t monotone = 500;
  std::size_t prefix = 500;
  std::size_t depth = 500;
  std::size_t epsilon = 500;
  std::size_t family_degree = 3;
  std::size_t max_degree = 8;
};

/// Every property above on one chain. Each property draws from its own
/// generator, seeded from `seed` and its position, so adding samples to one
/// does not shift the others.
template <ValuedField F>
std::vector<PropertyResult> run_property_suite(const ValuationChain<F>& full, const CoefficientSet<F>& budget,
                                               const CoefficientSet<F>& family, std::uint64_t seed,
                                               const PropertyCounts& n = {}) {
  std::uint64_t stream = 0;
  auto gen = [&] { return RandomPolys<F>(budget, seed * 1000003ULL + ++stream); };
  std::vector<PropertyResult> out;
  {
    auto g = gen();
    out.push_back(check_valuation_axioms(full, g, n.pairs, n.max_degree));
  }
  {
    auto g = gen();
    out.push_back(check_product_remainder(full, g, n.tuples));
  }
  {
    auto g = gen();
    out.push_back(check_derivative_bound(full, g, n.derivative, n.max_degree));
  }
  {
    auto g = gen();
    out.push_back(check_witness_index(full, g, n.witness, 4));
  }
  {
    auto g = gen();
    out.push_back(check_truncation_monotone(full, g, n.monotone, n.max_degree));
  }
  {
    auto g = gen();
    out.push_back(check_prefix_is_truncation(full, g, n.prefix, n.max_degree));
  }
  {
    auto g = gen();
    out.push_back(check_truncation_depth(full, g, n.depth, n.max_degree));
  }
  out.push_back(check_last_key_mlv(full, budget));
  out.push_back(check_successor_divisibility(full, family, n.family_degree));
  out.push_back(check_last_key_divisibility(full, family, n.family_degree));
  out.push_back(check_keys_not_refuted(full, budget));
  {
    auto g = gen();
    out.push_back(check_epsilon_differential(full, g, n.epsilon, n.max_degree));
  }
  out.push_back(check_successor_chain(full, budget));
  return out;
}

}  // namespace akp
