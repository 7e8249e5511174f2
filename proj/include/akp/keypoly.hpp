#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "akp/base_field.hpp"
#include "akp/epsilon_report.hpp"
#include "akp/error.hpp"
#include "akp/oracle.hpp"
#include "akp/poly.hpp"
#include "akp/valuation.hpp"

namespace akp {

/// epsilon, I and b of P under the valuation `chain`. The maximum runs over
/// b = 1..deg P and skips vanishing derivatives (their ratio would be -inf).
template <ValuedField F>
EpsilonReport epsilon(const ValuationChain<F>& chain, const Poly<F>& P) {
  if (P.is_zero() || P.is_constant()) throw DomainError("epsilon is undefined for constant polynomials");
  const Value mu_p = chain.evaluate(P);
  EpsilonReport out;
  bool have = false;
  for (std::size_t b = 1; b <= P.deg(); ++b) {
    Poly<F> d = hasse_derivative(P, b);
    if (d.is_zero()) continue;
    Value ratio = (mu_p - chain.evaluate(d)) / static_cast<std::int64_t>(b);
    if (!have || out.epsilon < ratio) {
      out.epsilon = std::move(ratio);
      out.maximizers = {b};
      have = true;
    } else if (ratio == out.epsilon) {
      out.maximizers.push_back(b);
    }
  }
  out.b = out.maximizers.front();
  return out;
}

enum class Verdict { Certified, Refuted, Inconclusive };
enum class Method { ByAugmentation, BySearch };

inline const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::Certified: return "certified";
    case Verdict::Refuted: return "refuted";
    case Verdict::Inconclusive: return "inconclusive";
  }
  return "?";
}

inline const char* to_string(Method m) { return m == Method::ByAugmentation ? "by-augmentation" : "by-search"; }

/// Outcome of an abstract-key-polynomial check. A Refuted certificate always
/// carries f with deg f < deg Q and epsilon(f) >= epsilon(Q).
template <ValuedField F>
struct KeyCertificate {
  Poly<F> subject;
  Verdict verdict;
  Method method;
  std::optional<Poly<F>> counterexample;
  std::string note;
};

/// Certifies key_i as an abstract key polynomial for the full chain: the
/// full valuation agrees with the prefix through step i-1 below deg key_i
/// and strictly raises the value of key_i. Both hypotheses are re-checked,
/// the first on every monic f over the budget with deg f < deg key_i.
/// The Gauss key x is certified outright: no f of degree 0 has an epsilon.
template <ValuedField F>
KeyCertificate<F> certify_abstract(const ValuationChain<F>& full, std::size_t i, const CoefficientSet<F>& budget) {
  const Poly<F>& Q = full.key(i);
  if (i == 0) return {Q, Verdict::Certified, Method::ByAugmentation, std::nullopt, "vacuous: deg x = 1"};
  const ValuationChain<F> before = full.truncate(i - 1);
  std::size_t checked = 0;
  const std::size_t top = std::min(Q.deg() - 1, budget.max_degree());
  for (std::size_t d = 0; d <= top; ++d) {
    PolyStream<F> s(budget, d, true);
    while (auto f = s.next()) {
      ++checked;
      if (!(before.evaluate(*f) == full.evaluate(*f))) {
        return {Q, Verdict::Inconclusive, Method::ByAugmentation, std::nullopt,
                "values differ below deg Q on " + f->str()};
      }
    }
  }
  if (!(full.evaluate(Q) > before.evaluate(Q))) {
    return {Q, Verdict::Inconclusive, Method::ByAugmentation, std::nullopt, "value of Q not raised"};
  }
  return {Q, Verdict::Certified, Method::ByAugmentation, std::nullopt,
          "hypotheses verified on " + std::to_string(checked) + " polynomials"};
}

/// One-sided search for a counterexample to Q being an abstract key
/// polynomial: the first monic f (degree 1 up, canonical order) with
/// deg f < deg Q and epsilon(f) >= epsilon(Q). Never certifies.
template <ValuedField F>
KeyCertificate<F> refute_abstract(const ValuationChain<F>& chain, const Poly<F>& Q, const CoefficientSet<F>& budget) {
  if (Q.is_zero() || Q.is_constant() || !Q.is_monic()) throw DomainError("refutation needs a monic Q of degree >= 1");
  const Value eps_q = epsilon(chain, Q).epsilon;
  std::size_t checked = 0;
  const std::size_t top = std::min(Q.deg() - 1, budget.max_degree());
  for (std::size_t d = 1; d <= top; ++d) {
    PolyStream<F> s(budget, d, true);
    while (auto f = s.next()) {
      ++checked;
      if (epsilon(chain, *f).epsilon >= eps_q) {
        return {Q, Verdict::Refuted, Method::BySearch, std::move(*f), "epsilon(f) >= epsilon(Q) = " + eps_q.str()};
      }
    }
  }
  return {Q, Verdict::Inconclusive, Method::BySearch, std::nullopt,
          "no counterexample among " + std::to_string(checked) + " candidates"};
}

struct WitnessReport {
  std::size_t b = 0;
  std::size_t l = 0;  // min of S_Q(g) without 0
  std::size_t e = 0;  // l = p^e * u with p (the residue characteristic) not dividing u
  Value ratio;
};

/// The derivative index b with (mu_Q(g) - mu_Q(d_b g)) / b = epsilon(Q),
/// for an abstract key polynomial Q of `chain` and S_Q(g) != {0}:
/// b = p^e * b(Q) where p^e is the largest power of the residue
/// characteristic dividing l = min(S_Q(g) \ {0}). Over (Q, v_p) the power
/// is still needed: the term count binom(l, p^e) must be a p-adic unit, and
/// binom(l, 1) = l is not when p | l. The equality is verified before
/// returning.
template <ValuedField F>
WitnessReport witness_b(const ValuationChain<F>& chain, const Poly<F>& Q, const Poly<F>& g) {
  QExpansionView<F> view = expansion_view(chain, Q, g);
  auto it = std::find_if(view.support.begin(), view.support.end(), [](std::size_t j) { return j > 0; });
  if (it == view.support.end()) throw DomainError("S_Q(g) = {0}: no witness index exists");
  WitnessReport out;
  out.l = *it;
  std::size_t p_power = 1;
  if (const std::uint32_t p = g.field().residue_characteristic(); p != 0) {
    std::size_t rest = out.l;
    while (rest % p == 0) {
      rest /= p;
      p_power *= p;
      ++out.e;
    }
  }
  const EpsilonReport eq = epsilon(chain, Q);
  out.b = p_power * eq.b;
  Poly<F> d = hasse_derivative(g, out.b);
  if (d.is_zero()) throw InternalError("witness derivative of order " + std::to_string(out.b) + " vanishes");
  out.ratio = (view.truncated_value - truncated_value(chain, Q, d)) / static_cast<std::int64_t>(out.b);
  if (!(out.ratio == eq.epsilon)) {
    throw InternalError("witness ratio " + out.ratio.str() + " differs from epsilon(Q) = " + eq.epsilon.str());
  }
  return out;
}

template <ValuedField F>
struct GapVerdict {
  bool strict = false;  // epsilon(f) > epsilon(Q) is guaranteed, not just >=
  Value epsilon_f;
  Value epsilon_q;
};

/// Given b with (mu_Q(f) - mu_Q(d_b f)) / b = epsilon(Q) and
/// mu_Q(d_b f) = mu(d_b f), reports epsilon(f) and epsilon(Q) together with
/// the relation that then holds: >= always, > when mu(f) > mu_Q(f).
/// mu is `full`, mu_Q its truncation with respect to Q.
template <ValuedField F>
GapVerdict<F> epsilon_gap(const ValuationChain<F>& full, const Poly<F>& Q, const Poly<F>& f, std::size_t b) {
  if (f.is_zero()) throw DomainError("epsilon gap of the zero polynomial");
  Poly<F> d = hasse_derivative(f, b);
  if (d.is_zero()) throw DomainError("d_b f vanishes");
  const Value eps_q = epsilon(full, Q).epsilon;
  const Value mu_q_f = truncated_value(full, Q, f);
  const Value mu_q_d = truncated_value(full, Q, d);
  if (!((mu_q_f - mu_q_d) / static_cast<std::int64_t>(b) == eps_q)) {
    throw DomainError("(mu_Q(f) - mu_Q(d_b f)) / b differs from epsilon(Q)");
  }
  if (!(mu_q_d == full.evaluate(d))) throw DomainError("mu_Q(d_b f) differs from mu(d_b f)");
  return {full.evaluate(f) > mu_q_f, epsilon(full, f).epsilon, eps_q};
}

template <ValuedField F>
struct SuccessorReport {
  bool value_jump = false;                 // mu_{prefix}(next key) < mu(next key)
  std::optional<Poly<F>> lower_degree_jump;  // monic f of smaller degree that also jumps
  std::size_t checked = 0;
  bool result = false;  // relative to the budget when true
};

/// Whether key_{i+1} is an immediate successor of key_i: its value jumps
/// between the prefix through step i and the full chain, and no monic f of
/// smaller degree over the budget jumps.
template <ValuedField F>
SuccessorReport<F> is_immediate_successor(const ValuationChain<F>& full, std::size_t i,
                                          const CoefficientSet<F>& budget) {
  if (i + 1 >= full.length()) throw DomainError("step " + std::to_string(i) + " has no successor in the chain");
  const ValuationChain<F> prefix = full.truncate(i);
  const Poly<F>& next = full.key(i + 1);
  SuccessorReport<F> out;
  out.value_jump = prefix.evaluate(next) < full.evaluate(next);
  const std::size_t top = std::min(next.deg() - 1, budget.max_degree());
  for (std::size_t d = 0; d <= top && !out.lower_degree_jump; ++d) {
    PolyStream<F> s(budget, d, true);
    while (auto f = s.next()) {
      ++out.checked;
      if (prefix.evaluate(*f) < full.evaluate(*f)) {
        out.lower_degree_jump = std::move(*f);
        break;
      }
    }
  }
  out.result = out.value_jump && !out.lower_degree_jump;
  return out;
}

enum class Evidence { Structural, ByEnumeration, BySearch };

inline const char* to_string(Evidence e) {
  switch (e) {
    case Evidence::Structural: return "structural";
    case Evidence::ByEnumeration: return "by-enumeration";
    case Evidence::BySearch: return "by-search";
  }
  return "?";
}

/// MacLane-Vaquie verdict for Q against the valuation `chain`.
template <ValuedField F>
struct MlvVerdict {
  bool is_last_key = false;
  bool minimal = false;
  Evidence minimal_evidence = Evidence::Structural;
  std::optional<Poly<F>> minimality_witness;  // f with deg f < deg Q that Q divides
  std::size_t checked = 0;
  Ternary irreducible = Ternary::Unknown;
  Evidence irreducible_evidence = Evidence::Structural;
  std::optional<std::pair<Poly<F>, Poly<F>>> factorization;
  std::string reason;

  /// Irreducibility found by search is budget-relative.
  bool accepted() const { return minimal && irreducible == Ternary::True; }
};

/// MacLane-Vaquie key-polynomial check.
///
/// If Q is the last key of `chain`, minimality is checked over every monic
/// f over the budget with deg f < deg Q (none may be divisible) and
/// irreducibility is structural: in Q generates a polynomial ring over the
/// degree-zero part.
///
/// Otherwise Q is a candidate for augmenting `chain`, with last key phi of
/// degree a. Q is minimal iff a | deg Q and the top term of its phi-expansion
/// has minimal value. A minimal Q of degree a is irreducible (linear in in phi);
/// one whose expansion has no minimal constant term is divisible by phi;
/// the remaining cases go to a bounded search for homogeneous factors.
template <ValuedField F>
MlvVerdict<F> check_mlv_last(const ValuationChain<F>& chain, const Poly<F>& Q, const CoefficientSet<F>& budget) {
  if (Q.is_zero() || Q.is_constant() || !Q.is_monic()) throw DomainError("key candidates are monic of degree >= 1");
  MlvVerdict<F> out;
  const Poly<F>& phi = chain.last_key();

  if (Q == phi) {
    out.is_last_key = true;
    out.minimal = true;
    out.minimal_evidence = Evidence::ByEnumeration;
    const std::size_t top = std::min(Q.deg() - 1, budget.max_degree());
    for (std::size_t d = 0; d <= top && out.minimal; ++d) {
      PolyStream<F> s(budget, d, true);
      while (auto f = s.next()) {
        ++out.checked;
        if (divides_last_key(chain, *f)) {
          out.minimal = false;
          out.minimality_witness = std::move(*f);
          break;
        }
      }
    }
    out.irreducible = Ternary::True;
    out.irreducible_evidence = Evidence::Structural;
    out.reason = out.minimal ? "last key: in Q is transcendental over the degree-< deg Q part"
                             : "last key divides a polynomial of smaller degree";
    return out;
  }

  const std::size_t alpha = phi.deg();
  QExpansionView<F> view = expansion_view(chain, phi, Q);
  const std::size_t s = view.expansion.top_index();
  out.minimal = Q.deg() % alpha == 0 && view.support_contains(s);
  out.minimal_evidence = Evidence::Structural;
  if (!out.minimal) {
    if (view.delta < s) out.minimality_witness = view.initial;
    out.reason = "not minimal: the top term of the expansion in " + phi.str() + " does not attain the minimum";
    return out;
  }
  if (s == 1) {
    out.irreducible = Ternary::True;
    out.reason = "degree one in in(" + phi.str() + ")";
    return out;
  }
  if (view.support.front() > 0) {
    out.irreducible = Ternary::False;
    out.factorization = std::pair{phi, euclid_div(Q, phi).quotient};
    out.reason = "in(" + phi.str() + ") divides in Q";
    return out;
  }
  out.irreducible_evidence = Evidence::BySearch;
  if (auto fac = find_homogeneous_factorization(chain, Q, budget)) {
    out.irreducible = Ternary::False;
    out.factorization = std::move(fac);
    out.reason = "in Q = in(" + out.factorization->first.str() + ") * in(" + out.factorization->second.str() + ")";
  } else {
    out.irreducible = Ternary::True;
    out.reason = "no homogeneous factorization over budget " + budget.str();
  }
  return out;
}

/// Least i such that the prefix through step i already gives f its full value.
template <ValuedField F>
std::size_t truncation_depth(const ValuationChain<F>& full, const Poly<F>& f) {
  if (f.is_zero()) throw DomainError("truncation depth of the zero polynomial");
  const Value target = full.evaluate(f);
  for (std::size_t i = 0; i + 1 < full.length(); ++i) {
    if (full.truncate(i).evaluate(f) == target) return i;
  }
  return full.last_index();
}

enum class KeyCheck { Enforce, Skip };

/// Augments `chain` by (Q, gamma). Structural invariants are always checked;
/// with KeyCheck::Enforce Q must also pass check_mlv_last against `chain`.
template <ValuedField F>
ValuationChain<F> augment(const ValuationChain<F>& chain, const Poly<F>& Q, const Value& gamma,
                          const CoefficientSet<F>& budget, KeyCheck check = KeyCheck::Enforce) {
  ValuationChain<F> next = chain.augment_unchecked(Q, gamma);
  if (check == KeyCheck::Enforce) {
    MlvVerdict<F> v = check_mlv_last(chain, Q, budget);
    if (!v.accepted()) throw ChainError("key-polynomial", Q.str() + " is not a key polynomial: " + v.reason);
  }
  return next;
}

template <ValuedField F>
ValuationChain<F> augment(const ValuationChain<F>& chain, const Poly<F>& Q, const Value& gamma) {
  return augment(chain, Q, gamma, default_budget(chain.field()));
}

}  // namespace akp
