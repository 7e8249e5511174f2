#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "akp/base_field.hpp"
#include "akp/epsilon_report.hpp"
#include "akp/error.hpp"
#include "akp/poly.hpp"
#include "akp/valuation.hpp"

// Brute-force ground truth. Nothing here calls into keypoly.hpp, and the
// derivative used by epsilon_bruteforce comes from a Taylor shift rather
// than from hasse_derivative.

namespace akp {

/// A finite set of coefficients plus a degree bound: the search space of
/// every bounded enumeration. Always contains 0 and 1; duplicates dropped,
/// order preserved (it defines the enumeration order).
template <ValuedField F>
class CoefficientSet {
 public:
  using element = typename F::element;

  CoefficientSet(F field, std::vector<element> values, std::size_t max_degree)
      : field_(std::move(field)), max_degree_(max_degree) {
    if (values.empty()) throw DomainError("empty coefficient budget");
    for (auto& v : values) {
      v = field_.canonical(std::move(v));
      bool seen = false;
      for (auto& o : values_) seen = seen || o == v;
      if (!seen) values_.push_back(std::move(v));
    }
    bool has_zero = false;
    bool has_one = false;
    for (auto& v : values_) {
      has_zero = has_zero || field_.is_zero(v);
      has_one = has_one || v == field_.one();
    }
    if (!has_zero || !has_one) throw DomainError("coefficient budget must contain 0 and 1");
  }

  const F& field() const noexcept { return field_; }
  const std::vector<element>& values() const noexcept { return values_; }
  std::size_t size() const noexcept { return values_.size(); }
  std::size_t max_degree() const noexcept { return max_degree_; }

  CoefficientSet with_max_degree(std::size_t d) const {
    CoefficientSet c = *this;
    c.max_degree_ = d;
    return c;
  }

  std::string str() const {
    std::string out = "{";
    for (std::size_t i = 0; i < values_.size(); ++i) {
      if (i) out += ", ";
      out += field_.render(values_[i]);
    }
    return out + "} deg<=" + std::to_string(max_degree_);
  }

 private:
  F field_;
  std::vector<element> values_;
  std::size_t max_degree_;
};

inline constexpr std::size_t kDefaultBudgetDegree = 4;

/// {0, ±1, ±p, ±1/p, ±p²} for Q, the t-analogues for F_p(t).
template <ValuedField F>
CoefficientSet<F> default_budget(const F& field, std::size_t max_degree = kDefaultBudgetDegree) {
  return CoefficientSet<F>(field, field.default_coefficients(), max_degree);
}

/// {0, ±1, ±pi, ±1/pi} for the uniformizer pi: the small family used for
/// exhaustive oracle comparisons.
template <ValuedField F>
CoefficientSet<F> family_budget(const F& field, std::size_t max_degree = kDefaultBudgetDegree) {
  const auto pi = field.uniformizer();
  const auto inv = field.inverse(pi);
  return CoefficientSet<F>(field, {field.zero(), field.one(), -field.one(), pi, -pi, inv, -inv}, max_degree);
}

/// All polynomials of one exact degree with coefficients from a set, in
/// canonical order: lexicographic in the coefficient indices from the top
/// degree down, the constant term varying fastest. Monic streams fix the
/// leading coefficient to 1; general streams take it from the nonzero
/// elements of the set.
///
/// Items are addressable by index, so a stream can be restarted or sharded.
template <ValuedField F>
class PolyStream {
 public:
  PolyStream(const CoefficientSet<F>& set, std::size_t degree, bool monic)
      : set_(set), degree_(degree), monic_(monic) {
    for (std::size_t i = 0; i < set_.size(); ++i) {
      if (!set_.field().is_zero(set_.values()[i])) nonzero_.push_back(i);
    }
    total_ = monic_ ? 1 : nonzero_.size();
    for (std::size_t k = 0; k < degree_; ++k) total_ *= set_.size();
  }

  std::size_t size() const noexcept { return total_; }

  Poly<F> at(std::size_t index) const {
    const F& field = set_.field();
    std::vector<typename F::element> c(degree_ + 1, field.zero());
    for (std::size_t k = 0; k < degree_; ++k) {
      c[k] = set_.values()[index % set_.size()];
      index /= set_.size();
    }
    c[degree_] = monic_ ? field.one() : set_.values()[nonzero_[index]];
    return Poly<F>(field, std::move(c));
  }

  std::optional<Poly<F>> next() {
    if (cursor_ >= total_) return std::nullopt;
    return at(cursor_++);
  }

  void restart() noexcept { cursor_ = 0; }

 private:
  CoefficientSet<F> set_;
  std::size_t degree_;
  bool monic_;
  std::vector<std::size_t> nonzero_;
  std::size_t total_ = 0;
  std::size_t cursor_ = 0;
};

template <ValuedField F>
std::vector<Poly<F>> enumerate_polys(const CoefficientSet<F>& set, std::size_t degree, bool monic) {
  PolyStream<F> s(set, degree, monic);
  std::vector<Poly<F>> out;
  out.reserve(s.size());
  while (auto p = s.next()) out.push_back(std::move(*p));
  return out;
}

/// Coefficients of P(x + h) as a polynomial in h: entry b is the b-th
/// formal derivative of P. Horner's rule in K[x][h].
template <ValuedField F>
std::vector<Poly<F>> taylor_shift(const Poly<F>& P) {
  const F& field = P.field();
  std::vector<Poly<F>> acc;
  const Poly<F> x = Poly<F>::x(field);
  auto c = P.coefficients();
  for (std::size_t k = c.size(); k-- > 0;) {
    std::vector<Poly<F>> next(acc.size() + 1, Poly<F>(field));
    for (std::size_t j = 0; j < acc.size(); ++j) {
      next[j] += x * acc[j];
      next[j + 1] += acc[j];
    }
    next[0] += Poly<F>::constant(field, c[k]);
    acc = std::move(next);
  }
  return acc;
}

/// epsilon, I and b straight from the definition, with derivatives taken
/// from the Taylor shift. Rejects constant P like keypoly's epsilon.
template <ValuedField F>
EpsilonReport epsilon_bruteforce(const ValuationChain<F>& chain, const Poly<F>& P) {
  if (P.is_zero() || P.is_constant()) throw DomainError("epsilon is undefined for constant polynomials");
  std::vector<Poly<F>> derivs = taylor_shift(P);
  const Value mu_p = chain.evaluate(P);
  std::optional<Value> best;
  std::vector<std::size_t> arg;
  // Derivatives beyond the degree vanish: the Taylor shift has exactly deg P + 1 entries.
  for (std::size_t b = 1; b < derivs.size(); ++b) {
    const Value mu_d = chain.evaluate(derivs[b]);
    if (mu_d.is_infinite()) continue;
    Value ratio = (mu_p - mu_d) / static_cast<std::int64_t>(b);
    if (!best || *best < ratio) {
      best = ratio;
      arg.clear();
      arg.push_back(b);
    } else if (*best == ratio) {
      arg.push_back(b);
    }
  }
  return {*best, arg, arg.front()};
}

enum class Ternary { False, True, Unknown };

inline const char* to_string(Ternary t) {
  switch (t) {
    case Ternary::True: return "true";
    case Ternary::False: return "false";
    case Ternary::Unknown: return "unknown";
  }
  return "?";
}

/// What the divisor is known to be relative to the valuation, which decides
/// when an exhausted search may answer False.
enum class DivisorRole {
  General,    // nothing known: a failed search is Unknown
  LastKey,    // A is the last key of the chain
  Successor,  // A is the next key after the chain, of minimal degree with a value jump
};

template <ValuedField F>
struct DivisibilityVerdict {
  Ternary result = Ternary::Unknown;
  std::optional<Poly<F>> witness;
};

/// Decides in(A) | in(B) in the graded ring of `chain` by looking for a
/// cofactor c with mu(B - A*c) > mu(B) and mu(A*c) = mu(B).
///
/// Candidates: the Euclidean quotient of B by A, then every nonzero c over
/// the budget with deg c <= deg B - deg A + deg(last key), capped by the
/// budget degree. In the LastKey and Successor roles any witness can be
/// replaced by the Euclidean quotient, so an unsuccessful search is a proof
/// of non-divisibility; otherwise it is Unknown.
///
/// Cofactors and their values are cached, so one instance answers many
/// queries against the same chain cheaply.
template <ValuedField F>
class GradedDivisibilityOracle {
 public:
  GradedDivisibilityOracle(ValuationChain<F> chain, CoefficientSet<F> budget)
      : chain_(std::move(chain)), budget_(std::move(budget)) {}

  DivisibilityVerdict<F> divides(const Poly<F>& A, const Poly<F>& B, DivisorRole role = DivisorRole::General) {
    if (A.is_zero() || B.is_zero()) throw DomainError("graded divisibility of the zero polynomial");
    const Value mu_b = chain_.evaluate(B);
    const Value mu_a = chain_.evaluate(A);

    Poly<F> q = divide(B, A).quotient;
    if (!q.is_zero() && is_witness(A, B, mu_b, q)) return {Ternary::True, q};

    const std::size_t slack = chain_.last_key().deg();
    if (B.deg() + slack >= A.deg()) {
      std::size_t cap = std::min(B.deg() + slack - A.deg(), budget_.max_degree());
      const Value wanted = mu_b - mu_a;
      for (std::size_t d = 0; d <= cap; ++d) {
        for (const auto& [c, mu_c] : cofactors(d)) {
          if (!(mu_c == wanted)) continue;
          if (is_witness(A, B, mu_b, c)) return {Ternary::True, c};
        }
      }
    }
    return {role == DivisorRole::General ? Ternary::Unknown : Ternary::False, std::nullopt};
  }

  const ValuationChain<F>& chain() const noexcept { return chain_; }

 private:
  bool is_witness(const Poly<F>& A, const Poly<F>& B, const Value& mu_b, const Poly<F>& c) const {
    Poly<F> ac = A * c;
    return chain_.evaluate(ac) == mu_b && chain_.evaluate(B - ac) > mu_b;
  }

  const std::vector<std::pair<Poly<F>, Value>>& cofactors(std::size_t degree) {
    while (cache_.size() <= degree) {
      std::vector<std::pair<Poly<F>, Value>> layer;
      PolyStream<F> s(budget_, cache_.size(), false);
      while (auto c = s.next()) {
        Value v = chain_.evaluate(*c);
        layer.emplace_back(std::move(*c), std::move(v));
      }
      cache_.push_back(std::move(layer));
    }
    return cache_[degree];
  }

  ValuationChain<F> chain_;
  CoefficientSet<F> budget_;
  std::vector<std::vector<std::pair<Poly<F>, Value>>> cache_;
};

template <ValuedField F>
DivisibilityVerdict<F> graded_divides_bruteforce(const ValuationChain<F>& chain, const Poly<F>& A, const Poly<F>& B,
                                                 const CoefficientSet<F>& budget,
                                                 DivisorRole role = DivisorRole::General) {
  GradedDivisibilityOracle<F> oracle(chain, budget);
  return oracle.divides(A, B, role);
}

/// Looks for monic g, h with deg g + deg h = deg Q, both degrees positive
/// multiples of the last key's degree, and mu(Q - g*h) > mu(Q): a nontrivial
/// factorization of in(Q) into homogeneous elements. For each g over the
/// budget, tries the Euclidean quotient of Q by g and then every monic h
/// over the budget. A miss only means no factorization within the budget.
template <ValuedField F>
std::optional<std::pair<Poly<F>, Poly<F>>> find_homogeneous_factorization(const ValuationChain<F>& chain,
                                                                          const Poly<F>& Q,
                                                                          const CoefficientSet<F>& budget) {
  if (Q.is_zero() || !Q.is_monic()) throw DomainError("factorization search needs a monic polynomial");
  const std::size_t alpha = chain.last_key().deg();
  const std::size_t n = Q.deg();
  const Value mu_q = chain.evaluate(Q);
  auto factors = [&](const Poly<F>& g, const Poly<F>& h) { return chain.evaluate(Q - g * h) > mu_q; };
  for (std::size_t k = alpha; 2 * k <= n; k += alpha) {
    if (k > budget.max_degree()) break;
    PolyStream<F> gs(budget, k, true);
    while (auto g = gs.next()) {
      auto [h0, r] = euclid_div(Q, *g);
      if (factors(*g, h0)) return std::pair{*g, h0};
      if (n - k > budget.max_degree()) continue;
      PolyStream<F> hs(budget, n - k, true);
      while (auto h = hs.next()) {
        if (factors(*g, *h)) return std::pair{*g, *h};
      }
    }
  }
  return std::nullopt;
}

}  // namespace akp
