#pragma once

#include <algorithm>
#include <cstddef>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "akp/base_field.hpp"
#include "akp/error.hpp"
#include "akp/poly.hpp"
#include "akp/value.hpp"

namespace akp {

/// One step (Q, gamma) of a valuation chain: the key polynomial and the value
/// the augmented valuation assigns to it.
template <ValuedField F>
struct AugmentationStep {
  Poly<F> key;
  Value gamma;
};

/// A valuation of K[x] given as a Gauss step (x, gamma0) followed by
/// augmentation steps (Q_i, gamma_i). The prefix ending at step i is the
/// truncation attached to Q_i.
///
/// Evaluation on step k expands f in Q_k and recurses on the coefficients
/// with the prefix through step k-1; this is the monomial formula on step 0.
///
/// Construction enforces: keys monic, gammas finite, degrees non-decreasing,
/// gamma_i strictly above the prefix value of Q_i. The key-polynomial
/// condition on each new key is enforced by akp::augment (keypoly.hpp);
/// augment_unchecked skips only that check.
template <ValuedField F>
class ValuationChain {
 public:
  static ValuationChain gauss(F field, Value gamma0) {
    if (gamma0.is_infinite()) throw ChainError("gamma-finite", "the Gauss step needs a finite value for x");
    ValuationChain c(std::move(field));
    c.steps_.push_back({Poly<F>::x(c.field_), std::move(gamma0)});
    return c;
  }

  const F& field() const noexcept { return field_; }
  std::span<const AugmentationStep<F>> steps() const noexcept { return steps_; }
  std::size_t length() const noexcept { return steps_.size(); }
  const AugmentationStep<F>& step(std::size_t i) const {
    if (i >= steps_.size()) throw DomainError("step index " + std::to_string(i) + " out of range");
    return steps_[i];
  }
  const Poly<F>& key(std::size_t i) const { return step(i).key; }
  const Poly<F>& last_key() const { return steps_.back().key; }
  std::size_t last_index() const noexcept { return steps_.size() - 1; }

  Value evaluate(const Poly<F>& f) const { return evaluate_through(steps_.size() - 1, f); }

  /// The prefix chain through step i.
  ValuationChain truncate(std::size_t i) const {
    if (i >= steps_.size()) throw DomainError("truncation index " + std::to_string(i) + " out of range");
    ValuationChain c(field_);
    c.steps_.assign(steps_.begin(), steps_.begin() + static_cast<std::ptrdiff_t>(i) + 1);
    return c;
  }

  /// Appends (Q, gamma) after checking the structural invariants. Does not
  /// check that Q is a key polynomial for this chain.
  ValuationChain augment_unchecked(Poly<F> Q, Value gamma) const {
    if (!(Q.field() == field_)) throw ChainError("field-mismatch", "key polynomial over a different field");
    if (Q.is_zero() || !Q.is_monic()) throw ChainError("key-monic", "key polynomial " + Q.str() + " is not monic");
    if (Q.deg() < 1) throw ChainError("key-degree", "key polynomial must have degree at least 1");
    if (Q.deg() < last_key().deg()) {
      throw ChainError("degree-nondecreasing", "deg " + Q.str() + " < deg " + last_key().str());
    }
    if (gamma.is_infinite()) throw ChainError("gamma-finite", "augmentation with gamma = inf is not a valuation");
    Value current = evaluate(Q);
    if (!(gamma > current)) {
      throw ChainError("gamma-strict", "gamma not greater than current value of Q: gamma = " + gamma.str() +
                                           ", value of " + Q.str() + " = " + current.str());
    }
    ValuationChain c = *this;
    c.steps_.push_back({std::move(Q), std::move(gamma)});
    return c;
  }

  friend bool operator==(const ValuationChain& a, const ValuationChain& b) {
    if (!(a.field_ == b.field_) || a.steps_.size() != b.steps_.size()) return false;
    for (std::size_t i = 0; i < a.steps_.size(); ++i) {
      if (!(a.steps_[i].key == b.steps_[i].key) || !(a.steps_[i].gamma == b.steps_[i].gamma)) return false;
    }
    return true;
  }

  /// "[x -> 1/2, x^2+2 -> 2]".
  std::string str() const {
    std::string out = "[";
    for (std::size_t i = 0; i < steps_.size(); ++i) {
      if (i) out += ", ";
      out += steps_[i].key.str() + " -> " + steps_[i].gamma.str();
    }
    return out + "]";
  }

 private:
  explicit ValuationChain(F field) : field_(std::move(field)) {}

  Value evaluate_through(std::size_t level, const Poly<F>& f) const {
    if (f.is_zero()) return Value::infinity();
    if (level == 0) {
      const Value& g0 = steps_[0].gamma;
      Value best = Value::infinity();
      auto c = f.coefficients();
      for (std::size_t j = 0; j < c.size(); ++j) {
        if (field_.is_zero(c[j])) continue;
        best = min(best, field_.nu(c[j]) + g0.times(j));
      }
      return best;
    }
    const AugmentationStep<F>& s = steps_[level];
    if (f.deg() < s.key.deg()) return evaluate_through(level - 1, f);
    QExpansion<F> e = q_expansion(f, s.key);
    Value best = Value::infinity();
    for (std::size_t j = 0; j < e.coefficients.size(); ++j) {
      if (e.coefficients[j].is_zero()) continue;
      best = min(best, evaluate_through(level - 1, e.coefficients[j]) + s.gamma.times(j));
    }
    return best;
  }

  F field_;
  std::vector<AugmentationStep<F>> steps_;
};

template <ValuedField F>
Value evaluate(const ValuationChain<F>& chain, const Poly<F>& f) {
  return chain.evaluate(f);
}

/// Q-expansion of f together with the values of its terms under a valuation
/// mu (the chain): term_values[j] = mu(g_j Q^j) (inf for g_j = 0),
/// truncated_value = min_j term_values[j], support = S_Q(f),
/// delta = max S_Q(f), initial = In_Q f.
template <ValuedField F>
struct QExpansionView {
  QExpansion<F> expansion;
  std::vector<Value> term_values;
  Value truncated_value;
  std::vector<std::size_t> support;
  std::size_t delta = 0;
  Poly<F> initial;

  bool support_contains(std::size_t j) const {
    return std::find(support.begin(), support.end(), j) != support.end();
  }
};

template <ValuedField F>
QExpansionView<F> expansion_view(const ValuationChain<F>& chain, const Poly<F>& Q, const Poly<F>& f) {
  if (f.is_zero()) throw DomainError("S_Q is undefined for the zero polynomial");
  QExpansion<F> e = q_expansion(f, Q);
  const Value q_value = chain.evaluate(Q);
  std::vector<Value> values;
  values.reserve(e.coefficients.size());
  Value best = Value::infinity();
  for (std::size_t j = 0; j < e.coefficients.size(); ++j) {
    const Poly<F>& g = e.coefficients[j];
    Value v = g.is_zero() ? Value::infinity() : chain.evaluate(g) + q_value.times(j);
    best = min(best, v);
    values.push_back(std::move(v));
  }
  std::vector<std::size_t> support;
  Poly<F> initial(f.field());
  for (std::size_t j = 0; j < values.size(); ++j) {
    if (values[j] == best) {
      support.push_back(j);
      initial += e.coefficients[j] * Q.pow(j);
    }
  }
  std::size_t delta = support.back();
  return {std::move(e), std::move(values), std::move(best), std::move(support), delta, std::move(initial)};
}

/// The truncation of the valuation `chain` with respect to a monic Q:
/// min over the Q-expansion of chain(g_j Q^j). inf for f = 0.
template <ValuedField F>
Value truncated_value(const ValuationChain<F>& chain, const Poly<F>& Q, const Poly<F>& f) {
  if (f.is_zero()) return Value::infinity();
  return expansion_view(chain, Q, f).truncated_value;
}

/// Whether in(Q) divides in(f) in the graded ring of `chain`, Q its last key.
/// That ring is G_{<deg Q}[in Q] with in Q transcendental, so in Q divides
/// exactly the elements whose Q-expansion has no minimal-value constant term.
template <ValuedField F>
bool divides_last_key(const ValuationChain<F>& chain, const Poly<F>& f) {
  if (f.is_zero()) throw DomainError("divisibility test on the zero polynomial");
  return !expansion_view(chain, chain.last_key(), f).support_contains(0);
}

/// Whether key_{i+1} divides f in the graded ring of the truncation at step i.
/// The kernel of gr(mu_Q) -> gr(mu) is generated by in(key_{i+1}), so this is
/// mu_Q(f) < mu(f).
template <ValuedField F>
bool divides_successor(const ValuationChain<F>& full, std::size_t i, const Poly<F>& f) {
  if (i + 1 >= full.length()) throw DomainError("step " + std::to_string(i) + " has no successor in the chain");
  if (f.is_zero()) throw DomainError("divisibility test on the zero polynomial");
  return full.truncate(i).evaluate(f) < full.evaluate(f);
}

}  // namespace akp
