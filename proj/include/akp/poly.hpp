#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <cstdint>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "akp/base_field.hpp"
#include "akp/error.hpp"

namespace akp {

/// Univariate polynomial over a valued base field, in the variable x.
///
/// Dense, low degree first, always trimmed: the leading coefficient is nonzero
/// unless the polynomial is zero. The zero polynomial has no degree; degree()
/// returns std::nullopt for it (which std::optional orders below every
/// integer, like -inf).
template <ValuedField F>
class Poly {
 public:
  using field_type = F;
  using element = typename F::element;

  explicit Poly(F field) : field_(std::move(field)) {}
  Poly(F field, std::vector<element> coeffs) : field_(std::move(field)), c_(std::move(coeffs)) { trim(); }

  static Poly constant(const F& field, element c) { return Poly(field, {std::move(c)}); }
  static Poly monomial(const F& field, element c, std::size_t k) {
    std::vector<element> v(k + 1, field.zero());
    v[k] = std::move(c);
    return Poly(field, std::move(v));
  }
  static Poly x(const F& field) { return monomial(field, field.one(), 1); }

  const F& field() const noexcept { return field_; }
  bool is_zero() const noexcept { return c_.empty(); }
  std::optional<std::size_t> degree() const noexcept {
    if (c_.empty()) return std::nullopt;
    return c_.size() - 1;
  }
  /// Degree of a nonzero polynomial.
  std::size_t deg() const {
    if (c_.empty()) throw DomainError("degree of the zero polynomial");
    return c_.size() - 1;
  }
  bool is_constant() const noexcept { return c_.size() <= 1; }
  bool is_monic() const { return !c_.empty() && c_.back() == field_.one(); }

  std::span<const element> coefficients() const noexcept { return c_; }
  element coeff(std::size_t k) const { return k < c_.size() ? c_[k] : field_.zero(); }
  const element& leading() const {
    if (c_.empty()) throw DomainError("leading coefficient of the zero polynomial");
    return c_.back();
  }

  friend bool operator==(const Poly& a, const Poly& b) { return a.field_ == b.field_ && a.c_ == b.c_; }

  friend Poly operator+(const Poly& a, const Poly& b) {
    a.check_same(b);
    const Poly& big = a.c_.size() >= b.c_.size() ? a : b;
    const Poly& small = a.c_.size() >= b.c_.size() ? b : a;
    Poly r = big;
    for (std::size_t k = 0; k < small.c_.size(); ++k) r.c_[k] = r.c_[k] + small.c_[k];
    r.trim();
    return r;
  }

  Poly operator-() const {
    Poly r = *this;
    for (auto& c : r.c_) c = -c;
    return r;
  }

  friend Poly operator-(const Poly& a, const Poly& b) {
    a.check_same(b);
    Poly r = a;
    if (r.c_.size() < b.c_.size()) r.c_.resize(b.c_.size(), a.field_.zero());
    for (std::size_t k = 0; k < b.c_.size(); ++k) r.c_[k] = r.c_[k] - b.c_[k];
    r.trim();
    return r;
  }

  friend Poly operator*(const Poly& a, const Poly& b) {
    a.check_same(b);
    if (a.is_zero() || b.is_zero()) return Poly(a.field_);
    std::vector<element> out(a.c_.size() + b.c_.size() - 1, a.field_.zero());
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      if (a.field_.is_zero(a.c_[i])) continue;
      for (std::size_t j = 0; j < b.c_.size(); ++j) {
        if (b.field_.is_zero(b.c_[j])) continue;
        out[i + j] = out[i + j] + a.c_[i] * b.c_[j];
      }
    }
    return Poly(a.field_, std::move(out));
  }

  Poly scaled(const element& s) const {
    Poly r = *this;
    for (auto& c : r.c_) c = c * s;
    r.trim();
    return r;
  }

  Poly pow(std::size_t n) const {
    Poly result = constant(field_, field_.one());
    Poly base = *this;
    while (n > 0) {
      if (n & 1U) result = result * base;
      n >>= 1U;
      if (n > 0) base = base * base;
    }
    return result;
  }

  Poly& operator+=(const Poly& o) { return *this = *this + o; }
  Poly& operator-=(const Poly& o) { return *this = *this - o; }
  Poly& operator*=(const Poly& o) { return *this = *this * o; }

  /// Canonical text form, parseable by parse_poly: "x^4+4", "-1/2*x+3",
  /// "(t+1)*x^2+1/t".
  std::string str() const {
    if (c_.empty()) return "0";
    std::string out;
    for (std::size_t k = c_.size(); k-- > 0;) {
      if (field_.is_zero(c_[k])) continue;
      std::string mono = k == 0 ? "" : (k == 1 ? "x" : "x^" + std::to_string(k));
      std::string coef = field_.render(c_[k]);
      std::string term;
      if (k == 0) {
        term = coef;
      } else if (c_[k] == field_.one()) {
        term = mono;
      } else if (c_[k] == -field_.one()) {
        term = "-" + mono;
      } else {
        if (coef.find('+') != std::string::npos || coef.find('-', 1) != std::string::npos) coef = "(" + coef + ")";
        term = coef + "*" + mono;
      }
      if (!out.empty() && term[0] != '-') out += '+';
      out += term;
    }
    return out;
  }

  friend std::ostream& operator<<(std::ostream& os, const Poly& p) { return os << p.str(); }

 private:
  void trim() {
    while (!c_.empty() && field_.is_zero(c_.back())) c_.pop_back();
  }
  void check_same(const Poly& o) const {
    if (!(field_ == o.field_)) throw DomainError("polynomials over different base fields");
  }

  F field_;
  std::vector<element> c_;
};

template <ValuedField F>
struct DivisionResult {
  Poly<F> quotient;
  Poly<F> remainder;
};

namespace detail {

template <ValuedField F>
DivisionResult<F> divide_by_leading(const Poly<F>& f, const Poly<F>& g, const typename F::element& lead_inverse) {
  const F& field = f.field();
  const std::size_t dg = g.deg();
  auto gc = g.coefficients();
  std::vector<typename F::element> rem(f.coefficients().begin(), f.coefficients().end());
  if (rem.size() <= dg) return {Poly<F>(field), f};
  std::vector<typename F::element> quo(rem.size() - dg, field.zero());
  for (std::size_t k = rem.size(); k-- > dg;) {
    if (field.is_zero(rem[k])) continue;
    typename F::element factor = rem[k] * lead_inverse;
    quo[k - dg] = factor;
    for (std::size_t i = 0; i <= dg; ++i) rem[k - dg + i] = rem[k - dg + i] - factor * gc[i];
  }
  rem.resize(dg, field.zero());
  return {Poly<F>(field, std::move(quo)), Poly<F>(field, std::move(rem))};
}

}  // namespace detail

/// Euclidean division f = q*g + r with deg r < deg g, for monic g of degree >= 1.
template <ValuedField F>
DivisionResult<F> euclid_div(const Poly<F>& f, const Poly<F>& g) {
  if (g.is_zero() || g.is_constant()) throw DomainError("Euclidean division by a constant polynomial");
  if (!g.is_monic()) throw DomainError("Euclidean division by a non-monic polynomial " + g.str());
  return detail::divide_by_leading(f, g, g.field().one());
}

/// Euclidean division by any nonzero polynomial.
template <ValuedField F>
DivisionResult<F> divide(const Poly<F>& f, const Poly<F>& g) {
  if (g.is_zero()) throw DomainError("division by the zero polynomial");
  return detail::divide_by_leading(f, g, g.field().inverse(g.leading()));
}

/// The Q-adic expansion f = sum_j g_j Q^j with deg g_j < deg Q.
template <ValuedField F>
struct QExpansion {
  Poly<F> divisor;
  std::vector<Poly<F>> coefficients;

  std::size_t top_index() const { return coefficients.size() - 1; }

  Poly<F> reconstruct() const {
    Poly<F> acc(divisor.field());
    for (std::size_t j = coefficients.size(); j-- > 0;) acc = acc * divisor + coefficients[j];
    return acc;
  }
};

/// Repeated Euclidean division by monic Q (deg Q >= 1). The zero polynomial
/// expands to the single coefficient 0.
template <ValuedField F>
QExpansion<F> q_expansion(const Poly<F>& f, const Poly<F>& Q) {
  if (Q.is_zero() || Q.is_constant()) throw DomainError("Q-expansion with respect to a constant polynomial");
  if (!Q.is_monic()) throw DomainError("Q-expansion with respect to a non-monic polynomial " + Q.str());
  QExpansion<F> out{Q, {}};
  Poly<F> rest = f;
  do {
    auto [q, r] = euclid_div(rest, Q);
    out.coefficients.push_back(std::move(r));
    rest = std::move(q);
  } while (!rest.is_zero());
  return out;
}

/// Binomial coefficients C(n, k) for n = k..max_n, reduced into the field's
/// characteristic. Computed with Pascal's rule on integers (mod p in char p).
template <ValuedField F>
std::vector<typename F::element> binomial_column(const F& field, std::size_t k, std::size_t max_n) {
  const std::uint32_t p = field.characteristic();
  std::vector<typename F::element> out;
  out.reserve(max_n >= k ? max_n - k + 1 : 0);
  if (max_n < k) return out;
  // row[j] holds C(n, j) for j <= k.
  std::vector<mpz_class> row(k + 1, 0);
  row[0] = 1;
  for (std::size_t n = 1; n <= max_n; ++n) {
    for (std::size_t j = std::min(n, k); j >= 1; --j) {
      row[j] += row[j - 1];
      if (p != 0) row[j] %= static_cast<unsigned long>(p);
    }
    if (n >= k) out.push_back(field.from_integer(row[k]));
  }
  if (k == 0) out.insert(out.begin(), field.one());
  return out;
}

/// The b-th Hasse (divided) derivative: sum_n C(n, b) c_n x^(n-b). Zero when
/// b > deg f. b = 0 is rejected.
template <ValuedField F>
Poly<F> hasse_derivative(const Poly<F>& f, std::size_t b) {
  if (b == 0) throw DomainError("formal derivative index must be positive");
  const F& field = f.field();
  if (f.is_zero() || f.deg() < b) return Poly<F>(field);
  const std::size_t d = f.deg();
  auto binom = binomial_column(field, b, d);
  std::vector<typename F::element> out(d - b + 1, field.zero());
  auto c = f.coefficients();
  for (std::size_t n = b; n <= d; ++n) {
    if (field.is_zero(c[n])) continue;
    out[n - b] = binom[n - b] * c[n];
  }
  return Poly<F>(field, std::move(out));
}

}  // namespace akp
