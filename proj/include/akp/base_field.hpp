#pragma once

#include <gmpxx.h>

#include <concepts>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "akp/error.hpp"
#include "akp/fp_poly.hpp"
#include "akp/value.hpp"

namespace akp {

inline bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

/// The rational numbers with the p-adic valuation v_p.
class PadicRationals {
 public:
  using element = mpq_class;

  explicit PadicRationals(std::uint32_t p) : p_(p) {
    if (!is_prime(p)) throw DomainError("p = " + std::to_string(p) + " is not prime");
  }

  std::uint32_t prime() const noexcept { return p_; }
  /// Characteristic of the field (0); the residue characteristic is prime().
  std::uint32_t characteristic() const noexcept { return 0; }
  std::uint32_t residue_characteristic() const noexcept { return p_; }
  /// Name of the transcendental generator of K over its prime field, if any.
  char variable() const noexcept { return '\0'; }

  element zero() const { return element(0); }
  element one() const { return element(1); }
  element from_integer(const mpz_class& n) const { return element(n); }
  element canonical(element a) const {
    a.canonicalize();
    return a;
  }
  element generator() const { throw DomainError("Q has no field variable"); }

  bool is_zero(const element& a) const { return sgn(a) == 0; }

  element inverse(const element& a) const {
    if (is_zero(a)) throw DomainError("inverse of zero");
    element r = 1 / a;
    r.canonicalize();
    return r;
  }

  Value nu(const element& a) const {
    if (is_zero(a)) return Value::infinity();
    return Value(static_cast<long>(adic_order(a.get_num())) - static_cast<long>(adic_order(a.get_den())));
  }

  std::string render(const element& a) const { return a.get_str(); }

  /// Descriptor used in reports, e.g. "Q_2".
  std::string describe() const { return "Q with v_" + std::to_string(p_); }

  element uniformizer() const { return element(static_cast<long>(p_)); }

  /// {0, 1, -1, p, -p, 1/p, -1/p, p^2, -p^2}.
  std::vector<element> default_coefficients() const {
    const long p = p_;
    return {element(0),       element(1),        element(-1),     element(p),     element(-p),
            element(1, p_),   element(-1L, p_),  element(p * p),  element(-p * p)};
  }

  friend bool operator==(const PadicRationals& a, const PadicRationals& b) { return a.p_ == b.p_; }

 private:
  std::size_t adic_order(mpz_class n) const {
    mpz_class prime(static_cast<unsigned long>(p_));
    n = abs(n);
    return mpz_remove(n.get_mpz_t(), n.get_mpz_t(), prime.get_mpz_t());
  }

  std::uint32_t p_;
};

/// Element of F_p(t): a reduced ratio numerator/denominator with monic
/// denominator. Zero is 0/1.
class RationalFunction {
 public:
  RationalFunction() = default;
  RationalFunction(FpPolynomial num, FpPolynomial den) : num_(std::move(num)), den_(std::move(den)) {
    normalize();
  }

  const FpPolynomial& numerator() const noexcept { return num_; }
  const FpPolynomial& denominator() const noexcept { return den_; }
  std::uint32_t modulus() const noexcept { return den_.modulus(); }
  bool is_zero() const noexcept { return num_.is_zero(); }

  friend bool operator==(const RationalFunction& a, const RationalFunction& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }

  friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
    if (a.den_ == b.den_) return {a.num_ + b.num_, a.den_};
    return {a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_};
  }
  friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) {
    if (a.den_ == b.den_) return {a.num_ - b.num_, a.den_};
    return {a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_};
  }
  RationalFunction operator-() const {
    RationalFunction r = *this;
    r.num_ = -r.num_;
    return r;
  }
  friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
    if (a.is_zero() || b.is_zero()) return {FpPolynomial(a.modulus()), FpPolynomial::constant(a.modulus(), 1)};
    return {a.num_ * b.num_, a.den_ * b.den_};
  }
  friend RationalFunction operator/(const RationalFunction& a, const RationalFunction& b) {
    if (b.is_zero()) throw DomainError("division by zero in F_p(t)");
    return {a.num_ * b.den_, a.den_ * b.num_};
  }
  RationalFunction& operator+=(const RationalFunction& o) { return *this = *this + o; }
  RationalFunction& operator-=(const RationalFunction& o) { return *this = *this - o; }
  RationalFunction& operator*=(const RationalFunction& o) { return *this = *this * o; }

 private:
  void normalize() {
    if (den_.is_zero()) throw DomainError("zero denominator in F_p(t)");
    const std::uint32_t p = den_.modulus();
    if (num_.is_zero()) {
      num_ = FpPolynomial(p);
      den_ = FpPolynomial::constant(p, 1);
      return;
    }
    if (!den_.is_one()) {
      FpPolynomial g = FpPolynomial::gcd(num_, den_);
      if (!g.is_one()) {
        num_ = FpPolynomial::divmod(num_, g).first;
        den_ = FpPolynomial::divmod(den_, g).first;
      }
    }
    std::uint32_t lead = den_.lead();
    if (lead != 1) {
      std::uint32_t inv = FpPolynomial::inverse_mod(lead, p);
      num_ = num_.scaled(inv);
      den_ = den_.scaled(inv);
    }
  }

  FpPolynomial num_;
  FpPolynomial den_;
};

/// The rational function field F_p(t) with the t-adic valuation v_t.
class RationalFunctions {
 public:
  using element = RationalFunction;

  explicit RationalFunctions(std::uint32_t p, char var = 't') : p_(p), var_(var) {
    if (!is_prime(p)) throw DomainError("p = " + std::to_string(p) + " is not prime");
    if (p >= (1U << 31)) throw DomainError("characteristic must be below 2^31");
    if (var == 'x' || !((var >= 'a' && var <= 'z') || (var >= 'A' && var <= 'Z'))) {
      throw DomainError("field variable must be a single letter other than x");
    }
  }

  std::uint32_t prime() const noexcept { return p_; }
  std::uint32_t characteristic() const noexcept { return p_; }
  std::uint32_t residue_characteristic() const noexcept { return p_; }
  char variable() const noexcept { return var_; }

  element zero() const { return {FpPolynomial(p_), FpPolynomial::constant(p_, 1)}; }
  element one() const { return from_int(1); }
  element from_integer(const mpz_class& n) const {
    mpz_class r = n % static_cast<unsigned long>(p_);
    if (r < 0) r += static_cast<unsigned long>(p_);
    return from_int(static_cast<std::int64_t>(r.get_ui()));
  }
  // Elements are reduced on construction.
  element canonical(element a) const { return a; }
  element generator() const { return {FpPolynomial::monomial(p_, 1), FpPolynomial::constant(p_, 1)}; }

  bool is_zero(const element& a) const { return a.is_zero(); }

  element inverse(const element& a) const {
    if (a.is_zero()) throw DomainError("inverse of zero");
    return {a.denominator(), a.numerator()};
  }

  Value nu(const element& a) const {
    if (a.is_zero()) return Value::infinity();
    return Value(static_cast<long>(a.numerator().order()) - static_cast<long>(a.denominator().order()));
  }

  /// "t^2/(t+1)", "(t^2+1)/t", "3".
  std::string render(const element& a) const {
    std::string num = a.numerator().str(var_);
    if (a.denominator().is_one()) return num;
    auto wrap = [](const FpPolynomial& f, std::string s) {
      bool bare = f.term_count() == 1 && s.find('*') == std::string::npos;
      return bare ? s : "(" + s + ")";
    };
    return wrap(a.numerator(), num) + "/" + wrap(a.denominator(), a.denominator().str(var_));
  }

  std::string describe() const {
    return "F_" + std::to_string(p_) + "(" + std::string(1, var_) + ") with v_" + std::string(1, var_);
  }

  element uniformizer() const { return generator(); }

  /// {0, 1, -1, t, -t, 1/t, -1/t, t^2, -t^2} with duplicates (char 2) removed.
  std::vector<element> default_coefficients() const {
    element t = generator();
    element ti = inverse(t);
    std::vector<element> raw = {zero(), one(), -one(), t, -t, ti, -ti, t * t, -(t * t)};
    std::vector<element> out;
    for (auto& e : raw) {
      bool seen = false;
      for (auto& o : out) seen = seen || o == e;
      if (!seen) out.push_back(e);
    }
    return out;
  }

  friend bool operator==(const RationalFunctions& a, const RationalFunctions& b) {
    return a.p_ == b.p_ && a.var_ == b.var_;
  }

 private:
  element from_int(std::int64_t n) const {
    return {FpPolynomial::constant(p_, n), FpPolynomial::constant(p_, 1)};
  }

  std::uint32_t p_;
  char var_;
};

/// A concrete valued base field (K, nu) usable as coefficient field of K[x].
template <class F>
concept ValuedField = std::equality_comparable<F> && requires(const F& f, const typename F::element& a,
                                                              const mpz_class& n) {
  typename F::element;
  { f.zero() } -> std::same_as<typename F::element>;
  { f.one() } -> std::same_as<typename F::element>;
  { f.from_integer(n) } -> std::same_as<typename F::element>;
  { f.inverse(a) } -> std::same_as<typename F::element>;
  { f.canonical(a) } -> std::same_as<typename F::element>;
  { f.is_zero(a) } -> std::same_as<bool>;
  { f.nu(a) } -> std::same_as<Value>;
  { f.characteristic() } -> std::convertible_to<std::uint32_t>;
  { f.residue_characteristic() } -> std::convertible_to<std::uint32_t>;
  { f.uniformizer() } -> std::same_as<typename F::element>;
  { f.render(a) } -> std::convertible_to<std::string>;
  { a + a } -> std::convertible_to<typename F::element>;
  { a - a } -> std::convertible_to<typename F::element>;
  { a * a } -> std::convertible_to<typename F::element>;
  { -a } -> std::convertible_to<typename F::element>;
  { a == a } -> std::convertible_to<bool>;
};

static_assert(ValuedField<PadicRationals>);
static_assert(ValuedField<RationalFunctions>);

}  // namespace akp
