#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "akp/error.hpp"

namespace akp {

/// Dense polynomial in the base-field variable t over the prime field F_p.
///
/// Coefficients are stored low degree first and kept trimmed, so the zero
/// polynomial has an empty coefficient vector. p < 2^31 keeps every product
/// of two residues inside 64 bits.
class FpPolynomial {
 public:
  FpPolynomial() = default;
  explicit FpPolynomial(std::uint32_t p) : p_(p) {}
  FpPolynomial(std::uint32_t p, std::vector<std::uint32_t> coeffs) : p_(p), c_(std::move(coeffs)) {
    for (auto& x : c_) x %= p_;
    trim();
  }

  static FpPolynomial constant(std::uint32_t p, std::int64_t n) {
    std::int64_t r = n % static_cast<std::int64_t>(p);
    if (r < 0) r += p;
    return FpPolynomial(p, {static_cast<std::uint32_t>(r)});
  }

  static FpPolynomial monomial(std::uint32_t p, std::size_t k) {
    std::vector<std::uint32_t> c(k + 1, 0);
    c[k] = 1;
    return FpPolynomial(p, std::move(c));
  }

  std::uint32_t modulus() const noexcept { return p_; }
  bool is_zero() const noexcept { return c_.empty(); }
  bool is_one() const noexcept { return c_.size() == 1 && c_[0] == 1; }
  /// Degree; only meaningful for nonzero polynomials.
  std::size_t degree() const noexcept { return c_.empty() ? 0 : c_.size() - 1; }
  const std::vector<std::uint32_t>& coefficients() const noexcept { return c_; }
  std::uint32_t lead() const noexcept { return c_.empty() ? 0 : c_.back(); }
  std::uint32_t coeff(std::size_t k) const noexcept { return k < c_.size() ? c_[k] : 0; }

  /// Index of the lowest nonzero coefficient (the t-adic order).
  std::size_t order() const {
    for (std::size_t k = 0; k < c_.size(); ++k) {
      if (c_[k] != 0) return k;
    }
    throw DomainError("t-adic order of the zero polynomial");
  }

  friend bool operator==(const FpPolynomial& a, const FpPolynomial& b) { return a.c_ == b.c_; }

  friend FpPolynomial operator+(const FpPolynomial& a, const FpPolynomial& b) {
    FpPolynomial r(a.p_ ? a.p_ : b.p_);
    r.c_.assign(std::max(a.c_.size(), b.c_.size()), 0);
    for (std::size_t k = 0; k < r.c_.size(); ++k) {
      std::uint64_t s = static_cast<std::uint64_t>(a.coeff(k)) + b.coeff(k);
      r.c_[k] = static_cast<std::uint32_t>(s % r.p_);
    }
    r.trim();
    return r;
  }

  FpPolynomial operator-() const {
    FpPolynomial r = *this;
    for (auto& x : r.c_) x = x == 0 ? 0 : p_ - x;
    return r;
  }

  friend FpPolynomial operator-(const FpPolynomial& a, const FpPolynomial& b) { return a + (-b); }

  friend FpPolynomial operator*(const FpPolynomial& a, const FpPolynomial& b) {
    FpPolynomial r(a.p_ ? a.p_ : b.p_);
    if (a.is_zero() || b.is_zero()) return r;
    std::vector<std::uint64_t> acc(a.c_.size() + b.c_.size() - 1, 0);
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      if (a.c_[i] == 0) continue;
      for (std::size_t j = 0; j < b.c_.size(); ++j) {
        acc[i + j] = (acc[i + j] + static_cast<std::uint64_t>(a.c_[i]) * b.c_[j]) % r.p_;
      }
    }
    r.c_.assign(acc.begin(), acc.end());
    r.trim();
    return r;
  }

  FpPolynomial scaled(std::uint32_t s) const {
    FpPolynomial r = *this;
    for (auto& x : r.c_) x = static_cast<std::uint32_t>(static_cast<std::uint64_t>(x) * s % p_);
    r.trim();
    return r;
  }

  /// Euclidean division by a nonzero divisor.
  static std::pair<FpPolynomial, FpPolynomial> divmod(const FpPolynomial& a, const FpPolynomial& b) {
    if (b.is_zero()) throw DomainError("division by the zero t-polynomial");
    const std::uint32_t p = b.p_;
    FpPolynomial rem = a;
    FpPolynomial quo(p);
    if (rem.c_.size() < b.c_.size()) return {quo, rem};
    const std::uint32_t inv_lead = inverse_mod(b.lead(), p);
    quo.c_.assign(rem.c_.size() - b.c_.size() + 1, 0);
    while (!rem.is_zero() && rem.c_.size() >= b.c_.size()) {
      std::size_t shift = rem.c_.size() - b.c_.size();
      std::uint32_t factor = static_cast<std::uint32_t>(static_cast<std::uint64_t>(rem.lead()) * inv_lead % p);
      quo.c_[shift] = factor;
      for (std::size_t k = 0; k < b.c_.size(); ++k) {
        std::uint64_t sub = static_cast<std::uint64_t>(factor) * b.c_[k] % p;
        std::uint32_t& slot = rem.c_[shift + k];
        slot = static_cast<std::uint32_t>((slot + p - sub) % p);
      }
      rem.trim();
    }
    quo.trim();
    return {quo, rem};
  }

  static FpPolynomial gcd(FpPolynomial a, FpPolynomial b) {
    while (!b.is_zero()) {
      auto r = divmod(a, b).second;
      a = std::move(b);
      b = std::move(r);
    }
    return a.is_zero() ? a : a.monic();
  }

  FpPolynomial monic() const {
    if (is_zero()) return *this;
    return scaled(inverse_mod(lead(), p_));
  }

  static std::uint32_t inverse_mod(std::uint32_t a, std::uint32_t p) {
    if (a % p == 0) throw DomainError("inverse of zero in F_p");
    // Fermat: a^(p-2)
    std::uint64_t result = 1;
    std::uint64_t base = a % p;
    std::uint64_t e = p - 2;
    while (e > 0) {
      if (e & 1U) result = result * base % p;
      base = base * base % p;
      e >>= 1U;
    }
    return static_cast<std::uint32_t>(result);
  }

  /// "2*t^2+t+1"; the zero polynomial renders as "0".
  std::string str(char var) const {
    if (is_zero()) return "0";
    std::string out;
    for (std::size_t k = c_.size(); k-- > 0;) {
      if (c_[k] == 0) continue;
      if (!out.empty()) out += '+';
      std::string mono;
      if (k == 1) mono = std::string(1, var);
      if (k > 1) mono = std::string(1, var) + "^" + std::to_string(k);
      if (k == 0) {
        out += std::to_string(c_[k]);
      } else if (c_[k] == 1) {
        out += mono;
      } else {
        out += std::to_string(c_[k]) + "*" + mono;
      }
    }
    return out;
  }

  /// Number of nonzero terms.
  std::size_t term_count() const {
    std::size_t n = 0;
    for (auto x : c_) n += x != 0;
    return n;
  }

 private:
  void trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }

  std::uint32_t p_ = 0;
  std::vector<std::uint32_t> c_;
};

}  // namespace akp
