#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>

#include "akp/error.hpp"

namespace akp {

/// An element of Q ∪ {+inf}, the codomain of every valuation in the library.
///
/// Rational values are kept canonical (reduced, positive denominator). The
/// infinite value is reserved for the zero element; arithmetic that would
/// need a finite operand (subtraction, division) rejects it.
class Value {
 public:
  Value() = default;
  Value(long n) : q_(n) {}  // NOLINT(google-explicit-constructor)
  explicit Value(mpq_class q) : q_(std::move(q)) { q_.canonicalize(); }

  static Value infinity() {
    Value v;
    v.infinite_ = true;
    return v;
  }

  bool is_infinite() const noexcept { return infinite_; }
  bool is_finite() const noexcept { return !infinite_; }

  const mpq_class& rational() const {
    if (infinite_) throw DomainError("rational() of the infinite value");
    return q_;
  }

  friend Value operator+(const Value& a, const Value& b) {
    if (a.infinite_ || b.infinite_) return infinity();
    return Value(mpq_class(a.q_ + b.q_));
  }

  friend Value operator-(const Value& a, const Value& b) {
    if (a.infinite_ || b.infinite_) throw DomainError("subtraction involving the infinite value");
    return Value(mpq_class(a.q_ - b.q_));
  }

  Value operator-() const {
    if (infinite_) throw DomainError("negation of the infinite value");
    return Value(mpq_class(-q_));
  }

  /// Division by a positive integer.
  Value operator/(std::int64_t n) const {
    if (n <= 0) throw DomainError("value divided by a non-positive integer");
    if (infinite_) throw DomainError("division of the infinite value");
    return Value(mpq_class(q_ / mpq_class(static_cast<long>(n))));
  }

  /// Multiplication by a non-negative integer; 0 * inf is rejected.
  Value times(std::uint64_t n) const {
    if (infinite_) {
      if (n == 0) throw DomainError("0 * inf");
      return infinity();
    }
    return Value(mpq_class(q_ * mpz_class(static_cast<unsigned long>(n))));
  }

  friend bool operator==(const Value& a, const Value& b) {
    if (a.infinite_ || b.infinite_) return a.infinite_ == b.infinite_;
    return a.q_ == b.q_;
  }

  friend std::strong_ordering operator<=>(const Value& a, const Value& b) {
    if (a.infinite_ || b.infinite_) {
      if (a.infinite_ && b.infinite_) return std::strong_ordering::equal;
      return a.infinite_ ? std::strong_ordering::greater : std::strong_ordering::less;
    }
    int c = cmp(a.q_, b.q_);
    if (c < 0) return std::strong_ordering::less;
    if (c > 0) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }

  /// "3", "-1/2" or "inf".
  std::string str() const { return infinite_ ? std::string("inf") : q_.get_str(); }

  /// Parses "a", "a/b" or "inf" (surrounding blanks allowed).
  static Value parse(std::string_view text);

 private:
  mpq_class q_{0};
  bool infinite_ = false;
};

inline std::ostream& operator<<(std::ostream& os, const Value& v) { return os << v.str(); }

inline Value min(const Value& a, const Value& b) { return b < a ? b : a; }
inline Value max(const Value& a, const Value& b) { return a < b ? b : a; }

inline Value Value::parse(std::string_view text) {
  std::size_t begin = 0;
  std::size_t end = text.size();
  while (begin < end && (text[begin] == ' ' || text[begin] == '\t')) ++begin;
  while (end > begin && (text[end - 1] == ' ' || text[end - 1] == '\t')) --end;
  std::string_view body = text.substr(begin, end - begin);
  if (body.empty()) throw ParseError("empty value", begin + 1);
  if (body == "inf" || body == "+inf") return infinity();

  auto parse_int = [&](std::string_view digits, std::size_t offset, bool allow_sign) {
    std::size_t i = 0;
    if (allow_sign && i < digits.size() && (digits[i] == '-' || digits[i] == '+')) ++i;
    if (i == digits.size()) throw ParseError("expected digits in value", begin + offset + i + 1);
    for (std::size_t k = i; k < digits.size(); ++k) {
      if (digits[k] < '0' || digits[k] > '9') {
        throw ParseError("unexpected character in value", begin + offset + k + 1);
      }
    }
    std::string s(digits);
    if (!s.empty() && s[0] == '+') s.erase(0, 1);
    return mpz_class(s);
  };

  std::size_t slash = body.find('/');
  if (slash == std::string_view::npos) return Value(mpq_class(parse_int(body, 0, true)));
  mpz_class num = parse_int(body.substr(0, slash), 0, true);
  mpz_class den = parse_int(body.substr(slash + 1), slash + 1, false);
  if (den == 0) throw ParseError("zero denominator in value", begin + slash + 2);
  return Value(mpq_class(num, den));
}

}  // namespace akp
