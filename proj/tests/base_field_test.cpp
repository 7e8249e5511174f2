#include <gtest/gtest.h>

#include <random>
#include <vector>

#include "support.hpp"

namespace akp {
namespace {

using test::FT;
using test::QP;
using test::val;

TEST(Primes, Detection) {
  EXPECT_TRUE(is_prime(2));
  EXPECT_TRUE(is_prime(3));
  EXPECT_TRUE(is_prime(2147483647));
  EXPECT_FALSE(is_prime(0));
  EXPECT_FALSE(is_prime(1));
  EXPECT_FALSE(is_prime(91));
  EXPECT_THROW(QP(4), DomainError);
  EXPECT_THROW(FT(1), DomainError);
  EXPECT_THROW(FT(3, 'x'), DomainError);
}

TEST(PadicRationals, Valuation) {
  QP k(2);
  EXPECT_EQ(k.nu(mpq_class(8, 3)), val(3));
  EXPECT_EQ(k.nu(mpq_class(3, 8)), val(-3));
  EXPECT_EQ(k.nu(mpq_class(5)), val(0));
  EXPECT_TRUE(k.nu(mpq_class(0)).is_infinite());
  EXPECT_EQ(QP(3).nu(mpq_class(-18, 5)), val(2));
}

TEST(PadicRationals, Parse) {
  QP k(2);
  EXPECT_EQ(parse_field_elem(k, "-3/4"), mpq_class(-3, 4));
  EXPECT_EQ(parse_field_elem(k, "6/8"), mpq_class(3, 4));
  EXPECT_EQ(parse_field_elem(k, "(1/2)^3"), mpq_class(1, 8));
  EXPECT_THROW(parse_field_elem(k, "1/0"), ParseError);
  EXPECT_THROW(parse_field_elem(k, "x"), ParseError);
  EXPECT_THROW(parse_field_elem(k, "t"), ParseError);
}

TEST(RationalFunctions, Valuation) {
  FT k(2);
  EXPECT_EQ(k.nu(parse_field_elem(k, "t^2/(t+1)")), val(2));
  EXPECT_EQ(k.nu(parse_field_elem(k, "(t^2+1)/t")), val(-1));
  EXPECT_EQ(k.nu(parse_field_elem(k, "t+1")), val(0));
  EXPECT_TRUE(k.nu(k.zero()).is_infinite());
}

TEST(RationalFunctions, ReducedForm) {
  FT k(2);
  auto a = parse_field_elem(k, "(t^2+1)/t");
  EXPECT_EQ(k.render(a), "(t^2+1)/t");
  // (t^2+1)/(t+1) = t+1 in characteristic 2.
  EXPECT_EQ(k.render(parse_field_elem(k, "(t^2+1)/(t+1)")), "t+1");
  EXPECT_EQ(k.render(parse_field_elem(k, "t^2/(t+1)")), "t^2/(t+1)");
  EXPECT_EQ(k.render(parse_field_elem(k, "2*t")), "0");
  FT k3(3);
  auto b = parse_field_elem(k3, "t/(2*t+2)");
  EXPECT_TRUE(b.denominator().is_one() || b.denominator().lead() == 1);
  EXPECT_EQ(k3.render(b), "(2*t)/(t+1)");
  EXPECT_THROW(parse_field_elem(k, "1/(t-t)"), ParseError);
}

TEST(RationalFunctions, Variable) {
  FT k(5, 's');
  EXPECT_EQ(k.render(parse_field_elem(k, "s^2-1")), "s^2+4");
  EXPECT_THROW(parse_field_elem(k, "t"), ParseError);
  EXPECT_EQ(k.describe(), "F_5(s) with v_s");
}

TEST(RationalFunctions, DefaultCoefficientsDeduplicated) {
  EXPECT_EQ(FT(2).default_coefficients().size(), 5u);
  EXPECT_EQ(FT(3).default_coefficients().size(), 9u);
  EXPECT_EQ(QP(2).default_coefficients().size(), 9u);
}

template <class F>
std::vector<typename F::element> sample(const F& k, std::size_t n, std::uint64_t seed);

template <>
std::vector<mpq_class> sample(const QP&, std::size_t n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<mpq_class> out;
  const long nums[] = {0, 1, -1, 2, -3, 4, 6, -8, 12, 5, 7};
  const long dens[] = {1, 2, 3, 4, 5, 8, 9, 12};
  for (std::size_t i = 0; i < n; ++i) out.emplace_back(nums[rng() % 11], dens[rng() % 8]);
  for (auto& q : out) q.canonicalize();
  return out;
}

template <>
std::vector<RationalFunction> sample(const FT& k, std::size_t n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  auto poly = [&](bool nonzero) {
    for (;;) {
      std::vector<std::uint32_t> c(1 + rng() % 4);
      for (auto& x : c) x = static_cast<std::uint32_t>(rng() % k.prime());
      FpPolynomial f(k.prime(), c);
      if (!nonzero || !f.is_zero()) return f;
    }
  };
  std::vector<RationalFunction> out;
  for (std::size_t i = 0; i < n; ++i) out.emplace_back(poly(false), poly(true));
  return out;
}

template <class F>
void check_valuation_axioms(const F& k) {
  auto a = sample(k, 1000, 11);
  auto b = sample(k, 1000, 12);
  for (std::size_t i = 0; i < a.size(); ++i) {
    const Value na = k.nu(a[i]), nb = k.nu(b[i]);
    EXPECT_EQ(k.nu(a[i] * b[i]), na + nb);
    const Value ns = k.nu(a[i] + b[i]);
    EXPECT_GE(ns, min(na, nb));
    if (na != nb) {
      EXPECT_EQ(ns, min(na, nb));
    }
  }
}

template <class F>
void check_field_axioms(const F& k) {
  auto a = sample(k, 300, 21);
  auto b = sample(k, 300, 22);
  auto c = sample(k, 300, 23);
  for (std::size_t i = 0; i < a.size(); ++i) {
    EXPECT_TRUE((a[i] + b[i]) + c[i] == a[i] + (b[i] + c[i]));
    EXPECT_TRUE((a[i] * b[i]) * c[i] == a[i] * (b[i] * c[i]));
    EXPECT_TRUE(a[i] * (b[i] + c[i]) == a[i] * b[i] + a[i] * c[i]);
    EXPECT_TRUE(a[i] - a[i] == k.zero());
    if (!k.is_zero(a[i])) {
      EXPECT_TRUE(a[i] * k.inverse(a[i]) == k.one());
    }
  }
}

TEST(PadicRationals, RandomAxioms) {
  check_valuation_axioms(QP(2));
  check_valuation_axioms(QP(3));
  check_field_axioms(QP(2));
}

TEST(RationalFunctions, RandomAxioms) {
  check_valuation_axioms(FT(2));
  check_valuation_axioms(FT(5));
  check_field_axioms(FT(2));
  check_field_axioms(FT(7));
}

TEST(FpPolynomial, Arithmetic) {
  FpPolynomial f(3, {1, 0, 1});  // t^2 + 1
  FpPolynomial g(3, {1, 1});     // t + 1
  auto [q, r] = FpPolynomial::divmod(f, g);
  EXPECT_TRUE(q * g + r == f);
  EXPECT_EQ(r.degree(), 0u);
  EXPECT_EQ(f.str('t'), "t^2+1");
  EXPECT_TRUE(FpPolynomial::gcd(f * g, g * g).monic() == g);
  EXPECT_EQ(FpPolynomial(2, {0, 0, 1}).order(), 2u);
  EXPECT_THROW((void)FpPolynomial(2).order(), DomainError);
}

}  // namespace
}  // namespace akp
