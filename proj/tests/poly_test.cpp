#include <gtest/gtest.h>

#include <random>

#include "support.hpp"

namespace akp {
namespace {

using test::pq;
using test::pt;
using test::QP;
using test::FT;
using test::PolyQ;
using test::PolyT;

TEST(EuclidDiv, Examples) {
  auto [q, r] = euclid_div(pq("x^4+4"), pq("x^2+2"));
  EXPECT_EQ(q, pq("x^2-2"));
  EXPECT_EQ(r, pq("8"));

  auto [q1, r1] = euclid_div(pq("x"), pq("x"));
  EXPECT_EQ(q1, pq("1"));
  EXPECT_TRUE(r1.is_zero());

  auto [q2, r2] = euclid_div(pq("5"), pq("x^2"));
  EXPECT_TRUE(q2.is_zero());
  EXPECT_EQ(r2, pq("5"));
}

TEST(EuclidDiv, Preconditions) {
  EXPECT_THROW(euclid_div(pq("x^2"), pq("2*x")), DomainError);
  EXPECT_THROW(euclid_div(pq("x^2"), pq("1")), DomainError);
  auto [q, r] = divide(pq("x^2+1"), pq("2*x"));
  EXPECT_EQ(q, pq("1/2*x"));
  EXPECT_EQ(r, pq("1"));
  EXPECT_THROW(divide(pq("x"), PolyQ(QP(2))), DomainError);
}

TEST(EuclidDiv, Uniqueness) {
  // Any other (q', r') with f = q'g + r' has deg r' >= deg g.
  RandomPolys<QP> gen(default_budget(QP(2)), 5);
  for (int n = 0; n < 200; ++n) {
    PolyQ f = gen.between(0, 7);
    PolyQ g = gen.of_degree(1 + gen.index(3));
    g = g.scaled(QP(2).inverse(g.leading()));
    auto [q, r] = euclid_div(f, g);
    EXPECT_TRUE(r.is_zero() || r.deg() < g.deg());
    EXPECT_EQ(q * g + r, f);
    PolyQ shift = gen.between(0, 2);
    PolyQ r2 = r - shift * g;
    EXPECT_TRUE(r2.is_zero() == false && r2.deg() >= g.deg());
  }
}

TEST(QExpansion, Examples) {
  QExpansion<QP> e = q_expansion(pq("x^4+4"), pq("x^2+2"));
  ASSERT_EQ(e.coefficients.size(), 3u);
  EXPECT_EQ(e.coefficients[0], pq("8"));
  EXPECT_EQ(e.coefficients[1], pq("-4"));
  EXPECT_EQ(e.coefficients[2], pq("1"));

  QExpansion<QP> small = q_expansion(pq("3*x+1"), pq("x^2+2"));
  ASSERT_EQ(small.coefficients.size(), 1u);
  EXPECT_EQ(small.coefficients[0], pq("3*x+1"));

  QExpansion<QP> self = q_expansion(pq("x^2+2"), pq("x^2+2"));
  ASSERT_EQ(self.coefficients.size(), 2u);
  EXPECT_TRUE(self.coefficients[0].is_zero());
  EXPECT_EQ(self.coefficients[1], pq("1"));
}

TEST(QExpansion, TopIndexIsDegreeQuotient) {
  QExpansion<QP> e = q_expansion(pq("x^7+x"), pq("x^3+x+1"));
  EXPECT_EQ(e.top_index(), 2u);
}

TEST(QExpansion, RandomReconstruction) {
  for (std::uint64_t seed : {1u, 2u}) {
    RandomPolys<QP> gq(default_budget(QP(3)), seed);
    RandomPolys<FT> gt(default_budget(FT(2)), seed);
    for (int n = 0; n < 500; ++n) {
      PolyQ Q = gq.of_degree(1 + gq.index(3));
      Q = Q.scaled(QP(3).inverse(Q.leading()));
      PolyQ f = gq.between(0, 10);
      QExpansion<QP> e = q_expansion(f, Q);
      EXPECT_EQ(e.reconstruct(), f);
      for (const auto& c : e.coefficients) EXPECT_TRUE(c.is_zero() || c.deg() < Q.deg());

      PolyT R = gt.of_degree(1 + gt.index(3));
      R = R.scaled(FT(2).inverse(R.leading()));
      PolyT g = gt.between(0, 10);
      EXPECT_EQ(q_expansion(g, R).reconstruct(), g);
    }
  }
}

TEST(Hasse, Examples) {
  EXPECT_EQ(hasse_derivative(pq("x^2+2"), 1), pq("2*x"));
  EXPECT_EQ(hasse_derivative(pq("x^2+2"), 2), pq("1"));
  EXPECT_TRUE(hasse_derivative(pq("x^2+2"), 3).is_zero());
  EXPECT_EQ(hasse_derivative(pt("x^2+t"), 2), pt("1"));
  EXPECT_TRUE(hasse_derivative(pt("x^2+t"), 1).is_zero());
  EXPECT_EQ(hasse_derivative(pt("x^4+t^2"), 4), pt("1"));
  EXPECT_TRUE(hasse_derivative(pt("x^4+t^2"), 2).is_zero());
  EXPECT_EQ(hasse_derivative(pq("x^5"), 2), pq("10*x^3"));
  EXPECT_THROW(hasse_derivative(pq("x"), 0), DomainError);
}

TEST(Hasse, BinomialsReducedInCharacteristic) {
  auto col = binomial_column(FT(3), 3, 9);
  // C(n,3) mod 3 for n = 0..9: 0 0 0 1 1 1 2 2 2 0... C(9,3) = 84 = 0 mod 3
  const int expect[] = {0, 0, 0, 1, 4 % 3, 10 % 3, 20 % 3, 35 % 3, 56 % 3, 84 % 3};
  ASSERT_EQ(col.size(), 7u);  // n = 3..9
  for (int n = 3; n <= 9; ++n) EXPECT_TRUE(col[n - 3] == FT(3).from_integer(expect[n])) << n;
}

template <class F>
void check_leibniz(const F& k, std::uint64_t seed) {
  RandomPolys<F> gen(default_budget(k), seed);
  for (int n = 0; n < 250; ++n) {
    Poly<F> f = gen.between(0, 6);
    Poly<F> g = gen.between(0, 6);
    const std::size_t b = 1 + gen.index(8);
    Poly<F> rhs(k);
    for (std::size_t s = 0; s <= b; ++s) {
      Poly<F> df = s == 0 ? f : hasse_derivative(f, s);
      Poly<F> dg = b - s == 0 ? g : hasse_derivative(g, b - s);
      rhs += df * dg;
    }
    EXPECT_EQ(hasse_derivative(f * g, b), rhs) << f << " " << g << " b=" << b;
  }
}

TEST(Hasse, Leibniz) {
  check_leibniz(QP(2), 3);
  check_leibniz(FT(2), 4);
  check_leibniz(FT(3), 5);
}

TEST(Poly, Rendering) {
  EXPECT_EQ(pq("x + x").str(), "2*x");
  EXPECT_TRUE(pt("x + x").is_zero());
  EXPECT_EQ(pt("x + x").str(), "0");
  EXPECT_EQ(pq("-1/2*x + 3").str(), "-1/2*x+3");
  EXPECT_EQ(pq("x^4 + 4").str(), "x^4+4");
  EXPECT_EQ(pt("(t+1)*x^2 + 1/t").str(), "(t+1)*x^2+1/t");
  EXPECT_EQ(pq("x^2 + 2").deg(), 2u);
  EXPECT_EQ(pt("x^2 + t").coeff(0), FT(2).generator());
  EXPECT_FALSE(PolyQ(QP(2)).degree().has_value());
  EXPECT_THROW((void)PolyQ(QP(2)).deg(), DomainError);
}

TEST(Poly, RenderParseRoundTrip) {
  RandomPolys<QP> gq(default_budget(QP(5)), 9);
  RandomPolys<FT> gt(default_budget(FT(3)), 9);
  for (int n = 0; n < 300; ++n) {
    PolyQ f = gq.between(0, 8);
    EXPECT_EQ(parse_poly(QP(5), f.str()), f) << f;
    PolyT g = gt.between(0, 8);
    EXPECT_EQ(parse_poly(FT(3), g.str()), g) << g;
  }
}

TEST(Poly, FieldMismatch) {
  EXPECT_THROW((void)(pq("x", 2) + pq("x", 3)), DomainError);
}

}  // namespace
}  // namespace akp
