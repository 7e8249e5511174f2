#include <gtest/gtest.h>

#include "support.hpp"

namespace akp {
namespace {

using namespace akp::test;

CoefficientSet<QP> zero_one(std::size_t deg = 4) { return CoefficientSet<QP>(QP(2), {mpq_class(0), mpq_class(1)}, deg); }

TEST(CoefficientSet, Validation) {
  EXPECT_THROW(CoefficientSet<QP>(QP(2), {}, 2), DomainError);
  EXPECT_THROW(CoefficientSet<QP>(QP(2), {mpq_class(1), mpq_class(2)}, 2), DomainError);
  CoefficientSet<QP> s(QP(2), {mpq_class(0), mpq_class(1), mpq_class(1), mpq_class(2, 4)}, 3);
  EXPECT_EQ(s.size(), 3u);
  EXPECT_EQ(s.str(), "{0, 1, 1/2} deg<=3");
  EXPECT_EQ(default_budget(QP(2)).size(), 9u);
  EXPECT_EQ(family_budget(QP(2)).size(), 7u);
  EXPECT_EQ(family_budget(FT(2)).size(), 4u);
}

TEST(PolyStream, Enumeration) {
  auto lin = enumerate_polys(zero_one(), 1, true);
  ASSERT_EQ(lin.size(), 2u);
  EXPECT_EQ(lin[0], pq("x"));
  EXPECT_EQ(lin[1], pq("x+1"));
  EXPECT_EQ(enumerate_polys(zero_one(), 2, true).size(), 4u);
  auto consts = enumerate_polys(zero_one(), 0, false);
  ASSERT_EQ(consts.size(), 1u);
  EXPECT_EQ(consts[0], pq("1"));
  EXPECT_EQ(enumerate_polys(zero_one(), 0, true).size(), 1u);
  EXPECT_EQ(PolyStream<QP>(default_budget(QP(2)), 2, false).size(), 8u * 81u);
}

TEST(PolyStream, RestartAndIndex) {
  PolyStream<QP> s(default_budget(QP(2)), 2, true);
  std::vector<PolyQ> first;
  while (auto p = s.next()) first.push_back(*p);
  s.restart();
  for (std::size_t i = 0; i < first.size(); ++i) {
    EXPECT_EQ(*s.next(), first[i]);
    EXPECT_EQ(s.at(i), first[i]);
  }
  EXPECT_FALSE(s.next().has_value());
}

TEST(TaylorShift, MatchesHasseDerivatives) {
  RandomPolys<FT> gen(default_budget(FT(3)), 17);
  for (int n = 0; n < 100; ++n) {
    PolyT f = gen.between(1, 7);
    auto shift = taylor_shift(f);
    ASSERT_EQ(shift.size(), f.deg() + 1);
    EXPECT_EQ(shift[0], f);
    for (std::size_t b = 1; b < shift.size(); ++b) EXPECT_EQ(shift[b], hasse_derivative(f, b));
  }
}

TEST(EpsilonBruteforce, Anchors) {
  EpsilonReport e1 = epsilon_bruteforce(mu1(), pq("x^2+2"));
  EXPECT_EQ(e1.epsilon, val(1, 2));
  EXPECT_EQ(e1.maximizers, std::vector<std::size_t>{2});
  EXPECT_EQ(e1.b, 2u);
  EXPECT_EQ(epsilon_bruteforce(mu2(), pq("x^2+2")).epsilon, val(1));
  EpsilonReport e3 = epsilon_bruteforce(nu1(), pt("x^2+t"));
  EXPECT_EQ(e3.epsilon, val(1, 2));
  EXPECT_EQ(e3.b, 2u);
  EXPECT_EQ(epsilon_bruteforce(nu2(), pt("x^2+t")).epsilon, val(3, 4));
  EXPECT_EQ(epsilon_bruteforce(mu1(), pq("x")).epsilon, val(1, 2));
  EXPECT_THROW(epsilon_bruteforce(mu1(), pq("3")), DomainError);
}

TEST(GradedDivides, Examples) {
  auto mu = mu2();
  auto Q = pq("x^2+2");
  auto budget = family_budget(QP(2));
  DivisibilityVerdict<QP> v = graded_divides_bruteforce(mu, Q, Q * pq("x+1"), budget, DivisorRole::LastKey);
  EXPECT_EQ(v.result, Ternary::True);
  ASSERT_TRUE(v.witness.has_value());
  EXPECT_EQ(*v.witness, pq("x+1"));
  EXPECT_EQ(graded_divides_bruteforce(mu, Q, pq("x"), budget, DivisorRole::LastKey).result, Ternary::False);
  // mu_1(x^2) = mu_2(x^2): not in the kernel, so x^2+2 does not mu_1-divide it.
  EXPECT_EQ(graded_divides_bruteforce(mu1(), Q, pq("x^2"), budget, DivisorRole::Successor).result, Ternary::False);
  EXPECT_EQ(graded_divides_bruteforce(mu1(), Q, pq("x^3+2*x"), budget, DivisorRole::Successor).result, Ternary::True);
  EXPECT_EQ(graded_divides_bruteforce(mu, Q, pq("x"), budget).result, Ternary::Unknown);
  EXPECT_THROW(graded_divides_bruteforce(mu, Q, PolyQ(QP(2)), budget), DomainError);
}

TEST(GradedDivides, WitnessOtherThanQuotient) {
  // in(x) divides in(x^2 + 4): x^2 + 4 ~ x * x under the Gauss valuation with x -> 1/2.
  auto v = graded_divides_bruteforce(mu1(), pq("x"), pq("x^2+4"), family_budget(QP(2)), DivisorRole::LastKey);
  EXPECT_EQ(v.result, Ternary::True);
}

TEST(HomogeneousFactorization, Examples) {
  auto budget = default_budget(QP(2));
  auto fac = find_homogeneous_factorization(mu1(), pq("x^2"), budget);
  ASSERT_TRUE(fac.has_value());
  EXPECT_EQ(fac->first * fac->second, pq("x^2"));
  // in(x^2+2) has no square root among homogeneous linear forms: v_2(c) would be 1/2.
  EXPECT_FALSE(find_homogeneous_factorization(mu1(), pq("x^2+2"), budget).has_value());
  auto split = find_homogeneous_factorization(mu1(), pq("x^2+3*x+2"), budget);
  ASSERT_TRUE(split.has_value());
}

}  // namespace
}  // namespace akp
