#include <gtest/gtest.h>

#include "support.hpp"

namespace akp {
namespace {

using namespace akp::test;

TEST(Epsilon, Anchors) {
  EpsilonReport e1 = epsilon(mu1(), pq("x^2+2"));
  EXPECT_EQ(e1.epsilon, val(1, 2));
  EXPECT_EQ(e1.maximizers, std::vector<std::size_t>{2});
  EXPECT_EQ(e1.b, 2u);
  EpsilonReport e2 = epsilon(mu2(), pq("x^2+2"));
  EXPECT_EQ(e2.epsilon, val(1));
  EXPECT_EQ(e2.maximizers, std::vector<std::size_t>{2});
  EpsilonReport e3 = epsilon(nu1(), pt("x^2+t"));
  EXPECT_EQ(e3.epsilon, val(1, 2));
  EXPECT_EQ(e3.b, 2u);
  EXPECT_THROW(epsilon(mu1(), pq("1")), DomainError);
}

TEST(Epsilon, TiesKeepEveryMaximizer) {
  // x^2 under (Q, v_3), x -> 1/2: b = 1 gives (1 - 1/2)/1, b = 2 gives (1 - 0)/2.
  auto mu = ValuationChain<QP>::gauss(QP(3), val(1, 2));
  EpsilonReport e = epsilon(mu, pq("x^2", 3));
  EXPECT_EQ(e.epsilon, val(1, 2));
  EXPECT_EQ(e.maximizers, (std::vector<std::size_t>{1, 2}));
  EXPECT_EQ(e.b, 1u);
  EXPECT_EQ(e, epsilon_bruteforce(mu, pq("x^2", 3)));
  // Over (Q, v_2) the factor 2 in d_1 x^2 = 2x breaks the tie.
  EXPECT_EQ(epsilon(mu1(), pq("x^2")).maximizers, std::vector<std::size_t>{2});
}

TEST(CertifyAbstract, Examples) {
  auto budget = default_budget(QP(2));
  KeyCertificate<QP> c = certify_abstract(mu2(), 1, budget);
  EXPECT_EQ(c.verdict, Verdict::Certified);
  EXPECT_EQ(c.method, Method::ByAugmentation);
  KeyCertificate<QP> g = certify_abstract(mu1(), 0, budget);
  EXPECT_EQ(g.verdict, Verdict::Certified);
  EXPECT_NE(g.note.find("vacuous"), std::string::npos);
  EXPECT_EQ(certify_abstract(mu3(), 2, budget).verdict, Verdict::Certified);
  EXPECT_THROW(certify_abstract(mu2(), 2, budget), DomainError);
}

TEST(RefuteAbstract, Examples) {
  auto budget = default_budget(QP(2));
  KeyCertificate<QP> r = refute_abstract(mu1(), pq("x^2+2"), budget);
  EXPECT_EQ(r.verdict, Verdict::Refuted);
  EXPECT_EQ(r.method, Method::BySearch);
  ASSERT_TRUE(r.counterexample.has_value());
  EXPECT_EQ(*r.counterexample, pq("x"));
  EXPECT_EQ(refute_abstract(mu2(), pq("x^2+2"), budget).verdict, Verdict::Inconclusive);
  KeyCertificate<QP> lin = refute_abstract(mu2(), pq("x"), budget);
  EXPECT_EQ(lin.verdict, Verdict::Inconclusive);
  EXPECT_EQ(refute_abstract(nu2(), pt("x^2+t"), default_budget(FT(2))).verdict, Verdict::Inconclusive);
}

TEST(RefuteAbstract, NeverContradictsCertification) {
  for (std::size_t deg : {1u, 2u, 4u}) {
    auto budget = default_budget(QP(2), deg);
    auto mu = mu3();
    for (std::size_t i = 0; i < mu.length(); ++i) {
      ASSERT_EQ(certify_abstract(mu, i, budget).verdict, Verdict::Certified);
      EXPECT_NE(refute_abstract(mu, mu.key(i), budget).verdict, Verdict::Refuted) << i;
    }
  }
}

TEST(WitnessB, Anchors) {
  WitnessReport w = witness_b(nu2(), pt("x^2+t"), pt("x^4+t^2"));
  EXPECT_EQ(w.l, 2u);
  EXPECT_EQ(w.e, 1u);
  EXPECT_EQ(w.b, 4u);
  EXPECT_EQ(w.ratio, val(3, 4));
  WitnessReport q = witness_b(mu2(), pq("x^2+2"), pq("x^2+2"));
  EXPECT_EQ(q.l, 1u);
  EXPECT_EQ(q.b, 2u);
  EXPECT_EQ(q.ratio, val(1));
  EXPECT_THROW(witness_b(mu2(), pq("x^2+2"), pq("x+1")), DomainError);
}

TEST(WitnessB, EvenIndexOverTwoAdicRationals) {
  // (x^2+2)^2: l = 2, and the unit count needs b = 2 * b(Q) = 4 over Q as well.
  WitnessReport w = witness_b(mu2(), pq("x^2+2"), pq("(x^2+2)^2"));
  EXPECT_EQ(w.l, 2u);
  EXPECT_EQ(w.e, 1u);
  EXPECT_EQ(w.b, 4u);
  EXPECT_EQ(w.ratio, val(1));
  auto d = hasse_derivative(pq("(x^2+2)^2"), 2);
  EXPECT_GT(truncated_value(mu2(), pq("x^2+2"), d), val(4) - val(2));
}

TEST(EpsilonGap, Examples) {
  GapVerdict<QP> g = epsilon_gap(mu2(), pq("x"), pq("x^2+2"), 2);
  EXPECT_TRUE(g.strict);
  EXPECT_EQ(g.epsilon_q, val(1, 2));
  EXPECT_EQ(g.epsilon_f, val(1));
  // x^2 gets its full value from the Gauss step: weak case.
  GapVerdict<QP> weak = epsilon_gap(mu2(), pq("x"), pq("x^2"), 2);
  EXPECT_FALSE(weak.strict);
  EXPECT_GE(weak.epsilon_f, weak.epsilon_q);
  EXPECT_THROW(epsilon_gap(mu2(), pq("x"), pq("x^2+2"), 1), DomainError);
}

TEST(Successor, Examples) {
  auto budget = family_budget(QP(2));
  SuccessorReport<QP> s = is_immediate_successor(mu2(), 0, budget);
  EXPECT_TRUE(s.value_jump);
  EXPECT_FALSE(s.lower_degree_jump.has_value());
  EXPECT_TRUE(s.result);
  EXPECT_TRUE(is_immediate_successor(mu3(), 1, budget).result);
  EXPECT_THROW(is_immediate_successor(mu2(), 1, budget), DomainError);
  EXPECT_TRUE(is_immediate_successor(nu2(), 0, family_budget(FT(2))).result);
}

TEST(Mlv, Examples) {
  auto budget = default_budget(QP(2));
  MlvVerdict<QP> cand = check_mlv_last(mu1(), pq("x^2+2"), budget);
  EXPECT_FALSE(cand.is_last_key);
  EXPECT_TRUE(cand.minimal);
  EXPECT_EQ(cand.irreducible, Ternary::True);
  EXPECT_EQ(cand.irreducible_evidence, Evidence::BySearch);
  EXPECT_TRUE(cand.accepted());

  MlvVerdict<QP> square = check_mlv_last(mu1(), pq("x^2"), budget);
  EXPECT_EQ(square.irreducible, Ternary::False);
  EXPECT_FALSE(square.accepted());

  MlvVerdict<QP> last = check_mlv_last(mu2(), pq("x^2+2"), budget);
  EXPECT_TRUE(last.is_last_key);
  EXPECT_TRUE(last.minimal);
  EXPECT_EQ(last.minimal_evidence, Evidence::ByEnumeration);
  EXPECT_EQ(last.checked, 10u);
  EXPECT_EQ(last.irreducible, Ternary::True);
  EXPECT_EQ(last.irreducible_evidence, Evidence::Structural);

  MlvVerdict<QP> split = check_mlv_last(mu1(), pq("x^2+3*x+2"), budget);
  EXPECT_FALSE(split.accepted());

  // The top x^2 term of x^2+x+1 has value 1 > 0 = value of the constant term.
  MlvVerdict<QP> unbalanced = check_mlv_last(mu1(), pq("x^2+x+1"), budget);
  EXPECT_FALSE(unbalanced.minimal);
  ASSERT_TRUE(unbalanced.minimality_witness.has_value());
  EXPECT_LT(unbalanced.minimality_witness->deg(), 2u);

  MlvVerdict<QP> odd = check_mlv_last(mu2(), pq("x^3+2"), budget);
  EXPECT_FALSE(odd.minimal);

  MlvVerdict<QP> linear = check_mlv_last(mu2(), pq("x^2+6"), budget);
  EXPECT_TRUE(linear.accepted());
  EXPECT_EQ(linear.irreducible_evidence, Evidence::Structural);
}

TEST(Depth, Examples) {
  auto mu = mu2();
  EXPECT_EQ(truncation_depth(mu, pq("x")), 0u);
  EXPECT_EQ(truncation_depth(mu, pq("x^2+2")), 1u);
  EXPECT_EQ(truncation_depth(mu, pq("2*x+1")), 0u);
  EXPECT_EQ(truncation_depth(mu3(), pq("x^2+6")), 2u);
  EXPECT_THROW(truncation_depth(mu, PolyQ(QP(2))), DomainError);
}

}  // namespace
}  // namespace akp
