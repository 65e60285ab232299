#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "starricci/catalog.hpp"
#include "starricci/error.hpp"

namespace starricci {
namespace {

constexpr double kPi = std::numbers::pi;

const Catalog& cat() {
  static const Catalog c = Catalog::builtin();
  return c;
}

TEST(HopfRelation, Residuals) {
  EXPECT_DOUBLE_EQ(hopf_relation_residual(2, 1, 1, -4), 0.0);
  EXPECT_DOUBLE_EQ(hopf_relation_residual(0, 0, 0, 4), -1.0);
  EXPECT_DOUBLE_EQ(hopf_relation_residual(0, 0, 0, -4), 1.0);
  EXPECT_DOUBLE_EQ(hopf_relation_residual(0, 1, 1, 4), 0.0);
}

TEST(Builtin, SixFamiliesWithExpectedIds) {
  std::vector<std::string> ids;
  for (const auto& f : cat().families()) ids.push_back(f.id());
  EXPECT_EQ(ids, (std::vector<std::string>{"cp2-a1", "cp2-b", "ch2-a0", "ch2-a1", "ch2-a1p", "ch2-b"}));
  EXPECT_EQ(cat().version(), 1);
  EXPECT_EQ(cat().find("CP2-B").space(), ModelSpace::cp2());
  EXPECT_THROW(cat().find("cp2-c"), Error);
}

TEST(Builtin, PointValues) {
  Curvatures h = cat().find("ch2-a0").at(0.7);
  EXPECT_EQ(h.alpha, 2.0);
  EXPECT_EQ(h.lambda, 1.0);
  EXPECT_EQ(h.nu, 1.0);
  Curvatures s = cat().find("cp2-a1").at(kPi / 4);
  EXPECT_NEAR(s.alpha, 0.0, 1e-15);
  EXPECT_NEAR(s.lambda, 1.0, 1e-15);
  EXPECT_NEAR(hopf_relation_residual(s.alpha, s.lambda, s.nu, 4), 0.0, 1e-15);
}

TEST(Builtin, TypeBProducts) {
  const auto& b = cat().find("cp2-b");
  for (double r : b.sample_radii(100)) {
    Curvatures k = b.at(r);
    EXPECT_NEAR(k.lambda * k.nu, -1.0, 1e-9) << r;
  }
  const auto& hb = cat().find("ch2-b");
  for (double r : hb.sample_radii(100)) {
    Curvatures k = hb.at(r);
    EXPECT_NEAR(k.lambda * k.nu, 1.0, 1e-9) << r;
  }
}

TEST(Builtin, OracleAtHundredRadiiOfSeveralSubintervals) {
  for (const auto& f : cat().families()) {
    auto [a, b] = f.validation_interval();
    for (auto [lo, hi] : {std::pair{a, b}, std::pair{a, a + (b - a) / 3}, std::pair{(a + b) / 2, b}}) {
      for (int i = 0; i < 100; ++i) {
        const double r = lo + (hi - lo) * i / 99;
        Curvatures k = f.at(r);
        EXPECT_LT(std::abs(hopf_relation_residual(k.alpha, k.lambda, k.nu, f.space().c)), 1e-9) << f.id() << " " << r;
      }
    }
  }
}

TEST(Family, DomainHandling) {
  const auto& f = cat().find("cp2-b");
  EXPECT_THROW(f.at(0.0), Error);
  EXPECT_THROW(f.at(kPi / 4), Error);
  EXPECT_NO_THROW(f.at(0.3));
  auto [a, b] = f.validation_interval();
  EXPECT_NEAR(a, 0.02 * kPi / 4, 1e-15);
  EXPECT_NEAR(b, 0.98 * kPi / 4, 1e-15);
  auto [ha, hb] = cat().find("ch2-b").validation_interval();
  EXPECT_DOUBLE_EQ(ha, 0.05);
  EXPECT_DOUBLE_EQ(hb, 5.0);
  auto [wa, wb] = cat().find("ch2-a0").validation_interval();
  EXPECT_EQ(wa, -5.0);
  EXPECT_EQ(wb, 5.0);
}

TEST(Format, RoundTripAndErrors) {
  Catalog again = Catalog::parse(cat().to_text());
  EXPECT_EQ(again.to_text(), cat().to_text());
  EXPECT_THROW(Catalog::parse(""), Error);
  EXPECT_THROW(Catalog::parse("catalog-version 2\n"), Error);
  EXPECT_THROW(Catalog::parse("catalog-version 1\nfamily x\nspace cp2\n"), Error);
  EXPECT_THROW(Catalog::parse("catalog-version 1\nspace cp2\n"), Error);
  EXPECT_THROW(Catalog::parse("catalog-version 1\nfamily x\nspace cp3\ndomain 0 1\nalpha 1\nlambda 1\nnu 1\nend\n"), Error);
  EXPECT_THROW(Catalog::parse("catalog-version 1\nfamily x\nspace cp2\ndomain 0 1\nalpha q\nlambda 1\nnu 1\nend\n"), Error);
}

TEST(Format, OracleRejectsBadFamily) {
  // lambda = nu = cot r with alpha off by a factor fails the Hopf relation.
  const char* bad =
      "catalog-version 1\n# a wrong sphere\nfamily bad\nspace cp2\ndomain 0 pi/2\nalpha cot(2*r)\nlambda cot(r)\n"
      "nu cot(r)\nend\n";
  try {
    Catalog::parse(bad);
    FAIL() << "expected a catalog error";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::Catalog);
    EXPECT_NE(std::string(e.what()).find("Hopf relation"), std::string::npos);
  }
  const char* good =
      "catalog-version 1\nfamily sphere\nspace cp2\ndomain 0 pi/2\nalpha 2*cot(2*r)\nlambda cot(r)\nnu cot(r)\n"
      "description user copy\nend\n";
  EXPECT_EQ(Catalog::parse(good).families().size(), 1u);
}

TEST(Evaluate, ParallelExamples) {
  NumericReport b = evaluate_condition(cat().find("cp2-b"), kPi / 8, ConditionKind::Parallel);
  ASSERT_EQ(b.entries.size(), 27u);
  const double lambda = 1 / std::tan(kPi / 8 - kPi / 4);
  EXPECT_NEAR(b.lambda_nu_plus_c, 3.0, 1e-12);
  for (const auto& e : b.entries)
    if (e.label == "(e1,e3,e2)") EXPECT_NEAR(std::abs(e.value), 3 * std::abs(lambda), 1e-12);
  EXPECT_GT(b.max_residual, 1e-6);

  NumericReport h = evaluate_condition(cat().find("ch2-a0"), 12.0, ConditionKind::Parallel);
  for (const auto& e : h.entries)
    if (e.label == "(e1,e3,e2)") EXPECT_NEAR(std::abs(e.value), 3.0, 1e-12);
}

TEST(Evaluate, EveryKindIsTotal) {
  for (auto kind : {ConditionKind::Parallel, ConditionKind::XiParallel, ConditionKind::DParallel,
                    ConditionKind::SemiParallel, ConditionKind::PseudoParallel, ConditionKind::Einstein}) {
    for (const auto& f : cat().families()) {
      const double r = f.sample_radii(3)[1];
      NumericReport n = evaluate_condition(f, r, kind, 0.5);
      EXPECT_FALSE(n.entries.empty());
      for (const auto& e : n.entries) EXPECT_TRUE(std::isfinite(e.value));
      if (kind == ConditionKind::Einstein) {
        EXPECT_EQ(n.entries.size(), 9u);
        double trace = n.entries[0].value + n.entries[4].value + n.entries[8].value;
        EXPECT_NEAR(trace, 0.0, 1e-9);
      }
    }
  }
  EXPECT_THROW(evaluate_condition(cat().find("cp2-b"), 1.0, ConditionKind::Parallel), Error);
}

TEST(Sweep, Examples) {
  SweepResult s = sweep(cat().find("cp2-b"), 0.1, 0.7, 50, ConditionKind::Parallel);
  ASSERT_EQ(s.rows.size(), 50u);
  for (const auto& row : s.rows) EXPECT_NEAR(row.lambda_nu_plus_c, 3.0, 1e-9);
  for (std::size_t i = 1; i < s.rows.size(); ++i) EXPECT_LT(s.rows[i - 1].r, s.rows[i].r);

  SweepResult h = sweep(cat().find("ch2-b"), 0.1, 3.0, 50, ConditionKind::Parallel);
  for (const auto& row : h.rows) {
    EXPECT_NEAR(row.lambda_nu_plus_c, -3.0, 1e-9);
    EXPECT_GT(row.max_residual, 1e-6);
  }

  SweepResult two = sweep(cat().find("ch2-a0"), 0, 1, 2, ConditionKind::Parallel);
  ASSERT_EQ(two.rows.size(), 2u);
  EXPECT_EQ(two.rows[0].r, 0.0);
  EXPECT_EQ(two.rows[1].r, 1.0);
  EXPECT_EQ(two.rows[0].max_residual, two.rows[1].max_residual);

  EXPECT_THROW(sweep(cat().find("cp2-b"), 0.0, 0.5, 10, ConditionKind::Parallel), Error);
  EXPECT_THROW(sweep(cat().find("cp2-b"), 0.1, 0.5, 1, ConditionKind::Parallel), Error);
  EXPECT_THROW(sweep(cat().find("cp2-b"), 0.5, 0.1, 5, ConditionKind::Parallel), Error);
}

TEST(Degeneration, SphereNearQuarterPi) {
  const auto& f = cat().find("cp2-a1");
  for (double eps : {1e-2, 1e-4, 1e-6}) EXPECT_LT(std::abs(f.at(kPi / 4 - eps).alpha), 5 * eps);
}

TEST(Witness, ParallelResidualIsNonzeroOnTheGrid) {
  for (const auto& f : cat().families())
    for (double r : f.sample_radii(100))
      EXPECT_GT(evaluate_condition(f, r, ConditionKind::Parallel).max_residual, 1e-6) << f.id() << " " << r;
}

TEST(Witness, SphereInComplexHyperbolicPlaneDegeneratesAtOneRadius) {
  // At r = ln(3)/2: coth r = 2 and coth 2r = 5/4, so lambda = nu = 2,
  // alpha = 5/2 and c + lambda*nu = 0. S* vanishes identically there, and the
  // parallel condition holds at that single radius.
  const double r0 = std::log(3.0) / 2;
  NumericReport n = evaluate_condition(cat().find("ch2-a1"), r0, ConditionKind::Parallel);
  EXPECT_NEAR(n.curvatures.lambda, 2.0, 1e-12);
  EXPECT_NEAR(n.curvatures.alpha, 2.5, 1e-12);
  EXPECT_NEAR(n.lambda_nu_plus_c, 0.0, 1e-12);
  EXPECT_LT(n.max_residual, 1e-12);
}

}  // namespace
}  // namespace starricci
