#include <catch2/catch_amalgamated.hpp>

#include "gifpsi/companion.hpp"
#include "gifpsi/connective_axioms.hpp"
#include "gifpsi/connectives.hpp"

using namespace gifpsi;

TEST_CASE("builtin t-norms evaluate their closed formulas") {
  CHECK(TNorm::minimum()(0.3, 0.7) == 0.3);
  CHECK(TNorm::product()(0.5, 0.5) == 0.25);
  CHECK(TNorm::product()(0.4, 1.0) == 0.4);
  CHECK(TNorm::lukasiewicz()(0.7, 0.8) == Catch::Approx(0.5));
  CHECK(TNorm::lukasiewicz()(0.2, 0.3) == 0.0);

  CHECK_THROWS_AS(TNorm::minimum()(-0.1, 0.5), domain_error);
  CHECK_THROWS_AS(TNorm::minimum()(0.1, 1.5), domain_error);
}

TEST_CASE("builtin t-conorms evaluate their closed formulas") {
  CHECK(TConorm::maximum()(0.3, 0.7) == 0.7);
  CHECK(TConorm::probabilistic_sum()(0.5, 0.5) == 0.75);
  CHECK(TConorm::probabilistic_sum()(0.4, 0.0) == 0.4);
  CHECK(TConorm::bounded_sum()(0.7, 0.8) == 1.0);
  CHECK_THROWS_AS(TConorm::maximum()(2.0, 0.0), domain_error);
}

TEST_CASE("circle operations") {
  CHECK(CircleOp::add()(3.0, 4.0) == 7.0);
  CHECK(CircleOp::power_mean(2)(3.0, 4.0) == Catch::Approx(5.0));
  CHECK(CircleOp::max()(2.5, 0.0) == 2.5);
  CHECK(CircleOp::power_mean(3)(0.0, 2.0) == 2.0);
  CHECK_THROWS_AS(CircleOp::add()(-1.0, 2.0), domain_error);
  CHECK_THROWS_AS(CircleOp::power_mean(0), domain_error);

  SECTION("power-mean(1) coincides with add on sampled pairs") {
    Rng rng(7);
    auto pm1 = CircleOp::power_mean(1);
    auto add = CircleOp::add();
    for (int i = 0; i < 500; ++i) {
      double s = rng.uniform(0.0, 50.0), t = rng.uniform(0.0, 50.0);
      CHECK(pm1(s, t) == add(s, t));
    }
  }
}

TEST_CASE("psi functions") {
  CHECK(PsiFunction::abs()(-2.5) == 2.5);
  CHECK(PsiFunction::abs_power(2.0)(3.0) == 9.0);

  SECTION("rational example normalizes at 1 and is even") {
    auto psi = PsiFunction::rational_example(1);
    CHECK(psi(1.0) == Catch::Approx(1.0));
    CHECK(psi(-1.0) == Catch::Approx(1.0));
    CHECK(psi(2.0) == Catch::Approx(8.0 / 3.0).epsilon(1e-12));
  }

  SECTION("psi(-1) = psi(1) = 1 for every builtin") {
    for (const auto& psi : {PsiFunction::abs(), PsiFunction::abs_power(0.5),
                            PsiFunction::abs_power(3.0), PsiFunction::rational_example(1),
                            PsiFunction::rational_example(2)}) {
      CHECK(psi(1.0) == Catch::Approx(1.0));
      CHECK(psi(-1.0) == Catch::Approx(1.0));
    }
  }
}

TEST_CASE("connective axiom checker") {
  SamplerConfig cfg;
  cfg.samples = 1000;

  SECTION("minimum t-norm passes all axioms") {
    auto report = check_connective_axioms(TNorm::minimum(), cfg);
    CHECK(report.all_passed());
    CHECK(report.checks.size() == 5);
  }

  SECTION("projection fails commutativity with an asymmetric witness") {
    auto proj = TNorm::custom([](double a, double) { return a; }, "projection");
    auto report = check_connective_axioms(proj, cfg);
    CHECK_FALSE(report.all_passed());
    const AxiomCheck* comm = report.find("commutativity");
    REQUIRE(comm != nullptr);
    REQUIRE(comm->status == CheckStatus::Fail);
    double a = comm->witness.scalar("a");
    double b = comm->witness.scalar("b");
    CHECK(a != b);
    // the witness re-evaluates to the recorded violation
    CHECK(proj(a, b) == comm->lhs);
    CHECK(proj(b, a) == comm->rhs);
    CHECK(std::abs(comm->lhs - comm->rhs) > cfg.tolerance);
  }

  SECTION("every builtin psi passes") {
    for (const auto& psi : {PsiFunction::abs(), PsiFunction::abs_power(2.0),
                            PsiFunction::rational_example(1)}) {
      auto report = check_connective_axioms(psi, cfg);
      CHECK(report.all_passed());
    }
  }

  SECTION("a bounded psi fails the infinity-limit surrogate") {
    auto bounded = PsiFunction::custom(
        [](double t) { return 2.0 * std::abs(t) / (std::abs(t) + 1.0); }, "bounded");
    auto report = check_connective_axioms(bounded, cfg);
    const AxiomCheck* lim = report.find("limit-infinity");
    REQUIRE(lim != nullptr);
    CHECK(lim->status == CheckStatus::Fail);
  }

  SECTION("a psi with a positive limit at zero fails the zero-limit surrogate") {
    auto shifted = PsiFunction::custom(
        [](double t) { return (1.0 + std::abs(t)) / 2.0; }, "shifted");
    auto report = check_connective_axioms(shifted, cfg);
    const AxiomCheck* lim = report.find("limit-zero");
    REQUIRE(lim != nullptr);
    CHECK(lim->status == CheckStatus::Fail);
  }

  SECTION("determinism: identical seeds give identical witnesses") {
    auto proj = TNorm::custom([](double a, double) { return a; }, "projection");
    auto r1 = check_connective_axioms(proj, cfg);
    auto r2 = check_connective_axioms(proj, cfg);
    const AxiomCheck* c1 = r1.find("commutativity");
    const AxiomCheck* c2 = r2.find("commutativity");
    REQUIRE(c1 != nullptr);
    REQUIRE(c2 != nullptr);
    CHECK(c1->witness.scalar("a") == c2->witness.scalar("a"));
    CHECK(c1->witness.scalar("b") == c2->witness.scalar("b"));
  }
}

TEST_CASE("builtin t-norms stay below min, t-conorms above max") {
  Rng rng(11);
  for (int i = 0; i < 2000; ++i) {
    double a = rng.uniform01(), b = rng.uniform01();
    for (const auto& t : {TNorm::minimum(), TNorm::product(), TNorm::lukasiewicz()})
      CHECK(t(a, b) <= std::min(a, b) + 1e-15);
    for (const auto& s :
         {TConorm::maximum(), TConorm::probabilistic_sum(), TConorm::bounded_sum()})
      CHECK(s(a, b) >= std::max(a, b) - 1e-15);
  }
}

TEST_CASE("companion value solvers return verified witnesses") {
  SECTION("r3: tnorm(r1, r3) > r2") {
    struct Case {
      double r1, r2;
      TNorm t;
    };
    const Case cases[] = {{0.8, 0.5, TNorm::minimum()},
                          {0.9, 0.1, TNorm::product()},
                          {0.6, 0.59, TNorm::minimum()},
                          {0.9, 0.85, TNorm::lukasiewicz()}};
    for (const auto& c : cases) {
      double r3 = find_companion_r3(c.r1, c.r2, c.t);
      CHECK(r3 > 0.0);
      CHECK(r3 < 1.0);
      CHECK(c.t(c.r1, r3) > c.r2);
    }
  }

  SECTION("r4: tconorm(r4, r2) < r1") {
    struct Case {
      double r1, r2;
      TConorm s;
    };
    const Case cases[] = {{0.8, 0.5, TConorm::maximum()},
                          {0.9, 0.1, TConorm::probabilistic_sum()},
                          {0.51, 0.5, TConorm::maximum()},
                          {0.7, 0.6, TConorm::bounded_sum()}};
    for (const auto& c : cases) {
      double r4 = find_companion_r4(c.r1, c.r2, c.s);
      CHECK(r4 > 0.0);
      CHECK(r4 < 1.0);
      CHECK(c.s(r4, c.r2) < c.r1);
    }
  }

  SECTION("idempotent pair") {
    auto [r6, r7] = find_idempotent_pair(0.7, TNorm::minimum(), TConorm::maximum());
    CHECK(TNorm::minimum()(r6, r6) >= 0.7);
    CHECK(TConorm::maximum()(r7, r7) <= 0.7);

    auto [p6, p7] = find_idempotent_pair(0.81, TNorm::product(), TConorm::maximum());
    CHECK(p6 >= 0.9 - 1e-3);
    CHECK(TNorm::product()(p6, p6) >= 0.81);

    auto [q6, q7] = find_idempotent_pair(0.5, TNorm::minimum(), TConorm::probabilistic_sum());
    CHECK(TConorm::probabilistic_sum()(q7, q7) <= 0.5);
    (void)p7;
    (void)q6;
  }

  SECTION("preconditions") {
    CHECK_THROWS_AS(find_companion_r3(0.5, 0.8, TNorm::minimum()), domain_error);
    CHECK_THROWS_AS(find_companion_r3(0.5, 0.5, TNorm::minimum()), domain_error);
    CHECK_THROWS_AS(find_idempotent_pair(1.0, TNorm::minimum(), TConorm::maximum()),
                    domain_error);
  }

  SECTION("a broken operation exhausts the search") {
    auto zero = TNorm::custom([](double, double) { return 0.0; }, "zero");
    CHECK_THROWS_AS(find_companion_r3(0.8, 0.5, zero), search_exhausted_error);
  }
}
