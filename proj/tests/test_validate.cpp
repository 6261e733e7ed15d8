#include <catch2/catch_amalgamated.hpp>

#include "gifpsi/validate.hpp"

using namespace gifpsi;

namespace {

GifPsiNorm standard_min_max(double k = 1.0,
                            FuzzyConnectives conn = FuzzyConnectives::standard()) {
  VectorSpaceConfig space;
  space.dimension = 2;
  return GifPsiNorm::standard(space, k, std::move(conn));
}

ValidatorOptions quick_options(int samples = 1000) {
  ValidatorOptions opt;
  opt.sampler.samples = samples;
  return opt;
}

}  // namespace

TEST_CASE("standard construction passes all eleven axioms") {
  auto report = validate_axioms(standard_min_max(), quick_options());
  REQUIRE(report.checks.size() == 11);
  for (const auto& c : report.checks) {
    INFO("axiom " << c.axiom);
    CHECK(c.status == CheckStatus::Pass);
  }

  // and so does a non-Euclidean space with other valid connectives
  VectorSpaceConfig space;
  space.dimension = 3;
  space.crisp_norm = CrispNorm::p_norm(1.0);
  FuzzyConnectives conn;
  conn.tnorm = TNorm::product();
  conn.tconorm = TConorm::probabilistic_sum();
  auto report2 = validate_axioms(GifPsiNorm::standard(space, 0.5, conn), quick_options());
  CHECK(report2.all_passed());
}

TEST_CASE("circle=max breaks the triangle axioms with a reproducible witness") {
  FuzzyConnectives conn;
  conn.circle = CircleOp::max();
  GifPsiNorm nrm = standard_min_max(1.0, conn);
  auto report = validate_axioms(nrm, quick_options());

  const AxiomCheck* v = report.find("v");
  REQUIRE(v != nullptr);
  REQUIRE(v->status == CheckStatus::Fail);
  const Vector* x = v->witness.find("x");
  const Vector* y = v->witness.find("y");
  REQUIRE(x != nullptr);
  REQUIRE(y != nullptr);
  double s = v->witness.scalar("s");
  double t = v->witness.scalar("t");

  // independent re-evaluation reproduces the recorded violation
  double lhs = conn.tnorm(nrm.mu(*x, s), nrm.mu(*y, t));
  double rhs = nrm.mu(add(*x, *y), conn.circle(s, t));
  CHECK(lhs == Catch::Approx(v->lhs));
  CHECK(rhs == Catch::Approx(v->rhs));
  CHECK(lhs - rhs >= 0.16);  // analytic gap at x=y=(1,0), s=t=1 is 1/6

  const AxiomCheck* xcheck = report.find("x");
  REQUIRE(xcheck != nullptr);
  CHECK(xcheck->status == CheckStatus::Fail);
}

TEST_CASE("a custom pair breaking mu+nu <= 1 fails axiom (i)") {
  VectorSpaceConfig space;
  space.dimension = 2;
  const double k = 1.0;
  auto nrm = GifPsiNorm::custom(
      space, FuzzyConnectives::standard(),
      [&](const Vector& x, double t) {
        double r = k * std::hypot(x[0], x[1]);
        return t / (t + r);
      },
      [&](const Vector& x, double t) {
        double r = k * std::hypot(x[0], x[1]);
        return std::min(1.0, 2.0 * r / (t + r));
      });
  // spot check the spec'd failure point
  CHECK(nrm.mu({3.0, 4.0}, 5.0) + nrm.nu({3.0, 4.0}, 5.0) == Catch::Approx(1.5));

  auto report = validate_axioms(nrm, quick_options());
  const AxiomCheck* one = report.find("i");
  REQUIRE(one != nullptr);
  REQUIRE(one->status == CheckStatus::Fail);
  const Vector* wx = one->witness.find("x");
  double wt = one->witness.scalar("t");
  CHECK(nrm.mu(*wx, wt) + nrm.nu(*wx, wt) == Catch::Approx(one->lhs));
  CHECK(one->lhs > 1.0 + 1e-9);
}

TEST_CASE("determinism: repeated validation gives identical reports") {
  FuzzyConnectives conn;
  conn.circle = CircleOp::max();
  GifPsiNorm nrm = standard_min_max(1.0, conn);
  auto r1 = validate_axioms(nrm, quick_options());
  auto r2 = validate_axioms(nrm, quick_options());
  REQUIRE(r1.checks.size() == r2.checks.size());
  for (std::size_t i = 0; i < r1.checks.size(); ++i) {
    CHECK(r1.checks[i].status == r2.checks[i].status);
    CHECK(r1.checks[i].lhs == r2.checks[i].lhs);
    CHECK(r1.checks[i].rhs == r2.checks[i].rhs);
  }
}

TEST_CASE("extra conditions") {
  SECTION("min/max connectives are idempotent") {
    auto report = check_extra_conditions(standard_min_max(), quick_options());
    const AxiomCheck* xii = report.find("xii");
    REQUIRE(xii != nullptr);
    CHECK(xii->status == CheckStatus::Pass);
  }

  SECTION("product t-norm fails idempotency at a = 0.5") {
    FuzzyConnectives conn;
    conn.tnorm = TNorm::product();
    auto report = check_extra_conditions(standard_min_max(1.0, conn), quick_options());
    const AxiomCheck* xii = report.find("xii");
    REQUIRE(xii != nullptr);
    REQUIRE(xii->status == CheckStatus::Fail);
    double a = xii->witness.scalar("a");
    CHECK(a == 0.5);  // the pinned first sample
    CHECK(xii->lhs == Catch::Approx(0.25));
    CHECK(xii->rhs == Catch::Approx(0.5));
  }

  SECTION("separation witnesses exist for the standard construction") {
    auto report = check_extra_conditions(standard_min_max(), quick_options());
    const AxiomCheck* xiii = report.find("xiii");
    const AxiomCheck* xiv = report.find("xiv");
    REQUIRE(xiii != nullptr);
    REQUIRE(xiv != nullptr);
    CHECK(xiii->status == CheckStatus::Pass);
    CHECK(xiv->status == CheckStatus::Pass);
    // the pass entries carry a demonstration witness
    CHECK(xiii->witness.find("t") != nullptr);
    CHECK(xiv->witness.find("t") != nullptr);
  }
}

TEST_CASE("validator option checks") {
  ValidatorOptions opt;
  opt.t_grid.clear();
  CHECK_THROWS_AS(validate_axioms(standard_min_max(), opt), config_error);
  ValidatorOptions opt2;
  opt2.sampler.tolerance = 0.0;
  CHECK_THROWS_AS(validate_axioms(standard_min_max(), opt2), config_error);
}
