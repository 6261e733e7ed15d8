#include <catch2/catch_amalgamated.hpp>

#include "gifpsi/alpha_norm.hpp"

using namespace gifpsi;

namespace {

AlphaNormFamily make_family(double k = 1.0,
                            AlphaNormFamily::Variant v = AlphaNormFamily::Variant::Mu) {
  VectorSpaceConfig space;
  space.dimension = 2;
  return AlphaNormFamily{GifPsiNorm::standard(space, k), v};
}

double closed_form(double alpha, double k, const Vector& x) {
  return alpha * k * std::hypot(x[0], x[1]) / (1.0 - alpha);
}

}  // namespace

TEST_CASE("alpha-norm agrees with the closed-form inversion") {
  auto family = make_family();
  CHECK(alpha_norm(family, {3.0, 4.0}, 0.5) == Catch::Approx(5.0).margin(1e-9));
  CHECK(alpha_norm(family, {3.0, 4.0}, 0.8) == Catch::Approx(20.0).margin(1e-8));
  CHECK(alpha_norm(family, {0.0, 0.0}, 0.3) == 0.0);

  SECTION("random oracle sweep") {
    Rng rng(31);
    for (int i = 0; i < 1000; ++i) {
      double k = rng.log_uniform(0.1, 10.0);
      double alpha = rng.uniform(0.05, 0.95);
      Vector x{rng.uniform(-10.0, 10.0), rng.uniform(-10.0, 10.0)};
      auto fam = make_family(k);
      CHECK(std::abs(alpha_norm(fam, x, alpha) - closed_form(alpha, k, x)) <= 1e-6);
    }
  }
}

TEST_CASE("alpha-norm input validation") {
  auto family = make_family();
  CHECK_THROWS_AS(alpha_norm(family, {1.0, 0.0}, 0.0), domain_error);
  CHECK_THROWS_AS(alpha_norm(family, {1.0, 0.0}, 1.0), domain_error);
  CHECK_THROWS_AS(alpha_norm(family, {1.0, 0.0}, -0.5), domain_error);
  CHECK_THROWS_AS(alpha_norm(family, {1.0, 0.0, 0.0}, 0.5), shape_error);
}

TEST_CASE("bracket exhaustion raises unreachable-level") {
  // a custom norm whose mu never reaches high alpha levels
  VectorSpaceConfig space;
  space.dimension = 2;
  auto capped = GifPsiNorm::custom(
      space, FuzzyConnectives::standard(),
      [](const Vector&, double) { return 0.4; }, [](const Vector&, double) { return 0.5; });
  AlphaNormFamily family{capped, AlphaNormFamily::Variant::Mu, 1e6};
  CHECK_THROWS_AS(alpha_norm(family, {1.0, 0.0}, 0.9), unreachable_level_error);
}

TEST_CASE("mu and nu variants agree for the standard kind") {
  auto mu_fam = make_family();
  auto nu_fam = make_family(1.0, AlphaNormFamily::Variant::Nu);
  Rng rng(37);
  for (int i = 0; i < 300; ++i) {
    Vector x{rng.uniform(-10.0, 10.0), rng.uniform(-10.0, 10.0)};
    double alpha = rng.uniform(0.05, 0.95);
    CHECK(std::abs(alpha_norm(mu_fam, x, alpha) - alpha_norm(nu_fam, x, alpha)) <= 2e-6);
  }
}

TEST_CASE("ascending family profile") {
  auto family = make_family();

  SECTION("profile values at the spec'd grid") {
    auto rep = check_ascending_family(family, {3.0, 4.0}, {0.1, 0.5, 0.9});
    REQUIRE(rep.values.size() == 3);
    CHECK(rep.values[0] == Catch::Approx(5.0 / 9.0).margin(1e-8));
    CHECK(rep.values[1] == Catch::Approx(5.0).margin(1e-8));
    CHECK(rep.values[2] == Catch::Approx(45.0).margin(1e-7));
    CHECK(rep.nondecreasing);
    CHECK(rep.violations.empty());
  }

  SECTION("the null vector profiles to zero") {
    auto rep = check_ascending_family(family, {0.0, 0.0}, {0.2, 0.4, 0.6});
    for (double v : rep.values) CHECK(v == 0.0);
    CHECK(rep.nondecreasing);
  }

  SECTION("nu-variant produces the identical profile") {
    auto nu_fam = make_family(1.0, AlphaNormFamily::Variant::Nu);
    auto rep = check_ascending_family(nu_fam, {3.0, 4.0}, {0.1, 0.5, 0.9});
    CHECK(rep.values[0] == Catch::Approx(5.0 / 9.0).margin(2e-6));
    CHECK(rep.values[1] == Catch::Approx(5.0).margin(2e-6));
    CHECK(rep.values[2] == Catch::Approx(45.0).margin(2e-6));
    CHECK_FALSE(rep.note.empty());  // carries the inf-form convention note
  }

  SECTION("grid validation") {
    CHECK_THROWS_AS(check_ascending_family(family, {1.0, 0.0}, {}), domain_error);
    CHECK_THROWS_AS(check_ascending_family(family, {1.0, 0.0}, {0.5, 0.5}), domain_error);
    CHECK_THROWS_AS(check_ascending_family(family, {1.0, 0.0}, {0.5, 1.0}), domain_error);
  }
}

TEST_CASE("crisp-norm axioms of the extracted norm") {
  auto family = make_family();
  SamplerConfig cfg;
  cfg.samples = 300;
  auto report = check_crisp_norm_axioms(family, 0.5, cfg);
  CHECK(report.all_passed());
  REQUIRE(report.find("psi-homogeneity") != nullptr);
  REQUIRE(report.find("triangle") != nullptr);

  SECTION("homogeneity example: ||2x|| = 2||x||") {
    double base = alpha_norm(family, {3.0, 4.0}, 0.5);
    double doubled = alpha_norm(family, {6.0, 8.0}, 0.5);
    CHECK(doubled == Catch::Approx(2.0 * base).epsilon(1e-10));
    CHECK(doubled == Catch::Approx(10.0).margin(1e-8));
  }

  SECTION("triangle example at alpha = 0.5, k = 1") {
    double sum = alpha_norm(family, {1.0, 1.0}, 0.5);
    double ex = alpha_norm(family, {1.0, 0.0}, 0.5);
    double ey = alpha_norm(family, {0.0, 1.0}, 0.5);
    CHECK(sum == Catch::Approx(std::sqrt(2.0)).margin(1e-8));
    CHECK(sum <= ex + ey + 1e-9);
  }
}

TEST_CASE("collinearity constant estimation") {
  auto family = make_family();
  SamplerConfig cfg;
  cfg.samples = 10000;

  SECTION("orthonormal pair at alpha = 0.5") {
    auto est = estimate_collinearity_constant(family, {{1.0, 0.0}, {0.0, 1.0}}, 0.5, cfg);
    CHECK(est.c_alpha_estimate == Catch::Approx(1.0 / std::sqrt(2.0)).margin(1e-3));
    double sum = std::abs(est.argmin_coefficients[0]) + std::abs(est.argmin_coefficients[1]);
    CHECK(sum == Catch::Approx(1.0).margin(1e-12));
  }

  SECTION("single vector reduces to its own alpha-norm") {
    auto est = estimate_collinearity_constant(family, {{3.0, 4.0}}, 0.5, cfg);
    CHECK(est.c_alpha_estimate == Catch::Approx(5.0).margin(1e-8));
  }

  SECTION("nearly dependent directions drive the constant toward zero") {
    auto est = estimate_collinearity_constant(family, {{1.0, 0.0}, {1.0, 1e-3}}, 0.5, cfg);
    CHECK(est.c_alpha_estimate >= 5e-4 - 1e-9);  // true minimum at a = (1/2, -1/2)
    CHECK(est.c_alpha_estimate <= 5.5e-4);
  }

  SECTION("upper-bound invariant: estimate never exceeds the one-hot minimum") {
    Rng rng(43);
    for (int trial = 0; trial < 20; ++trial) {
      std::vector<Vector> vecs{{rng.uniform(-5.0, 5.0), rng.uniform(-5.0, 5.0)},
                               {rng.uniform(-5.0, 5.0), rng.uniform(-5.0, 5.0)}};
      double alpha = rng.uniform(0.1, 0.9);
      CollinearityEstimate est;
      try {
        SamplerConfig small = cfg;
        small.samples = 500;
        est = estimate_collinearity_constant(family, vecs, alpha, small);
      } catch (const rank_error&) {
        continue;
      }
      double one_hot = std::min(alpha_norm(family, vecs[0], alpha),
                                alpha_norm(family, vecs[1], alpha));
      CHECK(est.c_alpha_estimate <= one_hot + 1e-9);
      // re-evaluating the argmin reproduces the estimate
      Vector combo = add(scale(est.argmin_coefficients[0], vecs[0]),
                         scale(est.argmin_coefficients[1], vecs[1]));
      CHECK(alpha_norm(family, combo, alpha) ==
            Catch::Approx(est.c_alpha_estimate).margin(1e-9));
    }
  }

  SECTION("dependent input vectors are rejected") {
    CHECK_THROWS_AS(
        estimate_collinearity_constant(family, {{1.0, 2.0}, {2.0, 4.0}}, 0.5, cfg),
        rank_error);
  }
}
