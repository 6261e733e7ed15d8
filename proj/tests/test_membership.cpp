#include <catch2/catch_amalgamated.hpp>

#include "gifpsi/membership.hpp"
#include "gifpsi/random.hpp"

using namespace gifpsi;

namespace {

GifPsiNorm make_standard(double k = 1.0) {
  VectorSpaceConfig space;
  space.dimension = 2;
  space.crisp_norm = CrispNorm::euclidean();
  return GifPsiNorm::standard(space, k);
}

}  // namespace

TEST_CASE("standard construction evaluates its closed formulas") {
  GifPsiNorm nrm = make_standard();

  auto m = nrm.eval({3.0, 4.0}, 5.0);
  CHECK(m.mu == 0.5);
  CHECK(m.nu == 0.5);

  auto m2 = nrm.eval({3.0, 4.0}, 15.0);
  CHECK(m2.mu == 0.75);

  GifPsiNorm k2 = make_standard(2.0);
  auto m3 = k2.eval({1.0, 0.0}, 2.0);
  CHECK(m3.mu == 0.5);
  CHECK(m3.nu == 0.5);

  SECTION("bit-for-bit against the direct quotients") {
    Rng rng(5);
    for (int i = 0; i < 200; ++i) {
      Vector x{rng.uniform(-10.0, 10.0), rng.uniform(-10.0, 10.0)};
      double t = rng.log_uniform(1e-2, 1e3);
      double r = nrm.space().crisp_norm(x);
      auto mm = nrm.eval(x, t);
      CHECK(mm.mu == t / (t + r));
      CHECK(mm.nu == r / (t + r));
    }
  }
}

TEST_CASE("membership at the null vector") {
  GifPsiNorm nrm = make_standard();
  for (double t : {1e-6, 0.5, 1.0, 1e6}) {
    auto m = nrm.eval({0.0, 0.0}, t);
    CHECK(m.mu == 1.0);
    CHECK(m.nu == 0.0);
  }
}

TEST_CASE("eval rejects bad inputs") {
  GifPsiNorm nrm = make_standard();
  CHECK_THROWS_AS(nrm.eval({1.0, 0.0}, 0.0), domain_error);
  CHECK_THROWS_AS(nrm.eval({1.0, 0.0}, -1.0), domain_error);
  CHECK_THROWS_AS(nrm.eval({1.0, 0.0, 0.0}, 1.0), shape_error);
  CHECK_THROWS_AS(GifPsiNorm::standard(VectorSpaceConfig{}, 0.0), domain_error);
  CHECK_THROWS_AS(GifPsiNorm::standard(VectorSpaceConfig{}, -2.0), domain_error);
}

TEST_CASE("standard kind: mu + nu = 1 and monotonicity in t") {
  GifPsiNorm nrm = make_standard();
  Rng rng(17);
  for (int i = 0; i < 500; ++i) {
    Vector x{rng.uniform(-10.0, 10.0), rng.uniform(-10.0, 10.0)};
    double t1 = rng.log_uniform(1e-3, 1e3);
    double t2 = rng.log_uniform(1e-3, 1e3);
    if (t1 > t2) std::swap(t1, t2);
    auto a = nrm.eval(x, t1);
    auto b = nrm.eval(x, t2);
    // the quotient pair sums to 1 within one rounding of the shared denominator
    CHECK(std::abs(a.mu + a.nu - 1.0) <= 1e-15);
    if (t1 < t2 && !(x[0] == 0.0 && x[1] == 0.0)) {
      CHECK(a.mu < b.mu);  // strictly increasing off theta
      CHECK(a.nu > b.nu);
    }
  }
}

TEST_CASE("scaling consistency and symmetry") {
  GifPsiNorm nrm = make_standard(1.5);
  Rng rng(23);
  for (int i = 0; i < 500; ++i) {
    Vector x{rng.uniform(-10.0, 10.0), rng.uniform(-10.0, 10.0)};
    double t = rng.log_uniform(1e-2, 1e2);
    double a = rng.log_uniform(1e-3, 1e3) * (rng.coin() ? 1.0 : -1.0);

    double lhs = nrm.mu(scale(a, x), t);
    double rhs = nrm.mu(x, t / std::abs(a));
    CHECK(lhs == Catch::Approx(rhs).margin(1e-12));

    auto plus = nrm.eval(x, t);
    auto minus = nrm.eval(scale(-1.0, x), t);
    CHECK(plus.mu == minus.mu);
    CHECK(plus.nu == minus.nu);
  }
}

TEST_CASE("custom norms evaluate the supplied functions") {
  VectorSpaceConfig space;
  space.dimension = 2;
  auto nrm = GifPsiNorm::custom(
      space, FuzzyConnectives::standard(),
      [](const Vector& x, double t) { return t / (t + 2.0 * std::hypot(x[0], x[1])); },
      [](const Vector& x, double t) {
        double r = 2.0 * std::hypot(x[0], x[1]);
        return r / (t + r);
      });
  CHECK(nrm.mu({1.0, 0.0}, 2.0) == 0.5);
  CHECK(nrm.nu({1.0, 0.0}, 2.0) == 0.5);
  CHECK_FALSE(nrm.is_standard());
}
