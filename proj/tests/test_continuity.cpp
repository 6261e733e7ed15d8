#include <catch2/catch_amalgamated.hpp>

#include "gifpsi/continuity.hpp"
#include "gifpsi/corpus.hpp"

using namespace gifpsi;

namespace {

GifPsiNorm make_standard() {
  VectorSpaceConfig space;
  space.dimension = 2;
  return GifPsiNorm::standard(space, 1.0);
}

const Vector kTheta{0.0, 0.0};
const std::vector<double> kR{0.1};
const std::vector<double> kT{1.0};

ContinuitySearchOptions fast_options() {
  ContinuitySearchOptions opt;
  opt.samples_per_candidate = 400;
  return opt;
}

}  // namespace

TEST_CASE("sequential continuity") {
  GifPsiNorm nrm = make_standard();
  auto family = converging_family(kTheta);

  SECTION("f(x) = 2x maps converging families to converging images") {
    auto rep = check_sequentially_ifc(MapSpec::componentwise_scale(2, 2.0), kTheta, nrm, nrm,
                                      family, kR, kT, 1000);
    CHECK(rep.positive);
    REQUIRE(rep.members.size() == family.size());
  }

  SECTION("the identity map is sequentially continuous anywhere") {
    Vector x0{1.0, -2.0};
    auto rep = check_sequentially_ifc(MapSpec::identity(2), x0, nrm, nrm,
                                      converging_family(x0), kR, kT, 1000);
    CHECK(rep.positive);
  }

  SECTION("radial normalization fails at theta with constant unit images") {
    auto rep = check_sequentially_ifc(MapSpec::radial_normalize(2), kTheta, nrm, nrm,
                                      {SequenceSpec::affine_decay(kTheta, {1.0, 0.0})}, kR,
                                      kT, 1000);
    CHECK_FALSE(rep.positive);
    // image sequence is constantly (1,0): mu((1,0),1) = 0.5 never beats 0.9
    CHECK(rep.members[0].image_check.verdict == Verdict::Negative);
  }

  SECTION("families that do not converge to x0 are a precondition error") {
    auto bad = SequenceSpec::constant({5.0, 5.0});
    CHECK_THROWS_AS(check_sequentially_ifc(MapSpec::identity(2), kTheta, nrm, nrm, {bad}, kR,
                                           kT, 1000),
                    precondition_error);
  }

  SECTION("negative verdicts survive family enlargement") {
    auto rad = MapSpec::radial_normalize(2);
    std::vector<SequenceSpec> small{SequenceSpec::affine_decay(kTheta, {1.0, 0.0})};
    auto family_large = converging_family(kTheta);
    auto small_rep = check_sequentially_ifc(rad, kTheta, nrm, nrm, small, kR, kT, 1000);
    auto large_rep =
        check_sequentially_ifc(rad, kTheta, nrm, nrm, family_large, kR, kT, 1000);
    CHECK_FALSE(small_rep.positive);
    CHECK_FALSE(large_rep.positive);
  }
}

TEST_CASE("strong continuity search") {
  GifPsiNorm nrm = make_standard();

  SECTION("f(x) = 2x admits delta with the largest grid value <= eps/2") {
    auto rep = check_strongly_ifc(MapSpec::componentwise_scale(2, 2.0), kTheta, nrm, nrm,
                                  {1.0}, fast_options());
    CHECK(rep.positive);
    REQUIRE(rep.entries.size() == 1);
    CHECK(rep.entries[0].found);
    CHECK(rep.entries[0].delta <= 0.5 + 1e-12);  // the linear bound eps / L
    CHECK(rep.entries[0].delta > 0.0);
  }

  SECTION("the identity map certifies every eps") {
    auto rep = check_strongly_ifc(MapSpec::identity(2), {1.0, 1.0}, nrm, nrm,
                                  {0.25, 1.0, 4.0}, fast_options());
    CHECK(rep.positive);
    for (const auto& e : rep.entries) CHECK(e.found);
  }

  SECTION("radial normalization defeats every candidate delta at theta") {
    auto rep = check_strongly_ifc(MapSpec::radial_normalize(2), kTheta, nrm, nrm, {1.0},
                                  fast_options());
    CHECK_FALSE(rep.positive);
    REQUIRE(rep.entries.size() == 1);
    const auto& e = rep.entries[0];
    CHECK_FALSE(e.found);
    REQUIRE_FALSE(e.witness.empty());
    // re-evaluate the recorded witness against its candidate delta
    const Vector* x = e.witness.find("x");
    double delta = e.witness.scalar("delta");
    REQUIRE(x != nullptr);
    double mu_u = nrm.mu(*x, delta);
    double mu_v = nrm.mu(MapSpec::radial_normalize(2)(*x), 1.0);
    if (e.failed_condition == "mu") CHECK(mu_v < mu_u - 1e-12);
  }
}

TEST_CASE("epsilon-level continuity search") {
  GifPsiNorm nrm = make_standard();

  SECTION("f(x) = 2x finds a verified (delta, beta) at eps=1, alpha=0.5") {
    auto res = check_ifc(MapSpec::componentwise_scale(2, 2.0), kTheta, nrm, nrm, 1.0, 0.5,
                         fast_options());
    REQUIRE(res.positive);
    CHECK(res.delta > 0.0);
    CHECK(res.beta > 0.0);
    // the certified pair satisfies the mu implication analytically:
    // mu_U(x, delta) > beta  <=>  ||x|| < delta (1-beta)/beta, and the
    // conclusion needs ||2x|| < eps (1-alpha)/alpha = 1
    CHECK(res.delta * (1.0 - res.beta) / res.beta <= 0.5 + 1e-9);
  }

  SECTION("the identity map accepts (delta, beta) = (eps, alpha)") {
    auto res = check_ifc(MapSpec::identity(2), kTheta, nrm, nrm, 1.0, 0.5, fast_options());
    CHECK(res.positive);
  }

  SECTION("radial normalization yields a universal counterexample at alpha=0.6") {
    auto res =
        check_ifc(MapSpec::radial_normalize(2), kTheta, nrm, nrm, 1.0, 0.6, fast_options());
    REQUIRE_FALSE(res.positive);
    REQUIRE_FALSE(res.counterexample.empty());
    CHECK(res.counterexample_universal);
    const Vector* x = res.counterexample.find("x");
    REQUIRE(x != nullptr);
    // any nonzero x maps to the unit sphere: mu_V = 0.5 < 0.6
    CHECK(nrm.mu(MapSpec::radial_normalize(2)(*x), 1.0) == Catch::Approx(0.5));
  }

  SECTION("the section-2 compatibility form flips the bounds") {
    ContinuitySearchOptions opt = fast_options();
    opt.section2_form = true;
    auto res =
        check_ifc(MapSpec::componentwise_scale(2, 2.0), kTheta, nrm, nrm, 1.0, 0.5, opt);
    CHECK(res.positive);
    CHECK(res.note.find("1-beta") != std::string::npos);
  }

  SECTION("parameter validation") {
    CHECK_THROWS_AS(check_ifc(MapSpec::identity(2), kTheta, nrm, nrm, 0.0, 0.5),
                    domain_error);
    CHECK_THROWS_AS(check_ifc(MapSpec::identity(2), kTheta, nrm, nrm, 1.0, 1.0),
                    domain_error);
  }
}

TEST_CASE("cross-theorem consistency over the map corpus") {
  GifPsiNorm nrm = make_standard();
  auto family = converging_family(kTheta);
  ContinuitySearchOptions opt = fast_options();

  for (const auto& m : builtin_map_corpus()) {
    INFO(m.id);
    auto iff = check_ifc_iff_sequential(m.map, kTheta, nrm, nrm, family, {0.5, 1.0},
                                        {0.4, 0.6}, kR, kT, 500, opt);
    CHECK_FALSE(iff.violation);
    CHECK(iff.sequential_positive == m.continuous_at_theta);
    auto strong = check_strong_implies_sequential(m.map, kTheta, nrm, nrm, family,
                                                  {0.5, 1.0}, kR, kT, 500, opt);
    CHECK_FALSE(strong.violation);
  }
}

TEST_CASE("compact image battery") {
  GifPsiNorm nrm = make_standard();
  auto ball = PointSetSpec::closed_ball(kTheta, 1.0);
  auto probe1 = SequenceSpec::oscillating({1.0, 0.0}, {-1.0, 0.0}, {-1.0, 0.0}, {1.0, 0.0});
  auto probe2 = SequenceSpec::affine_decay(kTheta, {0.5, 0.5});

  SECTION("f(x) = 2x maps the unit ball battery into the radius-2 ball") {
    auto rep = check_compact_image(MapSpec::componentwise_scale(2, 2.0), nrm, nrm, ball,
                                   {probe1, probe2}, 1000, kR, kT);
    CHECK(rep.compatible);
    for (const auto& p : rep.probes) CHECK(p.image_limit_in_set);
  }

  SECTION("identity on a finite list") {
    auto list = PointSetSpec::finite_list({kTheta, {1.0, 0.0}});
    auto rep = check_compact_image(MapSpec::identity(2), nrm, nrm, list,
                                   {SequenceSpec::constant({1.0, 0.0})}, 200, kR, kT);
    CHECK(rep.compatible);
  }

  SECTION("rotation + shift keeps subsequence limits in the translated ball") {
    auto rot = MapSpec::affine({{0.0, -1.0}, {1.0, 0.0}}, {1.0, 0.0});
    auto rep = check_compact_image(rot, nrm, nrm, ball, {probe1, probe2}, 1000, kR, kT);
    CHECK(rep.compatible);
  }

  SECTION("nonlinear maps over balls are unsupported, not guessed") {
    CHECK_THROWS_AS(check_compact_image(MapSpec::componentwise_square(2), nrm, nrm, ball,
                                        {probe2}, 500, kR, kT),
                    unsupported_error);
  }

  SECTION("singular matrices cannot pull back membership") {
    auto collapse = MapSpec::linear({{1.0, 0.0}, {0.0, 0.0}});
    CHECK_THROWS_AS(
        check_compact_image(collapse, nrm, nrm, ball, {probe2}, 500, kR, kT),
        unsupported_error);
  }
}
