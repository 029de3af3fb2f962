#include <doctest.h>

#include "test_util.hpp"
#include "unif/abelian_metrics.hpp"

using namespace unif;

namespace {
void require_rows(const CheckTable& t, bool expect_display_failures) {
  for (const auto& r : t) {
    CAPTURE(r.name);
    CAPTURE(r.residual);
    if (r.informational) continue;
    bool displayed = r.name.find("as displayed") != std::string::npos ||
                     r.name.find("display vs pullback (best D") != std::string::npos;
    if (displayed && expect_display_failures)
      CHECK_FALSE(r.pass());
    else
      CHECK(r.pass());
  }
}
}  // namespace

TEST_CASE("cover coordinates satisfy the Burnside curve") {
  for (auto tau : seeded_points(5, 5, standard_box)) {
    auto c = cover_coords(tau);
    CHECK(rel(c.y * c.y, c.x * c.x * c.x * c.x * c.x - c.x) < 1e-12);
  }
}

TEST_CASE("cover relations and holomorphic differentials") {
  for (auto tau : seeded_points(6, 4, standard_box)) {
    require_rows(cover_relations(tau), false);
    require_rows(holo_differential_check(tau), false);
  }
}

TEST_CASE("torus parameters") {
  for (int s : {1, -1}) {
    const auto& p = torus_params(s);
    CHECK(rel(p.g2(), 5.0 / 3.0) < 1e-13);
    CHECK(rel(p.g3(), -s * 7 * std::sqrt(2.0) / 27) < 1e-13);
  }
  CHECK_THROWS_AS(torus_params(0), DomainError);
}

TEST_CASE("alpha branches") {
  cplx tau(0.1, 1.0);
  auto a = alpha_pm(tau);
  auto& p = torus_params(1);
  auto v = wp(a.alpha_plus, p);
  CHECK(rel(v.p, torus_argument(1, tau).p) < 1e-12);
  CHECK(rel(v.dp, torus_dp_of_xy(1, a.x, a.y)) < 1e-10);
  cplx near = alpha_near(1, tau, a.alpha_plus + 2.0 * p.omega1());
  CHECK(std::abs(near - a.alpha_plus - 2.0 * p.omega1()) < 1e-10);
}

TEST_CASE("I1/I2 identities: the displayed form fails, the corrected one holds") {
  for (auto tau : seeded_points(8, 3, standard_box)) require_rows(mero_identity_check(tau), true);
}

TEST_CASE("metric densities") {
  cplx tau(0.3, 1.7);
  CHECK(metric_density(MetricModel::HalfPlane, 1.0, tau).density == doctest::Approx(1 / (1.7 * 1.7)));
  CHECK_THROWS_AS(metric_density(MetricModel::HalfPlane, 1.0, cplx(0.3, -1.0)), DomainError);
  CHECK_THROWS_AS(metric_density(MetricModel::Disc, 1.0, cplx(1.2, 0.0)), DomainError);
  auto s = metric_density(MetricModel::Disc, 1.0, cplx(0.3, 0.1));
  CHECK(std::exp(2 * s.U) == doctest::Approx(s.density));
}

TEST_CASE("Liouville equation for the Burnside x-metric") {
  for (auto x : seeded_points(2, 6, Box{0.4, 0.8, 0.05, 0.35})) {
    CAPTURE(x);
    CHECK(liouville_residual(x) < 1e-5);
  }
  CHECK(all_pass(liouville_check({cplx(0.5, 0.2)})));
}

TEST_CASE("Burnside surface metric equals the pullback on every sheet") {
  for (cplx y : {cplx(0.5, 0.2), cplx(0.9, -0.4), cplx(0.2, 0.7)}) {
    auto m = burnside_surface_metric(y);
    REQUIRE(m.sheets.size() == 5);
    CHECK(m.residual < 1e-6);
    for (double d : m.display) CHECK(d > 0);
    for (auto x : m.sheets) CHECK(std::abs(x * x * x * x * x - x - y * y) < 1e-12);
  }
}

TEST_CASE("torus metric: displayed closed form fails, derived form holds") {
  for (auto tau : seeded_points(12, 3, standard_box)) require_rows(torus_metric_check(tau), true);
}
