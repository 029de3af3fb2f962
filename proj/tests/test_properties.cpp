// Seeded property tests: each case draws its own grid from a fixed seed.
#include <doctest.h>

#include "test_util.hpp"
#include "unif/abelian_metrics.hpp"
#include "unif/curves.hpp"
#include "unif/inversion.hpp"

using namespace unif;

TEST_CASE("theta3 under tau -> -1/tau") {
  for (auto t : seeded_points(101, 40, standard_box)) {
    cplx lhs = theta3(-1.0 / t), rhs = std::sqrt(-I * t) * theta3(t);
    CHECK(rel(lhs, rhs) < 1e-12);
  }
}

TEST_CASE("eta under tau -> -1/tau and tau -> tau + 1") {
  for (auto t : seeded_points(102, 40, standard_box)) {
    CHECK(rel(dedekind_eta(-1.0 / t), std::sqrt(-I * t) * dedekind_eta(t)) < 1e-12);
    CHECK(rel(dedekind_eta(t + 1.0), std::exp(I * pi / 12.0) * dedekind_eta(t)) < 1e-13);
  }
}

TEST_CASE("Klein J is invariant under the coset representatives") {
  for (auto t : seeded_points(103, 10, standard_box)) {
    cplx j = klein_j(t);
    for (const auto& m : gamma4_coset_reps()) CHECK(rel(klein_j(mobius(m, t)), j) < 1e-9);
  }
}

TEST_CASE("chi_B is Gamma(4)-invariant under random words") {
  Lcg64 rng(104);
  const auto& V = burnside_tables().v.matrices;
  for (auto t : seeded_points(104, 10, standard_box)) {
    ProjMatrix w;
    for (int k = 0; k < 3; ++k) {
      auto m = V[static_cast<size_t>(rng.uniform() * V.size())];
      w = rng.uniform() < 0.5 ? w * m : w * m.inverse();
    }
    CHECK(membership(w, GroupId::Gamma4));
    cplx img = mobius(w, t);
    CHECK(rel(chi_b(img), chi_b(t)) < 1e-8);
  }
}

TEST_CASE("inversion round trip on seeded values") {
  for (auto a : seeded_points(105, 20, Box{-2, 2, -2, 2})) {
    auto r = invert_chi(a);
    REQUIRE(r.tau0.has_value());
    CHECK(std::abs(chi_b(*r.tau0) - a) < 1e-9 * std::max(1.0, std::abs(a)));
    CHECK(r.j_residual < 1e-8);
  }
}

TEST_CASE("quintic on seeded a with |a| <= 0.5") {
  for (auto z : seeded_points(106, 20, Box{-0.35, 0.35, -0.35, 0.35})) {
    auto s = quintic_solve(z);
    for (double r : s.poly_residuals) CHECK(r < 1e-10);
    CHECK(s.vieta < 1e-9);
    CHECK(s.theta_residual < 1e-10);
    CHECK(quintic_odd_symmetry(z) < 1e-9);
  }
}

TEST_CASE("curve residuals over several seeds") {
  for (std::uint64_t seed : {201, 202, 203}) {
    auto taus = seeded_points(seed, 8, standard_box);
    for (const auto& c : registry()) {
      CAPTURE(c.id);
      auto r = curve_residual(c.id, taus);
      if (r.used) CHECK(r.max_residual < 1e-10);
    }
  }
}

TEST_CASE("Weierstrass P periodicity on seeded points") {
  const auto& prm = torus_params(1);
  for (auto z : seeded_points(107, 20, Box{-0.4, 0.4, -0.4, 0.4})) {
    if (std::abs(z) < 0.05) continue;
    auto a = wp(z, prm), b = wp(z + 2.0 * prm.omega1() + 2.0 * prm.omega3(), prm);
    CHECK(rel(a.p, b.p) < 1e-10);
    CHECK(rel(a.dp * a.dp, 4.0 * a.p * a.p * a.p - prm.g2() * a.p - prm.g3()) < 1e-10);
  }
}

TEST_CASE("reduce_fundamental is idempotent") {
  for (auto t : seeded_points(108, 30, Box{-5, 5, 0.01, 3})) {
    auto r = reduce_fundamental(t);
    auto r2 = reduce_fundamental(r.tau0);
    CHECK(std::abs(r2.tau0 - r.tau0) < 1e-12);
  }
}

TEST_CASE("surface metric on seeded y") {
  for (auto y : seeded_points(109, 10, Box{0.1, 1.0, -0.8, 0.8})) CHECK(burnside_surface_metric(y).residual < 1e-6);
}
