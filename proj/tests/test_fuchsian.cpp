#include <doctest.h>

#include "oracle_values.hpp"
#include "test_util.hpp"
#include "unif/fuchsian.hpp"

using namespace unif;

TEST_CASE("meromorphic derivative of t4/t3 against mpmath") {
  using namespace unif::expr;
  for (const auto& r : oracle::chi_rows) {
    auto s = schwarzian_jet(t4() / t3(), r.tau);
    CHECK(rel(s.bracket, r.bracket) < 1e-11);
    auto q = q_catalogue("burnside");
    CHECK(rel(q.q(s.x), r.bracket) < 1e-11);
  }
}

TEST_CASE("every catalogue equation holds on the standard grid") {
  auto taus = seeded_points(1, 20, standard_box);
  for (const auto& id : q_catalogue_ids()) {
    CAPTURE(id);
    auto r = verify_fuchsian(id, taus);
    CHECK(r.used > 0);
    CHECK(r.max_residual < 1e-9);
  }
}

TEST_CASE("catalogue covers the required equations") {
  auto ids = q_catalogue_ids();
  for (const char* want : {"burnside", "heun", "fermat:4", "fermat:8", "mixed_lambda", "legendre"})
    CHECK(std::find(ids.begin(), ids.end(), want) != ids.end());
  CHECK_THROWS_AS(q_catalogue("nonexistent"), DomainError);
}

TEST_CASE("Burnside Q has exponent -1/2 poles at the branch points") {
  auto q = q_catalogue("burnside");
  for (cplx e : {cplx(0), cplx(1), cplx(-1), I, -I}) {
    cplx x = e + 1e-5;
    CHECK(std::abs((x - e) * (x - e) * q.q(x) - q.pole_coefficient) < 1e-3);
  }
  CHECK(q.pole_coefficient == -0.5);
}

TEST_CASE("change of variable law and its consequences") {
  auto r = change_of_var_check(seeded_points(2, 10, standard_box));
  CHECK(r.quartic_law < 1e-9);
  CHECK(r.quartic_legendre < 1e-9);
  CHECK(r.moebius_law < 1e-9);
  CHECK(r.cocycle < 1e-9);
  CHECK(r.lemma < 1e-9);
  CHECK(std::abs(r.y_pole_coefficient + 0.375) < 1e-6);
}

TEST_CASE("parabolic builders reproduce Burnside") {
  std::vector<cplx> e{0, 1, -1, I, -I};
  auto q = parabolic_q(e, {cplx(0)});
  auto b = q_catalogue("burnside");
  for (cplx x : {cplx(0.3, 0.2), cplx(-0.7, 0.5)}) CHECK(rel(q.q(x), b.q(x)) < 1e-13);
  CHECK_THROWS_AS(parabolic_q({0, 1}, {}), DomainError);
}

TEST_CASE("linear equation solutions") {
  cplx tau(0.1, 1.1);
  auto p = psi("burnside_tau", tau);
  CHECK(p.ode_residual < 1e-8);
  CHECK(std::abs(p.wronskian - 1.0) < 1e-10);
  CHECK(p.normalization_residual < 1e-10);
  CHECK(rel(p.psi2 / p.psi1, tau) < 1e-14);
  auto l = psi("legendre", tau);
  CHECK(l.ode_residual < 1e-8);
  auto x = psi("burnside_x", cplx(0.5, 0.2));
  CHECK(x.ode_residual < 1e-6);
  CHECK_THROWS_AS(psi("none", tau), DomainError);
}

TEST_CASE("modular differential equations") {
  for (auto tau : seeded_points(4, 5, standard_box))
    for (const auto& [name, r] : modular_ode_residuals(tau)) {
      CAPTURE(name);
      CHECK(r < 1e-8);
    }
}

TEST_CASE("critical points are reported") {
  using namespace unif::expr;
  // x = t3^0 is constant, so x_tau = 0
  CHECK_THROWS_AS(schwarzian_jet(t3() / t3(), cplx(0, 1)), NumericError);
}
