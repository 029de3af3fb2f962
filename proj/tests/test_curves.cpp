#include <doctest.h>

#include "test_util.hpp"
#include "unif/curves.hpp"
#include "unif/elliptic.hpp"

using namespace unif;

TEST_CASE("polynomial parsing and printing") {
  auto f = Poly2::parse("y^2 - x^5 + x");
  CHECK(f.deg_x() == 5);
  CHECK(f.deg_y() == 2);
  CHECK(f.str() == "y^2 - x^5 + x");
  CHECK(std::abs(f.eval(2.0, 3.0) - cplx(9 - 32 + 2)) < 1e-15);
  auto g = Poly2::parse("3/2*x*y^2 - 16 x^3 y");
  CHECK(std::abs(g.eval(1.0, 2.0) - cplx(6 - 32)) < 1e-14);
  CHECK_THROWS_AS(Poly2::parse("y^^2"), DomainError);
  CHECK((f - f).terms().empty());
  CHECK(pow(Poly2::parse("x + y"), 2).str() == Poly2::parse("x^2 + 2*x*y + y^2").str());
}

TEST_CASE("registry size and genera") {
  const auto& reg = registry();
  CHECK(reg.size() >= 12);
  CHECK(*find_curve("burnside").genus == 2);
  CHECK(*find_curve("fermat8").genus == 21);
  CHECK_THROWS_AS(find_curve("nope"), DomainError);
}

TEST_CASE("every registered parametrization satisfies its curve") {
  auto taus = seeded_points(7, 20, standard_box);
  for (const auto& c : registry()) {
    CAPTURE(c.id);
    auto r = curve_residual(c.id, taus);
    CHECK(r.used > 0);
    CHECK(r.max_residual < 1e-10);
  }
}

TEST_CASE("Weierstrass forms of the Burnside curve") {
  auto f = burnside_wp_forms(cplx(0.2, 1.1));
  CHECK(f.curve < 1e-10);
  CHECK(f.theta_form < 1e-10);
  CHECK(f.phi_theta < 1e-10);
  CHECK(f.involution < 1e-10);
}

TEST_CASE("k-lambda relations in the principal domain") {
  CHECK(in_principal_domain(cplx(0, 1)));
  CHECK_FALSE(in_principal_domain(cplx(0.5, 0.3)));
  auto r = kl_relation_check(cplx(0.05, 0.9));
  CHECK(r.elliptic < 1e-12);
  CHECK(r.hypergeometric < 1e-12);
  CHECK(r.kappa_mu_curve < 1e-12);
  CHECK(r.kl3_curve < 1e-12);
  // a tiny lambda used to cost digits in K'
  CHECK(kl_relation_check(cplx(-0.0135755, 2.40689)).elliptic < 1e-13);
  CHECK_THROWS_AS(kl_relation_check(cplx(0.4, 0.3)), DomainError);
}

TEST_CASE("quartic model of the level-3 curve") {
  auto r = kl3_j_check(seeded_points(3, 5, standard_box));
  CHECK(r.j_exact == Rational(2197, 972));
  CHECK(std::abs(r.j_weierstrass - 2197.0 / 972.0) < 1e-11);
  CHECK(r.model_residual < 1e-10);
}

TEST_CASE("J bridge") {
  for (auto t : seeded_points(9, 10, standard_box)) CHECK(j_bridge_residual(t) < 1e-9);
}

TEST_CASE("discriminants in y") {
  auto d = discriminant_y(Poly2::parse("y^2 - x^5 + x"));
  CHECK(d.str() == "x^5 - x");
  CHECK(d.degree() == 5);
  CHECK(d.constant_leading);
  // y^3 - 3y + x: discriminant 27(4 - x^2), primitive form 4 - x^2 up to sign
  auto c = discriminant_y(Poly2::parse("y^3 - 3*y + x"));
  CHECK(c.degree() == 2);
  CHECK(c.coeffs[2] > 0);
  CHECK(c.coeffs[1] == 0);
  CHECK(c.coeffs[0] == -4 * c.coeffs[2]);
  auto n = discriminant_y(Poly2::parse("x*y^2 + y + 1"));
  CHECK_FALSE(n.constant_leading);
  CHECK_THROWS_AS(discriminant_y(Poly2::parse("x^2 + 1")), DomainError);
}
