#include <doctest.h>

#include <set>

#include "test_util.hpp"
#include "unif/groups.hpp"
#include "unif/polygon.hpp"

using namespace unif;

TEST_CASE("projective normalization and products") {
  ProjMatrix m(-1, 2, -3, 5);
  CHECK(m == ProjMatrix(1, -2, 3, -5));
  CHECK(m.a() == 1);
  CHECK(m * m.inverse() == ProjMatrix{});
  CHECK_THROWS(ProjMatrix(1, 1, 1, 1));
  cplx t(0.2, 0.7);
  CHECK(std::abs(mobius(m, t) - (t - 2.0) / (3.0 * t - 5.0)) < 1e-15);
}

TEST_CASE("membership tables") {
  CHECK(membership(ProjMatrix(1, 4, 0, 1), GroupId::Gamma4));
  CHECK_FALSE(membership(ProjMatrix(1, 2, 0, 1), GroupId::Gamma4));
  CHECK(membership(ProjMatrix(1, 2, 0, 1), GroupId::Gamma2));
  CHECK(membership(ProjMatrix(1, 8, 0, 1), GroupId::Burnside));
  CHECK_FALSE(membership(ProjMatrix(1, 4, 0, 1), GroupId::Burnside));
  CHECK(membership(ProjMatrix(-1, 4, 4, -17), GroupId::Gamma4));
  CHECK(group_from_name("burnside") == GroupId::Burnside);
  CHECK_THROWS_AS(group_from_name("gamma7"), DomainError);
}

TEST_CASE("Burnside generator tables") {
  const auto& t = burnside_tables();
  CHECK(t.v.matrices.size() == 5);
  CHECK(t.t.matrices.size() == 9);
  CHECK(t.relations.size() == 9);
  for (const auto& r : t.relations) {
    CAPTURE(r.text);
    CHECK(r.holds);
  }
  for (const auto& m : t.v.matrices) CHECK(membership(m, GroupId::Gamma4));
  for (const auto& m : t.t.matrices) CHECK(membership(m, GroupId::Burnside));
}

TEST_CASE("Nielsen-Schreier") {
  CHECK(nielsen_schreier(5, 2) == 9);
  CHECK(nielsen_schreier(2, 6) == 7);
}

TEST_CASE("Gamma(4) cosets") {
  const auto& reps = gamma4_coset_reps();
  REQUIRE(reps.size() == 24);
  for (size_t i = 0; i < reps.size(); ++i)
    for (size_t j = i + 1; j < reps.size(); ++j) CHECK_FALSE(congruent(reps[i], reps[j], 4));
  CHECK(coset_orbit(cplx(0.1, 1.3)).size() == 24);
}

TEST_CASE("reduction to the fundamental domain") {
  for (auto t : seeded_points(11, 20, Box{-3, 3, 0.05, 0.5})) {
    auto r = reduce_fundamental(t);
    CHECK(std::abs(r.tau0.real()) <= 0.5 + 1e-12);
    CHECK(std::abs(r.tau0) >= 1 - 1e-12);
    CHECK(std::abs(mobius(r.m, t) - r.tau0) < 1e-10);
  }
}

TEST_CASE("ten-gon of genus two data") {
  auto p = default_polygon(2);
  CHECK(p.sides.size() == 10);
  CHECK(p.c() == 6);
  CHECK(p.s() == 5);
  CHECK(genus_of(p, false) == 0);
  CHECK(genus_of(p, true) == 2);
  CHECK(p.closure_residual < 1e-9);
  for (const auto& pr : p.pairings) CHECK(std::abs(pr.m.trace() * pr.m.trace() - 4) < 1e-12);
  CHECK(p.vertex_labels.front() == "w1");
  CHECK(p.vertices.back().infinite);
}

TEST_CASE("doubled polygon") {
  auto d = doubled_polygon(default_polygon(2));
  CHECK(d.sides.size() == 18);
  CHECK(d.s() == 9);
  CHECK(genus_of(d, true) == 2);
  CHECK_THROWS_AS(doubled_polygon(d), DomainError);
}

TEST_CASE("genus from Euler characteristic for g = 1..5") {
  for (int g = 1; g <= 5; ++g) {
    auto p = default_polygon(g);
    CHECK(static_cast<int>(p.sides.size()) == 4 * g + 2);
    CHECK(genus_of(p, true) == g);
    CHECK(static_cast<int>(doubled_polygon(p).sides.size()) == 8 * g + 2);
  }
  CHECK(free_parameter_count(2) == 6);
}

TEST_CASE("polygon with other data") {
  std::vector<BoundaryPoint> om{BoundaryPoint::at(-1), BoundaryPoint::at(0), BoundaryPoint::at(1),
                                BoundaryPoint::at(2.5), BoundaryPoint::at(4), BoundaryPoint::inf()};
  std::vector<double> eps{0.4, 1.9, 3.1, 5.0};
  // the chain eps4 -> eps3 -> ... -> omega1 -> eps4 closes for any ordered data
  auto p = build_polygon(om, eps);
  CHECK(p.c() == 6);
  CHECK(genus_of(p, true) == 2);
}

TEST_CASE("polygon preconditions") {
  std::vector<BoundaryPoint> om{BoundaryPoint::at(-0.5), BoundaryPoint::at(0), BoundaryPoint::at(1),
                                BoundaryPoint::at(2), BoundaryPoint::at(3), BoundaryPoint::inf()};
  CHECK_THROWS_AS(build_polygon(om, {0.5, 1.5, 2.5}), DomainError);
  CHECK_THROWS_AS(build_polygon(om, {0.5, 2.5, 1.5, 3.5}), DomainError);
  om[2] = BoundaryPoint::inf();
  CHECK_THROWS_AS(build_polygon(om, {0.5, 1.5, 2.5, 3.5}), DomainError);
  CHECK_THROWS_AS(default_polygon(0), DomainError);
  CHECK_THROWS_AS(make_parabolic(BoundaryPoint::at(0), 1, 2), DomainError);
}

TEST_CASE("parabolic maps") {
  auto m = make_parabolic(BoundaryPoint::at(1), 1.5, 0.5);
  CHECK(std::abs(m.trace() - 2) < 1e-12);
  auto img = m.apply(BoundaryPoint::at(1.5));
  CHECK(std::abs(img.x - 0.5) < 1e-12);
  CHECK(m.apply(BoundaryPoint::at(1)).same(BoundaryPoint::at(1)));
}

TEST_CASE("disc model") {
  for (double x : {-3.0, -0.5, 0.0, 1.0, 7.0}) CHECK(std::abs(std::abs(disc_map(BoundaryPoint::at(x))) - 1) < 1e-12);
  CHECK(std::abs(disc_map(BoundaryPoint::inf()) - I) < 1e-15);
  CHECK(std::abs(disc_map(cplx(1, 1))) < 1e-15);
  // the geodesic through 1 + i maps to a diameter
  CHECK(arc_geometry(Side{BoundaryPoint::at(0), BoundaryPoint::at(2)}).disc_line);
  auto g = arc_geometry(Side{BoundaryPoint::at(0), BoundaryPoint::at(1)});
  CHECK_FALSE(g.line);
  CHECK(g.center == doctest::Approx(0.5));
  CHECK(g.radius == doctest::Approx(0.5));
  // the image circle is orthogonal to the unit circle
  CHECK(std::abs(std::norm(g.disc_center) - 1 - g.disc_radius * g.disc_radius) < 1e-12);
  CHECK(arc_geometry(Side{BoundaryPoint::at(3), BoundaryPoint::inf()}).line);
}
