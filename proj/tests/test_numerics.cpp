#include <doctest.h>

#include <cmath>

#include "test_util.hpp"

using namespace unif;

TEST_CASE("Lcg64 follows the documented recurrence") {
  std::uint64_t x = 42;
  Lcg64 g(42);
  for (int i = 0; i < 5; ++i) {
    x = 6364136223846793005ULL * x + 1442695040888963407ULL;
    double want = static_cast<double>(x >> 11) * 0x1.0p-53;
    CHECK(g.uniform() == want);
  }
}

TEST_CASE("seeded_points stay in the box and repeat for equal seeds") {
  auto a = seeded_points(7, 50, identity_box), b = seeded_points(7, 50, identity_box);
  CHECK(a == b);
  CHECK(a != seeded_points(8, 50, identity_box));
  for (auto z : a) {
    CHECK(z.real() >= identity_box.re_lo);
    CHECK(z.real() < identity_box.re_hi);
    CHECK(z.imag() >= identity_box.im_lo);
    CHECK(z.imag() < identity_box.im_hi);
  }
}

TEST_CASE("CheckRow gating") {
  CheckRow ok{"a", 1e-12, 1e-10, ""}, bad{"b", 1.0, 1e-10, ""}, nan{"c", NAN, 1.0, ""};
  CHECK(ok.pass());
  CHECK_FALSE(bad.pass());
  CHECK_FALSE(nan.pass());
  CHECK(all_pass({ok}));
  CHECK_FALSE(all_pass({ok, bad}));
  bad.informational = true;
  CHECK(all_pass({ok, bad}));
}

TEST_CASE("poly_roots on a quintic") {
  cplx a(0.3, 0.2);
  std::vector<cplx> c{1, 0, 0, 0, -1, a};
  auto r = poly_roots(c);
  REQUIRE(r.size() == 5);
  for (auto x : r) CHECK(std::abs(poly_eval(c, x)) < 1e-13);
  auto d = poly_derivative(c);
  CHECK(d.size() == 5);
  CHECK(d[0] == cplx(5));
}

TEST_CASE("newton_solve finds sqrt 2") {
  auto r = newton_solve([](cplx z) { return z * z - 2.0; }, [](cplx z) { return 2.0 * z; }, 1.0);
  CHECK(std::abs(r.z - std::sqrt(2.0)) < 1e-14);
}

TEST_CASE("fd_jet matches an entire function and checks its step") {
  auto f = [](cplx t) { return std::exp(I * t); };
  cplx tau(0.2, 1.1);
  auto d = fd_jet(f, tau, 3, 0.01);
  for (int k = 1; k <= 3; ++k) CHECK(std::abs(d[k] - std::pow(I, k) * f(tau)) < 1e-8);
  CHECK_THROWS_AS(fd_jet(f, tau, 3, 0.5), DomainError);
  auto p = fd_jet_plane([](cplx z) { return z * z * z; }, cplx(-0.3, 0.0), 2, 0.01);
  CHECK(std::abs(p[2] - 6.0 * cplx(-0.3)) < 1e-9);
}

TEST_CASE("checked rejects non-finite values") {
  CHECK_THROWS_AS(checked(cplx(NAN, 0), "x"), NumericError);
  CHECK(checked(cplx(1, 2), "x") == cplx(1, 2));
}
