#include "unif/numerics.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace unif {

void Tolerances::validate() const {
  if (!(identity_tol > 0) || !(derivative_tol > 0) || !(root_tol > 0) ||
      !(series_eps > 0))
    throw DomainError("tolerances must be strictly positive");
}

const Tolerances& default_tolerances() {
  static const Tolerances t{};
  return t;
}

bool all_pass(const CheckTable& t) {
  return std::all_of(t.begin(), t.end(), [](const CheckRow& r) { return r.informational || r.pass(); });
}

bool is_finite(cplx z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); }

cplx checked(cplx z, const char* what) {
  if (!is_finite(z)) throw NumericError(std::string("non-finite value in ") + what);
  return z;
}

namespace {

// O(h^2) central stencils for orders 1..3.
cplx central(const CFun& f, cplx t, int order, double h, cplx f0) {
  auto v = [&](double s) { return checked(f(t + s), "fd_jet"); };
  switch (order) {
    case 1:
      return (v(h) - v(-h)) / (2 * h);
    case 2:
      return (v(h) - 2.0 * f0 + v(-h)) / (h * h);
    case 3:
      return (v(2 * h) - 2.0 * v(h) + 2.0 * v(-h) - v(-2 * h)) / (2 * h * h * h);
    default:
      throw DomainError("fd_jet order must be 1..3");
  }
}

}  // namespace

std::vector<cplx> fd_jet(const CFun& f, cplx tau, int order, double h) {
  if (!(h > 0) || h >= tau.imag() / 10)
    throw DomainError("fd_jet step must satisfy 0 < h < Im(tau)/10");
  return fd_jet_plane(f, tau, order, h);
}

std::vector<cplx> fd_jet_plane(const CFun& f, cplx tau, int order, double h) {
  if (order < 1 || order > 3) throw DomainError("fd_jet order must be 1..3");
  if (!(h > 0)) throw DomainError("fd_jet step must be positive");
  cplx f0 = checked(f(tau), "fd_jet");
  std::vector<cplx> out{f0};
  for (int k = 1; k <= order; ++k) {
    cplx d1 = central(f, tau, k, h, f0);
    cplx d2 = central(f, tau, k, h / 2, f0);
    out.push_back((4.0 * d2 - d1) / 3.0);
  }
  return out;
}

cplx poly_eval(const std::vector<cplx>& c, cplx x) {
  cplx r{};
  for (const auto& a : c) r = r * x + a;
  return r;
}

std::vector<cplx> poly_derivative(const std::vector<cplx>& c) {
  std::vector<cplx> d;
  int n = static_cast<int>(c.size()) - 1;
  for (int i = 0; i < n; ++i) d.push_back(c[i] * double(n - i));
  return d;
}

std::vector<cplx> poly_roots(const std::vector<cplx>& coeffs, double tol, int max_iter) {
  if (coeffs.size() < 2) throw DomainError("poly_roots: degree must be >= 1");
  if (coeffs[0] == cplx{}) throw DomainError("poly_roots: zero leading coefficient");
  for (const auto& a : coeffs)
    if (!is_finite(a)) throw DomainError("poly_roots: non-finite coefficient");
  const int n = static_cast<int>(coeffs.size()) - 1;
  std::vector<cplx> c(coeffs);
  for (auto& a : c) a /= coeffs[0];
  // trailing zeros are exact roots at 0
  int zeros = 0;
  while (n - zeros > 0 && c[n - zeros] == cplx{}) ++zeros;
  std::vector<cplx> p(c.begin(), c.end() - zeros);
  const int m = n - zeros;
  std::vector<cplx> z;
  if (m > 0) {
    double bound = 0;
    for (int i = 1; i <= m; ++i) bound = std::max(bound, std::abs(p[i]));
    // geometric-mean radius is a better start than the Cauchy bound itself
    double radius = std::pow(std::abs(p[m]), 1.0 / m);
    radius = std::clamp(radius, 1e-3, 1.0 + bound);
    for (int k = 0; k < m; ++k)
      z.push_back(std::polar(radius, 2 * pi * k / m + 0.4));
    auto dp = poly_derivative(p);
    bool done = false;
    for (int it = 0; it < max_iter && !done; ++it) {
      done = true;
      for (int k = 0; k < m; ++k) {
        cplx pv = poly_eval(p, z[k]);
        if (pv == cplx{}) continue;
        cplx ratio = pv / poly_eval(dp, z[k]);
        cplx s{};
        for (int j = 0; j < m; ++j)
          if (j != k) s += 1.0 / (z[k] - z[j]);
        cplx w = ratio / (1.0 - ratio * s);
        if (!is_finite(w)) w = ratio;
        z[k] -= w;
        if (std::abs(w) > tol * std::max(1.0, std::abs(z[k]))) done = false;
      }
    }
    if (!done) {
      // accept when every residual is at rounding level anyway
      double scale = 0;
      for (const auto& a : p) scale += std::abs(a);
      for (auto r : z) {
        double mag = std::max(1.0, std::pow(std::abs(r), m));
        if (std::abs(poly_eval(p, r)) > 1e-11 * scale * mag)
          throw ConvergenceError("poly_roots: Aberth iteration did not converge");
      }
    }
  }
  for (int i = 0; i < zeros; ++i) z.push_back(cplx{});
  return z;
}

NewtonResult newton_solve(const CFun& f, const CFun& df, cplx z0, double tol,
                          int max_iter) {
  cplx z = z0;
  for (int it = 1; it <= max_iter; ++it) {
    cplx fz = checked(f(z), "newton_solve f");
    cplx d = checked(df(z), "newton_solve df");
    if (std::abs(d) < 1e-300) throw ConvergenceError("newton_solve: derivative underflow");
    cplx step = fz / d;
    z -= step;
    if (!is_finite(z)) throw ConvergenceError("newton_solve: diverged");
    if (std::abs(step) <= 1e-15 * std::max(1.0, std::abs(z))) {
      if (std::abs(f(z)) <= tol) return {z, it};
    }
    if (std::abs(f(z)) <= tol * 1e-3) return {z, it};
  }
  if (std::abs(f(z)) <= tol) return {z, max_iter};
  std::ostringstream os;
  os << "newton_solve: iteration cap " << max_iter << " reached, |f| = " << std::abs(f(z));
  throw ConvergenceError(os.str());
}

double Lcg64::uniform() {
  std::uint64_t x = eng_();
  return static_cast<double>(x >> 11) * 0x1.0p-53;
}

std::vector<cplx> seeded_points(std::uint64_t seed, int n, const Box& box) {
  Lcg64 g(seed);
  std::vector<cplx> out;
  out.reserve(n);
  for (int i = 0; i < n; ++i) {
    double re = g.uniform(box.re_lo, box.re_hi);
    double im = g.uniform(box.im_lo, box.im_hi);
    out.emplace_back(re, im);
  }
  return out;
}

}  // namespace unif
