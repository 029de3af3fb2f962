#include "unif/abelian_metrics.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "unif/theta_expr.hpp"

namespace unif {

namespace {

const double kR2 = std::sqrt(2.0);
const cplx kSqrtI = std::exp(I * pi / 4.0);  // sqrt(i)

using expr::Expr;

Expr big_x() { return expr::t4() / expr::t3(); }
Expr big_y() { return Expr(4.0 * I) * pow(expr::eta(Affine{2, 0}), 3) / pow(expr::t3(), 3); }
Expr cover_x() {
  const Affine h{1, Rational(1, 2)};
  return expr::t3(h) / expr::t4(h);
}
Expr cover_y() { return Expr(-2.0 * kR2) * big_y() / pow(big_x() - Expr(I), 3); }

double rel(cplx a, cplx b) { return std::abs(a - b) / std::max(1.0, std::abs(b)); }

CheckRow row(std::string name, double residual, double tol, std::string note = "", bool info = false) {
  CheckRow r{std::move(name), residual, tol, std::move(note)};
  r.informational = info;
  return r;
}

std::string sign_name(int s) { return s > 0 ? "+" : "-"; }

void check_sign(int s) {
  if (s != 1 && s != -1) throw DomainError("torus sign must be +1 or -1");
}

// |conj(K(m)) K'(m)| real part, modulus m
double re_kkp(cplx m) { return (std::conj(ellip_K(m)) * ellip_Kp(m)).real(); }

// density of the Burnside x-metric without the Psi normalization
double x_density(cplx x) {
  double r = re_kkp(x * x);
  return pi * pi / (std::norm(std::pow(x, 5) - x) * r * r);
}

}  // namespace

CoverCoords cover_coords(TauPoint tau) {
  static const Expr xe = cover_x(), ye = cover_y();
  Jet jx = xe.jet(tau, 1);
  return {jx[0], ye(tau), jx[1]};
}

const WeierstrassParams& torus_params(int s) {
  check_sign(s);
  static const WeierstrassParams plus = WeierstrassParams::from_invariants(5.0 / 3, -7 * kR2 / 27);
  static const WeierstrassParams minus = WeierstrassParams::from_invariants(5.0 / 3, 7 * kR2 / 27);
  return s > 0 ? plus : minus;
}

cplx torus_p_of_x(int s, cplx x) {
  check_sign(s);
  return (1 + s * kR2) * (1.0 - I) * x / ((x - I) * (x + 1.0)) - (3 + s * kR2) / 6;
}

cplx torus_dp_of_xy(int s, cplx x, cplx y) {
  check_sign(s);
  cplx a = (x - I) * (x + 1.0);
  return 2.0 * std::sqrt(1.0 - I) / (kR2 - 2.0 * s) * (x + double(s) * I * kSqrtI) * y / (a * a);
}

TorusArgument torus_argument(int s, TauPoint tau) {
  check_sign(s);
  static const Expr base = pow(expr::t3(Affine{2, 0}), 2) / (Expr(2.0) * expr::t4() * expr::t3(Affine{4, 0}));
  Jet j = base.jet(tau, 1);
  const double c = 1 + s * kR2;
  return {c * j[0] - (3 + s * kR2) / 6, c * j[1]};
}

namespace {

cplx branch_alpha(int s, TauPoint tau) {
  const auto& prm = torus_params(s);
  auto cc = cover_coords(tau);
  cplx p = torus_argument(s, tau).p;
  cplx a = wp_inverse(p, prm);
  cplx w = torus_dp_of_xy(s, cc.x, cc.y);
  cplx dp = wp(a, prm).dp;
  return std::abs(dp + w) < std::abs(dp - w) ? -a : a;
}

}  // namespace

CoverPoint alpha_pm(TauPoint tau) {
  auto cc = cover_coords(tau);
  return {tau, cc.x, cc.y, branch_alpha(1, tau), branch_alpha(-1, tau)};
}

cplx alpha_near(int s, TauPoint tau, cplx ref) {
  cplx a = branch_alpha(s, tau);
  return ref + reduce_to_cell(a - ref, torus_params(s));
}

CheckTable cover_relations(TauPoint tau) {
  CheckTable t;
  auto cp = alpha_pm(tau);
  for (int s : {1, -1}) {
    const auto& prm = torus_params(s);
    cplx a = s > 0 ? cp.alpha_plus : cp.alpha_minus;
    auto v = wp(a, prm);
    cplx p = torus_argument(s, tau).p;
    cplx w = torus_dp_of_xy(s, cp.x, cp.y);
    std::string n = sign_name(s);
    t.push_back(row("P(alpha" + n + ") round trip", rel(v.p, p), 1e-9));
    t.push_back(row("cover relation " + n + ": theta argument = rational form in x", rel(p, torus_p_of_x(s, cp.x)), 1e-8));
    t.push_back(row("cover relation " + n + ": P'(alpha) = derivative form", rel(v.dp, w), 1e-8));
    t.push_back(row("cover relation " + n + ": derivative form squared = 4P^3 - g2 P - g3",
                    rel(w * w, 4.0 * p * p * p - prm.g2() * p - prm.g3()), 1e-8));
  }
  return t;
}

namespace {

double holo_residual(int s, TauPoint tau) {
  auto cc = cover_coords(tau);
  auto ta = torus_argument(s, tau);
  cplx dalpha = ta.dp / torus_dp_of_xy(s, cc.x, cc.y);
  cplx lhs = (cc.x - double(s) * I * kSqrtI) / cc.y * cc.dx;
  return rel(std::sqrt(1.0 + I) * dalpha, lhs);
}

}  // namespace

CheckTable holo_differential_check(TauPoint tau) {
  CheckTable t;
  static const Expr xe = big_x(), ye = big_y();
  Jet jx = xe.jet(tau, 1);
  cplx yv = ye(tau);
  cplx t3 = theta3(tau), t4 = theta4(tau), e3 = std::pow(dedekind_eta(2.0 * cplx(tau)), 3);
  auto cc = cover_coords(tau);
  for (int s : {1, -1}) {
    std::string n = sign_name(s);
    cplx ms = -double(s) * I * kSqrtI;  // -s i sqrt(i)
    cplx integrand_x = (jx[0] + ms) / yv * jx[1];
    cplx theta_form = -pi * (t4 + ms * t3) * e3;
    t.push_back(row("holomorphic integrand " + n + " in x = X equals the theta form", rel(integrand_x, theta_form), 1e-7));

    t.push_back(row("holomorphic differential " + n + ": x-integrand = sqrt(1+i) dalpha/dtau", holo_residual(s, tau),
                    1e-7, "dalpha/dtau = (dP/dtau)/P'"));

    // dalpha/dtau by differences on a continuous branch
    cplx a0 = branch_alpha(s, tau);
    auto af = [&](cplx z) { return alpha_near(s, TauPoint(z), a0); };
    const double h = 1e-3 * std::min(1.0, cplx(tau).imag());
    auto d = fd_jet(af, tau, 1, h);
    cplx lhs = (cc.x - double(s) * I * kSqrtI) / cc.y * cc.dx;
    t.push_back(row("holomorphic differential " + n + " with finite-difference dalpha/dtau",
                    rel(std::sqrt(1.0 + I) * d[1], lhs), 1e-7));

    t.push_back(row("holomorphic differential " + n + " at tau + 4", holo_residual(s, cplx(tau) + 4.0), 1e-7));

    cplx cross = std::sqrt(1.0 + I) * torus_argument(s, tau).dp / torus_dp_of_xy(s, cc.x, cc.y);
    t.push_back(row("theta form " + n + " = sqrt(1+i) dalpha/dtau", rel(cross, theta_form), 1e-7,
                    "no single x makes both forms hold", true));
  }
  return t;
}

CheckTable mero_identity_check(TauPoint tau) {
  CheckTable t;
  static const Expr xe = big_x(), ye = big_y();
  static const Expr i1_form = Expr(-(1.0 + I) * (pi / 32)) * expr::t4(Affine{2, 0}) *
                              pow(expr::t2(Affine{Rational(1, 2), 0}), 4) / expr::t4(Affine{1, Rational(1, 2)});
  static const Expr i2_form = Expr(-pi / 32) * expr::t4(Affine{2, 0}) *
                              pow(expr::t2(Affine{Rational(1, 2), 0}), 4) / expr::t3(Affine{4, 0});
  Jet jx = xe.jet(tau, 1);
  cplx yv = ye(tau);
  cplx X = jx[0];
  if (std::abs(X - I) < 1e-6 || std::abs(X + 1.0) < 1e-6) throw DomainError("mero_identity_check: x at a pole");
  t.push_back(row("I1 display integrand = dx/((x - i) y), x = X", rel(jx[1] / ((X - I) * yv), i1_form(tau)), 1e-8));
  t.push_back(row("I2 display integrand = dx/((x + 1) y), x = X", rel(jx[1] / ((X + 1.0) * yv), i2_form(tau)), 1e-8));

  auto cc = cover_coords(tau);
  cplx i1 = cc.dx / ((cc.x - I) * cc.y);
  cplx i2 = cc.dx / ((cc.x + 1.0) * cc.y);
  cplx da[2], p[2];
  for (int k = 0; k < 2; ++k) {
    int s = k == 0 ? 1 : -1;
    auto ta = torus_argument(s, tau);
    p[k] = ta.p;
    da[k] = ta.dp / torus_dp_of_xy(s, cc.x, cc.y);
  }
  const cplx r1i = std::sqrt(1.0 + I);
  for (int k = 0; k < 2; ++k) {
    int s = k == 0 ? 1 : -1;
    std::string n = sign_name(s);
    cplx u = (1.0 + double(s) * kSqrtI) / r1i;
    cplx v = (1.0 - double(s) * I * kSqrtI) / r1i;
    double a = (3 + 2 * s * kR2) / 6, b = (2 + s * kR2) / 2;
    // d/dtau [zeta(alpha) + a alpha - b alpha'] with zeta' = -P
    cplx rhs = (-p[k] + a) * da[k] - b * da[1 - k];
    t.push_back(row("I1/I2 linear identity " + n + " as displayed", rel(u * i1 + v * i2, rhs), 1e-6));
    t.push_back(row("I1/I2 linear identity " + n + " with -(1" + n + "sqrt i)/sqrt(1+i) on I1",
                    rel(-u * i1 + v * i2, rhs), 1e-6));

    // right side differentiated numerically on continuous branches
    const auto& prm = torus_params(s);
    cplx a0 = branch_alpha(s, tau), b0 = branch_alpha(-s, tau);
    auto f = [&](cplx z) {
      TauPoint tp(z);
      cplx al = alpha_near(s, tp, a0), be = alpha_near(-s, tp, b0);
      return wp(al, prm).zeta + a * al - b * be;
    };
    const double h = 1e-3 * std::min(1.0, cplx(tau).imag());
    auto d = fd_jet(f, tau, 1, h);
    t.push_back(row("I1/I2 linear identity " + n + ", corrected, finite-difference right side",
                    rel(-u * i1 + v * i2, d[1]), 1e-6));
  }
  return t;
}

MetricSample metric_density(MetricModel model, cplx psi1, cplx psi2, cplx coord) {
  if (!is_finite(psi1) || !is_finite(psi2)) throw DomainError("metric_density: non-finite Psi");
  MetricSample m;
  m.coord = coord;
  if (model == MetricModel::HalfPlane) {
    if (psi1 == cplx{} || !((psi2 / psi1).imag() > 0))
      throw DomainError("metric_density: Psi2/Psi1 is not in the upper half-plane");
    cplx d = std::conj(psi2) * psi1 - std::conj(psi1) * psi2;
    m.density = (-4.0 / (d * d)).real();
  } else {
    double d = std::norm(psi1) - std::norm(psi2);
    if (!(std::norm(psi2) < std::norm(psi1))) throw DomainError("metric_density: Psi2/Psi1 is not in the unit disc");
    m.density = 4.0 / (d * d);
  }
  m.U = 0.5 * std::log(m.density);
  return m;
}

MetricSample burnside_x_metric(cplx x) {
  cplx d = std::pow(x, 5) - x;
  if (std::abs(d) < 1e-12) throw DomainError("burnside_x_metric: x at a branch point");
  cplx pref = std::sqrt(I / pi) * std::sqrt(d);
  cplx p1 = pref * ellip_Kp(x * x), p2 = I * pref * ellip_K(x * x);
  // -Psi2 solves the same equation; it keeps the ratio in the upper half-plane
  if ((p2 / p1).imag() < 0) p2 = -p2;
  return metric_density(MetricModel::HalfPlane, p1, p2, x);
}

double liouville_residual(cplx x) {
  auto U = [](cplx z) { return burnside_x_metric(z).U; };
  const double h = 2e-3 * std::min(1.0, std::abs(x));
  auto lap = [&](double s) {
    return (U(x + s) + U(x - s) + U(x + I * s) + U(x - I * s) - 4 * U(x)) / (s * s);
  };
  double l = (4 * lap(h / 2) - lap(h)) / 3;  // = 4 U_{x x*}
  double rho = burnside_x_metric(x).density;
  return std::abs(l - rho) / rho;
}

CheckTable liouville_check(const std::vector<cplx>& xs) {
  CheckTable t;
  for (auto x : xs) {
    std::ostringstream os;
    os.precision(6);
    os << "Liouville 4U_{xx*} = exp(2U) at x = " << x.real() << (x.imag() < 0 ? "" : "+") << x.imag() << "i";
    t.push_back(row(os.str(), liouville_residual(x), 1e-5, "relative"));
  }
  return t;
}

SurfaceMetric burnside_surface_metric(cplx y) {
  SurfaceMetric sm;
  sm.y = y;
  if (std::abs(y) < 1e-8) throw DomainError("burnside_surface_metric: y at a branch value");
  auto roots = poly_roots({1, 0, 0, 0, -1, -y * y});
  std::sort(roots.begin(), roots.end(), [](cplx a, cplx b) { return std::arg(a) < std::arg(b); });
  for (auto x : roots) {
    cplx fx = 1.0 - 5.0 * std::pow(x, 4);
    if (std::abs(fx) < 1e-8) throw DomainError("burnside_surface_metric: y at a branch value");
    double r = re_kkp(x * x);
    double display = 4 * pi * pi / (r * r * std::norm(5.0 * y * y * y / x + 4.0 * y));
    double pull = std::norm(2.0 * y / fx) * burnside_x_metric(x).density;
    sm.sheets.push_back(x);
    sm.display.push_back(display);
    sm.pullback.push_back(pull);
    sm.residual = std::max(sm.residual, std::abs(display - pull) / pull);
  }
  return sm;
}

CheckTable torus_metric_check(TauPoint tau) {
  CheckTable t;
  const int s = 1;
  const auto& prm = torus_params(s);
  auto cp = alpha_pm(tau);
  cplx x = cp.x, y = cp.y;
  cplx alpha = cp.alpha_plus;
  auto v = wp(alpha, prm);
  cplx p = v.p;
  double pull = x_density(x) * std::norm(std::sqrt(1.0 + I) * y / (x - I * kSqrtI));

  cplx root = std::sqrt((6.0 * p - 3.0 + kR2) * (6.0 * p + 21.0 + 13.0 * kR2));
  auto x2_of = [&](cplx D) {
    return (24.0 * I * (1 + kR2) * (3.0 * p - kR2) - (6.0 * p - 5 * kR2 - 3.0) * D) / std::pow(6.0 * p + 3.0 + kR2, 2);
  };
  double best_x2 = INFINITY, best_displayed = INFINITY;
  for (cplx cand : {root, -root}) {
    cplx x2 = x2_of(cand);
    double e = rel(x2, x * x);
    best_x2 = std::min(best_x2, e);
    double r = re_kkp(x2);
    cplx den = (6.0 * p + 5 * kR2 - 3.0) * cand - 24.0 * I * (1 - kR2) * (3.0 * p + kR2);
    double displayed = pi * pi * std::pow(6.0, -4) * (3 + kR2) * std::pow(std::abs(6.0 * p + 3.0 - kR2), 8) *
                     std::norm(v.dp) / (std::norm(den) * r * r);
    best_displayed = std::min(best_displayed, std::abs(displayed - pull) / pull);
  }
  t.push_back(row("torus x^2 formula with the matching D branch", best_x2, 1e-8));
  t.push_back(row("torus metric display vs pullback (best D branch)", best_displayed, 1e-5));

  auto derived = [&](cplx pp, cplx dpp) {
    cplx rt = std::sqrt((6.0 * pp - 3.0 + kR2) * (6.0 * pp + 21.0 + 13.0 * kR2));
    cplx n1 = 24.0 * I * (1 + kR2) * (3.0 * pp - kR2) - (6.0 * pp - 5 * kR2 - 3.0) * rt;
    cplx den = std::pow(6.0 * pp + 3.0 + kR2, 2);
    if (rel(n1 / den, x * x) > 1e-6) {
      rt = -rt;
      n1 = 24.0 * I * (1 + kR2) * (3.0 * pp - kR2) - (6.0 * pp - 5 * kR2 - 3.0) * rt;
    }
    cplx n2 = n1 + I * den;
    double r = re_kkp(n1 / den);
    return pi * pi * std::norm(dpp) * 9 * std::pow(std::abs(6.0 * pp + 3.0 + kR2), 6) /
           (8 * std::norm(3.0 * pp - kR2) * std::abs(n1) * std::norm(n2) * r * r);
  };
  double dv = derived(p, v.dp);
  t.push_back(row("torus metric derived form vs pullback", std::abs(dv - pull) / pull, 1e-5));
  auto shifted = wp(alpha + 2.0 * prm.omega1() + 2.0 * prm.omega3(), prm);
  t.push_back(row("torus metric under a lattice translation", std::abs(derived(shifted.p, shifted.dp) - dv) / dv, 1e-9));
  t.push_back(row("torus metric positive", dv > 1e-12 && pull > 1e-12 ? 0.0 : 1.0, 0.0));
  return t;
}

}  // namespace unif
