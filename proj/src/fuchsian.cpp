#include "unif/fuchsian.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "unif/elliptic.hpp"

namespace unif {

using namespace expr;

SchwarzianSample schwarzian_from_jet(const Jet& j, cplx tau) {
  if (j.order() < 3) throw DomainError("schwarzian needs a third-order jet");
  SchwarzianSample s;
  s.tau = tau;
  s.x = j.deriv(0);
  s.x1 = j.deriv(1);
  s.x2 = j.deriv(2);
  s.x3 = j.deriv(3);
  if (s.x1 == cplx{}) throw NumericError("critical point: x_tau = 0, Schwarzian is infinite");
  cplx r = s.x2 / s.x1;
  s.schwarzian = s.x3 / s.x1 - 1.5 * r * r;
  s.bracket = s.schwarzian / (s.x1 * s.x1);
  return s;
}

SchwarzianSample schwarzian_jet(const Expr& x, TauPoint tau) {
  return schwarzian_from_jet(x.jet(tau, 3), tau);
}

namespace {

const Affine kHalf{Rational(1, 2), Rational(0)};
const Affine kTwo{Rational(2), Rational(0)};
const Affine kThree{Rational(3), Rational(0)};
const Affine kFour{Rational(4), Rational(0)};

Expr burnside_x() { return t4() / t3(); }
Expr legendre_k() { return pow(t2(), 2) / pow(t3(), 2); }
Expr legendre_kp() { return pow(t4(), 2) / pow(t3(), 2); }

Expr klein_j_expr() {
  Expr s = pow(t2(), 8) + pow(t3(), 8) + pow(t4(), 8);
  return pow(s, 3) / (c(54.0) * pow(t2() * t3() * t4(), 8));
}

cplx burnside_q_value(cplx x) {
  cplx x4 = x * x * x * x;
  cplx d = x * x4 - x;
  return -0.5 * (x4 * x4 + 14.0 * x4 + 1.0) / (d * d);
}

cplx burnside_q_dx(cplx x) {
  cplx x2 = x * x, x3 = x2 * x, x4 = x2 * x2;
  cplx n = x4 * x4 + 14.0 * x4 + 1.0, dn = 8.0 * x4 * x3 + 56.0 * x3;
  cplx p = x4 * x - x, dp = 5.0 * x4 - 1.0;
  cplx d = p * p, dd = 2.0 * p * dp;
  return -0.5 * (dn * d - n * dd) / (d * d);
}

cplx fermat_q(int n, cplx z) {
  cplx zn = std::pow(z, n);
  return -0.5 * (zn * zn + double(n * n - 2) * zn + 1.0) / (z * z * (zn - 1.0) * (zn - 1.0));
}

std::vector<cplx> roots_of_unity(int n) {
  std::vector<cplx> r;
  for (int k = 0; k < n; ++k) r.push_back(std::polar(1.0, 2 * pi * k / n));
  return r;
}

QFunction generic_parabolic(const std::vector<cplx>& e, const std::vector<cplx>& accessory,
                            double factor, const std::string& id) {
  if (e.size() < 3 || e.size() % 2 == 0)
    throw DomainError(id + ": need 2g+1 finite points, g >= 1");
  const int g = static_cast<int>(e.size() - 1) / 2;
  if (static_cast<int>(accessory.size()) > 2 * g - 1)
    throw DomainError(id + ": accessory polynomial degree must be <= 2g-2");
  QFunction q;
  q.id = id;
  q.singular_points = e;
  q.pole_coefficient = factor;
  bool zero = std::all_of(accessory.begin(), accessory.end(), [](cplx a) { return a == cplx{}; });
  q.accessory = zero ? "0" : "nonzero";
  q.formula = std::to_string(factor) + "{sum 1/(x-e_k)^2 - (2g x^(2g-1) + A(x))/prod(x-e_k)}";
  q.q = [e, accessory, g, factor](cplx x) {
    cplx s{}, prod = 1.0;
    for (auto a : e) {
      s += 1.0 / ((x - a) * (x - a));
      prod *= x - a;
    }
    cplx num = 2.0 * double(g) * std::pow(x, 2 * g - 1) + (accessory.empty() ? cplx{} : poly_eval(accessory, x));
    return factor * (s - num / prod);
  };
  return q;
}

}  // namespace

QFunction parabolic_q(const std::vector<cplx>& e, const std::vector<cplx>& accessory) {
  return generic_parabolic(e, accessory, -0.5, "parabolic");
}

QFunction whittaker_q(const std::vector<cplx>& e, const std::vector<cplx>& accessory) {
  return generic_parabolic(e, accessory, -0.375, "whittaker");
}

QFunction parabolic_even_q(const std::vector<cplx>& alpha, const std::vector<cplx>& accessory) {
  if (alpha.size() < 4 || alpha.size() % 2)
    throw DomainError("parabolic_even: need 2g+2 finite points, g >= 1");
  const int g = static_cast<int>(alpha.size() - 2) / 2;
  if (static_cast<int>(accessory.size()) > 2 * g - 1)
    throw DomainError("parabolic_even: accessory polynomial degree must be <= 2g-2");
  cplx sum = std::accumulate(alpha.begin(), alpha.end(), cplx{});
  QFunction q;
  q.id = "parabolic_even";
  q.singular_points = alpha;
  bool zero = std::all_of(accessory.begin(), accessory.end(), [](cplx a) { return a == cplx{}; });
  q.accessory = zero ? "0" : "nonzero";
  q.formula = "-1/2{sum 1/(x-a_k)^2 - (2(g+1)x^(2g) - 2g(sum a)x^(2g-1) + A(x))/prod(x-a_k)}";
  // the minus sign in front of 2g(sum a) is what regularity at infinity requires
  q.q = [alpha, accessory, g, sum](cplx x) {
    cplx s{}, prod = 1.0;
    for (auto a : alpha) {
      s += 1.0 / ((x - a) * (x - a));
      prod *= x - a;
    }
    cplx num = 2.0 * double(g + 1) * std::pow(x, 2 * g) -
               2.0 * double(g) * sum * std::pow(x, 2 * g - 1) +
               (accessory.empty() ? cplx{} : poly_eval(accessory, x));
    return -0.5 * (s - num / prod);
  };
  return q;
}

std::vector<std::string> q_catalogue_ids() {
  return {"burnside", "legendre", "heun",  "fermat:4",     "fermat:8",
          "z9",       "mixed_lambda",      "bruns",        "parabolic:burnside",
          "parabolic_even:burnside_moebius"};
}

QFunction q_catalogue(const std::string& id) {
  if (id == "burnside") {
    QFunction q;
    q.id = id;
    q.formula = "-1/2 (x^8+14x^4+1)/(x^5-x)^2";
    q.q = burnside_q_value;
    q.singular_points = {0.0, 1.0, -1.0, I, -I};
    q.accessory = "0";
    q.uniformizers = {{"t4/t3", burnside_x()},
                      {"t2/t3", t2() / t3()},
                      {"chi_B=-t4(tau/2)/t3(tau/2)", -t4(kHalf) / t3(kHalf)}};
    return q;
  }
  if (id == "legendre") {
    QFunction q;
    q.id = id;
    q.formula = "-1/2 (z^2-z+1)/(z^2(z-1)^2)";
    q.q = [](cplx z) { return -0.5 * (z * z - z + 1.0) / (z * z * (z - 1.0) * (z - 1.0)); };
    q.singular_points = {0.0, 1.0};
    q.accessory = "0";
    q.uniformizers = {{"k^2", pow(legendre_k(), 2)}, {"k'^2", pow(legendre_kp(), 2)}};
    return q;
  }
  if (id == "heun") {
    QFunction q;
    q.id = id;
    q.formula = "-1/2 (k^2+1)^2/(k^2(k^2-1)^2)";
    q.q = [](cplx k) {
      cplx k2 = k * k;
      return -0.5 * (k2 + 1.0) * (k2 + 1.0) / (k2 * (k2 - 1.0) * (k2 - 1.0));
    };
    q.singular_points = {0.0, 1.0, -1.0};
    q.accessory = "0";
    q.uniformizers = {{"k", legendre_k()}, {"k'", legendre_kp()}};
    return q;
  }
  if (id.rfind("fermat:", 0) == 0) {
    int n = 0;
    try {
      n = std::stoi(id.substr(7));
    } catch (const std::exception&) {
      throw DomainError("q_catalogue: bad Fermat degree in '" + id + "'");
    }
    if (n < 1 || n > 64) throw DomainError("q_catalogue: Fermat degree must be in 1..64");
    QFunction q;
    q.id = id;
    q.formula = "-1/2 (z^(2n)+(n^2-2)z^n+1)/(z^2(z^n-1)^2), n=" + std::to_string(n);
    q.q = [n](cplx z) { return fermat_q(n, z); };
    q.singular_points = roots_of_unity(n);
    q.singular_points.insert(q.singular_points.begin(), 0.0);
    q.accessory = "0";
    if (n == 4) {
      q.uniformizers = {{"t4/t3", burnside_x()}, {"t2/t3", t2() / t3()}};
    } else if (n == 8) {
      q.uniformizers = {{"t4(4tau)/t3(2tau)", t4(kFour) / t3(kTwo)},
                        {"t2/(sqrt2 t3(2tau))", t2() / (c(std::sqrt(2.0)) * t3(kTwo))}};
    } else {
      Rational r(1, n);
      q.uniformizers = {{"(k'^2)^(1/n)", pow(pow(legendre_kp(), 2), r)},
                        {"(k^2)^(1/n)", pow(pow(legendre_k(), 2), r)}};
    }
    return q;
  }
  if (id == "z9") {
    std::vector<cplx> a{0.0};
    for (auto r : roots_of_unity(8)) a.push_back(r);
    QFunction q = parabolic_q(a, {});
    q.id = id;
    q.uniformizers = {{"t4(2tau)/t3", t4(kTwo) / t3()}, {"-t4(2tau)/t3", -t4(kTwo) / t3()}};
    return q;
  }
  if (id == "mixed_lambda") {
    QFunction q;
    q.id = id;
    q.formula =
        "-1/2 (l^6+4l^5+16l^4-56l^3+68l^2-48l+16)/(l^2(l-1)^2(l^2+4l-4)^2)";
    q.q = [](cplx l) {
      cplx num = poly_eval({1, 4, 16, -56, 68, -48, 16}, l);
      cplx w = l * l + 4.0 * l - 4.0;
      return -0.5 * num / (l * l * (l - 1.0) * (l - 1.0) * w * w);
    };
    q.singular_points = {0.0, 1.0, -2.0 + 2 * std::sqrt(2.0), -2.0 - 2 * std::sqrt(2.0)};
    q.pole_coefficient = -0.5;  // at 0 and 1; -3/8 at the two roots of l^2+4l-4
    q.accessory = "certified";
    q.uniformizers = {{"t3^2(2tau)/(t4 t3(4tau))", pow(t3(kTwo), 2) / (t4() * t3(kFour))}};
    return q;
  }
  if (id == "bruns") {
    QFunction q;
    q.id = id;
    q.formula = "-(36J^2-41J+32)/(72J^2(J-1)^2)";
    q.q = [](cplx j) { return -(36.0 * j * j - 41.0 * j + 32.0) / (72.0 * j * j * (j - 1.0) * (j - 1.0)); };
    q.singular_points = {0.0, 1.0};
    q.pole_coefficient = -4.0 / 9.0;
    q.accessory = "n/a";
    q.uniformizers = {{"J", klein_j_expr()}};
    return q;
  }
  if (id == "parabolic:burnside") {
    QFunction q = parabolic_q({0.0, 1.0, -1.0, I, -I}, {});
    q.id = id;
    q.uniformizers = {{"t4/t3", burnside_x()}};
    return q;
  }
  if (id == "parabolic_even:burnside_moebius") {
    // z = 1/(x - 2) moves all six cusps of the Burnside equation to finite points
    const cplx s = 2.0;
    std::vector<cplx> alpha{0.0};
    for (cplx e : {cplx(0), cplx(1), cplx(-1), I, -I}) alpha.push_back(1.0 / (e - s));
    QFunction base = parabolic_even_q(alpha, {});
    // the accessory polynomial of the image is fixed by the known Burnside Q
    cplx sum = std::accumulate(alpha.begin(), alpha.end(), cplx{});
    auto target = [s](cplx z) {
      cplx x = s + 1.0 / z;
      cplx zx = -1.0 / ((x - s) * (x - s));
      return burnside_q_value(x) / (zx * zx);  // [z,x] = 0 for a Moebius map
    };
    // fit A(z) (degree 2) from three sample points
    std::vector<cplx> zs{cplx(0.3, 0.1), cplx(-0.2, 0.4), cplx(0.1, -0.35)};
    std::vector<cplx> rhs;
    for (auto z : zs) {
      cplx prod = 1.0, sq{};
      for (auto a : alpha) {
        prod *= z - a;
        sq += 1.0 / ((z - a) * (z - a));
      }
      cplx num = (sq + 2.0 * target(z)) * prod;
      rhs.push_back(num - (6.0 * std::pow(z, 4) - 4.0 * sum * std::pow(z, 3)));
    }
    // 3x3 Vandermonde solve for A = a0 z^2 + a1 z + a2
    cplx m[3][4];
    for (int i = 0; i < 3; ++i) {
      m[i][0] = zs[i] * zs[i];
      m[i][1] = zs[i];
      m[i][2] = 1.0;
      m[i][3] = rhs[i];
    }
    for (int col = 0; col < 3; ++col) {
      int piv = col;
      for (int r = col + 1; r < 3; ++r)
        if (std::abs(m[r][col]) > std::abs(m[piv][col])) piv = r;
      std::swap(m[col], m[piv]);
      for (int r = 0; r < 3; ++r) {
        if (r == col) continue;
        cplx f = m[r][col] / m[col][col];
        for (int k = col; k < 4; ++k) m[r][k] -= f * m[col][k];
      }
    }
    std::vector<cplx> acc{m[0][3] / m[0][0], m[1][3] / m[1][1], m[2][3] / m[2][2]};
    QFunction q = parabolic_even_q(alpha, acc);
    q.id = id;
    q.accessory = "fitted";
    q.uniformizers = {{"1/(t4/t3 - 2)", c(1.0) / (burnside_x() - c(s))}};
    (void)base;
    return q;
  }
  throw DomainError("q_catalogue: unknown id '" + id + "'");
}

FuchsianReport verify_fuchsian(const std::string& id, const std::vector<cplx>& taus) {
  QFunction q = q_catalogue(id);
  if (q.uniformizers.empty()) throw DomainError("verify_fuchsian: no uniformizer registered for " + id);
  FuchsianReport rep;
  rep.id = id;
  for (const auto& u : q.uniformizers) {
    for (cplx t : taus) {
      FuchsianPoint p;
      p.tau = t;
      p.uniformizer = u.name;
      Jet j = u.x.jet(t, 3);
      if (std::abs(j.deriv(1)) < 1e-6) {
        p.skipped = true;
        p.note = "|x_tau| < 1e-6";
        ++rep.skipped;
        rep.points.push_back(p);
        continue;
      }
      auto s = schwarzian_from_jet(j, t);
      cplx qv = q.q(s.x);
      if (!is_finite(qv)) {
        p.skipped = true;
        p.note = "x at a singular point";
        ++rep.skipped;
        rep.points.push_back(p);
        continue;
      }
      p.residual = std::abs(s.schwarzian - s.x1 * s.x1 * qv) / std::max(1.0, std::abs(s.schwarzian));
      p.raw_residual = std::abs(s.bracket - qv);
      rep.max_residual = std::max(rep.max_residual, p.residual);
      rep.max_raw_residual = std::max(rep.max_raw_residual, p.raw_residual);
      ++rep.used;
      rep.points.push_back(p);
    }
  }
  return rep;
}

cplx burnside_q2(cplx x, cplx y) {
  cplx x2 = x * x, x3 = x2 * x, x4 = x2 * x2;
  cplx fx = 1.0 - 5.0 * x4, fxx = -20.0 * x3, fxxx = -60.0 * x2;
  cplx fy = 2.0 * y;
  cplx sfx = fxxx / fx - 1.5 * (fxx / fx) * (fxx / fx);
  cplx sfy = -1.5 / (y * y);
  // (ln(F_x/F_y))_xy vanishes for this F
  return (burnside_q_value(x) + sfx) * (fy * fy) / (fx * fx) - sfy;
}

ChangeOfVarReport change_of_var_check(const std::vector<cplx>& taus) {
  ChangeOfVarReport rep;
  QFunction leg = q_catalogue("legendre");
  Expr x = burnside_x();
  Expr y = c(4.0 * I) * pow(eta(kTwo), 3) / pow(t3(), 3);
  for (cplx t : taus) {
    Jet jx = x.jet(t, 3);
    if (std::abs(jx.deriv(1)) < 1e-6) {
      ++rep.skipped;
      continue;
    }
    auto sx = schwarzian_from_jet(jx, t);
    auto sz = schwarzian_jet(pow(x, 4), t);
    auto sw = schwarzian_jet(pow(x, 8), t);
    cplx xv = sx.x;
    cplx zx = 4.0 * xv * xv * xv;
    cplx zxx_law = -15.0 / (32.0 * std::pow(xv, 8));
    cplx rhs = zxx_law + sx.bracket / (zx * zx);
    double scale = std::max({1.0, std::abs(sz.bracket), std::abs(rhs)});
    rep.quartic_law = std::max(rep.quartic_law, std::abs(sz.bracket - rhs) / scale);
    rep.quartic_legendre = std::max(rep.quartic_legendre, std::abs(sz.bracket - leg.q(sz.x)) / scale);
    // cocycle: w = z^2, [w,z] = -3/(8 z^4), [z,tau] taken from the law above
    cplx z = sz.x, wz = 2.0 * z;
    cplx two_step = -3.0 / (8.0 * z * z * z * z) + rhs / (wz * wz);
    double sc2 = std::max({1.0, std::abs(sw.bracket), std::abs(two_step)});
    rep.cocycle = std::max(rep.cocycle, std::abs(sw.bracket - two_step) / sc2);
    // Moebius z = (x+1)/(x-1): [z,tau] = [x,tau]/z_x^2
    auto sm = schwarzian_jet((x + c(1.0)) / (x - c(1.0)), t);
    cplx mzx = -2.0 / ((xv - 1.0) * (xv - 1.0));
    cplx mr = sx.bracket / (mzx * mzx);
    rep.moebius_law = std::max(rep.moebius_law, std::abs(sm.bracket - mr) / std::max({1.0, std::abs(mr)}));
    // Lemma with Q2 = [y,tau] from jets
    auto sy = schwarzian_jet(y, t);
    cplx q2 = burnside_q2(xv, sy.x);
    rep.lemma = std::max(rep.lemma, std::abs(sy.bracket - q2) / std::max(1.0, std::abs(q2)));
  }
  // double-pole coefficient of Q2 at the branch value E, E^8 = 2^8 5^-5
  const double xc = std::pow(5.0, -0.25);
  const cplx e = I * std::sqrt(xc - std::pow(xc, 5));
  const double d = 1e-4;
  cplx xs = xc + d;
  cplx ys = I * std::sqrt(cplx(xs - std::pow(xs, 5)));
  rep.y_pole_coefficient = ((ys - e) * (ys - e) * burnside_q2(xs, ys)).real();
  return rep;
}

namespace {

// d/dx and d^2/dx^2 of psi(tau) along x(tau)
std::pair<cplx, cplx> chain_x(const Jet& p, const Jet& x) {
  cplx x1 = x.deriv(1), x2 = x.deriv(2);
  cplx p1 = p.deriv(1), p2 = p.deriv(2);
  return {p1 / x1, (p2 * x1 - p1 * x2) / (x1 * x1 * x1)};
}

}  // namespace

PsiValue psi(const std::string& id, cplx point) {
  PsiValue v;
  if (id == "burnside_x" || id == "burnside_x_normalized") {
    const cplx xv = point;
    cplx d = std::pow(xv, 5) - xv;
    if (std::abs(d) < 1e-12) throw DomainError("psi: x at a branch point");
    const bool norm = id == "burnside_x_normalized";
    const cplx pref = norm ? std::sqrt(I / pi) : cplx(2 / pi);
    auto f1 = [&](cplx x) {
      cplx s = std::sqrt(std::pow(x, 5) - x);
      return norm ? pref * s * ellip_Kp(x * x) : pref * s * ellip_K(x * x);
    };
    auto f2 = [&](cplx x) {
      cplx s = std::sqrt(std::pow(x, 5) - x);
      return norm ? I * pref * s * ellip_K(x * x) : pref * s * ellip_Kp(x * x);
    };
    const double h = 1e-3 * std::min(1.0, std::abs(xv));
    auto j1 = fd_jet_plane(f1, xv, 2, h);
    auto j2 = fd_jet_plane(f2, xv, 2, h);
    v.psi1 = j1[0];
    v.psi2 = j2[0];
    cplx q = burnside_q_value(xv);
    double r1 = std::abs(j1[2] - 0.5 * q * j1[0]) / std::max(1.0, std::abs(j1[2]));
    double r2 = std::abs(j2[2] - 0.5 * q * j2[0]) / std::max(1.0, std::abs(j2[2]));
    v.ode_residual = std::max(r1, r2);
    v.wronskian = j1[0] * j2[1] - j2[0] * j1[1];
    // the first pair has W = 4/pi up to sign, the second W = 1
    v.normalization_residual = norm ? std::abs(v.wronskian - 1.0) : std::abs(std::abs(v.wronskian) - 4 / pi);
    return v;
  }
  if (id == "legendre") {
    TauPoint tp(point);
    Expr phi1 = c(pi / 2) * pow(t3(), 2);
    Expr phi2 = c(-I) * expr::tau() * phi1;
    Expr z = pow(legendre_k(), 2);
    Jet jz = z.jet(tp, 2), j1 = phi1.jet(tp, 2), j2 = phi2.jet(tp, 2);
    cplx zv = jz.value();
    double r = 0;
    for (const Jet* j : {&j1, &j2}) {
      auto [pz, pzz] = chain_x(*j, jz);
      cplx t1 = zv * (zv - 1.0) * pzz, t2v = (2.0 * zv - 1.0) * pz, t3v = 0.25 * j->value();
      double sc = std::max({1.0, std::abs(t1), std::abs(t2v), std::abs(t3v)});
      r = std::max(r, std::abs(t1 + t2v + t3v) / sc);
    }
    v.psi1 = j1.value();
    v.psi2 = j2.value();
    v.ode_residual = r;
    // Abel: z(z-1) W_z is constant
    cplx w = (j1.value() * j2.deriv(1) - j2.value() * j1.deriv(1)) / jz.deriv(1);
    v.wronskian = zv * (zv - 1.0) * w;
    v.normalization_residual = std::abs(v.psi1 - (pi / 2) * hyp2f1_half(zv)) / std::abs(v.psi1);
    return v;
  }
  if (id == "burnside_tau") {
    TauPoint tp(point);
    Expr p1 = c(2.0 * I * std::sqrt(I * pi)) * pow(eta(kTwo), 3) / t3();
    Expr p2 = expr::tau() * p1;
    Expr x = burnside_x();
    Jet jx = x.jet(tp, 2), j1 = p1.jet(tp, 2), j2 = p2.jet(tp, 2);
    cplx q = burnside_q_value(jx.value());
    double r = 0;
    for (const Jet* j : {&j1, &j2}) {
      auto [px, pxx] = chain_x(*j, jx);
      (void)px;
      cplx rhs = 0.5 * q * j->value();
      r = std::max(r, std::abs(pxx - rhs) / std::max({1.0, std::abs(pxx), std::abs(rhs)}));
    }
    v.psi1 = j1.value();
    v.psi2 = j2.value();
    v.ode_residual = r;
    v.wronskian = (j1.value() * j2.deriv(1) - j2.value() * j1.deriv(1)) / jx.deriv(1);
    v.normalization_residual = std::abs(j1.value() * j1.value() - jx.deriv(1)) /
                               std::max(1.0, std::abs(jx.deriv(1)));
    return v;
  }
  throw DomainError("psi: unknown id '" + id + "'");
}

ResidualTable modular_ode_residuals(TauPoint tp) {
  const cplx t = tp;
  ResidualTable out;
  auto scaled = [](cplx r, std::initializer_list<cplx> terms) {
    double s = 1.0;
    for (auto v : terms) s = std::max(s, std::abs(v));
    return std::abs(r) / s;
  };
  // Jacobi's third-order equation for theta3 and theta4
  for (auto [name, y] : {std::pair{"theorema_theta3", t3()}, std::pair{"theorema_theta4", t4()}}) {
    Jet j = y.jet(t, 3);
    cplx Y = j.deriv(0), a = j.deriv(1), b = j.deriv(2), cc = j.deriv(3);
    cplx A = Y * Y * cc - 15.0 * Y * a * b + 30.0 * a * a * a;
    cplx B = Y * b - 3.0 * a * a;
    cplx l1 = A * A, l2 = 32.0 * B * B * B, r = -pi * pi * std::pow(Y, 10) * B * B;
    out.emplace_back(name, scaled(l1 + l2 - r, {l1, l2, r}));
  }
  {
    Jet j = log(eta()).jet(t, 3);
    cplx l1 = j.deriv(1), l2 = j.deriv(2), l3 = j.deriv(3);
    cplx a = std::pow(l3 - 12.0 * l2 * l1 + 16.0 * l1 * l1 * l1, 2);
    cplx b = 32.0 * std::pow(l2 - 2.0 * l1 * l1, 3);
    cplx r = 4.0 / 27.0 * std::pow(pi, 6) * std::pow(dedekind_eta(t), 24);
    out.emplace_back("lambda_equation", scaled(a + b - r, {a, b, r}));
  }
  Expr psi1 = c(2.0 * I * std::sqrt(I * pi)) * pow(eta(kTwo), 3) / t3();
  {
    Jet p = psi1.jet(t, 3);
    cplx P = p.deriv(0), p1 = p.deriv(1), p2 = p.deriv(2), p3 = p.deriv(3);
    cplx xv = burnside_x()(t);
    cplx a = 2.0 * P * p2, b = -4.0 * p1 * p1, r = burnside_q_value(xv) * std::pow(P, 6);
    out.emplace_back("elimination_second_order", scaled(a + b - r, {a, b, r}));
    cplx c1 = 2.0 * P * P * p3, c2 = -18.0 * P * p1 * p2, c3 = 24.0 * p1 * p1 * p1;
    cplx r3 = burnside_q_dx(xv) * std::pow(P, 9);
    out.emplace_back("elimination_third_order", scaled(c1 + c2 + c3 - r3, {c1, c2, c3, r3}));
  }
  {
    ThetaFrame f = theta(tp);
    Eisenstein e2t = eisenstein(2.0 * t);
    cplx t3_4 = std::pow(f.t3, 4), t4_4 = std::pow(f.t4, 4);
    cplx e26 = std::pow(dedekind_eta(2.0 * t), 6);
    cplx g1 = f.t4 * f.t3 * (t4_4 - t3_4), r1 = -16.0 * e26;
    out.emplace_back("ground_form_1", scaled(g1 - r1, {g1, r1}));
    cplx g2 = t4_4 * t4_4 + 14.0 * t4_4 * t3_4 + t3_4 * t3_4;
    cplx r2 = 3.0 * 64.0 / std::pow(pi, 4) * e2t.g2;
    out.emplace_back("ground_form_2", scaled(g2 - r2, {g2, r2}));
    cplx g3 = t4_4 * t4_4 * t4_4 - 33.0 * t4_4 * t4_4 * t3_4 - 33.0 * t4_4 * t3_4 * t3_4 + t3_4 * t3_4 * t3_4;
    cplx r3 = -27.0 * 512.0 / std::pow(pi, 6) * e2t.g3;
    out.emplace_back("ground_form_3", scaled(g3 - r3, {g3, r3}));
  }
  {
    Jet jj = klein_j_expr().jet(t, 2);
    Jet e2 = pow(eta(), 2).jet(t, 2);
    auto [fj, fjj] = chain_x(e2, jj);
    cplx J = jj.value();
    cplx a = J * (J - 1.0) * fjj, b = (7.0 * J - 4.0) / 6.0 * fj, r = e2.value() / 144.0;
    out.emplace_back("gamma1_eta_squared", scaled(a + b + r, {a, b, r}));
  }
  {
    Jet p = psi1.jet(t, 2);
    cplx coef = (c(pi * pi / 288) * pow(c(7.0) * pow(t4(), 4) + pow(t3(), 4) + c(48 / (pi * pi)) * etaw(), 2))(t) -
                3.0 / (pi * pi) * eisenstein(2.0 * t).g2;
    cplx a = p.deriv(2), b = coef * p.deriv(0);
    out.emplace_back("linear_ode_psi", scaled(a + b, {a, b}));
  }
  {
    Expr ps = (c(1.0) + log(t4() / t3())) / pow(t2(), 2);
    Jet p = ps.jet(t, 2);
    cplx a = p.deriv(2), b = pi * pi / 4 * std::pow(theta4(2.0 * t), 8) * p.deriv(0);
    out.emplace_back("linear_ode_log", scaled(a + b, {a, b}));
  }
  return out;
}

}  // namespace unif
