#include "unif/theta_eta.hpp"

#include <cmath>
#include <numeric>
#include <sstream>

namespace unif {

namespace {

constexpr int kTermCap = 64;

double eps() { return default_tolerances().series_eps; }

[[noreturn]] void truncated(const char* what, cplx tau) {
  std::ostringstream os;
  os << what << ": series needs more than " << kTermCap << " terms at tau = " << tau.real()
     << (tau.imag() >= 0 ? "+" : "") << tau.imag() << "i";
  throw SeriesTruncation(os.str());
}

void require_upper(cplx tau, const char* what) {
  if (!(tau.imag() > 0) || !is_finite(tau))
    throw DomainError(std::string(what) + ": Im(tau) must be positive");
}

// sum_{k>=k0} w(k) exp(i pi tau e(k)) with e increasing; stops on a relative cutoff.
template <class Exponent, class Weight>
cplx qsum(cplx tau, int k0, Exponent e, Weight w, cplx start, const char* what) {
  cplx s = start;
  for (int k = k0, n = 0;; ++k, ++n) {
    if (n >= kTermCap) truncated(what, tau);
    cplx term = w(k) * std::exp(I * pi * tau * e(k));
    s += term;
    // the first term may vanish identically (derivative series)
    if (n > 0 && std::abs(term) <= eps() * std::abs(s)) break;
  }
  return s;
}

struct EtaSeries {
  cplx v, d1, d2;
};

// eta = sum over m coprime to 6 of chi12(m) exp(i pi tau m^2 / 12),
// with first and second tau-derivatives.
EtaSeries eta_series(cplx tau) {
  require_upper(tau, "dedekind_eta");
  cplx s{}, ds{}, dds{};
  int count = 0;
  for (int m = 1;; ++m) {
    if (m % 2 == 0 || m % 3 == 0) continue;
    if (++count > kTermCap) truncated("dedekind_eta", tau);
    int r = m % 12;
    double chi = (r == 1 || r == 11) ? 1.0 : -1.0;
    double e = double(m) * m / 12.0;
    cplx term = chi * std::exp(I * pi * tau * e);
    s += term;
    ds += term * (I * pi * e);
    dds += term * (I * pi * e) * (I * pi * e);
    if (std::abs(term) <= eps() * std::abs(s)) break;
  }
  return {s, ds, dds};
}

std::pair<cplx, cplx> eta_and_derivative(cplx tau) {
  auto e = eta_series(tau);
  return {e.v, e.d1};
}

// Lambert series sum n^p q2^n / (1 - q2^n), q2 = exp(2 pi i tau).
cplx lambert(cplx tau, int p, const char* what) {
  require_upper(tau, what);
  cplx q2 = std::exp(2.0 * pi * I * tau);
  double aq = std::abs(q2);
  // magnitude of n^p |q|^n peaks near n = p / |log|q||
  double peak = p / std::max(-std::log(aq), 1e-300);
  const int cap = 20000;
  cplx s{};
  cplx qn = 1;
  for (int n = 1; n <= cap; ++n) {
    qn *= q2;
    cplx term = std::pow(double(n), p) * qn / (1.0 - qn);
    s += term;
    if (n > peak && (std::abs(term) < eps() * std::abs(s) || qn == cplx{})) return s;
  }
  throw SeriesTruncation(std::string(what) + ": Lambert series cap reached");
}

}  // namespace

TauPoint::TauPoint(cplx v) : v_(v) {
  if (!is_finite(v)) throw DomainError("TauPoint: non-finite value");
  if (!(v.imag() > 0)) throw DomainError("TauPoint: Im(tau) must be strictly positive");
}

Rational::Rational(std::int64_t n, std::int64_t d) {
  if (d == 0) throw DomainError("Rational: zero denominator");
  if (d < 0) {
    n = -n;
    d = -d;
  }
  std::int64_t g = std::gcd(n < 0 ? -n : n, d);
  if (g == 0) g = 1;
  num = n / g;
  den = d / g;
}

std::string Rational::str() const {
  return den == 1 ? std::to_string(num) : std::to_string(num) + "/" + std::to_string(den);
}

bool Affine::operator<(const Affine& o) const {
  auto t = [](const Affine& a) { return std::tuple(a.c.num, a.c.den, a.d.num, a.d.den); };
  return t(*this) < t(o);
}

std::string Affine::str() const {
  std::string s = c.num == 1 && c.den == 1 ? "tau" : c.str() + "*tau";
  if (d.num != 0) s += (d.num > 0 ? "+" : "") + d.str();
  return s;
}

cplx theta3(cplx tau) {
  require_upper(tau, "theta3");
  return qsum(tau, 1, [](int k) { return double(k * k); }, [](int) { return 2.0; }, 1.0,
              "theta3");
}

cplx theta4(cplx tau) {
  require_upper(tau, "theta4");
  return qsum(tau, 1, [](int k) { return double(k * k); },
              [](int k) { return k % 2 ? -2.0 : 2.0; }, 1.0, "theta4");
}

cplx theta2(cplx tau) {
  require_upper(tau, "theta2");
  // explicit exp(i pi tau / 4); a principal fourth root of q fails for |Re tau| > 1
  cplx s = qsum(tau, 0, [](int k) { return double(k * (k + 1)); }, [](int) { return 1.0; },
                cplx{}, "theta2");
  return 2.0 * std::exp(I * pi * tau / 4.0) * s;
}

cplx dedekind_eta(cplx tau) { return eta_and_derivative(tau).first; }

cplx eisenstein_e2(cplx tau) {
  auto [e, de] = eta_and_derivative(tau);
  return 12.0 * de / (pi * I * e);
}

cplx eisenstein_e2_lambert(cplx tau) { return 1.0 - 24.0 * lambert(tau, 1, "E2"); }
cplx eisenstein_e4_lambert(cplx tau) { return 1.0 + 240.0 * lambert(tau, 3, "E4"); }
cplx eisenstein_e6_lambert(cplx tau) { return 1.0 - 504.0 * lambert(tau, 5, "E6"); }

double etaw_constant() {
  static const double c = [] {
    const cplx tau{0, 2};
    // theta3' termwise, then solve the theta3 equation of the closed system for eta_w
    cplx d3 = qsum(tau, 1, [](int k) { return double(k * k); },
                   [](int k) { return 2.0 * I * pi * double(k * k); }, cplx{}, "theta3'");
    cplx t2 = theta2(tau), t3 = theta3(tau), t4 = theta4(tau);
    cplx w = (pi / I) * (d3 / t3 - (pi * I / 12.0) * (std::pow(t2, 4) - std::pow(t4, 4)));
    cplx cc = w / eisenstein_e2(tau);
    if (std::abs(cc - pi * pi / 12) > 1e-12 || std::abs(cc.imag()) > 1e-12)
      throw NumericError("eta_w calibration drifted from pi^2/12");
    return cc.real();
  }();
  return c;
}

cplx eta_w(TauPoint tau) { return etaw_constant() * eisenstein_e2(tau); }

ThetaFrame theta(TauPoint tau) {
  cplx t = tau;
  auto [e, de] = eta_and_derivative(t);
  return {theta2(t), theta3(t), theta4(t), e, etaw_constant() * 12.0 * de / (pi * I * e)};
}

ThetaJet theta_jet_unchecked(cplx tau, Affine arg, int order) {
  if (order < 0) throw DomainError("theta_jet: negative order");
  cplx s0 = arg.apply(tau);
  require_upper(s0, "theta_jet argument");
  ThetaFrame f = theta(s0);
  const cplx ipi = I / pi, pi12 = pi * I / 12.0, c144 = std::pow(pi, 4) / 144.0;
  Jet t2(order, f.t2), t3(order, f.t3), t4(order, f.t4), w(order, f.etaw);
  // Picard iteration on u' = F(u); each pass fixes one more coefficient
  for (int it = 0; it < order; ++it) {
    Jet a2 = pow(t2, 4), a3 = pow(t3, 4), a4 = pow(t4, 4);
    Jet base = ipi * w;
    Jet d2 = t2 * (base + pi12 * (a3 + a4));
    Jet d3 = t3 * (base + pi12 * (a2 - a4));
    Jet d4 = t4 * (base - pi12 * (a2 + a3));
    Jet dw = ipi * (2.0 * w * w - c144 * (a2 * a2 + a3 * a3 + a4 * a4));
    t2 = integrate(d2, f.t2);
    t3 = integrate(d3, f.t3);
    t4 = integrate(d4, f.t4);
    w = integrate(dw, f.etaw);
  }
  Jet eta = f.eta * exp(integrate(ipi * w, 0.0));
  const cplx c = arg.c.value();
  ThetaJet j;
  j.frame = f;
  j.argument = arg;
  j.order = order;
  j.t2 = scale_argument(t2, c);
  j.t3 = scale_argument(t3, c);
  j.t4 = scale_argument(t4, c);
  j.etaw = scale_argument(w, c);
  j.eta = scale_argument(eta, c);
  // order-0 entries equal the frame values exactly
  j.eta[0] = f.eta;
  return j;
}

ThetaJet theta_jet(TauPoint tau, Affine arg, int order) {
  if (order < 0 || order > 4) throw DomainError("theta_jet: order must be 0..4");
  return theta_jet_unchecked(tau, arg, order);
}

ResidualTable identity_residuals(TauPoint tp) {
  const cplx t = tp;
  ResidualTable r;
  auto add = [&](const char* name, cplx v) { r.emplace_back(name, std::abs(v)); };
  const cplx a2 = theta2(t), a3 = theta3(t), a4 = theta4(t);
  const cplx h2 = theta2(t / 2.0), h3 = theta3(t / 2.0), h4 = theta4(t / 2.0);
  const cplx d2 = theta2(2.0 * t), d3 = theta3(2.0 * t), d4 = theta4(2.0 * t);
  const cplx f2 = theta2(4.0 * t), f3 = theta3(4.0 * t);
  const cplx s3 = theta3(t + 0.5), s4 = theta4(t + 0.5);
  const cplx e = dedekind_eta(t);
  add("half_theta2", h2 * h2 - 2.0 * a2 * a3);
  add("half_theta3", h3 * h3 - (a3 * a3 + a2 * a2));
  add("half_theta4", h4 * h4 - (a3 * a3 - a2 * a2));
  add("double_theta2_sum", 2.0 * d2 * d2 - (a3 * a3 - a4 * a4));
  add("double_theta2_product", 2.0 * d2 * d2 - 4.0 * f2 * f3);
  add("double_theta3_sum", 2.0 * d3 * d3 - (a3 * a3 + a4 * a4));
  add("double_theta3_shift", 2.0 * d3 * d3 - 2.0 * s4 * s3);
  add("double_theta4_shift", 2.0 * d4 * d4 - (s3 * s3 + s4 * s4));
  add("double_theta4_product", 2.0 * d4 * d4 - 2.0 * a4 * a3);
  add("sum_t4_plus_t3", a4 + a3 - 2.0 * f3);
  add("sum_t4_minus_t3", a4 - a3 + 2.0 * f2);
  add("sum_t4_plus_i_t3", a4 + I * a3 - (1.0 + I) * s3);
  add("sum_t4_minus_i_t3", a4 - I * a3 - (1.0 - I) * s4);
  add("landen", 2.0 * d2 * d3 - a2 * a2);
  add("jacobi_quartic", std::pow(a3, 4) - std::pow(a2, 4) - std::pow(a4, 4));
  add("eta_cubed", 2.0 * e * e * e - a2 * a3 * a4);
  const cplx e1 = dedekind_eta(2.0 * t), e2 = dedekind_eta(t / 2.0),
             e3 = dedekind_eta((t + 1.0) / 2.0);
  add("dedekind_eta8", 16.0 * std::pow(e1, 8) + std::pow(e2, 8) +
                           std::exp(2.0 * pi * I / 3.0) * std::pow(e3, 8));
  add("dedekind_product", e1 * e2 * e3 - std::exp(pi * I / 24.0) * e * e * e);
  return r;
}

ResidualTable closed_system_residuals(TauPoint tp) {
  const cplx t = tp;
  auto deriv = [&](auto weight, int k0, auto e, const char* what) {
    return qsum(t, k0, e, weight, cplx{}, what);
  };
  auto sq = [](int k) { return double(k * k); };
  // termwise derivatives of the defining series
  cplx d3 = deriv([](int k) { return 2.0 * I * pi * double(k * k); }, 1, sq, "theta3'");
  cplx d4 = deriv([](int k) { return (k % 2 ? -2.0 : 2.0) * I * pi * double(k * k); }, 1, sq,
                  "theta4'");
  cplx s2 = qsum(t, 0, [](int k) { return double(k * (k + 1)); }, [](int) { return 1.0; },
                 cplx{}, "theta2");
  cplx ds2 = qsum(t, 0, [](int k) { return double(k * (k + 1)); },
                  [](int k) { return I * pi * double(k * (k + 1)); }, cplx{}, "theta2'");
  cplx pref = 2.0 * std::exp(I * pi * t / 4.0);
  cplx d2 = pref * (ds2 + I * pi / 4.0 * s2);
  auto es = eta_series(t);
  cplx le = es.d1 / es.v;
  cplx dw = etaw_constant() * 12.0 / (pi * I) * (es.d2 / es.v - le * le);
  ThetaFrame f = theta(t);
  const cplx ipi = I / pi, pi12 = pi * I / 12.0;
  const cplx a2 = std::pow(f.t2, 4), a3 = std::pow(f.t3, 4), a4 = std::pow(f.t4, 4);
  ResidualTable r;
  r.emplace_back("theta2_eq", std::abs(d2 / f.t2 - ipi * f.etaw - pi12 * (a3 + a4)));
  r.emplace_back("theta3_eq", std::abs(d3 / f.t3 - ipi * f.etaw - pi12 * (a2 - a4)));
  r.emplace_back("theta4_eq", std::abs(d4 / f.t4 - ipi * f.etaw + pi12 * (a2 + a3)));
  r.emplace_back("etaw_eq",
                 std::abs(dw - ipi * (2.0 * f.etaw * f.etaw -
                                      std::pow(pi, 4) / 144.0 * (a2 * a2 + a3 * a3 + a4 * a4))));
  r.emplace_back("eta_eq", std::abs(pi * es.d1 - I * f.eta * f.etaw));
  return r;
}

cplx theta_series_derivative(int which, cplx tau, int n) {
  require_upper(tau, "theta_series_derivative");
  if (n < 0) throw DomainError("theta_series_derivative: negative order");
  auto weight = [&](double e, double c) { return c * std::pow(I * pi * e, n); };
  switch (which) {
    case 2:
      return qsum(tau, 0, [](int k) { return (k + 0.5) * (k + 0.5); },
                  [&](int k) { return weight((k + 0.5) * (k + 0.5), 2.0); }, cplx{}, "theta2 (n)");
    case 3:
      return qsum(tau, 1, [](int k) { return double(k * k); },
                  [&](int k) { return weight(double(k * k), 2.0); }, n == 0 ? 1.0 : 0.0,
                  "theta3 (n)");
    case 4:
      return qsum(tau, 1, [](int k) { return double(k * k); },
                  [&](int k) { return weight(double(k * k), k % 2 ? -2.0 : 2.0); },
                  n == 0 ? 1.0 : 0.0, "theta4 (n)");
    default:
      throw DomainError("theta_series_derivative: which must be 2, 3 or 4");
  }
}

ResidualTable closed_system_fd_residuals(TauPoint tp, double h) {
  const cplx t = tp;
  auto j2 = fd_jet(theta2, t, 1, h), j3 = fd_jet(theta3, t, 1, h), j4 = fd_jet(theta4, t, 1, h);
  auto jw = fd_jet([](cplx s) { return eta_w(s); }, t, 1, h);
  auto je = fd_jet(dedekind_eta, t, 1, h);
  ThetaFrame f = theta(t);
  const cplx ipi = I / pi, pi12 = pi * I / 12.0;
  const cplx a2 = std::pow(f.t2, 4), a3 = std::pow(f.t3, 4), a4 = std::pow(f.t4, 4);
  ResidualTable r;
  r.emplace_back("theta2_eq", std::abs(j2[1] / f.t2 - ipi * f.etaw - pi12 * (a3 + a4)));
  r.emplace_back("theta3_eq", std::abs(j3[1] / f.t3 - ipi * f.etaw - pi12 * (a2 - a4)));
  r.emplace_back("theta4_eq", std::abs(j4[1] / f.t4 - ipi * f.etaw + pi12 * (a2 + a3)));
  r.emplace_back("etaw_eq",
                 std::abs(jw[1] - ipi * (2.0 * f.etaw * f.etaw -
                                         std::pow(pi, 4) / 144.0 * (a2 * a2 + a3 * a3 + a4 * a4))));
  r.emplace_back("eta_eq", std::abs(pi * je[1] - I * f.eta * f.etaw));
  return r;
}

}  // namespace unif
