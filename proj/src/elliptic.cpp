#include "unif/elliptic.hpp"

#include <algorithm>
#include <cmath>

namespace unif {

cplx agm(cplx a, cplx b) {
  for (int it = 0; it < 100; ++it) {
    if (std::abs(a - b) <= 4e-16 * std::abs(a)) return a;
    // stalled at rounding level
    if (it > 40 && std::abs(a - b) <= 1e-14 * std::abs(a)) return 0.5 * (a + b);
    cplx an = 0.5 * (a + b);
    cplx bn = std::sqrt(a * b);
    // right choice of the square root
    if (std::abs(an - bn) > std::abs(an + bn)) bn = -bn;
    a = an;
    b = bn;
  }
  throw ConvergenceError("agm: no convergence");
}

cplx ellip_K_param(cplx m) {
  if (!is_finite(m)) throw DomainError("ellip_K: non-finite parameter");
  if (std::abs(m - 1.0) < 1e-15) throw DomainError("ellip_K: k^2 = 1 is a pole");
  if (m.imag() == 0 && m.real() > 1)
    throw DomainError("ellip_K: k^2 real and >= 1 lies on the branch cut");
  cplx kp = std::sqrt(1.0 - m);
  return pi / (2.0 * agm(1.0, kp));
}

cplx ellip_Kp_param(cplx m) { return ellip_K_param(1.0 - m); }

cplx ellip_K(cplx k) { return ellip_K_param(k * k); }
// K(k') = pi/(2 agm(1, k)); going through 1 - k^2 would lose log(1/k) digits for small k
cplx ellip_Kp(cplx k) {
  if (!is_finite(k)) throw DomainError("ellip_Kp: non-finite modulus");
  if (std::abs(k) < 1e-300) throw DomainError("ellip_Kp: k = 0 is a pole");
  // on Re k = 0 this is the limit from Re k > 0
  return pi / (2.0 * agm(1.0, k.real() >= 0 ? k : -k));
}

cplx hyp2f1_half(cplx z) {
  if (std::abs(z - 1.0) < 1e-15) throw DomainError("hyp2f1_half: z = 1");
  if (z.imag() == 0 && z.real() > 1)
    throw DomainError("hyp2f1_half: z on the cut [1, inf) needs an explicit branch");
  return 2.0 / pi * ellip_K_param(z);
}

cplx hyp2f1_half_series(cplx z) {
  if (!(std::abs(z) < 1)) throw DomainError("hyp2f1_half_series: |z| must be < 1");
  cplx s = 1, t = 1;
  for (int n = 0; n < 100000; ++n) {
    double r = (n + 0.5) / (n + 1.0);
    t *= r * r * z;
    s += t;
    if (std::abs(t) < 1e-17 * std::abs(s)) return s;
  }
  throw SeriesTruncation("hyp2f1_half_series: no convergence");
}

Moduli legendre_moduli(TauPoint tau) {
  cplx t2 = theta2(tau), t3 = theta3(tau), t4 = theta4(tau);
  return {t2 * t2 / (t3 * t3), t4 * t4 / (t3 * t3)};
}

namespace {

struct Reduced {
  cplx e4, e6;
};

Reduced e4e6(cplx tau) {
  Reduction r = reduce_fundamental(tau);
  cplx j = double(r.m.c()) * tau + double(r.m.d());
  cplx e4 = eisenstein_e4_lambert(r.tau0), e6 = eisenstein_e6_lambert(r.tau0);
  return {e4 / std::pow(j, 4), e6 / std::pow(j, 6)};
}

}  // namespace

Eisenstein eisenstein(TauPoint tau) {
  auto [e4, e6] = e4e6(tau);
  cplx g2 = std::pow(pi, 4) / 12.0 * e4;
  cplx g3 = std::pow(pi, 6) / 216.0 * e6;
  cplx e43 = e4 * e4 * e4;
  return {g2, g3, e43 / (e43 - e6 * e6)};
}

cplx klein_j(TauPoint tau) { return eisenstein(tau).J; }

cplx carlson_rf(cplx x, cplx y, cplx z) {
  int zeros = (x == cplx{}) + (y == cplx{}) + (z == cplx{});
  if (zeros > 1) throw DomainError("carlson_rf: at most one argument may vanish");
  const double r = 1e-16;
  cplx a0 = (x + y + z) / 3.0;
  double q = std::pow(3.0 * r, -1.0 / 6.0) *
             std::max({std::abs(a0 - x), std::abs(a0 - y), std::abs(a0 - z)});
  cplx xm = x, ym = y, zm = z, am = a0;
  double f = 1;
  for (int it = 0; it < 200; ++it) {
    if (q * f < std::abs(am)) break;
    cplx sx = std::sqrt(xm), sy = std::sqrt(ym), sz = std::sqrt(zm);
    cplx lam = sx * sy + sx * sz + sy * sz;
    xm = 0.25 * (xm + lam);
    ym = 0.25 * (ym + lam);
    zm = 0.25 * (zm + lam);
    am = 0.25 * (am + lam);
    f *= 0.25;
  }
  cplx X = (a0 - x) * f / am, Y = (a0 - y) * f / am, Z = -X - Y;
  cplx e2 = X * Y - Z * Z, e3 = X * Y * Z;
  return (1.0 - e2 / 10.0 + e3 / 14.0 + e2 * e2 / 24.0 - 3.0 * e2 * e3 / 44.0) / std::sqrt(am);
}

void WeierstrassParams::finish_from_basis(cplx w1, cplx w3) {
  cplx t = w3 / w1;
  if (!(t.imag() > 0)) throw DomainError("WeierstrassParams: need Im(w'/w) > 0");
  Reduction r = reduce_fundamental(t);
  const auto& m = r.m;
  w3_ = double(m.a()) * w3 + double(m.b()) * w1;
  w1_ = double(m.c()) * w3 + double(m.d()) * w1;
  tau_ = w3_ / w1_;
  cplx t2 = theta2(tau_), t3 = theta3(tau_), t4 = theta4(tau_);
  cplx a2 = std::pow(t2, 4), a3 = std::pow(t3, 4), a4 = std::pow(t4, 4);
  cplx s = std::pow(pi / (2.0 * w1_), 2) / 3.0;
  e_ = {s * (a3 + a4), s * (a2 - a4), -s * (a2 + a3)};
  g2_ = std::pow(pi, 4) / 12.0 * eisenstein_e4_lambert(tau_) / std::pow(w1_, 4);
  g3_ = std::pow(pi, 6) / 216.0 * eisenstein_e6_lambert(tau_) / std::pow(w1_, 6);
  eta1_ = pi * pi * eisenstein_e2(tau_) / (12.0 * w1_);
  // Legendre relation eta1 w3 - eta3 w1 = i pi / 2
  eta3_ = (eta1_ * w3_ - I * pi / 2.0) / w1_;
}

WeierstrassParams WeierstrassParams::from_periods(cplx two_omega, cplx two_omega_prime) {
  if (!is_finite(two_omega) || !is_finite(two_omega_prime) || two_omega == cplx{})
    throw DomainError("WeierstrassParams: invalid periods");
  WeierstrassParams p;
  p.finish_from_basis(two_omega / 2.0, two_omega_prime / 2.0);
  return p;
}

WeierstrassParams WeierstrassParams::from_invariants(cplx g2, cplx g3) {
  if (!is_finite(g2) || !is_finite(g3)) throw DomainError("WeierstrassParams: non-finite invariants");
  cplx disc = g2 * g2 * g2 - 27.0 * g3 * g3;
  double scale = std::max(std::abs(g2 * g2 * g2), 27.0 * std::abs(g3 * g3));
  if (std::abs(disc) <= 1e-12 * scale)
    throw DomainError("WeierstrassParams: vanishing discriminant g2^3 - 27 g3^2");
  auto roots = poly_roots({4.0, 0.0, -g2, -g3});
  std::array<int, 3> idx{0, 1, 2};
  struct Cand {
    double dist;
    std::array<int, 3> perm;
  };
  std::vector<Cand> cands;
  do {
    cplx lam = (roots[idx[1]] - roots[idx[2]]) / (roots[idx[0]] - roots[idx[2]]);
    cands.push_back({std::abs(lam - 0.5), idx});
  } while (std::next_permutation(idx.begin(), idx.end()));
  std::stable_sort(cands.begin(), cands.end(),
                   [](const Cand& a, const Cand& b) { return a.dist < b.dist; });
  for (const auto& c : cands) {
    cplx e1 = roots[c.perm[0]], e2 = roots[c.perm[1]], e3 = roots[c.perm[2]];
    cplx lam = (e2 - e3) / (e1 - e3);
    cplx K = ellip_K_param(lam), Kp = ellip_Kp_param(lam);
    cplx tau = I * Kp / K;
    if (!(tau.imag() > 0)) continue;
    cplx w1 = K / std::sqrt(e1 - e3);
    WeierstrassParams p;
    p.finish_from_basis(w1, tau * w1);
    double err = std::abs(p.g2_ - g2) / std::max(1.0, std::abs(g2)) +
                 std::abs(p.g3_ - g3) / std::max(1.0, std::abs(g3));
    if (err > 1e-9) continue;
    p.g2_ = g2;
    p.g3_ = g3;
    return p;
  }
  throw NumericError("WeierstrassParams: invariants-to-periods conversion failed");
}

cplx reduce_to_cell(cplx z, const WeierstrassParams& params) {
  cplx u = z / params.omega1();
  cplx t = params.tau();
  double b = u.imag() / (2.0 * t.imag());
  double a = (u.real() - 2.0 * b * t.real()) / 2.0;
  double m = std::round(a), n = std::round(b);
  return z - 2.0 * m * params.omega1() - 2.0 * n * params.omega3();
}

WpValue wp(cplx z, const WeierstrassParams& params) {
  if (!is_finite(z)) throw DomainError("wp: non-finite argument");
  const cplx w1 = params.omega1(), w3 = params.omega3();
  cplx u = z / w1;
  cplx t = params.tau();
  double b = u.imag() / (2.0 * t.imag());
  double a = (u.real() - 2.0 * b * t.real()) / 2.0;
  double m = std::round(a), n = std::round(b);
  cplx z0 = z - 2.0 * m * w1 - 2.0 * n * w3;
  if (std::abs(z0) < 1e-12 * std::abs(w1)) throw DomainError("wp: argument at a lattice point");
  const cplx q = std::exp(I * pi * t);
  const cplx c = pi / (2.0 * w1);
  const cplx v = c * z0;
  cplx sv = std::sin(v), cv = std::cos(v);
  cplx csc2 = 1.0 / (sv * sv), cot = cv / sv;
  cplx sp{}, sdp{}, sz{};
  cplx q2 = q * q, q2n = 1;
  for (int k = 1; k <= 200; ++k) {
    q2n *= q2;
    cplx lam = q2n / (1.0 - q2n);
    cplx s2 = std::sin(2.0 * double(k) * v), c2 = std::cos(2.0 * double(k) * v);
    cplx tp = double(k) * lam * c2;
    sp += tp;
    sdp += double(k * k) * lam * s2;
    sz += lam * s2;
    if (std::abs(tp) < 1e-18 * std::abs(csc2) && std::abs(lam * s2) < 1e-18 * std::abs(cot)) break;
    if (k == 200) throw SeriesTruncation("wp: q-series cap reached");
  }
  WpValue r;
  r.p = -params.eta1() / w1 + c * c * csc2 - 8.0 * c * c * sp;
  r.dp = c * c * c * (-2.0 * csc2 * cot + 16.0 * sdp);
  r.zeta = params.eta1() * z0 / w1 + c * cot + (2.0 * pi / w1) * sz + 2.0 * m * params.eta1() +
           2.0 * n * params.eta3();
  return r;
}

cplx wp_inverse(cplx w, const WeierstrassParams& params, WpInverseOptions opt) {
  if (!is_finite(w)) throw DomainError("wp_inverse: non-finite value");
  const auto& e = params.roots();
  const cplx half[3] = {params.omega1(), params.omega1() + params.omega3(), params.omega3()};
  for (int i = 0; i < 3; ++i) {
    if (std::abs(w - e[i]) <= 1e-10 * std::max(1.0, std::abs(w))) {
      if (!opt.allow_branch_value)
        throw DomainError("wp_inverse: value is a branch value e_i");
      cplx h = reduce_to_cell(half[i], params);
      if (h.real() < 0 || (h.real() == 0 && h.imag() < 0)) h = -h;
      return h;
    }
  }
  auto polish = [&](cplx a) {
    for (int it = 0; it < 8; ++it) {
      WpValue v = wp(a, params);
      cplx step = (v.p - w) / v.dp;
      a -= step;
      if (std::abs(step) < 1e-16 * std::max(1.0, std::abs(a))) break;
    }
    return a;
  };
  auto good = [&](cplx a) {
    if (!is_finite(a)) return false;
    cplx p = wp(a, params).p;
    return std::abs(p - w) <= 1e-11 * std::max(1.0, std::abs(w));
  };
  cplx alpha = carlson_rf(w - e[0], w - e[1], w - e[2]);
  alpha = polish(alpha);
  if (!good(alpha)) {
    // fallback: Newton from a fixed lattice of seeds in the cell
    bool found = false;
    for (int i = -3; i <= 3 && !found; ++i)
      for (int j = -3; j <= 3 && !found; ++j) {
        if (i == 0 && j == 0) continue;
        cplx seed = params.omega1() * (i / 3.5) + params.omega3() * (j / 3.5);
        try {
          cplx a = polish(seed);
          if (good(a)) {
            alpha = a;
            found = true;
          }
        } catch (const Error&) {
        }
      }
    if (!found) throw ConvergenceError("wp_inverse: no preimage found");
  }
  cplx a = reduce_to_cell(alpha, params);
  double tie = 1e-13 * std::abs(params.omega1());
  if (a.real() < -tie || (std::abs(a.real()) <= tie && a.imag() < 0)) a = -a;
  return a;
}

}  // namespace unif
