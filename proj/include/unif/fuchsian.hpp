#pragma once

#include <functional>
#include <string>
#include <vector>

#include "unif/theta_expr.hpp"

namespace unif {

struct SchwarzianSample {
  cplx tau;
  cplx x, x1, x2, x3;  // x and its first three tau-derivatives
  cplx schwarzian;     // {x, tau}
  cplx bracket;        // [x, tau] = {x, tau} / x1^2
};

SchwarzianSample schwarzian_from_jet(const Jet& j, cplx tau);
// Throws NumericError at a critical point (x_tau == 0).
SchwarzianSample schwarzian_jet(const expr::Expr& x, TauPoint tau);

struct Uniformizer {
  std::string name;
  expr::Expr x;
};

struct QFunction {
  std::string id;
  std::string formula;
  std::function<cplx(cplx)> q;
  std::vector<cplx> singular_points;  // finite ones
  double pole_coefficient = -0.5;     // at each finite non-Whittaker pole
  std::string accessory;              // accessory polynomial, "0" when certified zero
  std::vector<Uniformizer> uniformizers;
};

// ids: burnside, legendre, heun, fermat:<n>, z9, mixed_lambda, bruns,
// parabolic:burnside, parabolic_even:burnside_moebius
QFunction q_catalogue(const std::string& id);
std::vector<std::string> q_catalogue_ids();

// -1/2 { sum 1/(x-e_k)^2 - (2g x^(2g-1) + A(x)) / prod (x-e_k) }, 2g+1 points.
QFunction parabolic_q(const std::vector<cplx>& e, const std::vector<cplx>& accessory);
// Even number 2g+2 of finite points; numerator 2(g+1)x^(2g) - 2g(sum a)x^(2g-1) + A(x).
QFunction parabolic_even_q(const std::vector<cplx>& alpha, const std::vector<cplx>& accessory);
// Same shape as parabolic_q with the factor -3/8.
QFunction whittaker_q(const std::vector<cplx>& e, const std::vector<cplx>& accessory);

struct FuchsianPoint {
  cplx tau;
  std::string uniformizer;
  double residual = 0;      // |{x,tau} - x_tau^2 Q| / max(1, |{x,tau}|)
  double raw_residual = 0;  // |[x,tau] - Q(x)|
  bool skipped = false;
  std::string note;
};

struct FuchsianReport {
  std::string id;
  double max_residual = 0;
  double max_raw_residual = 0;
  int used = 0, skipped = 0;
  std::vector<FuchsianPoint> points;
};

// Samples with |x_tau| < 1e-6 are skipped.
FuchsianReport verify_fuchsian(const std::string& id, const std::vector<cplx>& taus);

struct ChangeOfVarReport {
  double quartic_law = 0;       // [z,tau] = [z,x] + [x,tau]/z_x^2 with z = x^4
  double quartic_legendre = 0;  // [z,tau] against the Legendre Q
  double moebius_law = 0;       // z = (x+1)/(x-1): [z,x] = 0
  double cocycle = 0;           // x -> z = x^4 -> w = z/(z-1) against direct [w,tau]
  double lemma = 0;             // pointwise Lemma for F = y^2 - x^5 + x
  double y_pole_coefficient = 0;  // limit of (y-E)^2 Q2 at y^8 = 2^8 5^-5
  int skipped = 0;
};
ChangeOfVarReport change_of_var_check(const std::vector<cplx>& taus);

// Q2 from the Lemma for the Burnside curve at a curve point (x, y).
cplx burnside_q2(cplx x, cplx y);

struct PsiValue {
  cplx psi1, psi2;
  double ode_residual = 0;  // both solutions of the linear equation
  cplx wronskian;           // constant along the family
  double normalization_residual = 0;  // per family, see psi()
};
// id: burnside_x (x-plane pair with K and K'), burnside_x_normalized (second
// normalization, point = x), legendre (point = tau), burnside_tau (point = tau).
PsiValue psi(const std::string& id, cplx point);

ResidualTable modular_ode_residuals(TauPoint tau);

}  // namespace unif
