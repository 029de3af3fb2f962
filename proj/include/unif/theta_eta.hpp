#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "unif/jet.hpp"
#include "unif/numerics.hpp"

namespace unif {

class TauPoint {
 public:
  TauPoint(cplx v);  // NOLINT: implicit on purpose, validates Im > 0
  cplx value() const { return v_; }
  operator cplx() const { return v_; }  // NOLINT

 private:
  cplx v_;
};

struct Rational {
  std::int64_t num = 0;
  std::int64_t den = 1;
  Rational() = default;
  Rational(std::int64_t n, std::int64_t d = 1);  // NOLINT
  double value() const { return double(num) / double(den); }
  bool operator==(const Rational&) const = default;
  std::string str() const;
};

// argument c*tau + d
struct Affine {
  Rational c{1};
  Rational d{0};
  cplx apply(cplx tau) const { return c.value() * tau + d.value(); }
  bool operator==(const Affine&) const = default;
  bool operator<(const Affine& o) const;
  std::string str() const;
};

struct ThetaFrame {
  cplx t2, t3, t4;
  cplx eta;
  cplx etaw;
};

using ResidualTable = std::vector<std::pair<std::string, double>>;

// Individual constants; series in q = exp(i pi tau).
cplx theta2(cplx tau);
cplx theta3(cplx tau);
cplx theta4(cplx tau);
cplx dedekind_eta(cplx tau);
// E2 from the logarithmic derivative of the pentagonal eta series.
cplx eisenstein_e2(cplx tau);
// Lambert series, used as independent cross-checks.
cplx eisenstein_e2_lambert(cplx tau);
cplx eisenstein_e4_lambert(cplx tau);
cplx eisenstein_e6_lambert(cplx tau);
cplx eta_w(TauPoint tau);
// The calibrated constant c in eta_w = c E2.
double etaw_constant();

ThetaFrame theta(TauPoint tau);

struct ThetaJet {
  ThetaFrame frame;   // values at c*tau+d
  Affine argument;
  int order = 0;
  // tau-derivative jets (already chain-ruled through c)
  Jet t2, t3, t4, etaw, eta;
};

// Jets through the closed differential system; order <= 4.
ThetaJet theta_jet(TauPoint tau, Affine arg, int order);
// Same without the public order cap; used by the expression engine.
ThetaJet theta_jet_unchecked(cplx tau, Affine arg, int order);

ResidualTable identity_residuals(TauPoint tau);

// n-th tau-derivative of theta_which by termwise differentiation of its series.
cplx theta_series_derivative(int which, cplx tau, int n);

// Residuals of the closed system with termwise series derivatives.
ResidualTable closed_system_residuals(TauPoint tau);

// Residuals of the four equations of the closed system with
// derivatives from finite differences (independent of the jets).
ResidualTable closed_system_fd_residuals(TauPoint tau, double h);

}  // namespace unif
