#pragma once

#include <optional>
#include <string>
#include <vector>

#include "unif/elliptic.hpp"
#include "unif/groups.hpp"

namespace unif {

// chi_B(tau) = -t4(tau/2)/t3(tau/2); invariant under Gamma(4).
cplx chi_b(cplx tau);
// (1/108)(A^8 + 14A^4 + 1)^3 / ((A^4 - 1)^4 A^4)
cplx octahedral_j(cplx a);

struct InversionResult {
  cplx a;
  std::optional<TauPoint> tau0;  // empty at a branch value
  std::string marker;            // "cusp", "elliptic:i", "elliptic:rho" or ""
  std::vector<cplx> orbit;       // the 24 coset images of the reduced start point
  int index = -1;                // orbit position of tau0
  ProjMatrix matrix;             // tau0 = matrix(tau')
  cplx tau_prime{};              // 2 i K(A^2)/K'(A^2) after the Gamma(2) correction
  double residual = 0;           // |chi_B(tau0) - A|
  double j_residual = 0;         // |J(tau0) - octahedral_j(A)| / max(1, |J|)
};

// Throws NumericError when the best candidate misses A by more than root_tol.
InversionResult invert_chi(cplx a);

// True when a = m b for some m in Gamma(4).
bool gamma4_equivalent(cplx a, cplx b, double tol = 1e-8);

CheckTable exact_value_suite();
CheckTable series_at_i();

struct QuinticSolution {
  cplx a;
  std::vector<cplx> roots;               // roots of x^5 - x + a; roots[0] from theta
  std::vector<std::optional<TauPoint>> taus;  // X(tau_k) = roots[k]
  std::vector<std::string> markers;
  cplx tau_star{};                       // 16 eta^6(2 tau)/t3^6(tau) = a
  std::vector<cplx> path;                // continuation trace
  std::vector<double> poly_residuals;    // |x^5 - x + a|
  std::vector<double> tau_residuals;     // |X(tau_k) - x_k|
  double theta_residual = 0;             // |roots[0] - t4/t3(tau_star)|
  double vieta = 0;                      // max over elementary symmetric sums
};

QuinticSolution quintic_solve(cplx a);

// roots(-a) against -roots(a) as multisets
double quintic_odd_symmetry(cplx a);

}  // namespace unif
