#pragma once

#include <array>

#include "unif/groups.hpp"
#include "unif/numerics.hpp"
#include "unif/theta_eta.hpp"

namespace unif {

// All K functions take the modulus k; the parameter is m = k^2.
cplx agm(cplx a, cplx b);
cplx ellip_K(cplx k);
cplx ellip_Kp(cplx k);  // K(sqrt(1 - k^2))
// Same functions addressed by the parameter m = k^2.
cplx ellip_K_param(cplx m);
cplx ellip_Kp_param(cplx m);

cplx hyp2f1_half(cplx z);         // 2F1(1/2,1/2;1|z) through K
cplx hyp2f1_half_series(cplx z);  // power series, |z| < 1

struct Moduli {
  cplx k, kp;
};
Moduli legendre_moduli(TauPoint tau);

struct Eisenstein {
  cplx g2, g3, J;
};
// Lattice with half-periods (1, tau); Lambert series after reduction to the
// fundamental domain.
Eisenstein eisenstein(TauPoint tau);
cplx klein_j(TauPoint tau);

cplx carlson_rf(cplx x, cplx y, cplx z);

class WeierstrassParams {
 public:
  static WeierstrassParams from_invariants(cplx g2, cplx g3);
  // full periods 2w, 2w' with Im(w'/w) > 0
  static WeierstrassParams from_periods(cplx two_omega, cplx two_omega_prime);

  cplx g2() const { return g2_; }
  cplx g3() const { return g3_; }
  // reduced basis of half-periods, w3/w1 in the fundamental domain
  cplx omega1() const { return w1_; }
  cplx omega3() const { return w3_; }
  cplx tau() const { return tau_; }
  cplx eta1() const { return eta1_; }
  cplx eta3() const { return eta3_; }
  // e1 = P(w1), e2 = P(w1 + w3), e3 = P(w3)
  const std::array<cplx, 3>& roots() const { return e_; }
  cplx discriminant() const { return g2_ * g2_ * g2_ - 27.0 * g3_ * g3_; }

 private:
  void finish_from_basis(cplx w1, cplx w3);
  cplx g2_, g3_, w1_, w3_, tau_, eta1_, eta3_;
  std::array<cplx, 3> e_{};
};

struct WpValue {
  cplx p, dp, zeta;
};
WpValue wp(cplx z, const WeierstrassParams& params);

struct WpInverseOptions {
  bool allow_branch_value = false;
};
cplx wp_inverse(cplx w, const WeierstrassParams& params, WpInverseOptions opt = {});

// Reduce z modulo the lattice into the cell centred at 0.
cplx reduce_to_cell(cplx z, const WeierstrassParams& params);

}  // namespace unif
