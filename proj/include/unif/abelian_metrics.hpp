#pragma once

#include <vector>

#include "unif/elliptic.hpp"

namespace unif {

// Burnside curve in the cover variable x~ = t3(tau+1/2)/t4(tau+1/2) = (1 - iX)/(X - i),
// y~ = -2 sqrt2 y/(X - i)^3 with X = t4/t3, y = 4i eta^3(2tau)/t3^3.
struct CoverCoords {
  cplx x, y, dx;  // dx = dx~/dtau
};
CoverCoords cover_coords(TauPoint tau);

// Tori with invariants g2 = 5/3, g3 = -s 7 sqrt2/27; s = +1 or -1.
const WeierstrassParams& torus_params(int s);
// (1 + s sqrt2)(1 - i) x/((x - i)(x + 1)) - (3 + s sqrt2)/6
cplx torus_p_of_x(int s, cplx x);
// 2 sqrt(1-i)/(sqrt2 - 2s) (x + s i sqrt i) y/((x - i)^2 (x + 1)^2)
cplx torus_dp_of_xy(int s, cplx x, cplx y);
// (1 + s sqrt2) t3^2(2tau)/(2 t4 t3(4tau)) - (3 + s sqrt2)/6 and its tau-derivative
struct TorusArgument {
  cplx p, dp;
};
TorusArgument torus_argument(int s, TauPoint tau);

struct CoverPoint {
  cplx tau, x, y;
  cplx alpha_plus, alpha_minus;
};
// Inverse images with P'(alpha) matched to torus_dp_of_xy.
CoverPoint alpha_pm(TauPoint tau);
// Same branch, moved by lattice periods to lie next to ref.
cplx alpha_near(int s, TauPoint tau, cplx ref);

CheckTable cover_relations(TauPoint tau);
CheckTable holo_differential_check(TauPoint tau);
CheckTable mero_identity_check(TauPoint tau);

enum class MetricModel { HalfPlane, Disc };

struct MetricSample {
  cplx coord;
  double density = 0;
  double U = 0;  // density = exp(2U)
};

// HalfPlane: -4/(conj(P2) P1 - conj(P1) P2)^2; Disc: 4/(|P1|^2 - |P2|^2)^2.
// Throws DomainError when the ratio P2/P1 leaves the model domain.
MetricSample metric_density(MetricModel model, cplx psi1, cplx psi2, cplx coord = {});

// Psi1 = sqrt(i/pi) sqrt(x^5-x) K'(x^2), Psi2 = i sqrt(i/pi) sqrt(x^5-x) K(x^2).
MetricSample burnside_x_metric(cplx x);
// 4 U_{x x*} = exp(2U) by a Richardson-combined five-point Laplacian, relative.
double liouville_residual(cplx x);
CheckTable liouville_check(const std::vector<cplx>& xs);

struct SurfaceMetric {
  cplx y;
  std::vector<cplx> sheets;  // roots of x^5 - x = y^2, ordered by argument
  std::vector<double> display, pullback;
  double residual = 0;  // max relative difference
};
SurfaceMetric burnside_surface_metric(cplx y);

CheckTable torus_metric_check(TauPoint tau);

}  // namespace unif
