#pragma once

#include <optional>
#include <string>
#include <vector>

#include "unif/numerics.hpp"

namespace unif {

// A point of R ∪ {∞}.
struct BoundaryPoint {
  bool infinite = false;
  double x = 0;
  static BoundaryPoint at(double v) { return {false, v}; }
  static BoundaryPoint inf() { return {true, 0}; }
  bool same(const BoundaryPoint& o, double tol = 1e-9) const;
  std::string str() const;
};

// Real Möbius map, determinant 1.
struct RealMobius {
  double a = 1, b = 0, c = 0, d = 1;
  BoundaryPoint apply(const BoundaryPoint& p) const;
  cplx apply(cplx z) const { return (a * z + b) / (c * z + d); }
  RealMobius inverse() const { return {d, -b, -c, a}; }
  double trace() const { return a + d; }
};
RealMobius operator*(const RealMobius& x, const RealMobius& y);

// Parabolic map fixing `fix` with from -> to.
RealMobius make_parabolic(const BoundaryPoint& fix, double from, double to);

struct Side {
  BoundaryPoint p, q;  // geodesic from p to q
};

struct SidePairing {
  std::string label;
  int source = 0;  // side index mapped ...
  int target = 0;  // ... onto this side (endpoints reversed)
  RealMobius m;
};

struct GeodesicPolygon {
  int g = 0;
  bool doubled = false;
  std::vector<BoundaryPoint> vertices;  // boundary order
  std::vector<std::string> vertex_labels;
  std::vector<Side> sides;              // side i joins vertex i and i+1
  std::vector<SidePairing> pairings;
  std::vector<std::vector<int>> cycles;  // vertex cycles
  int c() const { return static_cast<int>(cycles.size()); }
  int s() const { return static_cast<int>(pairings.size()); }
  // closure residual |V0 (V1...V2g) eps_2g - eps_2g|
  double closure_residual = 0;
};

// omega: 2g+2 increasing points (the last may be ∞), eps: 2g interleaved reals.
GeodesicPolygon build_polygon(const std::vector<BoundaryPoint>& omega,
                              const std::vector<double>& eps);
// P ∪ V0(P) with the pairings V0^2, V0 Vk, V0 Vk^-1.
GeodesicPolygon doubled_polygon(const GeodesicPolygon& px);
int euler_characteristic(const GeodesicPolygon& p);
int genus_of(const GeodesicPolygon& p, bool doubled);
int free_parameter_count(int g);

// Default data of genus g: omega = (-1/2, 0, 1, ..., 2g-1, ∞), eps_k = k - 1/2.
GeodesicPolygon default_polygon(int g);

cplx disc_map(cplx tau);
// Image of a boundary point under disc_map (∞ goes to i).
cplx disc_map(const BoundaryPoint& p);

struct ArcGeometry {
  bool line = false;  // vertical half-line in the half-plane model
  double center = 0, radius = 0;
  cplx disc_center;
  double disc_radius = 0;
  bool disc_line = false;
};
ArcGeometry arc_geometry(const Side& s);

}  // namespace unif
