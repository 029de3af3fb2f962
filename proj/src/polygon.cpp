#include "unif/polygon.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

namespace unif {

bool BoundaryPoint::same(const BoundaryPoint& o, double tol) const {
  if (infinite || o.infinite) return infinite == o.infinite;
  return std::abs(x - o.x) <= tol * std::max(1.0, std::abs(x));
}

std::string BoundaryPoint::str() const {
  if (infinite) return "inf";
  std::ostringstream os;
  os.precision(17);
  os << x;
  return os.str();
}

BoundaryPoint RealMobius::apply(const BoundaryPoint& p) const {
  if (p.infinite) {
    if (c == 0) return BoundaryPoint::inf();
    return BoundaryPoint::at(a / c);
  }
  double den = c * p.x + d;
  if (std::abs(den) < 1e-300) return BoundaryPoint::inf();
  return BoundaryPoint::at((a * p.x + b) / den);
}

RealMobius operator*(const RealMobius& x, const RealMobius& y) {
  return {x.a * y.a + x.b * y.c, x.a * y.b + x.b * y.d, x.c * y.a + x.d * y.c,
          x.c * y.b + x.d * y.d};
}

RealMobius make_parabolic(const BoundaryPoint& fix, double from, double to) {
  if (fix.infinite) {
    if (from == to) throw DomainError("make_parabolic: from equals to");
    return {1, to - from, 0, 1};
  }
  const double p = fix.x;
  if (from == p || to == p) throw DomainError("make_parabolic: endpoint equals the fixed point");
  // a side pairing at a cusp swaps the two sides meeting there
  if ((from - p) * (to - p) > 0)
    throw DomainError("make_parabolic: from and to lie on the same side of the fixed point");
  double h = 1.0 / (to - p) - 1.0 / (from - p);
  return {1 + h * p, -h * p * p, h, 1 - h * p};
}

namespace {

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int i) { return parent[i] == i ? i : parent[i] = find(parent[i]); }
  void unite(int a, int b) { parent[find(a)] = find(b); }
};

void compute_cycles(GeodesicPolygon& p) {
  const int n = static_cast<int>(p.vertices.size());
  UnionFind uf(n);
  for (const auto& pr : p.pairings) {
    const int s0 = pr.source, s1 = (pr.source + 1) % n;
    const int t0 = pr.target, t1 = (pr.target + 1) % n;
    auto im0 = pr.m.apply(p.vertices[s0]), im1 = pr.m.apply(p.vertices[s1]);
    if (im0.same(p.vertices[t1]) && im1.same(p.vertices[t0])) {
      uf.unite(s0, t1);
      uf.unite(s1, t0);
    } else if (im0.same(p.vertices[t0]) && im1.same(p.vertices[t1])) {
      uf.unite(s0, t0);
      uf.unite(s1, t1);
    } else {
      throw NumericError("side pairing " + pr.label + " does not map its side onto the target");
    }
  }
  std::vector<std::vector<int>> groups(n);
  for (int i = 0; i < n; ++i) groups[uf.find(i)].push_back(i);
  // members are pushed in index order, so sorting by front() orders by smallest vertex
  p.cycles.clear();
  for (auto& grp : groups)
    if (!grp.empty()) p.cycles.push_back(grp);
  std::sort(p.cycles.begin(), p.cycles.end(),
            [](const auto& x, const auto& y) { return x.front() < y.front(); });
}

void make_sides(GeodesicPolygon& p) {
  const int n = static_cast<int>(p.vertices.size());
  p.sides.clear();
  for (int i = 0; i < n; ++i) p.sides.push_back({p.vertices[i], p.vertices[(i + 1) % n]});
}

}  // namespace

GeodesicPolygon build_polygon(const std::vector<BoundaryPoint>& omega,
                              const std::vector<double>& eps) {
  if (omega.size() < 4 || omega.size() % 2) throw DomainError("build_polygon: need 2g+2 omega points, g >= 1");
  const int g = static_cast<int>(omega.size() - 2) / 2;
  if (static_cast<int>(eps.size()) != 2 * g) throw DomainError("build_polygon: need 2g epsilon points");
  for (int i = 0; i + 1 < static_cast<int>(omega.size()); ++i)
    if (omega[i].infinite) throw DomainError("build_polygon: only the last omega may be infinite");
  // interleaving w1 < w2 < e1 < w3 < e2 < ... < e_2g < w_2g+2
  std::vector<double> chain{omega[0].x, omega[1].x};
  for (int k = 1; k <= 2 * g; ++k) {
    chain.push_back(eps[k - 1]);
    if (k < 2 * g) chain.push_back(omega[k + 1].x);
  }
  chain.push_back(omega.back().infinite ? INFINITY : omega.back().x);
  for (size_t i = 0; i + 1 < chain.size(); ++i)
    if (!(chain[i] < chain[i + 1]))
      throw DomainError("build_polygon: ordering violation in omega/epsilon interleaving");

  GeodesicPolygon p;
  p.g = g;
  p.vertices.push_back(omega[0]);
  p.vertex_labels.push_back("w1");
  for (int k = 1; k <= 2 * g; ++k) {
    p.vertices.push_back(omega[k]);
    p.vertex_labels.push_back("w" + std::to_string(k + 1));
    p.vertices.push_back(BoundaryPoint::at(eps[k - 1]));
    p.vertex_labels.push_back("e" + std::to_string(k));
  }
  p.vertices.push_back(omega.back());
  p.vertex_labels.push_back("w" + std::to_string(2 * g + 2));
  make_sides(p);

  std::vector<RealMobius> v(2 * g + 1);
  v[0] = make_parabolic(omega.back(), omega[0].x, eps[2 * g - 1]);
  p.pairings.push_back({"V0", 4 * g + 1, 4 * g, v[0]});
  for (int k = 1; k <= 2 * g; ++k) {
    double prev = k == 1 ? omega[0].x : eps[k - 2];
    v[k] = make_parabolic(omega[k], eps[k - 1], prev);
    p.pairings.push_back({"V" + std::to_string(k), 2 * k - 1, 2 * k - 2, v[k]});
  }
  RealMobius prod;
  for (int k = 1; k <= 2 * g; ++k) prod = prod * v[k];
  auto img = (v[0] * prod).apply(BoundaryPoint::at(eps[2 * g - 1]));
  p.closure_residual = img.infinite ? INFINITY : std::abs(img.x - eps[2 * g - 1]);
  if (!(p.closure_residual <= 1e-9)) throw NumericError("build_polygon: closure identity fails");
  compute_cycles(p);
  return p;
}

GeodesicPolygon doubled_polygon(const GeodesicPolygon& px) {
  if (px.doubled) throw DomainError("doubled_polygon: polygon is already doubled");
  const int g = px.g;
  const int n = 4 * g + 2;
  std::vector<RealMobius> v(2 * g + 1);
  for (const auto& pr : px.pairings) v[std::stoi(pr.label.substr(1))] = pr.m;
  GeodesicPolygon p;
  p.g = g;
  p.doubled = true;
  for (int i = 0; i <= 4 * g; ++i) {
    p.vertices.push_back(px.vertices[i]);
    p.vertex_labels.push_back(px.vertex_labels[i]);
  }
  for (int i = 1; i <= 4 * g; ++i) {
    p.vertices.push_back(v[0].apply(px.vertices[i]));
    p.vertex_labels.push_back("V0(" + px.vertex_labels[i] + ")");
  }
  p.vertices.push_back(px.vertices[n - 1]);
  p.vertex_labels.push_back(px.vertex_labels[n - 1]);
  make_sides(p);
  p.pairings.push_back({"T0", 8 * g + 1, 8 * g, v[0] * v[0]});
  for (int k = 1; k <= 2 * g; ++k)
    p.pairings.push_back({"T" + std::to_string(k), 2 * k - 1, 4 * g + 2 * k - 2, v[0] * v[k]});
  for (int k = 1; k <= 2 * g; ++k)
    p.pairings.push_back(
        {"T" + std::to_string(k + 2 * g), 2 * k - 2, 4 * g + 2 * k - 1, v[0] * v[k].inverse()});
  p.closure_residual = px.closure_residual;
  compute_cycles(p);
  return p;
}

int euler_characteristic(const GeodesicPolygon& p) { return p.c() - p.s() + 1; }

int genus_of(const GeodesicPolygon& p, bool doubled) {
  if (doubled && !p.doubled) return genus_of(doubled_polygon(p), true);
  int e = euler_characteristic(p);
  if ((2 - e) % 2 || e > 2) throw NumericError("genus_of: inconsistent cycle decomposition");
  return (2 - e) / 2;
}

int free_parameter_count(int g) {
  if (g < 1) throw DomainError("free_parameter_count: g must be >= 1");
  // 2(2g+1) endpoints, minus 3 for PSL2(R), minus 1 for the closure identity
  return 2 * (2 * g + 1) - 3 - 1;
}

GeodesicPolygon default_polygon(int g) {
  if (g < 1) throw DomainError("default_polygon: g must be >= 1");
  std::vector<BoundaryPoint> omega{BoundaryPoint::at(-0.5)};
  for (int k = 0; k < 2 * g; ++k) omega.push_back(BoundaryPoint::at(k));
  omega.push_back(BoundaryPoint::inf());
  std::vector<double> eps;
  for (int k = 1; k <= 2 * g; ++k) eps.push_back(k - 0.5);
  return build_polygon(omega, eps);
}

cplx disc_map(cplx tau) { return I * (tau - 1.0 - I) / (tau - 1.0 + I); }

cplx disc_map(const BoundaryPoint& p) { return p.infinite ? I : disc_map(cplx(p.x, 0)); }

ArcGeometry arc_geometry(const Side& s) {
  ArcGeometry a;
  cplx z1, z2, z3;
  if (s.p.infinite || s.q.infinite) {
    double x = s.p.infinite ? s.q.x : s.p.x;
    a.line = true;
    a.center = x;
    a.radius = INFINITY;
    z1 = disc_map(cplx(x, 0));
    z2 = I;
    z3 = disc_map(cplx(x, 1));
  } else {
    a.center = 0.5 * (s.p.x + s.q.x);
    a.radius = 0.5 * std::abs(s.q.x - s.p.x);
    z1 = disc_map(cplx(s.p.x, 0));
    z2 = disc_map(cplx(s.q.x, 0));
    z3 = disc_map(cplx(a.center, a.radius));
  }
  // circumcircle of three points
  cplx w = (z3 - z1) / (z2 - z1);
  if (std::abs(w.imag()) < 1e-12) {
    a.disc_line = true;
    a.disc_radius = INFINITY;
    return a;
  }
  cplx c = (z2 - z1) * (w - std::norm(w)) / (2.0 * I * w.imag()) + z1;
  a.disc_center = c;
  a.disc_radius = std::abs(z1 - c);
  return a;
}

}  // namespace unif
