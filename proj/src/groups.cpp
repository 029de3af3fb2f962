#include "unif/groups.hpp"

#include <cmath>
#include <deque>
#include <map>
#include <sstream>
#include <tuple>

namespace unif {

namespace {

std::int64_t mul(std::int64_t x, std::int64_t y) {
  std::int64_t r;
  if (__builtin_mul_overflow(x, y, &r)) throw NumericError("integer overflow in matrix product");
  return r;
}

std::int64_t add(std::int64_t x, std::int64_t y) {
  std::int64_t r;
  if (__builtin_add_overflow(x, y, &r)) throw NumericError("integer overflow in matrix product");
  return r;
}

std::int64_t mod(std::int64_t x, std::int64_t n) { return ((x % n) + n) % n; }

}  // namespace

ProjMatrix::ProjMatrix(std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t d)
    : a_(a), b_(b), c_(c), d_(d) {
  if (add(mul(a, d), -mul(b, c)) != 1) throw DomainError("matrix determinant must be 1");
  if (a_ < 0 || (a_ == 0 && c_ < 0)) {
    a_ = -a_;
    b_ = -b_;
    c_ = -c_;
    d_ = -d_;
  }
}

cplx ProjMatrix::apply(cplx tau) const { return mobius(*this, tau); }

std::string ProjMatrix::str() const {
  std::ostringstream os;
  os << "[[" << a_ << "," << b_ << "],[" << c_ << "," << d_ << "]]";
  return os.str();
}

ProjMatrix operator*(const ProjMatrix& x, const ProjMatrix& y) {
  return {add(mul(x.a(), y.a()), mul(x.b(), y.c())), add(mul(x.a(), y.b()), mul(x.b(), y.d())),
          add(mul(x.c(), y.a()), mul(x.d(), y.c())), add(mul(x.c(), y.b()), mul(x.d(), y.d()))};
}

GroupId group_from_name(const std::string& name) {
  if (name == "Gamma1" || name == "G1") return GroupId::Gamma1;
  if (name == "Gamma2" || name == "G2") return GroupId::Gamma2;
  if (name == "Gamma4" || name == "G4") return GroupId::Gamma4;
  if (name == "burnside" || name == "G_burnside") return GroupId::Burnside;
  throw DomainError("unknown group id: " + name);
}

bool congruent(const ProjMatrix& x, const ProjMatrix& y, std::int64_t n) {
  auto same = [&](int s) {
    return mod(x.a() - s * y.a(), n) == 0 && mod(x.b() - s * y.b(), n) == 0 &&
           mod(x.c() - s * y.c(), n) == 0 && mod(x.d() - s * y.d(), n) == 0;
  };
  return same(1) || same(-1);
}

bool membership(const ProjMatrix& m, GroupId g) {
  switch (g) {
    case GroupId::Gamma1:
      return true;
    case GroupId::Gamma2:
      return congruent(m, ProjMatrix{}, 2);
    case GroupId::Gamma4:
      return congruent(m, ProjMatrix{}, 4);
    case GroupId::Burnside: {
      // mod-8 classes; these are not determinant-1 integer matrices themselves
      static const std::int64_t raw[4][4] = {
          {1, 0, 0, 1}, {1, 4, 4, 1}, {5, 4, 0, 5}, {5, 0, 4, 5}};
      for (const auto& r : raw) {
        for (int s : {1, -1}) {
          if (mod(m.a() - s * r[0], 8) == 0 && mod(m.b() - s * r[1], 8) == 0 &&
              mod(m.c() - s * r[2], 8) == 0 && mod(m.d() - s * r[3], 8) == 0)
            return true;
        }
      }
      return false;
    }
  }
  return false;
}

cplx mobius(const ProjMatrix& m, cplx tau) {
  if (!(tau.imag() > 0)) throw DomainError("mobius: tau must lie in the upper half-plane");
  cplx den = double(m.c()) * tau + double(m.d());
  if (den == cplx{}) throw DomainError("mobius: image is the cusp at infinity");
  return (double(m.a()) * tau + double(m.b())) / den;
}

Reduction reduce_fundamental(cplx tau) {
  if (!(tau.imag() > 0)) throw DomainError("reduce_fundamental: Im(tau) must be positive");
  const double eps = 1e-13;
  ProjMatrix m;
  cplx t = tau;
  for (int guard = 0; guard < 10000; ++guard) {
    double n = std::floor(t.real() + 0.5);
    // Re = +1/2 goes to -1/2
    if (std::abs(t.real() - n - 0.5) < eps) n += 1;
    if (n != 0) {
      auto k = static_cast<std::int64_t>(n);
      m = ProjMatrix(1, -k, 0, 1) * m;
      t -= n;
    }
    double r = std::abs(t);
    if (r < 1 - eps || (std::abs(r - 1) <= eps && t.real() > eps)) {
      m = ProjMatrix(0, -1, 1, 0) * m;
      t = -1.0 / t;
      continue;
    }
    if (std::abs(t.real() - 0.5) < eps) continue;
    return {t, m};
  }
  throw NumericError("reduce_fundamental: no convergence");
}

std::int64_t nielsen_schreier(std::int64_t rank, std::int64_t index) {
  if (rank < 1 || index < 1) throw DomainError("nielsen_schreier: rank and index must be positive");
  return (rank - 1) * index + 1;
}

const BurnsideTables& burnside_tables() {
  static const BurnsideTables tables = [] {
    BurnsideTables t;
    t.v.name = "Gamma4 generators V0..V4";
    t.v.matrices = {{1, 4, 0, 1}, {1, 0, -4, 1}, {3, -4, 4, -5}, {7, -16, 4, -9}, {11, -36, 4, -13}};
    t.t.name = "Burnside group generators T0..T8";
    t.t.matrices = {{1, 8, 0, 1},     {15, -4, 4, -1},  {19, -24, 4, -5},
                    {23, -52, 4, -9}, {27, -88, 4, -13}, {17, 4, 4, 1},
                    {21, -16, 4, -3}, {25, -44, 4, -7}, {29, -80, 4, -11}};
    const auto& V = t.v.matrices;
    const auto& T = t.t.matrices;
    auto rel = [&](std::string text, const ProjMatrix& lhs, const ProjMatrix& rhs) {
      t.relations.push_back({std::move(text), lhs, rhs, lhs == rhs});
    };
    rel("T0 = V0^2", T[0], V[0] * V[0]);
    for (int k = 1; k <= 4; ++k) {
      rel("T" + std::to_string(k) + " = V0 V" + std::to_string(k), T[k], V[0] * V[k]);
      rel("T" + std::to_string(k + 4) + " = V0 V" + std::to_string(k) + "^-1", T[k + 4],
          V[0] * V[k].inverse());
    }
    for (const auto& r : t.relations)
      if (!r.holds) throw NumericError("generator table inconsistency: " + r.text);
    return t;
  }();
  return tables;
}

const std::vector<ProjMatrix>& gamma4_coset_reps() {
  static const std::vector<ProjMatrix> reps = [] {
    using Key = std::tuple<int, int, int, int>;
    auto key = [](const ProjMatrix& m) {
      Key k1{int(mod(m.a(), 4)), int(mod(m.b(), 4)), int(mod(m.c(), 4)), int(mod(m.d(), 4))};
      Key k2{int(mod(-m.a(), 4)), int(mod(-m.b(), 4)), int(mod(-m.c(), 4)), int(mod(-m.d(), 4))};
      return std::min(k1, k2);
    };
    const ProjMatrix S(0, -1, 1, 0), T(1, 1, 0, 1);
    std::vector<ProjMatrix> out;
    std::map<Key, bool> seen;
    std::deque<ProjMatrix> queue{ProjMatrix{}};
    seen[key(ProjMatrix{})] = true;
    while (!queue.empty()) {
      ProjMatrix m = queue.front();
      queue.pop_front();
      out.push_back(m);
      for (const auto& g : {S, T}) {
        ProjMatrix n = g * m;
        auto k = key(n);
        if (!seen.count(k)) {
          seen[k] = true;
          queue.push_back(n);
        }
      }
    }
    if (out.size() != 24) throw NumericError("coset enumeration did not give 24 classes");
    return out;
  }();
  return reps;
}

std::vector<cplx> coset_orbit(cplx tau) {
  std::vector<cplx> out;
  for (const auto& m : gamma4_coset_reps()) out.push_back(mobius(m, tau));
  return out;
}

}  // namespace unif
