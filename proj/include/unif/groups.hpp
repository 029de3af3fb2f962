#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "unif/numerics.hpp"

namespace unif {

// Element of PSL2(Z); stored with the first nonzero entry of (a, c) positive.
class ProjMatrix {
 public:
  ProjMatrix() : a_(1), b_(0), c_(0), d_(1) {}
  ProjMatrix(std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t d);
  std::int64_t a() const { return a_; }
  std::int64_t b() const { return b_; }
  std::int64_t c() const { return c_; }
  std::int64_t d() const { return d_; }
  ProjMatrix inverse() const { return {d_, -b_, -c_, a_}; }
  std::int64_t trace() const { return a_ + d_; }
  cplx apply(cplx tau) const;
  bool operator==(const ProjMatrix&) const = default;
  std::string str() const;

 private:
  std::int64_t a_, b_, c_, d_;
};

ProjMatrix operator*(const ProjMatrix& x, const ProjMatrix& y);

enum class GroupId { Gamma1, Gamma2, Gamma4, Burnside };
GroupId group_from_name(const std::string& name);

bool membership(const ProjMatrix& m, GroupId g);
// x == y in PSL2(Z/n), i.e. x ≡ ±y mod n
bool congruent(const ProjMatrix& x, const ProjMatrix& y, std::int64_t n);

cplx mobius(const ProjMatrix& m, cplx tau);

struct Reduction {
  cplx tau0;
  ProjMatrix m;  // tau0 = m(tau)
};
Reduction reduce_fundamental(cplx tau);

struct GeneratorTable {
  std::string name;
  std::vector<ProjMatrix> matrices;
};

struct Relation {
  std::string text;
  ProjMatrix lhs, rhs;
  bool holds = false;
};

struct BurnsideTables {
  GeneratorTable v, t;
  std::vector<Relation> relations;
};

// V0..V4 and T0..T8 as tabulated; throws if a stated relation fails.
const BurnsideTables& burnside_tables();

std::int64_t nielsen_schreier(std::int64_t rank, std::int64_t index);

// Representatives of Gamma(4)\Gamma(1) in BFS order over (S, T).
const std::vector<ProjMatrix>& gamma4_coset_reps();
std::vector<cplx> coset_orbit(cplx tau);

}  // namespace unif
