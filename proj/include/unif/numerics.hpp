#pragma once

#include <complex>
#include <cstdint>
#include <functional>
#include <numbers>
#include <random>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace unif {

using cplx = std::complex<double>;

inline constexpr double pi = std::numbers::pi;
inline constexpr cplx I{0.0, 1.0};

// Error hierarchy. DomainError: the caller violated a precondition.
// NumericError: the computation itself could not reach its target.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};
class DomainError : public Error {
 public:
  using Error::Error;
};
class NumericError : public Error {
 public:
  using Error::Error;
};
class SeriesTruncation : public NumericError {
 public:
  using NumericError::NumericError;
};
class ConvergenceError : public NumericError {
 public:
  using NumericError::NumericError;
};

// One verified relation: pass iff residual <= tol (NaN never passes).
struct CheckRow {
  std::string name;
  double residual = 0;
  double tol = 0;
  std::string note;
  bool informational = false;  // reported, never gated
  bool pass() const { return residual <= tol; }
};
using CheckTable = std::vector<CheckRow>;
bool all_pass(const CheckTable& t);

struct Tolerances {
  double identity_tol = 1e-10;
  double derivative_tol = 1e-6;
  double root_tol = 1e-9;
  double series_eps = 1e-16;
  void validate() const;
};

const Tolerances& default_tolerances();

bool is_finite(cplx z);
// Throws NumericError naming `what` if z is not finite.
cplx checked(cplx z, const char* what);

using CFun = std::function<cplx(cplx)>;

// Returns {f, f', ..., f^(order)} at tau; central differences at h and h/2
// combined by one Richardson step.
std::vector<cplx> fd_jet(const CFun& f, cplx tau, int order, double h);
// Same stencil for functions of a plane variable; no Im(tau) precondition.
std::vector<cplx> fd_jet_plane(const CFun& f, cplx z, int order, double h);

// Coefficients highest degree first: c[0] x^n + ... + c[n].
cplx poly_eval(const std::vector<cplx>& c, cplx x);
std::vector<cplx> poly_derivative(const std::vector<cplx>& c);
std::vector<cplx> poly_roots(const std::vector<cplx>& c, double tol = 1e-15,
                             int max_iter = 800);

struct NewtonResult {
  cplx z;
  int iterations = 0;
};
NewtonResult newton_solve(const CFun& f, const CFun& df, cplx z0,
                          double tol = 1e-12, int max_iter = 100);

// Seeded grid expansion. x_{n+1} = 6364136223846793005 x_n + 1442695040888963407
// mod 2^64, starting from x_0 = seed; each draw keeps the top 53 bits as a
// double in [0,1).
class Lcg64 {
 public:
  explicit Lcg64(std::uint64_t seed) : eng_(seed) {}
  double uniform();
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

 private:
  std::linear_congruential_engine<std::uint64_t, 6364136223846793005ULL,
                                  1442695040888963407ULL, 0ULL>
      eng_;
};

struct Box {
  double re_lo, re_hi, im_lo, im_hi;
};
// n points; real part drawn before imaginary part for each point.
std::vector<cplx> seeded_points(std::uint64_t seed, int n, const Box& box);

// Named grids used across the suites.
inline constexpr Box identity_box{-1.0, 1.0, 0.3, 3.0};
inline constexpr Box standard_box{-1.0, 1.0, 0.4, 2.5};

}  // namespace unif
