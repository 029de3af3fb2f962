#pragma once

#include <optional>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "unif/theta_expr.hpp"

namespace unif {

// c * x^i * y^j
struct Monomial {
  Rational coeff;
  int i = 0, j = 0;
};

class Poly2 {
 public:
  Poly2() = default;
  explicit Poly2(std::vector<Monomial> terms);
  // Accepts sums of terms such as "y^2 - x^5 + x", "3/2*x*y^2", "-16 x^3 y".
  static Poly2 parse(const std::string& text);

  const std::vector<Monomial>& terms() const { return terms_; }
  int deg_x() const;
  int deg_y() const;
  cplx eval(cplx x, cplx y) const;
  // sum of |c x^i y^j|, the natural size of the terms
  double term_scale(cplx x, cplx y) const;
  std::string str() const;

 private:
  std::vector<Monomial> terms_;
};

// Exact arithmetic; like terms are merged and zero terms dropped.
Poly2 operator+(const Poly2& a, const Poly2& b);
Poly2 operator-(const Poly2& a, const Poly2& b);
Poly2 operator*(const Poly2& a, const Poly2& b);
Poly2 pow(const Poly2& a, int n);

struct CurveSpec {
  std::string id;
  std::string description;
  Poly2 F;
  std::string x_name, y_name;
  expr::Expr x, y;
  std::optional<int> genus;
  std::string notes;
};

const std::vector<CurveSpec>& registry();
const CurveSpec& find_curve(const std::string& id);

struct CurvePoint {
  cplx tau;
  double residual = 0;  // |F| / max(1, term scale)
  double raw = 0;       // |F|
  bool skipped = false;
  std::string note;
};

struct CurveResidual {
  std::string id;
  double max_residual = 0;
  double max_raw = 0;
  int used = 0, skipped = 0;
  std::vector<CurvePoint> points;
};

CurveResidual curve_residual(const std::string& id, const std::vector<cplx>& taus);

// Curve forms through the Weierstrass function with half-periods (2, 2 tau).
struct BurnsideWpForms {
  cplx chi, phi;
  double curve = 0;       // |phi^2 - (chi^5 - chi)|
  double theta_form = 0;  // |chi + t4(tau/2)/t3(tau/2)|
  double phi_theta = 0;   // |phi + 4 eta^3(tau)/t3^3(tau/2)|
  double involution = 0;  // |phi(V1 tau) + phi(tau)|
};
BurnsideWpForms burnside_wp_forms(TauPoint tau);

// |Re tau| <= 1 and outside the circles |tau -+ 1/2| = 1/2, where K(k(tau)) = (pi/2) t3^2.
bool in_principal_domain(cplx tau);

struct KLRelation {
  cplx k, lambda;
  double elliptic = 0;        // 3K'(k)K(l) - K'(l)K(k), relative
  double hypergeometric = 0;  // 3F(1-kappa)F(mu) - F(1-mu)F(kappa), relative
  double kappa_mu_curve = 0;  // scaled residual of the reducible curve
  double kl3_curve = 0;       // scaled residual of (k-l)^4 = 16(k^3-k)(l^3-l)
};
// Throws DomainError unless tau and 3 tau lie in the principal domain.
KLRelation kl_relation_check(TauPoint tau);

struct Kl3Invariant {
  Rational g2, g3;        // quartic model w^2 = u^4 - u^2 + 1
  Rational j_exact;       // g2^3/(g2^3 - 27 g3^2)
  cplx j_weierstrass;     // J of the lattice built from (g2, g3)
  double model_residual;  // max |w^2 - (u^4 - u^2 + 1)| over samples
};
Kl3Invariant kl3_j_check(const std::vector<cplx>& taus);

// |(1/108)(x^8+14x^4+1)^3/(x^5-x)^4 - J(tau)| at x = chi_B(tau), relative
double j_bridge_residual(TauPoint tau);

// Discriminant in y by an exact Sylvester resultant over Q.
using BigRational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

struct DiscriminantResult {
  std::vector<BigInt> coeffs;  // lowest degree first, primitive, positive leading coefficient
  bool constant_leading = true;  // y-leading coefficient independent of x
  int degree() const { return static_cast<int>(coeffs.size()) - 1; }
  std::string str() const;
};
DiscriminantResult discriminant_y(const Poly2& f);

}  // namespace unif
