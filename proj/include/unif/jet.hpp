#pragma once

#include <vector>

#include "unif/numerics.hpp"

namespace unif {

// Truncated Taylor series f(t0 + s) = sum_{k<=n} a_k s^k.
class Jet {
 public:
  Jet() : a_(1, cplx{}) {}
  Jet(int order, cplx c0);
  static Jet constant(int order, cplx c) { return Jet(order, c); }
  static Jet variable(int order, cplx t0);

  int order() const { return static_cast<int>(a_.size()) - 1; }
  cplx coeff(int k) const { return k < static_cast<int>(a_.size()) ? a_[k] : cplx{}; }
  cplx& operator[](int k) { return a_.at(k); }
  cplx operator[](int k) const { return a_.at(k); }
  cplx value() const { return a_[0]; }
  // k-th derivative, k! a_k.
  cplx deriv(int k) const;
  std::vector<cplx> derivatives() const;
  const std::vector<cplx>& coeffs() const { return a_; }

  Jet& operator+=(const Jet& o);
  Jet& operator-=(const Jet& o);
  Jet& operator*=(const Jet& o);
  Jet& operator/=(const Jet& o);
  Jet& operator+=(cplx c) { a_[0] += c; return *this; }
  Jet& operator-=(cplx c) { a_[0] -= c; return *this; }
  Jet& operator*=(cplx c);
  Jet& operator/=(cplx c);
  Jet operator-() const;

 private:
  std::vector<cplx> a_;
};

Jet operator+(Jet a, const Jet& b);
Jet operator-(Jet a, const Jet& b);
Jet operator*(const Jet& a, const Jet& b);
Jet operator/(const Jet& a, const Jet& b);
Jet operator+(Jet a, cplx c);
Jet operator+(cplx c, Jet a);
Jet operator-(Jet a, cplx c);
Jet operator-(cplx c, const Jet& a);
Jet operator*(Jet a, cplx c);
Jet operator*(cplx c, Jet a);
Jet operator/(Jet a, cplx c);
Jet operator/(cplx c, const Jet& a);

Jet exp(const Jet& a);
Jet log(const Jet& a);  // principal log of the constant term
Jet pow(const Jet& a, int p);
// Real or complex exponent, principal branch at the constant term.
Jet pow(const Jet& a, cplx p);
Jet sqrt(const Jet& a);
// Antiderivative with constant term c0; the top coefficient is dropped.
Jet integrate(const Jet& a, cplx c0);
// Derivative in s; order drops by one.
Jet differentiate(const Jet& a);
// g(s) = f(c s): coefficient k scaled by c^k.
Jet scale_argument(const Jet& a, cplx c);
Jet truncate(const Jet& a, int order);

}  // namespace unif
