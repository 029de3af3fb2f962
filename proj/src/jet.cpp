#include "unif/jet.hpp"

#include <algorithm>
#include <cmath>

namespace unif {

Jet::Jet(int order, cplx c0) : a_(std::max(order, 0) + 1, cplx{}) { a_[0] = c0; }

Jet Jet::variable(int order, cplx t0) {
  Jet j(order, t0);
  if (order >= 1) j.a_[1] = 1.0;
  return j;
}

cplx Jet::deriv(int k) const {
  double f = 1;
  for (int i = 2; i <= k; ++i) f *= i;
  return coeff(k) * f;
}

std::vector<cplx> Jet::derivatives() const {
  std::vector<cplx> d;
  for (int k = 0; k <= order(); ++k) d.push_back(deriv(k));
  return d;
}

static void match(std::vector<cplx>& a, const std::vector<cplx>& b) {
  if (b.size() < a.size()) a.resize(b.size());
}

Jet& Jet::operator+=(const Jet& o) {
  match(a_, o.a_);
  for (size_t k = 0; k < a_.size(); ++k) a_[k] += o.a_[k];
  return *this;
}

Jet& Jet::operator-=(const Jet& o) {
  match(a_, o.a_);
  for (size_t k = 0; k < a_.size(); ++k) a_[k] -= o.a_[k];
  return *this;
}

Jet& Jet::operator*=(const Jet& o) { return *this = *this * o; }
Jet& Jet::operator/=(const Jet& o) { return *this = *this / o; }

Jet& Jet::operator*=(cplx c) {
  for (auto& x : a_) x *= c;
  return *this;
}

Jet& Jet::operator/=(cplx c) {
  for (auto& x : a_) x /= c;
  return *this;
}

Jet Jet::operator-() const {
  Jet r(*this);
  for (auto& x : r.a_) x = -x;
  return r;
}

Jet operator+(Jet a, const Jet& b) { return a += b; }
Jet operator-(Jet a, const Jet& b) { return a -= b; }

Jet operator*(const Jet& a, const Jet& b) {
  int n = std::min(a.order(), b.order());
  Jet r(n, cplx{});
  for (int k = 0; k <= n; ++k) {
    cplx s{};
    for (int j = 0; j <= k; ++j) s += a[j] * b[k - j];
    r[k] = s;
  }
  return r;
}

Jet operator/(const Jet& a, const Jet& b) {
  int n = std::min(a.order(), b.order());
  if (b[0] == cplx{}) throw NumericError("jet division by a series vanishing at the base point");
  Jet r(n, cplx{});
  for (int k = 0; k <= n; ++k) {
    cplx s = a[k];
    for (int j = 1; j <= k; ++j) s -= b[j] * r[k - j];
    r[k] = s / b[0];
  }
  return r;
}

Jet operator+(Jet a, cplx c) { return a += c; }
Jet operator+(cplx c, Jet a) { return a += c; }
Jet operator-(Jet a, cplx c) { return a -= c; }
Jet operator-(cplx c, const Jet& a) { return (-a) + c; }
Jet operator*(Jet a, cplx c) { return a *= c; }
Jet operator*(cplx c, Jet a) { return a *= c; }
Jet operator/(Jet a, cplx c) { return a /= c; }
Jet operator/(cplx c, const Jet& a) { return Jet(a.order(), c) / a; }

Jet exp(const Jet& a) {
  // b' = a' b
  int n = a.order();
  Jet b(n, std::exp(a[0]));
  for (int k = 1; k <= n; ++k) {
    cplx s{};
    for (int j = 1; j <= k; ++j) s += double(j) * a[j] * b[k - j];
    b[k] = s / double(k);
  }
  return b;
}

Jet log(const Jet& a) {
  if (a[0] == cplx{}) throw NumericError("jet log of a series vanishing at the base point");
  // a' = a b'
  int n = a.order();
  Jet b(n, std::log(a[0]));
  for (int k = 1; k <= n; ++k) {
    cplx s{};
    for (int j = 1; j < k; ++j) s += double(j) * b[j] * a[k - j];
    b[k] = (a[k] - s / double(k)) / a[0];
  }
  return b;
}

Jet pow(const Jet& a, int p) {
  if (p < 0) return 1.0 / pow(a, -p);
  Jet r(a.order(), 1.0);
  Jet base = a;
  while (p) {
    if (p & 1) r = r * base;
    p >>= 1;
    if (p) base = base * base;
  }
  return r;
}

Jet pow(const Jet& b, cplx p) {
  if (b[0] == cplx{}) throw NumericError("jet power of a series vanishing at the base point");
  int n = b.order();
  Jet a(n, std::pow(b[0], p));
  for (int k = 1; k <= n; ++k) {
    cplx s{};
    for (int j = 1; j <= k; ++j) s += ((p + 1.0) * double(j) - double(k)) * b[j] * a[k - j];
    a[k] = s / (double(k) * b[0]);
  }
  return a;
}

Jet sqrt(const Jet& a) { return pow(a, cplx{0.5}); }

Jet integrate(const Jet& a, cplx c0) {
  int n = a.order();
  Jet r(n, c0);
  for (int k = 1; k <= n; ++k) r[k] = a[k - 1] / double(k);
  return r;
}

Jet differentiate(const Jet& a) {
  int n = std::max(a.order() - 1, 0);
  Jet r(n, cplx{});
  for (int k = 0; k < a.order(); ++k) r[k] = a[k + 1] * double(k + 1);
  return r;
}

Jet scale_argument(const Jet& a, cplx c) {
  Jet r(a);
  cplx f = 1;
  for (int k = 0; k <= a.order(); ++k) {
    r[k] = a[k] * f;
    f *= c;
  }
  return r;
}

Jet truncate(const Jet& a, int order) {
  order = std::max(0, std::min(order, a.order()));
  Jet r(order, cplx{});
  for (int k = 0; k <= order; ++k) r[k] = a[k];
  return r;
}

}  // namespace unif
