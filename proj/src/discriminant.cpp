#include <sstream>

#include "unif/curves.hpp"

namespace unif {

namespace {

using QPoly = std::vector<BigRational>;  // lowest degree first

void trim(QPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

BigRational qeval(const QPoly& p, const BigRational& x) {
  BigRational r = 0;
  for (auto it = p.rbegin(); it != p.rend(); ++it) r = r * x + *it;
  return r;
}

BigRational determinant(std::vector<std::vector<BigRational>> m) {
  const size_t n = m.size();
  BigRational det = 1;
  for (size_t c = 0; c < n; ++c) {
    size_t piv = c;
    while (piv < n && m[piv][c] == 0) ++piv;
    if (piv == n) return 0;
    if (piv != c) {
      std::swap(m[piv], m[c]);
      det = -det;
    }
    det *= m[c][c];
    for (size_t r = c + 1; r < n; ++r) {
      if (m[r][c] == 0) continue;
      BigRational f = m[r][c] / m[c][c];
      for (size_t k = c; k < n; ++k) m[r][k] -= f * m[c][k];
    }
  }
  return det;
}

// Sylvester resultant of p (degree n) and q (degree m), coefficients highest first.
BigRational resultant(const std::vector<BigRational>& p, const std::vector<BigRational>& q) {
  const size_t n = p.size() - 1, m = q.size() - 1;
  const size_t s = n + m;
  if (s == 0) return 1;
  std::vector<std::vector<BigRational>> mat(s, std::vector<BigRational>(s, 0));
  for (size_t r = 0; r < m; ++r)
    for (size_t k = 0; k <= n; ++k) mat[r][r + k] = p[k];
  for (size_t r = 0; r < n; ++r)
    for (size_t k = 0; k <= m; ++k) mat[m + r][r + k] = q[k];
  return determinant(mat);
}

// Newton interpolation through (x_k, v_k), returned lowest degree first.
QPoly interpolate(const std::vector<BigRational>& xs, std::vector<BigRational> v) {
  const size_t n = xs.size();
  for (size_t j = 1; j < n; ++j)
    for (size_t i = n - 1; i >= j; --i) {
      v[i] = (v[i] - v[i - 1]) / (xs[i] - xs[i - j]);
      if (i == j) break;
    }
  QPoly p{v[n - 1]};
  for (size_t i = n - 1; i-- > 0;) {
    // p = p * (x - xs[i]) + v[i]
    QPoly np(p.size() + 1, 0);
    for (size_t k = 0; k < p.size(); ++k) {
      np[k + 1] += p[k];
      np[k] -= p[k] * xs[i];
    }
    np[0] += v[i];
    p = std::move(np);
  }
  trim(p);
  return p;
}

QPoly exact_divide(QPoly num, const QPoly& den) {
  if (den.empty()) throw DomainError("discriminant: division by the zero polynomial");
  if (num.size() < den.size()) {
    trim(num);
    if (num.empty()) return {};
    throw NumericError("discriminant: leading coefficient does not divide the resultant");
  }
  QPoly q(num.size() - den.size() + 1, 0);
  for (size_t i = q.size(); i-- > 0;) {
    BigRational c = num[i + den.size() - 1] / den.back();
    q[i] = c;
    for (size_t k = 0; k < den.size(); ++k) num[i + k] -= c * den[k];
  }
  trim(num);
  if (!num.empty()) throw NumericError("discriminant: leading coefficient does not divide the resultant");
  trim(q);
  return q;
}

}  // namespace

std::string DiscriminantResult::str() const {
  std::ostringstream os;
  bool first = true;
  for (size_t i = coeffs.size(); i-- > 0;) {
    const BigInt& c = coeffs[i];
    if (c == 0) continue;
    BigInt a = boost::multiprecision::abs(c);
    if (!first) os << (c < 0 ? " - " : " + ");
    else if (c < 0) os << "-";
    first = false;
    if (a != 1 || i == 0) os << a << (i ? "*" : "");
    if (i) os << "x" << (i > 1 ? "^" + std::to_string(i) : "");
  }
  return first ? "0" : os.str();
}

DiscriminantResult discriminant_y(const Poly2& f) {
  const int n = f.deg_y(), dx = f.deg_x();
  if (n < 1) throw DomainError("discriminant_y: F does not depend on y");
  // a_j(x) for j = 0..n
  std::vector<QPoly> a(n + 1, QPoly(dx + 1, 0));
  for (const auto& t : f.terms()) a[t.j][t.i] += BigRational(t.coeff.num, t.coeff.den);
  for (auto& p : a) trim(p);
  if (a[n].empty()) throw DomainError("discriminant_y: degenerate leading coefficient");
  DiscriminantResult out;
  out.constant_leading = a[n].size() == 1;

  const int bound = (2 * n - 1) * dx;
  std::vector<BigRational> xs, vals;
  for (int k = 0; k <= bound; ++k) {
    BigRational x = k;
    std::vector<BigRational> p, q;
    for (int j = n; j >= 0; --j) p.push_back(qeval(a[j], x));
    for (int j = n; j >= 1; --j) q.push_back(j * qeval(a[j], x));
    // formal degree n even where a_n(x) vanishes: the Sylvester determinant is
    // a polynomial in x, so its values interpolate correctly
    BigRational r = resultant(p, q);
    xs.push_back(x);
    vals.push_back(r);
  }
  QPoly res = interpolate(xs, vals);
  QPoly d = exact_divide(res, a[n]);
  if (d.empty()) throw DomainError("discriminant_y: F is not squarefree in y");
  if ((n * (n - 1) / 2) % 2) for (auto& c : d) c = -c;
  // primitive integer polynomial with positive leading coefficient
  BigInt l = 1;
  for (const auto& c : d) l = boost::multiprecision::lcm(l, BigInt(denominator(c)));
  std::vector<BigInt> ints;
  for (const auto& c : d) ints.push_back(BigInt(numerator(BigRational(c * l))));
  BigInt g = 0;
  for (const auto& c : ints) g = boost::multiprecision::gcd(g, boost::multiprecision::abs(c));
  for (auto& c : ints) c /= g;
  if (ints.back() < 0) for (auto& c : ints) c = -c;
  out.coeffs = std::move(ints);
  return out;
}

}  // namespace unif
