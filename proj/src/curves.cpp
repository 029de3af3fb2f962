#include "unif/curves.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <map>
#include <sstream>

#include "unif/elliptic.hpp"
#include "unif/groups.hpp"

namespace unif {

using namespace expr;

Poly2::Poly2(std::vector<Monomial> terms) : terms_(std::move(terms)) {
  for (const auto& t : terms_)
    if (t.i < 0 || t.j < 0) throw DomainError("Poly2: negative exponent");
}

int Poly2::deg_x() const {
  int d = 0;
  for (const auto& t : terms_) d = std::max(d, t.i);
  return d;
}

int Poly2::deg_y() const {
  int d = 0;
  for (const auto& t : terms_) d = std::max(d, t.j);
  return d;
}

cplx Poly2::eval(cplx x, cplx y) const {
  cplx s{};
  for (const auto& t : terms_) s += t.coeff.value() * std::pow(x, t.i) * std::pow(y, t.j);
  return s;
}

double Poly2::term_scale(cplx x, cplx y) const {
  double s = 0;
  for (const auto& t : terms_) s += std::abs(t.coeff.value() * std::pow(x, t.i) * std::pow(y, t.j));
  return s;
}

std::string Poly2::str() const {
  std::ostringstream os;
  bool first = true;
  for (const auto& t : terms_) {
    Rational c = t.coeff;
    bool neg = c.num < 0;
    if (neg) c.num = -c.num;
    if (!first) os << (neg ? " - " : " + ");
    else if (neg) os << "-";
    first = false;
    bool one = c.num == 1 && c.den == 1;
    if (!one || (t.i == 0 && t.j == 0)) os << c.str();
    if (t.i) os << (one ? "" : "*") << "x" << (t.i > 1 ? "^" + std::to_string(t.i) : "");
    if (t.j) os << ((one && !t.i) ? "" : "*") << "y" << (t.j > 1 ? "^" + std::to_string(t.j) : "");
  }
  return first ? "0" : os.str();
}

namespace {

struct Parser {
  const std::string& s;
  size_t p = 0;
  void skip() {
    while (p < s.size() && std::isspace(static_cast<unsigned char>(s[p]))) ++p;
  }
  bool eat(char c) {
    skip();
    if (p < s.size() && s[p] == c) {
      ++p;
      return true;
    }
    return false;
  }
  std::int64_t integer() {
    skip();
    size_t start = p;
    while (p < s.size() && std::isdigit(static_cast<unsigned char>(s[p]))) ++p;
    if (start == p) fail("expected a number");
    return std::stoll(s.substr(start, p - start));
  }
  [[noreturn]] void fail(const std::string& what) {
    throw DomainError("polynomial parse error at offset " + std::to_string(p) + ": " + what);
  }
  bool peek_digit() {
    skip();
    return p < s.size() && std::isdigit(static_cast<unsigned char>(s[p]));
  }
  bool peek_var() {
    skip();
    return p < s.size() && (s[p] == 'x' || s[p] == 'y');
  }
};

}  // namespace

Poly2 Poly2::parse(const std::string& text) {
  Parser ps{text};
  std::vector<Monomial> terms;
  bool first = true;
  while (true) {
    ps.skip();
    if (ps.p >= text.size()) break;
    int sign = 1;
    if (ps.eat('+')) {
    } else if (ps.eat('-')) {
      sign = -1;
    } else if (!first) {
      ps.fail("expected + or -");
    }
    first = false;
    Monomial m{Rational(sign), 0, 0};
    if (ps.peek_digit()) {
      std::int64_t num = ps.integer(), den = 1;
      if (ps.eat('/')) den = ps.integer();
      if (den == 0) ps.fail("zero denominator");
      m.coeff = Rational(sign * num, den);
      ps.eat('*');
    } else if (!ps.peek_var()) {
      ps.fail("expected a coefficient or a variable");
    }
    while (ps.peek_var()) {
      char v = text[ps.p++];
      int e = 1;
      if (ps.eat('^')) e = static_cast<int>(ps.integer());
      (v == 'x' ? m.i : m.j) += e;
      ps.eat('*');
    }
    terms.push_back(m);
  }
  if (terms.empty()) throw DomainError("polynomial parse error: empty input");
  return Poly2(std::move(terms));
}

namespace {

Poly2 merge(const std::vector<std::pair<BigRational, std::pair<int, int>>>& raw) {
  std::map<std::pair<int, int>, BigRational> acc;
  for (const auto& [c, ij] : raw) acc[ij] += c;
  std::vector<Monomial> out;
  // descending total degree, then descending x degree
  std::vector<std::pair<std::pair<int, int>, BigRational>> v(acc.begin(), acc.end());
  std::sort(v.begin(), v.end(), [](const auto& a, const auto& b) {
    int da = a.first.first + a.first.second, db = b.first.first + b.first.second;
    return da != db ? da > db : a.first.first > b.first.first;
  });
  for (const auto& [ij, c] : v) {
    if (c == 0) continue;
    BigInt n = numerator(c), d = denominator(c);
    if (boost::multiprecision::abs(n) > BigInt(INT64_MAX) || d > BigInt(INT64_MAX))
      throw NumericError("Poly2: coefficient overflow");
    out.push_back({Rational(static_cast<std::int64_t>(n), static_cast<std::int64_t>(d)), ij.first, ij.second});
  }
  return Poly2(std::move(out));
}

BigRational big(const Rational& r) { return BigRational(r.num, r.den); }

}  // namespace

Poly2 operator+(const Poly2& a, const Poly2& b) {
  std::vector<std::pair<BigRational, std::pair<int, int>>> raw;
  for (const auto& t : a.terms()) raw.push_back({big(t.coeff), {t.i, t.j}});
  for (const auto& t : b.terms()) raw.push_back({big(t.coeff), {t.i, t.j}});
  return merge(raw);
}

Poly2 operator-(const Poly2& a, const Poly2& b) {
  std::vector<std::pair<BigRational, std::pair<int, int>>> raw;
  for (const auto& t : a.terms()) raw.push_back({big(t.coeff), {t.i, t.j}});
  for (const auto& t : b.terms()) raw.push_back({-big(t.coeff), {t.i, t.j}});
  return merge(raw);
}

Poly2 operator*(const Poly2& a, const Poly2& b) {
  std::vector<std::pair<BigRational, std::pair<int, int>>> raw;
  for (const auto& s : a.terms())
    for (const auto& t : b.terms()) raw.push_back({big(s.coeff) * big(t.coeff), {s.i + t.i, s.j + t.j}});
  return merge(raw);
}

Poly2 pow(const Poly2& a, int n) {
  if (n < 0) throw DomainError("Poly2 pow: negative exponent");
  Poly2 r = Poly2::parse("1");
  for (int k = 0; k < n; ++k) r = r * a;
  return r;
}

namespace {

const Affine kHalf{Rational(1, 2), Rational(0)};
const Affine kTwo{Rational(2), Rational(0)};
const Affine kThree{Rational(3), Rational(0)};
const Affine kFour{Rational(4), Rational(0)};
const Affine kFive{Rational(5), Rational(0)};
const Affine kSix{Rational(6), Rational(0)};
const Affine kTen{Rational(10), Rational(0)};

Expr modk(Affine a = {}) { return pow(t2(a), 2) / pow(t3(a), 2); }

std::vector<CurveSpec> build_registry() {
  std::vector<CurveSpec> r;
  auto add = [&](std::string id, std::string desc, std::string f, std::string xn, Expr x,
                 std::string yn, Expr y, std::optional<int> g, std::string notes = "") {
    r.push_back({std::move(id), std::move(desc), Poly2::parse(f), std::move(xn), std::move(yn),
                 std::move(x), std::move(y), g, std::move(notes)});
  };
  Expr X = t4() / t3();
  add("burnside", "Burnside curve", "y^2 - x^5 + x", "t4/t3", X, "4i eta^3(2tau)/t3^3",
      c(4.0 * I) * pow(eta(kTwo), 3) / pow(t3(), 3), 2);
  add("burnside_chi", "Burnside curve, geometric normalization", "y^2 - x^5 + x",
      "-t4(tau/2)/t3(tau/2)", -t4(kHalf) / t3(kHalf), "-4 eta^3/t3^3(tau/2)",
      c(-4.0) * pow(eta(), 3) / pow(t3(kHalf), 3), 2);
  add("jacobi_quartic", "Jacobi quartic", "x^4 + y^4 - 1", "t4/t3", X, "t2/t3", t2() / t3(), 3);
  add("fermat8", "Fermat curve n = 8", "x^8 + y^8 - 1", "t4(4tau)/t3(2tau)", t4(kFour) / t3(kTwo),
      "t2/(sqrt2 t3(2tau))", t2() / (c(std::sqrt(2.0)) * t3(kTwo)), 21);
  add("z9", "hyperelliptic y^2 = z^9 - z", "y^2 - x^9 + x", "t4(2tau)/t3", t4(kTwo) / t3(),
      "i t2^2/t3^3 sqrt(t4(2tau) t3)",
      c(I) * pow(t2(), 2) / pow(t3(), 3) * pow(t4(kTwo) * t3(), Rational(1, 2)), 4,
      "y is checked through the squared identity only");
  add("level3", "Jacobi modular equation of level 3", "x^4 - y^4 - 2x*y + 2x^3*y^3",
      "t4(6tau)/t3(3tau)", t4(kSix) / t3(kThree), "t4(2tau)/t3", t4(kTwo) / t3(), 3);
  add("level5", "Jacobi modular equation of level 5",
      "x^6 - y^6 + 5x^4y^2 - 5x^2y^4 + 4x*y - 4x^5*y^5", "t2(5tau)/(sqrt2 t3(10tau))",
      t2(kFive) / (c(std::sqrt(2.0)) * t3(kTen)), "t2/(sqrt2 t3(2tau))",
      t2() / (c(std::sqrt(2.0)) * t3(kTwo)), std::nullopt, "genus not stated");
  const Poly2 px = Poly2::parse("x"), py = Poly2::parse("y"), one = Poly2::parse("1");
  const Poly2 cx = pow(px, 3) - px, cy = pow(py, 3) - py;
  r.push_back({"kl3", "moduli k(tau), k(3tau)", pow(px - py, 4) - Poly2::parse("16") * cx * cy,
               "k(tau)", "k(3tau)", modk(), modk(kThree), 1, "J = 13^3/972"});
  r.push_back({"kl5", "moduli k(tau), k(5tau)",
               pow(px - py, 6) - Poly2::parse("64") * cx * cy *
                                     (Poly2::parse("4") * pow(px * py + one, 2) - pow(py - px, 2)),
               "k(tau)", "k(5tau)", modk(), modk(kFive), 3, ""});
  Expr h = pow(t3(), 2), e2 = c(2.0) * pow(eta(), 2);
  add("dedekind38", "curve from the Dedekind identities", "y^2 - 3x^5 - 10x^3 - 3x",
      "(t3^2+2eta^2)/(t3^2-2eta^2)", (h + e2) / (h - e2), "4(t4^4-t2^4)t3^2/(t3^2-2eta^2)^3",
      c(4.0) * (pow(t4(), 4) - pow(t2(), 4)) * h / pow(h - e2, 3), 2);
  add("elliptic47", "elliptic curve y^2 = x^3 + x", "y^2 - x^3 - x", "t3(4tau)/t2(4tau)",
      t3(kFour) / t2(kFour), "t2^2/(sqrt8 t2^2(4tau))",
      pow(t2(), 2) / (c(std::sqrt(8.0)) * pow(t2(kFour), 2)), 1);
  add("cyclic3", "cyclic cover z^3 = x^5 - x", "y^3 - x^5 + x", "t4/t3", X,
      "-16^(1/3) eta^2(2tau)/t3^2", c(-std::cbrt(16.0)) * pow(eta(kTwo), 2) / pow(t3(), 2), 4);
  add("cyclic6", "cyclic cover w^6 = x^5 - x", "y^6 - x^5 + x", "t4/t3", X,
      "i 16^(1/6) eta(2tau)/t3", c(I * std::pow(16.0, 1.0 / 6.0)) * eta(kTwo) / t3(), 10);
  const Poly2 qx = pow(px, 2) - px, qy = pow(py, 2) - py;
  r.push_back({"kappa_mu", "reducible curve in kappa = k^2, mu = k^2(3tau)",
               pow(px - py, 4) - Poly2::parse("128") * qx * qy *
                                     (Poly2::parse("2*x*y - x - y + 2")),
               "k^2", "k^2(3tau)", pow(modk(), 2), pow(modk(kThree), 2), 0, "reducible"});
  return r;
}

}  // namespace

const std::vector<CurveSpec>& registry() {
  static const std::vector<CurveSpec> r = build_registry();
  return r;
}

const CurveSpec& find_curve(const std::string& id) {
  for (const auto& c : registry())
    if (c.id == id) return c;
  throw DomainError("unknown curve id '" + id + "'");
}

CurveResidual curve_residual(const std::string& id, const std::vector<cplx>& taus) {
  const CurveSpec& cs = find_curve(id);
  CurveResidual rep;
  rep.id = id;
  for (cplx t : taus) {
    CurvePoint p;
    p.tau = t;
    try {
      Evaluator ev(t, 0);
      cplx x = ev.eval(cs.x).value(), y = ev.eval(cs.y).value();
      if (!is_finite(x) || !is_finite(y)) throw NumericError("non-finite parameter value");
      p.raw = std::abs(cs.F.eval(x, y));
      p.residual = p.raw / std::max(1.0, cs.F.term_scale(x, y));
      rep.max_residual = std::max(rep.max_residual, p.residual);
      rep.max_raw = std::max(rep.max_raw, p.raw);
      ++rep.used;
    } catch (const NumericError& e) {
      p.skipped = true;
      p.note = e.what();
      ++rep.skipped;
    }
    rep.points.push_back(p);
  }
  return rep;
}

namespace {

cplx phi_wp(cplx tau) {
  auto prm = WeierstrassParams::from_periods(4.0, 4.0 * tau);
  auto P = [&](cplx z) { return wp(z, prm).p; };
  auto dP = [&](cplx z) { return wp(z, prm).dp; };
  cplx num = (P(tau) - P(2.0 * tau)) * (P(tau / 2.0) - P(tau)) * (P(tau / 2.0) - P(tau + 2.0)) *
             (P(0.5) - P(2.0 * tau + 1.0)) * (P(0.5) - P(1.0));
  cplx den = (P(tau / 2.0) - P(1.0)) * (P(tau / 2.0) - P(2.0 * tau + 1.0)) * dP(0.5) * dP(tau);
  return 4.0 * I * num / den;
}

}  // namespace

BurnsideWpForms burnside_wp_forms(TauPoint tp) {
  const cplx tau = tp;
  auto prm = WeierstrassParams::from_periods(4.0, 4.0 * tau);
  auto P = [&](cplx z) { return wp(z, prm).p; };
  BurnsideWpForms f;
  f.chi = (P(1.0) - P(2.0)) / (P(tau) - P(2.0));
  f.phi = phi_wp(tau);
  f.curve = std::abs(f.phi * f.phi - (std::pow(f.chi, 5) - f.chi));
  f.theta_form = std::abs(f.chi + theta4(tau / 2.0) / theta3(tau / 2.0));
  f.phi_theta = std::abs(f.phi + 4.0 * std::pow(dedekind_eta(tau), 3) / std::pow(theta3(tau / 2.0), 3));
  const ProjMatrix& v1 = burnside_tables().v.matrices.at(1);
  f.involution = std::abs(phi_wp(mobius(v1, tau)) + f.phi);
  return f;
}

bool in_principal_domain(cplx t) {
  return t.imag() > 0 && std::abs(t.real()) <= 1 && std::abs(t - 0.5) >= 0.5 && std::abs(t + 0.5) >= 0.5;
}

namespace {
double curve_scaled(const Poly2& f, cplx x, cplx y) {
  return std::abs(f.eval(x, y)) / std::max(1.0, f.term_scale(x, y));
}
}  // namespace

KLRelation kl_relation_check(TauPoint tp) {
  const cplx tau = tp;
  if (!in_principal_domain(tau) || !in_principal_domain(3.0 * tau))
    throw DomainError("kl_relation_check: tau and 3 tau must lie in the principal domain");
  KLRelation r;
  r.k = modk()(tau);
  r.lambda = modk(kThree)(tau);
  for (cplx m : {r.k, r.lambda})
    if (std::abs(m) < 1e-14 || std::abs(m * m - 1.0) < 1e-14)
      throw DomainError("kl_relation_check: modulus at a singular value");
  cplx a = 3.0 * ellip_Kp(r.k) * ellip_K(r.lambda), b = ellip_Kp(r.lambda) * ellip_K(r.k);
  r.elliptic = std::abs(a - b) / std::max(std::abs(a), std::abs(b));
  cplx kap = r.k * r.k, mu = r.lambda * r.lambda;
  // F(1 - z) through K' of the modulus itself; 1 - mu rounds away the small mu
  auto f_comp = [](cplx m) { return 2.0 / pi * ellip_Kp(m); };
  cplx ha = 3.0 * f_comp(r.k) * hyp2f1_half(mu), hb = f_comp(r.lambda) * hyp2f1_half(kap);
  r.hypergeometric = std::abs(ha - hb) / std::max(std::abs(ha), std::abs(hb));
  r.kappa_mu_curve = curve_scaled(find_curve("kappa_mu").F, kap, mu);
  r.kl3_curve = curve_scaled(find_curve("kl3").F, r.k, r.lambda);
  return r;
}

Kl3Invariant kl3_j_check(const std::vector<cplx>& taus) {
  // w^2 = u^4 + 6 a2 u^2 + a4 with a2 = -1/6, a4 = 1; binary-quartic invariants
  BigRational a0 = 1, a2 = BigRational(-1, 6), a4 = 1;
  BigRational g2 = a0 * a4 + 3 * a2 * a2;
  BigRational g3 = a0 * a2 * a4 - a2 * a2 * a2;
  BigRational j = g2 * g2 * g2 / (g2 * g2 * g2 - 27 * g3 * g3);
  auto to_rat = [](const BigRational& q) {
    return Rational(static_cast<std::int64_t>(numerator(q)), static_cast<std::int64_t>(denominator(q)));
  };
  Kl3Invariant out{to_rat(g2), to_rat(g3), to_rat(j), {}, 0};
  auto prm = WeierstrassParams::from_invariants(out.g2.value(), out.g3.value());
  out.j_weierstrass = klein_j(prm.tau());
  // the model: p = k l = t^2, (k-l)^2 = 4t(t-1)^2, u = sqrt t, w = (k+l)/(2u)
  for (cplx tau : taus) {
    cplx k = modk()(tau), l = modk(kThree)(tau);
    cplx t = std::sqrt(k * l);
    cplx d = (k - l) * (k - l);
    if (std::abs(4.0 * t * (t - 1.0) * (t - 1.0) - d) > std::abs(-4.0 * t * (-t - 1.0) * (-t - 1.0) - d)) t = -t;
    cplx u = std::sqrt(t), w = (k + l) / (2.0 * u);
    cplx u2 = u * u;
    double res = std::abs(w * w - (u2 * u2 - u2 + 1.0)) / std::max(1.0, std::abs(w * w));
    out.model_residual = std::max(out.model_residual, res);
  }
  return out;
}

double j_bridge_residual(TauPoint tp) {
  const cplx tau = tp;
  cplx x = -theta4(tau / 2.0) / theta3(tau / 2.0);
  cplx x4 = std::pow(x, 4);
  cplx jx = std::pow(x4 * x4 + 14.0 * x4 + 1.0, 3) / (108.0 * std::pow(x * x4 - x, 4));
  cplx j = eisenstein(tp).J;
  return std::abs(jx - j) / std::max(1.0, std::abs(j));
}

}  // namespace unif
