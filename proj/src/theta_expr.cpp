#include "unif/theta_expr.hpp"

#include <sstream>

namespace unif::expr {

namespace {

Expr make(Node n) { return Expr(std::make_shared<const Node>(std::move(n))); }

Expr leaf(Kind k, Affine a) {
  if (a.c.num <= 0) throw DomainError("theta expression: argument scale must be positive");
  Node n{};
  n.kind = k;
  n.arg = a;
  return make(n);
}

Expr binary(Kind k, const Expr& x, const Expr& y) {
  Node n{};
  n.kind = k;
  n.a = x;
  n.b = y;
  return make(n);
}

std::string cstr(cplx v) {
  std::ostringstream os;
  os.precision(17);
  if (v.imag() == 0)
    os << v.real();
  else
    os << "(" << v.real() << (v.imag() < 0 ? "-" : "+") << std::abs(v.imag()) << "i)";
  return os.str();
}

std::string node_str(const NodePtr& n) {
  if (!n) return "<empty>";
  switch (n->kind) {
    case Kind::Const: return cstr(n->value);
    case Kind::Tau: return "tau";
    case Kind::Theta2: return "t2(" + n->arg.str() + ")";
    case Kind::Theta3: return "t3(" + n->arg.str() + ")";
    case Kind::Theta4: return "t4(" + n->arg.str() + ")";
    case Kind::Eta: return "eta(" + n->arg.str() + ")";
    case Kind::EtaW: return "etaw(" + n->arg.str() + ")";
    case Kind::Add: return "(" + node_str(n->a.node()) + " + " + node_str(n->b.node()) + ")";
    case Kind::Sub: return "(" + node_str(n->a.node()) + " - " + node_str(n->b.node()) + ")";
    case Kind::Mul: return node_str(n->a.node()) + "*" + node_str(n->b.node());
    case Kind::Div: return node_str(n->a.node()) + "/" + node_str(n->b.node());
    case Kind::Neg: return "-" + node_str(n->a.node());
    case Kind::PowInt: return node_str(n->a.node()) + "^" + std::to_string(n->ipow);
    case Kind::PowRat: return node_str(n->a.node()) + "^(" + n->rpow.str() + ")";
    case Kind::Exp: return "exp(" + node_str(n->a.node()) + ")";
    case Kind::Log: return "log(" + node_str(n->a.node()) + ")";
  }
  return "?";
}

}  // namespace

Expr::Expr(cplx v) : Expr(c(v)) {}
Expr::Expr(double v) : Expr(c(cplx(v, 0))) {}

Expr c(cplx v) {
  Node n{};
  n.kind = Kind::Const;
  n.value = v;
  return make(n);
}
Expr tau() {
  Node n{};
  n.kind = Kind::Tau;
  return make(n);
}
Expr t2(Affine a) { return leaf(Kind::Theta2, a); }
Expr t3(Affine a) { return leaf(Kind::Theta3, a); }
Expr t4(Affine a) { return leaf(Kind::Theta4, a); }
Expr eta(Affine a) { return leaf(Kind::Eta, a); }
Expr etaw(Affine a) { return leaf(Kind::EtaW, a); }

Expr operator+(const Expr& x, const Expr& y) { return binary(Kind::Add, x, y); }
Expr operator-(const Expr& x, const Expr& y) { return binary(Kind::Sub, x, y); }
Expr operator*(const Expr& x, const Expr& y) { return binary(Kind::Mul, x, y); }
Expr operator/(const Expr& x, const Expr& y) { return binary(Kind::Div, x, y); }
Expr operator-(const Expr& x) {
  Node n{};
  n.kind = Kind::Neg;
  n.a = x;
  return make(n);
}
Expr pow(const Expr& x, int p) {
  Node n{};
  n.kind = Kind::PowInt;
  n.a = x;
  n.ipow = p;
  return make(n);
}
Expr pow(const Expr& x, Rational p) {
  if (p.den == 1) return pow(x, static_cast<int>(p.num));
  Node n{};
  n.kind = Kind::PowRat;
  n.a = x;
  n.rpow = p;
  return make(n);
}
Expr exp(const Expr& x) {
  Node n{};
  n.kind = Kind::Exp;
  n.a = x;
  return make(n);
}
Expr log(const Expr& x) {
  Node n{};
  n.kind = Kind::Log;
  n.a = x;
  return make(n);
}

std::string Expr::str() const { return node_str(n_); }

Jet Expr::jet(cplx t, int order) const {
  Evaluator ev(t, order);
  return ev.eval(*this);
}

const ThetaJet& Evaluator::jets(const Affine& a) {
  auto it = cache_.find(a);
  if (it != cache_.end()) return it->second;
  return cache_.emplace(a, theta_jet_unchecked(tau_, a, order_)).first->second;
}

Jet Evaluator::eval(const Expr& e) {
  const NodePtr& n = e.node();
  if (!n) throw DomainError("theta expression: empty node");
  switch (n->kind) {
    case Kind::Const: return Jet::constant(order_, n->value);
    case Kind::Tau: return Jet::variable(order_, tau_);
    case Kind::Theta2: return jets(n->arg).t2;
    case Kind::Theta3: return jets(n->arg).t3;
    case Kind::Theta4: return jets(n->arg).t4;
    case Kind::Eta: return jets(n->arg).eta;
    case Kind::EtaW: return jets(n->arg).etaw;
    case Kind::Add: return eval(n->a) + eval(n->b);
    case Kind::Sub: return eval(n->a) - eval(n->b);
    case Kind::Mul: return eval(n->a) * eval(n->b);
    case Kind::Div: {
      Jet den = eval(n->b);
      if (den.value() == cplx{}) throw NumericError("theta expression: division by zero");
      return eval(n->a) / den;
    }
    case Kind::Neg: return -eval(n->a);
    case Kind::PowInt: return unif::pow(eval(n->a), n->ipow);
    case Kind::PowRat: return unif::pow(eval(n->a), cplx(n->rpow.value(), 0));
    case Kind::Exp: return unif::exp(eval(n->a));
    case Kind::Log: return unif::log(eval(n->a));
  }
  throw DomainError("theta expression: unknown node");
}

}  // namespace unif::expr
