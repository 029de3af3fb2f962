#pragma once

#include <map>
#include <memory>
#include <string>

#include "unif/jet.hpp"
#include "unif/theta_eta.hpp"

namespace unif::expr {

enum class Kind { Const, Tau, Theta2, Theta3, Theta4, Eta, EtaW, Add, Sub, Mul, Div, Neg, PowInt, PowRat, Exp, Log };

struct Node;
using NodePtr = std::shared_ptr<const Node>;

// Immutable expression over theta constants at affine arguments.
class Expr {
 public:
  Expr() = default;
  Expr(cplx c);    // NOLINT: constants promote
  Expr(double c);  // NOLINT
  explicit Expr(NodePtr n) : n_(std::move(n)) {}

  // Jet of the expression in tau up to `order`.
  Jet jet(cplx tau, int order) const;
  cplx operator()(cplx tau) const { return jet(tau, 0).value(); }
  std::string str() const;
  const NodePtr& node() const { return n_; }

 private:
  NodePtr n_;
};

struct Node {
  Kind kind;
  cplx value{};   // Const
  Affine arg{};   // theta leaves
  int ipow = 0;   // PowInt
  Rational rpow;  // PowRat
  Expr a, b;
};

Expr c(cplx v);
Expr tau();
Expr t2(Affine a = {});
Expr t3(Affine a = {});
Expr t4(Affine a = {});
Expr eta(Affine a = {});
Expr etaw(Affine a = {});

Expr operator+(const Expr& x, const Expr& y);
Expr operator-(const Expr& x, const Expr& y);
Expr operator*(const Expr& x, const Expr& y);
Expr operator/(const Expr& x, const Expr& y);
Expr operator-(const Expr& x);
Expr pow(const Expr& x, int p);
// principal branch
Expr pow(const Expr& x, Rational p);
Expr exp(const Expr& x);
Expr log(const Expr& x);

// Evaluation context sharing theta jets between subexpressions.
class Evaluator {
 public:
  Evaluator(cplx tau, int order) : tau_(tau), order_(order) {}
  Jet eval(const Expr& e);

 private:
  const ThetaJet& jets(const Affine& a);
  cplx tau_;
  int order_;
  std::map<Affine, ThetaJet> cache_;
};

}  // namespace unif::expr
