#pragma once

#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

#include "nsym/hpoly.hpp"

namespace nsym::expr {

struct ParseError : std::runtime_error {
  ParseError(const std::string& msg, int line_, int col_)
      : std::runtime_error(msg + " at " + std::to_string(line_) + ":" + std::to_string(col_)),
        line(line_),
        col(col_) {}
  int line;
  int col;
};

enum class AtomKind {
  PiHat,   // pi_k
  QHat,    // q^i
  QHatFull,  // q^i_j
  IHat,    // I_k
  GenX,    // circle generator x
  GenY,    // circle generator y
  GenP,    // circle generator p
  Spin1,   // x1
  Spin2,   // x2
  Spin3,   // x3
  CQ1,     // base coordinate q1 (circle function input)
  CQ2,     // base coordinate q2
  CosPhi,  // cosphi
  SinPhi,  // sinphi
};

struct Expr;
using ExprPtr = std::shared_ptr<const Expr>;

// Abstract syntax of the little observable language. Sums carry a sign per
// summand; Scale multiplies a subtree by an exact scalar (rationals, i,
// hbar powers).
struct Expr {
  enum Kind { Atom, Scalar, Sum, Scale, SymProd, WedgeProd, Bracket } kind;

  AtomKind atom = AtomKind::PiHat;
  int i = 0, j = 0;  // atom indices

  HPoly scalar;  // Scalar and Scale coefficient

  std::vector<ExprPtr> kids;
  std::vector<int> signs;  // Sum: +1 / -1 per child

  static ExprPtr make_atom(AtomKind k, int i = 0, int j = 0);
  static ExprPtr make_scalar(HPoly value);
  static ExprPtr make_sum(std::vector<ExprPtr> kids, std::vector<int> signs);
  static ExprPtr make_scale(HPoly s, ExprPtr inner);
  static ExprPtr make_binary(Kind k, ExprPtr a, ExprPtr b);
};

bool equal(const Expr& a, const Expr& b);

ExprPtr parse(const std::string& text);
std::string print(const Expr& e);

}  // namespace nsym::expr
