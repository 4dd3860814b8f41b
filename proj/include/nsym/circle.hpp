#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "nsym/cartan.hpp"
#include "nsym/trigpoly.hpp"

namespace nsym::circle {

// Function on R^2 x S^1, stored as a Laurent-style sum of monomials
// w^a wbar^b e^{i m phi} with w = q1 + i q2. Reality means conj(f) == f.
class CircleFunc {
 public:
  struct Key {
    int wdeg = 0;
    int wbardeg = 0;
    int mode = 0;
    friend auto operator<=>(const Key&, const Key&) = default;
  };

  CircleFunc() = default;

  static CircleFunc constant(HPoly c);
  static CircleFunc w();
  static CircleFunc wbar();
  static CircleFunc q1();
  static CircleFunc q2();
  static CircleFunc emode(int m, HPoly c = HPoly(1));  // c * e^{i m phi}
  static CircleFunc cos_phi();
  static CircleFunc sin_phi();
  static CircleFunc from_trig(const TrigPoly& t);

  bool is_zero() const { return terms_.empty(); }
  const std::map<Key, HPoly>& terms() const { return terms_; }
  void add_term(Key k, const HPoly& c);

  bool is_real() const { return conj() == *this; }
  CircleFunc conj() const;

  CircleFunc diff_w() const;
  CircleFunc diff_wbar() const;
  CircleFunc diff_phi() const;
  // Coordinate derivative for the Cartan machinery: 0 -> q1, 1 -> q2, 2 -> phi.
  CircleFunc diff(size_t i) const;

  int w_degree() const;
  int wbar_degree() const;

  // Coefficient of w^k as a function of (wbar, phi).
  CircleFunc w_coefficient(int k) const;
  // For a w- and wbar-free function, the trig polynomial in phi.
  std::optional<TrigPoly> as_trig() const;

  CircleFunc operator-() const;
  friend CircleFunc operator+(const CircleFunc& a, const CircleFunc& b);
  friend CircleFunc operator-(const CircleFunc& a, const CircleFunc& b);
  friend CircleFunc operator*(const CircleFunc& a, const CircleFunc& b);
  CircleFunc& operator+=(const CircleFunc& o) { return *this = *this + o; }
  CircleFunc& operator-=(const CircleFunc& o) { return *this = *this - o; }
  CircleFunc& operator*=(const CircleFunc& o) { return *this = *this * o; }
  CircleFunc scaled(const HPoly& s) const;

  friend bool operator==(const CircleFunc& a, const CircleFunc& b) {
    return a.terms_ == b.terms_;
  }
  friend bool operator!=(const CircleFunc& a, const CircleFunc& b) { return !(a == b); }

  std::string to_string() const;

 private:
  std::map<Key, HPoly> terms_;
};

using CircleForm = FormT<CircleFunc>;
using CircleField = FieldT<CircleFunc>;

// Observable in the solved family: complex function F = i A w e^{-i phi}
// + B + i C with A, B, C real trig polynomials.
struct CircleObservable {
  TrigPoly A, B, C;

  bool is_zero() const { return A.is_zero() && B.is_zero() && C.is_zero(); }
  CircleFunc complex_rep() const;
  std::pair<CircleFunc, CircleFunc> components() const;

  CircleObservable operator-() const { return {-A, -B, -C}; }
  friend CircleObservable operator+(const CircleObservable& a, const CircleObservable& b) {
    return {a.A + b.A, a.B + b.B, a.C + b.C};
  }
  friend CircleObservable operator-(const CircleObservable& a, const CircleObservable& b) {
    return {a.A - b.A, a.B - b.B, a.C - b.C};
  }
  CircleObservable scaled(const HPoly& s) const {
    return {A.scaled(s), B.scaled(s), C.scaled(s)};
  }
  friend bool operator==(const CircleObservable& a, const CircleObservable& b) {
    return a.A == b.A && a.B == b.B && a.C == b.C;
  }
};

struct Generators {
  CircleObservable x, y, p;
};
Generators generators();

// Splits a complex function into the (A, B, C) family; nullopt when the
// function has wbar-dependence, quadratic-or-higher w terms, the wrong phase
// structure, or non-real A, B, C.
std::optional<CircleObservable> decompose(const CircleFunc& F);

struct StructureSolution {
  bool accepted = false;
  int violated_equation = 0;  // 1..6 when rejected
  CircleObservable observable;
  CircleFunc x_phi, x1, x2;
};

// Verifies the six structure-equation components for a candidate pair
// (f1, f2) of real functions and solves for the Hamiltonian field.
StructureSolution solve_structure(const CircleFunc& f1, const CircleFunc& f2);

// Poisson bracket through the complex representatives; closure of the
// family is certified by the decomposition step.
CircleObservable bracket(const CircleObservable& f, const CircleObservable& g);

struct CircleOperator {
  TrigPoly A, B, C;  // -i hbar A d/dphi (both components) + diag(B, C)
  friend bool operator==(const CircleOperator&, const CircleOperator&) = default;
};

CircleOperator quantize(const CircleObservable& f);

using State = std::pair<TrigPoly, TrigPoly>;
State apply(const CircleOperator& op, const State& state);

// Diagonal differential operator sum_k diag(a_k, b_k) d^k/dphi^k.
struct DiffOp {
  std::vector<std::pair<TrigPoly, TrigPoly>> coef;

  void prune();
  friend bool operator==(const DiffOp& a, const DiffOp& b);
  DiffOp scaled(const HPoly& s) const;
  friend DiffOp operator-(const DiffOp& a, const DiffOp& b);
};

DiffOp to_diffop(const CircleOperator& op);
DiffOp compose(const DiffOp& a, const DiffOp& b);

struct CircleDirac {
  bool holds = false;
  DiffOp commutator;
  DiffOp expected;  // -i hbar Q({f,g})
};
CircleDirac dirac_check_circle(const CircleObservable& f, const CircleObservable& g);

// The reduced 2-symplectic potential: theta^1 = cos phi dq1 + sin phi dq2,
// theta^2 = -sin phi dq1 + cos phi dq2, as 1-forms on (q1, q2, phi).
std::array<CircleForm, 2> reduced_potential();

// Exact kernel of the omega_J structure system over the truncated ansatz
// f = (sum_m A_m(w,wbar) e^{im phi}, B(w,wbar)).
struct JformKernel {
  std::vector<std::pair<CircleFunc, CircleFunc>> basis;
};
JformKernel jform_kernel(int max_mode, int max_qdeg);

}  // namespace nsym::circle
