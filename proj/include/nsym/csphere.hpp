#pragma once

#include <array>
#include <map>
#include <optional>
#include <vector>

#include "nsym/cartan.hpp"
#include "nsym/circle.hpp"

namespace nsym::csphere {

// Quaternion over the rationals: a + b i^ + c j^ + d k^.
struct Quaternion {
  Rational a, b, c, d;

  friend Quaternion operator+(const Quaternion& x, const Quaternion& y) {
    return {x.a + y.a, x.b + y.b, x.c + y.c, x.d + y.d};
  }
  friend Quaternion operator-(const Quaternion& x, const Quaternion& y) {
    return {x.a - y.a, x.b - y.b, x.c - y.c, x.d - y.d};
  }
  friend Quaternion operator*(const Quaternion& x, const Quaternion& y) {
    return {x.a * y.a - x.b * y.b - x.c * y.c - x.d * y.d,
            x.a * y.b + x.b * y.a + x.c * y.d - x.d * y.c,
            x.a * y.c - x.b * y.d + x.c * y.a + x.d * y.b,
            x.a * y.d + x.b * y.c - x.c * y.b + x.d * y.a};
  }
  friend bool operator==(const Quaternion&, const Quaternion&) = default;
};

// Holomorphic polynomials on C^2 are plain MultiPolys in the variables z, w.
using HoloPoly = MultiPoly;

VarsPtr holo_vars();
VarsPtr real4_vars();

HoloPoly hz();
HoloPoly hw();
HoloPoly holo_constant(HPoly c);

// The spin variables x^1 = -izw, x^2 = i(z^2-w^2)/2, x^3 = (z^2+w^2)/2.
std::array<HoloPoly, 3> spin_variables();

// Coefficients of a spin observable f = C_i x^i.
struct SpinObservable {
  Rational c1, c2, c3;
  HoloPoly holo() const;
};

// Poisson bracket induced by the R^2-valued structure on C^2:
// {f, g} = (1/2)(f_z g_w - f_w g_z). This matches the bracket generated by
// the Hamiltonian vector fields below; the unnormalized f_z g_w - f_w g_z
// is twice this.
HoloPoly holo_bracket(const HoloPoly& f, const HoloPoly& g);

// (Re f, Im f) on R^4 under z = q1 + i q2, w = q3 + i q4.
std::pair<MultiPoly, MultiPoly> split_to_vector(const HoloPoly& f);

// Embeds a holomorphic polynomial into the complexified R^4 ring.
MultiPoly embed_real(const HoloPoly& f);

// Hamiltonian field 2X = -f_w d_z + f_z d_w + conjugate terms, as a real
// field on R^4.
PolyField c2_hamiltonian_field(const HoloPoly& f);

// Left-hand side of the sphere-tangency constraint as a real polynomial.
MultiPoly tangency_residual(const HoloPoly& f);

struct SpinKernel {
  std::vector<HoloPoly> basis;        // full kernel over real coefficients
  std::vector<HoloPoly> constants;    // the constant solutions (1 and i)
  std::vector<HoloPoly> spin_part;    // the non-constant solutions
};
SpinKernel spin_kernel(int max_deg);

// The radial field and the quaternionic frames: v^i from the left action,
// w^i from the right action.
struct QuaternionFrames {
  PolyField r;
  std::array<PolyField, 3> v;
  std::array<PolyField, 3> w;
};
QuaternionFrames quaternion_frames();

// Contact 1-forms theta^i with d theta^1 = dq1^dq2 + dq3^dq4,
// d theta^2 = dq1^dq3 - dq2^dq4, d theta^3 = dq1^dq4 + dq2^dq3.
std::array<PolyForm, 3> contact_forms();
std::array<PolyForm, 3> contact_differentials();

// S^3 structure equation df^i = -X -| d theta^i.
struct S3Solution {
  bool hamiltonian = false;
  int failing_component = 0;  // 1..3 when rejected
  std::array<MultiPoly, 3> f;
};
S3Solution solve_s3_structure(const PolyField& X);

// Solves for the field of a vector-valued S^3 observable and applies it:
// {F, G}^i = X_F(G^i).
std::optional<PolyField> s3_hamiltonian_field(const std::array<MultiPoly, 3>& F);
std::array<MultiPoly, 3> s3_bracket(const std::array<MultiPoly, 3>& F,
                                    const std::array<MultiPoly, 3>& G);

// Constant complex 2-form on C^2 over the basis (dz, dw, dzbar, dwbar).
using ComplexTwoForm = std::map<std::pair<int, int>, GaussianRational>;

struct KaehlerForms {
  PolyForm w1, w2, w3, wplus, wminus;              // real-coordinate forms
  ComplexTwoForm c1, c2, c3, cplus, cminus;        // complex-basis versions
};
KaehlerForms kaehler_suite();

// Determinant of the 4x4 antisymmetric coefficient array of a constant
// 2-form on R^4.
GaussianRational form_determinant(const PolyForm& w);

// Pullback of a constant complex 2-form along (q1, q2, phi) ->
// (q1 + i q2, u) with u = e^{i phi} or e^{-i phi} by choice.
circle::CircleForm pullback_to_circle(const ComplexTwoForm& w, bool w_is_exp_minus_iphi);

// The C^2 structure equation df^i = -X -| omega^i with omega = (omega^2,
// omega^3): Hamiltonian field of a split pair, when it exists.
std::optional<PolyField> c2_pair_hamiltonian_field(const MultiPoly& f1, const MultiPoly& f2);

// Exact solution family of that structure equation over polynomials of
// total degree <= max_deg: returns a basis of pairs (f1, f2).
std::vector<std::pair<MultiPoly, MultiPoly>> c2_family_kernel(int max_deg);

}  // namespace nsym::csphere
