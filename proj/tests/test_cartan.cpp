#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "nsym/cartan.hpp"
#include "nsym/csphere.hpp"
#include "nsym/random_gen.hpp"

using namespace nsym;

namespace {

VarsPtr v4() { return csphere::real4_vars(); }

MultiPoly q(int a) { return MultiPoly::var(v4(), static_cast<size_t>(a - 1)); }

PolyForm dq(int a) {
  PolyForm f(4, 1);
  f.add_term({a - 1}, MultiPoly::constant(v4(), HPoly(1)));
  return f;
}

PolyField unit(int a) {
  std::vector<MultiPoly> comps(4, MultiPoly(v4()));
  comps[static_cast<size_t>(a - 1)] = MultiPoly::constant(v4(), HPoly(1));
  return PolyField(4, std::move(comps));
}

}  // namespace

TEST_CASE("exterior derivative basics") {
  // d(q1 dq2) = dq1 ^ dq2
  PolyForm w(4, 1);
  w.add_term({1}, q(1));
  CHECK(ext_d(w) == wedge(dq(1), dq(2)));

  // theta = q1 dq2 - q2 dq1 + q3 dq4 - q4 dq3 has d theta = 2(dq1^dq2 + dq3^dq4)
  PolyForm theta(4, 1);
  theta.add_term({1}, q(1));
  theta.add_term({0}, -q(2));
  theta.add_term({3}, q(3));
  theta.add_term({2}, -q(4));
  PolyForm expected = (wedge(dq(1), dq(2)) + wedge(dq(3), dq(4))).scaled(
      MultiPoly::constant(v4(), HPoly(2)));
  CHECK(ext_d(theta) == expected);

  // constant 2-form is closed
  CHECK(ext_d(wedge(dq(1), dq(2))).is_zero());

  // top-degree input overflows
  PolyForm vol = wedge(wedge(dq(1), dq(2)), wedge(dq(3), dq(4)));
  CHECK_THROWS_AS(ext_d(vol), DegreeOverflowError);
}

TEST_CASE("contraction basics") {
  PolyForm w12 = wedge(dq(1), dq(2));
  CHECK(contract(unit(1), w12) == dq(2));
  CHECK(contract(unit(2), w12) == -dq(1));
  CHECK_THROWS_AS(contract(PolyField(3, {MultiPoly(v4()), MultiPoly(v4()), MultiPoly(v4())}), w12),
                  StructuralError);
}

TEST_CASE("wedge basics") {
  CHECK(wedge(dq(1), dq(2)) == -wedge(dq(2), dq(1)));
  PolyForm a(4, 1);
  a.add_term({0}, q(1));
  CHECK(wedge(a, dq(2)) == wedge(dq(1), dq(2)).scaled(q(1)));
  CHECK(wedge(dq(1) + dq(2), dq(1) - dq(2)) ==
        wedge(dq(1), dq(2)).scaled(MultiPoly::constant(v4(), HPoly(-2))));
  // repeated index collapses to zero at full degree
  CHECK(wedge(wedge(dq(1), dq(2)), wedge(dq(1), dq(3))).is_zero());
  PolyForm three = wedge(wedge(dq(1), dq(2)), dq(3));
  CHECK_THROWS_AS(wedge(three, wedge(dq(1), dq(2))), DegreeOverflowError);
}

TEST_CASE("lie bracket basics") {
  // [d1, q1 d2] = d2
  std::vector<MultiPoly> comps(4, MultiPoly(v4()));
  comps[1] = q(1);
  PolyField x(4, comps);
  CHECK(lie_bracket(unit(1), x) == unit(2));
  CHECK(lie_bracket(x, x) == PolyField(4, std::vector<MultiPoly>(4, MultiPoly(v4()))));
}

TEST_CASE("quaternionic frames close with structure constant -2 (left) and +2 (right)") {
  auto fr = csphere::quaternion_frames();
  auto scale = [&](const PolyField& f, long long c) {
    PolyField out = f;
    for (auto& comp : out.comps) comp = comp.scaled(HPoly(c));
    return out;
  };
  // Left-translation fields: [v^i, v^j] = -2 eps^{ijk} v^k.
  CHECK(lie_bracket(fr.v[0], fr.v[1]) == scale(fr.v[2], -2));
  CHECK(lie_bracket(fr.v[1], fr.v[2]) == scale(fr.v[0], -2));
  CHECK(lie_bracket(fr.v[2], fr.v[0]) == scale(fr.v[1], -2));
  // Right-translation fields: [w^i, w^j] = +2 eps^{ijk} w^k.
  CHECK(lie_bracket(fr.w[0], fr.w[1]) == scale(fr.w[2], 2));
  CHECK(lie_bracket(fr.w[1], fr.w[2]) == scale(fr.w[0], 2));
  CHECK(lie_bracket(fr.w[2], fr.w[0]) == scale(fr.w[1], 2));
  // Left and right actions commute.
  PolyField zero(4, std::vector<MultiPoly>(4, MultiPoly(v4())));
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) CHECK(lie_bracket(fr.v[i], fr.w[j]) == zero);
}

TEST_CASE("v1 contract d theta2 gives -2 theta3") {
  auto thetas = csphere::contact_forms();
  auto d = csphere::contact_differentials();
  auto fr = csphere::quaternion_frames();
  PolyForm lhs = contract(fr.v[0], d[1]);
  PolyForm rhs = thetas[2].scaled(MultiPoly::constant(v4(), HPoly(-2)));
  CHECK(lhs == rhs);
}

TEST_CASE("randomized cartan identities") {
  Rng rng(41);
  VarsPtr v = v4();
  for (int t = 0; t < 25; ++t) {
    PolyForm w = rng.poly_form(v, 4, 2, 2, 3);
    CHECK(ext_d(ext_d(w)).is_zero());

    PolyForm a = rng.poly_form(v, 4, 1, 2, 2);
    PolyForm b = rng.poly_form(v, 4, 2, 2, 2);
    PolyField x = rng.poly_field(v, 4, 2, 2);
    // antiderivation: X -| (a ^ b) = (X -| a) ^ b + (-1)^deg a ^ (X -| b)
    PolyForm lhs = contract(x, wedge(a, b));
    PolyForm rhs = wedge(contract(x, a), b) - wedge(a, contract(x, b));
    CHECK(lhs == rhs);

    // Cartan magic formula against the direct component formula
    PolyForm magic = ext_d(contract(x, b)) + contract(x, ext_d(b));
    CHECK(magic == lie_derivative(x, b));

    PolyField y = rng.poly_field(v, 4, 2, 2);
    PolyField z = rng.poly_field(v, 4, 2, 2);
    PolyField jac = lie_bracket(lie_bracket(x, y), z) + lie_bracket(lie_bracket(y, z), x) +
                    lie_bracket(lie_bracket(z, x), y);
    for (const auto& c : jac.comps) CHECK(c.is_zero());
  }
}
