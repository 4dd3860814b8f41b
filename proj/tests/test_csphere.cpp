#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "nsym/csphere.hpp"
#include "nsym/linalg.hpp"
#include "nsym/random_gen.hpp"

using namespace nsym;
using namespace nsym::csphere;

namespace {

MultiPoly rq(int a) { return MultiPoly::var(real4_vars(), static_cast<size_t>(a - 1)); }

HoloPoly random_holo(Rng& rng, int max_deg) {
  HoloPoly f(holo_vars());
  for (int t = 0; t < 4; ++t) {
    int a = rng.uniform(0, max_deg);
    int b = rng.uniform(0, max_deg - a);
    f += (hz().pow(a) * hw().pow(b)).scaled(HPoly(rng.gaussian()));
  }
  return f;
}

}  // namespace

TEST_CASE("quaternion identities") {
  Quaternion one{1, 0, 0, 0}, i{0, 1, 0, 0}, j{0, 0, 1, 0}, k{0, 0, 0, 1};
  Quaternion minus_one{-1, 0, 0, 0};
  CHECK(i * i == minus_one);
  CHECK(j * j == minus_one);
  CHECK(k * k == minus_one);
  CHECK(i * j * k == minus_one);
  CHECK(i * j == k);
  CHECK(j * i == Quaternion{0, 0, 0, -1});
  CHECK(one * i == i);

  Rng rng(3);
  for (int t = 0; t < 30; ++t) {
    Quaternion a{rng.rational(), rng.rational(), rng.rational(), rng.rational()};
    Quaternion b{rng.rational(), rng.rational(), rng.rational(), rng.rational()};
    Quaternion c{rng.rational(), rng.rational(), rng.rational(), rng.rational()};
    CHECK((a * b) * c == a * (b * c));
  }
}

TEST_CASE("holomorphic bracket") {
  // canonical pair under the induced normalization: {z, w} = 1/2
  CHECK(holo_bracket(hz(), hw()) == holo_constant(HPoly(Rational(1, 2))));
  HoloPoly f = random_holo(*new Rng(5), 3);
  CHECK(holo_bracket(f, f).is_zero());
}

TEST_CASE("spin variable su(2) table") {
  auto x = spin_variables();
  // engine table: {x^i, x^j} = -eps^{ijk} x^k under the induced bracket;
  // the rescaled generators s^i = -x^i close with +eps.
  CHECK(holo_bracket(x[0], x[1]) == -x[2]);
  CHECK(holo_bracket(x[1], x[2]) == -x[0]);
  CHECK(holo_bracket(x[2], x[0]) == -x[1]);
  for (int i = 0; i < 3; ++i) CHECK(holo_bracket(x[i], x[i]).is_zero());
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      CHECK(holo_bracket(x[i], x[j]) == -holo_bracket(x[j], x[i]));
  // s^i = -x^i satisfies {s^i, s^j} = +eps^{ijk} s^k
  auto s = x;
  for (auto& v : s) v = -v;
  CHECK(holo_bracket(s[0], s[1]) == s[2]);
  CHECK(holo_bracket(s[1], s[2]) == s[0]);
  CHECK(holo_bracket(s[2], s[0]) == s[1]);
}

TEST_CASE("split to real components") {
  auto [re, im] = split_to_vector(hz());
  CHECK(re == rq(1));
  CHECK(im == rq(2));

  auto x = spin_variables();
  auto [x3re, x3im] = split_to_vector(x[2]);
  MultiPoly expect = (rq(1) * rq(1) - rq(2) * rq(2) + rq(3) * rq(3) - rq(4) * rq(4))
                         .scaled(HPoly(Rational(1, 2)));
  CHECK(x3re == expect);

  auto [ire, iim] = split_to_vector(holo_constant(HPoly::i()));
  CHECK(ire.is_zero());
  CHECK(iim == MultiPoly::constant(real4_vars(), HPoly(1)));
}

TEST_CASE("c2 hamiltonian fields") {
  // f = z: 2X = d_w + d_wbar, i.e. X = (1/2) d/dq3
  PolyField Xz = c2_hamiltonian_field(hz());
  CHECK(Xz.comps[0].is_zero());
  CHECK(Xz.comps[1].is_zero());
  CHECK(Xz.comps[2] == MultiPoly::constant(real4_vars(), HPoly(Rational(1, 2))));
  CHECK(Xz.comps[3].is_zero());

  PolyField Xc = c2_hamiltonian_field(holo_constant(HPoly(7)));
  for (const auto& c : Xc.comps) CHECK(c.is_zero());

  // spin fields are tangent to every sphere: X(x^a q^a) proportional check
  auto x = spin_variables();
  MultiPoly r2 = rq(1) * rq(1) + rq(2) * rq(2) + rq(3) * rq(3) + rq(4) * rq(4);
  for (int i = 0; i < 3; ++i) {
    PolyField X = c2_hamiltonian_field(x[static_cast<size_t>(i)]);
    CHECK(X.apply(r2).is_zero());
  }
}

TEST_CASE("tangency residual") {
  auto x = spin_variables();
  for (int i = 0; i < 3; ++i) CHECK(tangency_residual(x[static_cast<size_t>(i)]).is_zero());
  CHECK(tangency_residual(hz()) == rq(3).scaled(HPoly(2)));
  CHECK(tangency_residual(holo_constant(HPoly(1))).is_zero());
  CHECK_FALSE(tangency_residual(hz() * hw()).is_zero());
}

TEST_CASE("spin kernel dimensions") {
  SpinKernel k1 = spin_kernel(1);
  CHECK(k1.basis.size() == 2);  // constants only
  CHECK(k1.spin_part.empty());

  SpinKernel k2 = spin_kernel(2);
  CHECK(k2.basis.size() == 5);
  CHECK(k2.spin_part.size() == 3);
  // every non-constant kernel element is a real combination of the x^i:
  // check x^i themselves are in the kernel and the spin part has rank 3
  auto x = spin_variables();
  for (int i = 0; i < 3; ++i) CHECK(tangency_residual(x[static_cast<size_t>(i)]).is_zero());
  for (const auto& f : k2.spin_part) CHECK(tangency_residual(f).is_zero());

  // rank of the spin part over the quadratic monomial coefficients
  std::map<std::vector<int>, size_t> cols;
  std::vector<std::vector<Rational>> rows;
  for (const auto& f : k2.spin_part) {
    std::vector<Rational> row;
    for (const auto& [e, c] : f.terms()) {
      auto [it, inserted] = cols.try_emplace(e, cols.size());
      (void)it;
    }
    rows.push_back({});
  }
  for (size_t r = 0; r < k2.spin_part.size(); ++r) {
    std::vector<Rational> re_row(2 * cols.size());
    for (const auto& [e, c] : k2.spin_part[r].terms()) {
      re_row[2 * cols.at(e)] = c.constant().re();
      re_row[2 * cols.at(e) + 1] = c.constant().im();
    }
    rows[r] = std::move(re_row);
  }
  CHECK(kernel_basis(rows, 2 * cols.size()).size() == 2 * cols.size() - 3);
}

TEST_CASE("frame fields come from the quaternion actions on the radial point") {
  // left multiplication by i, j, k gives v^1, v^2, v^3; right multiplication
  // gives w^1, w^2, w^3
  auto fr = quaternion_frames();
  Quaternion units[3] = {{0, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}};
  Rng rng(55);
  for (int t = 0; t < 20; ++t) {
    Quaternion q{rng.rational(), rng.rational(), rng.rational(), rng.rational()};
    std::array<MultiPoly, 4> point = {
        MultiPoly::constant(real4_vars(), HPoly(q.a)), MultiPoly::constant(real4_vars(), HPoly(q.b)),
        MultiPoly::constant(real4_vars(), HPoly(q.c)), MultiPoly::constant(real4_vars(), HPoly(q.d))};
    auto eval_field = [&](const PolyField& X) {
      std::array<Rational, 4> out;
      for (int a = 0; a < 4; ++a) {
        MultiPoly v = X.comps[static_cast<size_t>(a)].compose(
            std::vector<MultiPoly>(point.begin(), point.end()), real4_vars());
        out[static_cast<size_t>(a)] = v.constant_value().constant().re();
      }
      return out;
    };
    for (int i = 0; i < 3; ++i) {
      Quaternion left = units[i] * q;
      Quaternion right = q * units[i];
      auto v = eval_field(fr.v[static_cast<size_t>(i)]);
      auto w = eval_field(fr.w[static_cast<size_t>(i)]);
      CHECK(Quaternion{v[0], v[1], v[2], v[3]} == left);
      CHECK(Quaternion{w[0], w[1], w[2], w[3]} == right);
    }
  }
}

TEST_CASE("quaternion frame displays") {
  auto fr = quaternion_frames();
  CHECK(fr.v[0].comps[0] == -rq(2));
  CHECK(fr.v[0].comps[1] == rq(1));
  CHECK(fr.v[0].comps[2] == -rq(4));
  CHECK(fr.v[0].comps[3] == rq(3));

  CHECK(fr.w[1].comps[0] == -rq(3));
  CHECK(fr.w[1].comps[1] == -rq(4));
  CHECK(fr.w[1].comps[2] == rq(1));
  CHECK(fr.w[1].comps[3] == rq(2));

  CHECK(fr.r.comps[0] == rq(1));
}

TEST_CASE("contact forms and their differentials") {
  auto thetas = contact_forms();
  auto d = contact_differentials();
  auto dq = [&](int a) {
    PolyForm f(4, 1);
    f.add_term({a - 1}, MultiPoly::constant(real4_vars(), HPoly(1)));
    return f;
  };
  CHECK(d[0] == wedge(dq(1), dq(2)) + wedge(dq(3), dq(4)));
  CHECK(d[1] == wedge(dq(1), dq(3)) - wedge(dq(2), dq(4)));
  CHECK(d[2] == wedge(dq(1), dq(4)) + wedge(dq(2), dq(3)));
  for (int i = 0; i < 3; ++i) CHECK_FALSE(ext_d(thetas[static_cast<size_t>(i)]).is_zero());

  // v^i -| d theta^j = -2 eps^{ijk} theta^k for i != j
  auto fr = quaternion_frames();
  auto scaled = [&](const PolyForm& f, long long c) {
    return f.scaled(MultiPoly::constant(real4_vars(), HPoly(c)));
  };
  CHECK(contract(fr.v[0], d[1]) == scaled(thetas[2], -2));
  CHECK(contract(fr.v[1], d[2]) == scaled(thetas[0], -2));
  CHECK(contract(fr.v[2], d[0]) == scaled(thetas[1], -2));
  CHECK(contract(fr.v[1], d[0]) == scaled(thetas[2], 2));
  CHECK(contract(fr.v[2], d[1]) == scaled(thetas[0], 2));
  CHECK(contract(fr.v[0], d[2]) == scaled(thetas[1], 2));
}

TEST_CASE("s3 structure equation solutions") {
  auto fr = quaternion_frames();
  MultiPoly y1 = (rq(1) * rq(1) + rq(2) * rq(2) - rq(3) * rq(3) - rq(4) * rq(4))
                     .scaled(HPoly(Rational(1, 2)));
  MultiPoly y2 = rq(2) * rq(3) - rq(1) * rq(4);
  MultiPoly y3 = rq(1) * rq(3) + rq(2) * rq(4);

  S3Solution s1 = solve_s3_structure(fr.w[0]);
  REQUIRE(s1.hamiltonian);
  CHECK(s1.f[0] == y1);
  S3Solution s2 = solve_s3_structure(fr.w[1]);
  REQUIRE(s2.hamiltonian);
  CHECK(s2.f[0] == y2);
  S3Solution s3 = solve_s3_structure(fr.w[2]);
  REQUIRE(s3.hamiltonian);
  CHECK(s3.f[0] == y3);

  // none of the v^i are Hamiltonian
  for (int i = 0; i < 3; ++i) CHECK_FALSE(solve_s3_structure(fr.v[static_cast<size_t>(i)]).hamiltonian);

  // zero field: zero observable
  PolyField zero(4, std::vector<MultiPoly>(4, MultiPoly(real4_vars())));
  S3Solution sz = solve_s3_structure(zero);
  REQUIRE(sz.hamiltonian);
  for (const auto& f : sz.f) CHECK(f.is_zero());

  // derivative relations d f^1/d q2 = d f^2/d q3 = d f^3/d q4 on solutions
  for (const auto& sol : {s1, s2, s3}) {
    CHECK(sol.f[0].diff(1) == sol.f[1].diff(2));
    CHECK(sol.f[1].diff(2) == sol.f[2].diff(3));
  }
}

TEST_CASE("y-observable bracket table: {y^i, y^j} = 2 eps^{ijk} y^k") {
  auto fr = quaternion_frames();
  std::array<std::array<MultiPoly, 3>, 3> Y;
  for (int i = 0; i < 3; ++i) {
    S3Solution s = solve_s3_structure(fr.w[static_cast<size_t>(i)]);
    REQUIRE(s.hamiltonian);
    Y[static_cast<size_t>(i)] = s.f;
  }
  auto scale = [&](const std::array<MultiPoly, 3>& f, long long c) {
    std::array<MultiPoly, 3> out = f;
    for (auto& m : out) m = m.scaled(HPoly(c));
    return out;
  };
  CHECK(s3_bracket(Y[0], Y[1]) == scale(Y[2], 2));
  CHECK(s3_bracket(Y[1], Y[2]) == scale(Y[0], 2));
  CHECK(s3_bracket(Y[2], Y[0]) == scale(Y[1], 2));
  CHECK(s3_bracket(Y[1], Y[0]) == scale(Y[2], -2));
  for (int i = 0; i < 3; ++i) {
    auto self = s3_bracket(Y[static_cast<size_t>(i)], Y[static_cast<size_t>(i)]);
    for (const auto& m : self) CHECK(m.is_zero());
  }
  // the rescaled observables y^i / 2 close with structure constant +eps
  CHECK(s3_bracket(scale(Y[0], 1), scale(Y[1], 1)) == scale(Y[2], 2));
}

TEST_CASE("kaehler forms") {
  KaehlerForms k = kaehler_suite();
  // omega+- = omega2 +- i omega3 exactly
  CHECK(k.wplus == k.w2 + k.w3.scaled(MultiPoly::constant(real4_vars(), HPoly::i())));
  CHECK(k.wminus == k.w2 - k.w3.scaled(MultiPoly::constant(real4_vars(), HPoly::i())));
  // nondegeneracy
  CHECK_FALSE(form_determinant(k.w1).is_zero());
  CHECK_FALSE(form_determinant(k.w2).is_zero());
  CHECK_FALSE(form_determinant(k.w3).is_zero());
  // real-coordinate expansions
  auto dq = [&](int a) {
    PolyForm f(4, 1);
    f.add_term({a - 1}, MultiPoly::constant(real4_vars(), HPoly(1)));
    return f;
  };
  CHECK(k.w2 == (wedge(dq(1), dq(3)) - wedge(dq(2), dq(4)))
                    .scaled(MultiPoly::constant(real4_vars(), HPoly(2))));
  // the Kaehler differentials are proportional to the contact differentials
  auto d = contact_differentials();
  CHECK(k.w2 == d[1].scaled(MultiPoly::constant(real4_vars(), HPoly(2))));
  CHECK(k.w3 == d[2].scaled(MultiPoly::constant(real4_vars(), HPoly(2))));
}

TEST_CASE("c2 structure family is the holomorphic split family") {
  auto basis = c2_family_kernel(3);
  CHECK(basis.size() == 20);
  for (const auto& [f1, f2] : basis) {
    MultiPoly F = f1 + f2.scaled(HPoly::i());
    // anti-holomorphic derivatives vanish: d/dzbar = (d1 + i d2)/2formal
    CHECK((F.diff(0) + F.diff(1).scaled(HPoly::i())).is_zero());
    CHECK((F.diff(2) + F.diff(3).scaled(HPoly::i())).is_zero());
  }
}

TEST_CASE("induced bracket equals holo_bracket under splitting") {
  Rng rng(7);
  for (int t = 0; t < 10; ++t) {
    HoloPoly f = random_holo(rng, 3), g = random_holo(rng, 3);
    auto [f1, f2] = split_to_vector(f);
    auto [g1, g2] = split_to_vector(g);
    auto X = c2_pair_hamiltonian_field(f1, f2);
    REQUIRE(X.has_value());
    MultiPoly b1 = X->apply(g1), b2 = X->apply(g2);
    auto [e1, e2] = split_to_vector(holo_bracket(f, g));
    CHECK(b1 == e1);
    CHECK(b2 == e2);
  }
}
