#include "nsym/csphere.hpp"

#include <algorithm>
#include <functional>

#include "nsym/linalg.hpp"

namespace nsym::csphere {

namespace {

HPoly half() { return HPoly(Rational(1, 2)); }
HPoly iq(Rational r) { return HPoly(GaussianRational(Rational(0), r)); }

const VarsPtr& hvars() {
  static VarsPtr v = make_vars({"z", "w"});
  return v;
}
const VarsPtr& rvars() {
  static VarsPtr v = coord_vars(4);
  return v;
}

MultiPoly rq(int a) { return MultiPoly::var(rvars(), static_cast<size_t>(a - 1)); }

// z = q1 + i q2, w = q3 + i q4 and conjugates, over the real coordinates.
MultiPoly z_real() { return rq(1) + rq(2).scaled(HPoly::i()); }
MultiPoly zb_real() { return rq(1) - rq(2).scaled(HPoly::i()); }
MultiPoly w_real() { return rq(3) + rq(4).scaled(HPoly::i()); }
MultiPoly wb_real() { return rq(3) - rq(4).scaled(HPoly::i()); }

MultiPoly re_part(const MultiPoly& f) { return (f + f.conj()).scaled(half()); }
MultiPoly im_part(const MultiPoly& f) { return (f - f.conj()).scaled(iq(Rational(-1, 2))); }

PolyField unit_field(int b) {
  std::vector<MultiPoly> comps;
  for (int a = 0; a < 4; ++a)
    comps.push_back(a == b ? MultiPoly::constant(rvars(), HPoly(1)) : MultiPoly(rvars()));
  return PolyField(4, std::move(comps));
}

PolyField field_from(std::vector<MultiPoly> comps) { return PolyField(4, std::move(comps)); }

// Constant coefficient of dq^a in a constant 1-form.
Rational const_coeff(const PolyForm& w, int a) {
  auto it = w.terms().find({a});
  if (it == w.terms().end()) return Rational(0);
  GaussianRational c = it->second.constant_value().constant();
  return c.re();  // constant contact data is real
}

}  // namespace

VarsPtr holo_vars() { return hvars(); }
VarsPtr real4_vars() { return rvars(); }

HoloPoly hz() { return MultiPoly::var(hvars(), 0); }
HoloPoly hw() { return MultiPoly::var(hvars(), 1); }
HoloPoly holo_constant(HPoly c) { return MultiPoly::constant(hvars(), std::move(c)); }

std::array<HoloPoly, 3> spin_variables() {
  HoloPoly z = hz(), w = hw();
  HoloPoly x1 = (z * w).scaled(iq(Rational(-1)));
  HoloPoly x2 = (z * z - w * w).scaled(iq(Rational(1, 2)));
  HoloPoly x3 = (z * z + w * w).scaled(half());
  return {x1, x2, x3};
}

HoloPoly SpinObservable::holo() const {
  auto x = spin_variables();
  return x[0].scaled(HPoly(c1)) + x[1].scaled(HPoly(c2)) + x[2].scaled(HPoly(c3));
}

HoloPoly holo_bracket(const HoloPoly& f, const HoloPoly& g) {
  return (f.diff(0) * g.diff(1) - f.diff(1) * g.diff(0)).scaled(half());
}

MultiPoly embed_real(const HoloPoly& f) {
  std::vector<MultiPoly> images = {z_real(), w_real()};
  return f.compose(images, rvars());
}

std::pair<MultiPoly, MultiPoly> split_to_vector(const HoloPoly& f) {
  MultiPoly F = embed_real(f);
  return {re_part(F), im_part(F)};
}

PolyField c2_hamiltonian_field(const HoloPoly& f) {
  MultiPoly fw = embed_real(f.diff(1));
  MultiPoly fz = embed_real(f.diff(0));
  std::vector<MultiPoly> comps(4, MultiPoly(rvars()));
  comps[0] = -re_part(fw).scaled(half());
  comps[1] = -im_part(fw).scaled(half());
  comps[2] = re_part(fz).scaled(half());
  comps[3] = im_part(fz).scaled(half());
  return field_from(std::move(comps));
}

MultiPoly tangency_residual(const HoloPoly& f) {
  MultiPoly A = wb_real() * embed_real(f.diff(0)) - zb_real() * embed_real(f.diff(1));
  return A + A.conj();
}

SpinKernel spin_kernel(int max_deg) {
  if (max_deg < 0) throw StructuralError("spin kernel needs max_deg >= 0");
  std::vector<HoloPoly> params;
  for (int a = 0; a <= max_deg; ++a)
    for (int b = 0; a + b <= max_deg; ++b) {
      MultiPoly mono = hz().pow(a) * hw().pow(b);
      params.push_back(mono);
      params.push_back(mono.scaled(HPoly::i()));
    }

  std::map<std::vector<int>, size_t> row_of;
  std::vector<std::vector<Rational>> rows;
  for (size_t j = 0; j < params.size(); ++j) {
    MultiPoly res = tangency_residual(params[j]);
    for (const auto& [e, c] : res.terms()) {
      auto [it, inserted] = row_of.try_emplace(e, row_of.size());
      if (inserted) rows.emplace_back(params.size());
      GaussianRational v = c.constant();
      rows[it->second][j] = v.re();
      if (!v.im().is_zero())
        throw StructuralError("tangency residual is not real");
    }
  }

  SpinKernel out;
  for (const auto& vec : kernel_basis(std::move(rows), params.size())) {
    HoloPoly f(hvars());
    for (size_t j = 0; j < params.size(); ++j)
      if (!vec[j].is_zero()) f += params[j].scaled(HPoly(vec[j]));
    out.basis.push_back(f);
    HoloPoly rest = f - MultiPoly::constant(hvars(), f.constant_value());
    if (!rest.is_zero()) out.spin_part.push_back(rest);
  }
  out.constants.push_back(holo_constant(HPoly(1)));
  out.constants.push_back(holo_constant(HPoly::i()));
  return out;
}

QuaternionFrames quaternion_frames() {
  QuaternionFrames out;
  auto F = [&](long long c1, int v1, long long c2, int v2, long long c3, int v3, long long c4,
               int v4) {
    std::vector<MultiPoly> comps = {rq(v1).scaled(HPoly(c1)), rq(v2).scaled(HPoly(c2)),
                                    rq(v3).scaled(HPoly(c3)), rq(v4).scaled(HPoly(c4))};
    return field_from(std::move(comps));
  };
  out.r = F(1, 1, 1, 2, 1, 3, 1, 4);
  out.v[0] = F(-1, 2, 1, 1, -1, 4, 1, 3);
  out.v[1] = F(-1, 3, 1, 4, 1, 1, -1, 2);
  out.v[2] = F(-1, 4, -1, 3, 1, 2, 1, 1);
  out.w[0] = F(-1, 2, 1, 1, 1, 4, -1, 3);
  out.w[1] = F(-1, 3, -1, 4, 1, 1, 1, 2);
  out.w[2] = F(-1, 4, 1, 3, -1, 2, 1, 1);
  return out;
}

std::array<PolyForm, 3> contact_forms() {
  auto form = [&](int a1, int a2, int a3, int a4) {
    // (1/2)(q^{a1} dq^{a2} - q^{a2} dq^{a1} + q^{a3} dq^{a4} - q^{a4} dq^{a3})
    PolyForm t(4, 1);
    t.add_term({a2 - 1}, rq(a1).scaled(half()));
    t.add_term({a1 - 1}, -rq(a2).scaled(half()));
    t.add_term({a4 - 1}, rq(a3).scaled(half()));
    t.add_term({a3 - 1}, -rq(a4).scaled(half()));
    return t;
  };
  return {form(1, 2, 3, 4), form(1, 3, 4, 2), form(1, 4, 2, 3)};
}

std::array<PolyForm, 3> contact_differentials() {
  auto forms = contact_forms();
  return {ext_d(forms[0]), ext_d(forms[1]), ext_d(forms[2])};
}

namespace {

// Rows of the constant S^3 / C^2 structure systems: the linear map
// X -> (X -| omega^i)_a as an (n_forms*4) x 4 rational matrix.
std::vector<std::vector<Rational>> structure_matrix(const std::vector<PolyForm>& forms) {
  std::vector<std::vector<Rational>> m(forms.size() * 4, std::vector<Rational>(4));
  for (size_t i = 0; i < forms.size(); ++i)
    for (int b = 0; b < 4; ++b) {
      PolyForm contracted = contract(unit_field(b), forms[i]);
      for (int a = 0; a < 4; ++a) m[i * 4 + static_cast<size_t>(a)][static_cast<size_t>(b)] =
          const_coeff(contracted, a);
    }
  return m;
}

std::optional<PolyField> solve_structure_field(const std::vector<PolyForm>& forms,
                                               const std::vector<MultiPoly>& f) {
  auto m = structure_matrix(forms);
  std::vector<LinRow<MultiPoly>> rows;
  for (size_t i = 0; i < forms.size(); ++i)
    for (int a = 0; a < 4; ++a) {
      LinRow<MultiPoly> row;
      row.rhs = -f[i].diff(static_cast<size_t>(a));
      for (int b = 0; b < 4; ++b) {
        Rational c = m[i * 4 + static_cast<size_t>(a)][static_cast<size_t>(b)];
        if (!c.is_zero()) row.a[b] = c;
      }
      row.tag = static_cast<int>(i * 4 + static_cast<size_t>(a));
      rows.push_back(std::move(row));
    }
  auto sol = solve_linear_system<MultiPoly>(std::move(rows), 4, MultiPoly(rvars()));
  if (!sol.consistent) return std::nullopt;
  return field_from(std::move(sol.x));
}

MultiPoly radial_primitive(const PolyForm& eta) {
  MultiPoly g(rvars());
  for (const auto& [idx, c] : eta.terms()) g += rq(idx[0] + 1) * c;
  MultiPoly f(rvars());
  for (int d = 1; d <= g.total_degree(); ++d)
    f += g.homogeneous_part(d).scaled(HPoly(Rational(1, d)));
  return f;
}

}  // namespace

S3Solution solve_s3_structure(const PolyField& X) {
  S3Solution out;
  auto dthetas = contact_differentials();
  for (int i = 0; i < 3; ++i) {
    PolyForm eta = -contract(X, dthetas[static_cast<size_t>(i)]);
    if (!ext_d(eta).is_zero()) {
      out.failing_component = i + 1;
      return out;
    }
    MultiPoly f = radial_primitive(eta);
    PolyForm df(4, 1);
    for (int a = 0; a < 4; ++a) df.add_term({a}, f.diff(static_cast<size_t>(a)));
    if (df != eta) {
      out.failing_component = i + 1;
      return out;
    }
    out.f[static_cast<size_t>(i)] = f;
  }
  out.hamiltonian = true;
  return out;
}

std::optional<PolyField> s3_hamiltonian_field(const std::array<MultiPoly, 3>& F) {
  auto d = contact_differentials();
  return solve_structure_field({d[0], d[1], d[2]}, {F[0], F[1], F[2]});
}

std::array<MultiPoly, 3> s3_bracket(const std::array<MultiPoly, 3>& F,
                                    const std::array<MultiPoly, 3>& G) {
  auto X = s3_hamiltonian_field(F);
  if (!X) throw StructuralError("s3 bracket of a non-Hamiltonian observable");
  return {X->apply(G[0]), X->apply(G[1]), X->apply(G[2])};
}

namespace {

PolyForm complex_basis_form(int idx) {
  // 0 -> dz, 1 -> dw, 2 -> dzbar, 3 -> dwbar
  PolyForm f(4, 1);
  int base = idx == 0 || idx == 2 ? 0 : 2;
  HPoly im = (idx < 2) ? HPoly::i() : -HPoly::i();
  f.add_term({base}, MultiPoly::constant(rvars(), HPoly(1)));
  f.add_term({base + 1}, MultiPoly::constant(rvars(), im));
  return f;
}

PolyForm realize_complex_two_form(const ComplexTwoForm& w) {
  PolyForm out(4, 2);
  for (const auto& [ij, c] : w) {
    PolyForm piece = wedge(complex_basis_form(ij.first), complex_basis_form(ij.second));
    out += piece.scaled(MultiPoly::constant(rvars(), HPoly(c)));
  }
  return out;
}

}  // namespace

KaehlerForms kaehler_suite() {
  KaehlerForms k;
  GaussianRational one(1), i = GaussianRational::i();
  k.c1 = {{{0, 2}, one}, {{1, 3}, one}};
  k.c2 = {{{0, 1}, one}, {{2, 3}, one}};
  k.c3 = {{{0, 1}, -i}, {{2, 3}, i}};
  auto combine = [](const ComplexTwoForm& a, const ComplexTwoForm& b, GaussianRational s) {
    ComplexTwoForm out = a;
    for (const auto& [ij, c] : b) {
      auto [it, inserted] = out.try_emplace(ij, c * s);
      if (!inserted) it->second += c * s;
      if (it->second.is_zero()) out.erase(ij);
    }
    return out;
  };
  k.cplus = combine(k.c2, k.c3, i);
  k.cminus = combine(k.c2, k.c3, -i);
  k.w1 = realize_complex_two_form(k.c1);
  k.w2 = realize_complex_two_form(k.c2);
  k.w3 = realize_complex_two_form(k.c3);
  k.wplus = realize_complex_two_form(k.cplus);
  k.wminus = realize_complex_two_form(k.cminus);
  return k;
}

GaussianRational form_determinant(const PolyForm& w) {
  if (w.degree() != 2 || w.dim() != 4) throw StructuralError("determinant needs a 2-form on R^4");
  GaussianRational m[4][4];
  for (const auto& [idx, c] : w.terms()) {
    if (!c.is_constant()) throw StructuralError("determinant needs constant coefficients");
    GaussianRational v = c.constant_value().constant();
    m[idx[0]][idx[1]] = v;
    m[idx[1]][idx[0]] = -v;
  }
  // Leibniz expansion over S_4.
  GaussianRational det(0);
  std::vector<int> p = {0, 1, 2, 3};
  do {
    int inv = 0;
    for (int a = 0; a < 4; ++a)
      for (int b = a + 1; b < 4; ++b)
        if (p[a] > p[b]) ++inv;
    GaussianRational term = m[0][p[0]] * m[1][p[1]] * m[2][p[2]] * m[3][p[3]];
    det += (inv % 2 == 0) ? term : -term;
  } while (std::next_permutation(p.begin(), p.end()));
  return det;
}

circle::CircleForm pullback_to_circle(const ComplexTwoForm& w, bool w_is_exp_minus_iphi) {
  using circle::CircleForm;
  using circle::CircleFunc;
  auto one_form = [&](int idx) {
    CircleForm f(3, 1);
    switch (idx) {
      case 0:  // dz = dq1 + i dq2
        f.add_term({0}, CircleFunc::constant(HPoly(1)));
        f.add_term({1}, CircleFunc::constant(HPoly::i()));
        break;
      case 2:  // dzbar
        f.add_term({0}, CircleFunc::constant(HPoly(1)));
        f.add_term({1}, CircleFunc::constant(-HPoly::i()));
        break;
      case 1:  // dw = d(e^{+-i phi})
        if (w_is_exp_minus_iphi)
          f.add_term({2}, CircleFunc::emode(-1, -HPoly::i()));
        else
          f.add_term({2}, CircleFunc::emode(1, HPoly::i()));
        break;
      default:  // dwbar
        if (w_is_exp_minus_iphi)
          f.add_term({2}, CircleFunc::emode(1, HPoly::i()));
        else
          f.add_term({2}, CircleFunc::emode(-1, -HPoly::i()));
        break;
    }
    return f;
  };
  CircleForm out(3, 2);
  for (const auto& [ij, c] : w) {
    CircleForm piece = wedge(one_form(ij.first), one_form(ij.second));
    out += piece.scaled(CircleFunc::constant(HPoly(c)));
  }
  return out;
}

std::optional<PolyField> c2_pair_hamiltonian_field(const MultiPoly& f1, const MultiPoly& f2) {
  KaehlerForms k = kaehler_suite();
  return solve_structure_field({k.w2, k.w3}, {f1, f2});
}

std::vector<std::pair<MultiPoly, MultiPoly>> c2_family_kernel(int max_deg) {
  KaehlerForms k = kaehler_suite();
  auto m = structure_matrix({k.w2, k.w3});
  // Left null space: obstructions to solving the structure equation.
  std::vector<std::vector<Rational>> mt(4, std::vector<Rational>(8));
  for (size_t r = 0; r < 8; ++r)
    for (size_t c = 0; c < 4; ++c) mt[c][r] = m[r][c];
  auto obstructions = kernel_basis(std::move(mt), 8);

  // Real-coefficient monomial parameters for (f1, f2).
  struct Param {
    int comp;
    std::vector<int> expo;
  };
  std::vector<Param> params;
  std::vector<std::vector<int>> monos;
  {
    std::vector<int> e(4, 0);
    // enumerate all exponent vectors with total degree <= max_deg
    std::function<void(size_t, int)> rec = [&](size_t pos, int remaining) {
      if (pos == 4) {
        monos.push_back(e);
        return;
      }
      for (int d = 0; d <= remaining; ++d) {
        e[pos] = d;
        rec(pos + 1, remaining - d);
      }
      e[pos] = 0;
    };
    rec(0, max_deg);
  }
  for (int comp = 0; comp < 2; ++comp)
    for (const auto& e : monos) params.push_back({comp, e});

  std::map<std::pair<size_t, std::vector<int>>, size_t> row_of;
  std::vector<std::vector<Rational>> rows;
  for (size_t j = 0; j < params.size(); ++j) {
    MultiPoly mono(rvars());
    mono.add_term(params[j].expo, HPoly(1));
    // b-vector of the system for this parameter
    std::vector<MultiPoly> b;
    for (int i = 0; i < 2; ++i)
      for (int a = 0; a < 4; ++a) {
        MultiPoly v =
            (params[j].comp == i) ? -mono.diff(static_cast<size_t>(a)) : MultiPoly(rvars());
        b.push_back(std::move(v));
      }
    for (size_t o = 0; o < obstructions.size(); ++o) {
      MultiPoly dot(rvars());
      for (size_t r = 0; r < 8; ++r)
        if (!obstructions[o][r].is_zero()) dot += b[r].scaled(HPoly(obstructions[o][r]));
      for (const auto& [e, c] : dot.terms()) {
        auto [it, inserted] = row_of.try_emplace({o, e}, row_of.size());
        if (inserted) rows.emplace_back(params.size());
        GaussianRational v = c.constant();
        rows[it->second][j] += v.re();
        if (!v.im().is_zero()) {
          // track imaginary parts as separate constraints
          auto [it2, ins2] = row_of.try_emplace({o + obstructions.size(), e}, row_of.size());
          if (ins2) rows.emplace_back(params.size());
          rows[it2->second][j] += v.im();
        }
      }
    }
  }

  std::vector<std::pair<MultiPoly, MultiPoly>> out;
  for (const auto& vec : kernel_basis(std::move(rows), params.size())) {
    MultiPoly f1(rvars()), f2(rvars());
    for (size_t j = 0; j < params.size(); ++j) {
      if (vec[j].is_zero()) continue;
      MultiPoly mono(rvars());
      mono.add_term(params[j].expo, HPoly(vec[j]));
      (params[j].comp == 0 ? f1 : f2) += mono;
    }
    out.push_back({f1, f2});
  }
  return out;
}

}  // namespace nsym::csphere
