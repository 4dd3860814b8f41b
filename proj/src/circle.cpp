#include "nsym/circle.hpp"

#include <sstream>

#include "nsym/linalg.hpp"

namespace nsym::circle {

namespace {

HPoly half() { return HPoly(Rational(1, 2)); }
HPoly ihalf() { return HPoly(GaussianRational(Rational(0), Rational(1, 2))); }
HPoly iunit() { return HPoly::i(); }
HPoly minus_i_hbar() { return HPoly::hbar(1, GaussianRational(Rational(0), Rational(-1))); }

}  // namespace

CircleFunc CircleFunc::constant(HPoly c) {
  CircleFunc f;
  f.add_term({0, 0, 0}, c);
  return f;
}
CircleFunc CircleFunc::w() {
  CircleFunc f;
  f.add_term({1, 0, 0}, HPoly(1));
  return f;
}
CircleFunc CircleFunc::wbar() {
  CircleFunc f;
  f.add_term({0, 1, 0}, HPoly(1));
  return f;
}
CircleFunc CircleFunc::q1() {
  CircleFunc f;
  f.add_term({1, 0, 0}, half());
  f.add_term({0, 1, 0}, half());
  return f;
}
CircleFunc CircleFunc::q2() {
  CircleFunc f;
  f.add_term({1, 0, 0}, -ihalf());
  f.add_term({0, 1, 0}, ihalf());
  return f;
}
CircleFunc CircleFunc::emode(int m, HPoly c) {
  CircleFunc f;
  f.add_term({0, 0, m}, std::move(c));
  return f;
}
CircleFunc CircleFunc::cos_phi() {
  CircleFunc f;
  f.add_term({0, 0, 1}, half());
  f.add_term({0, 0, -1}, half());
  return f;
}
CircleFunc CircleFunc::sin_phi() {
  CircleFunc f;
  f.add_term({0, 0, 1}, -ihalf());
  f.add_term({0, 0, -1}, ihalf());
  return f;
}
CircleFunc CircleFunc::from_trig(const TrigPoly& t) {
  CircleFunc f;
  for (const auto& [m, c] : t.modes()) f.add_term({0, 0, m}, c);
  return f;
}

void CircleFunc::add_term(Key k, const HPoly& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(k, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

CircleFunc CircleFunc::conj() const {
  CircleFunc r;
  for (const auto& [k, c] : terms_) r.terms_[{k.wbardeg, k.wdeg, -k.mode}] = c.conj();
  return r;
}

CircleFunc CircleFunc::diff_w() const {
  CircleFunc r;
  for (const auto& [k, c] : terms_) {
    if (k.wdeg == 0) continue;
    r.add_term({k.wdeg - 1, k.wbardeg, k.mode}, c * HPoly(k.wdeg));
  }
  return r;
}
CircleFunc CircleFunc::diff_wbar() const {
  CircleFunc r;
  for (const auto& [k, c] : terms_) {
    if (k.wbardeg == 0) continue;
    r.add_term({k.wdeg, k.wbardeg - 1, k.mode}, c * HPoly(k.wbardeg));
  }
  return r;
}
CircleFunc CircleFunc::diff_phi() const {
  CircleFunc r;
  for (const auto& [k, c] : terms_) {
    if (k.mode == 0) continue;
    r.add_term(k, c * HPoly(GaussianRational(Rational(0), Rational(k.mode))));
  }
  return r;
}
CircleFunc CircleFunc::diff(size_t i) const {
  switch (i) {
    case 0:
      return diff_w() + diff_wbar();
    case 1: {
      CircleFunc d = diff_w() - diff_wbar();
      return d.scaled(iunit());
    }
    case 2:
      return diff_phi();
    default:
      throw StructuralError("circle function has three coordinates");
  }
}

int CircleFunc::w_degree() const {
  int d = 0;
  for (const auto& [k, c] : terms_) d = std::max(d, k.wdeg);
  return d;
}
int CircleFunc::wbar_degree() const {
  int d = 0;
  for (const auto& [k, c] : terms_) d = std::max(d, k.wbardeg);
  return d;
}

CircleFunc CircleFunc::w_coefficient(int deg) const {
  CircleFunc r;
  for (const auto& [k, c] : terms_)
    if (k.wdeg == deg) r.add_term({0, k.wbardeg, k.mode}, c);
  return r;
}

std::optional<TrigPoly> CircleFunc::as_trig() const {
  TrigPoly t;
  for (const auto& [k, c] : terms_) {
    if (k.wdeg != 0 || k.wbardeg != 0) return std::nullopt;
    t.set(k.mode, c);
  }
  return t;
}

CircleFunc CircleFunc::operator-() const {
  CircleFunc r;
  for (const auto& [k, c] : terms_) r.terms_[k] = -c;
  return r;
}
CircleFunc operator+(const CircleFunc& a, const CircleFunc& b) {
  CircleFunc r = a;
  for (const auto& [k, c] : b.terms_) r.add_term(k, c);
  return r;
}
CircleFunc operator-(const CircleFunc& a, const CircleFunc& b) { return a + (-b); }
CircleFunc operator*(const CircleFunc& a, const CircleFunc& b) {
  CircleFunc r;
  for (const auto& [ka, ca] : a.terms_)
    for (const auto& [kb, cb] : b.terms_)
      r.add_term({ka.wdeg + kb.wdeg, ka.wbardeg + kb.wbardeg, ka.mode + kb.mode}, ca * cb);
  return r;
}
CircleFunc CircleFunc::scaled(const HPoly& s) const {
  CircleFunc r;
  for (const auto& [k, c] : terms_) r.add_term(k, c * s);
  return r;
}

std::string CircleFunc::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [k, c] : terms_) {
    if (!first) os << " + ";
    os << "(" << c.to_string() << ")";
    if (k.wdeg) os << "*w" << (k.wdeg == 1 ? "" : "^" + std::to_string(k.wdeg));
    if (k.wbardeg) os << "*wbar" << (k.wbardeg == 1 ? "" : "^" + std::to_string(k.wbardeg));
    if (k.mode) os << "*e^{" << k.mode << "i phi}";
    first = false;
  }
  return os.str();
}

CircleFunc CircleObservable::complex_rep() const {
  // F = i A w e^{-i phi} + B + i C
  CircleFunc F = CircleFunc::from_trig(A).scaled(iunit()) * CircleFunc::w() *
                 CircleFunc::emode(-1);
  F += CircleFunc::from_trig(B);
  F += CircleFunc::from_trig(C).scaled(iunit());
  return F;
}

std::pair<CircleFunc, CircleFunc> CircleObservable::components() const {
  CircleFunc F = complex_rep();
  CircleFunc Fbar = F.conj();
  CircleFunc f1 = (F + Fbar).scaled(half());
  CircleFunc f2 = (F - Fbar).scaled(-ihalf());
  return {f1, f2};
}

Generators generators() {
  Generators g;
  g.x = {TrigPoly(), TrigPoly::cos(), -TrigPoly::sin()};
  g.y = {TrigPoly(), TrigPoly::sin(), TrigPoly::cos()};
  g.p = {TrigPoly(HPoly(1)), TrigPoly(), TrigPoly()};
  return g;
}

std::optional<CircleObservable> decompose(const CircleFunc& F) {
  if (F.wbar_degree() != 0) return std::nullopt;
  if (F.w_degree() > 1) return std::nullopt;
  // w-coefficient must be i A(phi) e^{-i phi} with A real.
  CircleFunc wc = F.w_coefficient(1);
  CircleFunc a_func = wc.scaled(-iunit()) * CircleFunc::emode(1);
  auto a_trig = a_func.as_trig();
  if (!a_trig || !a_trig->is_real()) return std::nullopt;
  auto rest = F.w_coefficient(0).as_trig();
  if (!rest) return std::nullopt;
  // rest = B + iC with both real.
  TrigPoly B = (*rest + rest->conj()).scaled(half());
  TrigPoly C = (*rest - rest->conj()).scaled(HPoly(GaussianRational(Rational(0), Rational(-1, 2))));
  if (!B.is_real() || !C.is_real()) return std::nullopt;
  CircleObservable out{*a_trig, B, C};
  if (out.complex_rep() != F) return std::nullopt;
  return out;
}

StructureSolution solve_structure(const CircleFunc& f1, const CircleFunc& f2) {
  StructureSolution sol;
  CircleFunc sin = CircleFunc::sin_phi(), cos = CircleFunc::cos_phi();
  CircleFunc f1q1 = f1.diff(0), f1q2 = f1.diff(1), f1phi = f1.diff(2);
  CircleFunc f2q1 = f2.diff(0), f2q2 = f2.diff(1), f2phi = f2.diff(2);

  sol.x_phi = sin * f1q1 - cos * f1q2;
  sol.x1 = -(sin * f1phi) - cos * f2phi;
  sol.x2 = cos * f1phi - sin * f2phi;

  auto check = [&](int id, const CircleFunc& lhs, const CircleFunc& rhs) {
    if (lhs == rhs) return true;
    sol.accepted = false;
    sol.violated_equation = id;
    return false;
  };
  if (!check(1, sin * sol.x_phi, f1q1)) return sol;
  if (!check(2, f1q1, f2q2)) return sol;
  if (!check(3, cos * sol.x_phi, -f1q2)) return sol;
  if (!check(4, -f1q2, f2q1)) return sol;
  if (!check(5, f1phi, cos * sol.x2 - sin * sol.x1)) return sol;
  if (!check(6, f2phi, -(cos * sol.x1) - sin * sol.x2)) return sol;

  CircleFunc F = f1 + f2.scaled(iunit());
  auto obs = decompose(F);
  if (!obs) {
    sol.accepted = false;
    sol.violated_equation = 0;
    return sol;
  }
  sol.accepted = true;
  sol.observable = *obs;
  return sol;
}

CircleObservable bracket(const CircleObservable& f, const CircleObservable& g) {
  CircleFunc F = f.complex_rep(), G = g.complex_rep();
  CircleFunc e = CircleFunc::emode(1);
  CircleFunc br = (e * F.diff_phi() * G.diff_w() - e * F.diff_w() * G.diff_phi()).scaled(iunit());
  auto obs = decompose(br);
  if (!obs)
    throw StructuralError("circle bracket left the (A,B,C) family: " + br.to_string());
  return *obs;
}

CircleOperator quantize(const CircleObservable& f) { return {f.A, f.B, f.C}; }

State apply(const CircleOperator& op, const State& state) {
  TrigPoly d1 = state.first.diff().scaled(minus_i_hbar());
  TrigPoly d2 = state.second.diff().scaled(minus_i_hbar());
  return {op.A * d1 + op.B * state.first, op.A * d2 + op.C * state.second};
}

void DiffOp::prune() {
  while (!coef.empty() && coef.back().first.is_zero() && coef.back().second.is_zero())
    coef.pop_back();
}

bool operator==(const DiffOp& a, const DiffOp& b) {
  DiffOp x = a, y = b;
  x.prune();
  y.prune();
  return x.coef == y.coef;
}

DiffOp DiffOp::scaled(const HPoly& s) const {
  DiffOp r = *this;
  for (auto& [c1, c2] : r.coef) {
    c1 = c1.scaled(s);
    c2 = c2.scaled(s);
  }
  return r;
}

DiffOp operator-(const DiffOp& a, const DiffOp& b) {
  DiffOp r = a;
  if (r.coef.size() < b.coef.size()) r.coef.resize(b.coef.size());
  for (size_t k = 0; k < b.coef.size(); ++k) {
    r.coef[k].first -= b.coef[k].first;
    r.coef[k].second -= b.coef[k].second;
  }
  r.prune();
  return r;
}

DiffOp to_diffop(const CircleOperator& op) {
  DiffOp d;
  d.coef.push_back({op.B, op.C});
  TrigPoly a = op.A.scaled(minus_i_hbar());
  d.coef.push_back({a, a});
  d.prune();
  return d;
}

DiffOp compose(const DiffOp& a, const DiffOp& b) {
  // (c d^k) o (e d^m) = sum_j C(k, j) c e^{(j)} d^{k - j + m}
  DiffOp r;
  auto binom = [](int n, int k) {
    long long v = 1;
    for (int i = 1; i <= k; ++i) v = v * (n - i + 1) / i;
    return v;
  };
  for (size_t k = 0; k < a.coef.size(); ++k)
    for (size_t m = 0; m < b.coef.size(); ++m) {
      std::pair<TrigPoly, TrigPoly> e = b.coef[m];
      for (size_t j = 0; j <= k; ++j) {
        size_t order = k - j + m;
        if (r.coef.size() <= order) r.coef.resize(order + 1);
        HPoly c(Rational(binom(static_cast<int>(k), static_cast<int>(j))));
        r.coef[order].first += (a.coef[k].first * e.first).scaled(c);
        r.coef[order].second += (a.coef[k].second * e.second).scaled(c);
        e.first = e.first.diff();
        e.second = e.second.diff();
      }
    }
  r.prune();
  return r;
}

CircleDirac dirac_check_circle(const CircleObservable& f, const CircleObservable& g) {
  CircleDirac r;
  DiffOp qf = to_diffop(quantize(f)), qg = to_diffop(quantize(g));
  r.commutator = compose(qf, qg) - compose(qg, qf);
  r.expected = to_diffop(quantize(bracket(f, g))).scaled(minus_i_hbar());
  r.holds = r.commutator == r.expected;
  return r;
}

std::array<CircleForm, 2> reduced_potential() {
  CircleForm t1(3, 1), t2(3, 1);
  t1.add_term({0}, CircleFunc::cos_phi());
  t1.add_term({1}, CircleFunc::sin_phi());
  t2.add_term({0}, -CircleFunc::sin_phi());
  t2.add_term({1}, CircleFunc::cos_phi());
  return {t1, t2};
}

JformKernel jform_kernel(int max_mode, int max_qdeg) {
  if (max_mode < 0 || max_qdeg < 0) throw StructuralError("jform kernel bounds must be >= 0");

  // Real parameter basis for f1 (modes up to max_mode) and f2 = B (mode 0).
  struct Param {
    bool in_b;
    int m, a, b;
    bool imaginary;  // parameter multiplies i * monomial
  };
  std::vector<Param> params;
  auto add_mono_params = [&](bool in_b, int m) {
    for (int a = 0; a <= max_qdeg; ++a)
      for (int b = 0; a + b <= max_qdeg; ++b) {
        if (m == 0) {
          if (a < b) continue;  // (a,b) and (b,a) span the same real functions
          params.push_back({in_b, m, a, b, false});
          if (a > b) params.push_back({in_b, m, a, b, true});
        } else {
          params.push_back({in_b, m, a, b, false});
          params.push_back({in_b, m, a, b, true});
        }
      }
  };
  add_mono_params(false, 0);
  for (int m = 1; m <= max_mode; ++m) add_mono_params(false, m);
  add_mono_params(true, 0);

  auto realize = [&](const Param& p) -> std::pair<CircleFunc, CircleFunc> {
    CircleFunc mono;
    HPoly c = p.imaginary ? HPoly::i() : HPoly(1);
    mono.add_term({p.a, p.b, p.in_b ? 0 : p.m}, c);
    CircleFunc fn = mono + mono.conj();  // real by construction
    if (p.in_b) return {CircleFunc(), fn};
    return {fn, CircleFunc()};
  };

  // Residuals of the three structure-equation families; all must vanish.
  auto residuals = [&](const CircleFunc& f1, const CircleFunc& f2) {
    CircleFunc em = CircleFunc::emode(-1), ep = CircleFunc::emode(1);
    std::array<CircleFunc, 3> r;
    r[0] = f1.diff_w() * em - f1.diff_wbar() * ep;
    r[1] = f1.diff_phi() - (em * f2.diff_w() - ep * f2.diff_wbar());
    r[2] = f2.diff_phi();
    return r;
  };

  // Matrix rows: (residual id, monomial key, re/im).
  std::map<std::tuple<int, CircleFunc::Key, bool>, size_t> row_of;
  std::vector<std::vector<Rational>> rows;
  auto row_id = [&](int rid, CircleFunc::Key k, bool im) {
    auto [it, inserted] = row_of.try_emplace({rid, k, im}, row_of.size());
    if (inserted) rows.emplace_back(params.size());
    return it->second;
  };
  for (size_t j = 0; j < params.size(); ++j) {
    auto [f1, f2] = realize(params[j]);
    auto rs = residuals(f1, f2);
    for (int rid = 0; rid < 3; ++rid)
      for (const auto& [k, c] : rs[static_cast<size_t>(rid)].terms()) {
        GaussianRational v = c.constant();
        if (!v.re().is_zero()) rows[row_id(rid, k, false)][j] = v.re();
        if (!v.im().is_zero()) rows[row_id(rid, k, true)][j] = v.im();
      }
  }

  JformKernel out;
  for (const auto& vec : kernel_basis(std::move(rows), params.size())) {
    CircleFunc f1, f2;
    for (size_t j = 0; j < params.size(); ++j) {
      if (vec[j].is_zero()) continue;
      auto [b1, b2] = realize(params[j]);
      f1 += b1.scaled(HPoly(vec[j]));
      f2 += b2.scaled(HPoly(vec[j]));
    }
    out.basis.push_back({f1, f2});
  }
  return out;
}

}  // namespace nsym::circle
