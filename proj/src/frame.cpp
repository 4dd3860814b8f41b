#include "nsym/frame.hpp"

#include <algorithm>
#include <sstream>

#include "nsym/linalg.hpp"

namespace nsym::frame {

namespace {

long long factorial(int k) {
  long long f = 1;
  for (int i = 2; i <= k; ++i) f *= i;
  return f;
}

// Product of factorials of the multiplicities in a sorted tuple.
long long rep_factorial(const std::vector<int>& sorted) {
  long long f = 1;
  size_t i = 0;
  while (i < sorted.size()) {
    size_t j = i;
    while (j < sorted.size() && sorted[j] == sorted[i]) ++j;
    f *= factorial(static_cast<int>(j - i));
    i = j;
  }
  return f;
}

struct Split {
  std::vector<int> left, right;
};

void enumerate_splits_rec(const std::vector<std::pair<int, int>>& counts, size_t pos,
                          int remaining, std::vector<int>& left, std::vector<int>& right,
                          std::vector<Split>& out) {
  if (pos == counts.size()) {
    if (remaining == 0) out.push_back({left, right});
    return;
  }
  auto [value, count] = counts[pos];
  for (int take = 0; take <= std::min(count, remaining); ++take) {
    size_t lmark = left.size(), rmark = right.size();
    for (int t = 0; t < take; ++t) left.push_back(value);
    for (int t = 0; t < count - take; ++t) right.push_back(value);
    enumerate_splits_rec(counts, pos + 1, remaining - take, left, right, out);
    left.resize(lmark);
    right.resize(rmark);
  }
}

// All ways of splitting the sorted multiset K into sorted sub-multisets of
// sizes (size_left, |K| - size_left).
std::vector<Split> enumerate_splits(const std::vector<int>& K, int size_left) {
  std::vector<std::pair<int, int>> counts;
  for (int v : K) {
    if (!counts.empty() && counts.back().first == v)
      ++counts.back().second;
    else
      counts.push_back({v, 1});
  }
  std::vector<Split> out;
  std::vector<int> left, right;
  enumerate_splits_rec(counts, 0, size_left, left, right, out);
  return out;
}

int merge_inversions(const std::vector<int>& a, const std::vector<int>& b) {
  int inv = 0;
  for (int x : a)
    for (int y : b)
      if (x > y) ++inv;
  return inv;
}

}  // namespace

std::vector<std::vector<int>> multisets(int n, int size) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur(size, 1);
  if (size == 0) {
    out.push_back({});
    return out;
  }
  while (true) {
    out.push_back(cur);
    int k = size - 1;
    while (k >= 0 && cur[k] == n) --k;
    if (k < 0) break;
    int v = cur[k] + 1;
    for (int j = k; j < size; ++j) cur[j] = v;
  }
  return out;
}

std::vector<std::vector<int>> increasing_tuples(int n, int size) {
  std::vector<std::vector<int>> out;
  if (size > n) return out;
  if (size == 0) {
    out.push_back({});
    return out;
  }
  std::vector<int> cur(size);
  for (int i = 0; i < size; ++i) cur[i] = i + 1;
  while (true) {
    out.push_back(cur);
    int k = size - 1;
    while (k >= 0 && cur[k] == n - (size - 1 - k)) --k;
    if (k < 0) break;
    ++cur[k];
    for (int j = k + 1; j < size; ++j) cur[j] = cur[j - 1] + 1;
  }
  return out;
}

FrameSpace::FrameSpace(int n_) : n(n_) {
  if (n < 2) throw StructuralError("frame bundle dimension must be at least 2");
  Vars v;
  for (int a = 1; a <= n; ++a) v.push_back("q" + std::to_string(a));
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j)
      v.push_back("pi" + std::to_string(i) + "_" + std::to_string(j));
  vars = make_vars(std::move(v));
}

FrameObservable::FrameObservable(FrameSpace space, int rank, Symmetry sym)
    : space_(std::move(space)), rank_(rank), sym_(sym) {
  if (rank < 1) throw StructuralError("observable rank must be at least 1");
}

bool FrameObservable::is_zero() const {
  for (const auto& [idx, c] : comps_)
    if (!c.is_zero()) return false;
  return true;
}

MultiPoly FrameObservable::component(std::vector<int> idx) const {
  if (static_cast<int>(idx.size()) != rank_) throw StructuralError("component arity mismatch");
  int sign = 1;
  if (sym_ == Symmetry::Sym) {
    std::sort(idx.begin(), idx.end());
  } else {
    for (size_t i = 1; i < idx.size(); ++i)
      for (size_t j = i; j > 0 && idx[j] < idx[j - 1]; --j) {
        std::swap(idx[j], idx[j - 1]);
        sign = -sign;
      }
    for (size_t i = 0; i + 1 < idx.size(); ++i)
      if (idx[i] == idx[i + 1]) return space_.zero();
  }
  auto it = comps_.find(idx);
  if (it == comps_.end()) return space_.zero();
  return sign > 0 ? it->second : -it->second;
}

void FrameObservable::set_component(std::vector<int> idx, MultiPoly value) {
  add_component(std::move(idx), std::move(value));
}

void FrameObservable::add_component(std::vector<int> idx, const MultiPoly& value) {
  if (static_cast<int>(idx.size()) != rank_) throw StructuralError("component arity mismatch");
  for (int i : idx)
    if (i < 1 || i > space_.n) throw StructuralError("component index out of range");
  for (size_t i = 0; i + 1 < idx.size(); ++i) {
    bool ok = sym_ == Symmetry::Sym ? idx[i] <= idx[i + 1] : idx[i] < idx[i + 1];
    if (!ok) throw StructuralError("component tuple is not canonical");
  }
  if (value.is_zero()) return;
  auto [it, inserted] = comps_.try_emplace(std::move(idx), value);
  if (!inserted) {
    it->second += value;
    if (it->second.is_zero()) comps_.erase(it);
  }
}

int FrameObservable::pi_degree() const {
  int d = 0;
  for (const auto& [idx, c] : comps_)
    for (const auto& [e, h] : c.terms()) {
      int s = 0;
      for (int k = space_.n; k < static_cast<int>(e.size()); ++k) s += e[k];
      d = std::max(d, s);
    }
  return d;
}

bool FrameObservable::is_pi_homogeneous(int degree) const {
  for (const auto& [idx, c] : comps_)
    for (const auto& [e, h] : c.terms()) {
      int s = 0;
      for (int k = space_.n; k < static_cast<int>(e.size()); ++k) s += e[k];
      if (s != degree) return false;
    }
  return true;
}

FrameObservable FrameObservable::operator-() const {
  FrameObservable r(space_, rank_, sym_);
  for (const auto& [idx, c] : comps_) r.comps_[idx] = -c;
  return r;
}

FrameObservable operator+(const FrameObservable& a, const FrameObservable& b) {
  if (a.n() != b.n() || a.rank_ != b.rank_ || a.sym_ != b.sym_)
    throw StructuralError("observable shape mismatch");
  FrameObservable r = a;
  for (const auto& [idx, c] : b.comps_) r.add_component(idx, c);
  return r;
}

FrameObservable operator-(const FrameObservable& a, const FrameObservable& b) { return a + (-b); }

FrameObservable FrameObservable::scaled(const MultiPoly& s) const {
  FrameObservable r(space_, rank_, sym_);
  for (const auto& [idx, c] : comps_) {
    MultiPoly v = c * s;
    if (!v.is_zero()) r.comps_[idx] = std::move(v);
  }
  return r;
}

FrameObservable FrameObservable::scaled(const HPoly& s) const {
  FrameObservable r(space_, rank_, sym_);
  for (const auto& [idx, c] : comps_) {
    MultiPoly v = c.scaled(s);
    if (!v.is_zero()) r.comps_[idx] = std::move(v);
  }
  return r;
}

bool operator==(const FrameObservable& a, const FrameObservable& b) {
  return a.n() == b.n() && a.rank_ == b.rank_ && a.sym_ == b.sym_ && a.comps_ == b.comps_;
}

std::string FrameObservable::to_string() const {
  if (comps_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [idx, c] : comps_) {
    if (!first) os << "; ";
    os << "(";
    for (size_t i = 0; i < idx.size(); ++i) os << (i ? "," : "") << idx[i];
    os << "): " << c.to_string();
    first = false;
  }
  return os.str();
}

MultiPoly HamiltonianField::q_component(std::vector<int> I, int c) const {
  std::sort(I.begin(), I.end());
  I.push_back(c);
  auto it = q_part.find(I);
  if (it == q_part.end()) throw StructuralError("missing q-part component");
  return it->second;
}

MultiPoly HamiltonianField::pi_component(std::vector<int> I, int a, int b) const {
  std::sort(I.begin(), I.end());
  I.push_back(a);
  I.push_back(b);
  auto it = pi_part.find(I);
  if (it == pi_part.end()) throw StructuralError("missing pi-part component");
  return it->second;
}

FrameObservable generator(const FrameSpace& space, GenKind kind, int i, int j) {
  auto check = [&](int idx) {
    if (idx < 1 || idx > space.n) throw StructuralError("generator index out of range");
  };
  FrameObservable f(space, 1, Symmetry::Sym);
  switch (kind) {
    case GenKind::PiHat:
      check(i);
      for (int m = 1; m <= space.n; ++m) f.set_component({m}, space.pi(m, i));
      break;
    case GenKind::QHat:
      check(i);
      f.set_component({i}, space.q(i));
      break;
    case GenKind::QHatFull:
      check(i);
      check(j);
      f.set_component({j}, space.q(i));
      break;
    case GenKind::IHat:
      check(i);
      f.set_component({i}, space.constant(HPoly(1)));
      break;
  }
  return f;
}

FrameObservable sym_product(const FrameObservable& f, const FrameObservable& g) {
  if (f.symmetry() != Symmetry::Sym || g.symmetry() != Symmetry::Sym)
    throw StructuralError("symmetric product requires symmetric observables");
  if (f.n() != g.n()) throw StructuralError("symmetric product dimension mismatch");
  int p = f.rank(), q = g.rank(), k = p + q;
  FrameObservable r(f.space(), k, Symmetry::Sym);
  for (auto& K : multisets(f.n(), k)) {
    MultiPoly val = f.space().zero();
    for (auto& s : enumerate_splits(K, p)) {
      Rational w(factorial(p) / rep_factorial(s.left), 1);
      w *= Rational(factorial(q) / rep_factorial(s.right), 1);
      val += (f.component(s.left) * g.component(s.right)).scaled(HPoly(w));
    }
    val = val.scaled(HPoly(Rational(rep_factorial(K), factorial(k))));
    if (!val.is_zero()) r.set_component(K, std::move(val));
  }
  return r;
}

AntisymProduct antisym_product(const FrameObservable& f, const FrameObservable& g) {
  auto anti_ok = [](const FrameObservable& x) {
    return x.symmetry() == Symmetry::Antisym || x.rank() == 1;
  };
  if (!anti_ok(f) || !anti_ok(g))
    throw StructuralError("antisymmetric product requires antisymmetric (or rank-1) inputs");
  if (f.n() != g.n()) throw StructuralError("antisymmetric product dimension mismatch");
  int p = f.rank(), q = g.rank(), k = p + q;
  FrameObservable r(f.space(), k, Symmetry::Antisym);
  if (k > f.n()) return {r, true};
  Rational w(factorial(p) * factorial(q), factorial(k));
  for (auto& K : increasing_tuples(f.n(), k)) {
    MultiPoly val = f.space().zero();
    for (auto& s : enumerate_splits(K, p)) {
      int sign = merge_inversions(s.left, s.right) % 2 == 0 ? 1 : -1;
      MultiPoly term = f.component(s.left) * g.component(s.right);
      val += sign > 0 ? term : -term;
    }
    val = val.scaled(HPoly(w));
    if (!val.is_zero()) r.set_component(K, std::move(val));
  }
  return {r, false};
}

HamiltonianField hamiltonian_field(const FrameObservable& f) {
  if (f.symmetry() != Symmetry::Sym)
    throw StructuralError("hamiltonian field requires a symmetric observable");
  const FrameSpace& sp = f.space();
  int n = sp.n, p = f.rank();

  // Unknowns: q-part components X^{I,c}, I a sorted (p-1)-tuple.
  auto Is = multisets(n, p - 1);
  std::map<std::vector<int>, int> col_of;
  int ncols = 0;
  for (auto& I : Is)
    for (int c = 1; c <= n; ++c) {
      std::vector<int> key = I;
      key.push_back(c);
      col_of[key] = ncols++;
    }

  // One equation per (symmetric p-tuple, pi^b_c): the pi-derivative of the
  // structure equation.
  std::vector<LinRow<MultiPoly>> rows;
  std::vector<std::string> row_desc;
  long long fpm1 = factorial(p - 1);
  for (auto& I : multisets(n, p)) {
    MultiPoly fI = f.component(I);
    for (int b = 1; b <= n; ++b)
      for (int c = 1; c <= n; ++c) {
        LinRow<MultiPoly> row;
        row.rhs = fI.diff(sp.pivar(b, c));
        for (size_t k = 0; k < I.size(); ++k) {
          if (I[k] != b) continue;
          if (k > 0 && I[k - 1] == b) continue;  // handle multiplicity once
          int mult = 0;
          for (int v : I)
            if (v == b) ++mult;
          std::vector<int> J;
          J.reserve(I.size());
          bool removed = false;
          for (int v : I) {
            if (v == b && !removed) {
              removed = true;
              continue;
            }
            J.push_back(v);
          }
          J.push_back(c);
          row.a[col_of.at(J)] += Rational(mult * fpm1);
        }
        if (row.a.empty() && row.rhs.is_zero()) continue;
        row.tag = static_cast<int>(row_desc.size());
        std::ostringstream os;
        os << "d f^(";
        for (size_t i = 0; i < I.size(); ++i) os << (i ? "," : "") << I[i];
        os << ") / d pi^" << b << "_" << c;
        row_desc.push_back(os.str());
        rows.push_back(std::move(row));
      }
  }

  auto sol = solve_linear_system<MultiPoly>(std::move(rows), ncols, MultiPoly(sp.vars));
  if (!sol.consistent)
    throw NotAllowableError("observable violates the structure equation",
                            row_desc[static_cast<size_t>(sol.bad_row_tag)]);

  HamiltonianField X;
  X.n = n;
  X.p = p;
  for (const auto& [key, col] : col_of) X.q_part[key] = sol.x[static_cast<size_t>(col)];

  // pi-part: the totally symmetric canonical representative.
  Rational inv_fact(-1, factorial(p));
  for (auto& I : Is)
    for (int a = 1; a <= n; ++a) {
      std::vector<int> T = I;
      T.push_back(a);
      std::sort(T.begin(), T.end());
      MultiPoly fT = f.component(T);
      for (int b = 1; b <= n; ++b) {
        std::vector<int> key = I;
        key.push_back(a);
        key.push_back(b);
        X.pi_part[key] = fT.diff(sp.qvar(b)).scaled(HPoly(inv_fact));
      }
    }
  return X;
}

AllowableResult is_allowable(const FrameObservable& f) {
  try {
    hamiltonian_field(f);
    return {true, ""};
  } catch (const NotAllowableError& e) {
    return {false, e.equation};
  }
}

namespace {

MultiPoly apply_field(const FrameSpace& sp, const HamiltonianField& X,
                      const std::vector<int>& I, const MultiPoly& g) {
  MultiPoly out(sp.vars);
  for (int c = 1; c <= sp.n; ++c) {
    std::vector<int> key = I;
    key.push_back(c);
    auto it = X.q_part.find(key);
    if (it == X.q_part.end() || it->second.is_zero()) continue;
    out += it->second * g.diff(sp.qvar(c));
  }
  for (int a = 1; a <= sp.n; ++a)
    for (int b = 1; b <= sp.n; ++b) {
      MultiPoly dg = g.diff(sp.pivar(a, b));
      if (dg.is_zero()) continue;
      std::vector<int> key = I;
      key.push_back(a);
      key.push_back(b);
      auto it = X.pi_part.find(key);
      if (it == X.pi_part.end() || it->second.is_zero()) continue;
      out += it->second * dg;
    }
  return out;
}

}  // namespace

FrameObservable poisson_bracket_with_field(const HamiltonianField& X, int p,
                                           const FrameObservable& g) {
  const FrameSpace& sp = g.space();
  int n = sp.n, q = g.rank(), k = p + q - 1;
  FrameObservable r(sp, k, Symmetry::Sym);
  Rational pfac(factorial(p));
  for (auto& K : multisets(n, k)) {
    MultiPoly val = sp.zero();
    for (auto& s : enumerate_splits(K, p - 1)) {
      Rational w(factorial(p - 1) / rep_factorial(s.left), 1);
      w *= Rational(factorial(q) / rep_factorial(s.right), 1);
      MultiPoly term = apply_field(sp, X, s.left, g.component(s.right));
      val += term.scaled(HPoly(w));
    }
    val = val.scaled(HPoly(pfac * Rational(rep_factorial(K), factorial(k))));
    if (!val.is_zero()) r.set_component(K, std::move(val));
  }
  return r;
}

FrameObservable poisson_bracket(const FrameObservable& f, const FrameObservable& g) {
  if (f.symmetry() != Symmetry::Sym || g.symmetry() != Symmetry::Sym)
    throw StructuralError("poisson bracket requires symmetric observables");
  if (f.n() != g.n()) throw StructuralError("poisson bracket dimension mismatch");
  HamiltonianField X = hamiltonian_field(f);
  return poisson_bracket_with_field(X, f.rank(), g);
}

CotangentSpace::CotangentSpace(int n_) : n(n_) {
  Vars v;
  for (int a = 1; a <= n; ++a) v.push_back("q" + std::to_string(a));
  for (int a = 1; a <= n; ++a) v.push_back("p" + std::to_string(a));
  for (int a = 1; a <= n; ++a) v.push_back("al" + std::to_string(a));
  vars = make_vars(std::move(v));
}

namespace {

std::optional<Rational> rational_value(const HPoly& h) {
  if (h.is_zero()) return Rational(0);
  if (!h.is_constant()) return std::nullopt;
  GaussianRational c = h.constant();
  if (!c.is_real()) return std::nullopt;
  return c.re();
}

// Patterns of symmetric products of pi-hat / I-hat generators, used both for
// the cotangent projection and (extended with q-hat) for quantization.
std::vector<FrameObservable> build_pattern_observables(
    const FrameSpace& sp, const std::vector<std::vector<GenAtom>>& words) {
  std::vector<FrameObservable> out;
  out.reserve(words.size());
  for (const auto& w : words) out.push_back(word_observable(sp, w));
  return out;
}

std::vector<GenWord> atom_multisets(const std::vector<GenAtom>& atoms, int size) {
  std::vector<GenWord> out;
  std::vector<int> idx(static_cast<size_t>(size), 0);
  int m = static_cast<int>(atoms.size());
  if (size == 0) return out;
  while (true) {
    GenWord w;
    for (int i : idx) w.push_back(atoms[static_cast<size_t>(i)]);
    out.push_back(std::move(w));
    int k = size - 1;
    while (k >= 0 && idx[static_cast<size_t>(k)] == m - 1) --k;
    if (k < 0) break;
    int v = idx[static_cast<size_t>(k)] + 1;
    for (int j = k; j < size; ++j) idx[static_cast<size_t>(j)] = v;
  }
  return out;
}

}  // namespace

FrameObservable word_observable(const FrameSpace& sp, const GenWord& w) {
  if (w.empty()) throw StructuralError("empty generator word");
  auto atom_obs = [&](const GenAtom& a) {
    switch (a.kind) {
      case GenAtom::Pi:
        return generator(sp, GenKind::PiHat, a.index);
      case GenAtom::Q:
        return generator(sp, GenKind::QHat, a.index);
      default:
        return generator(sp, GenKind::IHat, a.index);
    }
  };
  FrameObservable f = atom_obs(w[0]);
  for (size_t i = 1; i < w.size(); ++i) f = sym_product(f, atom_obs(w[i]));
  return f;
}

CotangentObservable project_to_cotangent(const CotangentSpace& cs, const FrameObservable& f,
                                         const std::optional<std::vector<Rational>>& alpha) {
  if (f.symmetry() != Symmetry::Sym)
    throw StructuralError("cotangent projection requires a symmetric observable");
  const FrameSpace& sp = f.space();
  int n = sp.n, p = f.rank();
  if (alpha) {
    if (static_cast<int>(alpha->size()) != n)
      throw StructuralError("alpha arity mismatch");
    bool all_zero = true;
    for (const auto& a : *alpha)
      if (!a.is_zero()) all_zero = false;
    if (all_zero) throw StructuralError("alpha must be nonzero");
  }

  std::vector<GenAtom> atoms;
  for (int a = 1; a <= n; ++a) atoms.push_back({GenAtom::Pi, a});
  for (int a = 1; a <= n; ++a) atoms.push_back({GenAtom::Id, a});
  std::vector<GenWord> words = atom_multisets(atoms, p);
  std::vector<FrameObservable> patterns = build_pattern_observables(sp, words);

  VarsPtr qvars = [&] {
    Vars v;
    for (int a = 1; a <= n; ++a) v.push_back("q" + std::to_string(a));
    return make_vars(std::move(v));
  }();

  // Row key: (value-index tuple, pi-exponent part). RHS: q-polynomial.
  std::map<std::pair<std::vector<int>, std::vector<int>>, LinRow<MultiPoly>> rows;
  auto touch = [&](const std::vector<int>& I, const std::vector<int>& piexp) -> LinRow<MultiPoly>& {
    auto [it, inserted] = rows.try_emplace({I, piexp});
    if (inserted) it->second.rhs = MultiPoly(qvars);
    return it->second;
  };

  for (auto& I : multisets(n, p)) {
    MultiPoly fI = f.component(I);
    for (const auto& [e, c] : fI.terms()) {
      std::vector<int> qe(e.begin(), e.begin() + n);
      std::vector<int> pe(e.begin() + n, e.end());
      MultiPoly q(qvars);
      q.add_term(std::move(qe), c);
      touch(I, pe).rhs += q;
    }
    for (size_t b = 0; b < patterns.size(); ++b) {
      MultiPoly pat = patterns[b].component(I);
      for (const auto& [e, c] : pat.terms()) {
        for (int k = 0; k < n; ++k)
          if (e[static_cast<size_t>(k)] != 0)
            throw StructuralError("pattern observable with q-dependence");
        std::vector<int> pe(e.begin() + n, e.end());
        auto r = rational_value(c);
        if (!r) throw StructuralError("pattern observable with non-rational coefficient");
        touch(I, pe).a[static_cast<int>(b)] += *r;
      }
    }
  }

  std::vector<LinRow<MultiPoly>> rowvec;
  for (auto& [key, row] : rows) {
    row.tag = static_cast<int>(rowvec.size());
    rowvec.push_back(std::move(row));
  }
  auto sol = solve_linear_system<MultiPoly>(std::move(rowvec), static_cast<int>(words.size()),
                                            MultiPoly(qvars));
  if (!sol.consistent)
    throw NotAllowableError("observable is not a q-combination of pi-hat/I-hat products",
                            "generator decomposition");

  // Assemble over {q, p, alpha}.
  std::vector<MultiPoly> q_images;
  for (int a = 1; a <= n; ++a) q_images.push_back(cs.q(a));
  MultiPoly out(cs.vars);
  for (size_t b = 0; b < words.size(); ++b) {
    if (sol.x[b].is_zero()) continue;
    MultiPoly term = sol.x[b].compose(q_images, cs.vars);
    for (const auto& atom : words[b])
      term *= atom.kind == GenAtom::Pi ? cs.p(atom.index) : cs.alpha(atom.index);
    out += term;
  }

  if (alpha) {
    std::vector<MultiPoly> images;
    for (int a = 1; a <= cs.n; ++a) images.push_back(cs.q(a));
    for (int a = 1; a <= cs.n; ++a) images.push_back(cs.p(a));
    for (int a = 1; a <= cs.n; ++a)
      images.push_back(MultiPoly::constant(cs.vars, HPoly((*alpha)[static_cast<size_t>(a - 1)])));
    out = out.compose(images, cs.vars);
  }
  return out;
}

CotangentObservable cotangent_bracket(const CotangentSpace& cs, const CotangentObservable& a,
                                      const CotangentObservable& b) {
  MultiPoly out(cs.vars);
  for (int j = 1; j <= cs.n; ++j)
    out += a.diff(cs.pvar(j)) * b.diff(cs.qvar(j)) - a.diff(cs.qvar(j)) * b.diff(cs.pvar(j));
  return out;
}

std::optional<std::vector<std::pair<GenWord, Rational>>> decompose_to_words(
    const FrameObservable& f) {
  const FrameSpace& sp = f.space();
  int n = sp.n, p = f.rank();
  std::vector<GenAtom> atoms;
  for (int a = 1; a <= n; ++a) atoms.push_back({GenAtom::Pi, a});
  for (int a = 1; a <= n; ++a) atoms.push_back({GenAtom::Q, a});
  for (int a = 1; a <= n; ++a) atoms.push_back({GenAtom::Id, a});
  std::vector<GenWord> words = atom_multisets(atoms, p);
  std::vector<FrameObservable> patterns = build_pattern_observables(sp, words);

  // Dense rational system over rows keyed by (index tuple, full monomial).
  std::map<std::pair<std::vector<int>, std::vector<int>>, size_t> row_of;
  auto row_id = [&](const std::vector<int>& I, const std::vector<int>& e) {
    return row_of.try_emplace({I, e}, row_of.size()).first->second;
  };
  auto Is = multisets(n, p);
  for (auto& I : Is) {
    MultiPoly fI = f.component(I);
    for (const auto& [e, c] : fI.terms()) row_id(I, e);
    for (auto& b : patterns) {
      MultiPoly pat = b.component(I);
      for (const auto& [e, c] : pat.terms()) row_id(I, e);
    }
  }
  size_t nrows = row_of.size(), ncols = words.size();
  std::vector<std::vector<Rational>> m(nrows, std::vector<Rational>(ncols + 1));
  for (auto& I : Is) {
    for (size_t b = 0; b < patterns.size(); ++b) {
      MultiPoly pat = patterns[b].component(I);
      for (const auto& [e, c] : pat.terms()) {
        auto r = rational_value(c);
        if (!r) return std::nullopt;
        m[row_id(I, e)][b] += *r;
      }
    }
    MultiPoly fI = f.component(I);
    for (const auto& [e, c] : fI.terms()) {
      auto r = rational_value(c);
      if (!r) return std::nullopt;
      m[row_id(I, e)][ncols] += *r;
    }
  }
  std::vector<int> pivots = rref(m);
  for (int c : pivots)
    if (c == static_cast<int>(ncols)) return std::nullopt;  // inconsistent
  std::vector<Rational> x(ncols);
  for (size_t r = 0; r < pivots.size(); ++r) x[static_cast<size_t>(pivots[r])] = m[r][ncols];
  std::vector<std::pair<GenWord, Rational>> out;
  for (size_t b = 0; b < ncols; ++b)
    if (!x[b].is_zero()) out.push_back({words[b], x[b]});
  return out;
}

}  // namespace nsym::frame
