#pragma once

#include <map>
#include <vector>

#include "nsym/multipoly.hpp"

namespace nsym {

struct DegreeOverflowError : StructuralError {
  using StructuralError::StructuralError;
};

// Vector field on an N-dimensional coordinate space with coefficients in R.
// R is any commutative differential ring: MultiPoly on R^N, or the
// trigonometric ring on R^2 x S^1. It must provide +, -, *, unary -,
// is_zero(), ==, and diff(i).
template <class R>
struct FieldT {
  int dim = 0;
  std::vector<R> comps;

  FieldT() = default;
  FieldT(int n, std::vector<R> c) : dim(n), comps(std::move(c)) {
    if (static_cast<int>(comps.size()) != dim)
      throw StructuralError("field component count mismatch");
  }

  // Directional derivative X(f).
  R apply(const R& f) const {
    R out = comps[0] * f.diff(0);
    for (int a = 1; a < dim; ++a) out += comps[a] * f.diff(a);
    return out;
  }

  friend bool operator==(const FieldT& a, const FieldT& b) {
    return a.dim == b.dim && a.comps == b.comps;
  }

  FieldT operator-() const {
    FieldT r = *this;
    for (auto& c : r.comps) c = -c;
    return r;
  }
  friend FieldT operator+(const FieldT& a, const FieldT& b) {
    if (a.dim != b.dim) throw StructuralError("field dimension mismatch");
    FieldT r = a;
    for (int i = 0; i < a.dim; ++i) r.comps[i] += b.comps[i];
    return r;
  }
  friend FieldT operator-(const FieldT& a, const FieldT& b) { return a + (-b); }
};

// Differential k-form, stored on strictly increasing 0-based index tuples.
template <class R>
class FormT {
 public:
  FormT() = default;
  FormT(int dim, int degree) : dim_(dim), deg_(degree) {
    if (degree < 0 || degree > dim || degree > 4)
      throw DegreeOverflowError("form degree out of supported range");
  }

  int dim() const { return dim_; }
  int degree() const { return deg_; }
  bool is_zero() const { return terms_.empty(); }
  const std::map<std::vector<int>, R>& terms() const { return terms_; }

  R coeff(const std::vector<int>& idx) const {
    auto it = terms_.find(idx);
    if (it != terms_.end()) return it->second;
    return R();
  }

  void add_term(std::vector<int> idx, R c) {
    if (c.is_zero()) return;
    if (static_cast<int>(idx.size()) != deg_) throw StructuralError("form index arity mismatch");
    for (size_t i = 0; i + 1 < idx.size(); ++i)
      if (idx[i] >= idx[i + 1]) throw StructuralError("form indices must be strictly increasing");
    auto [it, inserted] = terms_.try_emplace(std::move(idx), c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  // Sorts an arbitrary tuple, returning the permutation sign; zero for
  // repeated indices (signalled by sign 0).
  static int sort_tuple(std::vector<int>& idx) {
    int sign = 1;
    for (size_t i = 1; i < idx.size(); ++i)
      for (size_t j = i; j > 0 && idx[j] < idx[j - 1]; --j) {
        std::swap(idx[j], idx[j - 1]);
        sign = -sign;
      }
    for (size_t i = 0; i + 1 < idx.size(); ++i)
      if (idx[i] == idx[i + 1]) return 0;
    return sign;
  }

  void add_term_any_order(std::vector<int> idx, const R& c) {
    int sign = sort_tuple(idx);
    if (sign == 0 || c.is_zero()) return;
    add_term(std::move(idx), sign > 0 ? c : -c);
  }

  FormT operator-() const {
    FormT r(dim_, deg_);
    for (const auto& [idx, c] : terms_) r.terms_[idx] = -c;
    return r;
  }
  friend FormT operator+(const FormT& a, const FormT& b) {
    if (a.dim_ != b.dim_ || a.deg_ != b.deg_)
      throw StructuralError("form shape mismatch in addition");
    FormT r = a;
    for (const auto& [idx, c] : b.terms_) r.add_term(idx, c);
    return r;
  }
  friend FormT operator-(const FormT& a, const FormT& b) { return a + (-b); }
  FormT& operator+=(const FormT& o) { return *this = *this + o; }
  FormT& operator-=(const FormT& o) { return *this = *this - o; }

  FormT scaled(const R& s) const {
    FormT r(dim_, deg_);
    for (const auto& [idx, c] : terms_) r.add_term(idx, c * s);
    return r;
  }

  friend bool operator==(const FormT& a, const FormT& b) {
    return a.dim_ == b.dim_ && a.deg_ == b.deg_ && a.terms_ == b.terms_;
  }
  friend bool operator!=(const FormT& a, const FormT& b) { return !(a == b); }

 private:
  int dim_ = 0;
  int deg_ = 0;
  std::map<std::vector<int>, R> terms_;
};

template <class R>
FormT<R> wedge(const FormT<R>& a, const FormT<R>& b) {
  if (a.dim() != b.dim()) throw StructuralError("wedge dimension mismatch");
  if (a.degree() + b.degree() > a.dim())
    throw DegreeOverflowError("wedge degree overflow");
  FormT<R> r(a.dim(), a.degree() + b.degree());
  for (const auto& [ia, ca] : a.terms())
    for (const auto& [ib, cb] : b.terms()) {
      std::vector<int> idx = ia;
      idx.insert(idx.end(), ib.begin(), ib.end());
      r.add_term_any_order(std::move(idx), ca * cb);
    }
  return r;
}

template <class R>
FormT<R> ext_d(const FormT<R>& w) {
  if (w.degree() >= w.dim()) throw DegreeOverflowError("exterior derivative of top-degree form");
  FormT<R> r(w.dim(), w.degree() + 1);
  for (const auto& [idx, c] : w.terms())
    for (int i = 0; i < w.dim(); ++i) {
      R dc = c.diff(i);
      if (dc.is_zero()) continue;
      std::vector<int> nidx;
      nidx.reserve(idx.size() + 1);
      nidx.push_back(i);
      nidx.insert(nidx.end(), idx.begin(), idx.end());
      r.add_term_any_order(std::move(nidx), dc);
    }
  return r;
}

// Interior product X -| w in the first slot.
template <class R>
FormT<R> contract(const FieldT<R>& x, const FormT<R>& w) {
  if (x.dim != w.dim()) throw StructuralError("contraction dimension mismatch");
  if (w.degree() < 1) throw StructuralError("contraction of a 0-form");
  FormT<R> r(w.dim(), w.degree() - 1);
  for (const auto& [idx, c] : w.terms())
    for (size_t j = 0; j < idx.size(); ++j) {
      const R& comp = x.comps[idx[j]];
      if (comp.is_zero()) continue;
      std::vector<int> nidx;
      nidx.reserve(idx.size() - 1);
      for (size_t k = 0; k < idx.size(); ++k)
        if (k != j) nidx.push_back(idx[k]);
      R val = comp * c;
      r.add_term(std::move(nidx), (j % 2 == 0) ? val : -val);
    }
  return r;
}

// Commutator of derivations, componentwise X(Y^a) - Y(X^a).
template <class R>
FieldT<R> lie_bracket(const FieldT<R>& x, const FieldT<R>& y) {
  if (x.dim != y.dim) throw StructuralError("lie bracket dimension mismatch");
  FieldT<R> r = x;
  for (int a = 0; a < x.dim; ++a) r.comps[a] = x.apply(y.comps[a]) - y.apply(x.comps[a]);
  return r;
}

// Lie derivative by the direct component formula; serves as the independent
// route against Cartan's magic formula.
template <class R>
FormT<R> lie_derivative(const FieldT<R>& x, const FormT<R>& w) {
  if (x.dim != w.dim()) throw StructuralError("lie derivative dimension mismatch");
  FormT<R> r(w.dim(), w.degree());
  for (const auto& [idx, c] : w.terms()) {
    r.add_term(idx, x.apply(c));
    for (size_t j = 0; j < idx.size(); ++j)
      for (int a = 0; a < w.dim(); ++a) {
        R d = x.comps[idx[j]].diff(a);
        if (d.is_zero()) continue;
        std::vector<int> nidx = idx;
        nidx[j] = a;
        r.add_term_any_order(std::move(nidx), c * d);
      }
  }
  return r;
}

using PolyField = FieldT<MultiPoly>;
using PolyForm = FormT<MultiPoly>;

// Coordinate space R^N with variables q1..qN.
inline VarsPtr coord_vars(int n, const std::string& stem = "q") {
  Vars v;
  for (int i = 1; i <= n; ++i) v.push_back(stem + std::to_string(i));
  return make_vars(std::move(v));
}

}  // namespace nsym
