#pragma once

#include <map>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "nsym/hpoly.hpp"

namespace nsym {

using Vars = std::vector<std::string>;
using VarsPtr = std::shared_ptr<const Vars>;

inline VarsPtr make_vars(Vars v) { return std::make_shared<const Vars>(std::move(v)); }

struct StructuralError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Sparse multivariate polynomial over a fixed ordered variable set, with
// HPoly coefficients. Exponent vectors are keyed in lexicographic order;
// zero terms are never stored.
class MultiPoly {
 public:
  MultiPoly() = default;
  explicit MultiPoly(VarsPtr vars) : vars_(std::move(vars)) {}

  static MultiPoly constant(VarsPtr vars, HPoly c) {
    MultiPoly p(std::move(vars));
    p.add_term(std::vector<int>(p.arity(), 0), std::move(c));
    return p;
  }
  static MultiPoly var(VarsPtr vars, size_t index, int exponent = 1) {
    MultiPoly p(vars);
    if (index >= p.arity()) throw StructuralError("variable index out of range");
    std::vector<int> e(p.arity(), 0);
    e[index] = exponent;
    p.add_term(std::move(e), HPoly(1));
    return p;
  }

  const VarsPtr& vars() const { return vars_; }
  size_t arity() const { return vars_ ? vars_->size() : 0; }
  bool is_zero() const { return terms_.empty(); }
  const std::map<std::vector<int>, HPoly>& terms() const { return terms_; }

  bool is_constant() const {
    if (terms_.empty()) return true;
    if (terms_.size() != 1) return false;
    for (int e : terms_.begin()->first)
      if (e != 0) return false;
    return true;
  }

  HPoly constant_value() const {
    std::vector<int> zero(arity(), 0);
    auto it = terms_.find(zero);
    return it == terms_.end() ? HPoly() : it->second;
  }

  int total_degree() const {
    int d = -1;
    for (const auto& [e, c] : terms_) {
      int s = 0;
      for (int x : e) s += x;
      if (s > d) d = s;
    }
    return d;
  }

  int degree_in(size_t index) const {
    int d = 0;
    for (const auto& [e, c] : terms_)
      if (e[index] > d) d = e[index];
    return d;
  }

  void add_term(std::vector<int> expo, HPoly c) {
    if (expo.size() != arity()) throw StructuralError("exponent arity mismatch");
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(std::move(expo), std::move(c));
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  MultiPoly operator-() const {
    MultiPoly r(vars_);
    for (const auto& [e, c] : terms_) r.terms_[e] = -c;
    return r;
  }

  friend MultiPoly operator+(const MultiPoly& a, const MultiPoly& b) {
    a.check_same(b);
    MultiPoly r = a;
    for (const auto& [e, c] : b.terms_) r.add_term(e, c);
    return r;
  }
  friend MultiPoly operator-(const MultiPoly& a, const MultiPoly& b) { return a + (-b); }
  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
    a.check_same(b);
    MultiPoly r(a.vars_);
    for (const auto& [ea, ca] : a.terms_)
      for (const auto& [eb, cb] : b.terms_) {
        std::vector<int> e(ea.size());
        for (size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
        r.add_term(std::move(e), ca * cb);
      }
    return r;
  }

  MultiPoly& operator+=(const MultiPoly& o) { return *this = *this + o; }
  MultiPoly& operator-=(const MultiPoly& o) { return *this = *this - o; }
  MultiPoly& operator*=(const MultiPoly& o) { return *this = *this * o; }

  MultiPoly scaled(const HPoly& s) const {
    MultiPoly r(vars_);
    for (const auto& [e, c] : terms_) r.add_term(e, c * s);
    return r;
  }

  MultiPoly pow(int e) const {
    if (e < 0) throw StructuralError("negative polynomial power");
    MultiPoly r = constant(vars_, HPoly(1));
    for (int k = 0; k < e; ++k) r *= *this;
    return r;
  }

  // Formal partial derivative.
  MultiPoly diff(size_t index) const {
    if (index >= arity()) throw StructuralError("unknown variable in diff");
    MultiPoly r(vars_);
    for (const auto& [e, c] : terms_) {
      if (e[index] == 0) continue;
      std::vector<int> d = e;
      d[index] -= 1;
      r.add_term(std::move(d), c * HPoly(e[index]));
    }
    return r;
  }

  // Evaluate with each variable replaced by the given polynomial over a
  // (possibly different) target variable set.
  MultiPoly compose(std::span<const MultiPoly> images, const VarsPtr& target) const {
    if (images.size() != arity()) throw StructuralError("compose arity mismatch");
    MultiPoly r(target);
    for (const auto& [e, c] : terms_) {
      MultiPoly t = MultiPoly::constant(target, c);
      for (size_t i = 0; i < e.size(); ++i)
        if (e[i] != 0) t *= images[i].pow(e[i]);
      r += t;
    }
    return r;
  }

  MultiPoly conj() const {
    MultiPoly r(vars_);
    for (const auto& [e, c] : terms_) r.terms_[e] = c.conj();
    return r;
  }

  // Keeps only terms of the given total degree.
  MultiPoly homogeneous_part(int degree) const {
    MultiPoly r(vars_);
    for (const auto& [e, c] : terms_) {
      int s = 0;
      for (int x : e) s += x;
      if (s == degree) r.terms_[e] = c;
    }
    return r;
  }

  friend bool operator==(const MultiPoly& a, const MultiPoly& b) {
    a.check_same(b);
    return a.terms_ == b.terms_;
  }
  friend bool operator!=(const MultiPoly& a, const MultiPoly& b) { return !(a == b); }

  std::string to_string() const {
    if (terms_.empty()) return "0";
    std::string s;
    bool first = true;
    for (const auto& [e, c] : terms_) {
      if (!first) s += " + ";
      std::string mono;
      for (size_t i = 0; i < e.size(); ++i) {
        if (e[i] == 0) continue;
        if (!mono.empty()) mono += "*";
        mono += (*vars_)[i];
        if (e[i] != 1) mono += "^" + std::to_string(e[i]);
      }
      std::string cs = c.to_string();
      bool composite = cs.find(" + ") != std::string::npos ||
                       cs.find('+') != std::string::npos ||
                       cs.find('-', 1) != std::string::npos;
      if (mono.empty()) {
        s += composite ? "(" + cs + ")" : cs;
      } else if (c.is_zero()) {
        continue;
      } else if (cs == "1") {
        s += mono;
      } else {
        s += (composite ? "(" + cs + ")" : cs) + "*" + mono;
      }
      first = false;
    }
    return s;
  }

 private:
  void check_same(const MultiPoly& o) const {
    if (vars_ == o.vars_) return;
    if (vars_ && o.vars_ && *vars_ == *o.vars_) return;
    throw StructuralError("variable set mismatch");
  }

  VarsPtr vars_;
  std::map<std::vector<int>, HPoly> terms_;
};

}  // namespace nsym
