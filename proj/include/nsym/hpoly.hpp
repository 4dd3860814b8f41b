#pragma once

#include <map>
#include <string>

#include "nsym/gaussian.hpp"

namespace nsym {

// Polynomial in the formal central symbol hbar, with Gaussian rational
// coefficients. This is the universal scalar of the engine: every other
// structure carries HPoly coefficients so that operator identities stay
// polynomial identities in hbar.
class HPoly {
 public:
  HPoly() = default;
  HPoly(GaussianRational c) { set(0, c); }  // NOLINT: implicit by design
  HPoly(Rational c) { set(0, GaussianRational(c)); }  // NOLINT
  HPoly(long long c) { set(0, GaussianRational(Rational(c))); }  // NOLINT

  static HPoly hbar(int degree = 1, GaussianRational c = GaussianRational(1)) {
    HPoly p;
    p.set(degree, c);
    return p;
  }
  static HPoly i() { return HPoly(GaussianRational::i()); }

  bool is_zero() const { return coeffs_.empty(); }
  bool is_constant() const {
    return coeffs_.empty() || (coeffs_.size() == 1 && coeffs_.begin()->first == 0);
  }
  int degree() const { return coeffs_.empty() ? -1 : coeffs_.rbegin()->first; }

  GaussianRational coeff(int k) const {
    auto it = coeffs_.find(k);
    return it == coeffs_.end() ? GaussianRational() : it->second;
  }
  GaussianRational constant() const { return coeff(0); }

  void set(int k, const GaussianRational& c) {
    if (c.is_zero())
      coeffs_.erase(k);
    else
      coeffs_[k] = c;
  }

  HPoly conj() const {  // hbar is real
    HPoly r;
    for (const auto& [k, c] : coeffs_) r.coeffs_[k] = c.conj();
    return r;
  }

  HPoly operator-() const {
    HPoly r;
    for (const auto& [k, c] : coeffs_) r.coeffs_[k] = -c;
    return r;
  }

  friend HPoly operator+(const HPoly& a, const HPoly& b) {
    HPoly r = a;
    for (const auto& [k, c] : b.coeffs_) r.set(k, r.coeff(k) + c);
    return r;
  }
  friend HPoly operator-(const HPoly& a, const HPoly& b) { return a + (-b); }
  friend HPoly operator*(const HPoly& a, const HPoly& b) {
    HPoly r;
    for (const auto& [ka, ca] : a.coeffs_)
      for (const auto& [kb, cb] : b.coeffs_) r.set(ka + kb, r.coeff(ka + kb) + ca * cb);
    return r;
  }

  HPoly& operator+=(const HPoly& o) { return *this = *this + o; }
  HPoly& operator-=(const HPoly& o) { return *this = *this - o; }
  HPoly& operator*=(const HPoly& o) { return *this = *this * o; }

  // Division by a nonzero scalar (hbar-degree-zero) value.
  friend HPoly operator/(const HPoly& a, const GaussianRational& s) {
    HPoly r;
    for (const auto& [k, c] : a.coeffs_) r.coeffs_[k] = c / s;
    return r;
  }

  friend bool operator==(const HPoly& a, const HPoly& b) { return a.coeffs_ == b.coeffs_; }
  friend bool operator!=(const HPoly& a, const HPoly& b) { return !(a == b); }
  friend bool operator<(const HPoly& a, const HPoly& b) { return a.coeffs_ < b.coeffs_; }

  const std::map<int, GaussianRational>& coeffs() const { return coeffs_; }

  std::string to_string() const {
    if (coeffs_.empty()) return "0";
    std::string s;
    bool first = true;
    for (const auto& [k, c] : coeffs_) {
      std::string cs = c.to_string();
      bool composite = cs.find('+') != std::string::npos ||
                       cs.find('-', 1) != std::string::npos;
      if (!first) s += " + ";
      if (k == 0) {
        s += cs;
      } else {
        std::string h = (k == 1) ? "hbar" : "hbar^" + std::to_string(k);
        if (c.is_one())
          s += h;
        else if (composite)
          s += "(" + cs + ")*" + h;
        else
          s += cs + "*" + h;
      }
      first = false;
    }
    return s;
  }

 private:
  std::map<int, GaussianRational> coeffs_;  // hbar degree -> coefficient
};

}  // namespace nsym
