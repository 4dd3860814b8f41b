#pragma once

#include <map>
#include <string>

#include "nsym/hpoly.hpp"

namespace nsym {

// Finite Fourier sum sum_m c_m e^{i m phi}. A real trig polynomial
// satisfies c_{-m} = conj(c_m) for every mode m.
class TrigPoly {
 public:
  TrigPoly() = default;
  explicit TrigPoly(HPoly c) { set(0, std::move(c)); }

  static TrigPoly mode(int m, HPoly c = HPoly(1)) {
    TrigPoly t;
    t.set(m, std::move(c));
    return t;
  }
  static TrigPoly cos(int m = 1) {
    TrigPoly t;
    t.set(m, HPoly(Rational(1, 2)));
    t.set(-m, HPoly(Rational(1, 2)));
    return t;
  }
  static TrigPoly sin(int m = 1) {
    TrigPoly t;
    t.set(m, HPoly(GaussianRational(Rational(0), Rational(-1, 2))));
    t.set(-m, HPoly(GaussianRational(Rational(0), Rational(1, 2))));
    return t;
  }

  bool is_zero() const { return modes_.empty(); }
  const std::map<int, HPoly>& modes() const { return modes_; }

  HPoly coeff(int m) const {
    auto it = modes_.find(m);
    return it == modes_.end() ? HPoly() : it->second;
  }

  void set(int m, HPoly c) {
    if (c.is_zero())
      modes_.erase(m);
    else
      modes_[m] = std::move(c);
  }

  bool is_real() const {
    for (const auto& [m, c] : modes_)
      if (coeff(-m) != c.conj()) return false;
    return true;
  }

  TrigPoly conj() const {
    TrigPoly r;
    for (const auto& [m, c] : modes_) r.modes_[-m] = c.conj();
    return r;
  }

  // d/dphi: mode m picks up a factor i*m.
  TrigPoly diff() const {
    TrigPoly r;
    for (const auto& [m, c] : modes_) {
      if (m == 0) continue;
      r.modes_[m] = c * HPoly(GaussianRational(Rational(0), Rational(m)));
    }
    return r;
  }

  TrigPoly operator-() const {
    TrigPoly r;
    for (const auto& [m, c] : modes_) r.modes_[m] = -c;
    return r;
  }

  friend TrigPoly operator+(const TrigPoly& a, const TrigPoly& b) {
    TrigPoly r = a;
    for (const auto& [m, c] : b.modes_) r.set(m, r.coeff(m) + c);
    return r;
  }
  friend TrigPoly operator-(const TrigPoly& a, const TrigPoly& b) { return a + (-b); }
  friend TrigPoly operator*(const TrigPoly& a, const TrigPoly& b) {
    TrigPoly r;
    for (const auto& [ma, ca] : a.modes_)
      for (const auto& [mb, cb] : b.modes_) r.set(ma + mb, r.coeff(ma + mb) + ca * cb);
    return r;
  }

  TrigPoly scaled(const HPoly& s) const {
    TrigPoly r;
    for (const auto& [m, c] : modes_) r.set(m, c * s);
    return r;
  }

  TrigPoly& operator+=(const TrigPoly& o) { return *this = *this + o; }
  TrigPoly& operator-=(const TrigPoly& o) { return *this = *this - o; }
  TrigPoly& operator*=(const TrigPoly& o) { return *this = *this * o; }

  friend bool operator==(const TrigPoly& a, const TrigPoly& b) { return a.modes_ == b.modes_; }
  friend bool operator!=(const TrigPoly& a, const TrigPoly& b) { return !(a == b); }

  std::string to_string() const {
    if (modes_.empty()) return "0";
    std::string s;
    bool first = true;
    for (const auto& [m, c] : modes_) {
      if (!first) s += " + ";
      std::string cs = c.to_string();
      bool composite = cs.find(' ') != std::string::npos ||
                       cs.find('+') != std::string::npos ||
                       cs.find('-', 1) != std::string::npos;
      std::string base;
      if (m == 0)
        base = "";
      else if (m == 1)
        base = "e^{i phi}";
      else if (m == -1)
        base = "e^{-i phi}";
      else
        base = "e^{" + std::to_string(m) + "i phi}";
      if (base.empty())
        s += composite ? "(" + cs + ")" : cs;
      else if (cs == "1")
        s += base;
      else
        s += (composite ? "(" + cs + ")" : cs) + "*" + base;
      first = false;
    }
    return s;
  }

 private:
  std::map<int, HPoly> modes_;
};

// Two-angle trig polynomial sum c_{m,k} e^{i m phi} e^{i k alpha}; used for
// symbolic rotation/equivariance identities.
class BiTrig {
 public:
  BiTrig() = default;

  static BiTrig mode(int m, int k, GaussianRational c = GaussianRational(1)) {
    BiTrig t;
    t.set(m, k, c);
    return t;
  }
  static BiTrig cos_phi() { return half_pair(1, 0); }
  static BiTrig sin_phi() { return half_pair_i(1, 0); }
  static BiTrig cos_alpha() { return half_pair(0, 1); }
  static BiTrig sin_alpha() { return half_pair_i(0, 1); }
  // cos(phi+alpha), sin(phi+alpha)
  static BiTrig cos_sum() { return half_pair(1, 1); }
  static BiTrig sin_sum() { return half_pair_i(1, 1); }

  bool is_zero() const { return terms_.empty(); }

  void set(int m, int k, const GaussianRational& c) {
    if (c.is_zero())
      terms_.erase({m, k});
    else
      terms_[{m, k}] = c;
  }
  GaussianRational coeff(int m, int k) const {
    auto it = terms_.find({m, k});
    return it == terms_.end() ? GaussianRational() : it->second;
  }

  BiTrig operator-() const {
    BiTrig r;
    for (const auto& [mk, c] : terms_) r.terms_[mk] = -c;
    return r;
  }
  friend BiTrig operator+(const BiTrig& a, const BiTrig& b) {
    BiTrig r = a;
    for (const auto& [mk, c] : b.terms_) r.set(mk.first, mk.second, r.coeff(mk.first, mk.second) + c);
    return r;
  }
  friend BiTrig operator-(const BiTrig& a, const BiTrig& b) { return a + (-b); }
  friend BiTrig operator*(const BiTrig& a, const BiTrig& b) {
    BiTrig r;
    for (const auto& [ma, ca] : a.terms_)
      for (const auto& [mb, cb] : b.terms_) {
        int m = ma.first + mb.first, k = ma.second + mb.second;
        r.set(m, k, r.coeff(m, k) + ca * cb);
      }
    return r;
  }
  friend bool operator==(const BiTrig& a, const BiTrig& b) { return a.terms_ == b.terms_; }
  friend bool operator!=(const BiTrig& a, const BiTrig& b) { return !(a == b); }

 private:
  static BiTrig half_pair(int m, int k) {
    BiTrig t;
    t.set(m, k, GaussianRational(Rational(1, 2)));
    t.set(-m, -k, GaussianRational(Rational(1, 2)));
    return t;
  }
  static BiTrig half_pair_i(int m, int k) {
    BiTrig t;
    t.set(m, k, GaussianRational(Rational(0), Rational(-1, 2)));
    t.set(-m, -k, GaussianRational(Rational(0), Rational(1, 2)));
    return t;
  }

  std::map<std::pair<int, int>, GaussianRational> terms_;
};

}  // namespace nsym
