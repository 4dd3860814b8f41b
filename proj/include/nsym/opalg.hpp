#pragma once

#include <map>
#include <string>
#include <vector>

#include "nsym/frame.hpp"
#include "nsym/hpoly.hpp"

namespace nsym::opalg {

// Generator of the operator algebra. Normal form puts X's first, then P's,
// then I's, each block sorted by index.
struct OpGen {
  enum Kind { X = 0, P = 1, I = 2 };
  Kind kind = X;
  int index = 1;
  friend auto operator<=>(const OpGen&, const OpGen&) = default;
};

using Word = std::vector<OpGen>;

// Linear combination of normal-ordered words with HPoly coefficients.
class OpPoly {
 public:
  OpPoly() = default;

  static OpPoly unit(HPoly c = HPoly(1)) {
    OpPoly p;
    p.add(Word{}, std::move(c));
    return p;
  }

  bool is_zero() const { return terms_.empty(); }
  const std::map<Word, HPoly>& terms() const { return terms_; }

  void add(Word w, const HPoly& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(std::move(w), c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  OpPoly operator-() const {
    OpPoly r;
    for (const auto& [w, c] : terms_) r.terms_[w] = -c;
    return r;
  }
  friend OpPoly operator+(const OpPoly& a, const OpPoly& b) {
    OpPoly r = a;
    for (const auto& [w, c] : b.terms_) r.add(w, c);
    return r;
  }
  friend OpPoly operator-(const OpPoly& a, const OpPoly& b) { return a + (-b); }
  OpPoly& operator+=(const OpPoly& o) { return *this = *this + o; }
  OpPoly& operator-=(const OpPoly& o) { return *this = *this - o; }

  OpPoly scaled(const HPoly& s) const {
    OpPoly r;
    for (const auto& [w, c] : terms_) r.add(w, c * s);
    return r;
  }

  friend bool operator==(const OpPoly& a, const OpPoly& b) { return a.terms_ == b.terms_; }
  friend bool operator!=(const OpPoly& a, const OpPoly& b) { return !(a == b); }

  std::string to_string() const;

 private:
  std::map<Word, HPoly> terms_;
};

// The rewrite engine. In the frame-bundle algebra each index carries its own
// central idempotent identity I_a and P_a X^a -> X^a P_a - i hbar I_a. The
// cotangent-bundle variant has a single true unit: P X -> X P - i hbar.
class OpAlgebra {
 public:
  explicit OpAlgebra(bool identity_is_unit = false) : identity_is_unit_(identity_is_unit) {}

  bool identity_is_unit() const { return identity_is_unit_; }

  OpPoly term(Word w, HPoly c = HPoly(1)) const;
  OpPoly mul(const OpPoly& a, const OpPoly& b) const;
  OpPoly commutator(const OpPoly& a, const OpPoly& b) const;

  // Average of products over all permutations of the word.
  OpPoly quantize_sym(const Word& word) const;

  // Alternating quantization, evaluated level by level through commutators
  // of shorter words: Q(f ^ g) = (1/2)[Q(f), Q(g)] and
  // Q(f_1 ^ ... ^ f_k) = (1/k) sum_m (-1)^{m-1} (1/2)[Q(f_m), Q(rest)].
  // At length <= 2 this coincides with the flat signed permutation average;
  // at length 3 the inner quadratics are central, so every word maps to zero.
  OpPoly quantize_antisym(const Word& word) const;

  // The flat signed permutation average, kept for comparison; differs from
  // quantize_antisym at length >= 3 on words with coinciding indices.
  OpPoly antisym_flat_average(const Word& word) const;

 private:
  void reduce(std::vector<OpGen> core, std::vector<int> ids, HPoly coeff, OpPoly& out) const;

  bool identity_is_unit_;
};

struct GvhReport {
  OpPoly grouping_split;    // (1/2)(Q(p^2)Q(q^2) + Q(q^2)Q(p^2))
  OpPoly grouping_product;  // (1/4)(Q(p)Q(q) + Q(q)Q(p))^2
  OpPoly difference;
};

// The quartic obstruction on the cotangent bundle of R.
GvhReport gvh_demo();

// Quantizes an allowable observable through its generator-word decomposition.
OpPoly quantize_observable(const OpAlgebra& alg, const frame::FrameObservable& f);

Word word_from_atoms(const frame::GenWord& atoms);

struct DiracReport {
  bool holds = false;
  OpPoly commutator;
  OpPoly expected;  // -i hbar Q({f,g})
  OpPoly residual;  // commutator - expected
};

DiracReport dirac_check(const OpAlgebra& alg, const frame::FrameObservable& f,
                        const frame::FrameObservable& g);

}  // namespace nsym::opalg
