#pragma once

#include <random>

#include "nsym/cartan.hpp"
#include "nsym/circle.hpp"
#include "nsym/frame.hpp"
#include "nsym/trigpoly.hpp"

namespace nsym {

// Deterministic generator for property-style checks; same seed, same values.
class Rng {
 public:
  explicit Rng(uint64_t seed) : g_(seed) {}

  int uniform(int lo, int hi) {  // inclusive bounds
    std::uniform_int_distribution<int> d(lo, hi);
    return d(g_);
  }

  Rational rational(int max_abs_num = 3, int max_den = 2) {
    int num = uniform(-max_abs_num, max_abs_num);
    int den = uniform(1, max_den);
    return Rational(num, den);
  }

  GaussianRational gaussian(int max_abs = 3) {
    return GaussianRational(rational(max_abs), rational(max_abs));
  }

  MultiPoly multipoly(const VarsPtr& vars, int max_deg, int nterms) {
    MultiPoly p(vars);
    for (int t = 0; t < nterms; ++t) {
      std::vector<int> e(vars->size(), 0);
      int degree = uniform(0, max_deg);
      for (int d = 0; d < degree; ++d) e[static_cast<size_t>(uniform(0, static_cast<int>(vars->size()) - 1))] += 1;
      p.add_term(std::move(e), HPoly(rational()));
    }
    return p;
  }

  TrigPoly real_trig(int max_mode, int nterms = 3) {
    TrigPoly t;
    for (int k = 0; k < nterms; ++k) {
      int m = uniform(0, max_mode);
      GaussianRational c = m == 0 ? GaussianRational(rational()) : gaussian();
      t.set(m, t.coeff(m) + HPoly(c));
      t.set(-m, t.coeff(-m) + HPoly(c.conj()));
    }
    return t;
  }

  circle::CircleObservable circle_observable(int max_mode) {
    return {real_trig(max_mode), real_trig(max_mode), real_trig(max_mode)};
  }

  PolyField poly_field(const VarsPtr& vars, int dim, int max_deg, int nterms) {
    std::vector<MultiPoly> comps;
    for (int a = 0; a < dim; ++a) comps.push_back(multipoly(vars, max_deg, nterms));
    return PolyField(dim, std::move(comps));
  }

  PolyForm poly_form(const VarsPtr& vars, int dim, int degree, int max_deg, int nterms) {
    PolyForm w(dim, degree);
    auto tuples = frame::increasing_tuples(dim, degree);
    for (int t = 0; t < nterms; ++t) {
      auto idx = tuples[static_cast<size_t>(uniform(0, static_cast<int>(tuples.size()) - 1))];
      for (auto& i : idx) --i;  // 0-based form indices
      w.add_term(idx, multipoly(vars, max_deg, 2));
    }
    return w;
  }

  // Random allowable observable: a q-polynomial combination of symmetric
  // products of pi-hat and I-hat generators (q-hat lives inside the
  // coefficients as q^i I-hat patterns).
  frame::FrameObservable allowable(const frame::FrameSpace& sp, int rank, int qdeg,
                                   int nterms) {
    frame::FrameObservable out(sp, rank, frame::Symmetry::Sym);
    for (int t = 0; t < nterms; ++t) {
      frame::GenWord w;
      for (int s = 0; s < rank; ++s) {
        bool pi = uniform(0, 1) == 1;
        w.push_back({pi ? frame::GenAtom::Pi : frame::GenAtom::Id, uniform(1, sp.n)});
      }
      std::sort(w.begin(), w.end());
      MultiPoly coeff(sp.vars);
      std::vector<int> e(sp.vars->size(), 0);
      int degree = uniform(0, qdeg);
      for (int d = 0; d < degree; ++d) e[static_cast<size_t>(uniform(0, sp.n - 1))] += 1;
      coeff.add_term(std::move(e), HPoly(rational()));
      out = out + frame::word_observable(sp, w).scaled(coeff);
    }
    return out;
  }

  // Kernel element of the structure equation: a pi-part whose total
  // symmetrization over the first p indices vanishes; valid shift of any
  // canonical Hamiltonian field representative of rank p >= 2.
  std::map<std::vector<int>, MultiPoly> kernel_pi_shift(const frame::FrameSpace& sp, int p,
                                                        int qdeg) {
    // Raw tensor R^{I,a}_b, symmetric in I only.
    std::map<std::vector<int>, MultiPoly> raw;
    for (auto& I : frame::multisets(sp.n, p - 1))
      for (int a = 1; a <= sp.n; ++a)
        for (int b = 1; b <= sp.n; ++b) {
          std::vector<int> key = I;
          key.push_back(a);
          key.push_back(b);
          raw[key] = multipoly(sp.vars, qdeg, 1);
        }
    auto raw_at = [&](std::vector<int> I, int a, int b) {
      std::sort(I.begin(), I.end());
      I.push_back(a);
      I.push_back(b);
      return raw.at(I);
    };
    std::map<std::vector<int>, MultiPoly> shift;
    for (auto& I : frame::multisets(sp.n, p - 1))
      for (int a = 1; a <= sp.n; ++a)
        for (int b = 1; b <= sp.n; ++b) {
          std::vector<int> T = I;
          T.push_back(a);
          std::sort(T.begin(), T.end());
          MultiPoly sym(sp.vars);
          for (size_t k = 0; k < T.size(); ++k) {
            std::vector<int> J;
            for (size_t i = 0; i < T.size(); ++i)
              if (i != k) J.push_back(T[i]);
            sym += raw_at(J, T[k], b);
          }
          sym = sym.scaled(HPoly(Rational(1, p)));
          std::vector<int> key = I;
          key.push_back(a);
          key.push_back(b);
          shift[key] = raw_at(I, a, b) - sym;
        }
    return shift;
  }

 private:
  std::mt19937_64 g_;
};

}  // namespace nsym
