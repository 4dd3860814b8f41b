#include "nsym/verify.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <map>
#include <sstream>

#include "nsym/csphere.hpp"
#include "nsym/opalg.hpp"
#include "nsym/random_gen.hpp"

namespace nsym::verify {

namespace {

using namespace nsym::frame;
using namespace nsym::opalg;
using nsym::circle::CircleObservable;

HPoly mih() { return HPoly::hbar(1, GaussianRational(Rational(0), Rational(-1))); }

struct Tally {
  int checked = 0;
  int failed = 0;
  std::ostringstream log;

  void require(bool ok, const std::string& what) {
    ++checked;
    if (!ok) {
      ++failed;
      if (log.tellp() < 512) log << (failed > 1 ? "; " : "") << what;
    }
  }
  bool pass() const { return failed == 0; }
};

// ---------------------------------------------------------------- 1: gvh

CheckResult c1_gvh(const VerifyOptions&) {
  CheckResult r{"gvh gap", false, "", {}, 0, 1.0};
  Tally t;
  GvhReport g = gvh_demo();

  OpPoly first;
  first.add({{OpGen::X, 1}, {OpGen::X, 1}, {OpGen::P, 1}, {OpGen::P, 1}}, HPoly(1));
  first.add({{OpGen::X, 1}, {OpGen::P, 1}},
            HPoly::hbar(1, GaussianRational(Rational(0), Rational(-2))));
  first.add({}, HPoly::hbar(2, GaussianRational(Rational(-1))));
  t.require(g.grouping_split == first, "split grouping normal form");

  OpPoly second = first;
  second.add({}, HPoly::hbar(2, GaussianRational(Rational(3, 4))));  // -1 + 3/4 = -1/4
  t.require(g.grouping_product == second, "product grouping normal form");

  t.require(g.difference == OpPoly::unit(HPoly::hbar(2, GaussianRational(Rational(-3, 4)))),
            "difference -3/4 hbar^2");
  r.pass = t.pass();
  r.details = "both displayed normal forms and the -3/4 hbar^2 gap, exact";
  return r;
}

// ------------------------------------------------------------ 2: quartic

CheckResult c2_quartic(const VerifyOptions&) {
  CheckResult r{"quartic quantization", false, "", {}, 0, 1.0};
  Tally t;
  OpAlgebra alg;

  // Independent 24-permutation oracle in the Schroedinger realization on
  // polynomial states: kappa is the coefficient read off the constant state.
  using State = std::map<int, HPoly>;
  auto act = [&](const Word& w, State s) {
    for (auto it = w.rbegin(); it != w.rend(); ++it) {
      State out;
      for (const auto& [deg, c] : s) {
        auto add = [&](int d, const HPoly& v) {
          auto [e, inserted] = out.try_emplace(d, v);
          if (!inserted) {
            e->second += v;
            if (e->second.is_zero()) out.erase(e);
          }
        };
        if (it->kind == OpGen::X)
          add(deg + 1, c);
        else if (it->kind == OpGen::P) {
          if (deg > 0) add(deg - 1, c * mih() * HPoly(deg));
        } else {
          add(deg, c);
        }
      }
      s = std::move(out);
    }
    return s;
  };

  Word base = {{OpGen::X, 1}, {OpGen::X, 1}, {OpGen::P, 1}, {OpGen::P, 1}};
  std::vector<int> idx = {0, 1, 2, 3};
  State acc;
  int count = 0;
  do {
    Word arranged;
    for (int i : idx) arranged.push_back(base[static_cast<size_t>(i)]);
    State s = act(arranged, State{{0, HPoly(1)}});
    for (const auto& [d, c] : s) {
      auto [e, inserted] = acc.try_emplace(d, c);
      if (!inserted) e->second += c;
    }
    ++count;
  } while (std::next_permutation(idx.begin(), idx.end()));
  HPoly kappa_h2;
  for (auto& [d, c] : acc)
    if (d == 0) kappa_h2 = c * HPoly(Rational(1, count));
  t.require(count == 24, "24 orderings enumerated");
  t.require(kappa_h2 == HPoly::hbar(2, GaussianRational(Rational(-1, 2))),
            "oracle kappa = -1/2");

  OpPoly quart = alg.quantize_sym({{OpGen::P, 1}, {OpGen::P, 1}, {OpGen::X, 1}, {OpGen::X, 1}});
  OpPoly expect;
  expect.add({{OpGen::X, 1}, {OpGen::X, 1}, {OpGen::P, 1}, {OpGen::P, 1}}, HPoly(1));
  expect.add({{OpGen::X, 1}, {OpGen::P, 1}, {OpGen::I, 1}},
             HPoly::hbar(1, GaussianRational(Rational(0), Rational(-2))));
  expect.add({{OpGen::I, 1}}, HPoly::hbar(2, GaussianRational(Rational(-1, 2))));
  t.require(quart == expect, "engine normal form X^2P^2 - 2i hbar XP I - 1/2 hbar^2 I");

  r.pass = t.pass();
  r.details = "kappa pinned by the 24-permutation oracle: kappa = -1/2";
  r.notes.push_back(
      "the published table quotes -1/3 for the hbar^2 coefficient; the permutation average "
      "gives -1/2 exactly, so the oracle value is shipped and the difference flagged");
  return r;
}

// ----------------------------------------------------------- 3: grouping

CheckResult c3_grouping(const VerifyOptions&) {
  CheckResult r{"grouping independence", false, "", {}, 0, 10.0};
  Tally t;
  OpAlgebra alg;
  FrameSpace sp(2);
  FrameObservable pi1 = generator(sp, GenKind::PiHat, 1);
  FrameObservable q1 = generator(sp, GenKind::QHat, 1);

  // all full binary grouping trees over the word, as classical products
  std::function<std::vector<FrameObservable>(const std::vector<FrameObservable>&, int, int)>
      trees = [&](const std::vector<FrameObservable>& leaves, int lo, int hi) {
        std::vector<FrameObservable> out;
        if (hi - lo == 1) {
          out.push_back(leaves[static_cast<size_t>(lo)]);
          return out;
        }
        for (int mid = lo + 1; mid < hi; ++mid)
          for (const auto& l : trees(leaves, lo, mid))
            for (const auto& rr : trees(leaves, mid, hi)) out.push_back(sym_product(l, rr));
        return out;
      };

  int words = 0, groupings = 0;
  for (int len = 1; len <= 5; ++len)
    for (int npi = 0; npi <= len; ++npi) {
      std::vector<FrameObservable> leaves;
      Word flat;
      for (int s = 0; s < len; ++s) {
        bool is_pi = s < npi;
        leaves.push_back(is_pi ? pi1 : q1);
        flat.push_back(is_pi ? OpGen{OpGen::P, 1} : OpGen{OpGen::X, 1});
      }
      OpPoly direct = alg.quantize_sym(flat);
      ++words;
      for (const auto& grouped : trees(leaves, 0, len)) {
        OpPoly via = quantize_observable(alg, grouped);
        ++groupings;
        t.require(via == direct, "grouping of length-" + std::to_string(len) + " word");
      }
    }
  r.pass = t.pass();
  r.details = std::to_string(words) + " words, " + std::to_string(groupings) +
              " groupings, all normal forms identical";
  return r;
}

// ------------------------------------------------------------ 4: antisym

CheckResult c4_antisym(const VerifyOptions&) {
  CheckResult r{"antisymmetric table", false, "", {}, 0, 1.0};
  Tally t;
  OpAlgebra alg;
  int n = 2;

  auto P = [&](int a) { return OpGen{OpGen::P, a}; };
  auto X = [&](int a) { return OpGen{OpGen::X, a}; };
  auto Id = [&](int a) { return OpGen{OpGen::I, a}; };

  for (int a = 1; a <= n; ++a)
    for (int b = 1; b <= n; ++b) {
      t.require(alg.quantize_antisym({P(a), P(b)}).is_zero(), "Q(pi^pi)");
      t.require(alg.quantize_antisym({X(a), X(b)}).is_zero(), "Q(q^q)");
      t.require(alg.quantize_antisym({P(a), Id(b)}).is_zero(), "Q(pi^I)");
      t.require(alg.quantize_antisym({X(a), Id(b)}).is_zero(), "Q(q^I)");
    }

  // Q(pi_c ^ q^d) = lambda delta^d_c Q(I_d) with oracle lambda = -i hbar / 2
  for (int c = 1; c <= n; ++c)
    for (int d = 1; d <= n; ++d) {
      OpPoly got = alg.quantize_antisym({P(c), X(d)});
      if (c == d) {
        OpPoly expect;
        expect.add({Id(d)}, HPoly::hbar(1, GaussianRational(Rational(0), Rational(-1, 2))));
        t.require(got == expect, "Q(pi_c ^ q^c)");
      } else {
        t.require(got.is_zero(), "Q(pi_c ^ q^d), c != d");
      }
    }

  // every length-3 word vanishes under the level-by-level evaluation
  std::vector<OpGen> pool;
  for (int a = 1; a <= n; ++a) {
    pool.push_back(P(a));
    pool.push_back(X(a));
    pool.push_back(Id(a));
  }
  int cubics = 0, flat_nonzero = 0;
  for (const auto& ga : pool)
    for (const auto& gb : pool)
      for (const auto& gc : pool) {
        t.require(alg.quantize_antisym({ga, gb, gc}).is_zero(), "cubic word");
        if (!alg.antisym_flat_average({ga, gb, gc}).is_zero()) ++flat_nonzero;
        ++cubics;
      }

  r.pass = t.pass();
  r.details = "quadratic table exact; all " + std::to_string(cubics) +
              " cubic words quantize to zero";
  r.notes.push_back(
      "the published quadratic constant is 1/2 delta Q(I); the commutator evaluation gives "
      "-(i hbar/2) delta Q(I), recorded as a convention difference");
  r.notes.push_back(
      "cubic vanishing follows the level-by-level evaluation the quadratic table feeds; the "
      "flat signed permutation average instead leaves " +
      std::to_string(flat_nonzero) +
      " of the index-coinciding cubic words nonzero and is reported for comparison");
  return r;
}

// ------------------------------------------------------- 5: frame axioms

CheckResult c5_frame_axioms(const VerifyOptions& opt) {
  CheckResult r{"frame bracket axioms", false, "", {}, 0, 60.0};
  Tally t;
  Rng rng(opt.seed);
  int observables = 0;

  auto draw = [&](FrameSpace& sp, int max_rank) {
    ++observables;
    return rng.allowable(sp, rng.uniform(1, max_rank), 2, 2);
  };

  for (int n = 2; n <= 3; ++n) {
    FrameSpace sp(n);
    int pairs = opt.trials > 0 ? opt.trials : (n == 2 ? 20 : 10);
    for (int k = 0; k < pairs; ++k) {
      FrameObservable f = draw(sp, 3);
      FrameObservable g = draw(sp, n == 2 ? 3 : 2);
      t.require(poisson_bracket(f, g) == -poisson_bracket(g, f), "antisymmetry");
      FrameObservable br = poisson_bracket(f, g);
      t.require(br.rank() == f.rank() + g.rank() - 1, "grading");
      t.require(is_allowable(br).allowable, "bracket allowable");
    }
    int triples = opt.trials > 0 ? std::max(1, opt.trials / 2) : (n == 2 ? 10 : 5);
    for (int k = 0; k < triples; ++k) {
      FrameObservable f = draw(sp, 2);
      FrameObservable g = draw(sp, 2);
      FrameObservable h = draw(sp, 2);
      FrameObservable lhs = poisson_bracket(sym_product(f, g), h);
      FrameObservable rhs =
          sym_product(f, poisson_bracket(g, h)) + sym_product(poisson_bracket(f, h), g);
      t.require(lhs == rhs, "Leibniz");
      FrameObservable jac = poisson_bracket(f, poisson_bracket(g, h)) +
                            poisson_bracket(g, poisson_bracket(h, f)) +
                            poisson_bracket(h, poisson_bracket(f, g));
      t.require(jac.is_zero(), "Jacobi");
    }
  }

  // one heavier Jacobi triple with a rank-3 entry
  {
    FrameSpace sp(2);
    FrameObservable f = rng.allowable(sp, 3, 1, 2);
    FrameObservable g = rng.allowable(sp, 2, 1, 2);
    FrameObservable h = rng.allowable(sp, 1, 2, 2);
    observables += 3;
    FrameObservable jac = poisson_bracket(f, poisson_bracket(g, h)) +
                          poisson_bracket(g, poisson_bracket(h, f)) +
                          poisson_bracket(h, poisson_bracket(f, g));
    t.require(jac.is_zero(), "rank-3 Jacobi");
  }

  // representative independence under kernel shifts of the pi-part
  for (int k = 0; k < 10; ++k) {
    FrameSpace sp(2);
    FrameObservable f = rng.allowable(sp, rng.uniform(2, 3), 2, 2);
    FrameObservable g = rng.allowable(sp, rng.uniform(1, 2), 2, 2);
    observables += 2;
    HamiltonianField X = hamiltonian_field(f);
    FrameObservable base = poisson_bracket_with_field(X, f.rank(), g);
    auto shift = rng.kernel_pi_shift(sp, f.rank(), 2);
    HamiltonianField moved = X;
    for (auto& [key, val] : shift) moved.pi_part[key] += val;
    t.require(base == poisson_bracket_with_field(moved, f.rank(), g),
              "representative independence");
  }

  // the >= 100 observable floor applies in the default configuration;
  // an explicit --trials override draws whatever was asked for
  r.pass = t.pass() && (opt.trials > 0 || observables >= 100);
  r.details = std::to_string(observables) + " randomized allowable observables, " +
              std::to_string(t.checked) + " identities";
  return r;
}

// ------------------------------------------------------------- 6: tables

CheckResult c6_tables(const VerifyOptions&) {
  CheckResult r{"generator tables", false, "", {}, 0, 1.0};
  Tally t;
  for (int n = 2; n <= 3; ++n) {
    FrameSpace sp(n);
    for (int j = 1; j <= n; ++j)
      for (int k = 1; k <= n; ++k) {
        FrameObservable br =
            poisson_bracket(generator(sp, GenKind::PiHat, j), generator(sp, GenKind::QHat, k));
        FrameObservable expect =
            j == k ? generator(sp, GenKind::IHat, k) : FrameObservable(sp, 1, Symmetry::Sym);
        t.require(br == expect, "{pi_j, q^k}");
        for (int l = 1; l <= n; ++l) {
          FrameObservable br2 = poisson_bracket(generator(sp, GenKind::PiHat, k),
                                                generator(sp, GenKind::QHatFull, j, l));
          FrameObservable expect2 =
              j == k ? generator(sp, GenKind::IHat, l) : FrameObservable(sp, 1, Symmetry::Sym);
          t.require(br2 == expect2, "{pi_k, q^i_j}");
        }
      }
  }
  r.pass = t.pass();
  r.details = "exhaustive over n in {2,3}: " + std::to_string(t.checked) + " brackets";
  return r;
}

// --------------------------------------------------------- 7: projection

CheckResult c7_projection(const VerifyOptions&) {
  CheckResult r{"cotangent projection", false, "", {}, 0, 1.0};
  Tally t;
  FrameSpace sp(2);
  CotangentSpace cs(2);

  for (int j = 1; j <= 2; ++j)
    t.require(project_to_cotangent(cs, generator(sp, GenKind::PiHat, j)) == cs.p(j),
              "pi_j -> p_j");

  FrameObservable pp =
      sym_product(generator(sp, GenKind::PiHat, 1), generator(sp, GenKind::PiHat, 2))
          .scaled(sp.q(1) * sp.q(2));
  t.require(project_to_cotangent(cs, pp) == cs.q(1) * cs.q(2) * cs.p(1) * cs.p(2),
            "f pi pi -> f p p");

  FrameObservable pi_id =
      sym_product(generator(sp, GenKind::PiHat, 1), generator(sp, GenKind::IHat, 2))
          .scaled(sp.q(1));
  t.require(project_to_cotangent(cs, pi_id) == cs.q(1) * cs.p(1) * cs.alpha(2),
            "f pi I -> f p alpha");

  for (int n = 1; n <= 5; ++n) {
    MultiPoly pn = cs.p(1).pow(n);
    t.require(cotangent_bracket(cs, pn, cs.p(1) * cs.q(1)) == pn.scaled(HPoly(n)),
              "{p^n, pq} = n p^n");
  }
  r.pass = t.pass();
  r.details = "projection map and canonical bracket relations, exact";
  return r;
}

// ------------------------------------------------------------- 8: circle

CheckResult c8_circle(const VerifyOptions& opt) {
  CheckResult r{"circle E(2) and Dirac", false, "", {}, 0, 30.0};
  Tally t;
  Rng rng(opt.seed + 1);
  auto g = circle::generators();

  t.require(circle::bracket(g.x, g.y).is_zero(), "{x,y} = 0");
  t.require(circle::bracket(g.x, g.p) == g.y, "{x,p} = y");
  t.require(circle::bracket(g.y, g.p) == -g.x, "{y,p} = -x");

  int closure_trials = opt.trials > 0 ? opt.trials : 30;
  for (int k = 0; k < closure_trials; ++k) {
    CircleObservable f = rng.circle_observable(4);
    CircleObservable h = rng.circle_observable(4);
    CircleObservable br = circle::bracket(f, h);  // closure certified by decomposition
    t.require(circle::bracket(h, f) == -br, "bracket antisymmetry");
  }

  std::vector<CircleObservable> gens = {g.x, g.y, g.p};
  for (const auto& a : gens)
    for (const auto& b : gens)
      t.require(circle::dirac_check_circle(a, b).holds, "generator Dirac pair");
  int dirac_trials = opt.trials > 0 ? std::max(50, opt.trials) : 50;
  for (int k = 0; k < dirac_trials; ++k) {
    CircleObservable f = rng.circle_observable(4);
    CircleObservable h = rng.circle_observable(4);
    t.require(circle::dirac_check_circle(f, h).holds, "random Dirac pair");
  }

  for (int k = 0; k < 20; ++k) {
    CircleObservable f = rng.circle_observable(4);
    auto [f1, f2] = f.components();
    auto sol = circle::solve_structure(f1, f2);
    t.require(sol.accepted && sol.observable == f, "family member accepted");
    // w^2 perturbation of the first component leaves the family
    circle::CircleFunc w2 = circle::CircleFunc::w() * circle::CircleFunc::w();
    circle::CircleFunc pert = f1 + (w2 + w2.conj()).scaled(HPoly(Rational(1, 2)));
    t.require(!circle::solve_structure(pert, f2).accepted, "w^2 perturbation rejected");
  }

  r.pass = t.pass();
  r.details = "E(2) table, closure, Dirac (generators + 50 random pairs), solver gate";
  return r;
}

// ------------------------------------------- 9: contact and equivariance

CheckResult c9_contact(const VerifyOptions&) {
  CheckResult r{"contact forms and equivariance", false, "", {}, 0, 1.0};
  Tally t;
  auto thetas = circle::reduced_potential();
  for (int i = 0; i < 2; ++i) {
    auto vol = wedge(thetas[static_cast<size_t>(i)], ext_d(thetas[static_cast<size_t>(i)]));
    t.require(!vol.is_zero(), "theta^i ^ d theta^i nonzero");
  }

  BiTrig c = BiTrig::cos_phi(), s = BiTrig::sin_phi();
  BiTrig ca = BiTrig::cos_alpha(), sa = BiTrig::sin_alpha();
  BiTrig theta[2][2] = {{c, s}, {-s, c}};
  BiTrig shifted[2][2] = {{BiTrig::cos_sum(), BiTrig::sin_sum()},
                          {-BiTrig::sin_sum(), BiTrig::cos_sum()}};
  BiTrig R[2][2] = {{ca, sa}, {-sa, ca}};
  for (int i = 0; i < 2; ++i)
    for (int col = 0; col < 2; ++col)
      t.require(shifted[i][col] == R[i][0] * theta[0][col] + R[i][1] * theta[1][col],
                "rotation equivariance");

  r.pass = t.pass();
  r.details = "both components contact; phi-shift equals the rotation action symbolically";
  return r;
}

// -------------------------------------------------------------- 10: jform

CheckResult c10_jform(const VerifyOptions& opt) {
  CheckResult r{"omega_J kernel", false, "", {}, 0, 30.0};
  Tally t;
  for (auto [mm, qq] : {std::pair<int, int>{4, 4}, {6, opt.max_qdeg}}) {
    auto k = circle::jform_kernel(mm, qq);
    int b_only = 0;
    for (const auto& [f1, f2] : k.basis) {
      bool constant = true;
      for (const auto& [key, c] : f1.terms())
        if (key.mode != 0 || key.wdeg != 0 || key.wbardeg != 0) constant = false;
      for (const auto& [key, c] : f2.terms())
        if (key.mode != 0 || key.wdeg != 0 || key.wbardeg != 0) constant = false;
      t.require(constant, "kernel element is constant");
      if (f1.is_zero() && !f2.is_zero()) ++b_only;
    }
    t.require(b_only == 1, "exactly the constant B beyond the constant first component");
    t.require(k.basis.size() == 2, "kernel = the two constants");
  }
  r.pass = t.pass();
  r.details = "bounds (4,4) and (6,4): no mode or coordinate dependence survives";
  r.notes.push_back(
      "the solution space splits as {constant first component} + {constant B}; the text "
      "counts only the constant function B, and the engine finds the full constant pair "
      "(dimension 2) with nothing beyond it");
  return r;
}

// ---------------------------------------------------- 11: c2 equivalence

CheckResult c11_c2(const VerifyOptions& opt) {
  CheckResult r{"C^2 equivalence", false, "", {}, 0, 30.0};
  Tally t;
  Rng rng(opt.seed + 2);

  auto basis = csphere::c2_family_kernel(3);
  t.require(basis.size() == 20, "split family dimension 20 at degree <= 3");
  for (const auto& [f1, f2] : basis) {
    MultiPoly F = f1 + f2.scaled(HPoly::i());
    t.require((F.diff(0) + F.diff(1).scaled(HPoly::i())).is_zero(), "dzbar F = 0");
    t.require((F.diff(2) + F.diff(3).scaled(HPoly::i())).is_zero(), "dwbar F = 0");
  }

  auto random_holo = [&](int max_deg) {
    csphere::HoloPoly f(csphere::holo_vars());
    for (int k = 0; k < 4; ++k) {
      int a = rng.uniform(0, max_deg);
      int b = rng.uniform(0, max_deg - a);
      f += (csphere::hz().pow(a) * csphere::hw().pow(b)).scaled(HPoly(rng.gaussian()));
    }
    return f;
  };
  for (int k = 0; k < 10; ++k) {
    auto f = random_holo(3), g = random_holo(3);
    auto [f1, f2] = csphere::split_to_vector(f);
    auto [g1, g2] = csphere::split_to_vector(g);
    auto X = csphere::c2_pair_hamiltonian_field(f1, f2);
    t.require(X.has_value(), "split pair is Hamiltonian");
    if (!X) continue;
    auto [e1, e2] = csphere::split_to_vector(csphere::holo_bracket(f, g));
    t.require(X->apply(g1) == e1 && X->apply(g2) == e2,
              "induced bracket equals holo_bracket under splitting");
  }
  r.pass = t.pass();
  r.details = "structure solutions = Re/Im splits; induced bracket matches exactly";
  return r;
}

// --------------------------------------------------------------- 12: su2

CheckResult c12_spin(const VerifyOptions&) {
  CheckResult r{"spin variables", false, "", {}, 0, 5.0};
  Tally t;
  auto x = csphere::spin_variables();
  for (int i = 0; i < 3; ++i)
    t.require(csphere::tangency_residual(x[static_cast<size_t>(i)]).is_zero(),
              "tangency_residual(x^i) = 0");

  auto k2 = csphere::spin_kernel(2);
  t.require(k2.spin_part.size() == 3, "spin part dimension 3");
  for (const auto& f : k2.spin_part)
    t.require(csphere::tangency_residual(f).is_zero(), "kernel element valid");

  // full table with the oracle-determined global sign: {x^i,x^j} = -eps x^k
  auto eps = [](int i, int j, int& k) {
    if (i == j) return 0;
    k = 3 - i - j;
    int sign = ((j - i + 3) % 3 == 1) ? 1 : -1;
    return sign;
  };
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      int k = 0;
      int e = eps(i, j, k);
      auto br = csphere::holo_bracket(x[static_cast<size_t>(i)], x[static_cast<size_t>(j)]);
      if (e == 0)
        t.require(br.is_zero(), "diagonal bracket");
      else
        t.require(br == x[static_cast<size_t>(k)].scaled(HPoly(-e)), "su(2) table entry");
    }
  // rescaled generators close with +eps
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      int k = 0;
      int e = eps(i, j, k);
      if (e == 0) continue;
      auto br = csphere::holo_bracket(-x[static_cast<size_t>(i)], -x[static_cast<size_t>(j)]);
      t.require(br == (-x[static_cast<size_t>(k)]).scaled(HPoly(e)), "rescaled su(2)");
    }
  r.pass = t.pass();
  r.details = "tangency, kernel dimension, and the full 9-entry table, exact";
  r.notes.push_back(
      "with the printed x^i and the induced bracket the table closes as {x^i,x^j} = "
      "-eps^{ijk} x^k; the sign is the engine's fixed orientation (s^i = -x^i gives +eps) "
      "where the text prints +eps");
  return r;
}

// ------------------------------------------------------------ 13: maurer

CheckResult c13_maurer(const VerifyOptions&) {
  CheckResult r{"Maurer-Cartan route", false, "", {}, 0, 10.0};
  Tally t;
  auto fr = csphere::quaternion_frames();
  auto thetas = csphere::contact_forms();
  auto d = csphere::contact_differentials();
  auto scaled = [&](const PolyForm& f, long long c) {
    return f.scaled(MultiPoly::constant(csphere::real4_vars(), HPoly(c)));
  };

  // v^i -| d theta^j = -2 eps^{ijk} theta^k (engine orientation)
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      if (i == j) continue;
      int k = 3 - i - j;
      int e = ((j - i + 3) % 3 == 1) ? 1 : -1;
      t.require(contract(fr.v[static_cast<size_t>(i)], d[static_cast<size_t>(j)]) ==
                    scaled(thetas[static_cast<size_t>(k)], -2 * e),
                "v -| d theta table");
    }

  for (int i = 0; i < 3; ++i)
    t.require(!csphere::solve_s3_structure(fr.v[static_cast<size_t>(i)]).hamiltonian,
              "v^i rejected");

  MultiPoly q1 = MultiPoly::var(csphere::real4_vars(), 0);
  MultiPoly q2 = MultiPoly::var(csphere::real4_vars(), 1);
  MultiPoly q3 = MultiPoly::var(csphere::real4_vars(), 2);
  MultiPoly q4 = MultiPoly::var(csphere::real4_vars(), 3);
  std::array<MultiPoly, 3> y = {
      (q1 * q1 + q2 * q2 - q3 * q3 - q4 * q4).scaled(HPoly(Rational(1, 2))),
      q2 * q3 - q1 * q4, q1 * q3 + q2 * q4};

  std::array<std::array<MultiPoly, 3>, 3> Y;
  for (int i = 0; i < 3; ++i) {
    auto sol = csphere::solve_s3_structure(fr.w[static_cast<size_t>(i)]);
    t.require(sol.hamiltonian, "w^i Hamiltonian");
    t.require(sol.f[0] == y[static_cast<size_t>(i)], "first component equals y^i");
    Y[static_cast<size_t>(i)] = sol.f;
    // derivative relations on the solution family
    t.require(sol.f[0].diff(1) == sol.f[1].diff(2) && sol.f[1].diff(2) == sol.f[2].diff(3),
              "derivative relations");
  }

  // {y^i, y^j} = 2 eps^{ijk} y^k
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      auto br = csphere::s3_bracket(Y[static_cast<size_t>(i)], Y[static_cast<size_t>(j)]);
      if (i == j) {
        for (const auto& m : br) t.require(m.is_zero(), "diagonal y-bracket");
        continue;
      }
      int k = 3 - i - j;
      int e = ((j - i + 3) % 3 == 1) ? 1 : -1;
      std::array<MultiPoly, 3> expect = Y[static_cast<size_t>(k)];
      for (auto& m : expect) m = m.scaled(HPoly(2 * e));
      t.require(br == expect, "y-bracket table");
    }

  r.pass = t.pass();
  r.details = "contraction table, rejection of v^i, y^i recovery, bracket table; exact";
  r.notes.push_back(
      "the structure constants carry the quaternionic factor 2: v -| d theta = -2 eps theta "
      "and {y^i,y^j} = 2 eps^{ijk} y^k; the text prints both without the 2 (y^i/2 closes "
      "with +eps exactly)");
  return r;
}

// ----------------------------------------------------------- 14: kaehler

CheckResult c14_kaehler(const VerifyOptions&) {
  CheckResult r{"hyperkaehler forms", false, "", {}, 0, 1.0};
  Tally t;
  auto K = csphere::kaehler_suite();
  MultiPoly iconst = MultiPoly::constant(csphere::real4_vars(), HPoly::i());
  t.require(K.wplus == K.w2 + K.w3.scaled(iconst), "omega+ = omega2 + i omega3");
  t.require(K.wminus == K.w2 - K.w3.scaled(iconst), "omega- = omega2 - i omega3");
  t.require(!csphere::form_determinant(K.w1).is_zero(), "omega1 nondegenerate");
  t.require(!csphere::form_determinant(K.w2).is_zero(), "omega2 nondegenerate");
  t.require(!csphere::form_determinant(K.w3).is_zero(), "omega3 nondegenerate");

  auto thetas = circle::reduced_potential();
  auto dt1 = ext_d(thetas[0]), dt2 = ext_d(thetas[1]);
  auto m2 = circle::CircleFunc::constant(HPoly(-2));
  t.require(csphere::pullback_to_circle(K.c2, true) == dt1.scaled(m2),
            "Re omega+ pulls back to -2 d theta^1");
  t.require(csphere::pullback_to_circle(K.c3, true) == dt2.scaled(m2),
            "Im omega+ pulls back to -2 d theta^2");
  r.pass = t.pass();
  r.details = "omega+- assembly, nondegeneracy, embedding pullback; exact";
  r.notes.push_back(
      "the pullback matches with the frame angle written as w = e^{-i phi} and carries the "
      "constant -2; the text states equality on the nose");
  return r;
}

// ------------------------------------------------------------ 15: cartan

CheckResult c15_cartan(const VerifyOptions& opt) {
  CheckResult r{"cartan calculus", false, "", {}, 0, 30.0};
  Tally t;
  Rng rng(opt.seed + 3);
  VarsPtr v = coord_vars(4);
  int inputs = 0;
  int rounds = opt.trials > 0 ? std::max(15, opt.trials) : 26;
  for (int k = 0; k < rounds; ++k) {
    PolyForm w = rng.poly_form(v, 4, 2, 2, 3);
    t.require(ext_d(ext_d(w)).is_zero(), "d d = 0");
    PolyForm a = rng.poly_form(v, 4, 1, 2, 2);
    PolyForm b = rng.poly_form(v, 4, 2, 2, 2);
    PolyField x = rng.poly_field(v, 4, 2, 2);
    t.require(contract(x, wedge(a, b)) == wedge(contract(x, a), b) - wedge(a, contract(x, b)),
              "antiderivation");
    t.require(ext_d(contract(x, b)) + contract(x, ext_d(b)) == lie_derivative(x, b),
              "magic formula");
    PolyField y = rng.poly_field(v, 4, 2, 2);
    PolyField z = rng.poly_field(v, 4, 2, 2);
    PolyField jac = lie_bracket(lie_bracket(x, y), z) + lie_bracket(lie_bracket(y, z), x) +
                    lie_bracket(lie_bracket(z, x), y);
    bool zero = true;
    for (const auto& cmp : jac.comps) zero = zero && cmp.is_zero();
    t.require(zero, "field Jacobi");
    inputs += 7;
  }
  r.pass = t.pass() && (opt.trials > 0 || inputs >= 100);
  r.details = std::to_string(inputs) + " randomized forms/fields, all identities exact";
  return r;
}

using CriterionFn = CheckResult (*)(const VerifyOptions&);

const std::vector<std::pair<std::string, CriterionFn>>& criteria() {
  static const std::vector<std::pair<std::string, CriterionFn>> table = {
      {"gvh", c1_gvh},           {"quartic", c2_quartic}, {"grouping", c3_grouping},
      {"antisym", c4_antisym},   {"jacobi", c5_frame_axioms}, {"tables", c6_tables},
      {"project", c7_projection}, {"e2", c8_circle},      {"contact", c9_contact},
      {"jform", c10_jform},      {"c2equiv", c11_c2},     {"su2", c12_spin},
      {"maurer", c13_maurer},    {"kaehler", c14_kaehler}, {"cartan", c15_cartan},
  };
  return table;
}

}  // namespace

int criterion_count() { return static_cast<int>(criteria().size()); }

CheckResult run_criterion(int k, const VerifyOptions& opt) {
  if (k < 1 || k > criterion_count()) throw std::out_of_range("criterion index");
  const auto& [name, fn] = criteria()[static_cast<size_t>(k - 1)];
  auto start = std::chrono::steady_clock::now();
  CheckResult r = fn(opt);
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (r.limit_seconds > 0 && r.seconds > r.limit_seconds) {
    r.pass = false;
    r.details += " [exceeded " + std::to_string(r.limit_seconds) + "s budget]";
  }
  return r;
}

std::vector<std::string> suite_names() {
  std::vector<std::string> names;
  for (const auto& [n, fn] : criteria()) names.push_back(n);
  names.push_back("leibniz");  // alias of the frame axiom suite
  names.push_back("dirac");    // alias of the circle suite
  names.push_back("all");
  return names;
}

std::vector<CheckResult> run_suite(const std::string& name, const VerifyOptions& opt) {
  std::vector<CheckResult> out;
  if (name == "all") {
    for (int k = 1; k <= criterion_count(); ++k) out.push_back(run_criterion(k, opt));
    return out;
  }
  std::string target = name;
  if (name == "leibniz") target = "jacobi";
  if (name == "dirac") target = "e2";
  for (int k = 1; k <= criterion_count(); ++k)
    if (criteria()[static_cast<size_t>(k - 1)].first == target) {
      out.push_back(run_criterion(k, opt));
      return out;
    }
  throw std::invalid_argument("unknown verify suite: " + name);
}

}  // namespace nsym::verify
