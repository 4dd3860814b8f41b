#include "nsym/opalg.hpp"

#include <algorithm>

namespace nsym::opalg {

namespace {

HPoly minus_i_hbar() {
  return HPoly::hbar(1, GaussianRational(Rational(0), Rational(-1)));
}

long long factorial(int k) {
  long long f = 1;
  for (int i = 2; i <= k; ++i) f *= i;
  return f;
}

int permutation_parity(const std::vector<int>& perm) {
  int inv = 0;
  for (size_t i = 0; i < perm.size(); ++i)
    for (size_t j = i + 1; j < perm.size(); ++j)
      if (perm[i] > perm[j]) ++inv;
  return inv % 2 == 0 ? 1 : -1;
}

}  // namespace

std::string OpPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::string s;
  bool first = true;
  for (const auto& [w, c] : terms_) {
    if (!first) s += " + ";
    std::string ws;
    size_t i = 0;
    while (i < w.size()) {
      size_t j = i;
      while (j < w.size() && w[j] == w[i]) ++j;
      if (!ws.empty()) ws += "*";
      const char* k = w[i].kind == OpGen::X ? "X" : (w[i].kind == OpGen::P ? "P" : "I");
      ws += k + std::to_string(w[i].index);
      if (j - i > 1) ws += "^" + std::to_string(j - i);
      i = j;
    }
    std::string cs = c.to_string();
    bool composite = cs.find(' ') != std::string::npos || cs.find('+') != std::string::npos ||
                     cs.find('-', 1) != std::string::npos;
    if (ws.empty())
      s += composite ? "(" + cs + ")" : cs;
    else if (cs == "1")
      s += ws;
    else
      s += (composite ? "(" + cs + ")" : cs) + "*" + ws;
    first = false;
  }
  return s;
}

void OpAlgebra::reduce(std::vector<OpGen> core, std::vector<int> ids, HPoly coeff,
                       OpPoly& out) const {
  // Scan for P..X inversions; same-index pairs branch via the rewrite rule.
  size_t i = 0;
  while (i + 1 < core.size()) {
    if (core[i].kind == OpGen::P && core[i + 1].kind == OpGen::X) {
      if (core[i].index == core[i + 1].index) {
        std::vector<OpGen> contracted;
        contracted.reserve(core.size() - 2);
        for (size_t k = 0; k < core.size(); ++k)
          if (k != i && k != i + 1) contracted.push_back(core[k]);
        std::vector<int> cids = ids;
        if (!identity_is_unit_) cids.push_back(core[i].index);
        reduce(std::move(contracted), std::move(cids), coeff * minus_i_hbar(), out);
      }
      std::swap(core[i], core[i + 1]);
      i = i > 0 ? i - 1 : 0;
      continue;
    }
    ++i;
  }
  // Now all X's precede all P's; both kinds commute within their block.
  std::stable_sort(core.begin(), core.end());
  std::sort(ids.begin(), ids.end());
  ids.erase(std::unique(ids.begin(), ids.end()), ids.end());  // I_a I_a = I_a
  Word w = std::move(core);
  for (int a : ids) w.push_back({OpGen::I, a});
  out.add(std::move(w), coeff);
}

OpPoly OpAlgebra::term(Word w, HPoly c) const {
  OpPoly out;
  std::vector<OpGen> core;
  std::vector<int> ids;
  for (const auto& g : w) {
    if (g.kind == OpGen::I) {
      if (!identity_is_unit_) ids.push_back(g.index);
    } else {
      core.push_back(g);
    }
  }
  reduce(std::move(core), std::move(ids), std::move(c), out);
  return out;
}

OpPoly OpAlgebra::mul(const OpPoly& a, const OpPoly& b) const {
  OpPoly out;
  for (const auto& [wa, ca] : a.terms())
    for (const auto& [wb, cb] : b.terms()) {
      Word w = wa;
      w.insert(w.end(), wb.begin(), wb.end());
      out += term(std::move(w), ca * cb);
    }
  return out;
}

OpPoly OpAlgebra::commutator(const OpPoly& a, const OpPoly& b) const {
  return mul(a, b) - mul(b, a);
}

OpPoly OpAlgebra::quantize_sym(const Word& word) const {
  if (word.empty()) throw StructuralError("quantization of an empty word");
  Word w = word;
  std::sort(w.begin(), w.end());
  OpPoly sum;
  long long count = 0;
  do {
    sum += term(w, HPoly(1));
    ++count;
  } while (std::next_permutation(w.begin(), w.end()));
  return sum.scaled(HPoly(Rational(1, count)));
}

OpPoly OpAlgebra::quantize_antisym(const Word& word) const {
  if (word.empty()) throw StructuralError("quantization of an empty word");
  if (word.size() == 1) return term(word);
  if (word.size() == 2) {
    OpPoly a = term({word[0]}), b = term({word[1]});
    return commutator(a, b).scaled(HPoly(Rational(1, 2)));
  }
  int k = static_cast<int>(word.size());
  OpPoly sum;
  for (size_t m = 0; m < word.size(); ++m) {
    Word rest;
    rest.reserve(word.size() - 1);
    for (size_t i = 0; i < word.size(); ++i)
      if (i != m) rest.push_back(word[i]);
    OpPoly inner = commutator(term({word[m]}), quantize_antisym(rest));
    HPoly sign(Rational(m % 2 == 0 ? 1 : -1, 2));
    sum += inner.scaled(sign);
  }
  return sum.scaled(HPoly(Rational(1, k)));
}

OpPoly OpAlgebra::antisym_flat_average(const Word& word) const {
  if (word.empty()) throw StructuralError("quantization of an empty word");
  for (size_t i = 0; i < word.size(); ++i)
    for (size_t j = i + 1; j < word.size(); ++j)
      if (word[i] == word[j]) return OpPoly();  // alternation kills repeats
  int k = static_cast<int>(word.size());
  std::vector<int> perm(word.size());
  for (size_t i = 0; i < word.size(); ++i) perm[i] = static_cast<int>(i);
  OpPoly sum;
  do {
    Word arranged(word.size());
    for (size_t i = 0; i < word.size(); ++i) arranged[i] = word[static_cast<size_t>(perm[i])];
    HPoly c(Rational(permutation_parity(perm)));
    sum += term(std::move(arranged), c);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return sum.scaled(HPoly(Rational(1, factorial(k))));
}

GvhReport gvh_demo() {
  OpAlgebra alg(/*identity_is_unit=*/true);
  OpPoly Qp = alg.term({{OpGen::P, 1}});
  OpPoly Qq = alg.term({{OpGen::X, 1}});
  OpPoly Qp2 = alg.mul(Qp, Qp);
  OpPoly Qq2 = alg.mul(Qq, Qq);

  GvhReport r;
  r.grouping_split = (alg.mul(Qp2, Qq2) + alg.mul(Qq2, Qp2)).scaled(HPoly(Rational(1, 2)));
  OpPoly jordan_pq = alg.mul(Qp, Qq) + alg.mul(Qq, Qp);
  r.grouping_product = alg.mul(jordan_pq, jordan_pq).scaled(HPoly(Rational(1, 4)));
  r.difference = r.grouping_split - r.grouping_product;
  return r;
}

Word word_from_atoms(const frame::GenWord& atoms) {
  Word w;
  for (const auto& a : atoms) {
    switch (a.kind) {
      case frame::GenAtom::Pi:
        w.push_back({OpGen::P, a.index});
        break;
      case frame::GenAtom::Q:
        w.push_back({OpGen::X, a.index});
        break;
      case frame::GenAtom::Id:
        w.push_back({OpGen::I, a.index});
        break;
    }
  }
  return w;
}

OpPoly quantize_observable(const OpAlgebra& alg, const frame::FrameObservable& f) {
  auto decomp = frame::decompose_to_words(f);
  if (!decomp)
    throw frame::NotAllowableError("observable is not a constant combination of generator words",
                                   "generator-word decomposition");
  OpPoly out;
  for (const auto& [word, coeff] : *decomp)
    out += alg.quantize_sym(word_from_atoms(word)).scaled(HPoly(coeff));
  return out;
}

DiracReport dirac_check(const OpAlgebra& alg, const frame::FrameObservable& f,
                        const frame::FrameObservable& g) {
  DiracReport r;
  OpPoly Qf = quantize_observable(alg, f);
  OpPoly Qg = quantize_observable(alg, g);
  r.commutator = alg.commutator(Qf, Qg);
  frame::FrameObservable br = frame::poisson_bracket(f, g);
  r.expected = quantize_observable(alg, br).scaled(minus_i_hbar());
  r.residual = r.commutator - r.expected;
  r.holds = r.residual.is_zero();
  return r;
}

}  // namespace nsym::opalg
