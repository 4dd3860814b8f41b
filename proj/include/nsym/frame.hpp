#pragma once

#include <optional>
#include <string>
#include <vector>

#include "nsym/multipoly.hpp"

namespace nsym::frame {

enum class Symmetry { Sym, Antisym };

// Coordinates on the frame bundle of R^n: q^a (base) and the momentum
// frame pi^i_j, all 1-based in the public interface.
struct FrameSpace {
  explicit FrameSpace(int n);

  int n;
  VarsPtr vars;

  size_t qvar(int a) const { return static_cast<size_t>(a - 1); }
  size_t pivar(int i, int j) const {
    return static_cast<size_t>(n + (i - 1) * n + (j - 1));
  }
  MultiPoly q(int a) const { return MultiPoly::var(vars, qvar(a)); }
  MultiPoly pi(int i, int j) const { return MultiPoly::var(vars, pivar(i, j)); }
  MultiPoly zero() const { return MultiPoly(vars); }
  MultiPoly constant(HPoly c) const { return MultiPoly::constant(vars, std::move(c)); }
};

struct NotAllowableError : std::runtime_error {
  NotAllowableError(const std::string& what, std::string eq)
      : std::runtime_error(what), equation(std::move(eq)) {}
  std::string equation;  // the violated structure-equation component
};

// Rank-p R^n-tensor-valued observable with polynomial components in (q, pi).
// Components are stored on canonical index tuples only: sorted for Sym,
// strictly increasing for Antisym.
class FrameObservable {
 public:
  FrameObservable(FrameSpace space, int rank, Symmetry sym);

  const FrameSpace& space() const { return space_; }
  int n() const { return space_.n; }
  int rank() const { return rank_; }
  Symmetry symmetry() const { return sym_; }
  bool is_zero() const;

  // Component at an arbitrary index tuple (1-based entries), applying the
  // symmetry of the observable.
  MultiPoly component(std::vector<int> idx) const;

  // Sets the component at a canonical tuple (sorted / strictly increasing).
  void set_component(std::vector<int> idx, MultiPoly value);
  void add_component(std::vector<int> idx, const MultiPoly& value);

  const std::map<std::vector<int>, MultiPoly>& components() const { return comps_; }

  int pi_degree() const;
  bool is_pi_homogeneous(int degree) const;

  FrameObservable operator-() const;
  friend FrameObservable operator+(const FrameObservable& a, const FrameObservable& b);
  friend FrameObservable operator-(const FrameObservable& a, const FrameObservable& b);
  FrameObservable scaled(const MultiPoly& s) const;
  FrameObservable scaled(const HPoly& s) const;

  friend bool operator==(const FrameObservable& a, const FrameObservable& b);

  std::string to_string() const;

 private:
  FrameSpace space_;
  int rank_;
  Symmetry sym_;
  std::map<std::vector<int>, MultiPoly> comps_;
};

// Canonical representative of the equivalence class of Hamiltonian vector
// fields of a rank-p observable. q_part is keyed by (sorted I, c) with
// |I| = p-1; pi_part by (sorted I, a, b). The canonical representative is
// totally symmetric across (I, a); kernel shifts need not be.
struct HamiltonianField {
  int n = 0;
  int p = 0;
  std::map<std::vector<int>, MultiPoly> q_part;
  std::map<std::vector<int>, MultiPoly> pi_part;

  MultiPoly q_component(std::vector<int> I, int c) const;
  MultiPoly pi_component(std::vector<int> I, int a, int b) const;
};

enum class GenKind { PiHat, QHat, QHatFull, IHat };

FrameObservable generator(const FrameSpace& space, GenKind kind, int i, int j = 0);

FrameObservable sym_product(const FrameObservable& f, const FrameObservable& g);

struct AntisymProduct {
  FrameObservable value;
  bool degenerate = false;  // rank exceeded n; value is identically zero
};
AntisymProduct antisym_product(const FrameObservable& f, const FrameObservable& g);

// Solves the structure equation for the canonical representative; throws
// NotAllowableError when the overdetermined system is inconsistent.
HamiltonianField hamiltonian_field(const FrameObservable& f);

struct AllowableResult {
  bool allowable = false;
  std::string diagnostic;
};
AllowableResult is_allowable(const FrameObservable& f);

FrameObservable poisson_bracket(const FrameObservable& f, const FrameObservable& g);

// Bracket evaluated with an explicitly supplied field for f; used to verify
// representative independence under kernel shifts.
FrameObservable poisson_bracket_with_field(const HamiltonianField& xf, int p,
                                           const FrameObservable& g);

// --- cotangent projection ------------------------------------------------

// Observables on T*R^n live in variables {q^a, p_a, alpha_a}; the alpha_a
// stay symbolic unless numeric values are substituted.
struct CotangentSpace {
  explicit CotangentSpace(int n);
  int n;
  VarsPtr vars;
  size_t qvar(int a) const { return static_cast<size_t>(a - 1); }
  size_t pvar(int a) const { return static_cast<size_t>(n + a - 1); }
  size_t avar(int a) const { return static_cast<size_t>(2 * n + a - 1); }
  MultiPoly q(int a) const { return MultiPoly::var(vars, qvar(a)); }
  MultiPoly p(int a) const { return MultiPoly::var(vars, pvar(a)); }
  MultiPoly alpha(int a) const { return MultiPoly::var(vars, avar(a)); }
};

using CotangentObservable = MultiPoly;

// Decomposition of an allowable symmetric observable over symmetric products
// of pi-hat and I-hat generators with q-polynomial coefficients. Each word is
// a sorted list of atoms; atom = (true, a) for pi-hat_a, (false, b) for
// I-hat_b.
struct GenTermPQ {
  std::vector<std::pair<bool, int>> word;
  MultiPoly coeff_q;  // over the cotangent q-variables embedded in frame vars
};

CotangentObservable project_to_cotangent(
    const CotangentSpace& cspace, const FrameObservable& f,
    const std::optional<std::vector<Rational>>& alpha = std::nullopt);

CotangentObservable cotangent_bracket(const CotangentSpace& cspace,
                                      const CotangentObservable& a,
                                      const CotangentObservable& b);

// --- generator-word decomposition (quantization bridge) -------------------

struct GenAtom {
  enum Kind { Pi = 0, Q = 1, Id = 2 };
  Kind kind;
  int index;
  friend auto operator<=>(const GenAtom&, const GenAtom&) = default;
};
using GenWord = std::vector<GenAtom>;  // sorted multiset of atoms

FrameObservable word_observable(const FrameSpace& space, const GenWord& w);

// Expresses f as a constant-coefficient combination of symmetric generator
// words of its rank; nullopt when f lies outside that span.
std::optional<std::vector<std::pair<GenWord, Rational>>> decompose_to_words(
    const FrameObservable& f);

// --- shared enumeration helpers -------------------------------------------

std::vector<std::vector<int>> multisets(int n, int size);          // sorted tuples
std::vector<std::vector<int>> increasing_tuples(int n, int size);  // strict

}  // namespace nsym::frame
