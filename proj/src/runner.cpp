#include "nsym/runner.hpp"

#include <sstream>

#include "nsym/csphere.hpp"
#include "nsym/expr.hpp"
#include "nsym/opalg.hpp"
#include "nsym/verify.hpp"

namespace nsym::runner {

namespace {

using nlohmann::ordered_json;
using namespace nsym::expr;

struct SpaceSpec {
  enum Kind { Frame, Circle, C2, S3 } kind = Frame;
  int n = 2;
};

SpaceSpec parse_space(const std::string& s) {
  SpaceSpec out;
  if (s == "circle") {
    out.kind = SpaceSpec::Circle;
    return out;
  }
  if (s == "c2") {
    out.kind = SpaceSpec::C2;
    return out;
  }
  if (s == "s3") {
    out.kind = SpaceSpec::S3;
    return out;
  }
  if (s.rfind("frame", 0) == 0) {
    out.kind = SpaceSpec::Frame;
    size_t colon = s.find(':');
    out.n = colon == std::string::npos ? 2 : std::stoi(s.substr(colon + 1));
    return out;
  }
  throw std::invalid_argument("unknown space: " + s);
}

[[noreturn]] void invalid_for_space(const char* what) {
  throw std::invalid_argument(std::string(what) + " is not valid for the configured space");
}

// ------------------------------------------------------ frame evaluation

struct FrameValue {
  bool is_scalar = false;
  HPoly scalar;
  std::optional<frame::FrameObservable> obs;
};

FrameValue eval_frame(const Expr& e, const frame::FrameSpace& sp) {
  auto obs_of = [](FrameValue v) {
    if (v.is_scalar) throw std::invalid_argument("expected an observable, found a scalar");
    return *v.obs;
  };
  switch (e.kind) {
    case Expr::Atom:
      switch (e.atom) {
        case AtomKind::PiHat:
          return {false, {}, frame::generator(sp, frame::GenKind::PiHat, e.i)};
        case AtomKind::QHat:
          return {false, {}, frame::generator(sp, frame::GenKind::QHat, e.i)};
        case AtomKind::QHatFull:
          return {false, {}, frame::generator(sp, frame::GenKind::QHatFull, e.i, e.j)};
        case AtomKind::IHat:
          return {false, {}, frame::generator(sp, frame::GenKind::IHat, e.i)};
        default:
          invalid_for_space("this atom");
      }
    case Expr::Scalar:
      return {true, e.scalar, std::nullopt};
    case Expr::Scale: {
      FrameValue inner = eval_frame(*e.kids[0], sp);
      if (inner.is_scalar) return {true, e.scalar * inner.scalar, std::nullopt};
      return {false, {}, inner.obs->scaled(e.scalar)};
    }
    case Expr::Sum: {
      FrameValue acc = eval_frame(*e.kids[0], sp);
      if (e.signs[0] < 0) {
        if (acc.is_scalar)
          acc.scalar = -acc.scalar;
        else
          acc.obs = -*acc.obs;
      }
      for (size_t k = 1; k < e.kids.size(); ++k) {
        FrameValue next = eval_frame(*e.kids[k], sp);
        if (acc.is_scalar != next.is_scalar)
          throw std::invalid_argument("cannot add a scalar to an observable");
        if (acc.is_scalar)
          acc.scalar = e.signs[k] > 0 ? acc.scalar + next.scalar : acc.scalar - next.scalar;
        else
          acc.obs = e.signs[k] > 0 ? *acc.obs + *next.obs : *acc.obs - *next.obs;
      }
      return acc;
    }
    case Expr::SymProd: {
      FrameValue a = eval_frame(*e.kids[0], sp);
      FrameValue b = eval_frame(*e.kids[1], sp);
      if (a.is_scalar && b.is_scalar) return {true, a.scalar * b.scalar, std::nullopt};
      if (a.is_scalar) return {false, {}, b.obs->scaled(a.scalar)};
      if (b.is_scalar) return {false, {}, a.obs->scaled(b.scalar)};
      return {false, {}, frame::sym_product(*a.obs, *b.obs)};
    }
    case Expr::WedgeProd: {
      FrameValue a = eval_frame(*e.kids[0], sp);
      FrameValue b = eval_frame(*e.kids[1], sp);
      if (a.is_scalar || b.is_scalar)
        throw std::invalid_argument("wedge of a scalar");
      return {false, {}, frame::antisym_product(*a.obs, *b.obs).value};
    }
    case Expr::Bracket: {
      frame::FrameObservable a = obs_of(eval_frame(*e.kids[0], sp));
      frame::FrameObservable b = obs_of(eval_frame(*e.kids[1], sp));
      return {false, {}, frame::poisson_bracket(a, b)};
    }
  }
  throw std::logic_error("unhandled expression node");
}

// ----------------------------------------------------- circle evaluation

struct CircleValue {
  bool is_scalar = false;
  HPoly scalar;
  circle::CircleObservable obs;
};

CircleValue eval_circle(const Expr& e) {
  auto g = circle::generators();
  switch (e.kind) {
    case Expr::Atom:
      switch (e.atom) {
        case AtomKind::GenX:
          return {false, {}, g.x};
        case AtomKind::GenY:
          return {false, {}, g.y};
        case AtomKind::GenP:
          return {false, {}, g.p};
        default:
          invalid_for_space("this atom");
      }
    case Expr::Scalar:
      return {true, e.scalar, {}};
    case Expr::Scale: {
      CircleValue inner = eval_circle(*e.kids[0]);
      if (inner.is_scalar) return {true, e.scalar * inner.scalar, {}};
      return {false, {}, inner.obs.scaled(e.scalar)};
    }
    case Expr::Sum: {
      CircleValue acc = eval_circle(*e.kids[0]);
      if (e.signs[0] < 0) {
        if (acc.is_scalar)
          acc.scalar = -acc.scalar;
        else
          acc.obs = -acc.obs;
      }
      for (size_t k = 1; k < e.kids.size(); ++k) {
        CircleValue next = eval_circle(*e.kids[k]);
        if (acc.is_scalar != next.is_scalar)
          throw std::invalid_argument("cannot add a scalar to an observable");
        if (acc.is_scalar)
          acc.scalar = e.signs[k] > 0 ? acc.scalar + next.scalar : acc.scalar - next.scalar;
        else
          acc.obs = e.signs[k] > 0 ? acc.obs + next.obs : acc.obs - next.obs;
      }
      return acc;
    }
    case Expr::SymProd: {
      CircleValue a = eval_circle(*e.kids[0]);
      CircleValue b = eval_circle(*e.kids[1]);
      if (a.is_scalar && b.is_scalar) return {true, a.scalar * b.scalar, {}};
      if (a.is_scalar) return {false, {}, b.obs.scaled(a.scalar)};
      if (b.is_scalar) return {false, {}, a.obs.scaled(b.scalar)};
      invalid_for_space("the symmetric product of two observables");
    }
    case Expr::WedgeProd:
      invalid_for_space("the wedge product");
    case Expr::Bracket: {
      CircleValue a = eval_circle(*e.kids[0]);
      CircleValue b = eval_circle(*e.kids[1]);
      if (a.is_scalar || b.is_scalar) throw std::invalid_argument("bracket of a scalar");
      return {false, {}, circle::bracket(a.obs, b.obs)};
    }
  }
  throw std::logic_error("unhandled expression node");
}

// ------------------------------------------- circle-function evaluation

circle::CircleFunc eval_circle_func(const Expr& e) {
  using circle::CircleFunc;
  switch (e.kind) {
    case Expr::Atom:
      switch (e.atom) {
        case AtomKind::CQ1:
          return CircleFunc::q1();
        case AtomKind::CQ2:
          return CircleFunc::q2();
        case AtomKind::CosPhi:
          return CircleFunc::cos_phi();
        case AtomKind::SinPhi:
          return CircleFunc::sin_phi();
        default:
          invalid_for_space("this atom");
      }
    case Expr::Scalar:
      return CircleFunc::constant(e.scalar);
    case Expr::Scale:
      return eval_circle_func(*e.kids[0]).scaled(e.scalar);
    case Expr::Sum: {
      CircleFunc acc = eval_circle_func(*e.kids[0]);
      if (e.signs[0] < 0) acc = -acc;
      for (size_t k = 1; k < e.kids.size(); ++k) {
        CircleFunc next = eval_circle_func(*e.kids[k]);
        acc = e.signs[k] > 0 ? acc + next : acc - next;
      }
      return acc;
    }
    case Expr::SymProd:
      return eval_circle_func(*e.kids[0]) * eval_circle_func(*e.kids[1]);
    default:
      invalid_for_space("this construction in a component function");
  }
}

// --------------------------------------------------------- c2 evaluation

struct HoloValue {
  csphere::HoloPoly value{csphere::holo_vars()};
};

HoloValue eval_c2(const Expr& e) {
  auto x = csphere::spin_variables();
  switch (e.kind) {
    case Expr::Atom:
      switch (e.atom) {
        case AtomKind::Spin1:
          return {x[0]};
        case AtomKind::Spin2:
          return {x[1]};
        case AtomKind::Spin3:
          return {x[2]};
        default:
          invalid_for_space("this atom");
      }
    case Expr::Scalar:
      return {csphere::holo_constant(e.scalar)};
    case Expr::Scale:
      return {eval_c2(*e.kids[0]).value.scaled(e.scalar)};
    case Expr::Sum: {
      HoloValue acc = eval_c2(*e.kids[0]);
      if (e.signs[0] < 0) acc.value = -acc.value;
      for (size_t k = 1; k < e.kids.size(); ++k) {
        HoloValue next = eval_c2(*e.kids[k]);
        acc.value = e.signs[k] > 0 ? acc.value + next.value : acc.value - next.value;
      }
      return acc;
    }
    case Expr::SymProd:
      return {eval_c2(*e.kids[0]).value * eval_c2(*e.kids[1]).value};
    case Expr::WedgeProd:
      invalid_for_space("the wedge product");
    case Expr::Bracket:
      return {csphere::holo_bracket(eval_c2(*e.kids[0]).value, eval_c2(*e.kids[1]).value)};
  }
  throw std::logic_error("unhandled expression node");
}

// --------------------------------------------------------- s3 evaluation

struct S3Value {
  std::array<MultiPoly, 3> f = {MultiPoly(csphere::real4_vars()),
                                MultiPoly(csphere::real4_vars()),
                                MultiPoly(csphere::real4_vars())};
};

S3Value eval_s3(const Expr& e) {
  auto y_obs = [&](int i) {
    auto fr = csphere::quaternion_frames();
    auto sol = csphere::solve_s3_structure(fr.w[static_cast<size_t>(i)]);
    return S3Value{sol.f};
  };
  switch (e.kind) {
    case Expr::Atom:
      switch (e.atom) {
        case AtomKind::Spin1:
          return y_obs(0);
        case AtomKind::Spin2:
          return y_obs(1);
        case AtomKind::Spin3:
          return y_obs(2);
        default:
          invalid_for_space("this atom");
      }
    case Expr::Scale: {
      S3Value v = eval_s3(*e.kids[0]);
      for (auto& m : v.f) m = m.scaled(e.scalar);
      return v;
    }
    case Expr::Sum: {
      S3Value acc = eval_s3(*e.kids[0]);
      if (e.signs[0] < 0)
        for (auto& m : acc.f) m = -m;
      for (size_t k = 1; k < e.kids.size(); ++k) {
        S3Value next = eval_s3(*e.kids[k]);
        for (int i = 0; i < 3; ++i)
          acc.f[static_cast<size_t>(i)] =
              e.signs[k] > 0 ? acc.f[static_cast<size_t>(i)] + next.f[static_cast<size_t>(i)]
                             : acc.f[static_cast<size_t>(i)] - next.f[static_cast<size_t>(i)];
      }
      return acc;
    }
    case Expr::Bracket:
      return {csphere::s3_bracket(eval_s3(*e.kids[0]).f, eval_s3(*e.kids[1]).f)};
    default:
      invalid_for_space("this construction");
  }
}

// --------------------------------------------------------- serialization

ordered_json frame_obs_json(const frame::FrameObservable& f) {
  ordered_json j;
  j["rank"] = f.rank();
  j["symmetry"] = f.symmetry() == frame::Symmetry::Sym ? "sym" : "antisym";
  ordered_json comps = ordered_json::object();
  for (auto& idx : f.symmetry() == frame::Symmetry::Sym
                       ? frame::multisets(f.n(), f.rank())
                       : frame::increasing_tuples(f.n(), f.rank())) {
    std::string key;
    for (size_t k = 0; k < idx.size(); ++k) key += (k ? "," : "") + std::to_string(idx[k]);
    comps[key] = f.component(idx).to_string();
  }
  j["components"] = comps;
  return j;
}

ordered_json circle_obs_json(const circle::CircleObservable& f) {
  ordered_json j;
  j["A"] = f.A.to_string();
  j["B"] = f.B.to_string();
  j["C"] = f.C.to_string();
  return j;
}

ordered_json oppoly_json(const opalg::OpPoly& p) {
  ordered_json terms = ordered_json::array();
  for (const auto& [w, c] : p.terms()) {
    std::string word;
    for (const auto& g : w) {
      if (!word.empty()) word += "*";
      word += (g.kind == opalg::OpGen::X ? "X" : g.kind == opalg::OpGen::P ? "P" : "I") +
              std::to_string(g.index);
    }
    terms.push_back({{"word", word.empty() ? "1" : word}, {"coeff", c.to_string()}});
  }
  return terms;
}

// Extracts the flattened generator word from a chain of symmetric or wedge
// products of atoms; used by the quantize command.
void flatten_word(const Expr& e, Expr::Kind op, std::vector<opalg::OpGen>& out) {
  if (e.kind == Expr::Atom) {
    switch (e.atom) {
      case AtomKind::PiHat:
        out.push_back({opalg::OpGen::P, e.i});
        return;
      case AtomKind::QHat:
        out.push_back({opalg::OpGen::X, e.i});
        return;
      case AtomKind::IHat:
        out.push_back({opalg::OpGen::I, e.i});
        return;
      default:
        throw std::invalid_argument("quantization words use pi_k, q^i, I_k atoms");
    }
  }
  if (e.kind == op) {
    flatten_word(*e.kids[0], op, out);
    flatten_word(*e.kids[1], op, out);
    return;
  }
  throw std::invalid_argument("quantization expects a product of generator atoms");
}

}  // namespace

Report run_command(const RunConfig& cfg, const std::string& command,
                   const std::vector<std::string>& args) {
  Report rep;
  SpaceSpec space = parse_space(cfg.space);
  std::ostringstream text;
  rep.json["space"] = cfg.space;
  rep.json["command"] = command;
  rep.json["inputs"] = args;
  rep.json["result"] = nullptr;
  rep.json["checks"] = ordered_json::array();
  rep.json["paper_notes"] = ordered_json::array();

  auto need_args = [&](size_t k) {
    if (args.size() != k)
      throw std::invalid_argument(command + " expects " + std::to_string(k) + " argument(s)");
  };

  if (command == "verify") {
    need_args(1);
    verify::VerifyOptions opt;
    opt.seed = cfg.seed;
    opt.trials = cfg.trials;
    opt.max_mode = cfg.max_mode;
    opt.max_qdeg = cfg.max_deg;
    auto results = verify::run_suite(args[0], opt);
    bool all = true;
    for (const auto& r : results) {
      all = all && r.pass;
      text << (r.pass ? "pass" : "FAIL") << " " << r.name << ": " << r.details << "\n";
      ordered_json c;
      c["name"] = r.name;
      c["pass"] = r.pass;
      c["details"] = r.details;
      rep.json["checks"].push_back(c);
      for (const auto& n : r.notes) {
        text << "  note: " << n << "\n";
        rep.json["paper_notes"].push_back(n);
      }
    }
    rep.ok = all;
    rep.json["result"] = all ? "pass" : "fail";
    rep.text = text.str();
    return rep;
  }

  if (command == "bracket") {
    need_args(2);
    std::string input = "{" + args[0] + ", " + args[1] + "}";
    ExprPtr e = parse(input);
    switch (space.kind) {
      case SpaceSpec::Frame: {
        frame::FrameSpace sp(space.n);
        FrameValue v = eval_frame(*e, sp);
        rep.json["result"] = frame_obs_json(*v.obs);
        text << v.obs->to_string() << "\n";
        break;
      }
      case SpaceSpec::Circle: {
        CircleValue v = eval_circle(*e);
        rep.json["result"] = circle_obs_json(v.obs);
        text << "A = " << v.obs.A.to_string() << ", B = " << v.obs.B.to_string()
             << ", C = " << v.obs.C.to_string() << "\n";
        break;
      }
      case SpaceSpec::C2: {
        HoloValue v = eval_c2(*e);
        rep.json["result"] = v.value.to_string();
        text << v.value.to_string() << "\n";
        break;
      }
      case SpaceSpec::S3: {
        S3Value v = eval_s3(*e);
        ordered_json comps = ordered_json::array();
        for (const auto& m : v.f) comps.push_back(m.to_string());
        rep.json["result"] = comps;
        for (int i = 0; i < 3; ++i) text << "f^" << (i + 1) << " = " << v.f[static_cast<size_t>(i)].to_string() << "\n";
        break;
      }
    }
    rep.text = text.str();
    return rep;
  }

  if (command == "hvf") {
    if (space.kind == SpaceSpec::Circle && args.size() == 2) {
      // component-function pair fed straight to the structure solver
      circle::CircleFunc f1 = eval_circle_func(*parse(args[0]));
      circle::CircleFunc f2 = eval_circle_func(*parse(args[1]));
      if (!f1.is_real() || !f2.is_real())
        throw std::invalid_argument("component functions must be real");
      auto sol = circle::solve_structure(f1, f2);
      if (!sol.accepted) {
        rep.ok = false;
        rep.json["result"] = {{"accepted", false}, {"violated_equation", sol.violated_equation}};
        text << "rejected: structure equation component " << sol.violated_equation
             << " is violated\n";
        rep.text = text.str();
        return rep;
      }
      rep.json["result"] = {{"accepted", true},
                            {"A", sol.observable.A.to_string()},
                            {"B", sol.observable.B.to_string()},
                            {"C", sol.observable.C.to_string()},
                            {"X_phi", sol.x_phi.to_string()},
                            {"X_1", sol.x1.to_string()},
                            {"X_2", sol.x2.to_string()}};
      text << "accepted\nA = " << sol.observable.A.to_string()
           << "\nB = " << sol.observable.B.to_string() << "\nC = " << sol.observable.C.to_string()
           << "\nX^phi = " << sol.x_phi.to_string() << "\nX^1 = " << sol.x1.to_string()
           << "\nX^2 = " << sol.x2.to_string() << "\n";
      rep.text = text.str();
      return rep;
    }
    need_args(1);
    ExprPtr e = parse(args[0]);
    switch (space.kind) {
      case SpaceSpec::Frame: {
        frame::FrameSpace sp(space.n);
        FrameValue v = eval_frame(*e, sp);
        frame::HamiltonianField X = frame::hamiltonian_field(*v.obs);
        ordered_json qpart = ordered_json::object(), pipart = ordered_json::object();
        for (const auto& [key, val] : X.q_part) {
          std::string k;
          for (size_t s = 0; s < key.size(); ++s) k += (s ? "," : "") + std::to_string(key[s]);
          qpart[k] = val.to_string();
        }
        for (const auto& [key, val] : X.pi_part) {
          std::string k;
          for (size_t s = 0; s < key.size(); ++s) k += (s ? "," : "") + std::to_string(key[s]);
          pipart[k] = val.to_string();
        }
        rep.json["result"] = {{"q_part", qpart}, {"pi_part", pipart}};
        text << "q-part entries: " << X.q_part.size() << ", pi-part entries: " << X.pi_part.size()
             << "\n";
        for (const auto& [key, val] : X.q_part)
          if (!val.is_zero()) {
            text << "X^(";
            for (size_t s = 0; s + 1 < key.size(); ++s) text << (s ? "," : "") << key[s];
            text << ")" << key.back() << " = " << val.to_string() << "\n";
          }
        break;
      }
      case SpaceSpec::Circle: {
        CircleValue v = eval_circle(*e);
        auto [f1, f2] = v.obs.components();
        auto sol = circle::solve_structure(f1, f2);
        if (!sol.accepted) throw std::runtime_error("observable rejected by the solver");
        rep.json["result"] = {{"X_phi", sol.x_phi.to_string()},
                              {"X_1", sol.x1.to_string()},
                              {"X_2", sol.x2.to_string()}};
        text << "X^phi = " << sol.x_phi.to_string() << "\nX^1 = " << sol.x1.to_string()
             << "\nX^2 = " << sol.x2.to_string() << "\n";
        break;
      }
      case SpaceSpec::C2: {
        HoloValue v = eval_c2(*e);
        PolyField X = csphere::c2_hamiltonian_field(v.value);
        ordered_json comps = ordered_json::array();
        for (const auto& m : X.comps) comps.push_back(m.to_string());
        rep.json["result"] = comps;
        for (int a = 0; a < 4; ++a)
          text << "X^q" << (a + 1) << " = " << X.comps[static_cast<size_t>(a)].to_string() << "\n";
        break;
      }
      case SpaceSpec::S3: {
        S3Value v = eval_s3(*e);
        auto X = csphere::s3_hamiltonian_field(v.f);
        if (!X) throw std::runtime_error("observable is not Hamiltonian");
        ordered_json comps = ordered_json::array();
        for (const auto& m : X->comps) comps.push_back(m.to_string());
        rep.json["result"] = comps;
        for (int a = 0; a < 4; ++a)
          text << "X^q" << (a + 1) << " = " << X->comps[static_cast<size_t>(a)].to_string() << "\n";
        break;
      }
    }
    rep.text = text.str();
    return rep;
  }

  if (command == "quantize") {
    need_args(1);
    ExprPtr e = parse(args[0]);
    if (space.kind == SpaceSpec::Circle) {
      CircleValue v = eval_circle(*e);
      circle::CircleOperator op = circle::quantize(v.obs);
      rep.json["result"] = {{"A", op.A.to_string()}, {"B", op.B.to_string()},
                            {"C", op.C.to_string()}};
      text << "-i hbar A d/dphi + diag(B, C) with A = " << op.A.to_string()
           << ", B = " << op.B.to_string() << ", C = " << op.C.to_string() << "\n";
      rep.text = text.str();
      return rep;
    }
    if (space.kind != SpaceSpec::Frame) invalid_for_space("quantize");
    opalg::OpAlgebra alg;
    opalg::OpPoly result;
    if (cfg.mode == "antisym") {
      std::vector<opalg::OpGen> word;
      flatten_word(*e, Expr::WedgeProd, word);
      result = alg.quantize_antisym(word);
    } else {
      frame::FrameSpace sp(space.n);
      FrameValue v = eval_frame(*e, sp);
      result = opalg::quantize_observable(alg, *v.obs);
    }
    rep.json["result"] = oppoly_json(result);
    text << result.to_string() << "\n";
    for (const auto& [w, c] : result.terms()) {
      bool only_ids = !w.empty();
      for (const auto& g : w) only_ids = only_ids && g.kind == opalg::OpGen::I;
      if (only_ids && !c.coeff(2).is_zero()) {
        std::string note =
            "identity-word hbar^2 coefficient is the engine's exact permutation average; the "
            "printed value for the quartic word is -1/3 where the average gives -1/2";
        rep.json["paper_notes"].push_back(note);
        text << "note: " << note << "\n";
      }
    }
    rep.text = text.str();
    return rep;
  }

  if (command == "project") {
    need_args(1);
    if (space.kind != SpaceSpec::Frame) invalid_for_space("project");
    frame::FrameSpace sp(space.n);
    frame::CotangentSpace cs(space.n);
    ExprPtr e = parse(args[0]);
    FrameValue v = eval_frame(*e, sp);
    std::optional<std::vector<Rational>> alpha;
    if (!cfg.alpha.empty()) alpha = cfg.alpha;
    MultiPoly out = frame::project_to_cotangent(cs, *v.obs, alpha);
    rep.json["result"] = out.to_string();
    text << out.to_string() << "\n";
    rep.text = text.str();
    return rep;
  }

  if (command == "kernel") {
    need_args(0);
    if (space.kind == SpaceSpec::Circle) {
      auto k = circle::jform_kernel(cfg.max_mode, cfg.max_deg);
      ordered_json basis = ordered_json::array();
      for (const auto& [f1, f2] : k.basis)
        basis.push_back({{"f1", f1.to_string()}, {"f2", f2.to_string()}});
      rep.json["result"] = {{"dimension", k.basis.size()}, {"basis", basis}};
      text << "kernel dimension " << k.basis.size() << "\n";
      for (const auto& [f1, f2] : k.basis)
        text << "  f1 = " << f1.to_string() << ", f2 = " << f2.to_string() << "\n";
      std::string note =
          "the constant pair spans the kernel; the printed count keeps only the constant "
          "function B";
      rep.json["paper_notes"].push_back(note);
      rep.text = text.str();
      return rep;
    }
    if (space.kind == SpaceSpec::C2 || space.kind == SpaceSpec::S3) {
      auto k = csphere::spin_kernel(cfg.max_deg);
      ordered_json basis = ordered_json::array();
      for (const auto& f : k.basis) basis.push_back(f.to_string());
      rep.json["result"] = {{"dimension", k.basis.size()},
                            {"spin_dimension", k.spin_part.size()},
                            {"basis", basis}};
      text << "kernel dimension " << k.basis.size() << " (spin part "
           << k.spin_part.size() << ")\n";
      for (const auto& f : k.basis) text << "  " << f.to_string() << "\n";
      rep.text = text.str();
      return rep;
    }
    invalid_for_space("kernel");
  }

  throw std::invalid_argument("unknown command: " + command);
}

}  // namespace nsym::runner
