#include "nsym/expr.hpp"

#include <cctype>

namespace nsym::expr {

ExprPtr Expr::make_atom(AtomKind k, int i, int j) {
  auto e = std::make_shared<Expr>();
  e->kind = Atom;
  e->atom = k;
  e->i = i;
  e->j = j;
  return e;
}
ExprPtr Expr::make_scalar(HPoly value) {
  auto e = std::make_shared<Expr>();
  e->kind = Scalar;
  e->scalar = std::move(value);
  return e;
}
ExprPtr Expr::make_sum(std::vector<ExprPtr> kids, std::vector<int> signs) {
  auto e = std::make_shared<Expr>();
  e->kind = Sum;
  e->kids = std::move(kids);
  e->signs = std::move(signs);
  return e;
}
ExprPtr Expr::make_scale(HPoly s, ExprPtr inner) {
  // collapse nested scales, unit scales, and scalar leaves so that
  // parse(print(e)) reproduces the tree
  if (inner->kind == Scalar) return make_scalar(s * inner->scalar);
  if (inner->kind == Scale) return make_scale(s * inner->scalar, inner->kids[0]);
  if (s == HPoly(1)) return inner;
  auto e = std::make_shared<Expr>();
  e->kind = Scale;
  e->scalar = std::move(s);
  e->kids = {std::move(inner)};
  return e;
}
ExprPtr Expr::make_binary(Kind k, ExprPtr a, ExprPtr b) {
  auto e = std::make_shared<Expr>();
  e->kind = k;
  e->kids = {std::move(a), std::move(b)};
  return e;
}

bool equal(const Expr& a, const Expr& b) {
  if (a.kind != b.kind) return false;
  switch (a.kind) {
    case Expr::Atom:
      return a.atom == b.atom && a.i == b.i && a.j == b.j;
    case Expr::Scalar:
      return a.scalar == b.scalar;
    case Expr::Scale:
      if (!(a.scalar == b.scalar)) return false;
      break;
    case Expr::Sum:
      if (a.signs != b.signs) return false;
      break;
    default:
      break;
  }
  if (a.kids.size() != b.kids.size()) return false;
  for (size_t k = 0; k < a.kids.size(); ++k)
    if (!equal(*a.kids[k], *b.kids[k])) return false;
  return true;
}

namespace {

struct Token {
  enum Kind {
    End,
    Plus,
    Minus,
    Star,
    Slash,
    SymOp,    // (*)
    WedgeOp,  // (^)
    LParen,
    RParen,
    LBrace,
    RBrace,
    Comma,
    Integer,
    ImagUnit,
    HbarSym,
    AtomTok,
  } kind = End;
  long long value = 0;
  AtomKind atom = AtomKind::PiHat;
  int i = 0, j = 0;
  int line = 1, col = 1;
};

class Lexer {
 public:
  explicit Lexer(const std::string& text) : s_(text) {}

  Token next() {
    skip_ws();
    Token t;
    t.line = line_;
    t.col = col_;
    if (pos_ >= s_.size()) return t;
    char c = s_[pos_];
    if (c == '(') {
      if (pos_ + 2 < s_.size() && s_[pos_ + 2] == ')' &&
          (s_[pos_ + 1] == '*' || s_[pos_ + 1] == '^')) {
        t.kind = s_[pos_ + 1] == '*' ? Token::SymOp : Token::WedgeOp;
        advance(3);
        return t;
      }
      t.kind = Token::LParen;
      advance(1);
      return t;
    }
    static const struct {
      char ch;
      Token::Kind kind;
    } singles[] = {{')', Token::RParen}, {'{', Token::LBrace}, {'}', Token::RBrace},
                   {',', Token::Comma},  {'+', Token::Plus},   {'-', Token::Minus},
                   {'*', Token::Star},   {'/', Token::Slash}};
    for (auto s : singles)
      if (c == s.ch) {
        t.kind = s.kind;
        advance(1);
        return t;
      }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      long long v = 0;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
        v = v * 10 + (s_[pos_] - '0');
        advance(1);
      }
      t.kind = Token::Integer;
      t.value = v;
      return t;
    }
    if (std::isalpha(static_cast<unsigned char>(c))) return lex_word(t);
    throw ParseError(std::string("unexpected character '") + c + "'", line_, col_);
  }

 private:
  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) {
      if (s_[pos_] == '\n') {
        ++line_;
        col_ = 1;
        ++pos_;
      } else {
        advance(1);
      }
    }
  }

  void advance(size_t k) {
    pos_ += k;
    col_ += static_cast<int>(k);
  }

  int read_index(const char* what) {
    if (pos_ >= s_.size() || !std::isdigit(static_cast<unsigned char>(s_[pos_])))
      throw ParseError(std::string("expected ") + what + " index", line_, col_);
    int v = 0;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
      v = v * 10 + (s_[pos_] - '0');
      advance(1);
    }
    return v;
  }

  Token lex_word(Token t) {
    // peel one identifier character at a time so index suffixes stay intact
    if (s_.compare(pos_, 3, "pi_") == 0) {
      advance(3);
      t.kind = Token::AtomTok;
      t.atom = AtomKind::PiHat;
      t.i = read_index("pi");
      return t;
    }
    if (s_[pos_] == 'q' && pos_ + 1 < s_.size() && s_[pos_ + 1] == '^') {
      advance(2);
      t.kind = Token::AtomTok;
      t.i = read_index("q");
      if (pos_ < s_.size() && s_[pos_] == '_') {
        advance(1);
        t.j = read_index("frame slot");
        t.atom = AtomKind::QHatFull;
      } else {
        t.atom = AtomKind::QHat;
      }
      return t;
    }
    if (s_.compare(pos_, 2, "I_") == 0) {
      advance(2);
      t.kind = Token::AtomTok;
      t.atom = AtomKind::IHat;
      t.i = read_index("I");
      return t;
    }
    size_t start = pos_;
    while (pos_ < s_.size() &&
           (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_'))
      advance(1);
    std::string w = s_.substr(start, pos_ - start);
    if (w == "x" || w == "y" || w == "p") {
      t.kind = Token::AtomTok;
      t.atom = w == "x" ? AtomKind::GenX : (w == "y" ? AtomKind::GenY : AtomKind::GenP);
      return t;
    }
    if (w == "x1" || w == "x2" || w == "x3") {
      t.kind = Token::AtomTok;
      t.atom = w == "x1" ? AtomKind::Spin1 : (w == "x2" ? AtomKind::Spin2 : AtomKind::Spin3);
      return t;
    }
    if (w == "q1" || w == "q2") {
      t.kind = Token::AtomTok;
      t.atom = w == "q1" ? AtomKind::CQ1 : AtomKind::CQ2;
      return t;
    }
    if (w == "cosphi" || w == "sinphi") {
      t.kind = Token::AtomTok;
      t.atom = w == "cosphi" ? AtomKind::CosPhi : AtomKind::SinPhi;
      return t;
    }
    if (w == "hbar") {
      t.kind = Token::HbarSym;
      return t;
    }
    if (w == "i") {
      t.kind = Token::ImagUnit;
      return t;
    }
    throw ParseError("unknown symbol '" + w + "'", t.line, t.col);
  }

  const std::string& s_;
  size_t pos_ = 0;
  int line_ = 1, col_ = 1;
};

class Parser {
 public:
  explicit Parser(const std::string& text) : lex_(text) { shift(); }

  ExprPtr parse_expression() {
    ExprPtr e = parse_sum();
    expect(Token::End, "end of input");
    return e;
  }

 private:
  void shift() { cur_ = lex_.next(); }

  void expect(Token::Kind k, const char* what) {
    if (cur_.kind != k) throw ParseError(std::string("expected ") + what, cur_.line, cur_.col);
  }

  ExprPtr parse_sum() {
    std::vector<ExprPtr> kids;
    std::vector<int> signs;
    int sign = 1;
    if (cur_.kind == Token::Minus) {
      sign = -1;
      shift();
    }
    kids.push_back(parse_term());
    signs.push_back(sign);
    while (cur_.kind == Token::Plus || cur_.kind == Token::Minus) {
      int s = cur_.kind == Token::Plus ? 1 : -1;
      shift();
      kids.push_back(parse_term());
      signs.push_back(s);
    }
    if (kids.size() == 1)
      return signs[0] > 0 ? kids[0] : Expr::make_scale(HPoly(-1), kids[0]);
    return Expr::make_sum(std::move(kids), std::move(signs));
  }

  ExprPtr parse_term() {
    ExprPtr e = parse_factor();
    while (cur_.kind == Token::SymOp || cur_.kind == Token::WedgeOp) {
      Expr::Kind k = cur_.kind == Token::SymOp ? Expr::SymProd : Expr::WedgeProd;
      shift();
      ExprPtr rhs = parse_factor();
      e = Expr::make_binary(k, std::move(e), std::move(rhs));
    }
    return e;
  }

  bool at_scalar_start() const {
    return cur_.kind == Token::Integer || cur_.kind == Token::ImagUnit ||
           cur_.kind == Token::HbarSym;
  }

  // literal := INT ['/' INT] | 'i' | 'hbar'
  HPoly parse_scalar_value() {
    if (cur_.kind == Token::ImagUnit) {
      shift();
      return HPoly::i();
    }
    if (cur_.kind == Token::HbarSym) {
      shift();
      return HPoly::hbar();
    }
    expect(Token::Integer, "number");
    long long num = cur_.value;
    shift();
    long long den = 1;
    if (cur_.kind == Token::Slash) {
      shift();
      expect(Token::Integer, "denominator");
      den = cur_.value;
      shift();
    }
    return HPoly(Rational(num, den));
  }

  ExprPtr parse_factor() {
    if (at_scalar_start()) {
      HPoly s = parse_scalar_value();
      if (cur_.kind == Token::Star) {
        shift();
        return Expr::make_scale(std::move(s), parse_factor());
      }
      return Expr::make_scalar(std::move(s));
    }
    if (cur_.kind == Token::AtomTok) {
      ExprPtr a = Expr::make_atom(cur_.atom, cur_.i, cur_.j);
      shift();
      return a;
    }
    if (cur_.kind == Token::LBrace) {
      shift();
      ExprPtr lhs = parse_sum();
      expect(Token::Comma, "',' in bracket");
      shift();
      ExprPtr rhs = parse_sum();
      expect(Token::RBrace, "'}'");
      shift();
      return Expr::make_binary(Expr::Bracket, std::move(lhs), std::move(rhs));
    }
    if (cur_.kind == Token::LParen) {
      shift();
      ExprPtr e = parse_sum();
      expect(Token::RParen, "')'");
      shift();
      return e;
    }
    throw ParseError("expected an atom, literal, bracket, or '('", cur_.line, cur_.col);
  }

  Lexer lex_;
  Token cur_;
};

}  // namespace

ExprPtr parse(const std::string& text) { return Parser(text).parse_expression(); }

namespace {

int precedence(Expr::Kind k) {
  switch (k) {
    case Expr::Sum:
      return 0;
    case Expr::SymProd:
    case Expr::WedgeProd:
      return 1;
    case Expr::Scale:
      return 2;
    default:
      return 3;
  }
}

// Renders a scalar as source pieces joined by '*'; the grammar only admits
// rationals, i, and hbar powers with a nonnegative leading sign, so the
// caller peels a leading minus first.
std::string scalar_source(const HPoly& h) {
  int hdeg = h.degree() < 0 ? 0 : h.degree();
  GaussianRational c = h.coeff(hdeg);
  bool imag = c.re().is_zero() && !c.im().is_zero();
  Rational mag = imag ? c.im() : c.re();
  std::vector<std::string> pieces;
  if (!(mag == Rational(1)) || (!imag && hdeg == 0)) pieces.push_back(mag.to_string());
  if (imag) pieces.push_back("i");
  for (int k = 0; k < hdeg; ++k) pieces.push_back("hbar");
  std::string out;
  for (size_t k = 0; k < pieces.size(); ++k) out += (k ? " * " : "") + pieces[k];
  return out;
}

bool scalar_negative(const HPoly& h) {
  int hdeg = h.degree() < 0 ? 0 : h.degree();
  GaussianRational c = h.coeff(hdeg);
  Rational lead = c.re().is_zero() ? c.im() : c.re();
  return lead < Rational(0);
}

HPoly scalar_negate(const HPoly& h) { return -h; }

void print_rec(const Expr& e, std::string& out, int parent_prec);

void print_rec(const Expr& e, std::string& out, int parent_prec) {
  int prec = precedence(e.kind);
  bool parens = prec < parent_prec;
  if (parens) out += "(";
  switch (e.kind) {
    case Expr::Atom:
      switch (e.atom) {
        case AtomKind::PiHat:
          out += "pi_" + std::to_string(e.i);
          break;
        case AtomKind::QHat:
          out += "q^" + std::to_string(e.i);
          break;
        case AtomKind::QHatFull:
          out += "q^" + std::to_string(e.i) + "_" + std::to_string(e.j);
          break;
        case AtomKind::IHat:
          out += "I_" + std::to_string(e.i);
          break;
        case AtomKind::GenX:
          out += "x";
          break;
        case AtomKind::GenY:
          out += "y";
          break;
        case AtomKind::GenP:
          out += "p";
          break;
        case AtomKind::Spin1:
          out += "x1";
          break;
        case AtomKind::Spin2:
          out += "x2";
          break;
        case AtomKind::Spin3:
          out += "x3";
          break;
        case AtomKind::CQ1:
          out += "q1";
          break;
        case AtomKind::CQ2:
          out += "q2";
          break;
        case AtomKind::CosPhi:
          out += "cosphi";
          break;
        case AtomKind::SinPhi:
          out += "sinphi";
          break;
      }
      break;
    case Expr::Scalar:
      if (scalar_negative(e.scalar)) {
        // a standalone negative literal needs sum-level context
        if (parent_prec > 0 && !parens) out += "(";
        out += "-" + scalar_source(scalar_negate(e.scalar));
        if (parent_prec > 0 && !parens) out += ")";
      } else {
        out += scalar_source(e.scalar);
      }
      break;
    case Expr::Scale: {
      bool neg = scalar_negative(e.scalar);
      HPoly mag = neg ? scalar_negate(e.scalar) : e.scalar;
      std::string body;
      if (mag == HPoly(1)) {
        print_rec(*e.kids[0], body, 3);
      } else {
        body = scalar_source(mag) + " * ";
        print_rec(*e.kids[0], body, 3);
      }
      if (neg) {
        if (parent_prec > 0 && !parens) out += "(";
        out += "-" + body;
        if (parent_prec > 0 && !parens) out += ")";
      } else {
        out += body;
      }
      break;
    }
    case Expr::Sum:
      for (size_t k = 0; k < e.kids.size(); ++k) {
        if (k == 0) {
          if (e.signs[0] < 0) out += "-";
        } else {
          out += e.signs[k] > 0 ? " + " : " - ";
        }
        print_rec(*e.kids[k], out, precedence(Expr::Sum) + 1);
      }
      break;
    case Expr::SymProd:
    case Expr::WedgeProd: {
      const char* op = e.kind == Expr::SymProd ? " (*) " : " (^) ";
      print_rec(*e.kids[0], out, prec);
      out += op;
      print_rec(*e.kids[1], out, prec + 1);
      break;
    }
    case Expr::Bracket:
      out += "{";
      print_rec(*e.kids[0], out, 0);
      out += ", ";
      print_rec(*e.kids[1], out, 0);
      out += "}";
      break;
  }
  if (parens) out += ")";
}

}  // namespace

std::string print(const Expr& e) {
  std::string out;
  print_rec(e, out, 0);
  return out;
}

}  // namespace nsym::expr
