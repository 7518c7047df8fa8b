#include "segtool/program.hpp"

#include <cctype>
#include <set>
#include <sstream>

namespace segtool {

namespace {

enum class Tok { ident, integer, sym, end };

struct Token {
  Tok kind = Tok::end;
  std::string text;
  int line = 1;
  int column = 1;
};

class Lexer {
 public:
  explicit Lexer(std::string_view src) : src_(src) {}

  std::vector<Token> run() {
    std::vector<Token> out;
    for (;;) {
      skip_space();
      Token t;
      t.line = line_;
      t.column = col_;
      if (pos_ >= src_.size()) {
        out.push_back(t);
        return out;
      }
      const char c = src_[pos_];
      if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
        t.kind = Tok::ident;
        while (pos_ < src_.size() &&
               (std::isalnum(static_cast<unsigned char>(src_[pos_])) || src_[pos_] == '_'))
          t.text += advance();
      } else if (std::isdigit(static_cast<unsigned char>(c))) {
        t.kind = Tok::integer;
        while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_])))
          t.text += advance();
      } else if (std::string_view("+-*/^(),;:=").find(c) != std::string_view::npos) {
        t.kind = Tok::sym;
        t.text = advance();
      } else {
        throw ParseError(ErrorCode::syntax,
                         "unexpected character '" + std::string(1, c) + "'", line_, col_);
      }
      out.push_back(std::move(t));
    }
  }

 private:
  char advance() {
    const char c = src_[pos_++];
    if (c == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    return c;
  }

  void skip_space() {
    while (pos_ < src_.size()) {
      const char c = src_[pos_];
      if (c == '#') {
        while (pos_ < src_.size() && src_[pos_] != '\n') advance();
      } else if (std::isspace(static_cast<unsigned char>(c))) {
        advance();
      } else {
        break;
      }
    }
  }

  std::string_view src_;
  std::size_t pos_ = 0;
  int line_ = 1;
  int col_ = 1;
};

class Parser {
 public:
  explicit Parser(std::vector<Token> toks) : toks_(std::move(toks)) {}

  SourceProgram run() {
    while (peek().kind != Tok::end) {
      const Token& t = peek();
      if (t.kind == Tok::ident && t.text == "ring") {
        ring_stmt();
      } else if (t.kind == Tok::ident && t.text == "ideal") {
        ideal_stmt();
      } else if (t.kind == Tok::ident && t.text == "point") {
        point_stmt();
      } else {
        fail(t, "expected 'ring', 'ideal' or 'point'");
      }
    }
    return std::move(prog_);
  }

 private:
  const Token& peek() const { return toks_[pos_]; }
  const Token& next() { return toks_[pos_ == toks_.size() - 1 ? pos_ : pos_++]; }

  [[noreturn]] static void fail(const Token& t, const std::string& msg,
                                ErrorCode code = ErrorCode::syntax) {
    const std::string found = t.kind == Tok::end ? "end of input" : "'" + t.text + "'";
    throw ParseError(code, msg + " (found " + found + ")", t.line, t.column);
  }

  bool at_sym(char c) const { return peek().kind == Tok::sym && peek().text[0] == c; }

  void expect_sym(char c) {
    if (!at_sym(c)) fail(peek(), std::string("expected '") + c + "'");
    next();
  }

  const Token& expect_ident(const char* what) {
    if (peek().kind != Tok::ident) fail(peek(), std::string("expected ") + what);
    return next();
  }

  void check_fresh(const Token& name) {
    if (prog_.ring->index_of(name.text))
      throw ParseError(ErrorCode::syntax, "'" + name.text + "' is a variable of the ring",
                       name.line, name.column);
    if (!names_.insert(name.text).second)
      throw ParseError(ErrorCode::syntax, "'" + name.text + "' is already defined", name.line,
                       name.column);
  }

  void require_ring(const Token& at) {
    if (!prog_.ring)
      throw ParseError(ErrorCode::no_ring, "no ring in scope", at.line, at.column);
  }

  void ring_stmt() {
    const Token kw = next();
    if (prog_.ring)
      throw ParseError(ErrorCode::duplicate_ring, "a ring is already declared", kw.line,
                       kw.column);
    const Token name = expect_ident("ring name");
    const Token vars = expect_ident("'vars'");
    if (vars.text != "vars") fail(vars, "expected 'vars'");
    std::vector<std::string> names;
    std::set<std::string> seen;
    while (peek().kind == Tok::ident) {
      const Token& v = next();
      if (!seen.insert(v.text).second)
        throw ParseError(ErrorCode::syntax, "variable '" + v.text + "' repeated", v.line,
                         v.column);
      names.push_back(v.text);
    }
    if (names.size() < 2) fail(peek(), "a projective ring needs at least two variables");
    if (names.size() > kMaxVars)
      fail(peek(), "at most " + std::to_string(kMaxVars) + " variables are supported");
    expect_sym(';');
    names_.insert(name.text);
    prog_.ring = Ring::make(name.text, std::move(names));
  }

  void ideal_stmt() {
    const Token kw = next();
    require_ring(kw);
    const Token name = expect_ident("ideal name");
    check_fresh(name);
    expect_sym('=');
    IdealDef def{name.text, {}, kw.line};
    def.generators.push_back(poly());
    while (at_sym(',')) {
      next();
      def.generators.push_back(poly());
    }
    expect_sym(';');
    prog_.ideals.push_back(std::move(def));
  }

  Rational rational_literal() {
    bool neg = false;
    if (at_sym('-')) {
      next();
      neg = true;
    }
    if (peek().kind != Tok::integer) fail(peek(), "expected a number");
    Rational q(Integer(next().text));
    if (at_sym('/')) {
      next();
      if (peek().kind != Tok::integer) fail(peek(), "expected a denominator");
      const Token& den = next();
      Integer d(den.text);
      if (d == 0) throw ParseError(ErrorCode::syntax, "zero denominator", den.line, den.column);
      q /= Rational(d);
    }
    q.canonicalize();
    return neg ? Rational(-q) : q;
  }

  void point_stmt() {
    const Token kw = next();
    require_ring(kw);
    const Token name = expect_ident("point name");
    check_fresh(name);
    expect_sym('=');
    expect_sym('(');
    PointDef def{name.text, {}, kw.line};
    def.coords.push_back(rational_literal());
    while (at_sym(':')) {
      next();
      def.coords.push_back(rational_literal());
    }
    expect_sym(')');
    if (def.coords.size() != prog_.ring->num_vars())
      throw ParseError(ErrorCode::syntax,
                       "point '" + def.name + "' has " + std::to_string(def.coords.size()) +
                           " coordinates, ring has " +
                           std::to_string(prog_.ring->num_vars()) + " variables",
                       kw.line, kw.column);
    bool all_zero = true;
    for (const auto& c : def.coords) all_zero = all_zero && c == 0;
    if (all_zero)
      throw ParseError(ErrorCode::syntax, "point '" + def.name + "' has all coordinates zero",
                       kw.line, kw.column);
    expect_sym(';');
    prog_.points.push_back(std::move(def));
  }

  Polynomial poly() {
    Polynomial acc = term();
    while (at_sym('+') || at_sym('-')) {
      const bool minus = next().text[0] == '-';
      Polynomial t = term();
      acc = minus ? acc - t : acc + t;
    }
    return acc;
  }

  Polynomial term() {
    Polynomial acc = factor();
    while (at_sym('*')) {
      next();
      acc = acc * factor();
    }
    return acc;
  }

  Polynomial factor() {
    Polynomial base = atom();
    if (at_sym('^')) {
      next();
      if (peek().kind != Tok::integer) fail(peek(), "expected a non-negative exponent");
      const Token& e = next();
      if (e.text.size() > 4 || std::stoi(e.text) > 1000)
        throw ParseError(ErrorCode::syntax, "exponent too large", e.line, e.column);
      base = base.pow(static_cast<unsigned>(std::stoi(e.text)));
    }
    return base;
  }

  Polynomial atom() {
    const Token& t = peek();
    if (at_sym('-')) {
      next();
      return -factor();
    }
    if (at_sym('(')) {
      next();
      Polynomial p = poly();
      expect_sym(')');
      return p;
    }
    if (t.kind == Tok::integer) return Polynomial::constant(prog_.ring, rational_literal());
    if (t.kind == Tok::ident) {
      const Token& v = next();
      if (auto idx = prog_.ring->index_of(v.text)) return Polynomial::variable(prog_.ring, *idx);
      throw ParseError(ErrorCode::undefined_identifier,
                       "undefined identifier '" + v.text + "'", v.line, v.column);
    }
    fail(t, "expected a polynomial expression");
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
  SourceProgram prog_;
  std::set<std::string> names_;
};

}  // namespace

const IdealDef* SourceProgram::find_ideal(std::string_view name) const {
  for (const auto& d : ideals)
    if (d.name == name) return &d;
  return nullptr;
}

const PointDef* SourceProgram::find_point(std::string_view name) const {
  for (const auto& p : points)
    if (p.name == name) return &p;
  return nullptr;
}

Ideal SourceProgram::projective_ideal(std::string_view name) const {
  const IdealDef* def = find_ideal(name);
  if (!def)
    throw ParseError(ErrorCode::undefined_identifier,
                     "undefined ideal '" + std::string(name) + "'", 0, 0);
  for (const auto& g : def->generators)
    if (!g.is_homogeneous())
      throw ParseError(ErrorCode::inhomogeneous,
                       "ideal '" + def->name + "' is not homogeneous: " + g.to_string(),
                       def->line, 0);
  return Ideal(ring, def->generators);
}

std::vector<Rational> SourceProgram::point(std::string_view name) const {
  const PointDef* def = find_point(name);
  if (!def)
    throw ParseError(ErrorCode::undefined_identifier,
                     "undefined point '" + std::string(name) + "'", 0, 0);
  return def->coords;
}

bool operator==(const SourceProgram& a, const SourceProgram& b) {
  if (static_cast<bool>(a.ring) != static_cast<bool>(b.ring)) return false;
  if (a.ring && !(*a.ring == *b.ring)) return false;
  if (a.ideals.size() != b.ideals.size() || a.points.size() != b.points.size()) return false;
  for (std::size_t i = 0; i < a.ideals.size(); ++i) {
    const auto &x = a.ideals[i], &y = b.ideals[i];
    if (x.name != y.name || x.generators.size() != y.generators.size()) return false;
    for (std::size_t j = 0; j < x.generators.size(); ++j)
      if (x.generators[j].terms().size() != y.generators[j].terms().size() ||
          x.generators[j].to_string() != y.generators[j].to_string())
        return false;
  }
  for (std::size_t i = 0; i < a.points.size(); ++i)
    if (a.points[i].name != b.points[i].name || a.points[i].coords != b.points[i].coords)
      return false;
  return true;
}

SourceProgram parse_source(std::string_view text) {
  return Parser(Lexer(text).run()).run();
}

std::string pretty_print(const SourceProgram& program) {
  std::ostringstream os;
  if (!program.ring) return "";
  os << "ring " << program.ring->name() << " vars";
  for (const auto& v : program.ring->variables()) os << ' ' << v;
  os << ";\n";
  for (const auto& d : program.ideals) {
    os << "ideal " << d.name << " =";
    for (std::size_t j = 0; j < d.generators.size(); ++j)
      os << (j ? ", " : " ") << d.generators[j].to_string();
    os << ";\n";
  }
  for (const auto& p : program.points) {
    os << "point " << p.name << " = (";
    for (std::size_t j = 0; j < p.coords.size(); ++j)
      os << (j ? " : " : "") << rational_string(p.coords[j]);
    os << ");\n";
  }
  return os.str();
}

}  // namespace segtool
