#include "sqc/parser.hpp"

#include <cmath>
#include <cstdio>
#include <functional>
#include <map>
#include <numbers>
#include <sstream>

namespace sqc {

// ---------------------------------------------------------------- sugar

Expr site_operator(SiteOp op, std::size_t j) {
  switch (op) {
    case SiteOp::A: return annihilate(j);
    case SiteOp::Adag: return dagger(annihilate(j));
    case SiteOp::N0: return compose(annihilate(j), dagger(annihilate(j)));
    case SiteOp::N1: return compose(dagger(annihilate(j)), annihilate(j));
    case SiteOp::I: return identity(j);
    case SiteOp::X: return add(dagger(annihilate(j)), annihilate(j));
    case SiteOp::Y:
      // i a^dag - i a
      return add(dagger(annihilate(j, cplx(0.0, -1.0))), annihilate(j, cplx(0.0, -1.0)));
    case SiteOp::Z:
      // a a^dag - a^dag a
      return add(compose(annihilate(j), dagger(annihilate(j))),
                 compose(dagger(annihilate(j, -1.0)), annihilate(j)));
  }
  return identity(j);
}

Expr embed(const Expr& local, std::size_t j, const Shape& shape) {
  if (j >= shape.size()) throw Error(ErrorCode::IndexOutOfRange, "site index out of range");
  auto at = [&](std::size_t k) { return k == j ? local : identity(k); };
  Expr acc = at(shape.size() - 1);
  for (std::size_t k = shape.size() - 1; k-- > 0;) acc = tensor(at(k), acc);
  return acc;
}

Expr desugar_indexed(SiteOp op, std::size_t j, const Shape& shape) {
  if (j >= shape.size()) throw Error(ErrorCode::IndexOutOfRange, "site index out of range");
  return embed(site_operator(op, j), j, shape);
}

Expr identity_chain(const Shape& shape) {
  if (shape.empty()) throw Error(ErrorCode::ShapeMismatch, "empty shape");
  Expr acc = identity(shape.size() - 1);
  for (std::size_t k = shape.size() - 1; k-- > 0;) acc = tensor(identity(k), acc);
  return acc;
}

namespace {

bool has_leaf(const Expr& e) {
  if (!e) return false;
  if (e->op == Op::Annihilate) return true;
  return has_leaf(e->lhs) || has_leaf(e->rhs);
}

// Replaces the first two-level identity with z*(a a^dag + a^dag a).
Expr scale_identity(const Expr& e, cplx z, const Shape& shape, bool& done) {
  if (done) return e;
  switch (e->op) {
    case Op::Identity: {
      if (e->site >= shape.size() || shape[e->site].dimension() != 2) return e;
      done = true;
      auto s = e->site;
      return add(compose(annihilate(s, z), dagger(annihilate(s))),
                 compose(dagger(annihilate(s, std::conj(z))), annihilate(s)));
    }
    case Op::Dagger: {
      auto in = scale_identity(e->lhs, std::conj(z), shape, done);
      return done ? dagger(in) : e;
    }
    case Op::Sum: {
      bool d1 = false, d2 = false;
      auto l = scale_identity(e->lhs, z, shape, d1);
      auto r = scale_identity(e->rhs, z, shape, d2);
      if (!d1 || !d2) throw Error(ErrorCode::ShapeMismatch,
                                  "scalar multiple of the identity needs a two-level site");
      done = true;
      return add(l, r);
    }
    case Op::Tensor:
    case Op::Compose: {
      auto l = scale_identity(e->lhs, z, shape, done);
      if (done) return e->op == Op::Tensor ? tensor(l, e->rhs) : compose(l, e->rhs);
      auto r = scale_identity(e->rhs, z, shape, done);
      if (done) return e->op == Op::Tensor ? tensor(e->lhs, r) : compose(e->lhs, r);
      return e;
    }
    default: return e;
  }
}

Expr scale_rec(const Expr& e, cplx z, const Shape& shape) {
  switch (e->op) {
    case Op::Annihilate: return annihilate(e->site, z * e->amp);
    case Op::Dagger: return dagger(scale_rec(e->lhs, std::conj(z), shape));
    case Op::Sum: return add(scale_rec(e->lhs, z, shape), scale_rec(e->rhs, z, shape));
    case Op::Tensor:
    case Op::Compose: {
      bool left = has_leaf(e->lhs);
      auto l = left ? scale_rec(e->lhs, z, shape) : e->lhs;
      auto r = left ? e->rhs : scale_rec(e->rhs, z, shape);
      return e->op == Op::Tensor ? tensor(l, r) : compose(l, r);
    }
    case Op::Identity: break;
  }
  bool done = false;
  auto out = scale_identity(e, z, shape, done);
  if (!done)
    throw Error(ErrorCode::ShapeMismatch, "scalar multiple of the identity needs a two-level site");
  return out;
}

}  // namespace

Expr scale(const Expr& e, cplx z, const Shape& shape) {
  if (z == cplx(1.0, 0.0)) return e;
  if (!has_leaf(e)) {
    bool done = false;
    auto out = scale_identity(e, z, shape, done);
    if (!done)
      throw Error(ErrorCode::ShapeMismatch,
                  "scalar multiple of the identity needs a two-level site");
    return out;
  }
  return scale_rec(e, z, shape);
}

// ---------------------------------------------------------------- printing

std::string format_real(double x) {
  if (x == 0.0) x = 0.0;  // drop negative zero
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  std::string s = buf;
  if (s.find_first_of(".eEn") == std::string::npos) s += ".0";
  return s;
}

std::string format_scalar(cplx z) {
  return "(" + format_real(z.real()) + " + " + format_real(z.imag()) + "*i)";
}

std::string print(const Expr& e) {
  switch (e->op) {
    case Op::Annihilate: {
      std::string a = "a[" + std::to_string(e->site) + "]";
      if (e->amp == cplx(1.0, 0.0)) return a;
      return "(" + format_scalar(e->amp) + " * " + a + ")";
    }
    case Op::Identity: return "I[" + std::to_string(e->site) + "]";
    case Op::Dagger: return "dag(" + print(e->lhs) + ")";
    case Op::Tensor: return "(" + print(e->lhs) + " (x) " + print(e->rhs) + ")";
    case Op::Sum: return "(" + print(e->lhs) + " + " + print(e->rhs) + ")";
    case Op::Compose: return "(" + print(e->lhs) + " . " + print(e->rhs) + ")";
  }
  return "?";
}

std::string print(const ProgramFile& p) {
  std::ostringstream os;
  os << "sites [";
  for (std::size_t k = 0; k < p.shape.size(); ++k) {
    if (k) os << ", ";
    os << to_string(p.shape[k]);
  }
  os << "];\n";
  for (const auto& [name, z] : p.constants) os << "const " << name << " = " << format_scalar(z) << ";\n";
  os << p.name << " = " << print(p.hamiltonian) << ";\n";
  if (p.simulate) {
    const auto& s = *p.simulate;
    os << "simulate {\n";
    if (s.time) os << "  time = " << format_real(*s.time) << ";\n";
    if (s.algorithm) os << "  algorithm = " << *s.algorithm << ";\n";
    if (s.steps) os << "  steps = " << *s.steps << ";\n";
    if (s.samples) os << "  samples = " << *s.samples << ";\n";
    if (s.epsilon) os << "  epsilon = " << format_real(*s.epsilon) << ";\n";
    if (s.target) os << "  target = " << *s.target << ";\n";
    if (s.seed) os << "  seed = " << *s.seed << ";\n";
    if (s.order) os << "  order = \"" << *s.order << "\";\n";
    if (s.drop_trivial) os << "  drop_trivial = " << (*s.drop_trivial ? "true" : "false") << ";\n";
    if (s.gadget_lambda) os << "  gadget = " << format_real(*s.gadget_lambda) << ";\n";
    os << "}\n";
  }
  return os.str();
}

bool structurally_equal(const ProgramFile& a, const ProgramFile& b) {
  return a.shape == b.shape && a.constants == b.constants && a.name == b.name &&
         structurally_equal(a.hamiltonian, b.hamiltonian) && a.simulate == b.simulate;
}

// ---------------------------------------------------------------- lexer

namespace {

enum class Tok { Ident, Number, String, Sym, End };

struct Token {
  Tok kind;
  std::string text;
  double number = 0.0;
  int line = 1;
  int col = 1;
};

std::vector<Token> lex(const std::string& src) {
  std::vector<Token> out;
  int line = 1, col = 1;
  std::size_t i = 0;
  auto advance = [&](std::size_t n) {
    for (std::size_t k = 0; k < n && i < src.size(); ++k, ++i) {
      if (src[i] == '\n') { ++line; col = 1; } else { ++col; }
    }
  };
  while (i < src.size()) {
    char c = src[i];
    if (c == ' ' || c == '\t' || c == '\r' || c == '\n') { advance(1); continue; }
    if (c == '#' || (c == '/' && i + 1 < src.size() && src[i + 1] == '/')) {
      while (i < src.size() && src[i] != '\n') advance(1);
      continue;
    }
    Token t{Tok::Sym, "", 0.0, line, col};
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t j = i;
      while (j < src.size() && (std::isalnum(static_cast<unsigned char>(src[j])) || src[j] == '_')) ++j;
      t.kind = Tok::Ident;
      t.text = src.substr(i, j - i);
      advance(j - i);
    } else if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t j = i;
      while (j < src.size() && std::isdigit(static_cast<unsigned char>(src[j]))) ++j;
      if (j + 1 < src.size() && src[j] == '.' && std::isdigit(static_cast<unsigned char>(src[j + 1]))) {
        ++j;
        while (j < src.size() && std::isdigit(static_cast<unsigned char>(src[j]))) ++j;
      }
      if (j < src.size() && (src[j] == 'e' || src[j] == 'E')) {
        std::size_t k = j + 1;
        if (k < src.size() && (src[k] == '+' || src[k] == '-')) ++k;
        if (k < src.size() && std::isdigit(static_cast<unsigned char>(src[k]))) {
          j = k;
          while (j < src.size() && std::isdigit(static_cast<unsigned char>(src[j]))) ++j;
        }
      }
      t.kind = Tok::Number;
      t.text = src.substr(i, j - i);
      t.number = std::stod(t.text);
      advance(j - i);
    } else if (c == '"') {
      std::size_t j = i + 1;
      while (j < src.size() && src[j] != '"' && src[j] != '\n') ++j;
      if (j >= src.size() || src[j] != '"') throw Error(ErrorCode::Parse, "unterminated string", line, col);
      t.kind = Tok::String;
      t.text = src.substr(i + 1, j - i - 1);
      advance(j - i + 1);
    } else if (src.compare(i, 3, "(x)") == 0) {
      t.text = "(x)";
      advance(3);
    } else if (src.compare(i, 2, "..") == 0) {
      t.text = "..";
      advance(2);
    } else if (src.compare(i, 2, "\xC3\x97") == 0) {
      t.kind = Tok::Ident;
      t.text = "x";
      i += 2;
      ++col;
    } else if (std::string("[](){};,=+-*/.").find(c) != std::string::npos) {
      t.text = std::string(1, c);
      advance(1);
    } else {
      throw Error(ErrorCode::Parse, std::string("unexpected character '") + c + "'", line, col);
    }
    out.push_back(t);
  }
  out.push_back(Token{Tok::End, "<end of input>", 0.0, line, col});
  return out;
}

// ---------------------------------------------------------------- parser

struct Value {
  bool is_op = false;
  cplx scalar{0.0, 0.0};
  Expr op;
};

class Parser {
 public:
  explicit Parser(const std::string& text) : toks_(lex(text)) {}

  ProgramFile run() {
    ProgramFile p;
    bool have_h = false;
    while (peek().kind != Tok::End) {
      const Token& t = peek();
      if (t.kind == Tok::Ident && t.text == "sites") {
        if (have_shape_) fail(t, "duplicate sites declaration");
        next();
        parse_sites();
        p.shape = shape_;
      } else if (t.kind == Tok::Ident && t.text == "const") {
        next();
        const Token& name = expect_ident();
        check_free_name(name);
        expect("=");
        Value v = parse_expr();
        if (v.is_op) fail(name, "constant '" + name.text + "' must be a scalar");
        expect(";");
        consts_[name.text] = v.scalar;
        p.constants.emplace_back(name.text, v.scalar);
      } else if (t.kind == Tok::Ident && t.text == "simulate") {
        next();
        p.simulate = parse_simulate();
      } else if (t.kind == Tok::Ident && peek(1).kind == Tok::Sym && peek(1).text == "=") {
        if (have_h) fail(t, "only one Hamiltonian per program");
        if (!have_shape_) fail(t, "sites must be declared before the Hamiltonian");
        p.name = t.text;
        next();
        next();
        Value v = parse_expr();
        if (!v.is_op) fail(t, "Hamiltonian must be an operator expression");
        if (peek().kind != Tok::End) expect(";");
        p.hamiltonian = v.op;
        have_h = true;
      } else {
        fail(t, "unexpected '" + t.text + "'");
      }
    }
    if (!have_shape_) fail(peek(), "missing sites declaration");
    if (!have_h) fail(peek(), "missing Hamiltonian");
    return p;
  }

 private:
  std::vector<Token> toks_;
  std::size_t pos_ = 0;
  Shape shape_;
  bool have_shape_ = false;
  std::map<std::string, cplx> consts_;
  std::map<std::string, long> loops_;

  const Token& peek(std::size_t k = 0) const {
    return toks_[std::min(pos_ + k, toks_.size() - 1)];
  }
  const Token& next() {
    const Token& t = toks_[pos_];
    if (pos_ + 1 < toks_.size()) ++pos_;
    return t;
  }
  [[noreturn]] void fail(const Token& t, const std::string& msg, ErrorCode code = ErrorCode::Parse) const {
    throw Error(code, msg, t.line, t.col);
  }
  bool accept(const std::string& sym) {
    if (peek().kind == Tok::Sym && peek().text == sym) { next(); return true; }
    return false;
  }
  bool accept_ident(const std::string& word) {
    if (peek().kind == Tok::Ident && peek().text == word) { next(); return true; }
    return false;
  }
  const Token& expect(const std::string& sym) {
    if (peek().kind != Tok::Sym || peek().text != sym)
      fail(peek(), "expected '" + sym + "' but found '" + peek().text + "'");
    return next();
  }
  const Token& expect_ident() {
    if (peek().kind != Tok::Ident) fail(peek(), "expected identifier but found '" + peek().text + "'");
    return next();
  }
  long expect_int() {
    const Token& t = peek();
    Value v = parse_unary();
    return as_int(v, t);
  }
  long as_int(const Value& v, const Token& at) const {
    if (v.is_op || v.scalar.imag() != 0.0 || std::floor(v.scalar.real()) != v.scalar.real())
      fail(at, "expected an integer");
    return static_cast<long>(v.scalar.real());
  }
  void check_free_name(const Token& name) const {
    static const char* reserved[] = {"a", "adag", "n0", "n1", "I", "X", "Y", "Z", "dag",
                                     "sum", "in", "pi", "i", "sqrt", "exp", "cos", "sin",
                                     "conj", "sites", "const", "simulate"};
    for (const char* r : reserved)
      if (name.text == r) fail(name, "'" + name.text + "' is reserved");
    if (consts_.count(name.text)) fail(name, "constant '" + name.text + "' already defined");
  }

  void parse_sites() {
    expect("[");
    do {
      const Token& t = expect_ident();
      SiteType st;
      if (t.text == "fermion") {
        if (accept("(")) {
          const Token& at = peek();
          long m = expect_int();
          expect(")");
          if (m != 2) fail(at, "fermion sites are two-dimensional", ErrorCode::FermionDimension);
        }
        st = SiteType::fermion();
      } else if (t.text == "boson") {
        expect("(");
        const Token& at = peek();
        long m = expect_int();
        expect(")");
        if (m < 2) fail(at, "boson dimension must be at least 2", ErrorCode::ShapeMismatch);
        st = SiteType::boson(static_cast<int>(m));
      } else {
        fail(t, "unknown site type '" + t.text + "'");
      }
      long count = 1;
      if (accept_ident("x")) {
        const Token& at = peek();
        count = expect_int();
        if (count < 1) fail(at, "site repetition must be positive");
      }
      for (long k = 0; k < count; ++k) shape_.push_back(st);
    } while (accept(","));
    expect("]");
    expect(";");
    have_shape_ = true;
  }

  SimulationBlock parse_simulate() {
    SimulationBlock s;
    expect("{");
    while (!accept("}")) {
      const Token& key = expect_ident();
      expect("=");
      if (key.text == "algorithm" || key.text == "target") {
        const Token& v = expect_ident();
        (key.text == "algorithm" ? s.algorithm : s.target) = v.text;
      } else if (key.text == "order") {
        if (peek().kind != Tok::String) fail(peek(), "order expects a quoted string");
        s.order = next().text;
      } else if (key.text == "drop_trivial") {
        const Token& v = expect_ident();
        if (v.text != "true" && v.text != "false") fail(v, "expected true or false");
        s.drop_trivial = v.text == "true";
      } else {
        const Token& at = peek();
        Value v = parse_expr();
        if (v.is_op || v.scalar.imag() != 0.0) fail(at, "expected a real number");
        double x = v.scalar.real();
        if (key.text == "time") s.time = x;
        else if (key.text == "epsilon") s.epsilon = x;
        else if (key.text == "gadget") s.gadget_lambda = x;
        else if (key.text == "steps") s.steps = static_cast<int>(as_int(v, at));
        else if (key.text == "samples") s.samples = static_cast<int>(as_int(v, at));
        else if (key.text == "seed") s.seed = static_cast<std::uint64_t>(as_int(v, at));
        else fail(key, "unknown simulate key '" + key.text + "'");
      }
      expect(";");
    }
    accept(";");
    return s;
  }

  // expr := tensor (('+'|'-') tensor)*
  Value parse_expr() {
    Value acc = parse_tensor();
    while (true) {
      const Token& t = peek();
      if (accept("+")) acc = combine_add(acc, parse_tensor(), 1.0, t);
      else if (accept("-")) acc = combine_add(acc, parse_tensor(), -1.0, t);
      else return acc;
    }
  }

  Value combine_add(const Value& l, const Value& r, double sign, const Token& at) {
    if (l.is_op != r.is_op) fail(at, "cannot add a scalar and an operator; write z*I for a multiple of the identity");
    if (!l.is_op) return Value{false, l.scalar + sign * r.scalar, nullptr};
    Expr rhs = sign < 0 ? scale(r.op, -1.0, shape_) : r.op;
    return Value{true, 0.0, add(l.op, rhs)};
  }

  Value parse_tensor() {
    Value acc = parse_product();
    while (true) {
      const Token& t = peek();
      if (!accept("(x)")) return acc;
      Value r = parse_product();
      if (!acc.is_op || !r.is_op) fail(t, "tensor product needs operators on both sides");
      acc = Value{true, 0.0, tensor(acc.op, r.op)};
    }
  }

  Value parse_product() {
    Value acc = parse_unary();
    while (true) {
      const Token& t = peek();
      if (accept("*")) {
        Value r = parse_unary();
        if (acc.is_op && r.is_op) fail(t, "operator product uses '.', not '*'");
        if (!acc.is_op && !r.is_op) acc.scalar *= r.scalar;
        else if (acc.is_op) acc = Value{true, 0.0, scale_at(acc.op, r.scalar, t)};
        else acc = Value{true, 0.0, scale_at(r.op, acc.scalar, t)};
      } else if (accept("/")) {
        Value r = parse_unary();
        if (r.is_op) fail(t, "cannot divide by an operator");
        if (r.scalar == cplx(0.0)) fail(t, "division by zero");
        if (acc.is_op) acc = Value{true, 0.0, scale_at(acc.op, 1.0 / r.scalar, t)};
        else acc.scalar /= r.scalar;
      } else if (accept(".")) {
        Value r = parse_unary();
        if (!acc.is_op || !r.is_op) fail(t, "composition needs operators on both sides");
        acc = Value{true, 0.0, compose(acc.op, r.op)};
      } else {
        return acc;
      }
    }
  }

  Expr scale_at(const Expr& e, cplx z, const Token& at) {
    try {
      return scale(e, z, shape_);
    } catch (const Error& err) {
      fail(at, err.what(), err.code());
    }
  }

  Value parse_unary() {
    const Token& t = peek();
    if (accept("-")) {
      Value v = parse_unary();
      if (v.is_op) return Value{true, 0.0, scale_at(v.op, -1.0, t)};
      return Value{false, -v.scalar, nullptr};
    }
    if (accept("+")) return parse_unary();
    return parse_primary();
  }

  std::size_t site_index(const Token& at) {
    const Token& t = peek();
    Value v = parse_expr();
    long j = as_int(v, t);
    if (!have_shape_) fail(at, "sites must be declared before site operators");
    if (j < 0 || static_cast<std::size_t>(j) >= shape_.size())
      fail(t, "site index " + std::to_string(j) + " out of range", ErrorCode::IndexOutOfRange);
    return static_cast<std::size_t>(j);
  }

  Value parse_primary() {
    const Token& t = peek();
    if (t.kind == Tok::Number) {
      next();
      return Value{false, t.number, nullptr};
    }
    if (accept("(")) {
      Value v = parse_expr();
      expect(")");
      return v;
    }
    if (t.kind != Tok::Ident) fail(t, "unexpected '" + t.text + "'");
    next();
    const std::string& w = t.text;
    if (w == "pi") return Value{false, std::numbers::pi, nullptr};
    if (w == "i") return Value{false, cplx(0.0, 1.0), nullptr};
    if (w == "sqrt" || w == "exp" || w == "cos" || w == "sin" || w == "conj") {
      expect("(");
      Value v = parse_expr();
      expect(")");
      if (v.is_op) fail(t, w + " expects a scalar");
      cplx z = v.scalar;
      if (w == "sqrt") z = std::sqrt(z);
      else if (w == "exp") z = std::exp(z);
      else if (w == "cos") z = std::cos(z);
      else if (w == "sin") z = std::sin(z);
      else z = std::conj(z);
      return Value{false, z, nullptr};
    }
    if (w == "dag") {
      expect("(");
      Value v = parse_expr();
      expect(")");
      if (!v.is_op) return Value{false, std::conj(v.scalar), nullptr};
      return Value{true, 0.0, dagger(v.op)};
    }
    if (w == "sum") return parse_sum(t);
    if ((w == "a" || w == "I") && peek().kind == Tok::Sym && peek().text == "[") {
      next();
      std::size_t j = site_index(t);
      expect("]");
      return Value{true, 0.0, w == "a" ? annihilate(j) : identity(j)};
    }
    static const std::map<std::string, SiteOp> sugar = {
        {"a", SiteOp::A},   {"adag", SiteOp::Adag}, {"n0", SiteOp::N0}, {"n1", SiteOp::N1},
        {"I", SiteOp::I},   {"X", SiteOp::X},       {"Y", SiteOp::Y},   {"Z", SiteOp::Z}};
    if (auto it = sugar.find(w); it != sugar.end()) {
      if (w == "I" && !(peek().kind == Tok::Sym && peek().text == "(")) {
        if (!have_shape_) fail(t, "sites must be declared before site operators");
        return Value{true, 0.0, identity_chain(shape_)};
      }
      expect("(");
      std::size_t j = site_index(t);
      expect(")");
      if (it->second == SiteOp::I) return Value{true, 0.0, identity_chain(shape_)};
      return Value{true, 0.0, desugar_indexed(it->second, j, shape_)};
    }
    if (auto it = loops_.find(w); it != loops_.end())
      return Value{false, static_cast<double>(it->second), nullptr};
    if (auto it = consts_.find(w); it != consts_.end()) return Value{false, it->second, nullptr};
    fail(t, "unknown identifier '" + w + "'", ErrorCode::UnknownIdentifier);
  }

  // sum j in lo..hi { body }, inclusive range; the body is re-parsed per value.
  Value parse_sum(const Token& at) {
    const Token& var = expect_ident();
    if (loops_.count(var.text) || consts_.count(var.text))
      fail(var, "loop variable '" + var.text + "' shadows an existing name");
    if (!accept_ident("in")) fail(peek(), "expected 'in'");
    const Token& lo_tok = peek();
    long lo = as_int(parse_tensor(), lo_tok);
    if (!accept("..")) fail(peek(), "expected '..' in sum range", ErrorCode::MalformedRange);
    const Token& hi_tok = peek();
    long hi = as_int(parse_tensor(), hi_tok);
    if (hi < lo) fail(hi_tok, "empty sum range", ErrorCode::MalformedRange);
    expect("{");
    std::size_t body = pos_;
    Value acc;
    bool first = true;
    for (long v = lo; v <= hi; ++v) {
      pos_ = body;
      loops_[var.text] = v;
      Value term = parse_expr();
      if (!first && term.is_op != acc.is_op) fail(at, "sum body mixes scalars and operators");
      acc = first ? term : combine_add(acc, term, 1.0, at);
      first = false;
    }
    loops_.erase(var.text);
    expect("}");
    return acc;
  }
};

}  // namespace

ProgramFile parse(const std::string& text) { return Parser(text).run(); }

}  // namespace sqc
