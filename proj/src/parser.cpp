#include <algorithm>
#include <cctype>
#include <map>
#include <memory>
#include <optional>
#include <sstream>

#include "painleve/linalg.hpp"
#include "painleve/system.hpp"

namespace painleve {

ParseError::ParseError(Kind kind, int line, int column, const std::string& message)
    : std::runtime_error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " +
                         message),
      kind_(kind),
      line_(line),
      column_(column),
      detail_(message) {}

const char* to_string(ParseError::Kind kind) {
  switch (kind) {
    case ParseError::Kind::Syntax: return "syntax";
    case ParseError::Kind::NonPolynomial: return "non-polynomial";
    case ParseError::Kind::NonAutonomous: return "non-autonomous";
    case ParseError::Kind::NonlinearSecondDerivative: return "nonlinear-second-derivative";
    case ParseError::Kind::MissingEquation: return "missing-equation";
    case ParseError::Kind::UnknownSymbol: return "unknown-symbol";
  }
  return "unknown";
}

namespace {

using Kind = ParseError::Kind;

struct Token {
  enum Type { Ident, Int, Op, End } type;
  std::string text;
  int primes = 0;
  int column = 0;
};

std::vector<Token> tokenize(const std::string& line, int line_no) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < line.size()) {
    const char c = line[i];
    const int col = static_cast<int>(i) + 1;
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
    } else if (c == '#') {
      break;
    } else if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t j = i;
      while (j < line.size() && (std::isalnum(static_cast<unsigned char>(line[j])) || line[j] == '_')) ++j;
      Token t{Token::Ident, line.substr(i, j - i), 0, col};
      while (j < line.size() && line[j] == '\'') {
        ++t.primes;
        ++j;
      }
      out.push_back(std::move(t));
      i = j;
    } else if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t j = i;
      while (j < line.size() && std::isdigit(static_cast<unsigned char>(line[j]))) ++j;
      if (j < line.size() && (line[j] == '.' || line[j] == 'e' || line[j] == 'E'))
        throw ParseError(Kind::Syntax, line_no, col, "decimal literals are not supported, write p/q");
      out.push_back({Token::Int, line.substr(i, j - i), 0, col});
      i = j;
    } else if (std::string("+-*/^()=,").find(c) != std::string::npos) {
      out.push_back({Token::Op, std::string(1, c), 0, col});
      ++i;
    } else if (c == '\'') {
      throw ParseError(Kind::Syntax, line_no, col, "derivative mark without a variable");
    } else {
      throw ParseError(Kind::Syntax, line_no, col, std::string("unexpected character '") + c + "'");
    }
  }
  out.push_back({Token::End, "", 0, static_cast<int>(line.size()) + 1});
  return out;
}

struct Expr {
  enum Op { Num, Omega, Sym, Add, Sub, Mul, Div, Neg, Pow } op;
  int column = 0;
  Rational value;
  std::string name;  // symbol with primes, e.g. "x''"
  unsigned exponent = 0;
  std::unique_ptr<Expr> lhs, rhs;
};

using ExprPtr = std::unique_ptr<Expr>;

ExprPtr make(Expr::Op op, int column, ExprPtr lhs = nullptr, ExprPtr rhs = nullptr) {
  auto e = std::make_unique<Expr>();
  e->op = op;
  e->column = column;
  e->lhs = std::move(lhs);
  e->rhs = std::move(rhs);
  return e;
}

// expr   := term (('+' | '-') term)*
// term   := unary (('*' | '/') unary)*
// unary  := ('+' | '-') unary | power
// power  := primary ('^' INT)?
// primary:= INT | 'w' | IDENT '{0,2} | '(' expr ')'
class Parser {
public:
  Parser(std::vector<Token> tokens, int line) : toks_(std::move(tokens)), line_(line) {}

  ExprPtr expression() {
    ExprPtr e = term();
    while (is_op("+") || is_op("-")) {
      const Token op = next();
      e = make(op.text == "+" ? Expr::Add : Expr::Sub, op.column, std::move(e), term());
    }
    return e;
  }

  const Token& peek() const { return toks_[pos_]; }
  Token next() { return toks_[pos_++]; }
  bool is_op(const char* s) const { return peek().type == Token::Op && peek().text == s; }
  int line() const { return line_; }

  [[noreturn]] void fail(Kind kind, const Token& at, const std::string& msg) const {
    throw ParseError(kind, line_, at.column, msg);
  }

private:
  ExprPtr term() {
    ExprPtr e = unary();
    while (is_op("*") || is_op("/")) {
      const Token op = next();
      e = make(op.text == "*" ? Expr::Mul : Expr::Div, op.column, std::move(e), unary());
    }
    return e;
  }

  ExprPtr unary() {
    if (is_op("-")) {
      const Token op = next();
      return make(Expr::Neg, op.column, unary());
    }
    if (is_op("+")) {
      next();
      return unary();
    }
    return power();
  }

  ExprPtr power() {
    ExprPtr base = primary();
    if (!is_op("^")) return base;
    const Token op = next();
    if (is_op("-")) fail(Kind::NonPolynomial, peek(), "negative exponents are not polynomial");
    if (is_op("(")) fail(Kind::NonPolynomial, peek(), "exponent must be a non-negative integer literal");
    if (peek().type != Token::Int) fail(Kind::NonPolynomial, peek(), "exponent must be a non-negative integer literal");
    const Token e = next();
    if (e.text.size() > 4) fail(Kind::Syntax, e, "exponent too large");
    ExprPtr p = make(Expr::Pow, op.column, std::move(base));
    p->exponent = static_cast<unsigned>(std::stoul(e.text));
    if (is_op("^")) fail(Kind::Syntax, peek(), "chained exponents need parentheses");
    return p;
  }

  ExprPtr primary() {
    const Token& t = peek();
    if (t.type == Token::Int) {
      Token tok = next();
      ExprPtr e = make(Expr::Num, tok.column);
      e->value = Rational(mpz_class(tok.text));
      return e;
    }
    if (t.type == Token::Ident) {
      Token tok = next();
      if (is_op("(")) fail(Kind::NonPolynomial, tok, "function call '" + tok.text + "' is not polynomial");
      if (tok.text == "t") fail(Kind::NonAutonomous, tok, "the independent variable t may not appear explicitly");
      if (tok.text == "w") {
        if (tok.primes) fail(Kind::Syntax, tok, "the constant w cannot be differentiated");
        return make(Expr::Omega, tok.column);
      }
      if (tok.primes > 2) fail(Kind::Syntax, tok, "derivatives above second order are not supported");
      ExprPtr e = make(Expr::Sym, tok.column);
      e->name = prime(tok.text, tok.primes);
      return e;
    }
    if (is_op("(")) {
      next();
      ExprPtr e = expression();
      if (!is_op(")")) fail(Kind::Syntax, peek(), "expected ')'");
      next();
      return e;
    }
    if (t.type == Token::End) fail(Kind::Syntax, t, "unexpected end of line");
    fail(Kind::Syntax, t, "unexpected '" + t.text + "'");
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
  int line_;
};

ParamPoly evaluate(const Expr& e, int line) {
  switch (e.op) {
    case Expr::Num: return ParamPoly(FieldElem(e.value));
    case Expr::Omega: return ParamPoly(FieldElem::omega());
    case Expr::Sym: return ParamPoly::symbol(e.name);
    case Expr::Add: return evaluate(*e.lhs, line) + evaluate(*e.rhs, line);
    case Expr::Sub: return evaluate(*e.lhs, line) - evaluate(*e.rhs, line);
    case Expr::Mul: return evaluate(*e.lhs, line) * evaluate(*e.rhs, line);
    case Expr::Neg: return -evaluate(*e.lhs, line);
    case Expr::Pow: return evaluate(*e.lhs, line).pow(e.exponent);
    case Expr::Div: {
      const ParamPoly d = evaluate(*e.rhs, line);
      if (!d.is_constant()) throw ParseError(Kind::NonPolynomial, line, e.column, "division by a non-constant expression");
      if (d.is_zero()) throw ParseError(Kind::NonPolynomial, line, e.column, "division by zero");
      return evaluate(*e.lhs, line) * d.constant_term().inverse();
    }
  }
  return ParamPoly();
}

void collect_symbols(const Expr& e, std::vector<std::pair<std::string, int>>& out) {
  if (e.op == Expr::Sym) out.emplace_back(e.name, e.column);
  if (e.lhs) collect_symbols(*e.lhs, out);
  if (e.rhs) collect_symbols(*e.rhs, out);
}

std::string base_name(const std::string& sym) { return sym.substr(0, sym.find('\'')); }
int prime_count(const std::string& sym) { return static_cast<int>(std::count(sym.begin(), sym.end(), '\'')); }

struct Equation {
  int line;
  ParamPoly poly;
  std::vector<std::pair<std::string, int>> symbols;
};

}  // namespace

ParamPoly parse_polynomial(std::string_view text) {
  Parser parser(tokenize(std::string(text), 1), 1);
  if (parser.peek().type == Token::End) parser.fail(Kind::Syntax, parser.peek(), "empty expression");
  const ExprPtr e = parser.expression();
  if (parser.peek().type != Token::End) parser.fail(Kind::Syntax, parser.peek(), "unexpected '" + parser.peek().text + "'");
  return evaluate(*e, 1);
}

ODESystem parse_system(std::string_view source) {
  std::vector<std::string> declared;
  int vars_line = 0;
  std::vector<Equation> equations;

  std::istringstream in{std::string(source)};
  std::string text;
  int line_no = 0;
  while (std::getline(in, text)) {
    ++line_no;
    if (!text.empty() && text.back() == '\r') text.pop_back();
    std::vector<Token> toks = tokenize(text, line_no);
    if (toks.front().type == Token::End) continue;

    if (toks.front().type == Token::Ident && toks.front().text == "vars" && toks.front().primes == 0 &&
        toks.size() > 1 && toks[1].type == Token::Ident) {
      if (vars_line) throw ParseError(Kind::Syntax, line_no, 1, "duplicate vars line");
      if (!equations.empty()) throw ParseError(Kind::Syntax, line_no, 1, "vars must precede the equations");
      vars_line = line_no;
      std::size_t i = 1;
      while (true) {
        const Token& t = toks[i];
        if (t.type != Token::Ident || t.primes) throw ParseError(Kind::Syntax, line_no, t.column, "expected a variable name");
        if (t.text == "w" || t.text == "t" || t.text == "vars")
          throw ParseError(Kind::Syntax, line_no, t.column, "'" + t.text + "' is reserved");
        if (std::find(declared.begin(), declared.end(), t.text) != declared.end())
          throw ParseError(Kind::Syntax, line_no, t.column, "variable '" + t.text + "' declared twice");
        declared.push_back(t.text);
        ++i;
        if (toks[i].type == Token::End) break;
        if (toks[i].type != Token::Op || toks[i].text != ",")
          throw ParseError(Kind::Syntax, line_no, toks[i].column, "expected ','");
        ++i;
      }
      continue;
    }

    Parser parser(std::move(toks), line_no);
    ExprPtr lhs = parser.expression();
    ExprPtr rhs;
    if (parser.is_op("=")) {
      parser.next();
      rhs = parser.expression();
    }
    if (parser.peek().type != Token::End) parser.fail(Kind::Syntax, parser.peek(), "unexpected '" + parser.peek().text + "'");

    Equation eq{line_no, evaluate(*lhs, line_no), {}};
    collect_symbols(*lhs, eq.symbols);
    if (rhs) {
      eq.poly -= evaluate(*rhs, line_no);
      collect_symbols(*rhs, eq.symbols);
    }
    equations.push_back(std::move(eq));
  }

  // Variable order.
  std::vector<std::string> vars = declared;
  if (vars.empty()) {
    for (const auto& eq : equations)
      for (const auto& [sym, col] : eq.symbols)
        if (prime_count(sym) == 2 && std::find(vars.begin(), vars.end(), base_name(sym)) == vars.end())
          vars.push_back(base_name(sym));
    for (const auto& eq : equations)
      for (const auto& [sym, col] : eq.symbols)
        if (std::find(vars.begin(), vars.end(), base_name(sym)) == vars.end()) vars.push_back(base_name(sym));
  } else {
    for (const auto& eq : equations)
      for (const auto& [sym, col] : eq.symbols)
        if (std::find(vars.begin(), vars.end(), base_name(sym)) == vars.end())
          throw ParseError(Kind::UnknownSymbol, eq.line, col, "unknown symbol '" + base_name(sym) + "'");
  }

  const int anchor = vars_line ? vars_line : 1;
  if (equations.empty()) throw ParseError(Kind::MissingEquation, anchor, 1, "no equations");
  for (const auto& v : vars) {
    bool found = false;
    for (const auto& eq : equations)
      for (const auto& [sym, col] : eq.symbols) found = found || sym == prime(v, 2);
    if (!found) throw ParseError(Kind::MissingEquation, anchor, 1, "no equation determines " + prime(v, 2));
  }
  if (equations.size() < vars.size())
    throw ParseError(Kind::MissingEquation, anchor, 1,
                     std::to_string(vars.size()) + " variables but only " + std::to_string(equations.size()) +
                         " equations");
  if (equations.size() > vars.size())
    throw ParseError(Kind::Syntax, equations[vars.size()].line, 1, "more equations than variables");

  // Split each equation into K * x'' + rest with K constant.
  const Eigen::Index n = static_cast<Eigen::Index>(vars.size());
  Matrix<FieldElem> k = zero_matrix<FieldElem>(n, n);
  std::vector<ParamPoly> rest(vars.size());
  std::map<std::string, ParamPoly> drop;
  for (const auto& v : vars) drop[prime(v, 2)] = ParamPoly();
  for (Eigen::Index i = 0; i < n; ++i) {
    const Equation& eq = equations[i];
    for (Eigen::Index j = 0; j < n; ++j) {
      const ParamPoly d = eq.poly.derivative(prime(vars[j], 2));
      if (!d.is_constant()) {
        int col = 1;
        for (const auto& [sym, c] : eq.symbols)
          if (sym == prime(vars[j], 2)) {
            col = c;
            break;
          }
        throw ParseError(Kind::NonlinearSecondDerivative, eq.line, col,
                         prime(vars[j], 2) + " must appear linearly with a constant coefficient");
      }
      k(i, j) = d.constant_term();
    }
    rest[i] = eq.poly.substitute(drop).pruned();
  }
  const RowEchelon<FieldElem> e = rref(k);
  if (e.rank() < n) {
    throw ParseError(Kind::MissingEquation, equations.back().line, 1,
                     "the equations do not determine every second derivative");
  }

  ODESystem sys;
  sys.var_names = vars;
  for (Eigen::Index i = 0; i < n; ++i) {
    ParamPoly f;
    for (Eigen::Index j = 0; j < n; ++j)
      if (!e.transform(i, j).is_zero()) f -= rest[j] * e.transform(i, j);
    sys.rhs.push_back(f.pruned());
  }
  return sys;
}

}  // namespace painleve
