// Concrete ASCII syntax for formulas and rules.
//
// Precedence, tightest first: postfix ^n, prefix ~ and n. , *, +, or/and, ->, <->.
// `*`, `+`, `or`/`and` and `<->` associate to the left, `->` to the right.
// Square brackets are interchangeable with parentheses.

#include <cctype>
#include <limits>

#include "lukadmit/formula.hpp"

namespace lukadmit {

namespace {

enum class Tok {
  End,
  Num,
  Ident,
  Tilde,
  Caret,
  Dot,
  Star,
  Plus,
  Or,
  And,
  Arrow,
  DArrow,
  LParen,
  RParen,
  LBrack,
  RBrack,
  Comma,
  Slash,
};

struct Token {
  Tok kind;
  std::string text;
  std::size_t column;  // 1-based
};

std::vector<Token> lex(std::string_view s) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < s.size()) {
    char c = s[i];
    std::size_t col = i + 1;
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t j = i;
      while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
      out.push_back({Tok::Num, std::string(s.substr(i, j - i)), col});
      i = j;
      continue;
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t j = i;
      while (j < s.size() &&
             (std::isalnum(static_cast<unsigned char>(s[j])) || s[j] == '_'))
        ++j;
      std::string word(s.substr(i, j - i));
      Tok kind = word == "or" ? Tok::Or : word == "and" ? Tok::And : Tok::Ident;
      out.push_back({kind, std::move(word), col});
      i = j;
      continue;
    }
    if (s.substr(i, 3) == "<->") {
      out.push_back({Tok::DArrow, "<->", col});
      i += 3;
      continue;
    }
    if (s.substr(i, 2) == "->") {
      out.push_back({Tok::Arrow, "->", col});
      i += 2;
      continue;
    }
    Tok kind;
    switch (c) {
      case '~': kind = Tok::Tilde; break;
      case '^': kind = Tok::Caret; break;
      case '.': kind = Tok::Dot; break;
      case '*': kind = Tok::Star; break;
      case '+': kind = Tok::Plus; break;
      case '(': kind = Tok::LParen; break;
      case ')': kind = Tok::RParen; break;
      case '[': kind = Tok::LBrack; break;
      case ']': kind = Tok::RBrack; break;
      case ',': kind = Tok::Comma; break;
      case '/': kind = Tok::Slash; break;
      default:
        throw ParseError(std::string("unknown token '") + c + "'", col);
    }
    out.push_back({kind, std::string(1, c), col});
    ++i;
  }
  out.push_back({Tok::End, "", s.size() + 1});
  return out;
}

class Parser {
 public:
  explicit Parser(std::vector<Token> toks) : toks_(std::move(toks)) {}

  Formula formula() { return parse_iff(); }

  Rule rule() {
    Rule r;
    if (peek().kind != Tok::Slash) {
      r.premises.push_back(formula());
      while (accept(Tok::Comma)) r.premises.push_back(formula());
    }
    expect(Tok::Slash, "'/'");
    r.conclusion = formula();
    return r;
  }

  void finish() {
    if (peek().kind != Tok::End) fail("unexpected '" + peek().text + "'");
  }

 private:
  const Token& peek() const { return toks_[pos_]; }
  const Token& next() { return toks_[pos_++]; }

  bool accept(Tok k) {
    if (peek().kind != k) return false;
    ++pos_;
    return true;
  }

  void expect(Tok k, const char* what) {
    if (!accept(k)) fail(std::string("expected ") + what);
  }

  [[noreturn]] void fail(const std::string& msg) const {
    const Token& t = peek();
    throw ParseError(t.kind == Tok::End ? msg + " before end of input" : msg, t.column);
  }

  std::uint32_t natural(const Token& t) {
    unsigned long long v = 0;
    for (char c : t.text) {
      v = v * 10 + static_cast<unsigned>(c - '0');
      if (v > std::numeric_limits<std::uint32_t>::max())
        throw ParseError("number too large", t.column);
    }
    return static_cast<std::uint32_t>(v);
  }

  Formula parse_iff() {
    Formula f = parse_imp();
    while (accept(Tok::DArrow)) f = iff(f, parse_imp());
    return f;
  }

  Formula parse_imp() {
    Formula f = parse_lattice();
    if (accept(Tok::Arrow)) return imp(f, parse_imp());
    return f;
  }

  Formula parse_lattice() {
    Formula f = parse_sum();
    for (;;) {
      if (accept(Tok::Or))
        f = join(f, parse_sum());
      else if (accept(Tok::And))
        f = meet(f, parse_sum());
      else
        return f;
    }
  }

  Formula parse_sum() {
    Formula f = parse_product();
    while (accept(Tok::Plus)) f = oplus(f, parse_product());
    return f;
  }

  Formula parse_product() {
    Formula f = parse_unary();
    while (accept(Tok::Star)) f = odot(f, parse_unary());
    return f;
  }

  Formula parse_unary() {
    if (accept(Tok::Tilde)) return neg(parse_unary());
    if (peek().kind == Tok::Num && toks_[pos_ + 1].kind == Tok::Dot) {
      std::uint32_t n = natural(next());
      next();
      return mult(n, parse_unary());
    }
    return parse_postfix();
  }

  Formula parse_postfix() {
    Formula f = parse_primary();
    while (accept(Tok::Caret)) {
      if (peek().kind != Tok::Num) fail("expected exponent");
      f = pow(f, natural(next()));
    }
    return f;
  }

  Formula parse_primary() {
    const Token& t = peek();
    switch (t.kind) {
      case Tok::Num:
        if (t.text == "0") {
          next();
          return Formula::zero();
        }
        if (t.text == "1") {
          next();
          return Formula::one();
        }
        fail("numeral " + t.text + " is not a constant (use n.f for multiples)");
      case Tok::Ident:
        return Formula::var(next().text);
      case Tok::LParen: {
        next();
        Formula f = parse_iff();
        expect(Tok::RParen, "')'");
        return f;
      }
      case Tok::LBrack: {
        next();
        Formula f = parse_iff();
        expect(Tok::RBrack, "']'");
        return f;
      }
      default:
        fail(t.kind == Tok::End ? "expected formula" : "unexpected '" + t.text + "'");
    }
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
};

int precedence(Op op) {
  switch (op) {
    case Op::Iff: return 0;
    case Op::Imp: return 1;
    case Op::Join:
    case Op::Meet: return 2;
    case Op::Oplus: return 3;
    case Op::Odot: return 4;
    case Op::Neg:
    case Op::Mult: return 5;
    case Op::Pow: return 6;
    default: return 7;
  }
}

const char* symbol(Op op) {
  switch (op) {
    case Op::Iff: return " <-> ";
    case Op::Imp: return " -> ";
    case Op::Join: return " or ";
    case Op::Meet: return " and ";
    case Op::Oplus: return " + ";
    case Op::Odot: return " * ";
    default: return "?";
  }
}

void print_rec(const Formula& f, std::string& out);

void print_grouped(const Formula& f, bool group, bool square, std::string& out) {
  if (!group) {
    print_rec(f, out);
    return;
  }
  out += square ? '[' : '(';
  print_rec(f, out);
  out += square ? ']' : ')';
}

void print_rec(const Formula& f, std::string& out) {
  const Op op = f.op();
  switch (op) {
    case Op::Zero: out += '0'; return;
    case Op::One: out += '1'; return;
    case Op::Var: out += f.name(); return;
    case Op::Neg:
      out += '~';
      print_grouped(f.lhs(), precedence(f.lhs().op()) < 5, false, out);
      return;
    case Op::Mult:
      out += std::to_string(f.count());
      out += '.';
      print_grouped(f.lhs(), precedence(f.lhs().op()) < 5, false, out);
      return;
    case Op::Pow:
      print_grouped(f.lhs(), precedence(f.lhs().op()) < 6, false, out);
      out += '^';
      out += std::to_string(f.count());
      return;
    default:
      break;
  }
  const int p = precedence(op);
  const bool lattice = p == 2;
  const int lp = precedence(f.lhs().op());
  const int rp = precedence(f.rhs().op());
  // Nested implications and biconditionals are always grouped; a lattice
  // operand of the other lattice connective is grouped too.
  bool group_left = lp < p || (lp == p && (op == Op::Imp || op == Op::Iff ||
                                           f.lhs().op() != op));
  bool group_right = rp <= p;
  print_grouped(f.lhs(), group_left, lattice, out);
  out += symbol(op);
  print_grouped(f.rhs(), group_right, lattice, out);
}

}  // namespace

Formula parse_formula(std::string_view text) {
  Parser p(lex(text));
  Formula f = p.formula();
  p.finish();
  return f;
}

std::string print_formula(const Formula& f) {
  std::string out;
  print_rec(f, out);
  return out;
}

Rule parse_rule(std::string_view text) {
  Parser p(lex(text));
  Rule r = p.rule();
  p.finish();
  return r;
}

std::string print_rule(const Rule& r) {
  std::string out;
  for (std::size_t i = 0; i < r.premises.size(); ++i) {
    if (i) out += ", ";
    out += print_formula(r.premises[i]);
  }
  out += r.premises.empty() ? "/ " : " / ";
  out += print_formula(r.conclusion);
  return out;
}

}  // namespace lukadmit
