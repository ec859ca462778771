#include "qplane/parser.hpp"

#include "qplane/errors.hpp"

#include <cctype>
#include <utility>
#include <vector>

namespace qplane {

ExprNode::Ptr ExprNode::variable(char name) {
  auto n = std::make_unique<ExprNode>();
  n->kind = Kind::Var;
  n->var = name;
  return n;
}

ExprNode::Ptr ExprNode::int_lit(mpz_class v) {
  auto n = std::make_unique<ExprNode>();
  n->kind = Kind::IntLit;
  n->int_value = std::move(v);
  return n;
}

ExprNode::Ptr ExprNode::rat_lit(mpq_class v) {
  auto n = std::make_unique<ExprNode>();
  n->kind = Kind::RatLit;
  n->rat_value = std::move(v);
  return n;
}

ExprNode::Ptr ExprNode::add(Ptr l, Ptr r) {
  auto n = std::make_unique<ExprNode>();
  n->kind = Kind::Add;
  n->left = std::move(l);
  n->right = std::move(r);
  return n;
}

ExprNode::Ptr ExprNode::sub(Ptr l, Ptr r) {
  auto n = std::make_unique<ExprNode>();
  n->kind = Kind::Sub;
  n->left = std::move(l);
  n->right = std::move(r);
  return n;
}

ExprNode::Ptr ExprNode::mul(Ptr l, Ptr r) {
  auto n = std::make_unique<ExprNode>();
  n->kind = Kind::Mul;
  n->left = std::move(l);
  n->right = std::move(r);
  return n;
}

ExprNode::Ptr ExprNode::pow(Ptr base, unsigned exponent) {
  auto n = std::make_unique<ExprNode>();
  n->kind = Kind::Pow;
  n->left = std::move(base);
  n->exponent = exponent;
  return n;
}

ExprNode::Ptr ExprNode::exp_q(Ptr argument) {
  auto n = std::make_unique<ExprNode>();
  n->kind = Kind::ExpQ;
  n->left = std::move(argument);
  return n;
}

bool ExprNode::contains_exp_q() const {
  if (kind == Kind::ExpQ)
    return true;
  if (left && left->contains_exp_q())
    return true;
  return right && right->contains_exp_q();
}

namespace {

enum class Tok {
  End,
  Plus,
  Minus,
  Star,
  Slash,
  Caret,
  LParen,
  RParen,
  Integer,
  VarX,
  VarY,
  VarQ,
  ExpQ,
};

struct Token {
  Tok kind;
  std::size_t offset;
  mpz_class value; // Integer only
};

const char *token_name(Tok t) {
  switch (t) {
  case Tok::End: return "end of input";
  case Tok::Plus: return "'+'";
  case Tok::Minus: return "'-'";
  case Tok::Star: return "'*'";
  case Tok::Slash: return "'/'";
  case Tok::Caret: return "'^'";
  case Tok::LParen: return "'('";
  case Tok::RParen: return "')'";
  case Tok::Integer: return "integer";
  case Tok::VarX: return "'x'";
  case Tok::VarY: return "'y'";
  case Tok::VarQ: return "'q'";
  case Tok::ExpQ: return "'exp_q'";
  }
  return "?";
}

class Lexer {
public:
  explicit Lexer(std::string_view input) : input_(input) { advance(); }

  const Token &current() const { return tok_; }

  void advance() {
    while (pos_ < input_.size() && std::isspace(static_cast<unsigned char>(input_[pos_])))
      ++pos_;
    tok_.offset = pos_;
    if (pos_ >= input_.size()) {
      tok_.kind = Tok::End;
      return;
    }
    const char c = input_[pos_];
    switch (c) {
    case '+': tok_.kind = Tok::Plus; ++pos_; return;
    case '-': tok_.kind = Tok::Minus; ++pos_; return;
    case '*': tok_.kind = Tok::Star; ++pos_; return;
    case '/': tok_.kind = Tok::Slash; ++pos_; return;
    case '^': tok_.kind = Tok::Caret; ++pos_; return;
    case '(': tok_.kind = Tok::LParen; ++pos_; return;
    case ')': tok_.kind = Tok::RParen; ++pos_; return;
    default: break;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < input_.size() &&
             std::isdigit(static_cast<unsigned char>(input_[pos_])))
        ++pos_;
      tok_.kind = Tok::Integer;
      tok_.value = mpz_class(std::string(input_.substr(start, pos_ - start)), 10);
      return;
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = pos_;
      while (pos_ < input_.size() &&
             (std::isalnum(static_cast<unsigned char>(input_[pos_])) ||
              input_[pos_] == '_'))
        ++pos_;
      std::string_view word = input_.substr(start, pos_ - start);
      if (word == "x") { tok_.kind = Tok::VarX; return; }
      if (word == "y") { tok_.kind = Tok::VarY; return; }
      if (word == "q") { tok_.kind = Tok::VarQ; return; }
      if (word == "exp_q") { tok_.kind = Tok::ExpQ; return; }
      throw SyntaxError(start, {"'x'", "'y'", "'q'", "'exp_q'"},
                        "unknown identifier '" + std::string(word) +
                            "' at byte " + std::to_string(start) +
                            "; expected 'x', 'y', 'q' or 'exp_q'");
    }
    throw SyntaxError(pos_, {},
                      std::string("unexpected character '") + c + "' at byte " +
                          std::to_string(pos_));
  }

private:
  std::string_view input_;
  std::size_t pos_ = 0;
  Token tok_;
};

class Parser {
public:
  explicit Parser(std::string_view input) : lex_(input) {}

  ExprNode::Ptr run() {
    ExprNode::Ptr e = parse_expr();
    if (lex_.current().kind != Tok::End)
      fail({"'+'", "'-'", "'*'", "'^'", "end of input"});
    return e;
  }

private:
  [[noreturn]] void fail(std::vector<std::string> expected) {
    const Token &t = lex_.current();
    std::string msg = "unexpected " + std::string(token_name(t.kind)) +
                      " at byte " + std::to_string(t.offset) + "; expected ";
    for (std::size_t i = 0; i < expected.size(); ++i) {
      if (i > 0)
        msg += (i + 1 == expected.size()) ? " or " : ", ";
      msg += expected[i];
    }
    throw SyntaxError(t.offset, std::move(expected), msg);
  }

  bool accept(Tok kind) {
    if (lex_.current().kind != kind)
      return false;
    lex_.advance();
    return true;
  }

  static bool starts_atom(Tok kind) {
    switch (kind) {
    case Tok::Integer:
    case Tok::VarX:
    case Tok::VarY:
    case Tok::VarQ:
    case Tok::ExpQ:
    case Tok::LParen:
      return true;
    default:
      return false;
    }
  }

  ExprNode::Ptr parse_expr() {
    const bool negated = accept(Tok::Minus);
    ExprNode::Ptr e = parse_term();
    if (negated)
      e = ExprNode::sub(ExprNode::int_lit(0), std::move(e));
    for (;;) {
      if (accept(Tok::Plus))
        e = ExprNode::add(std::move(e), parse_term());
      else if (accept(Tok::Minus))
        e = ExprNode::sub(std::move(e), parse_term());
      else
        return e;
    }
  }

  ExprNode::Ptr parse_term() {
    ExprNode::Ptr e = parse_factor();
    for (;;) {
      if (accept(Tok::Star))
        e = ExprNode::mul(std::move(e), parse_factor());
      else if (starts_atom(lex_.current().kind)) // juxtaposition
        e = ExprNode::mul(std::move(e), parse_factor());
      else
        return e;
    }
  }

  ExprNode::Ptr parse_factor() {
    ExprNode::Ptr base = parse_atom();
    if (!accept(Tok::Caret))
      return base;
    if (lex_.current().kind != Tok::Integer)
      fail({"integer"});
    const mpz_class &e = lex_.current().value;
    if (e > kMaxExponent)
      throw Error(errc::exponent_too_large,
                  "exponent " + e.get_str() + " exceeds the limit of " +
                      std::to_string(kMaxExponent));
    unsigned exponent = static_cast<unsigned>(e.get_ui());
    lex_.advance();
    return ExprNode::pow(std::move(base), exponent);
  }

  ExprNode::Ptr parse_atom() {
    const Token tok = lex_.current();
    switch (tok.kind) {
    case Tok::Integer: {
      lex_.advance();
      if (accept(Tok::Slash)) {
        if (lex_.current().kind != Tok::Integer)
          fail({"integer"});
        mpz_class den = lex_.current().value;
        lex_.advance();
        if (den == 0)
          throw Error(errc::division_by_zero,
                      "rational literal with zero denominator at byte " +
                          std::to_string(tok.offset));
        mpq_class r(tok.value, den);
        r.canonicalize();
        return ExprNode::rat_lit(std::move(r));
      }
      return ExprNode::int_lit(tok.value);
    }
    case Tok::VarX:
      lex_.advance();
      return ExprNode::variable('x');
    case Tok::VarY:
      lex_.advance();
      return ExprNode::variable('y');
    case Tok::VarQ:
      lex_.advance();
      return ExprNode::variable('q');
    case Tok::ExpQ: {
      lex_.advance();
      if (!accept(Tok::LParen))
        fail({"'('"});
      ExprNode::Ptr arg = parse_expr();
      if (!accept(Tok::RParen))
        fail({"')'"});
      return ExprNode::exp_q(std::move(arg));
    }
    case Tok::LParen: {
      lex_.advance();
      ExprNode::Ptr e = parse_expr();
      if (!accept(Tok::RParen))
        fail({"')'"});
      return e;
    }
    default:
      fail({"'x'", "'y'", "'q'", "integer", "'('", "'exp_q'"});
    }
  }

  Lexer lex_;
};

} // namespace

ExprNode::Ptr parse(std::string_view input) { return Parser(input).run(); }

} // namespace qplane
