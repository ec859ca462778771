#pragma once

#include <gmpxx.h>

#include <memory>
#include <string>
#include <string_view>

namespace qplane {

/// Parse tree of user input. Mul children keep exact source order; the
/// evaluator, not the parser, applies yx = qxy.
struct ExprNode {
  enum class Kind { Var, IntLit, RatLit, Add, Sub, Mul, Pow, ExpQ };
  using Ptr = std::unique_ptr<ExprNode>;

  Kind kind;
  char var = 0;          // Var: 'x', 'y' or 'q'
  mpz_class int_value;   // IntLit
  mpq_class rat_value;   // RatLit
  unsigned exponent = 0; // Pow: literal natural exponent
  Ptr left;              // Add/Sub/Mul left, Pow base, ExpQ argument
  Ptr right;             // Add/Sub/Mul right

  static Ptr variable(char name);
  static Ptr int_lit(mpz_class v);
  static Ptr rat_lit(mpq_class v);
  static Ptr add(Ptr l, Ptr r);
  static Ptr sub(Ptr l, Ptr r);
  static Ptr mul(Ptr l, Ptr r);
  static Ptr pow(Ptr base, unsigned exponent);
  static Ptr exp_q(Ptr argument);

  bool contains_exp_q() const;
};

/// Largest literal exponent the parser accepts.
inline constexpr unsigned kMaxExponent = 10000;

/// Recursive-descent parser for
///   expr   := '-'? term (('+'|'-') term)*
///   term   := factor ('*'? factor)*
///   factor := atom ('^' natural)?
///   atom   := 'x' | 'y' | 'q' | integer | integer '/' integer
///           | '(' expr ')' | 'exp_q' '(' expr ')'
/// Juxtaposition multiplies; multiplication is left-associative and keeps
/// source order. Throws SyntaxError (with byte offset and expected-token
/// set) or Error(errc::exponent_too_large).
ExprNode::Ptr parse(std::string_view input);

} // namespace qplane
