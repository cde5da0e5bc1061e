#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "omega/algebra.hpp"
#include "omega/analytic.hpp"

namespace omega {

/// Syntax tree of a hypercomplex expression.
///
/// Literals keep their coefficient text verbatim ("" stands for an implicit 1, as
/// in a bare "j") so printing reproduces the source number exactly.
struct Expr {
  enum class Kind { literal, last_result, negate, add, sub, mul, div, call };

  Kind kind = Kind::literal;
  std::string text;         // literal coefficient or function name
  BasisIndex basis = 0;     // literal only
  std::size_t position = 0; // offset of the token in the source; not part of equality
  std::vector<Expr> args;

  bool operator==(const Expr& o) const {
    return kind == o.kind && text == o.text && basis == o.basis && args == o.args;
  }
};

/// Recursive-descent parser. Precedence: unary minus > * / > + -, all left-associative.
/// Throws SyntaxError with the offending position and the expected token.
Expr parse_expression(std::string_view text);

/// Fully parenthesised text that parses back to an equal tree.
std::string print_expression(const Expr& e);

using Value = std::variant<ExactNum, FloatNum>;

std::string format(const Value& v);
FloatNum as_float(const Value& v);

/// Evaluation environment: the ambient algebra plus the REPL's `_` binding.
struct EvalContext {
  Algebra algebra = Algebra::omega();
  SeriesConfig series;
  double tolerance = kDefaultTolerance;  // pivot threshold for float division
  std::optional<Value> last;
};

/// Evaluates exactly (rationals) unless the tree calls exp/sin/cos or uses a float `_`.
/// Division multiplies by the two-sided inverse; zero divisors raise SingularElement.
Value evaluate(const Expr& e, const EvalContext& ctx);

}  // namespace omega
