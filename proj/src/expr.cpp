#include "omega/expr.hpp"

#include <cctype>

namespace omega {

namespace {

bool is_function(std::string_view name) { return name == "exp" || name == "sin" || name == "cos" || name == "conj"; }

int basis_of(std::string_view name) {
  if (name == "i") return 1;
  if (name == "j") return 2;
  if (name == "k") return 3;
  return -1;
}

class Parser {
 public:
  explicit Parser(std::string_view src) : src_(src) {}

  Expr parse() {
    Expr e = expression();
    skip_space();
    if (pos_ != src_.size()) throw SyntaxError(pos_, "operator or end of input");
    return e;
  }

 private:
  void skip_space() {
    while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_space();
    if (pos_ < src_.size() && src_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  Expr binary(Expr::Kind kind, Expr lhs, Expr rhs, std::size_t at) {
    Expr e;
    e.kind = kind;
    e.position = at;
    e.args.push_back(std::move(lhs));
    e.args.push_back(std::move(rhs));
    return e;
  }

  Expr expression() {
    Expr lhs = term();
    for (;;) {
      skip_space();
      const std::size_t at = pos_;
      if (accept('+'))
        lhs = binary(Expr::Kind::add, std::move(lhs), term(), at);
      else if (accept('-'))
        lhs = binary(Expr::Kind::sub, std::move(lhs), term(), at);
      else
        return lhs;
    }
  }

  Expr term() {
    Expr lhs = unary();
    for (;;) {
      skip_space();
      const std::size_t at = pos_;
      if (accept('*'))
        lhs = binary(Expr::Kind::mul, std::move(lhs), unary(), at);
      else if (accept('/'))
        lhs = binary(Expr::Kind::div, std::move(lhs), unary(), at);
      else
        return lhs;
    }
  }

  Expr unary() {
    skip_space();
    const std::size_t at = pos_;
    if (accept('-')) {
      Expr e;
      e.kind = Expr::Kind::negate;
      e.position = at;
      e.args.push_back(unary());
      return e;
    }
    return primary();
  }

  std::string_view identifier() {
    const std::size_t start = pos_;
    while (pos_ < src_.size() && (std::isalnum(static_cast<unsigned char>(src_[pos_])) || src_[pos_] == '_')) ++pos_;
    return src_.substr(start, pos_ - start);
  }

  std::string_view number() {
    const std::size_t start = pos_;
    auto digits = [&] {
      while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) ++pos_;
    };
    digits();
    if (pos_ < src_.size() && src_[pos_] == '.') {
      ++pos_;
      digits();
    }
    if (pos_ == start + 1 && src_[start] == '.') throw SyntaxError(start, "digits");
    // Exponent only when digits follow, so "2e" is not swallowed.
    if (pos_ < src_.size() && (src_[pos_] == 'e' || src_[pos_] == 'E')) {
      std::size_t look = pos_ + 1;
      if (look < src_.size() && (src_[look] == '+' || src_[look] == '-')) ++look;
      if (look < src_.size() && std::isdigit(static_cast<unsigned char>(src_[look]))) {
        pos_ = look;
        digits();
      }
    }
    return src_.substr(start, pos_ - start);
  }

  Expr primary() {
    skip_space();
    const std::size_t at = pos_;
    if (pos_ >= src_.size()) throw SyntaxError(pos_, "operand");
    const char c = src_[pos_];

    if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') {
      Expr e;
      e.kind = Expr::Kind::literal;
      e.position = at;
      e.text = std::string(number());
      skip_space();
      const std::size_t save = pos_;
      if (pos_ < src_.size() && std::isalpha(static_cast<unsigned char>(src_[pos_]))) {
        const std::string_view id = identifier();
        const int b = basis_of(id);
        if (b < 0) {
          pos_ = save;
          throw SyntaxError(save, "basis letter i, j or k after a coefficient");
        }
        e.basis = static_cast<BasisIndex>(b);
      }
      return e;
    }

    if (c == '(') {
      ++pos_;
      Expr inner = expression();
      if (!accept(')')) throw SyntaxError(pos_, "')'");
      return inner;
    }

    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      const std::string_view id = identifier();
      if (id == "_") {
        Expr e;
        e.kind = Expr::Kind::last_result;
        e.position = at;
        return e;
      }
      const int b = basis_of(id);
      if (b >= 0) {
        Expr e;
        e.kind = Expr::Kind::literal;
        e.basis = static_cast<BasisIndex>(b);
        e.position = at;
        return e;
      }
      if (!is_function(id)) throw SyntaxError(at, "i, j, k, _ or one of exp, sin, cos, conj");
      Expr e;
      e.kind = Expr::Kind::call;
      e.text = std::string(id);
      e.position = at;
      if (!accept('(')) throw SyntaxError(pos_, "'(' after " + e.text);
      e.args.push_back(expression());
      if (!accept(')')) throw SyntaxError(pos_, "')'");
      return e;
    }

    throw SyntaxError(at, "operand");
  }

  std::string_view src_;
  std::size_t pos_ = 0;
};

bool needs_float(const Expr& e, const EvalContext& ctx) {
  if (e.kind == Expr::Kind::call && e.text != "conj") return true;
  if (e.kind == Expr::Kind::last_result && ctx.last && std::holds_alternative<FloatNum>(*ctx.last)) return true;
  for (const auto& a : e.args)
    if (needs_float(a, ctx)) return true;
  return false;
}

template <class Scalar>
Scalar literal_value(const std::string& text);

template <>
Rational literal_value<Rational>(const std::string& text) {
  return text.empty() ? Rational(1) : parse_decimal(text);
}

template <>
double literal_value<double>(const std::string& text) {
  return text.empty() ? 1.0 : std::stod(text);
}

template <class Scalar>
HNum<Scalar> eval_as(const Expr& e, const EvalContext& ctx) {
  const Algebra& alg = ctx.algebra;
  switch (e.kind) {
    case Expr::Kind::literal:
      return HNum<Scalar>::unit(e.basis, literal_value<Scalar>(e.text));
    case Expr::Kind::last_result: {
      if (!ctx.last) throw ArithmeticError("no previous result bound to _");
      if constexpr (std::is_same_v<Scalar, double>) {
        return as_float(*ctx.last);
      } else {
        return std::get<ExactNum>(*ctx.last);
      }
    }
    case Expr::Kind::negate:
      return -eval_as<Scalar>(e.args[0], ctx);
    case Expr::Kind::add:
      return eval_as<Scalar>(e.args[0], ctx) + eval_as<Scalar>(e.args[1], ctx);
    case Expr::Kind::sub:
      return eval_as<Scalar>(e.args[0], ctx) - eval_as<Scalar>(e.args[1], ctx);
    case Expr::Kind::mul:
      return alg.mul(eval_as<Scalar>(e.args[0], ctx), eval_as<Scalar>(e.args[1], ctx));
    case Expr::Kind::div: {
      const HNum<Scalar> lhs = eval_as<Scalar>(e.args[0], ctx);
      const HNum<Scalar> rhs = eval_as<Scalar>(e.args[1], ctx);
      try {
        if constexpr (std::is_same_v<Scalar, double>)
          return alg.mul(lhs, alg.invert(rhs, ctx.tolerance));
        else
          return alg.mul(lhs, alg.invert(rhs));
      } catch (const SingularElement& err) {
        throw SingularElement("division at position " + std::to_string(e.position) + ": " +
                              err.what());
      }
    }
    case Expr::Kind::call: {
      const HNum<Scalar> arg = eval_as<Scalar>(e.args[0], ctx);
      if (e.text == "conj") return conjugate(arg, Conjugation::full);
      if constexpr (std::is_same_v<Scalar, double>) {
        if (e.text == "exp") return exp(alg, arg, ctx.series);
        if (e.text == "sin") return sin(alg, arg, ctx.series);
        if (e.text == "cos") return cos(alg, arg, ctx.series);
      }
      throw ArithmeticError("function " + e.text + " needs float evaluation");
    }
  }
  throw ArithmeticError("unknown expression node");
}

}  // namespace

Expr parse_expression(std::string_view text) { return Parser(text).parse(); }

std::string print_expression(const Expr& e) {
  switch (e.kind) {
    case Expr::Kind::literal: {
      std::string out = e.text;
      if (e.basis != 0) out += kBasisNames[e.basis];
      return out;
    }
    case Expr::Kind::last_result:
      return "_";
    case Expr::Kind::negate:
      return "-(" + print_expression(e.args[0]) + ")";
    case Expr::Kind::add:
      return "(" + print_expression(e.args[0]) + " + " + print_expression(e.args[1]) + ")";
    case Expr::Kind::sub:
      return "(" + print_expression(e.args[0]) + " - " + print_expression(e.args[1]) + ")";
    case Expr::Kind::mul:
      return "(" + print_expression(e.args[0]) + " * " + print_expression(e.args[1]) + ")";
    case Expr::Kind::div:
      return "(" + print_expression(e.args[0]) + " / " + print_expression(e.args[1]) + ")";
    case Expr::Kind::call:
      return e.text + "(" + print_expression(e.args[0]) + ")";
  }
  return "";
}

std::string format(const Value& v) {
  return std::visit([](const auto& x) { return format(x); }, v);
}

FloatNum as_float(const Value& v) {
  if (const auto* f = std::get_if<FloatNum>(&v)) return *f;
  return to_float(std::get<ExactNum>(v));
}

Value evaluate(const Expr& e, const EvalContext& ctx) {
  if (needs_float(e, ctx)) {
    FloatNum v = eval_as<double>(e, ctx);
    if (!v.is_finite()) throw ArithmeticError("result is not finite");
    return v;
  }
  return eval_as<Rational>(e, ctx);
}

}  // namespace omega
