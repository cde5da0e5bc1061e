#include "omega/scalar.hpp"

#include <charconv>
#include <system_error>

#include "omega/errors.hpp"
#include "omega/hnum.hpp"

namespace omega {

std::string to_string(const Rational& v) {
  const BigInt num = boost::multiprecision::numerator(v);
  const BigInt den = boost::multiprecision::denominator(v);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

std::string format_double(double v) {
  char buf[64];
  auto [end, ec] = std::to_chars(buf, buf + sizeof buf, v);
  if (ec != std::errc()) return "nan";
  return std::string(buf, end);
}

Rational parse_decimal(std::string_view text) {
  std::size_t pos = 0;
  BigInt digits = 0;
  long exponent = 0;
  bool any = false;
  while (pos < text.size() && text[pos] >= '0' && text[pos] <= '9') {
    digits = digits * 10 + (text[pos] - '0');
    ++pos;
    any = true;
  }
  if (pos < text.size() && text[pos] == '.') {
    ++pos;
    while (pos < text.size() && text[pos] >= '0' && text[pos] <= '9') {
      digits = digits * 10 + (text[pos] - '0');
      --exponent;
      ++pos;
      any = true;
    }
  }
  if (!any) throw ArithmeticError("not a decimal literal: " + std::string(text));
  if (pos < text.size() && (text[pos] == 'e' || text[pos] == 'E')) {
    ++pos;
    bool negative = false;
    if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) negative = text[pos++] == '-';
    long e = 0;
    bool exp_digits = false;
    while (pos < text.size() && text[pos] >= '0' && text[pos] <= '9') {
      e = e * 10 + (text[pos] - '0');
      if (e > 100000) throw ArithmeticError("exponent out of range: " + std::string(text));
      ++pos;
      exp_digits = true;
    }
    if (!exp_digits) throw ArithmeticError("not a decimal literal: " + std::string(text));
    exponent += negative ? -e : e;
  }
  if (pos != text.size()) throw ArithmeticError("not a decimal literal: " + std::string(text));
  const BigInt scale = boost::multiprecision::pow(BigInt(10), static_cast<unsigned>(exponent < 0 ? -exponent : exponent));
  return exponent < 0 ? Rational(digits, scale) : Rational(digits * scale);
}

bool rational_sqrt(const Rational& v, Rational& root) {
  if (v < 0) return false;
  const BigInt num = boost::multiprecision::numerator(v);
  const BigInt den = boost::multiprecision::denominator(v);
  const BigInt rn = boost::multiprecision::sqrt(num);
  const BigInt rd = boost::multiprecision::sqrt(den);
  if (rn * rn != num || rd * rd != den) return false;
  root = Rational(rn, rd);
  return true;
}

namespace {

template <class Scalar, class Fmt>
std::string format_terms(const HNum<Scalar>& x, Fmt fmt) {
  std::string out;
  for (int b = 0; b < kDim; ++b) {
    const Scalar& v = x[b];
    if (ScalarTraits<Scalar>::is_zero(v)) continue;
    const bool negative = v < 0;
    const Scalar mag = negative ? Scalar(-v) : v;
    if (out.empty())
      out += negative ? "-" : "";
    else
      out += negative ? " - " : " + ";
    const bool unit_coefficient = mag == ScalarTraits<Scalar>::one();
    if (b == 0)
      out += fmt(mag);
    else if (unit_coefficient)
      out += kBasisNames[b];
    else
      out += fmt(mag) + kBasisNames[b];
  }
  return out.empty() ? "0" : out;
}

}  // namespace

std::string format(const ExactNum& x) {
  return format_terms(x, [](const Rational& v) { return to_string(v); });
}

std::string format(const FloatNum& x) {
  return format_terms(x, [](double v) { return format_double(v); });
}

}  // namespace omega
