#include "recop/rational.hpp"

#include <cctype>

namespace recop {

namespace {

Integer parse_integer(std::string_view text, std::string_view whole) {
  if (text.empty())
    throw Error("malformed rational '" + std::string(whole) + "': empty integer part");
  std::size_t start = 0;
  if (text[0] == '-' || text[0] == '+') start = 1;
  if (start == text.size())
    throw Error("malformed rational '" + std::string(whole) + "': sign without digits");
  for (std::size_t i = start; i < text.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(text[i])))
      throw Error("malformed rational '" + std::string(whole) + "': unexpected character '" +
                  std::string(1, text[i]) + "'");
  return Integer(std::string(text));
}

}  // namespace

Rational parse_rational(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_integer(text, text));
  Integer num = parse_integer(text.substr(0, slash), text);
  Integer den = parse_integer(text.substr(slash + 1), text);
  if (den == 0) throw Error("malformed rational '" + std::string(text) + "': zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  return Rational(num, den);
}

std::string format_rational(const Rational& value) {
  const Integer num = numerator(value);
  const Integer den = denominator(value);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

double rational_to_double(const Rational& value) {
  return value.convert_to<double>();
}

}  // namespace recop
