#include "tropigraph/rational.hpp"

#include <cctype>

#include "tropigraph/error.hpp"

namespace tropigraph {
namespace {

BigInt parse_integer(std::string_view text, std::string_view whole) {
  std::size_t pos = 0;
  bool negative = false;
  if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) {
    negative = text[pos] == '-';
    ++pos;
  }
  if (pos == text.size()) {
    throw ParseError("bad rational '" + std::string(whole) + "'");
  }
  BigInt out = 0;
  for (; pos < text.size(); ++pos) {
    const char c = text[pos];
    if (!std::isdigit(static_cast<unsigned char>(c))) {
      throw ParseError("bad rational '" + std::string(whole) + "'");
    }
    out = out * 10 + (c - '0');
  }
  return negative ? BigInt(-out) : out;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) {
    return Rational(parse_integer(text, text));
  }
  const BigInt num = parse_integer(text.substr(0, slash), text);
  const std::string_view den_text = text.substr(slash + 1);
  if (!den_text.empty() && (den_text[0] == '-' || den_text[0] == '+')) {
    throw ParseError("bad rational '" + std::string(text) + "'");
  }
  const BigInt den = parse_integer(den_text, text);
  if (den == 0) {
    throw ParseError("zero denominator in '" + std::string(text) + "'");
  }
  return Rational(num, den);
}

std::string format_rational(const Rational& value) {
  return boost::multiprecision::numerator(value).str() + "/" +
         boost::multiprecision::denominator(value).str();
}

}  // namespace tropigraph
