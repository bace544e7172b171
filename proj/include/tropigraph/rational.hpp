#pragma once

#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace tropigraph {

// Arbitrary-precision exact fraction, always kept in lowest terms with a
// positive denominator.
using Rational = boost::multiprecision::number<boost::multiprecision::cpp_rational_backend,
                                              boost::multiprecision::et_off>;
using BigInt = boost::multiprecision::number<boost::multiprecision::cpp_int_backend<>,
                                            boost::multiprecision::et_off>;

// Accepts "p" or "p/q" with optional leading sign; throws ParseError.
Rational parse_rational(std::string_view text);

// Always "p/q" with q > 0, e.g. "4/3", "1/1", "-1/2".
std::string format_rational(const Rational& value);

}  // namespace tropigraph
