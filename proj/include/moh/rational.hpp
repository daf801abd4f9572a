#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>
#include <string_view>

namespace moh {

// Exact arbitrary-precision arithmetic. cpp_rational keeps values in lowest
// terms with a positive denominator, which is exactly the invariant the rest
// of the code relies on.
using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Canonical text form: "num/den", or just "num" when den == 1.
/// The sign always sits on the numerator.
std::string rational_to_text(const Rational& r);

/// Inverse of rational_to_text. Throws ParseError on malformed input.
Rational rational_from_text(std::string_view s);

/// Exact binomial coefficient; zero for k < 0 or k > n.
Int binomial(std::int64_t n, std::int64_t k);

}  // namespace moh
