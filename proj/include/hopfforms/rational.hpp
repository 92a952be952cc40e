#ifndef HOPFFORMS_RATIONAL_HPP
#define HOPFFORMS_RATIONAL_HPP

#include <boost/multiprecision/cpp_int.hpp>
#include <stdexcept>
#include <string>
#include <string_view>

namespace hopfforms {

using Int = boost::multiprecision::cpp_int;

/// Arbitrary-precision rational, always stored canonically reduced with
/// positive denominator (cpp_rational maintains this invariant).
using Rational = boost::multiprecision::cpp_rational;

struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct MathError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Serializes as "p/q", with "/q" omitted when q = 1.
std::string rat_to_string(const Rational& r);

/// Parses "p" or "p/q". Rejects q = 0 and malformed input.
Rational rat_from_string(std::string_view s);

}  // namespace hopfforms

#endif
