#ifndef HOPFFORMS_POLYNOMIAL_HPP
#define HOPFFORMS_POLYNOMIAL_HPP

#include <optional>
#include <utility>
#include <vector>

#include "hopfforms/rational.hpp"

namespace hopfforms {

/// Dense univariate polynomial over Q, coefficients low-degree-first.
/// Normalized form has no trailing zero coefficients; the zero polynomial
/// is the empty vector.
using Poly = std::vector<Rational>;

Poly poly_trim(Poly p);
int poly_degree(const Poly& p);  // -1 for the zero polynomial
bool poly_is_monic(const Poly& p);

Poly poly_add(const Poly& a, const Poly& b);
Poly poly_sub(const Poly& a, const Poly& b);
Poly poly_scale(const Poly& a, const Rational& c);
Poly poly_mul(const Poly& a, const Poly& b);

/// Exact division with remainder; divisor must be nonzero.
std::pair<Poly, Poly> poly_divmod(const Poly& a, const Poly& b);
Poly poly_mod(const Poly& a, const Poly& b);

/// Monic gcd via the Euclidean algorithm; gcd(0,0) = 0.
Poly poly_gcd(Poly a, Poly b);

/// Makes a nonzero polynomial monic.
Poly poly_monic(Poly p);

Rational poly_eval(const Poly& p, const Rational& x);

bool poly_eq(const Poly& a, const Poly& b);

}  // namespace hopfforms

#endif
