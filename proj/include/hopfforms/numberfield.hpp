#ifndef HOPFFORMS_NUMBERFIELD_HPP
#define HOPFFORMS_NUMBERFIELD_HPP

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "hopfforms/polynomial.hpp"

namespace hopfforms {

/// How irreducibility of a defining polynomial was established.
enum class IrredCert {
    Direct,        // degree <= 2, checked over Q
    WitnessPrime,  // irreducible mod a caller-supplied prime not dividing disc
    Derived,       // arose as a minimal polynomial, irreducible by construction
    Asserted,      // taken on trust; kept visible so the pipeline stays honest
};

class NumberField;
using NumberFieldPtr = std::shared_ptr<const NumberField>;

/// An explicit number field Q(theta) presented by a monic defining polynomial.
/// Elements live in the power basis 1, theta, ..., theta^{n-1}.
class NumberField {
public:
    NumberField(Poly min_poly, std::string label, IrredCert cert,
                std::optional<std::uint64_t> witness_prime = std::nullopt);

    const Poly& min_poly() const { return min_poly_; }
    const std::string& label() const { return label_; }
    size_t degree() const { return degree_; }
    IrredCert cert() const { return cert_; }
    std::optional<std::uint64_t> witness_prime() const { return witness_prime_; }

private:
    Poly min_poly_;
    std::string label_;
    size_t degree_;
    IrredCert cert_;
    std::optional<std::uint64_t> witness_prime_;
};

/// Two handles denote the same field when their defining polynomials agree.
bool same_field(const NumberFieldPtr& a, const NumberFieldPtr& b);

/// Element of a number field, as a coefficient vector in the power basis.
struct NFElement {
    NumberFieldPtr field;
    std::vector<Rational> coeffs;  // length = field->degree()

    bool is_zero() const;
    bool is_rational() const;   // all coefficients beyond the constant vanish
    Rational rational_part() const;
};

/// Creates the field, certifying irreducibility when possible.
/// Degree <= 2 is certified directly; a witness prime triggers the modular
/// check (polynomial must be squarefree and irreducible mod p); otherwise the
/// field is marked Asserted. Detected reducibility is rejected.
NumberFieldPtr nf_create(const Poly& min_poly, const std::string& label,
                         std::optional<std::uint64_t> witness_prime = std::nullopt);

NFElement nf_zero(const NumberFieldPtr& f);
NFElement nf_one(const NumberFieldPtr& f);
NFElement nf_from_rational(const NumberFieldPtr& f, const Rational& r);
NFElement nf_from_coeffs(const NumberFieldPtr& f, std::vector<Rational> coeffs);
NFElement nf_generator(const NumberFieldPtr& f);

NFElement nf_add(const NFElement& a, const NFElement& b);
NFElement nf_sub(const NFElement& a, const NFElement& b);
NFElement nf_neg(const NFElement& a);
NFElement nf_mul(const NFElement& a, const NFElement& b);
NFElement nf_inv(const NFElement& a);  // throws MathError on zero
NFElement nf_pow(const NFElement& a, long e);
bool nf_eq(const NFElement& a, const NFElement& b);

/// Evaluates a rational-coefficient polynomial at a field element.
NFElement nf_eval_poly(const Poly& p, const NFElement& x);

/// Least-degree monic rational polynomial vanishing at x, computed from the
/// exact kernel of the powers-of-x matrix.
Poly minimal_polynomial(const NFElement& x);

/// Least d >= 1 with x^d = 1, searching all d with euler_phi(d) <= degree;
/// nullopt when x is not a root of unity. Throws on x = 0.
std::optional<unsigned> is_root_of_unity(const NFElement& x);

unsigned euler_phi(unsigned n);

}  // namespace hopfforms

#endif
