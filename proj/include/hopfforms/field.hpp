#ifndef HOPFFORMS_FIELD_HPP
#define HOPFFORMS_FIELD_HPP

#include <string>

#include "hopfforms/numberfield.hpp"
#include "hopfforms/rational.hpp"

namespace hopfforms {

/// Field context for Q. The generic linear algebra and structure-constant
/// machinery is parameterized over one of these contexts; they bundle the
/// element type with the arithmetic so number-field elements (which need a
/// field handle to construct) and plain rationals share one code path.
struct QQ {
    using Elem = Rational;

    Elem zero() const { return Rational(0); }
    Elem one() const { return Rational(1); }
    Elem from_int(long v) const { return Rational(v); }
    Elem add(const Elem& a, const Elem& b) const { return a + b; }
    Elem sub(const Elem& a, const Elem& b) const { return a - b; }
    Elem mul(const Elem& a, const Elem& b) const { return a * b; }
    Elem neg(const Elem& a) const { return -a; }
    Elem inv(const Elem& a) const {
        if (a == 0) throw MathError("division by zero in Q");
        return 1 / a;
    }
    bool is_zero(const Elem& a) const { return a == 0; }
    bool eq(const Elem& a, const Elem& b) const { return a == b; }
    std::string name() const { return "Q"; }
    size_t ext_degree() const { return 1; }
};

/// Field context for an explicit number field.
struct NFCtx {
    NumberFieldPtr field;
    using Elem = NFElement;

    Elem zero() const { return nf_zero(field); }
    Elem one() const { return nf_one(field); }
    Elem from_int(long v) const { return nf_from_rational(field, Rational(v)); }
    Elem add(const Elem& a, const Elem& b) const { return nf_add(a, b); }
    Elem sub(const Elem& a, const Elem& b) const { return nf_sub(a, b); }
    Elem mul(const Elem& a, const Elem& b) const { return nf_mul(a, b); }
    Elem neg(const Elem& a) const { return nf_neg(a); }
    Elem inv(const Elem& a) const { return nf_inv(a); }
    bool is_zero(const Elem& a) const { return a.is_zero(); }
    bool eq(const Elem& a, const Elem& b) const { return nf_eq(a, b); }
    std::string name() const { return field->label(); }
    size_t ext_degree() const { return field->degree(); }
};

}  // namespace hopfforms

#endif
