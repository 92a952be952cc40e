#ifndef HOPFFORMS_SERIALIZE_HPP
#define HOPFFORMS_SERIALIZE_HPP

#include <json.hpp>

#include "hopfforms/pipeline.hpp"

namespace hopfforms {

/// Canonical JSON documents. Key order is fixed (insertion order), rationals
/// are "p/q" strings ("p" when the denominator is 1), field elements and
/// polynomials are coefficient arrays low-degree-first, and dumps are
/// byte-stable: identical objects serialize to identical text.
using Json = nlohmann::ordered_json;

// Malformed documents raise ParseError (see rational.hpp), distinct from
// MathError so callers can tell "could not read this" from "read it fine,
// the mathematics failed".

std::string rational_to_string(const Rational& r);
Rational rational_from_string(const std::string& s);

Json rvec_to_json(const std::vector<Rational>& v);
std::vector<Rational> rvec_from_json(const Json& j);

Json nfelement_to_json(const NFElement& x);
NFElement nfelement_from_json(const NumberFieldPtr& f, const Json& j);

Json matrix_to_json(const Matrix<QQ>& m);
Matrix<QQ> matrix_from_json(const Json& j);

Json group_to_json(const FiniteGroup& g);
FiniteGroup group_from_json(const Json& j);  // axioms reverified on read

Json action_to_json(const GroupAction& a);
GroupAction action_from_json(const Json& j);

/// Hopf document: field marker, dim, basis_labels, mult as an n x n x n
/// nested array, unit, comult as n x n^2, counit, antipode as n x n.
Json hopf_to_json(const HopfAlgebraData<QQ>& h);
HopfAlgebraData<QQ> hopf_from_json(const Json& j);  // shape-checked, not axiom-checked

Json report_to_json(const Report& r);

/// Field-with-automorphisms block: min_poly, label, optional witness_prime,
/// automorphism generator images. Reading reruns the group verification.
Json extension_to_json(const GaloisExtension& ext);
GaloisExtension extension_from_json(const Json& j);

/// Cocycle document: extension block plus the value table (row-major over
/// group-index pairs). Reading reruns cocycle_verify, so a non-cocycle input
/// fails with the violated-triple locator.
Json cocycle_to_json(const Cocycle& c);
Cocycle cocycle_from_json(const Json& j);

FinitizationWitness witness_from_json(const GaloisExtension& ext, const Json& j);

std::string dump_canonical(const Json& j);
Json parse_json_text(const std::string& text);
Json load_json_file(const std::string& path);

}  // namespace hopfforms

#endif
