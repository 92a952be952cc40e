#ifndef HOPFFORMS_GALOIS_HPP
#define HOPFFORMS_GALOIS_HPP

#include <vector>

#include "hopfforms/numberfield.hpp"

namespace hopfforms {

/// Field automorphism, determined by where it sends the power-basis generator.
struct FieldAutomorphism {
    NumberFieldPtr field;
    NFElement generator_image;
};

/// Ring homomorphism between fields, determined by the generator image.
struct FieldEmbedding {
    NumberFieldPtr source;
    NumberFieldPtr target;
    NFElement generator_image;  // element of target
};

/// A number field together with its full, verified automorphism group.
/// table[i][j] is the index of the composite x -> sigma_i(sigma_j(x)).
struct GaloisExtension {
    NumberFieldPtr field;
    std::vector<FieldAutomorphism> automorphisms;
    size_t identity_index = 0;
    std::vector<std::vector<size_t>> table;
    std::vector<size_t> inverse_table;

    size_t order() const { return automorphisms.size(); }
    size_t compose(size_t i, size_t j) const { return table[i][j]; }
    size_t inverse(size_t i) const { return inverse_table[i]; }
};

NFElement apply_automorphism(const FieldAutomorphism& g, const NFElement& x);
NFElement apply_automorphism(const GaloisExtension& ext, size_t g, const NFElement& x);
NFElement apply_embedding(const FieldEmbedding& e, const NFElement& x);

/// Builds the automorphism group from generator images, verifying that each
/// image is a root of the defining polynomial, that the set is closed under
/// composition, and that the group order equals the field degree.
GaloisExtension galois_group(const NumberFieldPtr& field,
                             const std::vector<NFElement>& generator_images);

/// Checks that a subset of automorphism indices is a subgroup.
bool is_subgroup(const GaloisExtension& ext, const std::vector<size_t>& subgroup);

struct FixedField {
    NumberFieldPtr field;
    FieldEmbedding embedding;  // into the big field
};

/// Fixed field L^H of a verified subgroup, found by a bounded search for a
/// primitive element among H-orbit sums of small polynomial expressions in
/// the generator. The candidate is accepted when its minimal polynomial has
/// degree [G:H].
FixedField fixed_field(const GaloisExtension& ext, const std::vector<size_t>& subgroup,
                       int multiplier_budget = 16);

}  // namespace hopfforms

#endif
