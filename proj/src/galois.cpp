#include "hopfforms/galois.hpp"

#include <algorithm>

namespace hopfforms {

NFElement apply_automorphism(const FieldAutomorphism& g, const NFElement& x) {
    if (!same_field(g.field, x.field))
        throw MathError("automorphism applied to element of a different field");
    return nf_eval_poly(poly_trim(x.coeffs), g.generator_image);
}

NFElement apply_automorphism(const GaloisExtension& ext, size_t g, const NFElement& x) {
    return apply_automorphism(ext.automorphisms.at(g), x);
}

NFElement apply_embedding(const FieldEmbedding& e, const NFElement& x) {
    if (!same_field(e.source, x.field))
        throw MathError("embedding applied to element of a different field");
    return nf_eval_poly(poly_trim(x.coeffs), e.generator_image);
}

GaloisExtension galois_group(const NumberFieldPtr& field,
                             const std::vector<NFElement>& generator_images) {
    const size_t n = field->degree();
    if (generator_images.size() != n)
        throw MathError("Galois extension needs as many automorphisms as the degree");

    GaloisExtension ext;
    ext.field = field;
    for (const NFElement& img : generator_images) {
        if (!same_field(img.field, field))
            throw MathError("generator image lies in the wrong field");
        if (!nf_eval_poly(field->min_poly(), img).is_zero())
            throw MathError("generator image is not a root of the defining polynomial");
        ext.automorphisms.push_back({field, img});
    }
    for (size_t i = 0; i < n; ++i)
        for (size_t j = i + 1; j < n; ++j)
            if (nf_eq(generator_images[i], generator_images[j]))
                throw MathError("automorphism images are not pairwise distinct");

    auto find_index = [&](const NFElement& img) -> size_t {
        for (size_t i = 0; i < n; ++i)
            if (nf_eq(ext.automorphisms[i].generator_image, img)) return i;
        throw MathError("automorphisms are not closed under composition");
    };

    const NFElement theta = nf_generator(field);
    ext.identity_index = find_index(theta);

    ext.table.assign(n, std::vector<size_t>(n, 0));
    for (size_t i = 0; i < n; ++i) {
        for (size_t j = 0; j < n; ++j) {
            NFElement composite =
                apply_automorphism(ext.automorphisms[i], ext.automorphisms[j].generator_image);
            ext.table[i][j] = find_index(composite);
        }
    }
    ext.inverse_table.assign(n, 0);
    for (size_t i = 0; i < n; ++i) {
        bool found = false;
        for (size_t j = 0; j < n; ++j) {
            if (ext.table[i][j] == ext.identity_index) {
                ext.inverse_table[i] = j;
                found = true;
                break;
            }
        }
        if (!found) throw MathError("automorphism without inverse");
    }
    return ext;
}

bool is_subgroup(const GaloisExtension& ext, const std::vector<size_t>& subgroup) {
    std::vector<bool> in(ext.order(), false);
    for (size_t h : subgroup) {
        if (h >= ext.order()) return false;
        in[h] = true;
    }
    if (!in[ext.identity_index]) return false;
    for (size_t a : subgroup)
        for (size_t b : subgroup)
            if (!in[ext.compose(a, b)]) return false;
    return true;
}

FixedField fixed_field(const GaloisExtension& ext, const std::vector<size_t>& subgroup,
                       int multiplier_budget) {
    if (!is_subgroup(ext, subgroup))
        throw MathError("fixed_field: index set is not a subgroup");
    const size_t n = ext.field->degree();
    const size_t target_degree = n / subgroup.size();
    const NFElement theta = nf_generator(ext.field);

    // Candidate primitive elements: H-orbit sums of (theta + c)^e for small
    // shifts c and exponents e. The trace-type sum over H is automatically
    // H-fixed; we only need one whose minimal polynomial has full degree.
    for (int c = 0; c < multiplier_budget; ++c) {
        for (size_t e = 1; e < n; ++e) {
            NFElement shifted = theta;
            shifted.coeffs[0] += c;
            NFElement powered = nf_pow(shifted, static_cast<long>(e));
            NFElement cand = nf_zero(ext.field);
            for (size_t h : subgroup) cand = nf_add(cand, apply_automorphism(ext, h, powered));
            Poly mp = minimal_polynomial(cand);
            if (static_cast<size_t>(poly_degree(mp)) != target_degree) continue;
            std::string label = ext.field->label() + "^H";
            auto sub = std::make_shared<NumberField>(mp, label, IrredCert::Derived);
            FixedField result;
            result.field = sub;
            result.embedding = {sub, ext.field, cand};
            return result;
        }
    }
    throw MathError("fixed_field: primitive element search budget (" +
                    std::to_string(multiplier_budget) + " multipliers) exhausted");
}

}  // namespace hopfforms
