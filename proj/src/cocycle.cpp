#include "hopfforms/cocycle.hpp"

#include <string>

namespace hopfforms {

namespace {

std::string triple_str(size_t a, size_t b, size_t c) {
    return "(" + std::to_string(a) + "," + std::to_string(b) + "," + std::to_string(c) + ")";
}

}  // namespace

Cocycle cocycle_verify(const GaloisExtension& ext, std::vector<NFElement> values) {
    const size_t n = ext.order();
    if (values.size() != n * n)
        throw MathError("cocycle table must have " + std::to_string(n * n) + " entries");
    for (const auto& v : values) {
        if (!same_field(v.field, ext.field))
            throw MathError("cocycle value lives in the wrong field");
        if (v.is_zero()) throw MathError("cocycle values must be nonzero");
    }
    const size_t e = ext.identity_index;
    NFElement one = nf_one(ext.field);
    for (size_t g = 0; g < n; ++g) {
        if (!nf_eq(values[e * n + g], one) || !nf_eq(values[g * n + e], one))
            throw MathError(
                "cocycle not normalized at index " + std::to_string(g) +
                "; divide the table by alpha(1,1) to normalize");
    }
    for (size_t g1 = 0; g1 < n; ++g1) {
        for (size_t g2 = 0; g2 < n; ++g2) {
            for (size_t g3 = 0; g3 < n; ++g3) {
                NFElement lhs = nf_mul(apply_automorphism(ext, g1, values[g2 * n + g3]),
                                       values[g1 * n + ext.compose(g2, g3)]);
                NFElement rhs =
                    nf_mul(values[g1 * n + g2], values[ext.compose(g1, g2) * n + g3]);
                if (!nf_eq(lhs, rhs))
                    throw MathError("2-cocycle identity fails at triple " +
                                    triple_str(g1, g2, g3));
            }
        }
    }
    return Cocycle{ext, std::move(values)};
}

Cocycle coboundary(const GaloisExtension& ext, const std::vector<NFElement>& f) {
    const size_t n = ext.order();
    if (f.size() != n) throw MathError("coboundary input must have one value per group element");
    if (!nf_eq(f[ext.identity_index], nf_one(ext.field)))
        throw MathError("coboundary requires f(1) = 1");
    for (const auto& v : f)
        if (v.is_zero()) throw MathError("coboundary values must be nonzero");
    std::vector<NFElement> values;
    values.reserve(n * n);
    for (size_t g1 = 0; g1 < n; ++g1) {
        for (size_t g2 = 0; g2 < n; ++g2) {
            NFElement v = nf_mul(f[g1], apply_automorphism(ext, g1, f[g2]));
            v = nf_mul(v, nf_inv(f[ext.compose(g1, g2)]));
            values.push_back(std::move(v));
        }
    }
    return cocycle_verify(ext, std::move(values));
}

Cocycle trivial_cocycle(const GaloisExtension& ext) {
    const size_t n = ext.order();
    return cocycle_verify(ext, std::vector<NFElement>(n * n, nf_one(ext.field)));
}

Cocycle cocycle_power(const Cocycle& alpha, long m) {
    std::vector<NFElement> values;
    values.reserve(alpha.values.size());
    for (const auto& v : alpha.values) values.push_back(nf_pow(v, m));
    return cocycle_verify(alpha.extension, std::move(values));
}

}  // namespace hopfforms
