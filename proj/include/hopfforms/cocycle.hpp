#ifndef HOPFFORMS_COCYCLE_HPP
#define HOPFFORMS_COCYCLE_HPP

#include <vector>

#include "hopfforms/galois.hpp"

namespace hopfforms {

/// Normalized 2-cocycle on a Galois group with values in L*, given as a
/// |G| x |G| table (row-major over automorphism indices). Construct through
/// cocycle_verify or coboundary so the defining identities are checked.
struct Cocycle {
    GaloisExtension extension;
    std::vector<NFElement> values;

    const NFElement& at(size_t g1, size_t g2) const {
        return values[g1 * extension.order() + g2];
    }
};

/// Verifies nonvanishing, normalization alpha(1,g) = alpha(g,1) = 1, and the
/// identity g1(alpha(g2,g3)) alpha(g1,g2g3) = alpha(g1,g2) alpha(g1g2,g3)
/// on all triples. Throws MathError naming the first violation.
Cocycle cocycle_verify(const GaloisExtension& ext, std::vector<NFElement> values);

/// The coboundary of f: G -> L*, given as values indexed by automorphism:
/// (df)(g1,g2) = f(g1) g1(f(g2)) f(g1 g2)^{-1}. Requires f(1) = 1 and all
/// values nonzero.
Cocycle coboundary(const GaloisExtension& ext, const std::vector<NFElement>& f);

Cocycle trivial_cocycle(const GaloisExtension& ext);

/// Pointwise power alpha^m (still a cocycle; reverified).
Cocycle cocycle_power(const Cocycle& alpha, long m);

}  // namespace hopfforms

#endif
