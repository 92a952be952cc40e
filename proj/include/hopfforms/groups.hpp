#ifndef HOPFFORMS_GROUPS_HPP
#define HOPFFORMS_GROUPS_HPP

#include <string>
#include <vector>

#include "hopfforms/cocycle.hpp"

namespace hopfforms {

/// Finite group given by its full multiplication table. group_from_table
/// verifies the axioms exhaustively; nothing here is assumed.
struct FiniteGroup {
    size_t order = 0;
    std::vector<size_t> table;  // order x order, row-major
    size_t identity_index = 0;
    std::vector<size_t> inverse_table;
    std::vector<std::string> labels;

    size_t mul(size_t i, size_t j) const { return table[i * order + j]; }
    size_t inv(size_t i) const { return inverse_table[i]; }
    std::string label_of(size_t i) const {
        return i < labels.size() ? labels[i] : "g" + std::to_string(i);
    }
};

/// Throws MathError naming the violated axiom (with the offending triple).
FiniteGroup group_from_table(const std::vector<size_t>& table,
                             std::vector<std::string> labels = {});

FiniteGroup trivial_group();
FiniteGroup cyclic_group(size_t n);

/// Action of `group` on `space` by group automorphisms: one permutation of
/// space indices per actor element. Verified at construction.
struct GroupAction {
    FiniteGroup group;
    FiniteGroup space;
    std::vector<std::vector<size_t>> maps;  // maps[g][t]

    size_t act(size_t g, size_t t) const { return maps[g][t]; }
};

/// Verifies each map is an automorphism of space and the assignment is a
/// homomorphism; throws on failure.
GroupAction make_action(FiniteGroup group, FiniteGroup space,
                        std::vector<std::vector<size_t>> maps);

/// Same checks minus the automorphism condition: for actions on a plain set
/// of indices (e.g. the regular action of a group on itself).
GroupAction make_permutation_action(FiniteGroup group, FiniteGroup space,
                                    std::vector<std::vector<size_t>> maps);

GroupAction trivial_action(FiniteGroup group, FiniteGroup space);

/// The Z2-vector space with the r cosets as basis: a group T of order 2^r
/// (bit-vector indices, XOR law), together with the actor's permutation of
/// cosets extended linearly. coset_perms[g] is the actor's permutation of
/// the r cosets.
std::pair<FiniteGroup, GroupAction> z2_span(
    size_t r, const FiniteGroup& actor,
    const std::vector<std::vector<size_t>>& coset_perms);

struct Orbit {
    size_t representative = 0;
    std::vector<size_t> elements;
    std::vector<size_t> stabilizer;  // actor indices, a verified subgroup
};

/// Orbit partition with stabilizers; checks the orbit-stabilizer product law
/// on every orbit.
std::vector<Orbit> orbits_stabilizers(const GroupAction& action);

/// The central extension 1 -> mu -> Ghat -> G -> 1 built from a cocycle with
/// root-of-unity values. mu is realized as the cyclic group of d-th roots of
/// unity inside L, d = lcm of the value orders; it is obtained as the
/// multiplicative closure of the values, verified cyclic of order d and
/// stable under the Galois action. Ghat elements are pairs (mu-index,
/// G-index), lex index z*|G| + g, with law
/// (z1,g1)(z2,g2) = (z1 g1(z2) alpha(g1,g2), g1 g2).
struct GroupExtensionData {
    FiniteGroup mu;
    FiniteGroup ghat;
    std::vector<size_t> projection;    // Ghat index -> G index
    std::vector<size_t> mu_embedding;  // mu index -> Ghat index
    std::vector<NFElement> scalar_of;  // mu index -> value in L*
    Cocycle cocycle;
};

GroupExtensionData extension_group(const Cocycle& alpha);

/// Character group of an elementary abelian 2-group T (bit-vector indices):
/// T# has the same underlying bit-vectors, with pairing
/// chi_s(t) = (-1)^{<s,t>}. Bimultiplicativity and nondegeneracy verified.
struct CharacterGroup {
    FiniteGroup dual;
    size_t bits = 0;

    int pairing(size_t s, size_t t) const;  // +1 or -1
};

CharacterGroup character_group(const FiniteGroup& t);

/// Dual of a Z2-linear action: (n . chi_s)(t) = chi_s(psi(n^{-1}) t), which
/// is again a permutation action on bitmask indices. Verified exhaustively
/// against the pairing identity.
GroupAction dual_action(const GroupAction& psi);

/// Semidirect product with the pair law
/// (a1, s1)(a2, s2) = (a1 a2, (a2^{-1} . s1) s2); pairs indexed a*|S| + s.
FiniteGroup semidirect_product_group(const FiniteGroup& actor, const FiniteGroup& space,
                                     const GroupAction& action);

bool is_group_subset_subgroup(const FiniteGroup& g, const std::vector<size_t>& subset);

/// The Galois group as an abstract FiniteGroup on the same indices.
FiniteGroup galois_as_group(const GaloisExtension& ext);

}  // namespace hopfforms

#endif
