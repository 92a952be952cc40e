#ifndef HOPFFORMS_PIPELINE_HPP
#define HOPFFORMS_PIPELINE_HPP

#include "hopfforms/descent.hpp"

namespace hopfforms {

/// Right-translation action on the base change of a bicrossed product built
/// on T = Z2 G: g . (l (x) e_t (x) n) = g(l) (x) e_{t g^{-1}} (x) n. The
/// matrix of g permutes the e_t factor by the Z2-linear extension of
/// p -> p g^{-1} on basis bits and is the identity on the group factor.
/// Both the matrix group law and Hopf compatibility are verified.
SemilinearAction star_action(const HopfAlgebraData<QQ>& x, const GaloisExtension& ext);

/// Splitting of the invariant algebra H by idempotent support: H1 collects
/// the invariant basis vectors supported on e_t with t a weight-1 bit-vector
/// (a basis element of T = Z2 G, i.e. an element of G), H2 the complementary
/// support. Both parts are verified two-sided ideals annihilating each other,
/// and each carries its own unit (the component of 1 in the splitting).
struct AlgebraSplit {
    std::vector<size_t> h1_indices;  // invariant-basis indices
    std::vector<size_t> h2_indices;
    StructureAlgebra<QQ> h1;
    StructureAlgebra<QQ> h2;
    Matrix<QQ> h1_projection;  // dim H1 x dim H, kills H2 (an algebra map)
    Report report;
};

/// Requires every invariant basis vector to have homogeneous support (all
/// weight-1 idempotent coordinates or none); throws otherwise, and throws
/// when an ideal check fails. n_order is the order of the group factor of
/// the bicrossed product the invariants were taken from.
AlgebraSplit h1_h2_split(const InvariantsResult& inv, size_t n_order);

/// The smash product B = L # k(Ghat) on the basis theta^i (x) ghat (index
/// ghat * [L:k] + i) with (l1 (x) g1)(l2 (x) g2) = l1 g1(l2) (x) g1 g2,
/// where Ghat acts on L through its projection to the Galois group.
/// Associativity of the structure constants is verified.
StructureAlgebra<QQ> b_algebra(const GaloisExtension& ext, const GroupExtensionData& ged);

/// The map B -> H1 given by l (x) ghat -> sum_{g in G} g(l) (x) e_{g^{-1}}
/// (x) ghat, assembled as an exact matrix in the invariant coordinates and
/// verified to be a bijective algebra map. Throws when any verdict fails.
AlgebraMorphism<QQ> phi_map(const GaloisExtension& ext, const GroupExtensionData& ged,
                            const InvariantsResult& inv, const AlgebraSplit& split,
                            const StructureAlgebra<QQ>& b);

/// The map B -> A sending theta^i (x) (z, g) to theta^i z U_g, where z is
/// the root of unity the first pair component stands for. Verified to be an
/// onto algebra map with kernel dimension dim B - dim A.
AlgebraMorphism<QQ> psi_map(const GroupExtensionData& ged, const CrossedProduct& a,
                            const StructureAlgebra<QQ>& b);

/// Everything the end-to-end run produces, with one named verdict per stage.
struct PipelineReport {
    GroupExtensionData extension;  // 1 -> mu -> Ghat -> G -> 1
    FiniteGroup t;                 // Z2 G
    GroupAction psi;               // Ghat on T through the projection
    HopfAlgebraData<QQ> x;         // bicrossed product k[T] x k(Ghat)
    SemilinearAction star;
    InvariantsResult invariants_result;  // H = invariants of X_L
    AlgebraSplit split;                  // H = H1 (+) H2
    StructureAlgebra<QQ> b;
    CrossedProduct a;
    AlgebraMorphism<QQ> phi;       // B -> H1, bijective
    AlgebraMorphism<QQ> psi_onto;  // B -> A, onto
    AlgebraMorphism<QQ> onto;      // H -> A, the composite surjection
    bool h_semisimple = false;
    bool h_cosemisimple = false;
    Report report;
};

/// Runs extension_group -> z2_span -> bicrossed -> base change -> star
/// action -> invariants -> split -> B -> phi -> psi -> composite surjection,
/// verifying every stage. The composite is assembled as the matrix product
/// of the H1 projection, the inverse of phi, and psi, so a failure localizes
/// to one factor. Requires a verified cocycle with root-of-unity values.
PipelineReport pipeline(const Cocycle& alpha);

/// Presentation of the bicrossed product as a group algebra: for T an
/// elementary abelian 2-group the characters are +-1-valued, and
/// (ghat, chi) -> sum_t chi(psi(ghat^{-1}) t) e_t (x) ghat identifies
/// k[Ghat x| T#] with X as Hopf algebras. The isomorphism is verified as an
/// algebra map, a coalgebra map, antipode-compatible, and bijective.
struct GroupFormCheck {
    FiniteGroup product;  // Ghat x| T#, pairs indexed ghat * |T#| + chi
    HopfAlgebraData<QQ> group_hopf;
    AlgebraMorphism<QQ> iso;  // group algebra -> X
    Report report;
};

GroupFormCheck group_algebra_form_check(const HopfAlgebraData<QQ>& x,
                                        const GroupAction& psi);

/// Hopf-morphism checks for a linear map between Hopf algebra presentations:
/// algebra map, comultiplication and counit compatibility, antipode
/// compatibility, bijectivity.
Report verify_hopf_morphism(const HopfAlgebraData<QQ>& src, const HopfAlgebraData<QQ>& dst,
                            const Matrix<QQ>& m);

/// A as an H-module through the composite surjection: the centralizer of the
/// image of H inside End(A) is computed exactly and verified to be the right
/// multiplications, i.e. the opposite algebra of A.
struct EndomorphismCheck {
    StructureAlgebra<QQ> centralizer;
    AlgebraMorphism<QQ> right_mult;  // A^op -> centralizer, bijective
    Report report;
};

EndomorphismCheck endomorphism_ring_check(const PipelineReport& rep);

}  // namespace hopfforms

#endif
