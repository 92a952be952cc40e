#ifndef HOPFFORMS_DESCENT_HPP
#define HOPFFORMS_DESCENT_HPP

#include "hopfforms/construct.hpp"

namespace hopfforms {

/// A Hopf algebra over L remembered together with the extension L/k it will
/// be descended along.
struct LObject {
    GaloisExtension extension;
    HopfAlgebraData<NFCtx> hopf;

    size_t dim_l() const { return hopf.algebra.dim; }
    size_t k_dim() const { return hopf.algebra.dim * extension.field->degree(); }
};

/// Semilinear action of the Galois group: g acts by v -> M_g . g(v), with g
/// applied to coordinates entrywise. Semilinearity is then automatic; the
/// group law M_{gh} = M_g . g(M_h) is what verify_semilinear checks.
struct SemilinearAction {
    LObject object;
    std::vector<Matrix<NFCtx>> maps;  // one per automorphism index
};

std::vector<NFElement> semilinear_apply(const SemilinearAction& act, size_t g,
                                        const std::vector<NFElement>& v);

Report verify_semilinear(const SemilinearAction& act);

/// Per-structure-map compatibility of the action with the Hopf structure:
/// g(ab) = g(a)g(b), Delta(g.a) = (g x g) Delta(a), eps(g.a) = g(eps(a)),
/// g.1 = 1, S(g.a) = g.S(a) — all as exact identities on basis tuples.
struct HopfSemilinearVerdict {
    bool mult = false;
    bool comult = false;
    bool counit = false;
    bool unit = false;
    bool antipode = false;
    std::string where;  // first failing location

    bool all() const { return mult && comult && counit && unit && antipode; }
    Report to_report() const;
};

HopfSemilinearVerdict verify_hopf_semilinear(const SemilinearAction& act);

/// Invariant Hopf algebra over k. basis_l has the invariant vectors as
/// columns (an L-basis of the object, by the Speiser lemma); inclusion is
/// the same data realified over k.
struct InvariantsResult {
    HopfAlgebraData<QQ> hopf;
    Matrix<NFCtx> basis_l;
    Matrix<QQ> inclusion;
};

/// Computes the joint kernel of (g - id) over k after realification, then
/// coordinatizes every structure map in the invariant basis; every resulting
/// coefficient is required to be rational. Throws when the invariant space
/// dimension over k differs from the L-dimension of the object, or when a
/// structure map leaves the invariant span. run_axiom_suite additionally
/// reruns verify_hopf on the output.
InvariantsResult invariants(const SemilinearAction& act, bool run_axiom_suite = true);

/// Speiser lemma as an executable check: the invariant vectors span the
/// object over L (full rank of basis_l).
bool speiser_check(const SemilinearAction& act, const InvariantsResult& inv);

/// The action g . (x e_t) = g(x) e_{phi(g) t} on the function algebra L[T].
/// Both the matrix group law and Hopf compatibility are verified.
SemilinearAction action_from_group_map(const GaloisExtension& ext, const FiniteGroup& t,
                                       const GroupAction& phi);

/// Converse direction: reads the idempotent permutations off the matrices of
/// an action on L[T] in the function-algebra presentation and returns the
/// group map, verifying the round trip action_from_group_map(result) == input.
GroupAction classify_action(const SemilinearAction& act, const FiniteGroup& t);

/// One block of the decomposition of (L[T])^G: an orbit of the G-action on
/// T, its stabilizer's fixed field, and that field as a k-algebra in the
/// power basis.
struct FormComponent {
    Orbit orbit;
    FixedField fixed;
    StructureAlgebra<QQ> field_algebra;
};

struct FormDecomposition {
    std::vector<FormComponent> components;
    AlgebraMorphism<QQ> iso;  // direct sum of the component fields -> invariants
    std::vector<std::pair<size_t, size_t>> block_ranges;  // [begin, end) per component
};

/// The isomorphism (+)_i L^{stab(t_i)} -> (L[T])^G sending x to
/// sum_{g in G/stab(t_i)} g(x) e_{phi(g) t_i}, assembled as one exact matrix
/// and verified to be a bijective algebra map.
FormDecomposition form_decomposition(const GroupAction& phi, const GaloisExtension& ext,
                                     const InvariantsResult& inv);

/// Realizes the fixed field L^H as a quotient of a semisimple cosemisimple
/// commutative Hopf algebra over k, via T = Z2(G/H) and left translation.
struct FieldQuotientResult {
    HopfAlgebraData<QQ> hopf;
    FixedField field;
    AlgebraMorphism<QQ> onto_field;
    InvariantsResult inv;
    FormDecomposition decomposition;
};

FieldQuotientResult field_as_quotient(const GaloisExtension& ext,
                                      const std::vector<size_t>& subgroup);

/// Pairwise-nonisomorphism certificate for the forms built from quadratic
/// fields Q(sqrt(d)): the multiset of quadratic component discriminants
/// distinguishes the underlying algebras. Requires every d squarefree.
struct FormsFamilyCertificate {
    std::vector<long long> discriminants;  // one quadratic component per input
    bool pairwise_distinct = false;
};

FormsFamilyCertificate forms_family_certificate(const std::vector<GaloisExtension>& exts);

/// Base change of a Hopf algebra over k along L/k, wrapped as an LObject
/// with the coordinatewise (all M_g = identity) action available.
SemilinearAction induced_action(const GaloisExtension& ext, const HopfAlgebraData<QQ>& h);

}  // namespace hopfforms

#endif
