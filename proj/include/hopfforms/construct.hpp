#ifndef HOPFFORMS_CONSTRUCT_HPP
#define HOPFFORMS_CONSTRUCT_HPP

#include "hopfforms/algebra.hpp"
#include "hopfforms/groups.hpp"

namespace hopfforms {

/// Group algebra of N: basis the group elements, Delta(n) = n (x) n,
/// eps(n) = 1, S(n) = n^{-1}. The axiom suite is run before returning.
template <class F>
HopfAlgebraData<F> group_algebra(const FiniteGroup& n, const F& field) {
    const size_t m = n.order;
    HopfAlgebraData<F> h;
    h.algebra.field = field;
    h.algebra.dim = m;
    h.algebra.unit.assign(m, field.zero());
    h.algebra.unit[n.identity_index] = field.one();
    h.algebra.mult.assign(m * m, SVec<F>{});
    for (size_t a = 0; a < m; ++a) {
        h.algebra.labels.push_back(n.label_of(a));
        for (size_t b = 0; b < m; ++b)
            h.algebra.mult_at(a, b) = svec_single<F>(n.mul(a, b), field.one());
    }
    h.coalgebra.dim = m;
    h.coalgebra.counit.assign(m, field.one());
    for (size_t a = 0; a < m; ++a)
        h.coalgebra.comult.push_back(svec_single<F>(tensor_index(m, a, a), field.one()));
    h.antipode = Matrix<F>(field, m, m);
    for (size_t a = 0; a < m; ++a) h.antipode.at(n.inv(a), a) = field.one();
    Report rep = verify_hopf(h);
    if (!rep.all_pass())
        throw MathError("group algebra fails " + rep.first_failure()->name + " at " +
                        rep.first_failure()->where);
    return h;
}

/// Function algebra on T: simple idempotents e_t with e_t e_s = delta e_t,
/// unit = sum e_t, Delta(e_t) = sum_{rs=t} e_r (x) e_s, eps(e_t) = delta_{t,1},
/// S(e_t) = e_{t^{-1}}. Dual of the group algebra under the canonical pairing.
template <class F>
HopfAlgebraData<F> function_algebra(const FiniteGroup& t, const F& field) {
    const size_t m = t.order;
    HopfAlgebraData<F> h;
    h.algebra.field = field;
    h.algebra.dim = m;
    h.algebra.unit.assign(m, field.one());
    h.algebra.mult.assign(m * m, SVec<F>{});
    for (size_t a = 0; a < m; ++a) {
        h.algebra.labels.push_back("e_" + t.label_of(a));
        h.algebra.mult_at(a, a) = svec_single<F>(a, field.one());
    }
    h.coalgebra.dim = m;
    h.coalgebra.counit.assign(m, field.zero());
    h.coalgebra.counit[t.identity_index] = field.one();
    h.coalgebra.comult.assign(m, SVec<F>{});
    for (size_t r = 0; r < m; ++r)
        for (size_t s = 0; s < m; ++s)
            h.coalgebra.comult[t.mul(r, s)].terms.emplace_back(tensor_index(m, r, s),
                                                               field.one());
    for (auto& c : h.coalgebra.comult)
        std::sort(c.terms.begin(), c.terms.end(),
                  [](const auto& x, const auto& y) { return x.first < y.first; });
    h.antipode = Matrix<F>(field, m, m);
    for (size_t a = 0; a < m; ++a) h.antipode.at(t.inv(a), a) = field.one();
    Report rep = verify_hopf(h);
    if (!rep.all_pass())
        throw MathError("function algebra fails " + rep.first_failure()->name + " at " +
                        rep.first_failure()->where);
    return h;
}

/// Bicrossed product k[T] x kN for an action psi of N on T by automorphisms:
/// basis e_t (x) n at index t*|N| + idx(n), with
///   (e_{t1} (x) n1)(e_{t2} (x) n2) = delta_{t1, psi(n1) t2} e_{t1} (x) n1 n2,
/// tensor coalgebra Delta(e_t (x) n) = sum_{rs=t} (e_r (x) n) (x) (e_s (x) n),
/// and the derived antipode S(e_t (x) n) = e_{psi(n^{-1})(t^{-1})} (x) n^{-1}.
/// The antipode formula is not taken on trust: the full axiom suite runs
/// before the object is returned.
template <class F>
HopfAlgebraData<F> bicrossed(const FiniteGroup& t, const FiniteGroup& n,
                             const GroupAction& psi, const F& field) {
    if (psi.group.order != n.order || psi.space.order != t.order)
        throw MathError("bicrossed: action does not match the given groups");
    const size_t mt = t.order, mn = n.order, dim = mt * mn;
    auto idx = [&](size_t a, size_t b) { return a * mn + b; };

    HopfAlgebraData<F> h;
    h.algebra.field = field;
    h.algebra.dim = dim;
    h.algebra.mult.assign(dim * dim, SVec<F>{});
    h.algebra.unit.assign(dim, field.zero());
    for (size_t t1 = 0; t1 < mt; ++t1)
        for (size_t n1 = 0; n1 < mn; ++n1)
            h.algebra.labels.push_back("e_" + t.label_of(t1) + "*" + n.label_of(n1));
    for (size_t t1 = 0; t1 < mt; ++t1) {
        for (size_t n1 = 0; n1 < mn; ++n1) {
            for (size_t n2 = 0; n2 < mn; ++n2) {
                // only t2 with psi(n1) t2 = t1 contributes
                size_t t2 = psi.act(n.inv(n1), t1);
                h.algebra.mult_at(idx(t1, n1), idx(t2, n2)) =
                    svec_single<F>(idx(t1, n.mul(n1, n2)), field.one());
            }
        }
    }
    for (size_t t1 = 0; t1 < mt; ++t1)
        h.algebra.unit[idx(t1, n.identity_index)] = field.one();

    h.coalgebra.dim = dim;
    h.coalgebra.counit.assign(dim, field.zero());
    for (size_t n1 = 0; n1 < mn; ++n1)
        h.coalgebra.counit[idx(t.identity_index, n1)] = field.one();
    h.coalgebra.comult.assign(dim, SVec<F>{});
    for (size_t r = 0; r < mt; ++r)
        for (size_t s = 0; s < mt; ++s)
            for (size_t n1 = 0; n1 < mn; ++n1)
                h.coalgebra.comult[idx(t.mul(r, s), n1)].terms.emplace_back(
                    tensor_index(dim, idx(r, n1), idx(s, n1)), field.one());
    for (auto& c : h.coalgebra.comult)
        std::sort(c.terms.begin(), c.terms.end(),
                  [](const auto& x, const auto& y) { return x.first < y.first; });

    h.antipode = Matrix<F>(field, dim, dim);
    for (size_t t1 = 0; t1 < mt; ++t1)
        for (size_t n1 = 0; n1 < mn; ++n1)
            h.antipode.at(idx(psi.act(n.inv(n1), t.inv(t1)), n.inv(n1)), idx(t1, n1)) =
                field.one();

    Report rep = verify_hopf(h);
    if (!rep.all_pass())
        throw MathError("bicrossed product fails " + rep.first_failure()->name + " at " +
                        rep.first_failure()->where);
    return h;
}

struct BicrossedBlock {
    std::vector<size_t> orbit;       // T indices
    std::vector<size_t> stabilizer;  // N indices
    std::vector<size_t> basis;       // X basis indices in the block ideal
};

/// Central-idempotent block decomposition of a bicrossed product: one block
/// per N-orbit on T, verified central and idempotent, dims summing to dim X.
template <class F>
std::vector<BicrossedBlock> bicrossed_block_decomposition(const HopfAlgebraData<F>& x,
                                                          const FiniteGroup& t,
                                                          const FiniteGroup& n,
                                                          const GroupAction& psi) {
    const F& field = x.algebra.field;
    const size_t mn = n.order, dim = x.algebra.dim;
    std::vector<BicrossedBlock> blocks;
    size_t total = 0;
    for (const Orbit& o : orbits_stabilizers(psi)) {
        BicrossedBlock b;
        b.orbit = o.elements;
        b.stabilizer = o.stabilizer;
        std::vector<typename F::Elem> idem(dim, field.zero());
        for (size_t tt : o.elements) {
            idem[tt * mn + n.identity_index] = field.one();
            for (size_t nn = 0; nn < mn; ++nn) b.basis.push_back(tt * mn + nn);
        }
        SVec<F> e = svec_from_dense(field, idem);
        if (!svec_eq(field, x.algebra.multiply(e, e), e))
            throw MathError("block element is not idempotent");
        for (size_t i = 0; i < dim; ++i) {
            SVec<F> bi = svec_single<F>(i, field.one());
            if (!svec_eq(field, x.algebra.multiply(e, bi), x.algebra.multiply(bi, e)))
                throw MathError("block idempotent is not central");
        }
        // two-sided ideal: e X e is spanned by the block basis
        for (size_t i = 0; i < dim; ++i) {
            SVec<F> bi = svec_single<F>(i, field.one());
            for (const auto& [k, c] : x.algebra.multiply(e, bi).terms)
                if (std::find(b.basis.begin(), b.basis.end(), k) == b.basis.end())
                    throw MathError("block ideal leaves its span");
        }
        total += b.basis.size();
        blocks.push_back(std::move(b));
    }
    if (total != dim) throw MathError("block dimensions do not sum to dim X");
    return blocks;
}

/// Crossed product L *_alpha G as a k-algebra of dimension [L:k] |G| on the
/// basis theta^i U_g (index g*[L:k] + i), with x U_g y U_h =
/// x g(y) alpha(g,h) U_{gh}. Associativity is reverified on the structure
/// constants independently of the cocycle identity.
struct CrossedProduct {
    StructureAlgebra<QQ> algebra;
    Cocycle cocycle;
    size_t field_degree = 0;  // [L:k]
    size_t group_order = 0;

    size_t basis_index(size_t g, size_t power) const { return g * field_degree + power; }
};

CrossedProduct crossed_product(const Cocycle& alpha);

/// Coordinates of an L-spanned element x U_g in the crossed product basis.
std::vector<Rational> crossed_embed(const CrossedProduct& a, const NFElement& x, size_t g);

/// Caller-supplied data certifying that alpha^m is the coboundary of f, with
/// m-th roots of f's values living in a bigger Galois extension K.
struct FinitizationWitness {
    long m = 1;
    std::vector<NFElement> f;       // per G index, values in L
    GaloisExtension big;            // K/k with group N
    FieldEmbedding embedding;       // L -> K
    std::vector<NFElement> roots;   // per G index, r_g in K with r_g^m = f(g)
    std::vector<size_t> projection; // N index -> G index
};

/// The finite cocycle beta over K with group N given by
/// beta(h1,h2) = alpha(pi h1, pi h2) r_{pi h1}^{-1} h1(r_{pi h2}^{-1}) r_{pi(h1 h2)};
/// every value is verified to be a root of unity of order dividing m, and the
/// certificate beta = inf(alpha) * d(c^{-1}) with c(h) = r_{pi h} is checked
/// on all pairs.
Cocycle finitize(const Cocycle& alpha, const FinitizationWitness& w);

}  // namespace hopfforms

#endif
