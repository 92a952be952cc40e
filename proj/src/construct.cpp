#include "hopfforms/construct.hpp"

namespace hopfforms {

std::vector<Rational> crossed_embed(const CrossedProduct& a, const NFElement& x, size_t g) {
    std::vector<Rational> v(a.algebra.dim, Rational(0));
    for (size_t i = 0; i < a.field_degree; ++i) v[a.basis_index(g, i)] = x.coeffs[i];
    return v;
}

CrossedProduct crossed_product(const Cocycle& alpha) {
    const GaloisExtension& ext = alpha.extension;
    const size_t d = ext.field->degree(), ng = ext.order(), dim = d * ng;
    QQ qq;

    CrossedProduct a{StructureAlgebra<QQ>{}, alpha, d, ng};
    a.algebra.field = qq;
    a.algebra.dim = dim;
    a.algebra.mult.assign(dim * dim, SVec<QQ>{});
    for (size_t g = 0; g < ng; ++g)
        for (size_t i = 0; i < d; ++i)
            a.algebra.labels.push_back("theta^" + std::to_string(i) + "U" +
                                       std::to_string(g));

    NFElement theta = nf_generator(ext.field);
    for (size_t g = 0; g < ng; ++g) {
        for (size_t i = 0; i < d; ++i) {
            for (size_t h = 0; h < ng; ++h) {
                for (size_t j = 0; j < d; ++j) {
                    // theta^i U_g theta^j U_h = theta^i g(theta^j) alpha(g,h) U_{gh}
                    NFElement z = nf_mul(
                        nf_pow(theta, static_cast<long>(i)),
                        nf_mul(apply_automorphism(ext, g, nf_pow(theta, static_cast<long>(j))),
                               alpha.at(g, h)));
                    size_t gh = ext.compose(g, h);
                    SVec<QQ> out;
                    for (size_t k = 0; k < d; ++k)
                        if (!(z.coeffs[k] == 0))
                            out.terms.emplace_back(a.basis_index(gh, k), z.coeffs[k]);
                    a.algebra.mult_at(a.basis_index(g, i), a.basis_index(h, j)) =
                        std::move(out);
                }
            }
        }
    }
    a.algebra.unit = crossed_embed(a, nf_one(ext.field), ext.identity_index);

    Report rep = verify_algebra(a.algebra);
    if (!rep.all_pass())
        throw MathError("crossed product fails " + rep.first_failure()->name + " at " +
                        rep.first_failure()->where);
    return a;
}

Cocycle finitize(const Cocycle& alpha, const FinitizationWitness& w) {
    const GaloisExtension& ext = alpha.extension;
    const GaloisExtension& big = w.big;
    const size_t ng = ext.order(), nn = big.order();

    if (!same_field(w.embedding.source, ext.field) ||
        !same_field(w.embedding.target, big.field))
        throw MathError("finitize: embedding does not connect the two fields");
    if (w.f.size() != ng || w.roots.size() != ng || w.projection.size() != nn)
        throw MathError("finitize: witness tables have wrong sizes");
    if (w.m < 1) throw MathError("finitize: order m must be positive");

    // df = alpha^m over L
    for (size_t g1 = 0; g1 < ng; ++g1) {
        for (size_t g2 = 0; g2 < ng; ++g2) {
            NFElement df = nf_mul(w.f[g1], apply_automorphism(ext, g1, w.f[g2]));
            df = nf_mul(df, nf_inv(w.f[ext.compose(g1, g2)]));
            if (!nf_eq(df, nf_pow(alpha.at(g1, g2), w.m)))
                throw MathError("finitize: df differs from alpha^m at pair (" +
                                std::to_string(g1) + "," + std::to_string(g2) + ")");
        }
    }
    // r_g^m = f(g) in K
    for (size_t g = 0; g < ng; ++g) {
        if (!nf_eq(nf_pow(w.roots[g], w.m), apply_embedding(w.embedding, w.f[g])))
            throw MathError("finitize: root power differs from f at index " +
                            std::to_string(g));
    }
    // projection: surjective homomorphism compatible with restriction
    {
        std::vector<bool> hit(ng, false);
        for (size_t h = 0; h < nn; ++h) {
            if (w.projection[h] >= ng) throw MathError("finitize: projection out of range");
            hit[w.projection[h]] = true;
        }
        for (bool b : hit)
            if (!b) throw MathError("finitize: projection is not surjective");
        for (size_t h1 = 0; h1 < nn; ++h1)
            for (size_t h2 = 0; h2 < nn; ++h2)
                if (w.projection[big.compose(h1, h2)] !=
                    ext.compose(w.projection[h1], w.projection[h2]))
                    throw MathError("finitize: projection is not a homomorphism");
        NFElement embedded_gen = apply_embedding(w.embedding, nf_generator(ext.field));
        for (size_t h = 0; h < nn; ++h) {
            NFElement lhs = apply_automorphism(big, h, embedded_gen);
            NFElement rhs = apply_embedding(
                w.embedding,
                apply_automorphism(ext, w.projection[h], nf_generator(ext.field)));
            if (!nf_eq(lhs, rhs))
                throw MathError("finitize: projection incompatible with restriction at " +
                                std::to_string(h));
        }
    }

    // beta(h1,h2) = alpha(pi h1, pi h2) r_{pi h1}^{-1} h1(r_{pi h2}^{-1}) r_{pi(h1h2)}
    std::vector<NFElement> values;
    values.reserve(nn * nn);
    for (size_t h1 = 0; h1 < nn; ++h1) {
        for (size_t h2 = 0; h2 < nn; ++h2) {
            size_t g1 = w.projection[h1], g2 = w.projection[h2];
            NFElement v = apply_embedding(w.embedding, alpha.at(g1, g2));
            v = nf_mul(v, nf_inv(w.roots[g1]));
            v = nf_mul(v, apply_automorphism(big, h1, nf_inv(w.roots[g2])));
            v = nf_mul(v, w.roots[w.projection[big.compose(h1, h2)]]);
            values.push_back(std::move(v));
        }
    }
    Cocycle beta = cocycle_verify(big, values);

    for (size_t idx = 0; idx < values.size(); ++idx) {
        auto ord = is_root_of_unity(beta.values[idx]);
        if (!ord || w.m % static_cast<long>(*ord) != 0)
            throw MathError("finitize: value at flat index " + std::to_string(idx) +
                            " is not a root of unity of order dividing m");
    }

    // certificate: beta * d(c) = inflated alpha with c(h) = r_{pi h}
    for (size_t h1 = 0; h1 < nn; ++h1) {
        for (size_t h2 = 0; h2 < nn; ++h2) {
            NFElement lhs = beta.at(h1, h2);
            lhs = nf_mul(lhs, w.roots[w.projection[h1]]);
            lhs = nf_mul(lhs, apply_automorphism(big, h1, w.roots[w.projection[h2]]));
            lhs = nf_mul(lhs, nf_inv(w.roots[w.projection[big.compose(h1, h2)]]));
            NFElement rhs = apply_embedding(
                w.embedding, alpha.at(w.projection[h1], w.projection[h2]));
            if (!nf_eq(lhs, rhs))
                throw MathError("finitize: inflation certificate fails at pair (" +
                                std::to_string(h1) + "," + std::to_string(h2) + ")");
        }
    }
    return beta;
}

}  // namespace hopfforms
