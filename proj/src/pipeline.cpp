#include "hopfforms/pipeline.hpp"

#include <bit>

namespace hopfforms {

namespace {

const QQ qq;

Rational pipeline_rational(const NFElement& x, const std::string& what) {
    if (!x.is_rational())
        throw MathError(what + " has an irrational coefficient");
    return x.rational_part();
}

bool weight_one(size_t t) {
    return std::popcount(static_cast<unsigned long long>(t)) == 1;
}

// Binv * v for a sparse v over L, returned dense
std::vector<NFElement> inv_coords(const NFCtx& ctx, const Matrix<NFCtx>& binv,
                                  const SVec<NFCtx>& v) {
    std::vector<NFElement> out(binv.rows(), ctx.zero());
    for (const auto& [k, c] : v.terms) {
        for (size_t r = 0; r < binv.rows(); ++r) {
            const NFElement& b = binv.at(r, k);
            if (b.is_zero()) continue;
            out[r] = nf_add(out[r], nf_mul(b, c));
        }
    }
    return out;
}

}  // namespace

SemilinearAction star_action(const HopfAlgebraData<QQ>& x, const GaloisExtension& ext) {
    const size_t ng = ext.order();
    const size_t tsize = size_t{1} << ng;
    if (x.algebra.dim % tsize != 0)
        throw MathError("star_action: dimension is not a multiple of 2^|G|");
    const size_t n = x.algebra.dim / tsize;

    NFCtx ctx{ext.field};
    SemilinearAction act;
    act.object = LObject{ext, base_change(x, ctx)};
    for (size_t g = 0; g < ng; ++g) {
        // bit p of t moves to p g^{-1}; the group factor is untouched
        std::vector<size_t> bit_image(ng);
        for (size_t p = 0; p < ng; ++p) bit_image[p] = ext.compose(p, ext.inverse(g));
        Matrix<NFCtx> m(ctx, x.algebra.dim, x.algebra.dim);
        for (size_t t = 0; t < tsize; ++t) {
            size_t img = 0;
            for (size_t p = 0; p < ng; ++p)
                if (t & (size_t{1} << p)) img |= size_t{1} << bit_image[p];
            for (size_t nn = 0; nn < n; ++nn)
                m.at(img * n + nn, t * n + nn) = ctx.one();
        }
        act.maps.push_back(std::move(m));
    }
    Report sl = verify_semilinear(act);
    if (!sl.all_pass())
        throw MathError("star action fails " + sl.first_failure()->name + " at " +
                        sl.first_failure()->where);
    HopfSemilinearVerdict hv = verify_hopf_semilinear(act);
    if (!hv.all())
        throw MathError("star action is not Hopf-compatible at " + hv.where);
    return act;
}

AlgebraSplit h1_h2_split(const InvariantsResult& inv, size_t n_order) {
    const StructureAlgebra<QQ>& h = inv.hopf.algebra;
    const size_t n = h.dim;
    if (n_order == 0 || inv.basis_l.rows() != n)
        throw MathError("h1_h2_split: malformed invariants input");

    AlgebraSplit out;
    std::vector<bool> in_h1(n, false);
    for (size_t a = 0; a < n; ++a) {
        bool group_like = false, other = false;
        for (size_t r = 0; r < n; ++r) {
            if (inv.basis_l.at(r, a).is_zero()) continue;
            (weight_one(r / n_order) ? group_like : other) = true;
        }
        if (group_like && other)
            throw MathError("h1_h2_split: invariant basis vector " + std::to_string(a) +
                            " mixes weight-one idempotent support with the rest");
        in_h1[a] = group_like;
        (group_like ? out.h1_indices : out.h2_indices).push_back(a);
    }
    out.report.add("every invariant basis vector has homogeneous support", true);
    out.report.add("dim H1 + dim H2 = dim H",
                   out.h1_indices.size() + out.h2_indices.size() == n);

    // two-sided ideal checks, exhaustive over all products with the H basis
    auto ideal_check = [&](const std::vector<size_t>& part, bool side,
                           const std::string& name) {
        for (size_t a : part) {
            for (size_t c = 0; c < n; ++c) {
                for (const SVec<QQ>* prod : {&h.mult_at(a, c), &h.mult_at(c, a)}) {
                    for (const auto& [k, v] : prod->terms) {
                        if (in_h1[k] != side)
                            throw MathError("h1_h2_split: " + name +
                                            " is not a two-sided ideal; product of basis " +
                                            std::to_string(a) + " and " + std::to_string(c) +
                                            " leaves it");
                    }
                }
            }
        }
        out.report.add(name + " is a two-sided ideal", true);
    };
    ideal_check(out.h1_indices, true, "H1");
    ideal_check(out.h2_indices, false, "H2");
    {
        bool ok = true;
        for (size_t a : out.h1_indices)
            for (size_t b : out.h2_indices)
                if (!h.mult_at(a, b).empty() || !h.mult_at(b, a).empty()) ok = false;
        out.report.add("H1 and H2 annihilate each other", ok);
        if (!ok) throw MathError("h1_h2_split: the summands do not annihilate each other");
    }

    auto restrict_to = [&](const std::vector<size_t>& part) {
        std::vector<size_t> pos(n, n);
        for (size_t j = 0; j < part.size(); ++j) pos[part[j]] = j;
        StructureAlgebra<QQ> sub;
        sub.field = qq;
        sub.dim = part.size();
        sub.mult.assign(sub.dim * sub.dim, SVec<QQ>{});
        for (size_t i = 0; i < part.size(); ++i) {
            sub.labels.push_back(h.label_of(part[i]));
            sub.unit.push_back(h.unit[part[i]]);
            for (size_t j = 0; j < part.size(); ++j) {
                SVec<QQ> s;
                for (const auto& [k, v] : h.mult_at(part[i], part[j]).terms)
                    s.terms.emplace_back(pos[k], v);
                sub.mult_at(i, j) = std::move(s);
            }
        }
        Report rep = verify_algebra(sub);
        if (!rep.all_pass())
            throw MathError("h1_h2_split: restricted algebra fails " +
                            rep.first_failure()->name);
        return sub;
    };
    out.h1 = restrict_to(out.h1_indices);
    if (!out.h2_indices.empty()) out.h2 = restrict_to(out.h2_indices);
    out.report.add("each summand is a unital algebra under the split unit", true);

    out.h1_projection = Matrix<QQ>(qq, out.h1_indices.size(), n);
    for (size_t j = 0; j < out.h1_indices.size(); ++j)
        out.h1_projection.at(j, out.h1_indices[j]) = Rational(1);
    return out;
}

StructureAlgebra<QQ> b_algebra(const GaloisExtension& ext, const GroupExtensionData& ged) {
    const size_t d = ext.field->degree();
    const FiniteGroup& gh = ged.ghat;
    if (ged.projection.size() != gh.order)
        throw MathError("b_algebra: projection table does not match Ghat");

    std::vector<NFElement> pow;
    for (size_t i = 0; i < d; ++i)
        pow.push_back(nf_pow(nf_generator(ext.field), static_cast<long>(i)));

    StructureAlgebra<QQ> b;
    b.field = qq;
    b.dim = d * gh.order;
    b.mult.assign(b.dim * b.dim, SVec<QQ>{});
    b.unit.assign(b.dim, Rational(0));
    b.unit[gh.identity_index * d] = 1;
    for (size_t g = 0; g < gh.order; ++g)
        for (size_t i = 0; i < d; ++i)
            b.labels.push_back((i == 0 ? std::string("1") : "t^" + std::to_string(i)) +
                               "*" + gh.label_of(g));
    for (size_t g1 = 0; g1 < gh.order; ++g1) {
        const size_t p = ged.projection[g1];
        for (size_t g2 = 0; g2 < gh.order; ++g2) {
            const size_t g12 = gh.mul(g1, g2);
            for (size_t i = 0; i < d; ++i) {
                for (size_t j = 0; j < d; ++j) {
                    NFElement prod = nf_mul(pow[i], apply_automorphism(ext, p, pow[j]));
                    SVec<QQ> s;
                    for (size_t k = 0; k < d; ++k)
                        if (!(prod.coeffs[k] == 0))
                            s.terms.emplace_back(g12 * d + k, prod.coeffs[k]);
                    b.mult_at(g1 * d + i, g2 * d + j) = std::move(s);
                }
            }
        }
    }
    Report rep = verify_algebra(b);
    if (!rep.all_pass())
        throw MathError("b_algebra fails " + rep.first_failure()->name + " at " +
                        rep.first_failure()->where);
    return b;
}

AlgebraMorphism<QQ> phi_map(const GaloisExtension& ext, const GroupExtensionData& ged,
                            const InvariantsResult& inv, const AlgebraSplit& split,
                            const StructureAlgebra<QQ>& b) {
    const NFCtx ctx{ext.field};
    const size_t n = inv.hopf.algebra.dim;
    const size_t d = ext.field->degree();
    const size_t nh = ged.ghat.order;
    if (b.dim != d * nh) throw MathError("phi_map: B has the wrong dimension");

    std::vector<size_t> pos(n, n);
    for (size_t j = 0; j < split.h1_indices.size(); ++j) pos[split.h1_indices[j]] = j;

    Matrix<NFCtx> binv = matrix_inverse(inv.basis_l);
    std::vector<NFElement> pow;
    for (size_t i = 0; i < d; ++i)
        pow.push_back(nf_pow(nf_generator(ext.field), static_cast<long>(i)));

    Matrix<QQ> m(qq, split.h1_indices.size(), b.dim);
    for (size_t g1 = 0; g1 < nh; ++g1) {
        for (size_t i = 0; i < d; ++i) {
            SVec<NFCtx> v;
            for (size_t g = 0; g < ext.order(); ++g)
                v.terms.emplace_back((size_t{1} << ext.inverse(g)) * nh + g1,
                                     apply_automorphism(ext, g, pow[i]));
            std::vector<NFElement> coords = inv_coords(ctx, binv, v);
            for (size_t r = 0; r < n; ++r) {
                if (coords[r].is_zero()) continue;
                if (pos[r] == n)
                    throw MathError("phi_map: image leaves H1 at invariant basis " +
                                    std::to_string(r));
                m.at(pos[r], g1 * d + i) = pipeline_rational(coords[r], "phi image");
            }
        }
    }

    AlgebraMorphism<QQ> phi{b, split.h1, std::move(m)};
    MorphismVerdict v = verify_morphism(phi);
    if (!v.is_algebra_map)
        throw MathError("phi is not an algebra map at " + v.counterexample);
    if (!v.is_onto || !v.is_injective) throw MathError("phi is not bijective");
    return phi;
}

AlgebraMorphism<QQ> psi_map(const GroupExtensionData& ged, const CrossedProduct& a,
                            const StructureAlgebra<QQ>& b) {
    const GaloisExtension& ext = a.cocycle.extension;
    const size_t d = a.field_degree, ng = a.group_order;
    if (b.dim != d * ged.ghat.order) throw MathError("psi_map: B has the wrong dimension");

    std::vector<NFElement> pow;
    for (size_t i = 0; i < d; ++i)
        pow.push_back(nf_pow(nf_generator(ext.field), static_cast<long>(i)));

    Matrix<QQ> m(qq, a.algebra.dim, b.dim);
    for (size_t gh = 0; gh < ged.ghat.order; ++gh) {
        const size_t z = gh / ng, g = gh % ng;
        for (size_t i = 0; i < d; ++i)
            m.set_col(gh * d + i, crossed_embed(a, nf_mul(pow[i], ged.scalar_of[z]), g));
    }

    AlgebraMorphism<QQ> psi{b, a.algebra, std::move(m)};
    MorphismVerdict v = verify_morphism(psi);
    if (!v.is_algebra_map)
        throw MathError("psi is not an algebra map at " + v.counterexample);
    if (!v.is_onto) throw MathError("psi is not onto");
    if (v.kernel_dim != b.dim - a.algebra.dim)
        throw MathError("psi kernel has the wrong dimension");
    return psi;
}

PipelineReport pipeline(const Cocycle& alpha) {
    const GaloisExtension& ext = alpha.extension;
    PipelineReport rep;

    rep.extension = extension_group(alpha);
    rep.report.add("extension group 1 -> mu -> Ghat -> G -> 1 built", true);

    FiniteGroup gal = galois_as_group(ext);
    std::vector<std::vector<size_t>> left(gal.order, std::vector<size_t>(gal.order));
    for (size_t g = 0; g < gal.order; ++g)
        for (size_t p = 0; p < gal.order; ++p) left[g][p] = gal.mul(g, p);
    auto [tgroup, gact] = z2_span(gal.order, gal, left);
    rep.t = tgroup;

    std::vector<std::vector<size_t>> maps;
    for (size_t h = 0; h < rep.extension.ghat.order; ++h)
        maps.push_back(gact.maps[rep.extension.projection[h]]);
    rep.psi = make_action(rep.extension.ghat, tgroup, std::move(maps));
    rep.report.add("Ghat acts on T = Z2 G through the projection", true);

    rep.x = bicrossed(tgroup, rep.extension.ghat, rep.psi, qq);
    rep.report.add("bicrossed product Hopf axioms", true);

    rep.star = star_action(rep.x, ext);
    rep.report.add("star action matrix group law and Hopf compatibility", true);

    rep.invariants_result = invariants(rep.star);
    rep.report.add("invariants Hopf axioms", true);
    rep.report.add("dim H = |T| |Ghat|",
                   rep.invariants_result.hopf.algebra.dim ==
                       tgroup.order * rep.extension.ghat.order);

    rep.h_semisimple = is_semisimple(rep.invariants_result.hopf.algebra);
    rep.h_cosemisimple = is_cosemisimple(rep.invariants_result.hopf);
    rep.report.add("H semisimple", rep.h_semisimple);
    rep.report.add("H cosemisimple", rep.h_cosemisimple);
    if (!rep.h_semisimple || !rep.h_cosemisimple)
        throw MathError("pipeline: H is not semisimple and cosemisimple");

    rep.split = h1_h2_split(rep.invariants_result, rep.extension.ghat.order);
    rep.report.append(rep.split.report);

    rep.b = b_algebra(ext, rep.extension);
    rep.report.add("B associative with dim [L:k] |Ghat|",
                   rep.b.dim == ext.field->degree() * rep.extension.ghat.order);
    rep.report.add("dim H1 = dim B", rep.split.h1.dim == rep.b.dim);
    if (rep.split.h1.dim != rep.b.dim)
        throw MathError("pipeline: dim H1 differs from dim B");

    rep.a = crossed_product(alpha);
    rep.report.add("A central simple", is_central_simple(rep.a.algebra));

    rep.phi = phi_map(ext, rep.extension, rep.invariants_result, rep.split, rep.b);
    rep.report.add("phi: B -> H1 bijective algebra map", true);

    rep.psi_onto = psi_map(rep.extension, rep.a, rep.b);
    rep.report.add("psi: B -> A onto algebra map", true);

    Matrix<QQ> comp = rep.psi_onto.matrix.mul(matrix_inverse(rep.phi.matrix))
                          .mul(rep.split.h1_projection);
    rep.onto = AlgebraMorphism<QQ>{rep.invariants_result.hopf.algebra, rep.a.algebra,
                                   std::move(comp)};
    MorphismVerdict v = verify_morphism(rep.onto);
    rep.report.add("composite H -> A is an algebra map", v.is_algebra_map,
                   v.counterexample);
    rep.report.add("composite H -> A is onto", v.is_onto);
    rep.report.add("composite kernel dimension",
                   v.kernel_dim ==
                       rep.invariants_result.hopf.algebra.dim - rep.a.algebra.dim);
    if (!rep.report.all_pass())
        throw MathError("pipeline: " + rep.report.first_failure()->name + " failed");
    return rep;
}

Report verify_hopf_morphism(const HopfAlgebraData<QQ>& src, const HopfAlgebraData<QQ>& dst,
                            const Matrix<QQ>& m) {
    Report rep;
    MorphismVerdict v = verify_morphism(AlgebraMorphism<QQ>{src.algebra, dst.algebra, m});
    rep.add("algebra map", v.is_algebra_map, v.counterexample);
    rep.add("bijective", v.is_onto && v.is_injective);

    const size_t ns = src.algebra.dim, nd = dst.algebra.dim;
    std::vector<SVec<QQ>> cols(ns);
    for (size_t i = 0; i < ns; ++i) cols[i] = svec_from_dense(qq, m.col(i));

    bool comult_ok = true;
    std::string comult_where;
    for (size_t i = 0; i < ns && comult_ok; ++i) {
        SparseAccum<QQ> lhs(qq);
        for (const auto& [k, c] : cols[i].terms)
            lhs.add_scaled(dst.coalgebra.comult[k], c);
        SparseAccum<QQ> rhs(qq);
        for (const auto& [pq, c] : src.coalgebra.comult[i].terms) {
            for (const auto& [r, cr] : cols[pq / ns].terms)
                for (const auto& [s, cs] : cols[pq % ns].terms)
                    rhs.add(r * nd + s, c * cr * cs);
        }
        if (!svec_eq(qq, lhs.flush(), rhs.flush())) {
            comult_ok = false;
            comult_where = "basis " + std::to_string(i);
        }
    }
    rep.add("comultiplication compatible", comult_ok, comult_where);

    bool counit_ok = true;
    std::string counit_where;
    for (size_t i = 0; i < ns && counit_ok; ++i) {
        Rational e(0);
        for (const auto& [k, c] : cols[i].terms) e += c * dst.coalgebra.counit[k];
        if (!(e == src.coalgebra.counit[i])) {
            counit_ok = false;
            counit_where = "basis " + std::to_string(i);
        }
    }
    rep.add("counit compatible", counit_ok, counit_where);
    rep.add("antipode compatible", dst.antipode.mul(m).eq(m.mul(src.antipode)));
    return rep;
}

GroupFormCheck group_algebra_form_check(const HopfAlgebraData<QQ>& x,
                                        const GroupAction& psi) {
    GroupFormCheck out;
    CharacterGroup tsharp = character_group(psi.space);
    GroupAction dual = dual_action(psi);
    out.product = semidirect_product_group(psi.group, tsharp.dual, dual);
    if (x.algebra.dim != out.product.order)
        throw MathError("group_algebra_form_check: dimension mismatch");
    out.group_hopf = group_algebra(out.product, qq);

    const size_t ts = tsharp.dual.order, nh = psi.group.order;
    Matrix<QQ> m(qq, x.algebra.dim, out.product.order);
    for (size_t gh = 0; gh < nh; ++gh) {
        const size_t ginv = psi.group.inv(gh);
        for (size_t chi = 0; chi < ts; ++chi) {
            for (size_t t = 0; t < ts; ++t)
                m.at(t * nh + gh, gh * ts + chi) =
                    Rational(tsharp.pairing(chi, psi.act(ginv, t)));
        }
    }
    out.report = verify_hopf_morphism(out.group_hopf, x, m);
    out.iso = AlgebraMorphism<QQ>{out.group_hopf.algebra, x.algebra, std::move(m)};
    if (!out.report.all_pass())
        throw MathError("group_algebra_form_check fails " +
                        out.report.first_failure()->name + " at " +
                        out.report.first_failure()->where);
    return out;
}

EndomorphismCheck endomorphism_ring_check(const PipelineReport& rep) {
    const StructureAlgebra<QQ>& a = rep.a.algebra;
    const StructureAlgebra<QQ>& h = rep.invariants_result.hopf.algebra;
    const size_t d = a.dim;

    EndomorphismCheck out;
    // H acting on V = A through the composite surjection, as d x d matrices
    Matrix<QQ> repm(qq, d * d, h.dim);
    for (size_t i = 0; i < h.dim; ++i) {
        SVec<QQ> img = svec_from_dense(qq, rep.onto.matrix.col(i));
        for (size_t q = 0; q < d; ++q) {
            SVec<QQ> col = a.multiply(img, svec_single<QQ>(q, Rational(1)));
            for (const auto& [p, c] : col.terms) repm.at(p * d + q, i) = c;
        }
    }
    AlgebraMorphism<QQ> action{h, matrix_algebra(qq, d), std::move(repm)};
    out.report.add("module action is an algebra map",
                   verify_morphism(action).is_algebra_map);

    auto [cent, basis] = centralizer_in_endomorphisms(action);
    out.centralizer = cent;
    out.report.add("centralizer dimension equals dim A", cent.dim == d);

    StructureAlgebra<QQ> aop;
    aop.field = qq;
    aop.dim = d;
    aop.unit = a.unit;
    aop.mult.assign(d * d, SVec<QQ>{});
    for (size_t i = 0; i < d; ++i) {
        aop.labels.push_back(a.label_of(i) + "^op");
        for (size_t j = 0; j < d; ++j) aop.mult_at(i, j) = a.mult_at(j, i);
    }

    ColumnSpanSolver<QQ> span(basis);
    Matrix<QQ> m(qq, cent.dim, d);
    bool inside = true;
    for (size_t i = 0; i < d; ++i) {
        // right multiplication by basis element i, flattened p*d+q
        std::vector<Rational> flat(d * d, Rational(0));
        for (size_t q = 0; q < d; ++q) {
            SVec<QQ> col =
                a.multiply(svec_single<QQ>(q, Rational(1)), svec_single<QQ>(i, Rational(1)));
            for (const auto& [p, c] : col.terms) flat[p * d + q] = c;
        }
        auto coords = span.express(flat);
        if (!coords) {
            inside = false;
            break;
        }
        m.set_col(i, *coords);
    }
    out.report.add("right multiplications centralize the action", inside);
    if (inside) {
        out.right_mult = AlgebraMorphism<QQ>{std::move(aop), cent, std::move(m)};
        MorphismVerdict v = verify_morphism(out.right_mult);
        out.report.add("A^op -> End_H(V) is an algebra map", v.is_algebra_map,
                       v.counterexample);
        out.report.add("A^op -> End_H(V) is bijective", v.is_onto && v.is_injective);
    }
    return out;
}

}  // namespace hopfforms
