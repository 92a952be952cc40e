#include "hopfforms/descent.hpp"

#include <algorithm>

namespace hopfforms {

namespace {

const QQ qq;

std::vector<NFElement> conj_vec(const GaloisExtension& ext, size_t g,
                                const std::vector<NFElement>& v) {
    std::vector<NFElement> r;
    r.reserve(v.size());
    for (const auto& x : v) r.push_back(apply_automorphism(ext, g, x));
    return r;
}

Matrix<NFCtx> conj_matrix(const GaloisExtension& ext, size_t g, const Matrix<NFCtx>& m) {
    Matrix<NFCtx> r(m.field(), m.rows(), m.cols());
    for (size_t i = 0; i < m.rows(); ++i)
        for (size_t j = 0; j < m.cols(); ++j)
            r.at(i, j) = apply_automorphism(ext, g, m.at(i, j));
    return r;
}

// k-coordinates of v in L^n: index i*d + j holds the theta^j coefficient of v_i
std::vector<Rational> realify(const std::vector<NFElement>& v, size_t d) {
    std::vector<Rational> r(v.size() * d, Rational(0));
    for (size_t i = 0; i < v.size(); ++i)
        for (size_t j = 0; j < d; ++j) r[i * d + j] = v[i].coeffs[j];
    return r;
}

std::vector<NFElement> fold(const NumberFieldPtr& field, const std::vector<Rational>& v,
                            size_t n, size_t d) {
    std::vector<NFElement> r;
    r.reserve(n);
    for (size_t i = 0; i < n; ++i) {
        std::vector<Rational> coeffs(v.begin() + i * d, v.begin() + (i + 1) * d);
        r.push_back(nf_from_coeffs(field, std::move(coeffs)));
    }
    return r;
}

Rational require_rational(const NFElement& x, const std::string& what) {
    if (!x.is_rational())
        throw MathError(what + " has an irrational coefficient; the structure map leaves "
                               "the invariant span");
    return x.rational_part();
}

SVec<NFCtx> sv_from_col(const NFCtx& ctx, const Matrix<NFCtx>& m, size_t c) {
    SVec<NFCtx> s;
    for (size_t r = 0; r < m.rows(); ++r)
        if (!m.at(r, c).is_zero()) s.terms.emplace_back(r, m.at(r, c));
    return s;
}

// Binv * (sparse vector), returned dense over L
std::vector<NFElement> apply_inv(const NFCtx& ctx, const Matrix<NFCtx>& binv,
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

std::vector<NFElement> semilinear_apply(const SemilinearAction& act, size_t g,
                                        const std::vector<NFElement>& v) {
    return act.maps[g].apply(conj_vec(act.object.extension, g, v));
}

Report verify_semilinear(const SemilinearAction& act) {
    const GaloisExtension& ext = act.object.extension;
    const size_t n = act.object.dim_l();
    Report rep;
    NFCtx ctx{ext.field};
    {
        bool ok = act.maps.size() == ext.order();
        for (const auto& m : act.maps)
            if (m.rows() != n || m.cols() != n) ok = false;
        rep.add("one square matrix per group element", ok);
        if (!ok) return rep;
    }
    rep.add("identity acts trivially",
            act.maps[ext.identity_index].eq(Matrix<NFCtx>::identity(ctx, n)));
    {
        bool ok = true;
        std::string where;
        for (size_t g = 0; g < ext.order() && ok; ++g) {
            for (size_t h = 0; h < ext.order(); ++h) {
                Matrix<NFCtx> rhs = act.maps[g].mul(conj_matrix(ext, g, act.maps[h]));
                if (!act.maps[ext.compose(g, h)].eq(rhs)) {
                    ok = false;
                    where = "(" + std::to_string(g) + "," + std::to_string(h) + ")";
                    break;
                }
            }
        }
        rep.add("matrix group law M_gh = M_g g(M_h)", ok, where);
    }
    return rep;
}

Report HopfSemilinearVerdict::to_report() const {
    Report r;
    r.add("action commutes with multiplication", mult, mult ? "" : where);
    r.add("action commutes with comultiplication", comult, comult ? "" : where);
    r.add("action commutes with counit", counit, counit ? "" : where);
    r.add("action fixes the unit", unit, unit ? "" : where);
    r.add("action commutes with antipode", antipode, antipode ? "" : where);
    return r;
}

HopfSemilinearVerdict verify_hopf_semilinear(const SemilinearAction& act) {
    const GaloisExtension& ext = act.object.extension;
    const HopfAlgebraData<NFCtx>& h = act.object.hopf;
    const NFCtx& ctx = h.algebra.field;
    const size_t n = h.algebra.dim, ng = ext.order();
    HopfSemilinearVerdict v;
    v.mult = v.comult = v.counit = v.unit = v.antipode = true;
    auto note = [&](bool& flag, const std::string& where) {
        if (flag) {
            flag = false;
            if (v.where.empty()) v.where = where;
        }
    };

    for (size_t g = 0; g < ng; ++g) {
        const Matrix<NFCtx>& mg = act.maps[g];
        std::vector<SVec<NFCtx>> cols(n);
        for (size_t i = 0; i < n; ++i) cols[i] = sv_from_col(ctx, mg, i);

        // multiplication: g.(e_i e_j) = (g.e_i)(g.e_j)
        for (size_t i = 0; i < n && v.mult; ++i) {
            for (size_t j = 0; j < n; ++j) {
                SparseAccum<NFCtx> lhs(ctx);
                for (const auto& [k, c] : h.algebra.mult_at(i, j).terms)
                    lhs.add_scaled(cols[k], apply_automorphism(ext, g, c));
                SVec<NFCtx> rhs = h.algebra.multiply(cols[i], cols[j]);
                if (!svec_eq(ctx, lhs.flush(), rhs)) {
                    note(v.mult, "g=" + std::to_string(g) + " pair (" + std::to_string(i) +
                                     "," + std::to_string(j) + ")");
                    break;
                }
            }
        }
        // comultiplication: Delta(g.e_i) = (g x g) Delta(e_i)
        for (size_t i = 0; i < n && v.comult; ++i) {
            SparseAccum<NFCtx> lhs(ctx);
            for (const auto& [k, c] : cols[i].terms)
                lhs.add_scaled(h.coalgebra.comult[k], c);
            SparseAccum<NFCtx> rhs(ctx);
            for (const auto& [pq, c] : h.coalgebra.comult[i].terms) {
                size_t p = pq / n, q = pq % n;
                NFElement gc = apply_automorphism(ext, g, c);
                for (const auto& [r, cr] : cols[p].terms)
                    for (const auto& [s, cs] : cols[q].terms)
                        rhs.add(r * n + s, nf_mul(gc, nf_mul(cr, cs)));
            }
            if (!svec_eq(ctx, lhs.flush(), rhs.flush()))
                note(v.comult, "g=" + std::to_string(g) + " basis " + std::to_string(i));
        }
        // counit: eps(g.e_i) = g(eps(e_i))
        for (size_t i = 0; i < n && v.counit; ++i) {
            NFElement lhs = ctx.zero();
            for (const auto& [k, c] : cols[i].terms)
                lhs = nf_add(lhs, nf_mul(c, h.coalgebra.counit[k]));
            if (!nf_eq(lhs, apply_automorphism(ext, g, h.coalgebra.counit[i])))
                note(v.counit, "g=" + std::to_string(g) + " basis " + std::to_string(i));
        }
        // unit: g.1 = 1
        if (v.unit) {
            std::vector<NFElement> img = semilinear_apply(act, g, h.algebra.unit);
            for (size_t i = 0; i < n; ++i)
                if (!nf_eq(img[i], h.algebra.unit[i])) {
                    note(v.unit, "g=" + std::to_string(g));
                    break;
                }
        }
        // antipode: S M_g = M_g g(S)
        if (v.antipode) {
            Matrix<NFCtx> lhs = h.antipode.mul(mg);
            Matrix<NFCtx> rhs = mg.mul(conj_matrix(ext, g, h.antipode));
            if (!lhs.eq(rhs)) note(v.antipode, "g=" + std::to_string(g));
        }
    }
    return v;
}

InvariantsResult invariants(const SemilinearAction& act, bool run_axiom_suite) {
    const GaloisExtension& ext = act.object.extension;
    const HopfAlgebraData<NFCtx>& h = act.object.hopf;
    const NFCtx ctx{ext.field};
    const size_t n = h.algebra.dim, d = ext.field->degree(), big = n * d;

    // joint kernel of (g - id) over k, computed incrementally
    Matrix<QQ> k_basis = Matrix<QQ>::identity(qq, big);
    for (size_t g = 0; g < ext.order(); ++g) {
        if (g == ext.identity_index) continue;
        Matrix<QQ> a(qq, big, k_basis.cols());
        for (size_t c = 0; c < k_basis.cols(); ++c) {
            std::vector<NFElement> v = fold(ext.field, k_basis.col(c), n, d);
            std::vector<NFElement> w = semilinear_apply(act, g, v);
            for (size_t i = 0; i < n; ++i) w[i] = nf_sub(w[i], v[i]);
            a.set_col(c, realify(w, d));
        }
        Matrix<QQ> ker = kernel_basis(std::move(a));
        k_basis = k_basis.mul(ker);
    }
    if (k_basis.cols() != n)
        throw MathError("invariant space has k-dimension " + std::to_string(k_basis.cols()) +
                        ", expected " + std::to_string(n) +
                        " (non-Galois data or broken action)");

    Matrix<NFCtx> basis_l(ctx, n, n);
    for (size_t c = 0; c < n; ++c)
        basis_l.set_col(c, fold(ext.field, k_basis.col(c), n, d));
    Matrix<NFCtx> binv = matrix_inverse(basis_l);

    InvariantsResult out;
    out.basis_l = basis_l;
    out.inclusion = k_basis;
    HopfAlgebraData<QQ>& inv = out.hopf;
    inv.algebra.field = qq;
    inv.algebra.dim = n;
    for (size_t c = 0; c < n; ++c) inv.algebra.labels.push_back("h" + std::to_string(c));
    inv.algebra.mult.assign(n * n, SVec<QQ>{});

    std::vector<SVec<NFCtx>> hcols(n);
    for (size_t c = 0; c < n; ++c) hcols[c] = sv_from_col(ctx, basis_l, c);

    for (size_t a = 0; a < n; ++a) {
        for (size_t b = 0; b < n; ++b) {
            SVec<NFCtx> prod = h.algebra.multiply(hcols[a], hcols[b]);
            std::vector<NFElement> coords = apply_inv(ctx, binv, prod);
            SVec<QQ> row;
            for (size_t r = 0; r < n; ++r) {
                if (coords[r].is_zero()) continue;
                row.terms.emplace_back(
                    r, require_rational(coords[r], "product of invariants"));
            }
            inv.algebra.mult_at(a, b) = std::move(row);
        }
    }
    {
        std::vector<NFElement> coords =
            apply_inv(ctx, binv, svec_from_dense(ctx, h.algebra.unit));
        for (auto& x : coords)
            inv.algebra.unit.push_back(require_rational(x, "unit of invariants"));
    }

    inv.coalgebra.dim = n;
    inv.coalgebra.comult.assign(n, SVec<QQ>{});
    for (size_t a = 0; a < n; ++a) {
        // C[p][q] = coefficient of e_p (x) e_q in Delta(h_a)
        SparseAccum<NFCtx> cacc(ctx);
        for (const auto& [k, c] : hcols[a].terms)
            cacc.add_scaled(h.coalgebra.comult[k], c);
        SVec<NFCtx> cvec = cacc.flush();
        // group by tensor column q
        std::map<size_t, SVec<NFCtx>> by_q;
        for (const auto& [pq, c] : cvec.terms)
            by_q[pq % n].terms.emplace_back(pq / n, c);
        // y = Binv C Binv^T, exploiting the sparse column structure of C;
        // rationality only holds for the completed sums, not per term
        SparseAccum<NFCtx> y(ctx);
        for (const auto& [q, colq] : by_q) {
            std::vector<NFElement> dq = apply_inv(ctx, binv, colq);
            for (size_t r = 0; r < n; ++r) {
                if (dq[r].is_zero()) continue;
                for (size_t s = 0; s < n; ++s) {
                    const NFElement& b = binv.at(s, q);
                    if (!b.is_zero()) y.add(r * n + s, nf_mul(dq[r], b));
                }
            }
        }
        SVec<QQ> row;
        for (const auto& [rs, c] : y.flush().terms)
            row.terms.emplace_back(rs, require_rational(c, "comultiplication coefficient"));
        inv.coalgebra.comult[a] = std::move(row);
    }
    for (size_t a = 0; a < n; ++a) {
        NFElement e = ctx.zero();
        for (const auto& [k, c] : hcols[a].terms)
            e = nf_add(e, nf_mul(c, h.coalgebra.counit[k]));
        inv.coalgebra.counit.push_back(require_rational(e, "counit of invariants"));
    }

    inv.antipode = Matrix<QQ>(qq, n, n);
    for (size_t a = 0; a < n; ++a) {
        SparseAccum<NFCtx> sa(ctx);
        for (const auto& [k, c] : hcols[a].terms) {
            for (size_t r = 0; r < n; ++r) {
                const NFElement& s = h.antipode.at(r, k);
                if (!s.is_zero()) sa.add(r, nf_mul(s, c));
            }
        }
        std::vector<NFElement> coords = apply_inv(ctx, binv, sa.flush());
        for (size_t r = 0; r < n; ++r)
            if (!coords[r].is_zero())
                inv.antipode.at(r, a) = require_rational(coords[r], "antipode of invariants");
    }

    if (run_axiom_suite) {
        Report rep = verify_hopf(inv);
        if (!rep.all_pass())
            throw MathError("invariants fail " + rep.first_failure()->name + " at " +
                            rep.first_failure()->where);
    }
    return out;
}

bool speiser_check(const SemilinearAction& act, const InvariantsResult& inv) {
    return inv.basis_l.rows() == act.object.dim_l() &&
           matrix_rank(inv.basis_l) == act.object.dim_l();
}

SemilinearAction action_from_group_map(const GaloisExtension& ext, const FiniteGroup& t,
                                       const GroupAction& phi) {
    if (phi.space.order != t.order)
        throw MathError("action_from_group_map: action space differs from T");
    FiniteGroup gal = galois_as_group(ext);
    if (phi.group.order != gal.order || phi.group.table != gal.table)
        throw MathError("action_from_group_map: actor is not the Galois group");

    NFCtx ctx{ext.field};
    SemilinearAction act;
    act.object = LObject{ext, function_algebra(t, ctx)};
    const size_t n = t.order;
    for (size_t g = 0; g < ext.order(); ++g) {
        Matrix<NFCtx> m(ctx, n, n);
        for (size_t tt = 0; tt < n; ++tt) m.at(phi.act(g, tt), tt) = ctx.one();
        act.maps.push_back(std::move(m));
    }
    Report sl = verify_semilinear(act);
    if (!sl.all_pass())
        throw MathError("permutation action fails " + sl.first_failure()->name);
    HopfSemilinearVerdict hv = verify_hopf_semilinear(act);
    if (!hv.all())
        throw MathError("permutation action is not Hopf-compatible at " + hv.where);
    return act;
}

GroupAction classify_action(const SemilinearAction& act, const FiniteGroup& t) {
    const GaloisExtension& ext = act.object.extension;
    const NFCtx& ctx = act.object.hopf.algebra.field;
    const size_t n = act.object.dim_l();
    if (t.order != n) throw MathError("classify_action: group order differs from dimension");

    // the object must be in the function-algebra (simple idempotent) presentation
    for (size_t i = 0; i < n; ++i) {
        for (size_t j = 0; j < n; ++j) {
            const SVec<NFCtx>& m = act.object.hopf.algebra.mult_at(i, j);
            bool ok = (i == j) ? (m.nnz() == 1 && m.terms[0].first == i &&
                                  ctx.eq(m.terms[0].second, ctx.one()))
                               : m.empty();
            if (!ok)
                throw MathError("classify_action: object is not in the function-algebra "
                                "presentation");
        }
    }

    std::vector<std::vector<size_t>> perms(ext.order(), std::vector<size_t>(n));
    for (size_t g = 0; g < ext.order(); ++g) {
        for (size_t col = 0; col < n; ++col) {
            size_t hits = 0, row_hit = 0;
            for (size_t row = 0; row < n; ++row) {
                const NFElement& x = act.maps[g].at(row, col);
                if (x.is_zero()) continue;
                if (!nf_eq(x, nf_one(ext.field)))
                    throw MathError("classify_action: matrix of automorphism " +
                                    std::to_string(g) + " is not a permutation matrix");
                ++hits;
                row_hit = row;
            }
            if (hits != 1)
                throw MathError("classify_action: matrix of automorphism " +
                                std::to_string(g) + " is not a permutation matrix");
            perms[g][col] = row_hit;
        }
    }
    GroupAction phi = make_action(galois_as_group(ext), t, std::move(perms));
    SemilinearAction rebuilt = action_from_group_map(ext, t, phi);
    for (size_t g = 0; g < ext.order(); ++g)
        if (!rebuilt.maps[g].eq(act.maps[g]))
            throw MathError("classify_action: round trip does not reproduce the matrices");
    return phi;
}

namespace {

StructureAlgebra<QQ> fixed_field_algebra(const FixedField& ff) {
    const size_t fd = ff.field->degree();
    StructureAlgebra<QQ> a;
    a.field = qq;
    a.dim = fd;
    a.mult.assign(fd * fd, SVec<QQ>{});
    NFElement gen = nf_generator(ff.field);
    for (size_t i = 0; i < fd; ++i) {
        a.labels.push_back(i == 0 ? ff.field->label() + ":1"
                                  : ff.field->label() + ":t^" + std::to_string(i));
        for (size_t j = 0; j < fd; ++j) {
            NFElement p = nf_mul(nf_pow(gen, static_cast<long>(i)),
                                 nf_pow(gen, static_cast<long>(j)));
            SVec<QQ> s;
            for (size_t k = 0; k < fd; ++k)
                if (!(p.coeffs[k] == 0)) s.terms.emplace_back(k, p.coeffs[k]);
            a.mult_at(i, j) = std::move(s);
        }
    }
    a.unit.assign(fd, Rational(0));
    a.unit[0] = 1;
    return a;
}

}  // namespace

FormDecomposition form_decomposition(const GroupAction& phi, const GaloisExtension& ext,
                                     const InvariantsResult& inv) {
    const size_t n = inv.hopf.algebra.dim;
    const NFCtx ctx{ext.field};
    Matrix<NFCtx> binv = matrix_inverse(inv.basis_l);

    FormDecomposition dec;
    StructureAlgebra<QQ> direct_sum;
    direct_sum.field = qq;
    direct_sum.dim = 0;
    Matrix<QQ> m(qq, n, n);
    size_t offset = 0;

    std::vector<StructureAlgebra<QQ>> blocks;
    for (const Orbit& o : orbits_stabilizers(phi)) {
        FormComponent comp;
        comp.orbit = o;
        comp.fixed = fixed_field(ext, o.stabilizer);
        comp.field_algebra = fixed_field_algebra(comp.fixed);
        const size_t fd = comp.field_algebra.dim;

        // coset representatives: first g reaching each orbit point
        std::vector<size_t> reps;
        std::vector<bool> seen(phi.space.order, false);
        for (size_t g = 0; g < phi.group.order; ++g) {
            size_t img = phi.act(g, o.representative);
            if (!seen[img]) {
                seen[img] = true;
                reps.push_back(g);
            }
        }
        if (reps.size() * o.stabilizer.size() != phi.group.order)
            throw MathError("coset representative count mismatch");

        for (size_t e = 0; e < fd; ++e) {
            NFElement x = nf_pow(comp.fixed.embedding.generator_image, static_cast<long>(e));
            std::vector<NFElement> vec(n, ctx.zero());
            for (size_t g : reps)
                vec[phi.act(g, o.representative)] = apply_automorphism(ext, g, x);
            std::vector<NFElement> coords =
                apply_inv(ctx, binv, svec_from_dense(ctx, vec));
            for (size_t r = 0; r < n; ++r)
                if (!coords[r].is_zero())
                    m.at(r, offset + e) =
                        require_rational(coords[r], "decomposition image");
        }
        dec.block_ranges.emplace_back(offset, offset + fd);
        offset += fd;
        blocks.push_back(comp.field_algebra);
        dec.components.push_back(std::move(comp));
    }
    if (offset != n)
        throw MathError("component degrees sum to " + std::to_string(offset) +
                        ", expected " + std::to_string(n));

    // direct sum algebra, block diagonal
    direct_sum.dim = n;
    direct_sum.mult.assign(n * n, SVec<QQ>{});
    direct_sum.unit.assign(n, Rational(0));
    for (size_t b = 0; b < blocks.size(); ++b) {
        size_t base = dec.block_ranges[b].first;
        const StructureAlgebra<QQ>& blk = blocks[b];
        for (size_t i = 0; i < blk.dim; ++i) {
            direct_sum.labels.push_back(blk.labels[i]);
            direct_sum.unit[base + i] = blk.unit[i];
            for (size_t j = 0; j < blk.dim; ++j) {
                SVec<QQ> s;
                for (const auto& [k, c] : blk.mult_at(i, j).terms)
                    s.terms.emplace_back(base + k, c);
                direct_sum.mult_at(base + i, base + j) = std::move(s);
            }
        }
    }

    dec.iso = AlgebraMorphism<QQ>{std::move(direct_sum), inv.hopf.algebra, std::move(m)};
    MorphismVerdict verdict = verify_morphism(dec.iso);
    if (!verdict.is_algebra_map)
        throw MathError("decomposition map is not an algebra map at " +
                        verdict.counterexample);
    if (!verdict.is_onto || !verdict.is_injective)
        throw MathError("decomposition map is not bijective");
    return dec;
}

FieldQuotientResult field_as_quotient(const GaloisExtension& ext,
                                      const std::vector<size_t>& subgroup) {
    if (!is_subgroup(ext, subgroup))
        throw MathError("field_as_quotient: input is not a subgroup");
    const size_t ng = ext.order();

    // left cosets gH, identity's coset first
    std::vector<size_t> coset_of(ng, ng);
    std::vector<size_t> reps;
    auto assign = [&](size_t g) {
        if (coset_of[g] != ng) return;
        size_t id = reps.size();
        reps.push_back(g);
        for (size_t h : subgroup) coset_of[ext.compose(g, h)] = id;
    };
    assign(ext.identity_index);
    for (size_t g = 0; g < ng; ++g) assign(g);
    const size_t r = reps.size();

    std::vector<std::vector<size_t>> perms(ng, std::vector<size_t>(r));
    for (size_t g = 0; g < ng; ++g)
        for (size_t c = 0; c < r; ++c) perms[g][c] = coset_of[ext.compose(g, reps[c])];

    FiniteGroup actor = galois_as_group(ext);
    auto [t, phi] = z2_span(r, actor, perms);
    SemilinearAction act = action_from_group_map(ext, t, phi);

    FieldQuotientResult out;
    out.inv = invariants(act);
    out.decomposition = form_decomposition(phi, ext, out.inv);
    out.hopf = out.inv.hopf;

    if (!is_semisimple(out.hopf.algebra))
        throw MathError("field_as_quotient output is not semisimple");
    if (!is_cosemisimple(out.hopf))
        throw MathError("field_as_quotient output is not cosemisimple");

    // component of the weight-1 idempotent at the trivial coset: its orbit
    // representative is the bitmask with bit 0 set, and its stabilizer is H
    std::vector<size_t> want = subgroup;
    std::sort(want.begin(), want.end());
    size_t found = out.decomposition.components.size();
    for (size_t i = 0; i < out.decomposition.components.size(); ++i) {
        const Orbit& o = out.decomposition.components[i].orbit;
        if (std::find(o.elements.begin(), o.elements.end(), size_t{1}) ==
            o.elements.end())
            continue;
        std::vector<size_t> stab = o.stabilizer;
        std::sort(stab.begin(), stab.end());
        if (stab == want) {
            found = i;
            break;
        }
    }
    if (found == out.decomposition.components.size())
        throw MathError("no component with the requested stabilizer");
    out.field = out.decomposition.components[found].fixed;

    Matrix<QQ> iso_inv = matrix_inverse(out.decomposition.iso.matrix);
    auto [lo, hi] = out.decomposition.block_ranges[found];
    Matrix<QQ> proj(qq, hi - lo, out.hopf.algebra.dim);
    for (size_t rr = lo; rr < hi; ++rr)
        for (size_t c = 0; c < out.hopf.algebra.dim; ++c)
            proj.at(rr - lo, c) = iso_inv.at(rr, c);
    out.onto_field =
        AlgebraMorphism<QQ>{out.hopf.algebra,
                            out.decomposition.components[found].field_algebra,
                            std::move(proj)};
    MorphismVerdict verdict = verify_morphism(out.onto_field);
    if (!verdict.is_algebra_map)
        throw MathError("field quotient map is not an algebra map at " +
                        verdict.counterexample);
    if (!verdict.is_onto) throw MathError("field quotient map is not onto");
    return out;
}

namespace {

bool squarefree(long long d) {
    if (d == 0) return false;
    if (d < 0) d = -d;
    for (long long p = 2; p * p <= d; ++p)
        while (d % p == 0) {
            d /= p;
            if (d % p == 0) return false;
        }
    return true;
}

}  // namespace

FormsFamilyCertificate forms_family_certificate(const std::vector<GaloisExtension>& exts) {
    FormsFamilyCertificate cert;
    for (const GaloisExtension& ext : exts) {
        const Poly& p = ext.field->min_poly();
        if (ext.field->degree() != 2 || !(p[1] == 0))
            throw MathError("forms family: extension must be defined by x^2 - d");
        Rational d = -p[0];
        if (boost::multiprecision::denominator(d) != 1)
            throw MathError("forms family: d must be an integer");
        long long dv = boost::multiprecision::numerator(d).convert_to<long long>();
        if (!squarefree(dv))
            throw MathError("forms family: d = " + std::to_string(dv) +
                            " is not squarefree");

        // build the form (L_d[Z2 G])^G and read its quadratic component
        FieldQuotientResult form = field_as_quotient(ext, {ext.identity_index});
        long long quad = 0;
        size_t quad_count = 0;
        for (const FormComponent& comp : form.decomposition.components) {
            if (comp.fixed.field->degree() != 2) continue;
            ++quad_count;
            Rational c0 = comp.fixed.field->min_poly()[0];
            Rational c1 = comp.fixed.field->min_poly()[1];
            // discriminant of x^2 + c1 x + c0, reduced to its squarefree part
            Rational disc = c1 * c1 - 4 * c0;
            long long dd = boost::multiprecision::numerator(disc).convert_to<long long>();
            for (long long q = 2; q * q <= (dd < 0 ? -dd : dd); ++q)
                while (dd % (q * q) == 0) dd /= q * q;
            quad = dd;
        }
        if (quad_count != 1)
            throw MathError("forms family: expected exactly one quadratic component");
        cert.discriminants.push_back(quad);
    }
    cert.pairwise_distinct = true;
    for (size_t i = 0; i < cert.discriminants.size(); ++i)
        for (size_t j = i + 1; j < cert.discriminants.size(); ++j)
            if (cert.discriminants[i] == cert.discriminants[j])
                cert.pairwise_distinct = false;
    return cert;
}

SemilinearAction induced_action(const GaloisExtension& ext, const HopfAlgebraData<QQ>& h) {
    NFCtx ctx{ext.field};
    SemilinearAction act;
    act.object = LObject{ext, base_change(h, ctx)};
    for (size_t g = 0; g < ext.order(); ++g)
        act.maps.push_back(Matrix<NFCtx>::identity(ctx, h.algebra.dim));
    return act;
}

}  // namespace hopfforms
