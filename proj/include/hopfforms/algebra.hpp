#ifndef HOPFFORMS_ALGEBRA_HPP
#define HOPFFORMS_ALGEBRA_HPP

#include <string>
#include <vector>

#include "hopfforms/field.hpp"
#include "hopfforms/matrix.hpp"
#include "hopfforms/report.hpp"
#include "hopfforms/sparse.hpp"

namespace hopfforms {

/// Finite-dimensional associative algebra presented by structure constants.
/// mult(i, j) holds the expansion of b_i * b_j in the basis. Associativity
/// and unitality are verified by verify_algebra, not assumed.
template <class F>
struct StructureAlgebra {
    F field;
    size_t dim = 0;
    std::vector<std::string> labels;
    std::vector<SVec<F>> mult;            // dim*dim entries, row-major (i,j)
    std::vector<typename F::Elem> unit;   // dense coordinates of 1

    const SVec<F>& mult_at(size_t i, size_t j) const { return mult[i * dim + j]; }
    SVec<F>& mult_at(size_t i, size_t j) { return mult[i * dim + j]; }

    SVec<F> multiply(const SVec<F>& a, const SVec<F>& b) const {
        SparseAccum<F> acc(field);
        for (const auto& [i, x] : a.terms) {
            for (const auto& [j, y] : b.terms) {
                const SVec<F>& m = mult_at(i, j);
                if (m.empty()) continue;
                acc.add_scaled(m, field.mul(x, y));
            }
        }
        return acc.flush();
    }

    std::vector<typename F::Elem> multiply_dense(
        const std::vector<typename F::Elem>& a,
        const std::vector<typename F::Elem>& b) const {
        return svec_to_dense(field,
                             multiply(svec_from_dense(field, a), svec_from_dense(field, b)),
                             dim);
    }

    /// Matrix of left multiplication by basis element i.
    Matrix<F> left_mult(size_t i) const {
        Matrix<F> m(field, dim, dim);
        for (size_t j = 0; j < dim; ++j)
            for (const auto& [k, c] : mult_at(i, j).terms) m.at(k, j) = c;
        return m;
    }

    std::string label_of(size_t i) const {
        return i < labels.size() ? labels[i] : "b" + std::to_string(i);
    }
};

template <class F>
Report verify_algebra(const StructureAlgebra<F>& a) {
    Report rep;
    {
        bool ok = true;
        std::string where;
        for (size_t i = 0; i < a.dim && ok; ++i) {
            for (size_t j = 0; j < a.dim && ok; ++j) {
                const SVec<F>& ij = a.mult_at(i, j);
                for (size_t k = 0; k < a.dim; ++k) {
                    SparseAccum<F> lhs(a.field);
                    for (const auto& [l, c] : ij.terms) lhs.add_scaled(a.mult_at(l, k), c);
                    SparseAccum<F> rhs(a.field);
                    for (const auto& [m, c] : a.mult_at(j, k).terms)
                        rhs.add_scaled(a.mult_at(i, m), c);
                    if (!svec_eq(a.field, lhs.flush(), rhs.flush())) {
                        ok = false;
                        where = "(" + std::to_string(i) + "," + std::to_string(j) + "," +
                                std::to_string(k) + ")";
                        break;
                    }
                }
            }
        }
        rep.add("associativity", ok, where);
    }
    {
        bool ok = a.unit.size() == a.dim;
        std::string where = ok ? "" : "unit vector size";
        SVec<F> u = svec_from_dense(a.field, a.unit);
        for (size_t i = 0; ok && i < a.dim; ++i) {
            SVec<F> e = svec_single<F>(i, a.field.one());
            if (!svec_eq(a.field, a.multiply(u, e), e) ||
                !svec_eq(a.field, a.multiply(e, u), e)) {
                ok = false;
                where = "basis " + std::to_string(i);
            }
        }
        rep.add("unit", ok, where);
    }
    return rep;
}

/// Coalgebra structure on the same basis: comult lives in the tensor square,
/// indexed row-major via tensor_index(dim, i, j).
template <class F>
struct CoalgebraData {
    size_t dim = 0;
    std::vector<SVec<F>> comult;          // dim entries in the dim^2 tensor square
    std::vector<typename F::Elem> counit; // dense length dim
};

template <class F>
Report verify_coalgebra(const F& field, const CoalgebraData<F>& c) {
    Report rep;
    const size_t n = c.dim;
    {
        // (Delta x id) Delta == (id x Delta) Delta in the tensor cube
        bool ok = true;
        std::string where;
        for (size_t t = 0; t < n && ok; ++t) {
            SparseAccum<F> lhs(field), rhs(field);
            for (const auto& [pq, coeff] : c.comult[t].terms) {
                size_t p = pq / n, q = pq % n;
                for (const auto& [ab, c2] : c.comult[p].terms) {
                    lhs.add(ab * n + q, field.mul(coeff, c2));
                }
                for (const auto& [ab, c2] : c.comult[q].terms) {
                    rhs.add(p * n * n + ab, field.mul(coeff, c2));
                }
            }
            if (!svec_eq(field, lhs.flush(), rhs.flush())) {
                ok = false;
                where = "basis " + std::to_string(t);
            }
        }
        rep.add("coassociativity", ok, where);
    }
    {
        // (eps x id) Delta == id == (id x eps) Delta
        bool ok = c.counit.size() == n;
        std::string where = ok ? "" : "counit vector size";
        for (size_t t = 0; ok && t < n; ++t) {
            SparseAccum<F> left(field), right(field);
            for (const auto& [pq, coeff] : c.comult[t].terms) {
                size_t p = pq / n, q = pq % n;
                left.add(q, field.mul(coeff, c.counit[p]));
                right.add(p, field.mul(coeff, c.counit[q]));
            }
            SVec<F> e = svec_single<F>(t, field.one());
            if (!svec_eq(field, left.flush(), e) || !svec_eq(field, right.flush(), e)) {
                ok = false;
                where = "basis " + std::to_string(t);
            }
        }
        rep.add("counit", ok, where);
    }
    return rep;
}

/// Algebra + coalgebra + antipode. verify_hopf checks every axiom as an
/// exact identity on all basis tuples.
template <class F>
struct HopfAlgebraData {
    StructureAlgebra<F> algebra;
    CoalgebraData<F> coalgebra;
    Matrix<F> antipode;  // dim x dim

    size_t dim() const { return algebra.dim; }
    const F& field() const { return algebra.field; }
};

/// Product in the tensor-square algebra: (a x b)(c x d) = ac x bd.
template <class F>
SVec<F> tensor_square_multiply(const StructureAlgebra<F>& alg, const SVec<F>& a,
                               const SVec<F>& b) {
    const size_t n = alg.dim;
    SparseAccum<F> acc(alg.field);
    for (const auto& [pq, x] : a.terms) {
        size_t p = pq / n, q = pq % n;
        for (const auto& [rs, y] : b.terms) {
            size_t r = rs / n, s = rs % n;
            const SVec<F>& left = alg.mult_at(p, r);
            if (left.empty()) continue;
            const SVec<F>& right = alg.mult_at(q, s);
            if (right.empty()) continue;
            auto coeff = alg.field.mul(x, y);
            for (const auto& [u, cu] : left.terms)
                for (const auto& [v, cv] : right.terms)
                    acc.add(u * n + v, alg.field.mul(coeff, alg.field.mul(cu, cv)));
        }
    }
    return acc.flush();
}

template <class F>
Report verify_hopf(const HopfAlgebraData<F>& h) {
    const F& field = h.algebra.field;
    const size_t n = h.algebra.dim;
    Report rep = verify_algebra(h.algebra);
    rep.append(verify_coalgebra(field, h.coalgebra));

    {
        // Delta(ab) == Delta(a) Delta(b) on all basis pairs
        bool ok = true;
        std::string where;
        for (size_t i = 0; i < n && ok; ++i) {
            for (size_t j = 0; j < n; ++j) {
                SparseAccum<F> lhs(field);
                for (const auto& [l, c] : h.algebra.mult_at(i, j).terms)
                    lhs.add_scaled(h.coalgebra.comult[l], c);
                SVec<F> rhs = tensor_square_multiply(h.algebra, h.coalgebra.comult[i],
                                                     h.coalgebra.comult[j]);
                if (!svec_eq(field, lhs.flush(), rhs)) {
                    ok = false;
                    where = "(" + std::to_string(i) + "," + std::to_string(j) + ")";
                    break;
                }
            }
        }
        rep.add("comult multiplicative", ok, where);
    }
    {
        // Delta(1) == 1 x 1
        SparseAccum<F> acc(field);
        for (size_t l = 0; l < n; ++l) acc.add_scaled(h.coalgebra.comult[l], h.algebra.unit[l]);
        SparseAccum<F> expect(field);
        for (size_t u = 0; u < n; ++u)
            for (size_t v = 0; v < n; ++v)
                expect.add(u * n + v, field.mul(h.algebra.unit[u], h.algebra.unit[v]));
        bool ok = svec_eq(field, acc.flush(), expect.flush());
        rep.add("comult unital", ok, ok ? "" : "unit");
    }
    {
        // eps(ab) == eps(a) eps(b); eps(1) == 1
        bool ok = true;
        std::string where;
        for (size_t i = 0; i < n && ok; ++i) {
            for (size_t j = 0; j < n; ++j) {
                auto lhs = field.zero();
                for (const auto& [l, c] : h.algebra.mult_at(i, j).terms)
                    lhs = field.add(lhs, field.mul(c, h.coalgebra.counit[l]));
                if (!field.eq(lhs, field.mul(h.coalgebra.counit[i], h.coalgebra.counit[j]))) {
                    ok = false;
                    where = "(" + std::to_string(i) + "," + std::to_string(j) + ")";
                    break;
                }
            }
        }
        rep.add("counit multiplicative", ok, where);

        auto eps1 = field.zero();
        for (size_t l = 0; l < n; ++l)
            eps1 = field.add(eps1, field.mul(h.algebra.unit[l], h.coalgebra.counit[l]));
        bool unital = field.eq(eps1, field.one());
        rep.add("counit unital", unital, unital ? "" : "unit");
    }
    {
        // m(S x id)Delta == u.eps == m(id x S)Delta
        bool ok_left = true, ok_right = true;
        std::string where_left, where_right;
        for (size_t t = 0; t < n; ++t) {
            SparseAccum<F> left(field), right(field);
            for (const auto& [pq, coeff] : h.coalgebra.comult[t].terms) {
                size_t p = pq / n, q = pq % n;
                for (size_t r = 0; r < n; ++r) {
                    const auto& srp = h.antipode.at(r, p);
                    if (!field.is_zero(srp))
                        left.add_scaled(h.algebra.mult_at(r, q), field.mul(coeff, srp));
                    const auto& srq = h.antipode.at(r, q);
                    if (!field.is_zero(srq))
                        right.add_scaled(h.algebra.mult_at(p, r), field.mul(coeff, srq));
                }
            }
            SparseAccum<F> expect(field);
            for (size_t u = 0; u < n; ++u)
                expect.add(u, field.mul(h.coalgebra.counit[t], h.algebra.unit[u]));
            SVec<F> target = expect.flush();
            if (ok_left && !svec_eq(field, left.flush(), target)) {
                ok_left = false;
                where_left = "basis " + std::to_string(t);
            }
            if (ok_right && !svec_eq(field, right.flush(), target)) {
                ok_right = false;
                where_right = "basis " + std::to_string(t);
            }
        }
        rep.add("antipode left", ok_left, where_left);
        rep.add("antipode right", ok_right, where_right);
    }
    return rep;
}

/// Transposes multiplication with comultiplication, unit with counit, and
/// the antipode. Involutive up to exact equality of all structure data.
template <class F>
HopfAlgebraData<F> dual_hopf(const HopfAlgebraData<F>& h) {
    const F& field = h.algebra.field;
    const size_t n = h.algebra.dim;
    HopfAlgebraData<F> d;
    d.algebra.field = field;
    d.algebra.dim = n;
    for (size_t i = 0; i < n; ++i) d.algebra.labels.push_back(h.algebra.label_of(i) + "*");
    d.algebra.mult.assign(n * n, SVec<F>{});
    for (size_t k = 0; k < n; ++k) {
        for (const auto& [pq, c] : h.coalgebra.comult[k].terms) {
            d.algebra.mult[pq].terms.emplace_back(k, c);
        }
    }
    for (auto& s : d.algebra.mult) {
        std::sort(s.terms.begin(), s.terms.end(),
                  [](const auto& a, const auto& b) { return a.first < b.first; });
    }
    d.algebra.unit = h.coalgebra.counit;
    d.coalgebra.dim = n;
    d.coalgebra.comult.assign(n, SVec<F>{});
    for (size_t i = 0; i < n; ++i) {
        for (size_t j = 0; j < n; ++j) {
            for (const auto& [k, c] : h.algebra.mult_at(i, j).terms) {
                d.coalgebra.comult[k].terms.emplace_back(tensor_index(n, i, j), c);
            }
        }
    }
    for (auto& s : d.coalgebra.comult) {
        std::sort(s.terms.begin(), s.terms.end(),
                  [](const auto& a, const auto& b) { return a.first < b.first; });
    }
    d.coalgebra.counit = h.algebra.unit;
    d.antipode = h.antipode.transpose();
    return d;
}

/// Gram matrix of the regular-representation trace form
/// T(b_i, b_j) = trace(L_i L_j).
template <class F>
Matrix<F> trace_form(const StructureAlgebra<F>& a) {
    const size_t n = a.dim;
    Matrix<F> gram(a.field, n, n);
    for (size_t i = 0; i < n; ++i) {
        for (size_t j = 0; j <= i; ++j) {
            auto sum = a.field.zero();
            // trace(L_i L_j) = sum_{q,r} c_{iq}^r c_{jr}^q
            for (size_t q = 0; q < n; ++q) {
                for (const auto& [r, ciq] : a.mult_at(i, q).terms) {
                    for (const auto& [back, cjr] : a.mult_at(j, r).terms) {
                        if (back == q) sum = a.field.add(sum, a.field.mul(ciq, cjr));
                    }
                }
            }
            gram.at(i, j) = sum;
            gram.at(j, i) = sum;
        }
    }
    return gram;
}

/// Char-0 criterion: semisimple iff the trace form is nondegenerate.
template <class F>
bool is_semisimple(const StructureAlgebra<F>& a) {
    return matrix_rank(trace_form(a)) == a.dim;
}

template <class F>
bool is_cosemisimple(const HopfAlgebraData<F>& h) {
    return is_semisimple(dual_hopf(h).algebra);
}

/// Basis of the center, as columns: exact kernel of the stacked commutator
/// maps x -> x b_j - b_j x over all basis b_j.
template <class F>
Matrix<F> center_basis(const StructureAlgebra<F>& a) {
    const size_t n = a.dim;
    Matrix<F> sys(a.field, n * n, n);
    for (size_t i = 0; i < n; ++i) {
        for (size_t j = 0; j < n; ++j) {
            for (const auto& [k, c] : a.mult_at(i, j).terms)
                sys.at(j * n + k, i) = a.field.add(sys.at(j * n + k, i), c);
            for (const auto& [k, c] : a.mult_at(j, i).terms)
                sys.at(j * n + k, i) = a.field.sub(sys.at(j * n + k, i), c);
        }
    }
    return kernel_basis(std::move(sys));
}

/// Semisimple with one-dimensional center: central simple over the base.
template <class F>
bool is_central_simple(const StructureAlgebra<F>& a) {
    return is_semisimple(a) && center_basis(a).cols() == 1;
}

/// Linear map between structure-constant algebras over the same field.
template <class F>
struct AlgebraMorphism {
    StructureAlgebra<F> source;
    StructureAlgebra<F> target;
    Matrix<F> matrix;  // target.dim x source.dim

    std::vector<typename F::Elem> apply(const std::vector<typename F::Elem>& v) const {
        return matrix.apply(v);
    }
};

struct MorphismVerdict {
    bool is_algebra_map = false;
    bool is_onto = false;
    bool is_injective = false;
    size_t kernel_dim = 0;
    std::string counterexample;

    Report to_report(const std::string& prefix = "") const {
        Report r;
        r.add(prefix + "algebra map", is_algebra_map, counterexample);
        return r;
    }
};

template <class F>
MorphismVerdict verify_morphism(const AlgebraMorphism<F>& f) {
    const F& field = f.source.field;
    MorphismVerdict v;
    v.is_algebra_map = true;
    // f(1) = 1
    auto img1 = f.matrix.apply(f.source.unit);
    for (size_t i = 0; i < f.target.dim; ++i) {
        if (!field.eq(img1[i], f.target.unit[i])) {
            v.is_algebra_map = false;
            v.counterexample = "unit";
            break;
        }
    }
    // f(b_i b_j) = f(b_i) f(b_j) on all pairs
    std::vector<SVec<F>> cols(f.source.dim);
    for (size_t i = 0; i < f.source.dim; ++i)
        cols[i] = svec_from_dense(field, f.matrix.col(i));
    for (size_t i = 0; i < f.source.dim && v.is_algebra_map; ++i) {
        for (size_t j = 0; j < f.source.dim; ++j) {
            SparseAccum<F> lhs(field);
            for (const auto& [k, c] : f.source.mult_at(i, j).terms)
                lhs.add_scaled(cols[k], c);
            SVec<F> rhs = f.target.multiply(cols[i], cols[j]);
            if (!svec_eq(field, lhs.flush(), rhs)) {
                v.is_algebra_map = false;
                v.counterexample = "(" + std::to_string(i) + "," + std::to_string(j) + ")";
                break;
            }
        }
    }
    size_t r = matrix_rank(f.matrix);
    v.is_onto = r == f.target.dim;
    v.is_injective = r == f.source.dim;
    v.kernel_dim = f.source.dim - r;
    return v;
}

template <class F>
AlgebraMorphism<F> compose_morphisms(const AlgebraMorphism<F>& outer,
                                     const AlgebraMorphism<F>& inner) {
    return {inner.source, outer.target, outer.matrix.mul(inner.matrix)};
}

/// Quotient by a verified two-sided ideal. The complement basis is the
/// greedy choice of standard basis vectors completing the ideal's echelon
/// basis, so structure constants are reproducible across runs.
template <class F>
std::pair<StructureAlgebra<F>, AlgebraMorphism<F>> quotient_algebra(
    const StructureAlgebra<F>& a, const Matrix<F>& ideal_columns) {
    const F& field = a.field;
    const size_t n = a.dim;

    // echelonize the ideal basis (columns)
    Matrix<F> rows = ideal_columns.transpose();
    std::vector<size_t> pivots = rows.rref();
    const size_t idim = pivots.size();
    Matrix<F> ideal(field, n, idim);
    for (size_t r = 0; r < idim; ++r)
        for (size_t c = 0; c < n; ++c) ideal.at(c, r) = rows.at(r, c);

    // two-sided ideal check
    ColumnSpanSolver<F> ideal_span(ideal);
    for (size_t v = 0; v < idim; ++v) {
        SVec<F> vec = svec_from_dense(field, ideal.col(v));
        for (size_t j = 0; j < n; ++j) {
            SVec<F> e = svec_single<F>(j, field.one());
            SVec<F> left = a.multiply(e, vec);
            SVec<F> right = a.multiply(vec, e);
            if (!ideal_span.express(svec_to_dense(field, left, n)) ||
                !ideal_span.express(svec_to_dense(field, right, n))) {
                throw MathError("quotient_algebra: span is not a two-sided ideal; "
                                "violating product with basis " + a.label_of(j));
            }
        }
    }

    std::vector<bool> is_pivot(n, false);
    for (size_t p : pivots) is_pivot[p] = true;
    std::vector<size_t> comp;  // standard basis indices completing the ideal
    for (size_t i = 0; i < n; ++i)
        if (!is_pivot[i]) comp.push_back(i);
    const size_t qdim = comp.size();

    // full change of basis [complement | ideal]
    Matrix<F> full(field, n, n);
    for (size_t c = 0; c < qdim; ++c) full.at(comp[c], c) = field.one();
    for (size_t c = 0; c < idim; ++c)
        for (size_t r = 0; r < n; ++r) full.at(r, qdim + c) = ideal.at(r, c);
    ColumnSpanSolver<F> full_span(full);

    auto project = [&](const std::vector<typename F::Elem>& v) {
        auto coords = full_span.express(v);
        if (!coords) throw MathError("quotient_algebra: projection failed");
        coords->resize(qdim);
        return *coords;
    };

    StructureAlgebra<F> q;
    q.field = field;
    q.dim = qdim;
    for (size_t c : comp) q.labels.push_back(a.label_of(c) + "~");
    q.mult.assign(qdim * qdim, SVec<F>{});
    for (size_t x = 0; x < qdim; ++x) {
        for (size_t y = 0; y < qdim; ++y) {
            SVec<F> prod = a.mult_at(comp[x], comp[y]);
            q.mult[x * qdim + y] =
                svec_from_dense(field, project(svec_to_dense(field, prod, n)));
        }
    }
    q.unit = project(a.unit);

    AlgebraMorphism<F> proj;
    proj.source = a;
    proj.target = q;
    proj.matrix = Matrix<F>(field, qdim, n);
    for (size_t i = 0; i < n; ++i) {
        std::vector<typename F::Elem> e(n, field.zero());
        e[i] = field.one();
        proj.matrix.set_col(i, project(e));
    }
    return {std::move(q), std::move(proj)};
}

/// Full matrix algebra M_d over the field, basis E_{pq} at index p*d+q.
template <class F>
StructureAlgebra<F> matrix_algebra(const F& field, size_t d) {
    StructureAlgebra<F> a;
    a.field = field;
    a.dim = d * d;
    a.mult.assign(a.dim * a.dim, SVec<F>{});
    a.unit.assign(a.dim, field.zero());
    for (size_t p = 0; p < d; ++p) {
        a.unit[p * d + p] = field.one();
        for (size_t q = 0; q < d; ++q) {
            a.labels.push_back("E" + std::to_string(p) + std::to_string(q));
            for (size_t r = 0; r < d; ++r)
                for (size_t s = 0; s < d; ++s)
                    if (q == r)
                        a.mult[(p * d + q) * a.dim + (r * d + s)] =
                            svec_single<F>(p * d + s, field.one());
        }
    }
    return a;
}

/// Centralizer of the image of a representation inside the endomorphism
/// algebra of the representation space. rep must land in matrix_algebra(d).
template <class F>
std::pair<StructureAlgebra<F>, Matrix<F>> centralizer_in_endomorphisms(
    const AlgebraMorphism<F>& rep) {
    const F& field = rep.source.field;
    const size_t dsq = rep.target.dim;
    size_t d = 0;
    while (d * d < dsq) ++d;
    if (d * d != dsq) throw MathError("centralizer: target is not a matrix algebra");

    const size_t n = rep.source.dim;
    // unknowns X_{pq}; constraints (X R_i - R_i X)_{ps} = 0
    Matrix<F> sys(field, n * dsq, dsq);
    for (size_t i = 0; i < n; ++i) {
        auto ri = rep.matrix.col(i);  // R_i flattened p*d+q
        for (size_t p = 0; p < d; ++p) {
            for (size_t s = 0; s < d; ++s) {
                size_t row = i * dsq + p * d + s;
                for (size_t q = 0; q < d; ++q) {
                    sys.at(row, p * d + q) =
                        field.add(sys.at(row, p * d + q), ri[q * d + s]);
                    sys.at(row, q * d + s) =
                        field.sub(sys.at(row, q * d + s), ri[p * d + q]);
                }
            }
        }
    }
    Matrix<F> ker = kernel_basis(std::move(sys));
    const size_t cdim = ker.cols();
    ColumnSpanSolver<F> span(ker);

    StructureAlgebra<F> cent;
    cent.field = field;
    cent.dim = cdim;
    for (size_t i = 0; i < cdim; ++i) cent.labels.push_back("z" + std::to_string(i));
    cent.mult.assign(cdim * cdim, SVec<F>{});
    auto mat_of = [&](size_t c) {
        Matrix<F> m(field, d, d);
        for (size_t p = 0; p < d; ++p)
            for (size_t q = 0; q < d; ++q) m.at(p, q) = ker.at(p * d + q, c);
        return m;
    };
    for (size_t x = 0; x < cdim; ++x) {
        Matrix<F> mx = mat_of(x);
        for (size_t y = 0; y < cdim; ++y) {
            Matrix<F> prod = mx.mul(mat_of(y));
            std::vector<typename F::Elem> flat(dsq, field.zero());
            for (size_t p = 0; p < d; ++p)
                for (size_t q = 0; q < d; ++q) flat[p * d + q] = prod.at(p, q);
            auto coords = span.express(flat);
            if (!coords) throw MathError("centralizer is not closed under products");
            cent.mult[x * cdim + y] = svec_from_dense(field, *coords);
        }
    }
    std::vector<typename F::Elem> id_flat(dsq, field.zero());
    for (size_t p = 0; p < d; ++p) id_flat[p * d + p] = field.one();
    auto unit_coords = span.express(id_flat);
    if (!unit_coords) throw MathError("identity is not in the centralizer");
    cent.unit = *unit_coords;
    return {std::move(cent), std::move(ker)};
}

/// Reads structure constants over Q into a number field.
inline NFElement lift_scalar(const NFCtx& ctx, const Rational& r) {
    return nf_from_rational(ctx.field, r);
}

inline SVec<NFCtx> lift_svec(const NFCtx& ctx, const SVec<QQ>& s) {
    SVec<NFCtx> r;
    for (const auto& [i, c] : s.terms) r.terms.emplace_back(i, lift_scalar(ctx, c));
    return r;
}

inline StructureAlgebra<NFCtx> base_change(const StructureAlgebra<QQ>& a,
                                            const NFCtx& ctx) {
    StructureAlgebra<NFCtx> r;
    r.field = ctx;
    r.dim = a.dim;
    r.labels = a.labels;
    r.mult.reserve(a.mult.size());
    for (const auto& s : a.mult) r.mult.push_back(lift_svec(ctx, s));
    r.unit.reserve(a.unit.size());
    for (const auto& c : a.unit) r.unit.push_back(lift_scalar(ctx, c));
    return r;
}

inline Matrix<NFCtx> base_change(const Matrix<QQ>& m, const NFCtx& ctx) {
    Matrix<NFCtx> r(ctx, m.rows(), m.cols());
    for (size_t i = 0; i < m.rows(); ++i)
        for (size_t j = 0; j < m.cols(); ++j)
            if (!(m.at(i, j) == 0)) r.at(i, j) = lift_scalar(ctx, m.at(i, j));
    return r;
}

inline HopfAlgebraData<NFCtx> base_change(const HopfAlgebraData<QQ>& h, const NFCtx& ctx) {
    HopfAlgebraData<NFCtx> r;
    r.algebra = base_change(h.algebra, ctx);
    r.coalgebra.dim = h.coalgebra.dim;
    r.coalgebra.comult.reserve(h.coalgebra.comult.size());
    for (const auto& s : h.coalgebra.comult) r.coalgebra.comult.push_back(lift_svec(ctx, s));
    r.coalgebra.counit.reserve(h.coalgebra.counit.size());
    for (const auto& c : h.coalgebra.counit) r.coalgebra.counit.push_back(lift_scalar(ctx, c));
    r.antipode = base_change(h.antipode, ctx);
    return r;
}

}  // namespace hopfforms

#endif
