#include "doctest.h"

#include "hopfforms/algebra.hpp"
#include "hopfforms/field.hpp"

using namespace hopfforms;

namespace {

QQ qq;

// Quaternion algebra over Q: basis 1, i, j, k with i^2 = j^2 = -1, ij = k = -ji.
StructureAlgebra<QQ> quaternions() {
    StructureAlgebra<QQ> a;
    a.field = qq;
    a.dim = 4;
    a.labels = {"1", "i", "j", "k"};
    a.unit = {1, 0, 0, 0};
    a.mult.assign(16, SVec<QQ>{});
    auto set = [&](size_t x, size_t y, size_t z, int sign) {
        a.mult_at(x, y) = svec_single<QQ>(z, Rational(sign));
    };
    // 1 is the identity
    for (size_t x = 0; x < 4; ++x) {
        set(0, x, x, 1);
        set(x, 0, x, 1);
    }
    set(1, 1, 0, -1);  // i*i = -1
    set(2, 2, 0, -1);  // j*j = -1
    set(3, 3, 0, -1);  // k*k = -1
    set(1, 2, 3, 1);   // ij = k
    set(2, 1, 3, -1);  // ji = -k
    set(2, 3, 1, 1);   // jk = i
    set(3, 2, 1, -1);
    set(3, 1, 2, 1);   // ki = j
    set(1, 3, 2, -1);
    return a;
}

// Group algebra of Z/n as a Hopf algebra: basis g^0 .. g^{n-1},
// Delta(g^a) = g^a x g^a, eps = 1, S(g^a) = g^{-a}.
HopfAlgebraData<QQ> cyclic_group_hopf(size_t n) {
    HopfAlgebraData<QQ> h;
    h.algebra.field = qq;
    h.algebra.dim = n;
    h.algebra.unit.assign(n, Rational(0));
    h.algebra.unit[0] = 1;
    h.algebra.mult.assign(n * n, SVec<QQ>{});
    for (size_t a = 0; a < n; ++a) {
        h.algebra.labels.push_back("g^" + std::to_string(a));
        for (size_t b = 0; b < n; ++b)
            h.algebra.mult_at(a, b) = svec_single<QQ>((a + b) % n, Rational(1));
    }
    h.coalgebra.dim = n;
    h.coalgebra.counit.assign(n, Rational(1));
    for (size_t a = 0; a < n; ++a)
        h.coalgebra.comult.push_back(svec_single<QQ>(tensor_index(n, a, a), Rational(1)));
    h.antipode = Matrix<QQ>(qq, n, n);
    for (size_t a = 0; a < n; ++a) h.antipode.at((n - a) % n, a) = 1;
    return h;
}

// Commutative non-semisimple algebra Q[x]/(x^2): basis 1, x.
StructureAlgebra<QQ> dual_numbers() {
    StructureAlgebra<QQ> a;
    a.field = qq;
    a.dim = 2;
    a.labels = {"1", "x"};
    a.unit = {1, 0};
    a.mult.assign(4, SVec<QQ>{});
    a.mult_at(0, 0) = svec_single<QQ>(0, Rational(1));
    a.mult_at(0, 1) = svec_single<QQ>(1, Rational(1));
    a.mult_at(1, 0) = svec_single<QQ>(1, Rational(1));
    // x*x = 0
    return a;
}

}  // namespace

TEST_CASE("kernel of a singular matrix") {
    Matrix<QQ> m(qq, 2, 2);
    m.at(0, 0) = 1;
    m.at(0, 1) = 2;
    m.at(1, 0) = 2;
    m.at(1, 1) = 4;
    CHECK(matrix_rank(m) == 1);
    Matrix<QQ> ker = kernel_basis(m);
    REQUIRE(ker.cols() == 1);
    // oracle: (-2, 1) spans the kernel; the computed basis is reduced-echelon
    CHECK(ker.at(0, 0) == Rational(-2));
    CHECK(ker.at(1, 0) == Rational(1));
}

TEST_CASE("quaternion algebra is central simple") {
    StructureAlgebra<QQ> a = quaternions();
    Report rep = verify_algebra(a);
    CHECK(rep.all_pass());

    // oracle: in the regular representation each of 1,i,j,k acts with
    // trace form T(e,e) = +-4 on the diagonal and 0 off it
    Matrix<QQ> gram = trace_form(a);
    CHECK(gram.at(0, 0) == Rational(4));
    CHECK(gram.at(1, 1) == Rational(-4));
    CHECK(gram.at(2, 2) == Rational(-4));
    CHECK(gram.at(3, 3) == Rational(-4));
    CHECK(gram.at(0, 1) == Rational(0));
    CHECK(matrix_rank(gram) == 4);
    CHECK(is_semisimple(a));

    Matrix<QQ> z = center_basis(a);
    REQUIRE(z.cols() == 1);
    // the center is spanned by the unit
    CHECK(z.at(0, 0) == Rational(1));
    CHECK(z.at(1, 0) == Rational(0));
    CHECK(is_central_simple(a));
}

TEST_CASE("broken associativity is caught with a locator") {
    StructureAlgebra<QQ> a = quaternions();
    a.mult_at(1, 2) = svec_single<QQ>(3, Rational(-1));  // ij = -k but ji = -k too
    Report rep = verify_algebra(a);
    CHECK(!rep.all_pass());
    const CheckResult* f = rep.first_failure();
    REQUIRE(f != nullptr);
    CHECK(f->name == "associativity");
    CHECK(!f->where.empty());
}

TEST_CASE("group algebra of Z/3 is a Hopf algebra") {
    HopfAlgebraData<QQ> h = cyclic_group_hopf(3);
    Report rep = verify_hopf(h);
    for (const auto& c : rep.checks) {
        INFO(c.name << " at " << c.where);
        CHECK(c.pass);
    }
    CHECK(is_semisimple(h.algebra));
    // commutative: center is everything
    CHECK(center_basis(h.algebra).cols() == 3);
    CHECK(!is_central_simple(h.algebra));
}

TEST_CASE("identity antipode on Z/3 fails exactly the antipode axioms") {
    HopfAlgebraData<QQ> h = cyclic_group_hopf(3);
    h.antipode = Matrix<QQ>::identity(qq, 3);
    Report rep = verify_hopf(h);
    CHECK(!rep.all_pass());
    for (const auto& c : rep.checks) {
        if (c.name == "antipode left" || c.name == "antipode right") {
            CHECK(!c.pass);
            // g^1 is not an involution; the identity map fails there
            CHECK(c.where == "basis 1");
        } else {
            INFO(c.name);
            CHECK(c.pass);
        }
    }
}

TEST_CASE("double dual returns the original Hopf data") {
    HopfAlgebraData<QQ> h = cyclic_group_hopf(4);
    HopfAlgebraData<QQ> d = dual_hopf(h);
    // the dual of a group algebra is the function algebra: commutative,
    // with idempotent basis products delta_ab on the diagonal
    Report drep = verify_hopf(d);
    CHECK(drep.all_pass());
    CHECK(svec_eq(qq, d.algebra.mult_at(1, 1), svec_single<QQ>(1, Rational(1))));
    CHECK(d.algebra.mult_at(1, 2).empty());

    HopfAlgebraData<QQ> dd = dual_hopf(d);
    CHECK(dd.algebra.dim == h.algebra.dim);
    for (size_t i = 0; i < 16; ++i)
        CHECK(svec_eq(qq, dd.algebra.mult[i], h.algebra.mult[i]));
    for (size_t i = 0; i < 4; ++i) {
        CHECK(svec_eq(qq, dd.coalgebra.comult[i], h.coalgebra.comult[i]));
        CHECK(dd.coalgebra.counit[i] == h.coalgebra.counit[i]);
        CHECK(dd.algebra.unit[i] == h.algebra.unit[i]);
    }
    CHECK(dd.antipode.eq(h.antipode));
}

TEST_CASE("dual numbers are not semisimple") {
    StructureAlgebra<QQ> a = dual_numbers();
    CHECK(verify_algebra(a).all_pass());
    // oracle: Gram matrix is [[2,0],[0,0]], rank 1
    Matrix<QQ> gram = trace_form(a);
    CHECK(gram.at(0, 0) == Rational(2));
    CHECK(gram.at(1, 1) == Rational(0));
    CHECK(matrix_rank(gram) == 1);
    CHECK(!is_semisimple(a));
}

TEST_CASE("matrix algebra M_2") {
    StructureAlgebra<QQ> m2 = matrix_algebra(qq, 2);
    CHECK(m2.dim == 4);
    CHECK(verify_algebra(m2).all_pass());
    CHECK(is_central_simple(m2));
    // oracle: E01 * E10 = E00, E01 * E01 = 0
    CHECK(svec_eq(qq, m2.mult_at(1, 2), svec_single<QQ>(0, Rational(1))));
    CHECK(m2.mult_at(1, 1).empty());
}

TEST_CASE("quotient by a two-sided ideal") {
    StructureAlgebra<QQ> a = dual_numbers();
    Matrix<QQ> ideal(qq, 2, 1);
    ideal.at(1, 0) = 1;  // span of x
    auto [q, proj] = quotient_algebra(a, ideal);
    CHECK(q.dim == 1);
    CHECK(svec_eq(qq, q.mult_at(0, 0), svec_single<QQ>(0, Rational(1))));

    MorphismVerdict v = verify_morphism(proj);
    CHECK(v.is_algebra_map);
    CHECK(v.is_onto);
    CHECK(v.kernel_dim == 1);

    // span of 1 is not an ideal
    Matrix<QQ> bad(qq, 2, 1);
    bad.at(0, 0) = 1;
    CHECK_THROWS_AS(quotient_algebra(a, bad), MathError);
}

TEST_CASE("morphism verification catches non-multiplicative maps") {
    StructureAlgebra<QQ> a = quaternions();
    StructureAlgebra<QQ> m2 = matrix_algebra(qq, 2);

    AlgebraMorphism<QQ> f;
    f.source = a;
    f.target = m2;
    f.matrix = Matrix<QQ>(qq, 4, 4);
    // identity on coordinates: sends 1 -> E00 which is not the unit of M_2
    for (size_t i = 0; i < 4; ++i) f.matrix.at(i, i) = 1;
    MorphismVerdict v = verify_morphism(f);
    CHECK(!v.is_algebra_map);
    CHECK(v.counterexample == "unit");
}

TEST_CASE("regular representation and its centralizer") {
    // Q[x]/(x^2+1) acting on itself: image in M_2 is {a + b J}, and the
    // centralizer of that commutative image is the image itself (dim 2)
    StructureAlgebra<QQ> c;
    c.field = qq;
    c.dim = 2;
    c.labels = {"1", "i"};
    c.unit = {1, 0};
    c.mult.assign(4, SVec<QQ>{});
    c.mult_at(0, 0) = svec_single<QQ>(0, Rational(1));
    c.mult_at(0, 1) = svec_single<QQ>(1, Rational(1));
    c.mult_at(1, 0) = svec_single<QQ>(1, Rational(1));
    c.mult_at(1, 1) = svec_single<QQ>(0, Rational(-1));
    REQUIRE(verify_algebra(c).all_pass());

    AlgebraMorphism<QQ> rep;
    rep.source = c;
    rep.target = matrix_algebra(qq, 2);
    rep.matrix = Matrix<QQ>(qq, 4, 2);
    for (size_t i = 0; i < 2; ++i) {
        Matrix<QQ> li = c.left_mult(i);
        std::vector<Rational> flat(4, Rational(0));
        for (size_t p = 0; p < 2; ++p)
            for (size_t q = 0; q < 2; ++q) flat[p * 2 + q] = li.at(p, q);
        rep.matrix.set_col(i, flat);
    }
    MorphismVerdict v = verify_morphism(rep);
    CHECK(v.is_algebra_map);
    CHECK(v.is_injective);

    auto [cent, basis] = centralizer_in_endomorphisms(rep);
    CHECK(cent.dim == 2);
    CHECK(verify_algebra(cent).all_pass());
    CHECK(!is_central_simple(cent));  // commutative of dim 2 over Q

    // the centralizer of the full matrix algebra is the scalars
    AlgebraMorphism<QQ> id;
    id.source = matrix_algebra(qq, 2);
    id.target = id.source;
    id.matrix = Matrix<QQ>::identity(qq, 4);
    auto [scalars, sbasis] = centralizer_in_endomorphisms(id);
    CHECK(scalars.dim == 1);
}

TEST_CASE("base change to a number field preserves the axioms") {
    NFCtx ctx{nf_create({1, 0, 1}, "Q(i)")};
    HopfAlgebraData<NFCtx> h = base_change(cyclic_group_hopf(3), ctx);
    Report rep = verify_hopf(h);
    CHECK(rep.all_pass());
    CHECK(is_semisimple(h.algebra));

    StructureAlgebra<NFCtx> quat = base_change(quaternions(), ctx);
    CHECK(verify_algebra(quat).all_pass());
    CHECK(is_central_simple(quat));
}

TEST_CASE("cosemisimplicity of a group algebra") {
    HopfAlgebraData<QQ> h = cyclic_group_hopf(3);
    CHECK(is_cosemisimple(h));
}
