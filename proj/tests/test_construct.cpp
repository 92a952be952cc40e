#include "doctest.h"

#include "hopfforms/construct.hpp"

using namespace hopfforms;

namespace {

const QQ qq;

GaloisExtension qi_extension() {
    auto f = nf_create({1, 0, 1}, "Q(i)");
    NFElement i = nf_generator(f);
    return galois_group(f, {i, nf_neg(i)});
}

Cocycle quaternion_cocycle(const GaloisExtension& ext) {
    size_t sigma = 1 - ext.identity_index;
    std::vector<NFElement> values(4, nf_one(ext.field));
    values[sigma * 2 + sigma] = nf_from_rational(ext.field, -1);
    return cocycle_verify(ext, std::move(values));
}

// Q(i, sqrt2) presented by theta = i + sqrt2, theta^4 - 2 theta^2 + 9 = 0
GaloisExtension biquadratic_extension() {
    // biquadratic, so reducible mod every prime: no witness prime exists and
    // the certificate stays Asserted; galois_group still verifies the roots
    auto k = nf_create({9, 0, -2, 0, 1}, "Q(i,sqrt2)");
    NFElement theta = nf_generator(k);
    auto el = [&](Rational c1, Rational c3) {
        return nf_from_coeffs(k, {0, c1, 0, c3});
    };
    // conjugates: theta, (2theta - theta^3)/3, (theta^3 - 2theta)/3, -theta
    return galois_group(k, {theta, el(Rational(2, 3), Rational(-1, 3)),
                            el(Rational(-2, 3), Rational(1, 3)), nf_neg(theta)});
}

}  // namespace

TEST_CASE("group algebra of Z/4") {
    HopfAlgebraData<QQ> h = group_algebra(cyclic_group(4), qq);
    CHECK(h.algebra.dim == 4);
    CHECK(is_semisimple(h.algebra));
    // cocommutative: Delta lands on the diagonal tensor indices
    for (size_t a = 0; a < 4; ++a) {
        REQUIRE(h.coalgebra.comult[a].nnz() == 1);
        CHECK(h.coalgebra.comult[a].terms[0].first == tensor_index(4, a, a));
    }
    HopfAlgebraData<QQ> triv = group_algebra(trivial_group(), qq);
    CHECK(triv.algebra.dim == 1);
}

TEST_CASE("function algebra and duality") {
    FiniteGroup z2 = cyclic_group(2);
    HopfAlgebraData<QQ> f = function_algebra(z2, qq);
    // e0 + e1 = 1 and Delta(e1) = e0 x e1 + e1 x e0
    CHECK(f.algebra.unit == std::vector<Rational>{1, 1});
    SVec<QQ> expected;
    expected.terms = {{tensor_index(2, 0, 1), Rational(1)},
                      {tensor_index(2, 1, 0), Rational(1)}};
    CHECK(svec_eq(qq, f.coalgebra.comult[1], expected));

    // function algebra is exactly the dual of the group algebra
    FiniteGroup z3 = cyclic_group(3);
    HopfAlgebraData<QQ> dual = dual_hopf(group_algebra(z3, qq));
    HopfAlgebraData<QQ> fun = function_algebra(z3, qq);
    for (size_t i = 0; i < 9; ++i)
        CHECK(svec_eq(qq, dual.algebra.mult[i], fun.algebra.mult[i]));
    for (size_t i = 0; i < 3; ++i) {
        CHECK(svec_eq(qq, dual.coalgebra.comult[i], fun.coalgebra.comult[i]));
        CHECK(dual.coalgebra.counit[i] == fun.coalgebra.counit[i]);
    }
    CHECK(dual.antipode.eq(fun.antipode));
}

TEST_CASE("bicrossed product with trivial action is the tensor product") {
    FiniteGroup z2 = cyclic_group(2);
    auto [t, _] = z2_span(1, z2, {{0}, {0}});
    FiniteGroup n = cyclic_group(2);
    HopfAlgebraData<QQ> x = bicrossed(t, n, trivial_action(n, t), qq);
    CHECK(x.algebra.dim == 4);
    CHECK(is_semisimple(x.algebra));
    CHECK(is_cosemisimple(x));
    // (e_t x n1)(e_t x n2) = e_t x n1n2 for the same t
    CHECK(svec_eq(qq, x.algebra.mult_at(0 * 2 + 1, 0 * 2 + 1),
                  svec_single<QQ>(0 * 2 + 0, Rational(1))));
    // distinct idempotents annihilate
    CHECK(x.algebra.mult_at(0 * 2 + 0, 1 * 2 + 0).empty());
}

TEST_CASE("bicrossed product with the swap action") {
    FiniteGroup z2 = cyclic_group(2);
    std::vector<std::vector<size_t>> regular = {{0, 1}, {1, 0}};
    auto [t, psi] = z2_span(2, z2, regular);
    HopfAlgebraData<QQ> x = bicrossed(t, z2, psi, qq);
    CHECK(x.algebra.dim == 8);
    // oracle: (e_10 x n)(e_01 x 1) = e_10 x n since psi(n)(01) = 10
    size_t e10_n = 1 * 2 + 1, e01_1 = 2 * 2 + 0;
    CHECK(svec_eq(qq, x.algebra.mult_at(e10_n, e01_1),
                  svec_single<QQ>(e10_n, Rational(1))));
    // and (e_10 x n)(e_10 x 1) = 0
    CHECK(x.algebra.mult_at(e10_n, 1 * 2 + 0).empty());
    CHECK(is_semisimple(x.algebra));
    CHECK(is_cosemisimple(x));

    auto blocks = bicrossed_block_decomposition(x, t, z2, psi);
    REQUIRE(blocks.size() == 3);
    CHECK(blocks[0].basis.size() == 2);  // orbit {00}
    CHECK(blocks[1].basis.size() == 4);  // orbit {10,01}
    CHECK(blocks[2].basis.size() == 2);  // orbit {11}
    CHECK(blocks[1].stabilizer.size() == 1);
}

TEST_CASE("bicrossed blocks for a trivial action") {
    FiniteGroup z2 = cyclic_group(2);
    auto [t, _] = z2_span(2, z2, {{0, 1}, {0, 1}});
    FiniteGroup n = cyclic_group(3);
    GroupAction triv = trivial_action(n, t);
    HopfAlgebraData<QQ> x = bicrossed(t, n, triv, qq);
    auto blocks = bicrossed_block_decomposition(x, t, n, triv);
    CHECK(blocks.size() == 4);
    for (const auto& b : blocks) CHECK(b.basis.size() == 3);
}

TEST_CASE("crossed product of the trivial cocycle splits") {
    GaloisExtension ext = qi_extension();
    CrossedProduct a = crossed_product(trivial_cocycle(ext));
    CHECK(a.algebra.dim == 4);
    CHECK(is_central_simple(a.algebra));

    // idempotent e = (1 + U_sigma)/2, e^2 = e, e not 0 or 1
    size_t sigma = 1 - ext.identity_index;
    std::vector<Rational> e(4, Rational(0));
    e[a.basis_index(ext.identity_index, 0)] = Rational(1, 2);
    e[a.basis_index(sigma, 0)] = Rational(1, 2);
    auto e2 = a.algebra.multiply_dense(e, e);
    CHECK(e2 == e);
    CHECK(e != a.algebra.unit);
}

TEST_CASE("crossed product of the quaternion cocycle is the quaternions") {
    GaloisExtension ext = qi_extension();
    size_t sigma = 1 - ext.identity_index;
    CrossedProduct a = crossed_product(quaternion_cocycle(ext));
    CHECK(a.algebra.dim == 4);
    CHECK(is_central_simple(a.algebra));

    size_t one = a.basis_index(ext.identity_index, 0);
    size_t ii = a.basis_index(ext.identity_index, 1);  // theta = i
    size_t jj = a.basis_index(sigma, 0);               // U_sigma
    auto neg_unit = svec_single<QQ>(one, Rational(-1));
    // i^2 = -1, j^2 = alpha(sigma,sigma) = -1, ji = -ij
    CHECK(svec_eq(qq, a.algebra.mult_at(ii, ii), neg_unit));
    CHECK(svec_eq(qq, a.algebra.mult_at(jj, jj), neg_unit));
    SVec<QQ> ij = a.algebra.mult_at(ii, jj);
    SVec<QQ> ji = a.algebra.mult_at(jj, ii);
    CHECK(svec_eq(qq, ji, svec_scale(qq, ij, Rational(-1))));
}

TEST_CASE("associativity of the crossed product is the cocycle identity") {
    GaloisExtension ext = qi_extension();
    size_t sigma = 1 - ext.identity_index;
    // alpha(sigma,sigma) = i violates the cocycle identity...
    std::vector<NFElement> bad(4, nf_one(ext.field));
    bad[sigma * 2 + sigma] = nf_generator(ext.field);
    CHECK_THROWS_AS(cocycle_verify(ext, bad), MathError);
    // ...and the crossed product built from the raw table fails associativity
    Cocycle unchecked{ext, bad};
    CHECK_THROWS_WITH_AS(crossed_product(unchecked),
                         doctest::Contains("associativity"), MathError);

    // conversely a valid table yields a verified-associative algebra
    CHECK_NOTHROW(crossed_product(quaternion_cocycle(ext)));
}

TEST_CASE("finitize collapses a coboundary with m = 1") {
    GaloisExtension ext = qi_extension();
    size_t sigma = 1 - ext.identity_index;
    std::vector<NFElement> f(2, nf_one(ext.field));
    f[sigma] = nf_from_coeffs(ext.field, {1, 1});  // 1 + i
    Cocycle alpha = coboundary(ext, f);
    CHECK(nf_eq(alpha.at(sigma, sigma), nf_from_rational(ext.field, 2)));

    FinitizationWitness w;
    w.m = 1;
    w.f = f;
    w.big = ext;
    w.embedding = FieldEmbedding{ext.field, ext.field, nf_generator(ext.field)};
    w.roots = f;
    w.projection = {0, 1};
    Cocycle beta = finitize(alpha, w);
    for (const auto& v : beta.values) CHECK(nf_eq(v, nf_one(ext.field)));
}

TEST_CASE("finitize the -2 cocycle over Q(i) into Q(i,sqrt2)") {
    GaloisExtension ext = qi_extension();
    size_t sigma = 1 - ext.identity_index;
    std::vector<NFElement> values(4, nf_one(ext.field));
    values[sigma * 2 + sigma] = nf_from_rational(ext.field, -2);
    Cocycle alpha = cocycle_verify(ext, std::move(values));

    GaloisExtension big = biquadratic_extension();
    NFElement i_embedded = nf_from_coeffs(
        big.field, {0, Rational(1, 6), 0, Rational(1, 6)});  // (theta^3+theta)/6
    REQUIRE(nf_eq(nf_mul(i_embedded, i_embedded), nf_from_rational(big.field, -1)));
    NFElement sqrt2 = nf_from_coeffs(
        big.field, {0, Rational(5, 6), 0, Rational(-1, 6)});  // (5theta-theta^3)/6
    REQUIRE(nf_eq(nf_mul(sqrt2, sqrt2), nf_from_rational(big.field, 2)));

    FinitizationWitness w;
    w.m = 2;
    w.f = {nf_one(ext.field), nf_from_rational(ext.field, 2)};
    if (ext.identity_index != 0) std::swap(w.f[0], w.f[1]);
    w.big = big;
    w.embedding = FieldEmbedding{ext.field, big.field, i_embedded};
    w.roots = {nf_one(big.field), sqrt2};
    if (ext.identity_index != 0) std::swap(w.roots[0], w.roots[1]);
    // projection by restriction: h fixes i iff it restricts to the identity
    w.projection.assign(big.order(), 0);
    for (size_t h = 0; h < big.order(); ++h) {
        bool fixes_i = nf_eq(apply_automorphism(big, h, i_embedded), i_embedded);
        w.projection[h] = fixes_i ? ext.identity_index : sigma;
    }

    Cocycle beta = finitize(alpha, w);
    // every value is +-1
    NFElement one = nf_one(big.field), minus = nf_from_rational(big.field, -1);
    bool saw_minus = false;
    for (const auto& v : beta.values) {
        bool pm = nf_eq(v, one) || nf_eq(v, minus);
        CHECK(pm);
        if (nf_eq(v, minus)) saw_minus = true;
    }
    CHECK(saw_minus);

    // broken witness data is rejected
    FinitizationWitness bad = w;
    bad.roots[1 - ext.identity_index] = nf_one(big.field);
    CHECK_THROWS_AS(finitize(alpha, bad), MathError);
}
