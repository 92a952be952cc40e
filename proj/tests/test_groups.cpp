#include "doctest.h"

#include "hopfforms/groups.hpp"

#include <algorithm>

using namespace hopfforms;

namespace {

GaloisExtension qi_extension() {
    auto f = nf_create({1, 0, 1}, "Q(i)");
    NFElement i = nf_generator(f);
    return galois_group(f, {i, nf_neg(i)});
}

size_t element_order(const FiniteGroup& g, size_t a) {
    size_t cur = a, ord = 1;
    while (cur != g.identity_index) {
        cur = g.mul(cur, a);
        ++ord;
    }
    return ord;
}

// left-translation permutations of a group on itself
std::vector<std::vector<size_t>> regular_perms(const FiniteGroup& g) {
    std::vector<std::vector<size_t>> perms(g.order, std::vector<size_t>(g.order));
    for (size_t a = 0; a < g.order; ++a)
        for (size_t t = 0; t < g.order; ++t) perms[a][t] = g.mul(a, t);
    return perms;
}

}  // namespace

TEST_CASE("group_from_table verifies the axioms") {
    FiniteGroup t = trivial_group();
    CHECK(t.order == 1);

    FiniteGroup z4 = cyclic_group(4);
    CHECK(z4.order == 4);
    CHECK(z4.identity_index == 0);
    CHECK(z4.inv(1) == 3);
    CHECK(element_order(z4, 1) == 4);

    // 0*0 = 1 breaks associativity/identity structure
    std::vector<size_t> bad = {1, 1, 1, 0};
    CHECK_THROWS_AS(group_from_table(bad), MathError);
    CHECK_THROWS_AS(group_from_table({0, 0, 0, 0}), MathError);
}

TEST_CASE("z2_span builds bit-vector groups with extended actions") {
    FiniteGroup z1 = trivial_group();
    auto [t1, a1] = z2_span(1, z1, {{0}});
    CHECK(t1.order == 2);
    CHECK(a1.act(0, 1) == 1);

    // G = Z/2 acting on itself by left translation: the two cosets swap
    FiniteGroup z2 = cyclic_group(2);
    auto [t, act] = z2_span(2, z2, regular_perms(z2));
    CHECK(t.order == 4);
    CHECK(t.mul(1, 2) == 3);  // 10 + 01 = 11
    // the nonidentity element swaps the two basis bits
    CHECK(act.act(1, 1) == 2);
    CHECK(act.act(1, 2) == 1);
    CHECK(act.act(1, 3) == 3);

    // non-permutation input rejected
    CHECK_THROWS_AS(z2_span(2, z2, {{0, 1}, {0, 0}}), MathError);
}

TEST_CASE("z2_span through an index-2 quotient of Z/4") {
    FiniteGroup z4 = cyclic_group(4);
    // G/H has two cosets; odd elements swap them
    std::vector<std::vector<size_t>> perms = {{0, 1}, {1, 0}, {0, 1}, {1, 0}};
    auto [t, act] = z2_span(2, z4, perms);
    CHECK(t.order == 4);
    CHECK(act.act(1, 1) == 2);
    CHECK(act.act(2, 1) == 1);
}

TEST_CASE("orbits and stabilizers") {
    FiniteGroup z4 = cyclic_group(4);
    FiniteGroup t = std::get<0>(z2_span(2, z4, {{0, 1}, {1, 0}, {0, 1}, {1, 0}}));
    GroupAction swap_action =
        std::get<1>(z2_span(2, z4, {{0, 1}, {1, 0}, {0, 1}, {1, 0}}));

    auto orbits = orbits_stabilizers(swap_action);
    REQUIRE(orbits.size() == 3);
    // oracle: orbits {00}, {10,01}, {11} with stabilizer orders 4, 2, 4
    CHECK(orbits[0].elements == std::vector<size_t>{0});
    CHECK(orbits[0].stabilizer.size() == 4);
    CHECK(orbits[1].elements == std::vector<size_t>{1, 2});
    CHECK(orbits[1].stabilizer.size() == 2);
    CHECK(orbits[2].elements == std::vector<size_t>{3});
    CHECK(orbits[2].stabilizer.size() == 4);
    for (const auto& o : orbits)
        CHECK(is_group_subset_subgroup(z4, o.stabilizer));

    // trivial action: all singletons, full stabilizers
    auto triv = orbits_stabilizers(trivial_action(z4, t));
    CHECK(triv.size() == 4);
    for (const auto& o : triv) CHECK(o.stabilizer.size() == 4);

    // regular action: one orbit, trivial stabilizer
    GroupAction reg = make_permutation_action(z4, z4, regular_perms(z4));
    auto regular = orbits_stabilizers(reg);
    REQUIRE(regular.size() == 1);
    CHECK(regular[0].elements.size() == 4);
    CHECK(regular[0].stabilizer == std::vector<size_t>{0});
}

TEST_CASE("extension group of the trivial cocycle is a direct product") {
    GaloisExtension ext = qi_extension();
    GroupExtensionData data = extension_group(trivial_cocycle(ext));
    CHECK(data.mu.order == 1);
    CHECK(data.ghat.order == 2);
    CHECK(data.projection[data.ghat.mul(0, 1)] == ext.compose(0, 1));
}

TEST_CASE("extension group of the quaternion cocycle is cyclic of order 4") {
    GaloisExtension ext = qi_extension();
    size_t sigma = 1 - ext.identity_index;
    std::vector<NFElement> values(4, nf_one(ext.field));
    values[sigma * 2 + sigma] = nf_from_rational(ext.field, -1);
    Cocycle alpha = cocycle_verify(ext, std::move(values));

    GroupExtensionData data = extension_group(alpha);
    CHECK(data.mu.order == 2);
    CHECK(nf_eq(data.scalar_of[1], nf_from_rational(ext.field, -1)));
    REQUIRE(data.ghat.order == 4);

    // oracle: (1, sigma) squares to (-1, 1), so the extension is cyclic
    size_t one_sigma = 0 * ext.order() + sigma;
    size_t square = data.ghat.mul(one_sigma, one_sigma);
    CHECK(square == data.mu_embedding[1]);
    CHECK(element_order(data.ghat, one_sigma) == 4);
}

TEST_CASE("non-root-of-unity cocycle values are rejected by extension_group") {
    GaloisExtension ext = qi_extension();
    size_t sigma = 1 - ext.identity_index;
    std::vector<NFElement> values(4, nf_one(ext.field));
    values[sigma * 2 + sigma] = nf_from_rational(ext.field, 2);  // df of f(sigma)=1+i
    Cocycle alpha = cocycle_verify(ext, std::move(values));
    CHECK_THROWS_AS(extension_group(alpha), MathError);
}

TEST_CASE("character group and pairing") {
    FiniteGroup z2 = cyclic_group(2);
    auto [t2, act2] = z2_span(1, z2, {{0}, {0}});
    CharacterGroup cg2 = character_group(t2);
    CHECK(cg2.dual.order == 2);
    CHECK(cg2.pairing(1, 1) == -1);
    CHECK(cg2.pairing(0, 1) == 1);

    FiniteGroup t4 = std::get<0>(z2_span(2, z2, regular_perms(z2)));
    CharacterGroup cg4 = character_group(t4);
    // nondegeneracy: every nonzero character is nontrivial somewhere
    for (size_t s = 1; s < 4; ++s) {
        bool nontrivial = false;
        for (size_t t = 0; t < 4; ++t)
            if (cg4.pairing(s, t) == -1) nontrivial = true;
        CHECK(nontrivial);
    }

    CHECK_THROWS_AS(character_group(cyclic_group(3)), MathError);
    CHECK_THROWS_AS(character_group(cyclic_group(4)), MathError);  // not elementary
}

TEST_CASE("dual action satisfies the pairing identity") {
    FiniteGroup z2 = cyclic_group(2);
    auto [t, psi] = z2_span(2, z2, regular_perms(z2));
    GroupAction dual = dual_action(psi);
    CharacterGroup cg = character_group(t);
    for (size_t g = 0; g < 2; ++g)
        for (size_t s = 0; s < 4; ++s)
            for (size_t x = 0; x < 4; ++x)
                CHECK(cg.pairing(dual.act(g, s), x) ==
                      cg.pairing(s, psi.act(psi.group.inv(g), x)));
}

TEST_CASE("semidirect products") {
    FiniteGroup z2 = cyclic_group(2);
    auto [t, psi] = z2_span(2, z2, regular_perms(z2));

    // trivial action gives the direct product
    FiniteGroup direct = semidirect_product_group(z2, t, trivial_action(z2, t));
    CHECK(direct.order == 8);
    for (size_t a = 0; a < 8; ++a)
        for (size_t b = 0; b < 8; ++b) CHECK(direct.mul(a, b) == direct.mul(b, a));

    // swap action gives the dihedral group of order 8:
    // element orders multiset {1, 2, 2, 2, 2, 2, 4, 4}, nonabelian
    FiniteGroup d4 = semidirect_product_group(z2, t, psi);
    CHECK(d4.order == 8);
    std::vector<size_t> orders;
    for (size_t a = 0; a < 8; ++a) orders.push_back(element_order(d4, a));
    std::sort(orders.begin(), orders.end());
    CHECK(orders == std::vector<size_t>{1, 2, 2, 2, 2, 2, 4, 4});
    bool abelian = true;
    for (size_t a = 0; a < 8 && abelian; ++a)
        for (size_t b = 0; b < 8; ++b)
            if (d4.mul(a, b) != d4.mul(b, a)) {
                abelian = false;
                break;
            }
    CHECK(!abelian);
}

TEST_CASE("cocycle verification") {
    GaloisExtension ext = qi_extension();
    size_t sigma = 1 - ext.identity_index;
    NFElement i = nf_generator(ext.field);

    // non-normalized table rejected
    std::vector<NFElement> bad(4, nf_from_rational(ext.field, 2));
    CHECK_THROWS_AS(cocycle_verify(ext, bad), MathError);

    // alpha(sigma,sigma) = i fails the 2-cocycle identity under conjugation
    std::vector<NFElement> twisted(4, nf_one(ext.field));
    twisted[sigma * 2 + sigma] = i;
    CHECK_THROWS_AS(cocycle_verify(ext, twisted), MathError);

    // coboundary of f(sigma) = 1+i: df(sigma,sigma) = (1+i)(1-i) = 2
    std::vector<NFElement> f = {nf_one(ext.field), nf_from_coeffs(ext.field, {1, 1})};
    if (ext.identity_index != 0) std::swap(f[0], f[1]);
    Cocycle df = coboundary(ext, f);
    CHECK(nf_eq(df.at(sigma, sigma), nf_from_rational(ext.field, 2)));
    CHECK(nf_eq(df.at(ext.identity_index, sigma), nf_one(ext.field)));

    // coboundary of f(sigma) = 2: df(sigma,sigma) = 4
    std::vector<NFElement> f2 = {nf_one(ext.field), nf_from_rational(ext.field, 2)};
    if (ext.identity_index != 0) std::swap(f2[0], f2[1]);
    CHECK(nf_eq(coboundary(ext, f2).at(sigma, sigma), nf_from_rational(ext.field, 4)));

    CHECK_THROWS_AS(coboundary(ext, {nf_one(ext.field), nf_zero(ext.field)}), MathError);
}
