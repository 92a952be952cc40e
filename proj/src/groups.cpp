#include "hopfforms/groups.hpp"

#include <algorithm>
#include <numeric>

namespace hopfforms {

namespace {

std::string triple_str(size_t a, size_t b, size_t c) {
    return "(" + std::to_string(a) + "," + std::to_string(b) + "," + std::to_string(c) + ")";
}

size_t popcount_and(size_t a, size_t b) {
    size_t x = a & b, c = 0;
    while (x) {
        c += x & 1u;
        x >>= 1;
    }
    return c;
}

}  // namespace

FiniteGroup group_from_table(const std::vector<size_t>& table,
                             std::vector<std::string> labels) {
    size_t n = 0;
    while (n * n < table.size()) ++n;
    if (n * n != table.size() || n == 0)
        throw MathError("group table must be square and nonempty");
    for (size_t v : table)
        if (v >= n) throw MathError("group table entry out of range");

    FiniteGroup g;
    g.order = n;
    g.table = table;
    g.labels = std::move(labels);

    for (size_t a = 0; a < n; ++a)
        for (size_t b = 0; b < n; ++b)
            for (size_t c = 0; c < n; ++c)
                if (g.mul(g.mul(a, b), c) != g.mul(a, g.mul(b, c)))
                    throw MathError("group law not associative at " + triple_str(a, b, c));

    bool found = false;
    for (size_t e = 0; e < n && !found; ++e) {
        bool ok = true;
        for (size_t a = 0; a < n; ++a)
            if (g.mul(e, a) != a || g.mul(a, e) != a) {
                ok = false;
                break;
            }
        if (ok) {
            g.identity_index = e;
            found = true;
        }
    }
    if (!found) throw MathError("group table has no identity element");

    g.inverse_table.assign(n, n);
    for (size_t a = 0; a < n; ++a) {
        for (size_t b = 0; b < n; ++b) {
            if (g.mul(a, b) == g.identity_index && g.mul(b, a) == g.identity_index) {
                g.inverse_table[a] = b;
                break;
            }
        }
        if (g.inverse_table[a] == n)
            throw MathError("element " + std::to_string(a) + " has no inverse");
    }
    return g;
}

FiniteGroup trivial_group() {
    return group_from_table({0}, {"1"});
}

FiniteGroup cyclic_group(size_t n) {
    std::vector<size_t> table(n * n);
    std::vector<std::string> labels;
    for (size_t a = 0; a < n; ++a) {
        labels.push_back(a == 0 ? "1" : "c^" + std::to_string(a));
        for (size_t b = 0; b < n; ++b) table[a * n + b] = (a + b) % n;
    }
    return group_from_table(table, std::move(labels));
}

namespace {

GroupAction build_action(FiniteGroup group, FiniteGroup space,
                         std::vector<std::vector<size_t>> maps, bool automorphisms);

}  // namespace

GroupAction make_action(FiniteGroup group, FiniteGroup space,
                        std::vector<std::vector<size_t>> maps) {
    return build_action(std::move(group), std::move(space), std::move(maps), true);
}

GroupAction make_permutation_action(FiniteGroup group, FiniteGroup space,
                                    std::vector<std::vector<size_t>> maps) {
    return build_action(std::move(group), std::move(space), std::move(maps), false);
}

namespace {

GroupAction build_action(FiniteGroup group, FiniteGroup space,
                         std::vector<std::vector<size_t>> maps, bool automorphisms) {
    const size_t n = group.order, m = space.order;
    if (maps.size() != n) throw MathError("action needs one permutation per actor element");
    for (size_t g = 0; g < n; ++g) {
        if (maps[g].size() != m) throw MathError("action permutation has wrong size");
        std::vector<bool> hit(m, false);
        for (size_t t : maps[g]) {
            if (t >= m || hit[t])
                throw MathError("action map of actor " + std::to_string(g) +
                                " is not a permutation");
            hit[t] = true;
        }
        if (automorphisms) {
            for (size_t s = 0; s < m; ++s)
                for (size_t t = 0; t < m; ++t)
                    if (maps[g][space.mul(s, t)] != space.mul(maps[g][s], maps[g][t]))
                        throw MathError("actor " + std::to_string(g) +
                                        " does not act by an automorphism at (" +
                                        std::to_string(s) + "," + std::to_string(t) + ")");
        }
    }
    // homomorphism into the permutation group
    for (size_t t = 0; t < m; ++t)
        if (maps[group.identity_index][t] != t)
            throw MathError("identity does not act trivially");
    for (size_t g = 0; g < n; ++g)
        for (size_t h = 0; h < n; ++h)
            for (size_t t = 0; t < m; ++t)
                if (maps[group.mul(g, h)][t] != maps[g][maps[h][t]])
                    throw MathError("action is not a homomorphism at pair (" +
                                    std::to_string(g) + "," + std::to_string(h) + ")");
    return GroupAction{std::move(group), std::move(space), std::move(maps)};
}

}  // namespace

GroupAction trivial_action(FiniteGroup group, FiniteGroup space) {
    std::vector<size_t> id(space.order);
    std::iota(id.begin(), id.end(), size_t{0});
    return make_action(std::move(group), std::move(space),
                       std::vector<std::vector<size_t>>(group.order, id));
}

std::pair<FiniteGroup, GroupAction> z2_span(
    size_t r, const FiniteGroup& actor,
    const std::vector<std::vector<size_t>>& coset_perms) {
    if (r == 0 || r >= 8 * sizeof(size_t))
        throw MathError("z2_span: coset count out of range");
    if (coset_perms.size() != actor.order)
        throw MathError("z2_span: one coset permutation per actor element required");
    const size_t order = size_t{1} << r;

    std::vector<size_t> table(order * order);
    std::vector<std::string> labels;
    for (size_t a = 0; a < order; ++a) {
        std::string bits;
        for (size_t i = 0; i < r; ++i) bits += ((a >> i) & 1u) ? '1' : '0';
        labels.push_back(bits);
        for (size_t b = 0; b < order; ++b) table[a * order + b] = a ^ b;
    }
    FiniteGroup t = group_from_table(table, std::move(labels));

    std::vector<std::vector<size_t>> maps(actor.order, std::vector<size_t>(order));
    for (size_t g = 0; g < actor.order; ++g) {
        const auto& perm = coset_perms[g];
        if (perm.size() != r) throw MathError("z2_span: coset permutation has wrong size");
        std::vector<bool> hit(r, false);
        for (size_t c : perm) {
            if (c >= r || hit[c]) throw MathError("z2_span: actor does not permute the cosets");
            hit[c] = true;
        }
        for (size_t a = 0; a < order; ++a) {
            size_t image = 0;
            for (size_t i = 0; i < r; ++i)
                if ((a >> i) & 1u) image |= size_t{1} << perm[i];
            maps[g][a] = image;
        }
    }
    GroupAction action = make_action(actor, t, std::move(maps));
    return {std::move(t), std::move(action)};
}

std::vector<Orbit> orbits_stabilizers(const GroupAction& action) {
    const size_t n = action.group.order, m = action.space.order;
    std::vector<bool> seen(m, false);
    std::vector<Orbit> orbits;
    for (size_t t = 0; t < m; ++t) {
        if (seen[t]) continue;
        Orbit o;
        o.representative = t;
        for (size_t g = 0; g < n; ++g) {
            size_t img = action.act(g, t);
            if (!seen[img]) {
                seen[img] = true;
                o.elements.push_back(img);
            }
            if (img == t) o.stabilizer.push_back(g);
        }
        std::sort(o.elements.begin(), o.elements.end());
        if (o.elements.size() * o.stabilizer.size() != n)
            throw MathError("orbit-stabilizer law fails at representative " +
                            std::to_string(t));
        for (size_t a : o.stabilizer) {
            bool has_inv = false;
            for (size_t b : o.stabilizer) {
                if (std::find(o.stabilizer.begin(), o.stabilizer.end(),
                              action.group.mul(a, b)) == o.stabilizer.end())
                    throw MathError("stabilizer not closed at representative " +
                                    std::to_string(t));
                if (action.group.mul(a, b) == action.group.identity_index) has_inv = true;
            }
            if (!has_inv)
                throw MathError("stabilizer misses an inverse at representative " +
                                std::to_string(t));
        }
        orbits.push_back(std::move(o));
    }
    return orbits;
}

GroupExtensionData extension_group(const Cocycle& alpha) {
    const GaloisExtension& ext = alpha.extension;
    const size_t ng = ext.order();

    // d = lcm of the orders of the cocycle values
    unsigned d = 1;
    for (const auto& v : alpha.values) {
        auto ord = is_root_of_unity(v);
        if (!ord) throw MathError("cocycle value is not a root of unity");
        d = std::lcm(d, *ord);
    }

    // multiplicative closure of the values: the subgroup of L* they generate
    std::vector<NFElement> mu_elems = {nf_one(ext.field)};
    auto locate = [&](const NFElement& x) -> std::optional<size_t> {
        for (size_t i = 0; i < mu_elems.size(); ++i)
            if (nf_eq(mu_elems[i], x)) return i;
        return std::nullopt;
    };
    for (size_t head = 0; head < mu_elems.size(); ++head) {
        for (const auto& v : alpha.values) {
            NFElement prod = nf_mul(mu_elems[head], v);
            if (!locate(prod)) mu_elems.push_back(std::move(prod));
        }
    }
    if (mu_elems.size() != d)
        throw MathError("roots of unity generated by the cocycle number " +
                        std::to_string(mu_elems.size()) + ", expected " + std::to_string(d));

    // generator of order exactly d, then reorder mu as its powers
    std::optional<size_t> gen;
    for (size_t i = 0; i < mu_elems.size() && !gen; ++i)
        if (is_root_of_unity(mu_elems[i]) == d) gen = i;
    if (!gen) throw MathError("value group is not cyclic of order " + std::to_string(d));
    std::vector<NFElement> scalar_of;
    NFElement cur = nf_one(ext.field);
    for (unsigned k = 0; k < d; ++k) {
        scalar_of.push_back(cur);
        cur = nf_mul(cur, mu_elems[*gen]);
    }
    auto mu_index = [&](const NFElement& x) -> size_t {
        for (size_t i = 0; i < scalar_of.size(); ++i)
            if (nf_eq(scalar_of[i], x)) return i;
        throw MathError("element escapes the root-of-unity group");
    };

    // Galois stability of mu
    for (size_t g = 0; g < ng; ++g)
        for (const auto& z : scalar_of) mu_index(apply_automorphism(ext, g, z));

    GroupExtensionData data{FiniteGroup{}, FiniteGroup{}, {}, {}, scalar_of, alpha};
    {
        std::vector<size_t> table(d * d);
        std::vector<std::string> labels;
        for (size_t a = 0; a < d; ++a) {
            labels.push_back(a == 0 ? "1" : "zeta^" + std::to_string(a));
            for (size_t b = 0; b < d; ++b) table[a * d + b] = (a + b) % d;
        }
        data.mu = group_from_table(table, std::move(labels));
    }

    // Ghat on pairs (z, g), index z*ng + g
    const size_t order = d * ng;
    std::vector<size_t> table(order * order);
    std::vector<std::string> labels;
    for (size_t z1 = 0; z1 < d; ++z1) {
        for (size_t g1 = 0; g1 < ng; ++g1) {
            labels.push_back("(" + data.mu.label_of(z1) + ",s" + std::to_string(g1) + ")");
            for (size_t z2 = 0; z2 < d; ++z2) {
                for (size_t g2 = 0; g2 < ng; ++g2) {
                    size_t tw = mu_index(apply_automorphism(ext, g1, scalar_of[z2]));
                    size_t zc = mu_index(alpha.at(g1, g2));
                    size_t z = (z1 + tw + zc) % d;
                    size_t g = ext.compose(g1, g2);
                    table[(z1 * ng + g1) * order + (z2 * ng + g2)] = z * ng + g;
                }
            }
        }
    }
    data.ghat = group_from_table(table, std::move(labels));

    data.projection.resize(order);
    for (size_t z = 0; z < d; ++z)
        for (size_t g = 0; g < ng; ++g) data.projection[z * ng + g] = g;
    data.mu_embedding.resize(d);
    for (size_t z = 0; z < d; ++z) data.mu_embedding[z] = z * ng + ext.identity_index;

    // projection is a homomorphism with kernel exactly the embedded mu
    for (size_t a = 0; a < order; ++a)
        for (size_t b = 0; b < order; ++b)
            if (data.projection[data.ghat.mul(a, b)] !=
                ext.compose(data.projection[a], data.projection[b]))
                throw MathError("extension projection is not a homomorphism");
    for (size_t a = 0; a < order; ++a) {
        bool in_kernel = data.projection[a] == ext.identity_index;
        bool embedded = std::find(data.mu_embedding.begin(), data.mu_embedding.end(), a) !=
                        data.mu_embedding.end();
        if (in_kernel != embedded)
            throw MathError("extension kernel differs from the embedded root group");
    }
    for (size_t z1 = 0; z1 < d; ++z1)
        for (size_t z2 = 0; z2 < d; ++z2)
            if (data.ghat.mul(data.mu_embedding[z1], data.mu_embedding[z2]) !=
                data.mu_embedding[data.mu.mul(z1, z2)])
                throw MathError("root-group embedding is not a homomorphism");
    return data;
}

int CharacterGroup::pairing(size_t s, size_t t) const {
    return popcount_and(s, t) % 2 == 0 ? 1 : -1;
}

CharacterGroup character_group(const FiniteGroup& t) {
    size_t r = 0;
    while ((size_t{1} << r) < t.order) ++r;
    if ((size_t{1} << r) != t.order)
        throw MathError("character group requires order a power of 2");
    for (size_t a = 0; a < t.order; ++a)
        for (size_t b = 0; b < t.order; ++b)
            if (t.mul(a, b) != (a ^ b))
                throw MathError("character group requires the bit-vector XOR presentation");

    CharacterGroup cg;
    cg.bits = r;
    std::vector<size_t> table(t.order * t.order);
    std::vector<std::string> labels;
    for (size_t a = 0; a < t.order; ++a) {
        labels.push_back("chi_" + t.label_of(a));
        for (size_t b = 0; b < t.order; ++b) table[a * t.order + b] = a ^ b;
    }
    cg.dual = group_from_table(table, std::move(labels));

    // bimultiplicative and nondegenerate
    for (size_t s = 0; s < t.order; ++s) {
        bool trivial = true;
        for (size_t a = 0; a < t.order; ++a) {
            if (cg.pairing(s, a) != 1) trivial = false;
            for (size_t b = 0; b < t.order; ++b) {
                if (cg.pairing(s, a ^ b) != cg.pairing(s, a) * cg.pairing(s, b) ||
                    cg.pairing(s ^ a, b) != cg.pairing(s, b) * cg.pairing(a, b))
                    throw MathError("character pairing is not bimultiplicative");
            }
        }
        if (trivial && s != 0) throw MathError("character pairing is degenerate");
    }
    return cg;
}

GroupAction dual_action(const GroupAction& psi) {
    CharacterGroup cg = character_group(psi.space);
    const size_t m = psi.space.order, n = psi.group.order;
    std::vector<std::vector<size_t>> maps(n, std::vector<size_t>(m));
    for (size_t g = 0; g < n; ++g) {
        size_t ginv = psi.group.inv(g);
        for (size_t s = 0; s < m; ++s) {
            // image character s': <s', e_i> = <s, psi(g^{-1}) e_i>
            size_t image = 0;
            for (size_t i = 0; i < cg.bits; ++i) {
                size_t basis = size_t{1} << i;
                if (cg.pairing(s, psi.act(ginv, basis)) == -1) image |= basis;
            }
            maps[g][s] = image;
        }
    }
    GroupAction action = make_action(psi.group, cg.dual, std::move(maps));
    // exhaustive pairing identity (g . chi)(t) = chi(psi(g^{-1}) t)
    for (size_t g = 0; g < n; ++g)
        for (size_t s = 0; s < m; ++s)
            for (size_t t = 0; t < m; ++t)
                if (cg.pairing(action.act(g, s), t) !=
                    cg.pairing(s, psi.act(psi.group.inv(g), t)))
                    throw MathError("dual action fails the pairing identity");
    return action;
}

FiniteGroup semidirect_product_group(const FiniteGroup& actor, const FiniteGroup& space,
                                     const GroupAction& action) {
    const size_t na = actor.order, ns = space.order, order = na * ns;
    std::vector<size_t> table(order * order);
    std::vector<std::string> labels;
    for (size_t a1 = 0; a1 < na; ++a1) {
        for (size_t s1 = 0; s1 < ns; ++s1) {
            labels.push_back("(" + actor.label_of(a1) + "," + space.label_of(s1) + ")");
            for (size_t a2 = 0; a2 < na; ++a2) {
                for (size_t s2 = 0; s2 < ns; ++s2) {
                    size_t a = actor.mul(a1, a2);
                    size_t s = space.mul(action.act(actor.inv(a2), s1), s2);
                    table[(a1 * ns + s1) * order + (a2 * ns + s2)] = a * ns + s;
                }
            }
        }
    }
    return group_from_table(table, std::move(labels));
}

bool is_group_subset_subgroup(const FiniteGroup& g, const std::vector<size_t>& subset) {
    if (subset.empty()) return false;
    for (size_t a : subset) {
        if (a >= g.order) return false;
        for (size_t b : subset)
            if (std::find(subset.begin(), subset.end(), g.mul(a, b)) == subset.end())
                return false;
        if (std::find(subset.begin(), subset.end(), g.inv(a)) == subset.end()) return false;
    }
    return std::find(subset.begin(), subset.end(), g.identity_index) != subset.end();
}

FiniteGroup galois_as_group(const GaloisExtension& ext) {
    const size_t n = ext.order();
    std::vector<size_t> table(n * n);
    std::vector<std::string> labels;
    for (size_t i = 0; i < n; ++i) {
        labels.push_back(i == ext.identity_index ? "1" : "s" + std::to_string(i));
        for (size_t j = 0; j < n; ++j) table[i * n + j] = ext.compose(i, j);
    }
    return group_from_table(table, std::move(labels));
}

}  // namespace hopfforms
