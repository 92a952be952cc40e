#include "doctest.h"

#include <fstream>
#include <sstream>

#include "hopfforms/serialize.hpp"

using namespace hopfforms;

namespace {

const QQ qq;

GaloisExtension qi_extension() {
    auto f = nf_create({1, 0, 1}, "Q(i)");
    NFElement i = nf_generator(f);
    return galois_group(f, {i, nf_neg(i)});
}

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    REQUIRE(in);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

bool hopf_equal(const HopfAlgebraData<QQ>& a, const HopfAlgebraData<QQ>& b) {
    if (a.algebra.dim != b.algebra.dim) return false;
    for (size_t i = 0; i < a.algebra.mult.size(); ++i)
        if (!svec_eq(qq, a.algebra.mult[i], b.algebra.mult[i])) return false;
    if (a.algebra.unit != b.algebra.unit) return false;
    for (size_t i = 0; i < a.algebra.dim; ++i)
        if (!svec_eq(qq, a.coalgebra.comult[i], b.coalgebra.comult[i])) return false;
    return a.coalgebra.counit == b.coalgebra.counit && a.antipode.eq(b.antipode);
}

}  // namespace

TEST_CASE("rational strings") {
    CHECK(rational_to_string(Rational(3, 4)) == "3/4");
    CHECK(rational_to_string(Rational(-6, 4)) == "-3/2");
    CHECK(rational_to_string(Rational(5)) == "5");
    CHECK(rational_to_string(Rational(0)) == "0");
    CHECK(rational_from_string("3/4") == Rational(3, 4));
    CHECK(rational_from_string("-7") == Rational(-7));
    CHECK(rational_from_string("2/4") == Rational(1, 2));
    CHECK_THROWS_WITH_AS(rational_from_string("1/0"), doctest::Contains("zero denominator"),
                         ParseError);
    CHECK_THROWS_AS(rational_from_string("x"), ParseError);
    CHECK_THROWS_AS(rational_from_string(""), ParseError);
    CHECK_THROWS_AS(rational_from_string("1/"), ParseError);
}

TEST_CASE("hopf document round trip is exact") {
    HopfAlgebraData<QQ> h = group_algebra(cyclic_group(3), qq);
    Json j = hopf_to_json(h);
    HopfAlgebraData<QQ> back = hopf_from_json(j);
    CHECK(hopf_equal(h, back));
    CHECK(verify_hopf(back).all_pass());
    // serialization is idempotent at the byte level
    CHECK(dump_canonical(hopf_to_json(back)) == dump_canonical(j));
}

TEST_CASE("hopf document shape errors") {
    Json j = hopf_to_json(function_algebra(cyclic_group(2), qq));
    Json bad = j;
    bad.erase("unit");
    CHECK_THROWS_WITH_AS(hopf_from_json(bad), doctest::Contains("unit"), ParseError);
    bad = j;
    bad["comult"][0] = Json::array({"1"});
    CHECK_THROWS_AS(hopf_from_json(bad), ParseError);
}

TEST_CASE("group documents reverify the axioms on read") {
    FiniteGroup g = cyclic_group(4);
    Json j = group_to_json(g);
    FiniteGroup back = group_from_json(j);
    CHECK(back.order == 4);
    CHECK(back.table == g.table);
    CHECK(back.labels == g.labels);

    Json bad = j;
    bad["table"][1] = 0;  // breaks the latin-square property
    CHECK_THROWS_AS(group_from_json(bad), MathError);
}

TEST_CASE("action documents round trip") {
    FiniteGroup z2 = cyclic_group(2);
    auto [t, act] = z2_span(2, z2, {{0, 1}, {1, 0}});
    Json j = action_to_json(act);
    GroupAction back = action_from_json(j);
    CHECK(back.maps == act.maps);
    CHECK(back.space.table == t.table);
}

TEST_CASE("extension and cocycle documents") {
    GaloisExtension ext = qi_extension();
    size_t sigma = 1 - ext.identity_index;
    std::vector<NFElement> values(4, nf_one(ext.field));
    values[sigma * 2 + sigma] = nf_from_rational(ext.field, -1);
    Cocycle alpha = cocycle_verify(ext, values);

    Json j = cocycle_to_json(alpha);
    Cocycle back = cocycle_from_json(j);
    CHECK(back.extension.order() == 2);
    for (size_t i = 0; i < 4; ++i) CHECK(nf_eq(back.values[i], alpha.values[i]));

    // reading reruns the cocycle identity: a non-cocycle table is rejected
    Json bad = j;
    bad["values"][sigma * 2 + sigma] = Json::array({"0", "1"});  // alpha(s,s) = i
    CHECK_THROWS_AS(cocycle_from_json(bad), MathError);

    // a witness prime survives the round trip
    auto f5 = nf_create({1, 1, 1, 1, 1}, "Q(zeta5)", 2);
    NFElement z = nf_generator(f5);
    GaloisExtension zeta =
        galois_group(f5, {z, nf_pow(z, 2), nf_pow(z, 3), nf_pow(z, 4)});
    GaloisExtension zback = extension_from_json(extension_to_json(zeta));
    CHECK(zback.order() == 4);
    CHECK(zback.field->witness_prime() == std::optional<std::uint64_t>{2});
}

TEST_CASE("matrix and report documents") {
    Matrix<QQ> m(qq, 2, 3);
    m.at(0, 0) = Rational(1, 2);
    m.at(1, 2) = Rational(-5);
    Matrix<QQ> back = matrix_from_json(matrix_to_json(m));
    CHECK(back.eq(m));

    Report r;
    r.add("first", true);
    r.add("second", false, "(1,2)");
    Json j = report_to_json(r);
    CHECK(j["status"] == "fail");
    CHECK(j["checks"].size() == 2);
    CHECK(j["checks"][1]["where"] == "(1,2)");
    CHECK(!j["checks"][0].contains("where"));
}

TEST_CASE("witness block drives finitize") {
    GaloisExtension ext = qi_extension();
    size_t sigma = 1 - ext.identity_index;
    std::vector<NFElement> values(4, nf_one(ext.field));
    values[sigma * 2 + sigma] = nf_from_rational(ext.field, -2);
    Cocycle alpha = cocycle_verify(ext, std::move(values));

    Json w;
    w["m"] = 2;
    Json f = Json::array({Json::array({"1", "0"}), Json::array({"2", "0"})});
    if (ext.identity_index != 0) std::swap(f[0], f[1]);
    w["f"] = f;
    Json big;
    big["min_poly"] = Json::array({"9", "0", "-2", "0", "1"});
    big["label"] = "Q(i,sqrt2)";
    big["automorphism_images"] =
        Json::array({Json::array({"0", "1", "0", "0"}),
                     Json::array({"0", "2/3", "0", "-1/3"}),
                     Json::array({"0", "-2/3", "0", "1/3"}),
                     Json::array({"0", "-1", "0", "0"})});
    w["big"] = big;
    w["embedding_image"] = Json::array({"0", "1/6", "0", "1/6"});
    Json roots = Json::array({Json::array({"1", "0", "0", "0"}),
                              Json::array({"0", "5/6", "0", "-1/6"})});
    if (ext.identity_index != 0) std::swap(roots[0], roots[1]);
    w["roots"] = roots;
    // the projection depends on the verified automorphism order of the big
    // field, so compute it from the embedding image
    GaloisExtension bigext = extension_from_json(big);
    NFElement i_embedded = nfelement_from_json(bigext.field, w["embedding_image"]);
    Json proj = Json::array();
    for (size_t h = 0; h < bigext.order(); ++h) {
        NFElement img = apply_automorphism(bigext, h, i_embedded);
        proj.push_back(nf_eq(img, i_embedded) ? ext.identity_index : sigma);
    }
    w["projection"] = proj;

    FinitizationWitness witness = witness_from_json(ext, w);
    Cocycle beta = finitize(alpha, witness);
    CHECK(beta.extension.order() == 4);
    NFElement one = nf_one(witness.big.field);
    NFElement minus = nf_from_rational(witness.big.field, -1);
    for (const NFElement& v : beta.values) CHECK((nf_eq(v, one) || nf_eq(v, minus)));
}

TEST_CASE("golden file for the Z/2 group algebra") {
    HopfAlgebraData<QQ> h = group_algebra(cyclic_group(2), qq);
    std::string got = dump_canonical(hopf_to_json(h));
    std::string want = read_file(std::string(HF_GOLDEN_DIR) + "/group_algebra_z2.json");
    CHECK(got == want);
}

TEST_CASE("json parse errors carry the file path") {
    CHECK_THROWS_WITH_AS(load_json_file("/nonexistent/no.json"),
                         doctest::Contains("/nonexistent/no.json"), ParseError);
    CHECK_THROWS_WITH_AS(parse_json_text("{oops"), doctest::Contains("invalid JSON"),
                         ParseError);
}
