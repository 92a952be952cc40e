#include "hopfforms/serialize.hpp"

#include <fstream>
#include <sstream>

namespace hopfforms {

namespace {

const QQ qq;

const Json& need(const Json& j, const char* key) {
    auto it = j.find(key);
    if (it == j.end()) throw ParseError(std::string("missing key \"") + key + "\"");
    return *it;
}

Int int_from_string(const std::string& s) {
    if (s.empty()) throw ParseError("empty integer literal");
    size_t start = s[0] == '-' ? 1 : 0;
    if (start == s.size()) throw ParseError("malformed integer \"" + s + "\"");
    for (size_t i = start; i < s.size(); ++i)
        if (s[i] < '0' || s[i] > '9')
            throw ParseError("malformed integer \"" + s + "\"");
    return Int(s);
}

}  // namespace

std::string rational_to_string(const Rational& r) {
    Int num = boost::multiprecision::numerator(r);
    Int den = boost::multiprecision::denominator(r);
    if (den == 1) return num.str();
    return num.str() + "/" + den.str();
}

Rational rational_from_string(const std::string& s) {
    size_t slash = s.find('/');
    if (slash == std::string::npos) return Rational(int_from_string(s));
    Int num = int_from_string(s.substr(0, slash));
    Int den = int_from_string(s.substr(slash + 1));
    if (den == 0) throw ParseError("zero denominator in rational \"" + s + "\"");
    return Rational(num, den);
}

Json rvec_to_json(const std::vector<Rational>& v) {
    Json a = Json::array();
    for (const Rational& r : v) a.push_back(rational_to_string(r));
    return a;
}

std::vector<Rational> rvec_from_json(const Json& j) {
    if (!j.is_array()) throw ParseError("expected an array of rationals");
    std::vector<Rational> v;
    for (const Json& e : j) {
        if (!e.is_string()) throw ParseError("rationals must be \"p/q\" strings");
        v.push_back(rational_from_string(e.get<std::string>()));
    }
    return v;
}

Json nfelement_to_json(const NFElement& x) { return rvec_to_json(x.coeffs); }

NFElement nfelement_from_json(const NumberFieldPtr& f, const Json& j) {
    std::vector<Rational> coeffs = rvec_from_json(j);
    if (coeffs.size() != f->degree())
        throw ParseError("field element has " + std::to_string(coeffs.size()) +
                         " coefficients, expected " + std::to_string(f->degree()));
    return nf_from_coeffs(f, std::move(coeffs));
}

Json matrix_to_json(const Matrix<QQ>& m) {
    Json rows = Json::array();
    for (size_t r = 0; r < m.rows(); ++r) {
        Json row = Json::array();
        for (size_t c = 0; c < m.cols(); ++c) row.push_back(rational_to_string(m.at(r, c)));
        rows.push_back(std::move(row));
    }
    return rows;
}

Matrix<QQ> matrix_from_json(const Json& j) {
    if (!j.is_array() || j.empty()) throw ParseError("expected a non-empty matrix");
    const size_t rows = j.size(), cols = j[0].size();
    Matrix<QQ> m(qq, rows, cols);
    for (size_t r = 0; r < rows; ++r) {
        std::vector<Rational> row = rvec_from_json(j[r]);
        if (row.size() != cols) throw ParseError("ragged matrix rows");
        for (size_t c = 0; c < cols; ++c) m.at(r, c) = row[c];
    }
    return m;
}

Json group_to_json(const FiniteGroup& g) {
    Json j;
    j["type"] = "group";
    j["order"] = g.order;
    j["table"] = g.table;
    Json labels = Json::array();
    for (size_t i = 0; i < g.order; ++i) labels.push_back(g.label_of(i));
    j["labels"] = std::move(labels);
    return j;
}

FiniteGroup group_from_json(const Json& j) {
    size_t order = need(j, "order").get<size_t>();
    std::vector<size_t> table = need(j, "table").get<std::vector<size_t>>();
    if (table.size() != order * order)
        throw ParseError("group table has the wrong size");
    std::vector<std::string> labels;
    if (j.contains("labels")) labels = j["labels"].get<std::vector<std::string>>();
    return group_from_table(table, std::move(labels));
}

Json action_to_json(const GroupAction& a) {
    Json j;
    j["type"] = "action";
    j["group"] = group_to_json(a.group);
    j["space"] = group_to_json(a.space);
    j["maps"] = a.maps;
    return j;
}

GroupAction action_from_json(const Json& j) {
    FiniteGroup group = group_from_json(need(j, "group"));
    FiniteGroup space = group_from_json(need(j, "space"));
    auto maps = need(j, "maps").get<std::vector<std::vector<size_t>>>();
    return make_permutation_action(std::move(group), std::move(space), std::move(maps));
}

Json hopf_to_json(const HopfAlgebraData<QQ>& h) {
    const size_t n = h.algebra.dim;
    Json j;
    j["type"] = "hopf";
    j["field"] = "Q";
    j["dim"] = n;
    Json labels = Json::array();
    for (size_t i = 0; i < n; ++i) labels.push_back(h.algebra.label_of(i));
    j["basis_labels"] = std::move(labels);

    Json mult = Json::array();
    for (size_t a = 0; a < n; ++a) {
        Json plane = Json::array();
        for (size_t b = 0; b < n; ++b)
            plane.push_back(rvec_to_json(svec_to_dense(qq, h.algebra.mult_at(a, b), n)));
        mult.push_back(std::move(plane));
    }
    j["mult"] = std::move(mult);
    j["unit"] = rvec_to_json(h.algebra.unit);

    Json comult = Json::array();
    for (size_t a = 0; a < n; ++a)
        comult.push_back(rvec_to_json(svec_to_dense(qq, h.coalgebra.comult[a], n * n)));
    j["comult"] = std::move(comult);
    j["counit"] = rvec_to_json(h.coalgebra.counit);
    j["antipode"] = matrix_to_json(h.antipode);
    return j;
}

HopfAlgebraData<QQ> hopf_from_json(const Json& j) {
    const size_t n = need(j, "dim").get<size_t>();
    HopfAlgebraData<QQ> h;
    h.algebra.field = qq;
    h.algebra.dim = n;
    if (j.contains("basis_labels"))
        h.algebra.labels = j["basis_labels"].get<std::vector<std::string>>();

    const Json& mult = need(j, "mult");
    if (mult.size() != n) throw ParseError("mult tensor has the wrong first dimension");
    h.algebra.mult.assign(n * n, SVec<QQ>{});
    for (size_t a = 0; a < n; ++a) {
        if (mult[a].size() != n) throw ParseError("mult tensor has a ragged plane");
        for (size_t b = 0; b < n; ++b) {
            std::vector<Rational> row = rvec_from_json(mult[a][b]);
            if (row.size() != n) throw ParseError("mult tensor has a ragged row");
            h.algebra.mult_at(a, b) = svec_from_dense(qq, row);
        }
    }
    h.algebra.unit = rvec_from_json(need(j, "unit"));
    if (h.algebra.unit.size() != n) throw ParseError("unit vector has the wrong length");

    h.coalgebra.dim = n;
    const Json& comult = need(j, "comult");
    if (comult.size() != n) throw ParseError("comult has the wrong first dimension");
    for (size_t a = 0; a < n; ++a) {
        std::vector<Rational> row = rvec_from_json(comult[a]);
        if (row.size() != n * n) throw ParseError("comult row has the wrong length");
        h.coalgebra.comult.push_back(svec_from_dense(qq, row));
    }
    h.coalgebra.counit = rvec_from_json(need(j, "counit"));
    if (h.coalgebra.counit.size() != n)
        throw ParseError("counit vector has the wrong length");

    h.antipode = matrix_from_json(need(j, "antipode"));
    if (h.antipode.rows() != n || h.antipode.cols() != n)
        throw ParseError("antipode matrix has the wrong shape");
    return h;
}

Json report_to_json(const Report& r) {
    Json j;
    j["type"] = "report";
    j["status"] = r.all_pass() ? "pass" : "fail";
    Json checks = Json::array();
    for (const CheckResult& c : r.checks) {
        Json e;
        e["name"] = c.name;
        e["pass"] = c.pass;
        if (!c.where.empty()) e["where"] = c.where;
        checks.push_back(std::move(e));
    }
    j["checks"] = std::move(checks);
    return j;
}

Json extension_to_json(const GaloisExtension& ext) {
    Json j;
    j["min_poly"] = rvec_to_json(ext.field->min_poly());
    j["label"] = ext.field->label();
    if (ext.field->witness_prime()) j["witness_prime"] = *ext.field->witness_prime();
    Json images = Json::array();
    for (const FieldAutomorphism& a : ext.automorphisms)
        images.push_back(nfelement_to_json(a.generator_image));
    j["automorphism_images"] = std::move(images);
    return j;
}

GaloisExtension extension_from_json(const Json& j) {
    Poly p = rvec_from_json(need(j, "min_poly"));
    std::string label = need(j, "label").get<std::string>();
    std::optional<std::uint64_t> prime;
    if (j.contains("witness_prime")) prime = j["witness_prime"].get<std::uint64_t>();
    NumberFieldPtr f = nf_create(p, label, prime);
    std::vector<NFElement> images;
    for (const Json& im : need(j, "automorphism_images"))
        images.push_back(nfelement_from_json(f, im));
    return galois_group(f, images);
}

Json cocycle_to_json(const Cocycle& c) {
    Json j;
    j["type"] = "cocycle";
    j["extension"] = extension_to_json(c.extension);
    Json values = Json::array();
    for (const NFElement& v : c.values) values.push_back(nfelement_to_json(v));
    j["values"] = std::move(values);
    return j;
}

Cocycle cocycle_from_json(const Json& j) {
    GaloisExtension ext = extension_from_json(need(j, "extension"));
    const Json& vals = need(j, "values");
    if (vals.size() != ext.order() * ext.order())
        throw ParseError("cocycle value table has the wrong size");
    std::vector<NFElement> values;
    for (const Json& v : vals) values.push_back(nfelement_from_json(ext.field, v));
    return cocycle_verify(ext, std::move(values));
}

FinitizationWitness witness_from_json(const GaloisExtension& ext, const Json& j) {
    FinitizationWitness w;
    w.m = need(j, "m").get<long>();
    for (const Json& v : need(j, "f")) w.f.push_back(nfelement_from_json(ext.field, v));
    w.big = extension_from_json(need(j, "big"));
    w.embedding = FieldEmbedding{ext.field, w.big.field,
                                 nfelement_from_json(w.big.field, need(j, "embedding_image"))};
    for (const Json& v : need(j, "roots"))
        w.roots.push_back(nfelement_from_json(w.big.field, v));
    w.projection = need(j, "projection").get<std::vector<size_t>>();
    return w;
}

std::string dump_canonical(const Json& j) { return j.dump(2) + "\n"; }

Json parse_json_text(const std::string& text) {
    try {
        return Json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("invalid JSON: ") + e.what());
    }
}

Json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    try {
        return Json::parse(buf.str());
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(path + ": invalid JSON: " + e.what());
    }
}

}  // namespace hopfforms
