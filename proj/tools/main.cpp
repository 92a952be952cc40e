// Batch front door: parse JSON configuration documents, run the library's
// constructions and verifications, and emit deterministic reports.
//
// Exit codes: 0 all verdicts pass, 1 a verdict failed (report still
// written), 2 malformed config/input, 3 internal error.

#include <chrono>
#include <filesystem>
#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "hopfforms/serialize.hpp"

namespace hf = hopfforms;
using hf::Json;

namespace {

constexpr const char* kVersion = "1.0.0";

class StageClock {
public:
    void lap(const std::string& name) {
        auto now = std::chrono::steady_clock::now();
        timings_[name] =
            std::chrono::duration_cast<std::chrono::milliseconds>(now - last_).count();
        last_ = now;
    }
    Json to_json() const {
        Json j;
        for (const auto& [k, v] : timings_) j[k] = v;
        return j;
    }

private:
    std::chrono::steady_clock::time_point last_ = std::chrono::steady_clock::now();
    std::map<std::string, long long> timings_;
};

std::string file_digest(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw hf::ParseError("cannot open " + path);
    // FNV-1a over the raw bytes; enough to tie a report to its exact input
    std::uint64_t h = 1469598103934665603ull;
    char c;
    while (in.get(c)) {
        h ^= static_cast<unsigned char>(c);
        h *= 1099511628211ull;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

Json base_report(const std::string& command, const std::string& config_path) {
    Json j;
    j["type"] = "run_report";
    j["command"] = command;
    j["version"] = kVersion;
    j["config_digest"] = file_digest(config_path);
    return j;
}

void attach_checks(Json& report, const hf::Report& rep) {
    Json checks = hf::report_to_json(rep);
    report["status"] = checks["status"];
    report["checks"] = checks["checks"];
}

/// Verdict-failure report: the run was understood but a verified identity
/// failed; the exception message carries the locator.
Json failure_report(const std::string& command, const std::string& config_path,
                    const std::string& message) {
    Json j = base_report(command, config_path);
    j["status"] = "fail";
    Json check;
    check["name"] = message;
    check["pass"] = false;
    j["checks"] = Json::array({check});
    return j;
}

int emit(const Json& report, const std::string& out_dir, const std::string& golden_dir,
         const std::string& stem, const std::vector<std::pair<std::string, Json>>& extra) {
    std::cout << hf::dump_canonical(report);
    if (!out_dir.empty()) {
        std::filesystem::create_directories(out_dir);
        std::ofstream(out_dir + "/report.json") << hf::dump_canonical(report);
        for (const auto& [name, doc] : extra)
            std::ofstream(out_dir + "/" + name) << hf::dump_canonical(doc);
    }
    if (!golden_dir.empty()) {
        // timings are excluded from the determinism contract
        Json trimmed = report;
        trimmed.erase("timings");
        std::ifstream in(golden_dir + "/" + stem + ".report.json");
        if (!in) {
            std::cerr << "golden file " << golden_dir << "/" << stem
                      << ".report.json not found\n";
            return 1;
        }
        Json want = Json::parse(in);
        want.erase("timings");
        if (hf::dump_canonical(trimmed) != hf::dump_canonical(want)) {
            std::cerr << "report differs from the golden expectation\n";
            return 1;
        }
    }
    return report["status"] == "pass" ? 0 : 1;
}

std::string stem_of(const std::string& path) {
    return std::filesystem::path(path).stem().string();
}

hf::Cocycle cocycle_from_config(const Json& config) {
    hf::GaloisExtension ext = hf::extension_from_json(config.at("field"));
    const Json& vals = config.at("cocycle").at("values");
    if (vals.size() != ext.order() * ext.order())
        throw hf::ParseError("cocycle value table has the wrong size");
    std::vector<hf::NFElement> values;
    for (const Json& v : vals) values.push_back(hf::nfelement_from_json(ext.field, v));
    return hf::cocycle_verify(ext, std::move(values));
}

int run_pipeline(const std::string& config_path, const std::string& out_dir,
                 const std::string& golden_dir, size_t max_dim) {
    Json config = hf::load_json_file(config_path);
    Json report = base_report("pipeline", config_path);
    StageClock clock;
    try {
        hf::Cocycle alpha = cocycle_from_config(config);
        if (config.contains("witness")) {
            hf::FinitizationWitness w =
                hf::witness_from_json(alpha.extension, config["witness"]);
            alpha = hf::finitize(alpha, w);
            clock.lap("finitize");
        }
        {
            // guardrail before the expensive stages: dim H = 2^|G| |mu| |G|
            hf::GroupExtensionData ged = hf::extension_group(alpha);
            size_t dim = (size_t{1} << alpha.extension.order()) * ged.ghat.order;
            if (dim > max_dim)
                throw hf::ParseError("predicted dimension " + std::to_string(dim) +
                                     " exceeds --max-dim " + std::to_string(max_dim));
        }
        hf::PipelineReport rep = hf::pipeline(alpha);
        clock.lap("pipeline");

        Json dims;
        dims["dim_H"] = rep.invariants_result.hopf.algebra.dim;
        dims["dim_H1"] = rep.split.h1.dim;
        dims["dim_H2"] = rep.split.h2.dim;
        dims["dim_B"] = rep.b.dim;
        dims["dim_A"] = rep.a.algebra.dim;
        dims["order_Ghat"] = rep.extension.ghat.order;
        dims["order_mu"] = rep.extension.mu.order;
        report["dims"] = dims;
        attach_checks(report, rep.report);
        report["timings"] = clock.to_json();
        return emit(report, out_dir, golden_dir, stem_of(config_path),
                    {{"hopf.json", hf::hopf_to_json(rep.invariants_result.hopf)},
                     {"surjection.json", hf::matrix_to_json(rep.onto.matrix)}});
    } catch (const hf::MathError& e) {
        return emit(failure_report("pipeline", config_path, e.what()), out_dir,
                    golden_dir, stem_of(config_path), {});
    }
}

int run_forms(const std::string& config_path, const std::string& out_dir,
              const std::string& golden_dir) {
    Json config = hf::load_json_file(config_path);
    Json report = base_report("forms", config_path);
    StageClock clock;
    try {
        std::vector<long long> ds = config.at("discriminants").get<std::vector<long long>>();
        std::vector<hf::GaloisExtension> exts;
        for (long long d : ds) {
            auto f = hf::nf_create({hf::Rational(-d), 0, 1},
                                   "Q(sqrt" + std::to_string(d) + ")");
            hf::NFElement s = hf::nf_generator(f);
            exts.push_back(hf::galois_group(f, {s, hf::nf_neg(s)}));
        }
        hf::FormsFamilyCertificate cert = hf::forms_family_certificate(exts);
        clock.lap("forms");

        report["discriminants"] = cert.discriminants;
        hf::Report rep;
        rep.add("quadratic component discriminants pairwise distinct",
                cert.pairwise_distinct);
        attach_checks(report, rep);
        report["timings"] = clock.to_json();
        return emit(report, out_dir, golden_dir, stem_of(config_path), {});
    } catch (const hf::MathError& e) {
        return emit(failure_report("forms", config_path, e.what()), out_dir, golden_dir,
                    stem_of(config_path), {});
    }
}

int run_field_quotient(const std::string& config_path, const std::string& out_dir,
                       const std::string& golden_dir) {
    Json config = hf::load_json_file(config_path);
    Json report = base_report("field-quotient", config_path);
    StageClock clock;
    try {
        hf::GaloisExtension ext = hf::extension_from_json(config.at("field"));
        std::vector<size_t> subgroup = config.at("subgroup").get<std::vector<size_t>>();
        hf::FieldQuotientResult q = hf::field_as_quotient(ext, subgroup);
        clock.lap("field_quotient");

        Json dims;
        dims["dim_hopf"] = q.hopf.algebra.dim;
        dims["quotient_field_degree"] = q.field.field->degree();
        report["dims"] = dims;
        report["quotient_field_min_poly"] = hf::rvec_to_json(q.field.field->min_poly());
        hf::Report rep;
        rep.add("Hopf axioms", hf::verify_hopf(q.hopf).all_pass());
        rep.add("semisimple", hf::is_semisimple(q.hopf.algebra));
        rep.add("cosemisimple", hf::is_cosemisimple(q.hopf));
        hf::MorphismVerdict v = hf::verify_morphism(q.onto_field);
        rep.add("onto algebra map to the fixed field", v.is_algebra_map && v.is_onto,
                v.counterexample);
        attach_checks(report, rep);
        report["timings"] = clock.to_json();
        return emit(report, out_dir, golden_dir, stem_of(config_path),
                    {{"hopf.json", hf::hopf_to_json(q.hopf)},
                     {"onto.json", hf::matrix_to_json(q.onto_field.matrix)}});
    } catch (const hf::MathError& e) {
        return emit(failure_report("field-quotient", config_path, e.what()), out_dir,
                    golden_dir, stem_of(config_path), {});
    }
}

int run_finitize(const std::string& config_path, const std::string& out_dir,
                 const std::string& golden_dir) {
    Json config = hf::load_json_file(config_path);
    Json report = base_report("finitize", config_path);
    StageClock clock;
    try {
        hf::Cocycle alpha = cocycle_from_config(config);
        hf::FinitizationWitness w =
            hf::witness_from_json(alpha.extension, config.at("witness"));
        hf::Cocycle beta = hf::finitize(alpha, w);
        clock.lap("finitize");

        hf::Report rep;
        rep.add("witness equations verified and every value a root of unity", true);
        attach_checks(report, rep);
        report["timings"] = clock.to_json();
        return emit(report, out_dir, golden_dir, stem_of(config_path),
                    {{"cocycle.json", hf::cocycle_to_json(beta)}});
    } catch (const hf::MathError& e) {
        return emit(failure_report("finitize", config_path, e.what()), out_dir,
                    golden_dir, stem_of(config_path), {});
    }
}

int run_verify(const std::string& in_path, const std::string& golden_dir) {
    Json doc = hf::load_json_file(in_path);
    Json report = base_report("verify", in_path);
    try {
        hf::HopfAlgebraData<hf::QQ> h = hf::hopf_from_json(doc);
        attach_checks(report, hf::verify_hopf(h));
        return emit(report, "", golden_dir, stem_of(in_path), {});
    } catch (const hf::MathError& e) {
        return emit(failure_report("verify", in_path, e.what()), "", golden_dir,
                    stem_of(in_path), {});
    }
}

int run_dump(const std::string& in_path) {
    Json doc = hf::load_json_file(in_path);
    std::string type = doc.value("type", "");
    Json canon;
    if (type == "hopf")
        canon = hf::hopf_to_json(hf::hopf_from_json(doc));
    else if (type == "group")
        canon = hf::group_to_json(hf::group_from_json(doc));
    else if (type == "action")
        canon = hf::action_to_json(hf::action_from_json(doc));
    else if (type == "cocycle")
        canon = hf::cocycle_to_json(hf::cocycle_from_json(doc));
    else
        throw hf::ParseError(in_path + ": unknown document type \"" + type + "\"");
    std::cout << hf::dump_canonical(canon);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact constructions and verifications for structure-constant "
                 "Hopf algebras"};
    app.require_subcommand(1);

    std::string config_path, in_path, out_dir, golden_dir;
    size_t max_dim = 1024;
    size_t jobs = 1;
    app.add_option("--jobs", jobs, "parallel corpus entries (reserved)")
        ->check(CLI::PositiveNumber);
    app.add_option("--max-dim", max_dim, "largest object dimension to attempt")
        ->capture_default_str();
    app.add_option("--golden", golden_dir, "directory of expected reports");

    auto* pipe = app.add_subcommand("pipeline", "crossed product as a Hopf quotient");
    pipe->add_option("--config", config_path)->required();
    pipe->add_option("--out", out_dir);

    auto* forms = app.add_subcommand("forms", "family of forms of a group algebra");
    forms->add_option("--config", config_path)->required();

    auto* fq = app.add_subcommand("field-quotient", "a field as a Hopf quotient");
    fq->add_option("--config", config_path)->required();
    fq->add_option("--out", out_dir);

    auto* fin = app.add_subcommand("finitize", "replace a cocycle by a finite one");
    fin->add_option("--config", config_path)->required();
    fin->add_option("--out", out_dir);

    auto* ver = app.add_subcommand("verify", "recheck a serialized Hopf document");
    ver->add_option("--in", in_path)->required();

    auto* dmp = app.add_subcommand("dump", "canonical re-serialization");
    dmp->add_option("--in", in_path)->required();

    CLI11_PARSE(app, argc, argv);

    try {
        if (pipe->parsed()) return run_pipeline(config_path, out_dir, golden_dir, max_dim);
        if (forms->parsed()) return run_forms(config_path, out_dir, golden_dir);
        if (fq->parsed()) return run_field_quotient(config_path, out_dir, golden_dir);
        if (fin->parsed()) return run_finitize(config_path, out_dir, golden_dir);
        if (ver->parsed()) return run_verify(in_path, golden_dir);
        if (dmp->parsed()) return run_dump(in_path);
    } catch (const hf::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 3;
    }
    return 2;
}
