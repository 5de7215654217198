// Command-line front end: analyze numerical semigroups, build the catalog of
// non-principal graded ideals with Gorenstein quotient, and cross-check its
// size against a brute-force enumeration.

#include <cstdlib>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "sgr/catalog.hpp"
#include "sgr/errors.hpp"
#include "sgr/gluing.hpp"
#include "sgr/ideal.hpp"
#include "sgr/oracle.hpp"
#include "sgr/semigroup.hpp"

using json = nlohmann::ordered_json;
using sgr::Int;

namespace {

constexpr const char* kSchemaVersion = "1";
constexpr int kExitOk = 0;
constexpr int kExitFail = 1;
constexpr int kExitBadInput = 2;

std::vector<Int> parse_generator_tokens(const std::vector<std::string>& tokens) {
    std::vector<Int> out;
    for (const auto& token : tokens) {
        std::stringstream ss(token);
        std::string piece;
        while (std::getline(ss, piece, ',')) {
            if (piece.empty()) continue;
            std::size_t used = 0;
            Int value = 0;
            try {
                value = std::stoll(piece, &used);
            } catch (const std::exception&) {
                throw sgr::Error("cannot parse generator '" + piece + "'");
            }
            if (used != piece.size())
                throw sgr::Error("cannot parse generator '" + piece + "'");
            out.push_back(value);
        }
    }
    if (out.empty()) throw sgr::Error("no generators given");
    return out;
}

json to_json(const std::vector<Int>& values) { return json(values); }

std::string join(const std::vector<Int>& values, const std::string& sep = " ") {
    std::string out;
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (i) out += sep;
        out += std::to_string(values[i]);
    }
    return out;
}

json document(const std::string& command, json input, json result) {
    json doc;
    doc["schema_version"] = kSchemaVersion;
    doc["command"] = command;
    doc["input"] = std::move(input);
    doc["result"] = std::move(result);
    return doc;
}

void emit(const json& doc) { std::cout << doc.dump(2) << "\n"; }

json semigroup_summary(const sgr::NumericalSemigroup& h) {
    json obj;
    obj["minimal_generators"] = to_json(h.minimal_generators());
    obj["frobenius"] = h.frobenius();
    obj["conductor"] = h.conductor();
    obj["gaps"] = to_json(h.gaps());
    obj["symmetric"] = h.symmetric();
    obj["pseudo_frobenius"] = to_json(h.pseudo_frobenius());
    obj["type"] = h.pseudo_frobenius().size();
    return obj;
}

json catalog_entry_json(const sgr::CatalogEntry& e) {
    json obj;
    obj["gap"] = e.gap;
    obj["side"] = e.side == sgr::Side::below ? "below" : "above";
    obj["generators"] = to_json(e.ideal.min_generators());
    obj["a_quotient"] = e.a_quotient;
    obj["mu"] = e.mu;
    return obj;
}

json catalog_json(const sgr::NumericalSemigroup& h,
                  const std::vector<sgr::CatalogEntry>& entries) {
    json obj;
    obj["a_invariant"] = h.frobenius();
    obj["conductor"] = h.conductor();
    obj["count"] = entries.size();
    json rows = json::array();
    for (const auto& e : entries) rows.push_back(catalog_entry_json(e));
    obj["entries"] = std::move(rows);
    return obj;
}

void print_catalog_table(const sgr::NumericalSemigroup& h,
                         const std::vector<sgr::CatalogEntry>& entries) {
    std::cout << "a-invariant: " << h.frobenius() << "\n";
    std::cout << "conductor: " << h.conductor() << "\n";
    std::cout << "count: " << entries.size() << "\n";
    std::cout << "m side generators a(R/I) mu\n";
    for (const auto& e : entries) {
        std::cout << e.gap << " " << (e.side == sgr::Side::below ? "below" : "above")
                  << " [" << join(e.ideal.min_generators()) << "] " << e.a_quotient
                  << " " << e.mu << "\n";
    }
}

Int max_poset_guard() {
    if (const char* env = std::getenv("SGR_MAX_POSET")) {
        try {
            return std::stoll(env);
        } catch (const std::exception&) {
            throw sgr::Error("SGR_MAX_POSET is not an integer");
        }
    }
    return 40;
}

struct Options {
    std::string format = "table";
    std::vector<std::string> gens_raw;
    Int slack = 0;
    bool force = false;
    Int colon_m = 0;
    std::vector<std::string> h1_raw, h2_raw;
    Int d1 = 0, d2 = 0;
    std::vector<Int> abcd;
};

int run_analyze(const Options& opt) {
    auto h = sgr::make_semigroup(parse_generator_tokens(opt.gens_raw));
    if (opt.format == "json") {
        json input;
        input["generators"] = to_json(h.generators());
        input["format"] = opt.format;
        emit(document("analyze", std::move(input), semigroup_summary(h)));
    } else {
        std::cout << "minimal generators: " << join(h.minimal_generators()) << "\n";
        std::cout << "frobenius: " << h.frobenius() << "\n";
        std::cout << "conductor: " << h.conductor() << "\n";
        std::cout << "gaps: " << join(h.gaps()) << "\n";
        std::cout << "symmetric: " << (h.symmetric() ? "true" : "false") << "\n";
        std::cout << "pseudo-frobenius: " << join(h.pseudo_frobenius()) << "\n";
        std::cout << "type: " << h.pseudo_frobenius().size() << "\n";
    }
    return kExitOk;
}

int run_catalog(const Options& opt, const std::string& command) {
    auto h = sgr::make_semigroup(parse_generator_tokens(opt.gens_raw));
    auto entries = sgr::build_catalog(h);
    const bool with_note = command == "value-semigroup";
    const char* note =
        "for a one-dimensional local domain whose value semigroup this is, the "
        "associated graded ring of its canonical filtration has the same ideal "
        "catalog; its size equals the conductor";
    if (opt.format == "json") {
        json input;
        input["generators"] = to_json(h.generators());
        input["format"] = opt.format;
        json result = catalog_json(h, entries);
        if (with_note) result["note"] = note;
        emit(document(command, std::move(input), std::move(result)));
    } else {
        if (with_note) std::cout << "note: " << note << "\n";
        print_catalog_table(h, entries);
    }
    return kExitOk;
}

int run_verify(const Options& opt) {
    auto h = sgr::make_semigroup(parse_generator_tokens(opt.gens_raw));
    if (opt.slack < 0) throw sgr::Error("slack must be non-negative");
    if (!h.symmetric())
        throw sgr::NotSymmetric("semigroup is not symmetric");

    const Int bound = std::max<Int>(0, 2 * h.frobenius() + opt.slack);
    const Int poset = static_cast<Int>(sgr::poset_size(h, bound));
    const Int guard = max_poset_guard();
    if (poset > guard && !opt.force) {
        std::cerr << "refusing to enumerate a poset of " << poset
                  << " elements (limit " << guard
                  << "); re-run with --force or raise SGR_MAX_POSET\n";
        return kExitBadInput;
    }

    auto report = sgr::verify_theorem(h, opt.slack);
    if (opt.format == "json") {
        json input;
        input["generators"] = to_json(h.generators());
        input["slack"] = opt.slack;
        input["force"] = opt.force;
        input["format"] = opt.format;
        json result;
        result["bound"] = report.bound;
        result["oracle_count"] = report.oracle_count;
        result["formula_count"] = report.formula_count;
        result["conductor"] = report.conductor;
        result["pass"] = report.pass;
        json only_oracle = json::array();
        for (const auto& i : report.only_in_oracle)
            only_oracle.push_back(to_json(i.min_generators()));
        json only_formula = json::array();
        for (const auto& i : report.only_in_formula)
            only_formula.push_back(to_json(i.min_generators()));
        result["only_in_oracle"] = std::move(only_oracle);
        result["only_in_formula"] = std::move(only_formula);
        emit(document("verify", std::move(input), std::move(result)));
    } else {
        std::cout << "bound: " << report.bound << "\n";
        std::cout << "oracle ideals: " << report.oracle_count << "\n";
        std::cout << "catalog ideals: " << report.formula_count << "\n";
        std::cout << "conductor: " << report.conductor << "\n";
        for (const auto& i : report.only_in_oracle)
            std::cout << "only in oracle: [" << join(i.min_generators()) << "]\n";
        for (const auto& i : report.only_in_formula)
            std::cout << "only in catalog: [" << join(i.min_generators()) << "]\n";
        std::cout << (report.pass ? "PASS" : "FAIL") << "\n";
    }
    return report.pass ? kExitOk : kExitFail;
}

int run_colon(const Options& opt) {
    auto h = sgr::make_semigroup(parse_generator_tokens(opt.gens_raw));
    auto ideal = sgr::colon_into_ring(h, opt.colon_m);
    json result;
    result["m"] = opt.colon_m;
    result["generators"] = to_json(ideal.min_generators());
    bool unit = ideal.min_generators() == std::vector<Int>{0};
    result["unit_ideal"] = unit;
    if (!unit) {
        auto profile = sgr::quotient_profile(ideal);
        result["a_quotient"] = profile.a_invariant;
        result["socle_degrees"] = to_json(profile.socle_degrees);
        result["cm_type"] = profile.cm_type;
        result["gorenstein"] = profile.gorenstein;
        result["mu"] = ideal.mu();
    }
    if (opt.format == "json") {
        json input;
        input["generators"] = to_json(h.generators());
        input["m"] = opt.colon_m;
        input["format"] = opt.format;
        emit(document("colon", std::move(input), std::move(result)));
    } else {
        std::cout << "m: " << opt.colon_m << "\n";
        std::cout << "generators: " << join(ideal.min_generators()) << "\n";
        if (unit) {
            std::cout << "unit ideal: true\n";
        } else {
            auto profile = sgr::quotient_profile(ideal);
            std::cout << "a(R/I): " << profile.a_invariant << "\n";
            std::cout << "socle degrees: " << join(profile.socle_degrees) << "\n";
            std::cout << "cm type: " << profile.cm_type << "\n";
            std::cout << "gorenstein: " << (profile.gorenstein ? "true" : "false")
                      << "\n";
            std::cout << "mu: " << ideal.mu() << "\n";
        }
    }
    return kExitOk;
}

int run_iso(const Options& opt) {
    auto h = sgr::make_semigroup(parse_generator_tokens(opt.gens_raw));
    auto catalog = sgr::build_catalog(h);
    auto classes = sgr::iso_classes(catalog);
    if (opt.format == "json") {
        json input;
        input["generators"] = to_json(h.generators());
        input["format"] = opt.format;
        json result;
        result["conductor"] = h.conductor();
        result["class_count"] = classes.size();
        json rows = json::array();
        for (const auto& cls : classes) {
            json members = json::array();
            for (const auto& e : cls) members.push_back(catalog_entry_json(e));
            rows.push_back(std::move(members));
        }
        result["classes"] = std::move(rows);
        emit(document("iso", std::move(input), std::move(result)));
    } else {
        std::cout << "conductor: " << h.conductor() << "\n";
        std::cout << "classes: " << classes.size() << "\n";
        std::size_t index = 1;
        for (const auto& cls : classes) {
            std::cout << "class " << index++ << ":";
            for (const auto& e : cls) {
                std::cout << " (m=" << e.gap << ", "
                          << (e.side == sgr::Side::below ? "below" : "above")
                          << ", [" << join(e.ideal.min_generators()) << "])";
            }
            std::cout << "\n";
        }
    }
    return kExitOk;
}

int run_glue(const Options& opt) {
    auto h1 = sgr::make_semigroup(parse_generator_tokens(opt.h1_raw));
    auto h2 = sgr::make_semigroup(parse_generator_tokens(opt.h2_raw));
    auto spec = sgr::glue(h1, h2, opt.d1, opt.d2);
    if (opt.format == "json") {
        json input;
        input["h1"] = to_json(h1.generators());
        input["h2"] = to_json(h2.generators());
        input["d1"] = opt.d1;
        input["d2"] = opt.d2;
        input["format"] = opt.format;
        json result;
        result["h1_minimal_generators"] = to_json(h1.minimal_generators());
        result["h2_minimal_generators"] = to_json(h2.minimal_generators());
        result["d1"] = opt.d1;
        result["d2"] = opt.d2;
        result["glued_minimal_generators"] = to_json(spec.glued.minimal_generators());
        result["frobenius"] = spec.glued.frobenius();
        result["conductor"] = spec.glued.conductor();
        result["symmetric"] = spec.glued.symmetric();
        emit(document("glue", std::move(input), std::move(result)));
    } else {
        std::cout << "glued: " << join(spec.glued.minimal_generators()) << "\n";
        std::cout << "frobenius: " << spec.glued.frobenius() << "\n";
        std::cout << "conductor: " << spec.glued.conductor() << "\n";
        std::cout << "symmetric: " << (spec.glued.symmetric() ? "true" : "false")
                  << "\n";
    }
    return kExitOk;
}

int run_threegen(const Options& opt) {
    auto spec = sgr::three_gen_symmetric(opt.abcd[0], opt.abcd[1], opt.abcd[2],
                                         opt.abcd[3]);
    auto actual = sgr::build_catalog(spec.glued).size();
    bool agree = sgr::predicted_vs_actual(spec);
    if (opt.format == "json") {
        json input;
        input["a"] = spec.a;
        input["b"] = spec.b;
        input["c"] = spec.c;
        input["d"] = spec.d;
        input["format"] = opt.format;
        json result;
        result["glued_minimal_generators"] = to_json(spec.glued.minimal_generators());
        result["presentation"] = sgr::presentation_string(spec);
        result["presentation_m"] = spec.presentation_m;
        result["presentation_n"] = spec.presentation_n;
        result["a_invariant"] = spec.a_invariant;
        result["predicted_count"] = spec.predicted_count;
        result["actual_count"] = actual;
        result["agree"] = agree;
        emit(document("threegen", std::move(input), std::move(result)));
    } else {
        std::cout << "glued: " << join(spec.glued.minimal_generators()) << "\n";
        std::cout << "presentation: " << sgr::presentation_string(spec) << "\n";
        std::cout << "a-invariant: " << spec.a_invariant << "\n";
        std::cout << "predicted: " << spec.predicted_count << "\n";
        std::cout << "actual: " << actual << "\n";
        std::cout << "agree: " << (agree ? "true" : "false") << "\n";
    }
    return agree ? kExitOk : kExitFail;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"graded ideal catalogs over numerical semigroup rings"};
    app.require_subcommand(1);

    Options opt;
    app.add_option("--format", opt.format, "output format")
        ->check(CLI::IsMember({"table", "json"}))
        ->capture_default_str();

    auto add_gens = [&](CLI::App* cmd) {
        cmd->add_option("generators", opt.gens_raw,
                        "semigroup generators (comma or space separated)")
            ->required();
    };

    auto* analyze = app.add_subcommand("analyze", "summarize a numerical semigroup");
    add_gens(analyze);

    auto* catalog = app.add_subcommand(
        "catalog", "list all non-principal graded ideals with Gorenstein quotient");
    add_gens(catalog);

    auto* verify = app.add_subcommand(
        "verify", "cross-check the catalog against brute-force enumeration");
    add_gens(verify);
    verify->add_option("--slack", opt.slack,
                       "extra headroom added to the enumeration bound");
    verify->add_flag("--force", opt.force, "override the poset size guard");

    auto* colon = app.add_subcommand("colon",
                                     "compute the colon ideal R : t^m");
    add_gens(colon);
    colon->add_option("-m,--gap", opt.colon_m, "degree m of t^m")->required();

    auto* iso = app.add_subcommand(
        "iso", "group catalog entries into shift-equivalence classes");
    add_gens(iso);

    auto* glue = app.add_subcommand("glue",
                                    "glue two numerical semigroups <d1*H1, d2*H2>");
    glue->add_option("--h1", opt.h1_raw, "generators of the first factor")
        ->required();
    glue->add_option("--h2", opt.h2_raw, "generators of the second factor")
        ->required();
    glue->add_option("--d1", opt.d1, "scale applied to H1 (a member of H2)")
        ->required();
    glue->add_option("--d2", opt.d2, "scale applied to H2 (a member of H1)")
        ->required();

    auto* threegen = app.add_subcommand(
        "threegen", "three-generator symmetric semigroup <d*a, d*b, c>");
    threegen->add_option("abcd", opt.abcd, "the four parameters a b c d")
        ->expected(4)
        ->required();

    auto* value = app.add_subcommand(
        "value-semigroup", "catalog for the associated graded ring of a value semigroup");
    add_gens(value);

    for (CLI::App* sub : {analyze, catalog, verify, colon, iso, glue, threegen, value})
        sub->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);
        app.exit(e);
        return kExitBadInput;
    }

    try {
        if (analyze->parsed()) return run_analyze(opt);
        if (catalog->parsed()) return run_catalog(opt, "catalog");
        if (verify->parsed()) return run_verify(opt);
        if (colon->parsed()) return run_colon(opt);
        if (iso->parsed()) return run_iso(opt);
        if (glue->parsed()) return run_glue(opt);
        if (threegen->parsed()) return run_threegen(opt);
        if (value->parsed()) return run_catalog(opt, "value-semigroup");
    } catch (const sgr::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitBadInput;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kExitFail;
    }
    return kExitBadInput;
}
