// Command-line surface for the conf2 library: Betti-number tables for
// unordered configuration spaces of closed surfaces, classical braid group
// homology, the mod-2 Poincare series of the mapping class group of the
// punctured projective plane, and the internal verification suites.
//
// Exit codes: 0 success, 1 verification failure, 2 usage error.

#include "conf2/confighomology.hpp"
#include "conf2/mcg.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <string>
#include <vector>

namespace {

using conf2::Count;
using conf2::ManifoldData;
using conf2::PoincareSeries;
using conf2::VerificationReport;
using ordered_json = nlohmann::ordered_json;

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailed = 1;
constexpr int kExitUsage = 2;

struct OutputOptions {
    std::string format = "text";
    std::string output_path;
};

ManifoldData parse_surface_spec(const std::string& spec) {
    if (spec == "rp2") return conf2::projective_plane();
    if (spec == "klein") return conf2::klein_bottle();
    if (spec == "sphere") return conf2::sphere();

    const auto colon = spec.find(':');
    if (colon != std::string::npos) {
        const std::string family = spec.substr(0, colon);
        const std::string digits = spec.substr(colon + 1);
        const bool numeric =
            !digits.empty() && digits.find_first_not_of("0123456789") == std::string::npos &&
            digits.size() <= 9;
        if (numeric) {
            const std::int64_t genus = std::stoll(digits);
            if (family == "nonorientable" && genus >= 1)
                return conf2::nonorientable_surface(genus);
            if (family == "orientable") return conf2::orientable_surface(genus);
        }
    }
    throw std::invalid_argument("unrecognized surface '" + spec +
                                "' (expected rp2 | klein | sphere | nonorientable:g with "
                                "g >= 1 | orientable:g with g >= 0)");
}

std::string join_series(const PoincareSeries& series) {
    std::string out;
    for (std::int64_t q = 0; q <= series.q_max(); ++q) {
        if (q > 0) out += ',';
        out += series.coefficient(q).str();
    }
    out += '\n';
    return out;
}

std::string series_csv(const PoincareSeries& series, const std::string& value_column) {
    std::string out = "q," + value_column + "\n";
    for (std::int64_t q = 0; q <= series.q_max(); ++q)
        out += std::to_string(q) + "," + series.coefficient(q).str() + "\n";
    return out;
}

ordered_json series_json_values(const PoincareSeries& series) {
    ordered_json values = ordered_json::array();
    for (std::int64_t q = 0; q <= series.q_max(); ++q)
        values.push_back(series.coefficient(q).str());
    return values;
}

ordered_json make_document(const std::string& command, const std::string& format,
                           ordered_json parameters, ordered_json result) {
    ordered_json doc;
    doc["schema"] = 1;
    doc["command"] = command;
    doc["format"] = format;
    doc["parameters"] = std::move(parameters);
    doc["result"] = std::move(result);
    return doc;
}

int emit(const OutputOptions& options, const std::string& content) {
    if (options.output_path.empty()) {
        std::cout << content;
        return kExitOk;
    }
    std::ofstream file(options.output_path, std::ios::binary);
    if (!file) {
        std::cerr << "error: cannot open '" << options.output_path << "' for writing\n";
        return kExitUsage;
    }
    file << content;
    return file ? kExitOk : kExitUsage;
}

int emit_series(const std::string& command, const OutputOptions& options,
                ordered_json parameters, const std::string& value_column,
                const std::string& json_key, const PoincareSeries& series) {
    std::string content;
    if (options.format == "text") {
        content = join_series(series);
    } else if (options.format == "csv") {
        content = series_csv(series, value_column);
    } else {
        ordered_json result;
        result[json_key] = series_json_values(series);
        content = make_document(command, options.format, std::move(parameters),
                                std::move(result))
                      .dump(2) +
                  "\n";
    }
    return emit(options, content);
}

// --- verify rendering ---------------------------------------------------

std::string reports_text(const std::vector<VerificationReport>& reports) {
    std::string out;
    bool all_pass = true;
    for (const auto& report : reports) {
        for (const auto& check : report.checks) {
            out += check.pass ? "ok   " : "FAIL ";
            out += report.suite + " " + check.label + " expected=" + check.expected.str() +
                   " actual=" + check.actual.str() + "\n";
        }
        out += "suite " + report.suite + ": " + (report.passed() ? "PASS" : "FAIL") + " (" +
               std::to_string(report.checks.size()) + " checks, " +
               std::to_string(report.failure_count()) + " failures)\n";
        all_pass = all_pass && report.passed();
    }
    out += std::string("verify: ") + (all_pass ? "PASS" : "FAIL") + "\n";
    return out;
}

std::string reports_csv(const std::vector<VerificationReport>& reports) {
    std::string out = "suite,check,expected,actual,status\n";
    for (const auto& report : reports)
        for (const auto& check : report.checks)
            out += report.suite + "," + check.label + "," + check.expected.str() + "," +
                   check.actual.str() + "," + (check.pass ? "ok" : "fail") + "\n";
    return out;
}

ordered_json reports_json(const std::vector<VerificationReport>& reports) {
    bool all_pass = true;
    ordered_json suites = ordered_json::array();
    for (const auto& report : reports) {
        ordered_json checks = ordered_json::array();
        for (const auto& check : report.checks) {
            ordered_json row;
            row["check"] = check.label;
            row["expected"] = check.expected.str();
            row["actual"] = check.actual.str();
            row["pass"] = check.pass;
            checks.push_back(std::move(row));
        }
        ordered_json suite;
        suite["suite"] = report.suite;
        suite["passed"] = report.passed();
        suite["checks"] = std::move(checks);
        suites.push_back(std::move(suite));
        all_pass = all_pass && report.passed();
    }
    ordered_json result;
    result["passed"] = all_pass;
    result["suites"] = std::move(suites);
    return result;
}

int run_verify(const std::string& suite, std::int64_t k_max, std::int64_t q_max,
               const OutputOptions& options) {
    std::vector<VerificationReport> reports;
    if (suite == "all" || suite == "braid-decomposition")
        reports.push_back(conf2::verify_braid_decomposition(std::max<std::int64_t>(k_max, 1)));
    if (suite == "all" || suite == "n-independence") {
        VerificationReport merged{"n-independence", {}};
        for (const auto& manifold : conf2::builtin_surfaces()) {
            for (std::int64_t k = 0; k <= k_max; ++k) {
                auto report = conf2::verify_n_independence(manifold, k, {1, 2, 3});
                for (auto& check : report.checks) merged.checks.push_back(std::move(check));
            }
        }
        reports.push_back(std::move(merged));
    }
    if (suite == "all" || suite == "dihedral")
        reports.push_back(conf2::verify_k2_dihedral(q_max));

    bool all_pass = true;
    for (const auto& report : reports) all_pass = all_pass && report.passed();

    std::string content;
    if (options.format == "text") {
        content = reports_text(reports);
    } else if (options.format == "csv") {
        content = reports_csv(reports);
    } else {
        ordered_json parameters;
        parameters["suite"] = suite;
        parameters["kmax"] = k_max;
        parameters["qmax"] = q_max;
        content = make_document("verify", options.format, std::move(parameters),
                                reports_json(reports))
                      .dump(2) +
                  "\n";
    }
    const int emit_code = emit(options, content);
    if (emit_code != kExitOk) return emit_code;
    return all_pass ? kExitOk : kExitVerifyFailed;
}

void add_output_options(CLI::App* cmd, OutputOptions& options) {
    cmd->add_option("--format", options.format, "Output format")
        ->check(CLI::IsMember({"text", "csv", "json"}))
        ->capture_default_str();
    cmd->add_option("--output", options.output_path,
                    "Write the document to FILE instead of stdout");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "Mod-2 homology of unordered configuration spaces of closed surfaces, of the "
        "classical braid groups, and of the mapping class group of the punctured "
        "projective plane. All arithmetic is exact."};
    app.require_subcommand(1);

    // betti
    std::string surface_spec;
    std::int64_t betti_k = 0;
    OutputOptions betti_out;
    auto* betti = app.add_subcommand(
        "betti", "Betti numbers of the space of k unordered points of a surface");
    betti->add_option("--surface", surface_spec,
                      "rp2 | klein | sphere | nonorientable:g | orientable:g")
        ->required();
    betti->add_option("--k", betti_k, "Number of points")
        ->required()
        ->check(CLI::NonNegativeNumber);
    add_output_options(betti, betti_out);

    // braid
    std::int64_t braid_k = 0;
    OutputOptions braid_out;
    auto* braid =
        app.add_subcommand("braid", "Mod-2 Betti numbers of the braid group on k strands");
    braid->add_option("--k", braid_k, "Number of strands")
        ->required()
        ->check(CLI::NonNegativeNumber);
    add_output_options(braid, braid_out);

    // mcg
    std::int64_t mcg_k = 2;
    std::int64_t mcg_q_max = 20;
    OutputOptions mcg_out;
    auto* mcg = app.add_subcommand("mcg",
                                   "Mod-2 Poincare series of the mapping class group of the "
                                   "projective plane with k marked points (k >= 2)");
    mcg->add_option("--k", mcg_k, "Number of marked points (>= 2)")
        ->required()
        ->check(CLI::NonNegativeNumber);
    mcg->add_option("--qmax", mcg_q_max, "Truncation degree")
        ->check(CLI::NonNegativeNumber)
        ->capture_default_str();
    add_output_options(mcg, mcg_out);

    // verify
    std::string suite = "all";
    std::int64_t verify_k_max = 12;
    std::int64_t verify_q_max = 30;
    OutputOptions verify_out;
    auto* verify = app.add_subcommand("verify", "Run the internal cross-validation suites");
    verify->add_option("--suite", suite, "Which suite to run")
        ->check(CLI::IsMember({"all", "braid-decomposition", "n-independence", "dihedral"}))
        ->capture_default_str();
    verify->add_option("--kmax", verify_k_max, "Largest number of points checked")
        ->check(CLI::NonNegativeNumber)
        ->capture_default_str();
    verify->add_option("--qmax", verify_q_max, "Truncation degree for the dihedral suite")
        ->check(CLI::NonNegativeNumber)
        ->capture_default_str();
    add_output_options(verify, verify_out);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (betti->parsed()) {
            const auto manifold = parse_surface_spec(surface_spec);
            ordered_json parameters;
            parameters["surface"] = surface_spec;
            parameters["k"] = betti_k;
            return emit_series("betti", betti_out, std::move(parameters), "rank", "ranks",
                               conf2::config_betti(manifold, betti_k));
        }
        if (braid->parsed()) {
            ordered_json parameters;
            parameters["k"] = braid_k;
            return emit_series("braid", braid_out, std::move(parameters), "rank", "ranks",
                               conf2::braid_betti(braid_k));
        }
        if (mcg->parsed()) {
            ordered_json parameters;
            parameters["k"] = mcg_k;
            parameters["qmax"] = mcg_q_max;
            return emit_series("mcg", mcg_out, std::move(parameters), "coefficient",
                               "coefficients", conf2::mcg_rp2_series({mcg_k, mcg_q_max}));
        }
        return run_verify(suite, verify_k_max, verify_q_max, verify_out);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
}
