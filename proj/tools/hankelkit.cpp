// hankelkit: classify Hankel tensors, build the named families, and run the
// reproduction suite.
//
// Exit codes: 0 success, 1 suite failure, 2 input error, 3 internal inconsistency.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "hankelkit/analysis.hpp"
#include "hankelkit/suite.hpp"

namespace {

using nlohmann::json;
using namespace hankelkit;

constexpr int kExitOk = 0;
constexpr int kExitSuiteFailure = 1;
constexpr int kExitInput = 2;
constexpr int kExitInconsistent = 3;

struct OutputFlags {
    std::string out;
    bool quiet = false;
};

void add_analysis_flags(CLI::App* cmd, AnalyzeOptions& opts, OutputFlags& out) {
    cmd->add_flag("--refute", opts.refute, "Run the seeded sphere refuter as well");
    cmd->add_option("--starts", opts.starts, "Refuter random starts")->check(CLI::PositiveNumber);
    cmd->add_option("--iterations", opts.iterations, "Refuter iterations per start")->check(CLI::PositiveNumber);
    cmd->add_option("--seed", opts.seed, "Seed for all randomized search");
    cmd->add_option("--out", out.out, "Write the report to this file instead of stdout");
    cmd->add_flag("--quiet", out.quiet, "Print only the verdict line");
}

void emit(const json& report, const OutputFlags& flags) {
    const std::string text = report.dump(2) + "\n";
    if (!flags.out.empty()) {
        std::ofstream f(flags.out, std::ios::binary);
        if (!f) throw InputError("cannot write '" + flags.out + "'");
        f << text;
    }
    if (flags.quiet) {
        std::cout << verdict_line(report) << "\n";
    } else if (flags.out.empty()) {
        std::cout << text;
    }
}

json read_document(const std::string& path) {
    std::ifstream f(path, std::ios::binary);
    if (!f) throw InputError("cannot read '" + path + "'");
    std::stringstream ss;
    ss << f.rdbuf();
    try {
        return json::parse(ss.str());
    } catch (const json::parse_error& e) {
        throw InputError(std::string("malformed input: ") + e.what());
    }
}

int run_verify_suite(const SuiteOptions& options) {
    const auto report = run_suite(options);
    std::printf("%-4s %-9s %-55s %s\n", "id", "status", "criterion", "seconds");
    for (const auto& c : report.criteria) {
        std::printf("%-4d %-9s %-55s %.2f\n", c.id, to_string(c.status).c_str(), c.title.c_str(), c.seconds);
        for (const auto& m : c.measurements) {
            std::printf("       %-9s %s", to_string(m.status).c_str(), m.what.c_str());
            if (m.tolerance) std::printf("  measured %.6g, tolerance %.3g", m.error, *m.tolerance);
            if (!m.detail.empty()) std::printf("  [%s]", m.detail.c_str());
            std::printf("\n");
        }
    }
    const auto failed = report.failed();
    if (failed.empty()) {
        std::printf("all %zu criteria passed\n", report.criteria.size());
        return kExitOk;
    }
    std::printf("FAILED criteria:");
    for (int id : failed) std::printf(" %d", id);
    std::printf("\n");
    return kExitSuiteFailure;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Hankel tensor classification toolkit"};
    app.require_subcommand(1);
    // "--h" names the generating function, so help is long-form only.
    app.set_help_flag("--help", "Print this help message and exit");
    app.set_version_flag("--version", kToolVersion);

    AnalyzeOptions opts;
    OutputFlags out;

    auto* analyze = app.add_subcommand("analyze", "Classify the tensor described by an input file");
    std::string input_path;
    analyze->add_option("--input", input_path, "JSON file: {\"m\",\"n\",\"v\"} or {\"family\",\"params\"}")->required();
    add_analysis_flags(analyze, opts, out);

    auto* family = app.add_subcommand("family", "Build and classify a named family instance");
    std::string family_name;
    family->add_option("name", family_name, "truncated | quasi-truncated | noncd | moment | vandermonde")->required();
    std::optional<int> m, n, k, nodes;
    std::optional<double> v0, v1, vmid, vend1, vend;
    std::string h, node_list, weight_list;
    family->add_option("--m", m, "Order");
    family->add_option("--n", n, "Dimension");
    family->add_option("--k", k, "Half order of the noncd family");
    family->add_option("--v0", v0, "First entry v_0");
    family->add_option("--v1", v1, "Second entry v_1 (quasi-truncated)");
    family->add_option("--vmid", vmid, "Middle entry v_{(n-1)m/2}");
    family->add_option("--vend1", vend1, "Next-to-last entry (quasi-truncated)");
    family->add_option("--vend", vend, "Last entry v_{(n-1)m}");
    family->add_option("--h", h, "Generating function: uniform01 | gaussian | step:a,b,height");
    family->add_option("--quad-nodes", nodes, "Gauss-Legendre node count for the moment family");
    family->add_option("--nodes", node_list, "Comma-separated Vandermonde nodes");
    family->add_option("--weights", weight_list, "Comma-separated Vandermonde weights");
    add_analysis_flags(family, opts, out);

    auto* suite = app.add_subcommand("verify-suite", "Run every acceptance criterion");
    SuiteOptions suite_opts;
    suite->add_option("--tolerance-scale", suite_opts.tolerance_scale,
                      "Multiply every tolerance; results between the scaled and nominal tolerance are 'boundary'")
        ->check(CLI::PositiveNumber);
    suite->add_option("--criterion", suite_opts.only, "Run only these criteria (repeatable)")->check(CLI::Range(1, 10));
    std::optional<int> fault;
    suite->add_option("--inject-fault", fault, "Test hook: corrupt a reference constant of one criterion")
        ->group("");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitInput;
    }

    try {
        if (*analyze) {
            emit(analyze_document(read_document(input_path), opts), out);
        } else if (*family) {
            json params = json::object();
            auto put = [&](const char* key, const auto& value) {
                if (value) params[key] = *value;
            };
            put("m", m);
            put("n", n);
            put("k", k);
            put("v0", v0);
            put("v1", v1);
            put("vmid", vmid);
            put("vend1", vend1);
            put("vend", vend);
            put("quad_nodes", nodes);
            if (!h.empty()) params["h"] = h;
            if (!node_list.empty()) params["nodes"] = node_list;
            if (!weight_list.empty()) params["weights"] = weight_list;
            emit(analyze_family(family_name, params, opts), out);
        } else if (*suite) {
            suite_opts.inject_fault = fault;
            return run_verify_suite(suite_opts);
        }
    } catch (const InputError& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kExitInput;
    } catch (const InconsistencyError& e) {
        std::cerr << "internal inconsistency: " << e.what() << "\n";
        return kExitInconsistent;
    } catch (const std::exception& e) {
        std::cerr << "internal inconsistency: " << e.what() << "\n";
        return kExitInconsistent;
    }
    return kExitOk;
}
