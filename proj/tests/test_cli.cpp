#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sys/wait.h>

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

#include "hankelkit/analysis.hpp"
#include "hankelkit/classes.hpp"

using nlohmann::json;
using namespace hankelkit;

namespace {

namespace fs = std::filesystem;

struct RunResult {
    int code = -1;
    std::string out;
};

// Runs the command-line tool with the given arguments, capturing stdout.
RunResult run_cli(const std::string& args) {
    const std::string cmd = std::string(HANKELKIT_CLI_PATH) + " " + args + " 2>/dev/null";
    RunResult r;
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    char buf[4096];
    while (std::fgets(buf, sizeof buf, pipe)) r.out += buf;
    const int status = pclose(pipe);
    r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

fs::path scratch(const std::string& name) {
    const fs::path dir = fs::temp_directory_path() / "hankelkit-cli-tests";
    fs::create_directories(dir);
    return dir / name;
}

fs::path write_file(const std::string& name, const std::string& text) {
    const auto p = scratch(name);
    std::ofstream(p) << text;
    return p;
}

std::string read_file(const fs::path& p) {
    std::ifstream f(p);
    std::stringstream ss;
    ss << f.rdbuf();
    return ss.str();
}

json sextic_doc(double v0, double v6, double v12) {
    std::vector<double> v(13, 0.0);
    v[0] = v0;
    v[6] = v6;
    v[12] = v12;
    return {{"m", 6}, {"n", 3}, {"v", v}};
}

// Every "no" must be backed by a witness that refutes it, and every form
// witness's value must match an independent evaluation.
void check_report_witnesses(const json& report) {
    const auto& verdicts = report["verdicts"];
    const auto& witnesses = report["witnesses"];
    auto has = [&](const std::string& refutes) {
        for (const auto& w : witnesses) {
            if (w["refutes"] == refutes) return true;
        }
        return false;
    };
    for (const char* field : {"psd", "sos", "strong"}) {
        if (verdicts[field] != "no") continue;
        const std::string want = std::string(field) == "sos" ? "psd" : field;
        REQUIRE(has(want));
    }
    if (verdicts["pd"] == "no") REQUIRE((has("pd") || has("psd")));
    const auto& t = report["tensor"];
    const HankelTensor tensor(GeneratingVector(t["m"], t["n"], t["v"].get<std::vector<double>>()));
    for (const auto& w : witnesses) {
        if (w["kind"] != "form") continue;
        const auto x = w["point"].get<std::vector<double>>();
        const double f = eval(tensor, x);
        REQUIRE(f == doctest::Approx(w["value"].get<double>()).epsilon(1e-9).scale(1.0));
        if (w["refutes"] == "psd") REQUIRE(f < 0.0);
    }
}

}  // namespace

TEST_CASE("generating vector parsing") {
    const auto g = parse_generating_vector({{"m", 2}, {"n", 2}, {"v", {1.0, 0.5, 0.25}}});
    CHECK(g.order() == 2);
    CHECK(g.values() == std::vector<double>{1.0, 0.5, 0.25});
    CHECK_THROWS_AS(parse_generating_vector(json::array()), InputError);
    CHECK_THROWS_AS(parse_generating_vector({{"m", 2}, {"n", 2}}), InputError);
    CHECK_THROWS_AS(parse_generating_vector({{"m", 2}, {"n", 2}, {"v", {1.0, 0.5}}}), InputError);
    CHECK_THROWS_AS(parse_generating_vector({{"m", 2.5}, {"n", 2}, {"v", {1.0, 0.5, 0.25}}}), InputError);
    CHECK_THROWS_AS(parse_generating_vector({{"m", 2}, {"n", 2}, {"v", {1.0, "x", 0.25}}}), InputError);
    CHECK_THROWS_AS(parse_generating_vector({{"m", 0}, {"n", 2}, {"v", {1.0}}}), InputError);
}

TEST_CASE("reports carry the schema, seed and verdicts") {
    const auto r = analyze_document(sextic_doc(1.0, 1.0, 1.0), {});
    CHECK(r["schema"] == kReportSchema);
    CHECK(r["seed"] == 42);
    CHECK(r["family"] == "truncated");
    CHECK(r["verdicts"]["psd"] == "no");
    CHECK(r["verdicts"]["sos"] == "no");
    CHECK(r["verdicts"]["strong"] == "no");
    CHECK(r["verdicts"]["pd"] == "no");
    check_report_witnesses(r);
    CHECK(verdict_line(r) == "psd=no sos=no strong=no pd=no");
    CHECK(r.contains("timings"));
    CHECK_FALSE(without_timings(r).contains("timings"));
}

TEST_CASE("verdicts for documented examples") {
    const auto zero = analyze_document(sextic_doc(0.0, 0.0, 0.0), {});
    CHECK(zero["verdicts"]["psd"] == "yes");
    CHECK(zero["verdicts"]["sos"] == "yes");
    CHECK(zero["verdicts"]["strong"] == "yes");
    CHECK(zero["verdicts"]["pd"] == "no");
    check_report_witnesses(zero);

    const auto hilbert = analyze_document({{"m", 4}, {"n", 3}, {"v", {1.0, 1.0 / 2, 1.0 / 3, 1.0 / 4, 1.0 / 5, 1.0 / 6, 1.0 / 7, 1.0 / 8, 1.0 / 9}}}, {});
    CHECK(hilbert["verdicts"]["strong"] == "yes");
    CHECK(hilbert["verdicts"]["psd"] == "yes");
    CHECK(hilbert["verdicts"]["sos"] == "yes");
    CHECK(hilbert["verdicts"]["pd"] == "yes");
    const HankelTensor h(GeneratingVector(4, 3, hilbert["tensor"]["v"].get<std::vector<double>>()));
    double least = INFINITY;
    for (int i = 0; i < 2000; ++i) {
        const double a = 2.0 * M_PI * i / 2000.0;
        for (double z : {-0.9, -0.3, 0.3, 0.9}) {
            const double r = std::sqrt(1.0 - z * z);
            const double x[] = {r * std::cos(a), r * std::sin(a), z};
            least = std::min(least, eval(h, x));
        }
    }
    CHECK(least > 0.0);

    const double c = sextic_threshold();
    const auto above = analyze_family("truncated", {{"m", 6}, {"n", 3}, {"v0", 1146.0}, {"vmid", 1.0}, {"vend", 1146.0}}, {});
    CHECK(above["verdicts"]["psd"] == "yes");
    CHECK(above["verdicts"]["pd"] == "yes");
    CHECK_FALSE(above["certificates"].empty());
    const auto below = analyze_family("truncated", {{"m", 6}, {"n", 3}, {"v0", 1145.0}, {"vmid", 1.0}, {"vend", 1145.0}}, {});
    CHECK(below["verdicts"]["psd"] == "no");
    check_report_witnesses(below);
    const auto at = analyze_document(sextic_doc(c, 1.0, c), {});
    CHECK(at["verdicts"]["boundary"] == true);
    CHECK(at["verdicts"]["psd"] == "yes");

    const auto binary = analyze_document({{"m", 4}, {"n", 2}, {"v", {1.0, 0.0, -0.5, 0.0, 1.0}}}, {});
    CHECK(binary["verdicts"]["psd"] == "no");
    check_report_witnesses(binary);

    const auto odd = analyze_document({{"m", 3}, {"n", 2}, {"v", {1.0, 0.5, 1.0 / 3, 0.25}}}, {});
    CHECK(odd["verdicts"]["psd"] == "unknown");
    CHECK(odd["verdicts"]["strong"] == "yes");
}

TEST_CASE("family reports") {
    const auto k3 = analyze_family("noncd", {{"k", 3}}, {});
    CHECK(k3["verdicts"]["psd"] == "yes");
    CHECK(k3["verdicts"]["strong"] == "no");
    CHECK(k3["family_records"]["identity_holds"] == true);
    CHECK(k3["family_records"]["obstruction_coefficient"] == "-1");
    check_report_witnesses(k3);

    const auto k4 = analyze_family("noncd", {{"k", 4}}, {});
    CHECK(k4["verdicts"]["psd"] == "no");
    CHECK(k4["family_records"]["negative_at_ones"] == true);
    check_report_witnesses(k4);

    const auto mom = analyze_family("moment", {{"h", "uniform01"}, {"m", 2}, {"n", 2}}, {});
    const auto v = mom["tensor"]["v"].get<std::vector<double>>();
    REQUIRE(v.size() == 3);
    CHECK(v[0] == doctest::Approx(1.0));
    CHECK(v[1] == doctest::Approx(0.5));
    CHECK(v[2] == doctest::Approx(1.0 / 3.0));
    CHECK(mom["verdicts"]["strong"] == "yes");

    const auto quasi = analyze_family(
        "quasi-truncated", {{"m", 6}, {"n", 3}, {"v0", 2000.0}, {"v1", 1e-6}, {"vmid", 1.0}, {"vend1", 1e-6}, {"vend", 2000.0}}, {});
    CHECK(quasi["verdicts"]["sos"] == "yes");
    const auto quasi_bad = analyze_family(
        "quasi-truncated", {{"m", 6}, {"n", 3}, {"v0", 5.0}, {"v1", 1.0}, {"vmid", 1.0}, {"vend1", 1.0}, {"vend", 5.0}}, {});
    CHECK(quasi_bad["verdicts"]["psd"] == "no");
    check_report_witnesses(quasi_bad);

    const auto vdm = analyze_family("vandermonde", {{"m", 4}, {"n", 2}, {"nodes", "0.5,-0.25"}, {"weights", "1,2"}}, {});
    CHECK(vdm["verdicts"]["psd"] == "yes");
    CHECK(vdm["family_records"]["complete"] == true);

    CHECK_THROWS_AS(analyze_family("nonsense", json::object(), {}), InputError);
    CHECK_THROWS_AS(analyze_family("noncd", {{"k", 1}}, {}), InputError);
    CHECK_THROWS_AS(analyze_family("truncated", {{"m", 6}, {"n", 2}, {"v0", 1.0}, {"vmid", 1.0}, {"vend", 1.0}}, {}), InputError);
}

TEST_CASE("reports are deterministic and survive a JSON round trip") {
    AnalyzeOptions opts;
    opts.refute = true;
    const auto a = analyze_document(sextic_doc(1.0, 1.0, 2.0), opts);
    const auto b = analyze_document(sextic_doc(1.0, 1.0, 2.0), opts);
    CHECK(without_timings(a).dump() == without_timings(b).dump());
    CHECK(json::parse(a.dump()) == a);
    CHECK(a["refutation"]["found"] == true);
    check_report_witnesses(a);
}

TEST_CASE("command-line exit codes and output") {
    const auto ok = write_file("ok.json", sextic_doc(2000.0, 1.0, 2000.0).dump());
    const auto r = run_cli("analyze --input " + ok.string());
    CHECK(r.code == 0);
    const auto report = json::parse(r.out);
    CHECK(report["verdicts"]["pd"] == "yes");

    const auto quiet = run_cli("analyze --quiet --input " + ok.string());
    CHECK(quiet.code == 0);
    CHECK(quiet.out == "psd=yes sos=yes strong=no pd=yes\n");

    const auto malformed = write_file("bad.json", "{\"m\": 6, \"n\": ");
    CHECK(run_cli("analyze --input " + malformed.string()).code == 2);
    CHECK(run_cli("analyze --input " + scratch("missing.json").string()).code == 2);
    CHECK(run_cli("family nonsense").code == 2);
    CHECK(run_cli("family noncd --k 1").code == 2);
    CHECK(run_cli("--bogus").code == 2);

    CHECK(run_cli("verify-suite --criterion 2").code == 0);
    const auto fault = run_cli("verify-suite --criterion 2 --inject-fault 2");
    CHECK(fault.code == 1);
    CHECK(fault.out.find("FAILED criteria: 2") != std::string::npos);
}

TEST_CASE("command-line reports are reproducible apart from timings") {
    const auto first = scratch("first.json");
    const auto second = scratch("second.json");
    CHECK(run_cli("family truncated --m 6 --n 3 --v0 1 --vmid 1 --vend 1 --refute --out " + first.string()).code == 0);
    CHECK(run_cli("family truncated --m 6 --n 3 --v0 1 --vmid 1 --vend 1 --refute --out " + second.string()).code == 0);
    const auto a = json::parse(read_file(first));
    const auto b = json::parse(read_file(second));
    CHECK(without_timings(a).dump() == without_timings(b).dump());
    CHECK(a["verdicts"]["psd"] == "no");
    check_report_witnesses(a);

    const auto other_seed = scratch("seed.json");
    CHECK(run_cli("family truncated --m 6 --n 3 --v0 1 --vmid 1 --vend 1 --refute --seed 7 --out " + other_seed.string()).code == 0);
    CHECK(json::parse(read_file(other_seed))["seed"] == 7);
}
