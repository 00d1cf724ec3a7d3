#include "hankelkit/analysis.hpp"

#include <chrono>
#include <cmath>
#include <limits>
#include <sstream>

#include "hankelkit/certificates.hpp"
#include "hankelkit/decompositions.hpp"
#include "hankelkit/errors.hpp"
#include "hankelkit/hankel_matrix.hpp"

namespace hankelkit {

using nlohmann::json;

namespace {

json finite_or_null(double x) { return std::isfinite(x) ? json(x) : json(nullptr); }

std::string lower(Answer a) { return to_string(a); }

std::vector<double> unit(int n, int i) {
    std::vector<double> e(static_cast<std::size_t>(n), 0.0);
    e[static_cast<std::size_t>(i)] = 1.0;
    return e;
}

Witness form_witness(const HankelTensor& t, std::vector<double> x, std::string refutes, std::string origin) {
    Witness w;
    w.kind = Witness::Kind::Form;
    w.value = eval(t, x);
    w.point = std::move(x);
    w.refutes = std::move(refutes);
    w.origin = std::move(origin);
    return w;
}

double param(const json& p, const char* key) {
    if (!p.contains(key)) throw InputError(std::string("missing parameter '") + key + "'");
    const auto& v = p.at(key);
    if (v.is_number()) return v.get<double>();
    if (v.is_string()) {
        try {
            std::size_t used = 0;
            const std::string s = v.get<std::string>();
            const double d = std::stod(s, &used);
            if (used == s.size()) return d;
        } catch (const std::exception&) {
        }
    }
    throw InputError(std::string("parameter '") + key + "' must be a number");
}


int int_param(const json& p, const char* key) {
    const double d = param(p, key);
    if (d != std::floor(d) || std::abs(d) > 1e9) throw InputError(std::string("parameter '") + key + "' must be an integer");
    return static_cast<int>(d);
}

std::vector<double> list_param(const json& p, const char* key) {
    if (!p.contains(key)) throw InputError(std::string("missing parameter '") + key + "'");
    const auto& v = p.at(key);
    std::vector<double> out;
    if (v.is_array()) {
        for (const auto& e : v) {
            if (!e.is_number()) throw InputError(std::string("parameter '") + key + "' must hold numbers");
            out.push_back(e.get<double>());
        }
        return out;
    }
    if (v.is_string()) {
        std::stringstream ss(v.get<std::string>());
        std::string item;
        while (std::getline(ss, item, ',')) {
            try {
                std::size_t used = 0;
                out.push_back(std::stod(item, &used));
                if (item.find_first_not_of(" \t", used) != std::string::npos) throw InputError("");
            } catch (const std::exception&) {
                throw InputError(std::string("parameter '") + key + "' must be a comma-separated list of numbers");
            }
        }
        return out;
    }
    throw InputError(std::string("parameter '") + key + "' must be a list of numbers");
}

json certificate_json(const std::string& name, const StructuredDecomposition& d, const DecompositionCheck& check) {
    json labels = json::array();
    for (const auto& s : d.squares) labels.push_back(s.label);
    json pieces = json::array();
    for (const auto& r : d.residuals) {
        pieces.push_back({{"label", r.label},
                          {"agm_slack", finite_or_null(r.certificate.slack)},
                          {"holds", r.certificate.holds}});
    }
    return {{"name", name},
            {"squares", d.squares.size()},
            {"square_labels", labels},
            {"residual_pieces", pieces},
            {"min_agm_slack", finite_or_null(d.min_agm_slack())},
            {"verified", check.pass},
            {"max_discrepancy", check.max_discrepancy},
            {"binary_pieces_psd", check.binary_pieces_psd},
            {"notes", check.notes}};
}

/// Collects verdicts from independent stages and refuses contradictions.
class Pipeline {
public:
    explicit Pipeline(const HankelTensor& t) : t_(t) {}

    void set(const char* field, Answer value, const std::string& source) {
        if (value == Answer::Unknown) return;
        auto& [slot, origin] = slots_.try_emplace(field, Answer::Unknown, std::string()).first->second;
        if (slot == Answer::Unknown) {
            slot = value;
            origin = source;
            return;
        }
        if (slot != value) {
            throw InconsistencyError(std::string(field) + " is " + lower(slot) + " by " + origin + " but " +
                                     lower(value) + " by " + source);
        }
    }

    Answer get(const char* field) const {
        const auto it = slots_.find(field);
        return it == slots_.end() ? Answer::Unknown : it->second.first;
    }

    void witness(Witness w) {
        if (w.kind == Witness::Kind::Form) {
            // PD witnesses sit on zeros of f, so they are accepted within the
            // PSD tolerance band (boundary cases of the sextic threshold).
            double norm2 = 0.0;
            for (double c : w.point) norm2 += c * c;
            const double band = kPsdTolerance * std::max(1.0, t_.gen().max_abs()) * std::pow(norm2, t_.order() / 2.0);
            const bool ok = w.refutes == "pd" ? w.value <= band : w.value < 0.0;
            if (!ok) {
                throw InconsistencyError("witness from " + w.origin + " has value " + std::to_string(w.value) +
                                         " and does not refute " + w.refutes);
            }
        }
        for (const auto& seen : witnesses_) {
            if (seen.kind == w.kind && seen.refutes == w.refutes && seen.point == w.point) return;
        }
        witnesses_.push_back(std::move(w));
    }

    void merge(const ClassificationVerdict& v, const std::string& source) {
        set("psd", v.psd, source);
        set("sos", v.sos, source);
        set("strong", v.strong, source);
        set("pd", v.pd, source);
        boundary_ = boundary_ || v.boundary;
        for (const auto& w : v.witnesses) witness(w);
        for (const auto& c : v.criteria) criteria_.push_back(c);
        for (const auto& n : v.notes) notes_.push_back(n);
        if (v.certificate) certificate(source, *v.certificate);
    }

    void certificate(const std::string& name, const StructuredDecomposition& d) {
        const auto check = verify_decomposition(t_, d);
        if (!check.pass) {
            std::ostringstream os;
            os << "certificate '" << name << "' fails verification (discrepancy " << check.max_discrepancy << ")";
            throw InconsistencyError(os.str());
        }
        certificates_.push_back(certificate_json(name, d, check));
    }

    void criterion(CriterionRecord c) { criteria_.push_back(std::move(c)); }
    void note(std::string n) { notes_.push_back(std::move(n)); }
    bool has_witness(const std::string& refutes) const {
        for (const auto& w : witnesses_) {
            if (w.refutes == refutes) return true;
        }
        return false;
    }

    json verdicts() const {
        return {{"psd", lower(get("psd"))},
                {"sos", lower(get("sos"))},
                {"strong", lower(get("strong"))},
                {"pd", lower(get("pd"))},
                {"boundary", boundary_}};
    }
    json sources() const {
        json out = json::object();
        for (const auto& [k, v] : slots_) {
            if (v.first != Answer::Unknown) out[k] = v.second;
        }
        return out;
    }
    json witnesses() const {
        json out = json::array();
        for (const auto& w : witnesses_) out.push_back(to_json(w));
        return out;
    }
    json criteria() const {
        json out = json::array();
        for (const auto& c : criteria_) out.push_back(to_json(c));
        return out;
    }
    const json& certificates() const { return certificates_; }
    const std::vector<std::string>& notes() const { return notes_; }

private:
    const HankelTensor& t_;
    std::map<std::string, std::pair<Answer, std::string>> slots_;
    bool boundary_ = false;
    std::vector<Witness> witnesses_;
    std::vector<CriterionRecord> criteria_;
    std::vector<std::string> notes_;
    json certificates_ = json::array();
};

void run_family_criteria(Pipeline& p, const HankelTensor& t) {
    const int m = t.order();
    const int n = t.dim();
    const auto& gen = t.gen();

    if (const auto spec = as_truncated(gen)) {
        if (spec->v0 >= 0.0 && spec->vmid >= 0.0 && spec->vend >= 0.0) {
            p.merge(truncated_strong_dichotomy(*spec), "middle-entry dichotomy");
        }
        if (m == 6 && n == 3) {
            p.merge(classify_sextic_truncated(spec->v0, spec->vmid, spec->vend), "sextic threshold");
        } else if (m % 2 == 0 && m >= 6 && n == 3 && spec->v0 == spec->vend && spec->vmid > 0.0 && spec->v0 >= 0.0) {
            const auto bound = truncated_sos_bound(m);
            const bool enough = spec->v0 >= bound.bound * spec->vmid;
            p.criterion({"constructive SOS bound", enough, spec->v0 - bound.bound * spec->vmid,
                         "v0 >= bound(m) vmid with bound(m) = " + std::to_string(bound.bound)});
            if (enough) {
                p.certificate("truncated squares plus AGM pieces",
                              build_truncated_sos_decomposition(m, spec->v0, spec->vmid, bound));
                p.set("psd", Answer::Yes, "constructive SOS bound");
                p.set("sos", Answer::Yes, "constructive SOS bound");
            } else {
                p.note("below the constructive SOS bound; the bound is sufficient only");
            }
        }
        return;
    }

    if (const auto spec = as_quasi_truncated(gen)) {
        if (m % 2 == 0 && spec->v0 >= 0.0 && spec->vmid >= 0.0 && spec->vend >= 0.0) {
            p.merge(quasi_midzero_dichotomy(*spec), "vanishing-middle dichotomy");
        }
        if (m == 6 && n == 3) {
            const auto nec = quasi_sextic_necessary(spec->v0, spec->v1, spec->vmid, spec->vend1, spec->vend);
            for (const auto& c : nec.checks) p.criterion(c);
            for (const auto& w : nec.witnesses) p.witness(w);
            if (!nec.violations.empty()) {
                p.set("psd", Answer::No, "quasi-truncated necessary conditions");
                p.set("sos", Answer::No, "quasi-truncated necessary conditions");
                p.set("pd", Answer::No, "quasi-truncated necessary conditions");
            } else if (spec->v0 > 0.0 && spec->vmid > 0.0 && spec->vend > 0.0) {
                const auto suff = quasi_sextic_sufficient(spec->v0, spec->v1, spec->vmid, spec->vend1, spec->vend);
                p.criterion({"quasi-truncated sufficient search", suff.has_value(), 0.0,
                             suff ? "t1 = " + std::to_string(suff->t1) + ", t2 = " + std::to_string(suff->t2)
                                  : "no admissible (t1, t2) on the search grid; inconclusive"});
                if (suff) {
                    p.certificate("quasi-truncated five-part decomposition", suff->decomposition);
                    p.set("psd", Answer::Yes, "quasi-truncated sufficient search");
                    p.set("sos", Answer::Yes, "quasi-truncated sufficient search");
                }
            }
        }
    }
}

void run_binary_oracle(Pipeline& p, const HankelTensor& t) {
    const auto form = expand(t);
    const auto res = binary_psd_oracle(form);
    p.criterion({"binary root oracle", res.is_psd, res.min_value, "minimum of f on the unit circle"});
    if (res.is_psd) {
        p.set("psd", Answer::Yes, "binary root oracle");
        p.set("sos", Answer::Yes, "binary root oracle (nonnegative binary forms are sums of squares)");
        if (res.min_value > kBinaryOracleTolerance * form.max_abs_coefficient()) {
            p.set("pd", Answer::Yes, "binary root oracle");
        }
    } else {
        std::vector<double> x{res.direction[0], res.direction[1]};
        p.witness(form_witness(t, x, "psd", "binary root oracle minimum"));
        p.set("psd", Answer::No, "binary root oracle");
        p.set("sos", Answer::No, "binary root oracle");
        p.set("pd", Answer::No, "binary root oracle");
    }
}

}  // namespace

json to_json(const Witness& w) {
    return {{"kind", w.kind == Witness::Kind::Form ? "form" : "matrix"},
            {"point", w.point},
            {"value", w.value},
            {"refutes", w.refutes},
            {"origin", w.origin}};
}

json to_json(const CriterionRecord& c) {
    return {{"name", c.name}, {"satisfied", c.satisfied}, {"slack", finite_or_null(c.slack)}, {"note", c.note}};
}

GeneratingVector parse_generating_vector(const json& doc) {
    if (!doc.is_object()) throw InputError("input must be an object with m, n and v");
    for (const char* key : {"m", "n", "v"}) {
        if (!doc.contains(key)) throw InputError(std::string("input is missing '") + key + "'");
    }
    if (!doc["m"].is_number_integer() || !doc["n"].is_number_integer()) throw InputError("m and n must be integers");
    const auto m = doc["m"].get<long long>();
    const auto n = doc["n"].get<long long>();
    if (m < 1 || n < 1) throw InputError("m and n must be positive");
    if (m > 60 || n > 1000) throw InputError("m or n is too large");
    if (!doc["v"].is_array()) throw InputError("v must be an array of numbers");
    std::vector<double> v;
    for (const auto& e : doc["v"]) {
        if (!e.is_number()) throw InputError("v must contain only numbers");
        const double d = e.get<double>();
        if (!std::isfinite(d)) throw InputError("v must contain finite numbers");
        v.push_back(d);
    }
    try {
        return GeneratingVector(static_cast<int>(m), static_cast<int>(n), std::move(v));
    } catch (const DomainError& e) {
        throw InputError(e.what());
    }
}

json analyze_tensor(const HankelTensor& t, const AnalyzeOptions& options, const json& input) {
    const auto start = std::chrono::steady_clock::now();
    const int m = t.order();
    const int n = t.dim();
    const bool even = m % 2 == 0;
    Pipeline p(t);

    // Necessary condition on the diagonal anchors v_{(i-1)m}.
    const auto nc = check_necessary_psd(t);
    double min_anchor = std::numeric_limits<double>::infinity();
    for (int i = 0; i < n; ++i) min_anchor = std::min(min_anchor, t.gen()[static_cast<std::size_t>(i * m)]);
    p.criterion({"nonnegative diagonal anchors", nc.pass, min_anchor,
                 nc.offending_index ? "first offending i = " + std::to_string(*nc.offending_index) : ""});
    if (!even) {
        p.note("odd order: psd, sos and pd are defined for even order only");
    } else if (!nc.pass) {
        p.witness(form_witness(t, unit(n, *nc.offending_index - 1), "psd", "negative diagonal anchor"));
        p.set("psd", Answer::No, "nonnegative diagonal anchors");
        p.set("sos", Answer::No, "nonnegative diagonal anchors");
        p.set("pd", Answer::No, "nonnegative diagonal anchors");
    }

    // Strong Hankel test.
    const auto strong = is_strong_hankel(t);
    std::string corner_note;
    if (strong.chosen_corner) corner_note = "free corner " + std::to_string(*strong.chosen_corner);
    p.criterion({"associated Hankel matrix PSD", strong.verdict.is_psd, strong.verdict.min_eigenvalue, corner_note});
    if (strong.verdict.is_psd) {
        p.set("strong", Answer::Yes, "associated Hankel matrix");
        if (even) {
            p.set("psd", Answer::Yes, "strong Hankel (even order strong Hankel tensors are SOS)");
            p.set("sos", Answer::Yes, "strong Hankel (even order strong Hankel tensors are SOS)");
            // A positive definite Hankel matrix has a representing measure with at
            // least size() >= n atoms, so f(x) = sum_i w_i <u(g_i), x>^m vanishes
            // only when a degree n-1 polynomial has that many roots, i.e. x = 0.
            const double scale = std::max(1.0, strong.matrix.entries.cwiseAbs().rowwise().sum().maxCoeff());
            if (strong.verdict.min_eigenvalue > 10.0 * kPsdTolerance * scale) {
                p.set("pd", Answer::Yes, "positive definite associated Hankel matrix");
            }
        }
    } else {
        p.set("strong", Answer::No, "associated Hankel matrix");
        if (strong.verdict.witness) {
            Witness w;
            w.kind = Witness::Kind::Matrix;
            w.point.assign(strong.verdict.witness->data(), strong.verdict.witness->data() + strong.verdict.witness->size());
            w.value = strong.matrix.quadratic_form(*strong.verdict.witness);
            w.refutes = "strong";
            w.origin = strong.chosen_corner ? "associated matrix eigenvector (" + corner_note + ")"
                                            : "associated matrix eigenvector";
            p.witness(std::move(w));
        }
    }

    const auto family = detect_family(t.gen());
    if (even) {
        run_family_criteria(p, t);
        if (n == 2) run_binary_oracle(p, t);
    }

    json refutation = nullptr;
    if (options.refute) {
        if (!even) {
            p.note("numerical refutation skipped: odd order");
        } else {
            const auto probes = structured_witnesses(t);
            const auto r = refute_psd(t, {options.seed, options.starts, options.iterations}, probes);
            refutation = {{"found", r.found},
                          {"x", r.x},
                          {"value", r.value},
                          {"starts_used", r.starts_used},
                          {"seed", r.seed},
                          {"source", r.source}};
            if (r.found) {
                const double floor = -kPsdTolerance * std::max(1.0, t.gen().max_abs());
                if (p.get("psd") == Answer::Yes && r.value < floor) {
                    throw InconsistencyError("psd is yes but the refuter found f(x) = " + std::to_string(r.value));
                }
                if (p.get("psd") != Answer::Yes) {
                    p.witness(form_witness(t, r.x, "psd", "sphere refuter (" + r.source + ")"));
                    p.set("psd", Answer::No, "sphere refuter");
                    p.set("sos", Answer::No, "sphere refuter");
                    p.set("pd", Answer::No, "sphere refuter");
                }
            }
        }
    }

    // PD closure: a vanishing anchor gives f(e_i) = 0.
    if (even && p.get("pd") == Answer::Unknown && p.get("psd") == Answer::Yes) {
        for (int i = 0; i < n; ++i) {
            if (t.gen()[static_cast<std::size_t>(i * m)] == 0.0) {
                p.witness(form_witness(t, unit(n, i), "pd", "vanishing diagonal anchor"));
                p.set("pd", Answer::No, "vanishing diagonal anchor");
                break;
            }
        }
    }
    if (p.get("psd") == Answer::No) p.set("pd", Answer::No, "not psd");
    if (p.get("sos") == Answer::Yes && p.get("psd") != Answer::Yes) {
        throw InconsistencyError("sos is yes while psd is not");
    }
    for (const char* field : {"psd", "sos", "pd", "strong"}) {
        if (p.get(field) != Answer::No) continue;
        const std::string want = std::string(field) == "sos" || std::string(field) == "pd" ? "psd" : field;
        if (!p.has_witness(want) && !(std::string(field) == "pd" && p.has_witness("pd"))) {
            throw InconsistencyError(std::string(field) + " is no without a witness");
        }
    }

    json report;
    report["schema"] = kReportSchema;
    report["tool"] = {{"name", "hankelkit"}, {"version", kToolVersion}};
    report["seed"] = options.seed;
    report["input"] = input;
    report["tensor"] = {{"m", m}, {"n", n}, {"v", t.gen().values()}};
    report["family"] = to_string(family);
    report["eval_path"] = to_string(evaluate(t, unit(n, 0)).path);
    report["verdicts"] = p.verdicts();
    report["verdict_sources"] = p.sources();
    report["criteria"] = p.criteria();
    report["witnesses"] = p.witnesses();
    report["certificates"] = p.certificates();
    report["refutation"] = refutation;
    report["notes"] = p.notes();
    report["family_records"] = json::object();
    report["timings"] = {
        {"total_seconds", std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count()}};
    return report;
}

json analyze_family(const std::string& name, const json& params, const AnalyzeOptions& options) {
    if (!params.is_object()) throw InputError("family parameters must be an object");
    const json input = {{"family", name}, {"params", params}};
    try {
        if (name == "truncated") {
            const TruncatedSpec spec{int_param(params, "m"), int_param(params, "n"), param(params, "v0"),
                                     param(params, "vmid"), param(params, "vend")};
            return analyze_tensor(build_truncated(spec), options, input);
        }
        if (name == "quasi-truncated") {
            const QuasiTruncatedSpec spec{int_param(params, "m"), int_param(params, "n"), param(params, "v0"),
                                          param(params, "v1"),    param(params, "vmid"), param(params, "vend1"),
                                          param(params, "vend")};
            return analyze_tensor(build_quasi_truncated(spec), options, input);
        }
        if (name == "noncd") {
            const auto fam = noncd_family(int_param(params, "k"));
            const auto a = analyze_noncd(fam);
            const auto ob = cd_obstruction(fam);
            auto report = analyze_tensor(fam.tensor(), options, input);
            json squares = json::array();
            for (const auto& [j, c] : a.augmented_squares) squares.push_back({{"x2_power", j}, {"coefficient", to_string(c)}});
            json exact = json::array();
            for (const auto& r : fam.exact) exact.push_back(to_string(r));
            report["family_records"] = {
                {"generating_vector_exact", exact},
                {"identity_holds", a.identity_holds},
                {"identity_mismatches", a.identity_mismatches},
                {"augmented_squares", squares},
                {"augmented_holds", a.augmented_holds},
                {"value_at_ones", to_string(a.value_at_ones)},
                {"negative_at_ones", a.negative_at_ones},
                {"obstruction_coefficient", to_string(ob.coefficient)},
                {"obstruction_holds", ob.holds},
                {"obstruction_statement", ob.statement},
            };
            if (a.identity_holds || a.augmented_holds) {
                const auto d = noncd_certificate(fam, !a.identity_holds);
                const auto check = verify_decomposition(fam.tensor(), d);
                if (!check.pass) throw InconsistencyError("square-sum certificate for the family fails verification");
                report["certificates"].push_back(
                    certificate_json(a.identity_holds ? "displayed square sum" : "augmented square sum", d, check));
            }
            return report;
        }
        if (name == "moment") {
            if (!params.contains("h") || !params["h"].is_string()) throw InputError("moment family needs a string 'h'");
            auto spec = named_moment_spec(params["h"].get<std::string>());
            spec.nodes = params.contains("quad_nodes") ? int_param(params, "quad_nodes") : spec.nodes;
            const int m = int_param(params, "m");
            const int n = int_param(params, "n");
            const auto gen = moments_from_function(spec, m, n);
            auto report = analyze_tensor(HankelTensor(gen), options, input);
            report["family_records"] = {{"support", {spec.lower, spec.upper}},
                                        {"quadrature", {{"rule", "gauss-legendre"}, {"nodes", spec.nodes}}},
                                        {"moments", gen.values()}};
            return report;
        }
        if (name == "vandermonde") {
            const int m = int_param(params, "m");
            const int n = int_param(params, "n");
            const auto nodes = list_param(params, "nodes");
            const auto weights = list_param(params, "weights");
            if (nodes.size() != weights.size() || nodes.empty()) {
                throw InputError("vandermonde family needs equally many nodes and weights");
            }
            auto v = GeneratingVector::zeros(m, n).values();
            for (std::size_t i = 0; i < nodes.size(); ++i) {
                double pw = 1.0;
                for (auto& c : v) {
                    c += weights[i] * pw;
                    pw *= nodes[i];
                }
            }
            const GeneratingVector gen(m, n, v);
            auto report = analyze_tensor(HankelTensor(gen), options, input);
            const auto dec = vandermonde_decompose(gen);
            const auto back = dec.reconstruct();
            double err = 0.0;
            for (std::size_t k = 0; k < back.size(); ++k) err = std::max(err, std::abs(back[k] - gen[k]));
            bool complete = true;
            for (double w : weights) complete = complete && w >= 0.0;
            report["family_records"] = {{"nodes", nodes},
                                        {"weights", weights},
                                        {"complete", complete},
                                        {"default_node_decomposition",
                                         {{"nodes", dec.nodes},
                                          {"weights", dec.weights},
                                          {"relative_residual", dec.relative_residual},
                                          {"reconstruction_error", err},
                                          {"cd_vectors", dec.cd_vectors ? json(*dec.cd_vectors) : json(nullptr)}}}};
            return report;
        }
    } catch (const DomainError& e) {
        throw InputError(e.what());
    } catch (const PreconditionError& e) {
        throw InputError(e.what());
    } catch (const ConditioningError& e) {
        throw InputError(e.what());
    } catch (const ResourceError& e) {
        throw InputError(e.what());
    }
    throw InputError("unknown family '" + name + "' (expected truncated, quasi-truncated, noncd, moment or vandermonde)");
}

json analyze_document(const json& doc, const AnalyzeOptions& options) {
    if (!doc.is_object()) throw InputError("input must be a JSON object");
    if (doc.contains("family")) {
        if (!doc["family"].is_string()) throw InputError("'family' must be a string");
        return analyze_family(doc["family"].get<std::string>(), doc.value("params", json::object()), options);
    }
    const auto gen = parse_generating_vector(doc);
    try {
        return analyze_tensor(HankelTensor(gen), options, doc);
    } catch (const ResourceError& e) {
        throw InputError(e.what());
    }
}

std::string verdict_line(const json& report) {
    const auto& v = report.at("verdicts");
    std::string line = "psd=" + v.at("psd").get<std::string>() + " sos=" + v.at("sos").get<std::string>() +
                       " strong=" + v.at("strong").get<std::string>() + " pd=" + v.at("pd").get<std::string>();
    if (v.at("boundary").get<bool>()) line += " boundary";
    return line;
}

json without_timings(json report) {
    report.erase("timings");
    return report;
}

}  // namespace hankelkit
