// netsynth: decide positive-realness for the admittance family
// Y(s) = k (a0 s^2 + a1 s + 1) / (s (d0 s^2 + d1 s + 1)), classify it by R_k,
// build a minimal RLC realization with closed-form element values, and verify
// every construction by recomputing its driving-point admittance.

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "netsynth/netsynth.hpp"

namespace fs = std::filesystem;
using json = nlohmann::ordered_json;
using namespace netsynth;

namespace {

// exit codes are a stable contract
constexpr int kOk = 0;
constexpr int kInputError = 1;
constexpr int kNotPr = 2;
constexpr int kCanonicalRequired = 3;
constexpr int kVerificationFailure = 4;
constexpr int kExperimentFailure = 5;

struct RunConfig {
    unsigned precision = 50;
    FrequencyGrid pr_grid;  // sampling grid for the numeric positive-realness cross-check
    int fit_starts = 200;
    std::uint64_t seed = 0;
    std::string output_dir = ".";
    bool json_output = false;
};

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("cannot open file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error("cannot write file: " + path);
    out << text;
}

json tuple_json(const CanonicalAdmittance<Rational>& y) {
    return json{{"a0", y.a0.str()}, {"a1", y.a1.str()}, {"d0", y.d0.str()},
                {"d1", y.d1.str()}, {"k", y.k.str()}};
}

json pr_json(const PrVerdict& v) {
    json j;
    j["is_pr"] = v.is_pr;
    j["case"] = to_string(v.case_tag);
    if (v.is_pr)
        j["failed_condition"] = nullptr;
    else
        j["failed_condition"] = to_string(v.failed_condition);
    return j;
}

json witness_json(const ConditionWitness& w) {
    return json{{"r_k", w.rk.str()},
                {"a1_minus_d1", w.a1_minus_d1.str()},
                {"a0d1_minus_a1d0", w.a0d1_minus_a1d0.str()},
                {"a0_minus_d0", w.a0_minus_d0.str()},
                {"bridge_defect", w.bridge_defect.str()}};
}

CanonicalAdmittance<Rational> tuple_from_coeffs(const std::string& text) {
    std::vector<Rational> vals;
    std::string cur;
    std::istringstream in(text);
    while (std::getline(in, cur, ',')) vals.push_back(parse_rational(cur));
    if (vals.size() != 5) throw Error("--coeffs needs exactly five values a0,a1,d0,d1,k");
    return {vals[0], vals[1], vals[2], vals[3], vals[4]};
}

CanonicalAdmittance<Rational> tuple_from_json_file(const std::string& path) {
    json j = json::parse(read_file(path));
    auto field = [&](const char* name) -> Rational {
        if (!j.contains(name)) throw Error(std::string("missing field ") + name);
        const auto& v = j.at(name);
        if (v.is_string()) return parse_rational(v.get<std::string>());
        if (v.is_number_integer()) return make_rational(v.get<long long>(), 1);
        throw Error(std::string("field ") + name + " must be an exact \"p/q\" string or integer");
    };
    return {field("a0"), field("a1"), field("d0"), field("d1"), field("k")};
}

/// Resolve the input tuple from --coeffs / --expr / --in (exactly one).
CanonicalAdmittance<Rational> resolve_input(const std::string& coeffs, const std::string& expr,
                                            const std::string& in_file) {
    int given = !coeffs.empty() + !expr.empty() + !in_file.empty();
    if (given != 1) throw Error("give exactly one of --coeffs, --expr, --in");
    if (!coeffs.empty()) return tuple_from_coeffs(coeffs);
    if (!expr.empty()) return from_ratfunc(parse_ratfunc(expr));
    return tuple_from_json_file(in_file);
}

void emit(const RunConfig& cfg, const json& j, const std::string& text) {
    if (cfg.json_output)
        std::cout << j.dump(2) << "\n";
    else
        std::cout << text;
}

int cmd_check(const RunConfig& cfg, const std::string& coeffs, const std::string& expr,
              const std::string& in_file) {
    CanonicalAdmittance<Rational> y = resolve_input(coeffs, expr, in_file);
    Classification c = classify(y);
    NumericPrOptions pr_opts;
    pr_opts.grid = cfg.pr_grid;
    NumericPrResult numeric = numeric_pr_check(y, pr_opts);
    json j;
    j["input"] = tuple_json(y);
    j["pr"] = pr_json(c.pr);
    j["numeric_oracle_agrees"] = numeric.is_pr == c.pr.is_pr;
    j["r_k"] = c.rk.str();
    j["case"] = to_string(c.kase);
    j["four_element"] = json{{"realizable", c.four_element_realizable()},
                             {"condition", "R_k = 0, or a0 > d0 with a1 = d1 or a0*d1 = a1*d0"}};
    j["witness"] = witness_json(c.witness);

    std::ostringstream t;
    t << "input: " << y.to_string() << "\n";
    t << "positive-real: " << (c.pr.is_pr ? "yes" : "no");
    if (!c.pr.is_pr) t << " (failed: " << to_string(c.pr.failed_condition) << ")";
    t << " [" << to_string(c.pr.case_tag) << "]\n";
    t << "numeric oracle agrees: " << (numeric.is_pr == c.pr.is_pr ? "yes" : "no") << "\n";
    t << "R_k = " << c.rk.str() << "\n";
    t << "case: " << to_string(c.kase) << "\n";
    t << "four-element realizable: " << (c.four_element_realizable() ? "yes" : "no") << "\n";
    emit(cfg, j, t.str());
    return c.pr.is_pr ? kOk : kNotPr;
}

template <class T>
json elements_json(const Realization<T>& r) {
    json arr = json::array();
    for (const auto& e : r.netlist.edges) {
        json el{{"refdes", e.refdes},
                {"kind", std::string(1, kind_letter(e.kind))},
                {"value", scalar_traits<T>::to_string(e.value)}};
        if (!e.provenance.empty()) el["formula"] = e.provenance;
        arr.push_back(el);
    }
    return arr;
}

int cmd_synth(const RunConfig& cfg, const std::string& coeffs, const std::string& expr,
              const std::string& in_file, const std::string& name) {
    CanonicalAdmittance<Rational> y = resolve_input(coeffs, expr, in_file);
    SynthResult sr;
    try {
        sr = synthesize(y);
    } catch (const NotPositiveRealError& e) {
        std::cerr << "not positive-real: " << e.what() << "\n";
        return kNotPr;
    } catch (const VerificationError& e) {
        std::cerr << "internal verification failure, no output written: " << e.what() << "\n";
        return kVerificationFailure;
    }

    json j;
    j["input"] = tuple_json(y);
    j["pr"] = pr_json(sr.cls.pr);
    j["r_k"] = sr.cls.rk.str();
    j["case"] = to_string(sr.cls.kase);
    j["conditions"] = witness_json(sr.cls.witness);

    if (!sr.realized()) {
        j["netlist_file"] = nullptr;
        j["element_count"] = 0;
        j["verified"] = nullptr;
        std::ostringstream t;
        t << "case: " << to_string(sr.cls.kase)
          << " (no special-form network; classification only)\n";
        emit(cfg, j, t.str());
        return kCanonicalRequired;
    }

    fs::create_directories(cfg.output_dir);
    fs::path file = fs::path(cfg.output_dir) / (name + ".net");
    std::string netlist_text;
    std::string topology;
    int count = 0;
    bool verified = false;
    if (sr.exact) {
        netlist_text = write_netlist(sr.exact->netlist);
        topology = sr.exact->netlist.topology;
        count = sr.exact->element_count;
        verified = sr.exact->verified;
        j["value_kind"] = "exact";
        j["elements"] = elements_json(*sr.exact);
    } else {
        netlist_text = write_netlist(sr.numeric->netlist);
        topology = sr.numeric->netlist.topology;
        count = sr.numeric->element_count;
        verified = sr.numeric->verified;
        j["value_kind"] = "decimal";
        j["elements"] = elements_json(*sr.numeric);
    }
    write_file(file.string(), netlist_text);
    j["topology"] = topology;
    j["netlist_file"] = file.string();
    j["element_count"] = count;
    j["verified"] = verified;

    std::ostringstream t;
    t << "case: " << to_string(sr.cls.kase) << ", topology " << topology << ", " << count
      << " elements, verified\n";
    t << "wrote " << file.string() << "\n";
    t << netlist_text;
    emit(cfg, j, t.str());
    return kOk;
}

template <class T>
int verify_impl(const RunConfig& cfg, const Netlist<T>& n) {
    AdmittanceResult<T> res = driving_point_admittance(n);
    json j;
    j["admittance"] = res.y.to_string();
    j["degree"] = res.degree;
    std::ostringstream t;
    t << "admittance: " << res.y.to_string() << "\n";
    t << "degree: " << res.degree << "\n";
    if (res.canonical) {
        const auto& c = *res.canonical;
        json cj{{"a0", scalar_traits<T>::to_string(c.a0)},
                {"a1", scalar_traits<T>::to_string(c.a1)},
                {"d0", scalar_traits<T>::to_string(c.d0)},
                {"d1", scalar_traits<T>::to_string(c.d1)},
                {"k", scalar_traits<T>::to_string(c.k)}};
        j["canonical"] = cj;
        j["r_k"] = scalar_traits<T>::to_string(r_k(c));
        PrVerdict v = is_positive_real(c);
        j["pr"] = pr_json(v);
        t << "canonical: " << c.to_string() << "\n";
        t << "R_k = " << scalar_traits<T>::to_string(r_k(c)) << "\n";
        t << "positive-real: " << (v.is_pr ? "yes" : "no") << "\n";
    } else {
        j["canonical"] = nullptr;
        t << "canonical: not in the k(a0 s^2+a1 s+1)/(s(d0 s^2+d1 s+1)) family\n";
    }
    emit(cfg, j, t.str());
    return kOk;
}

int cmd_verify(const RunConfig& cfg, const std::string& file) {
    AnyNetlist n = read_netlist_any(read_file(file));
    return std::visit([&](const auto& net) { return verify_impl(cfg, net); }, n);
}

int cmd_dual(const RunConfig& cfg, const std::string& coeffs, const std::string& expr,
             const std::string& in_file, const std::string& net_file,
             const std::string& out_file) {
    if (!net_file.empty()) {
        AnyNetlist n = read_netlist_any(read_file(net_file));
        std::string text = std::visit(
            [](const auto& net) { return write_netlist(fid_netlist(net)); }, n);
        if (out_file.empty())
            std::cout << text;
        else
            write_file(out_file, text);
        return kOk;
    }
    CanonicalAdmittance<Rational> y = resolve_input(coeffs, expr, in_file);
    CanonicalAdmittance<Rational> d = fid_coefficients(y);
    json j;
    j["input"] = tuple_json(y);
    j["dual"] = tuple_json(d);
    j["r_k"] = r_k(y).str();
    j["dual_r_k"] = r_k(d).str();
    std::ostringstream t;
    t << "dual: " << d.to_string() << "\n";
    t << "R_k = " << r_k(y).str() << " -> " << r_k(d).str() << " (= R_k/(a0^2 d0^2))\n";
    emit(cfg, j, t.str());
    return kOk;
}

json experiment_json(const ExperimentReport& rep) {
    json j;
    j["claim"] = to_string(rep.claim);
    j["instances"] = rep.instances;
    j["seed"] = rep.seed;
    j["pass"] = rep.pass;
    j["realizable_threshold"] = rep.realizable_threshold;
    j["nonrealizable_threshold"] = rep.nonrealizable_threshold;
    j["detail"] = rep.detail;
    json sk = json::array();
    for (const auto& s : rep.skeletons)
        sk.push_back(json{{"topology", s.topology},
                          {"min", s.min},
                          {"median", s.q50},
                          {"max", s.max},
                          {"samples", s.samples}});
    j["skeletons"] = sk;
    j["failures"] = rep.failures;
    return j;
}

int cmd_enumerate(const RunConfig& cfg, const std::string& claim_name, int instances, int trials) {
    auto claim = claim_from_string(claim_name);
    if (!claim) throw Error("claim must be one of thm2, lemma8, lemma9, lemma10, lemma14");
    ExperimentOptions opts;
    opts.seed = cfg.seed;
    opts.starts = cfg.fit_starts;
    opts.instances = instances;
    if (*claim == Claim::Lemma9 && trials > 0) opts.instances = trials;
    ExperimentReport rep = necessity_experiment(*claim, opts);
    json j = experiment_json(rep);
    std::ostringstream t;
    t << "claim " << to_string(rep.claim) << ": " << (rep.pass ? "PASS" : "FAIL") << " ("
      << rep.detail << ")\n";
    for (const auto& f : rep.failures) t << "  failure: " << f << "\n";
    emit(cfg, j, t.str());
    return rep.pass ? kOk : kExperimentFailure;
}

} // namespace

int main(int argc, char** argv) {
    RunConfig cfg;
    if (const char* env = std::getenv("NETSYNTH_PRECISION")) cfg.precision = std::stoul(env);

    CLI::App app{"synthesis and verification for the admittance family "
                 "k(a0 s^2 + a1 s + 1)/(s(d0 s^2 + d1 s + 1))"};
    app.require_subcommand(1);
    app.fallthrough();  // global flags may appear after the subcommand
    app.add_option("--precision", cfg.precision, "working decimal precision (>= 30, default 50)");
    app.add_option("--pr-points", cfg.pr_grid.points,
                   "log-grid point count for the numeric positive-realness cross-check");
    app.add_option("--seed", cfg.seed, "seed for every randomized code path");
    app.add_option("--starts", cfg.fit_starts, "multistart count for fitting experiments");
    app.add_option("--out", cfg.output_dir, "output directory for generated files");
    app.add_flag("--json", cfg.json_output, "JSON reports on stdout");

    std::string coeffs, expr, in_file, name = "realization", net_file, out_file, claim;
    int instances = 50, trials = 0;

    CLI::App* check = app.add_subcommand("check", "positive-realness, R_k and case");
    check->add_option("--coeffs", coeffs, "a0,a1,d0,d1,k as exact rationals");
    check->add_option("--expr", expr, "admittance expression in s");
    check->add_option("--in", in_file, "JSON file {a0,a1,d0,d1,k}");

    CLI::App* synth = app.add_subcommand("synth", "construct and verify a realization");
    synth->add_option("--coeffs", coeffs, "a0,a1,d0,d1,k as exact rationals");
    synth->add_option("--expr", expr, "admittance expression in s");
    synth->add_option("--in", in_file, "JSON file {a0,a1,d0,d1,k}");
    synth->add_option("--name", name, "basename for the netlist file");

    CLI::App* verify = app.add_subcommand("verify", "recompute a netlist's admittance");
    verify->add_option("file", net_file, "netlist file")->required();

    CLI::App* dual = app.add_subcommand("dual", "frequency-inverse dual of coefficients or a netlist");
    dual->add_option("--coeffs", coeffs, "a0,a1,d0,d1,k as exact rationals");
    dual->add_option("--expr", expr, "admittance expression in s");
    dual->add_option("--in", in_file, "JSON file {a0,a1,d0,d1,k}");
    dual->add_option("file", net_file, "netlist file");
    dual->add_option("--out-file", out_file, "write the dual netlist here instead of stdout");

    CLI::App* enumerate_cmd = app.add_subcommand("enumerate", "run a statistical experiment");
    enumerate_cmd->add_option("claim", claim, "thm2 | lemma8 | lemma9 | lemma10 | lemma14")
        ->required();
    enumerate_cmd->add_option("--instances", instances, "number of sampled targets");
    enumerate_cmd->add_option("--trials", trials, "trial count (lemma9)");

    CLI11_PARSE(app, argc, argv);

    try {
        set_default_precision(cfg.precision);
        if (check->parsed()) return cmd_check(cfg, coeffs, expr, in_file);
        if (synth->parsed()) return cmd_synth(cfg, coeffs, expr, in_file, name);
        if (verify->parsed()) return cmd_verify(cfg, net_file);
        if (dual->parsed()) return cmd_dual(cfg, coeffs, expr, in_file, net_file, out_file);
        if (enumerate_cmd->parsed()) return cmd_enumerate(cfg, claim, instances, trials);
    } catch (const NotPositiveRealError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kNotPr;
    } catch (const VerificationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kVerificationFailure;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kInputError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kInputError;
    }
    return kInputError;
}
