#include <chrono>
#include <cstdint>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "isopieri/field.hpp"
#include "isopieri/pieri_engine.hpp"
#include "isopieri/schur_oracle.hpp"
#include "isopieri/shifted_shapes.hpp"
#include "isopieri/verify.hpp"

using namespace isopieri;
using nlohmann::json;

namespace {

constexpr int kOk = 0;
constexpr int kFailed = 1;
constexpr int kUsage = 2;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::vector<int> parse_list(const std::string& text, const std::string& flag) {
    std::vector<int> out;
    std::stringstream in(text);
    std::string item;
    while (std::getline(in, item, ',')) {
        std::size_t used = 0;
        int value = 0;
        try {
            value = std::stoi(item, &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (used == 0 || used != item.size()) throw UsageError(flag + ": '" + item + "' is not an integer");
        out.push_back(value);
    }
    if (out.empty()) throw UsageError(flag + " is empty");
    return out;
}

// Exactly one of the signed list and the positive-parts shorthand.
SignedSequence read_sequence(int n, const std::string& full, const std::string& pos, const std::string& name) {
    if (full.empty() == pos.empty())
        throw UsageError("give exactly one of --" + name + " and --" + name + "-pos");
    if (!full.empty()) return SignedSequence::validate(n, parse_list(full, "--" + name));
    if (pos == "none") return SignedSequence::from_positive(n, {});
    return SignedSequence::from_positive(n, parse_list(pos, "--" + name + "-pos"));
}

std::vector<Family> read_families(const std::string& text) {
    if (text == "both") return {Family::B, Family::C};
    return {parse_family(text)};
}

std::string class_name(Family f) { return f == Family::B ? "P" : "Q"; }
std::string special_name(Family f) { return f == Family::B ? "p" : "q"; }

std::string render_expansion(const ClassExpansion& e) {
    if (e.empty()) return "0";
    std::string out;
    for (const auto& [lambda, c] : e.ordered_terms()) {
        if (!out.empty()) out += " + ";
        if (c != 1) out += c.get_str() + " ";
        out += class_name(e.family()) + "_" + lambda.to_string();
    }
    return out;
}

void print(const json& j, bool as_json, const std::string& text) {
    if (as_json)
        std::cout << j.dump(2) << "\n";
    else
        std::cout << text;
}

struct ProductArgs {
    std::string family = "both";
    int n = 0;
    std::string mu;
    std::string mu_pos;
    int m = 0;
};

void add_product_options(CLI::App* cmd, ProductArgs& a) {
    cmd->add_option("--family", a.family, "B, C or both")->check(CLI::IsMember({"B", "C", "both"}));
    cmd->add_option("--n", a.n, "rank")->required()->check(CLI::PositiveNumber);
    cmd->add_option("--mu", a.mu, "signed sequence, e.g. 3,2,-1,-4");
    cmd->add_option("--mu-pos", a.mu_pos, "positive parts only, e.g. 3,2 (or 'none')");
    cmd->add_option("--m", a.m, "degree of the special class")->required();
}

int run_product(const ProductArgs& a, bool as_json, bool use_oracle) {
    auto mu = read_sequence(a.n, a.mu, a.mu_pos, "mu");
    json out = {{"schema", "1"}, {"command", use_oracle ? "expand-oracle" : "pieri"}};
    out["expansions"] = json::array();
    std::string text;
    SchurOracle oracle;
    for (Family f : read_families(a.family)) {
        ClassExpansion e = use_oracle ? oracle.product(f, mu, a.m) : pieri(f, mu, a.m);
        json j = expansion_json(e);
        j["mu"] = mu.entries();
        j["m"] = a.m;
        if (use_oracle) j["matches_rule"] = e == pieri(f, mu, a.m);
        out["expansions"].push_back(j);
        text += std::string(to_string(f)) + " n=" + std::to_string(a.n) + ": " + class_name(f) + "_" +
                mu.to_string() + " * " + special_name(f) + "_" + std::to_string(a.m) + " = " + render_expansion(e) +
                "\n";
    }
    print(out, as_json, text);
    return kOk;
}

struct DiagramArgs {
    int n = 0;
    std::string mu, mu_pos, lambda, lambda_pos;
};

std::string join(const std::vector<int>& xs) {
    std::string out;
    for (int x : xs) out += (out.empty() ? "" : ",") + std::to_string(x);
    return out;
}

int run_diagram(const DiagramArgs& a, bool as_json) {
    auto mu = read_sequence(a.n, a.mu, a.mu_pos, "mu");
    auto lambda = read_sequence(a.n, a.lambda, a.lambda_pos, "lambda");
    if (!bruhat_leq(mu, lambda)) throw UsageError("mu is not below lambda");
    auto s = skew(mu, lambda);
    auto c = counts(s);
    std::string picture = render_diagram(s);

    json comps = json::array();
    std::string text = picture;
    for (std::size_t i = 0; i < s.components.size(); ++i) {
        const auto& d = s.components[i];
        char label = static_cast<char>('a' + static_cast<int>(i % 26));
        comps.push_back({{"label", std::string(1, label)},
                         {"rows", d.rows},
                         {"columns", d.columns},
                         {"col_set", d.col_set},
                         {"boxes", d.boxes.size()},
                         {"meets_first_column", d.meets_first_column}});
        text += std::string(1, label) + ": rows " + join(d.rows) + ", columns " + join(d.columns) + ", col set " +
                join(d.col_set) + (d.meets_first_column ? ", meets column 1" : "") + "\n";
    }
    text += "fixed rows: " + (s.fixed_indices.empty() ? std::string("none") : join(s.fixed_indices)) + "\n";
    text += "delta=" + std::to_string(c.delta) + " epsilon=" + std::to_string(c.epsilon) +
            " phi=" + std::to_string(c.phi) + " psi=" + std::to_string(c.psi) +
            " skew_row=" + (is_skew_row(s) ? "yes" : "no") + "\n";

    std::vector<std::string> rows;
    std::stringstream in(picture);
    for (std::string line; std::getline(in, line);) rows.push_back(line);
    json out = {{"schema", "1"},
                {"command", "diagram"},
                {"n", a.n},
                {"mu", mu.entries()},
                {"lambda", lambda.entries()},
                {"rows", rows},
                {"components", comps},
                {"fixed_rows", s.fixed_indices},
                {"zero_is_fixed", s.zero_is_fixed},
                {"counts", {{"delta", c.delta}, {"epsilon", c.epsilon}, {"phi", c.phi}, {"psi", c.psi}}},
                {"skew_row", is_skew_row(s)},
                {"boxes", codim(lambda) - codim(mu)}};
    print(out, as_json, text);
    return kOk;
}

// "lemma22" is accepted as an alias of column-counts.
const std::vector<std::string> kSuites{"pieri-oracle",   "duality",       "triple", "column-counts", "lemma22", "fixtures",
                                       "transfer",       "reconstruction", "commutativity", "all"};

VerifyReport run_suite(const std::string& suite, const VerifyOptions& opt) {
    if (suite == "pieri-oracle") return verify_pieri_oracle(opt);
    if (suite == "duality") return verify_duality(opt);
    if (suite == "triple") return verify_triple(opt);
    if (suite == "column-counts" || suite == "lemma22") return verify_column_counts(opt);
    if (suite == "fixtures") return verify_fixtures(opt);
    if (suite == "transfer") return verify_transfer(opt);
    if (suite == "reconstruction") return verify_reconstruction(opt);
    return verify_commutativity(opt);
}

struct VerifyArgs {
    std::string suite;
    std::string family = "both";
    int n = 0;
    std::uint32_t p = 0;
    std::uint64_t seed = 1;
    int retries = 20;
    std::uint64_t budget = 2'000'000;
    int samples = 0;
    bool extended = false;
};

int run_verify(const VerifyArgs& a, bool as_json, bool verbose) {
    if (a.p != 0) PrimeField check(a.p);  // rejects even or composite p up front
    VerifyOptions opt;
    opt.seed = a.seed;
    opt.retries = a.retries;
    opt.budget = a.budget;
    opt.extended = a.extended;
    opt.families = read_families(a.family);
    opt.n_max = a.n;
    opt.p = a.p;
    opt.samples = a.samples;

    std::vector<std::string> suites;
    if (a.suite == "all") {
        for (const auto& s : kSuites)
            if (s != "all" && s != "lemma22") suites.push_back(s);
    } else {
        suites.push_back(a.suite);
    }

    json reports = json::array();
    bool passed = true;
    std::string text;
    for (const auto& name : suites) {
        auto start = std::chrono::steady_clock::now();
        auto r = run_suite(name, opt);
        if (verbose) {
            std::chrono::duration<double> took = std::chrono::steady_clock::now() - start;
            std::cerr << name << ": " << took.count() << " s\n";
        }
        passed = passed && r.passed;
        reports.push_back(r.to_json());
        text += r.name + ": " + (r.passed ? "PASS" : "FAIL") + " (" + std::to_string(r.instances) + " instances, " +
                std::to_string(r.failure_count) + " failures)\n";
        for (const auto& f : r.failures) text += "  " + f + "\n";
        if (verbose) text += "  " + r.details.dump() + "\n";
    }
    json families = json::array();
    for (Family f : opt.families) families.push_back(std::string(to_string(f)));
    json out = {{"schema", "1"},
                {"command", "verify"},
                {"suite", a.suite},
                {"config",
                 {{"seed", a.seed},
                  {"retries", a.retries},
                  {"budget", a.budget},
                  {"extended", a.extended},
                  {"families", families},
                  {"n", a.n},
                  {"p", a.p},
                  {"samples", a.samples}}},
                {"passed", passed},
                {"reports", reports}};
    print(out, as_json, text);
    return passed ? kOk : kFailed;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Pieri-type multiplication in maximal isotropic Grassmannians"};
    app.require_subcommand(1);
    bool as_json = false;
    bool verbose = false;
    app.add_flag("--json", as_json, "machine-readable output (schema 1)");
    app.add_flag("-v,--verbose", verbose, "timings on stderr and report details");

    ProductArgs pieri_args, oracle_args;
    auto* pieri_cmd = app.add_subcommand("pieri", "expand P_mu * p_m (B) or Q_mu * q_m (C) by the Pieri rule");
    add_product_options(pieri_cmd, pieri_args);
    auto* oracle_cmd = app.add_subcommand("expand-oracle", "the same product through symmetric functions");
    add_product_options(oracle_cmd, oracle_args);

    DiagramArgs diagram_args;
    auto* diagram_cmd = app.add_subcommand("diagram", "draw lambda/mu with its components");
    diagram_cmd->add_option("--n", diagram_args.n, "rank")->required()->check(CLI::PositiveNumber);
    diagram_cmd->add_option("--mu", diagram_args.mu, "signed sequence");
    diagram_cmd->add_option("--mu-pos", diagram_args.mu_pos, "positive parts only (or 'none')");
    diagram_cmd->add_option("--lambda", diagram_args.lambda, "signed sequence");
    diagram_cmd->add_option("--lambda-pos", diagram_args.lambda_pos, "positive parts only (or 'none')");

    VerifyArgs verify_args;
    auto* verify_cmd = app.add_subcommand("verify", "run a verification suite");
    verify_cmd->add_option("suite", verify_args.suite, "which suite")->required()->check(CLI::IsMember(kSuites));
    verify_cmd->add_option("--family", verify_args.family, "B, C or both")
        ->check(CLI::IsMember({"B", "C", "both"}));
    verify_cmd->add_option("--n", verify_args.n, "largest rank (default depends on the suite)")
        ->check(CLI::PositiveNumber);
    verify_cmd->add_option("--p", verify_args.p, "odd prime for finite-field suites");
    verify_cmd->add_option("--seed", verify_args.seed, "root seed")->envname("ISOPIERI_SEED");
    verify_cmd->add_option("--retries", verify_args.retries, "resamples of K per case")
        ->check(CLI::NonNegativeNumber);
    verify_cmd->add_option("--budget", verify_args.budget, "cap on enumerated subspaces or points")
        ->check(CLI::PositiveNumber);
    verify_cmd->add_option("--samples", verify_args.samples, "samples per shape (default depends on the suite)")
        ->check(CLI::PositiveNumber);
    verify_cmd->add_flag("--extended", verify_args.extended, "include the rank-four enumerations");

    for (auto* cmd : {pieri_cmd, oracle_cmd, diagram_cmd, verify_cmd}) {
        cmd->add_flag("--json", as_json, "machine-readable output (schema 1)");
        cmd->add_flag("-v,--verbose", verbose, "timings on stderr and report details");
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kOk : kUsage;
    }

    try {
        if (*pieri_cmd) return run_product(pieri_args, as_json, false);
        if (*oracle_cmd) return run_product(oracle_args, as_json, true);
        if (*diagram_cmd) return run_diagram(diagram_args, as_json);
        return run_verify(verify_args, as_json, verbose);
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return e.code() == Errc::BudgetExceeded || e.code() == Errc::NeverStabilized ? kFailed : kUsage;
    }
}
