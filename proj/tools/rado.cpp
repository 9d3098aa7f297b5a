// Command-line surface for the rado-lab library: closed-form queries,
// brute-force runs with certificates, bulk tables, and verification of
// coloring, chain, and interval documents.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "rado/checker.hpp"
#include "rado/coloring.hpp"
#include "rado/continuous.hpp"
#include "rado/core.hpp"
#include "rado/formula.hpp"
#include "rado/proofs.hpp"
#include "rado/search.hpp"

namespace {

using nlohmann::ordered_json;

constexpr int exit_ok = 0;
constexpr int exit_disagreement = 1;
constexpr int exit_usage = 2;
constexpr int exit_budget = 3;

struct OutputOptions {
    std::string format = "text";
    std::string out_path;
};

void emit(const OutputOptions& opts, const std::string& text, const ordered_json& json_doc) {
    const std::string payload = opts.format == "json" ? json_doc.dump(2) + "\n" : text;
    if (opts.out_path.empty()) {
        std::cout << payload;
    } else {
        std::ofstream f(opts.out_path);
        if (!f) throw std::runtime_error("cannot write " + opts.out_path);
        f << payload;
    }
}

ordered_json rado_value_json(const rado::RadoValue& v) {
    if (v.is_finite()) return {{"kind", "finite"}, {"value", v.value()}};
    if (v.is_infinite())
        return {{"kind", "infinite"}, {"reason", rado::infinite_reason_name(v.reason())}};
    return {{"kind", "unknown_above"}, {"bound", v.bound()}};
}

ordered_json params_json(const rado::EquationParams& p) {
    return {{"m", p.m}, {"c", p.c}, {"a", p.a}};
}

ordered_json witness_json(const rado::Witness& w) {
    return {{"xs", w.xs}, {"x0", w.x0}, {"color", rado::color_name(w.color)}};
}

/// RADO_LAB_BUDGET_SECONDS caps the wall-clock budget of every command.
void apply_global_budget_cap(rado::SearchBudget& budget) {
    if (const char* env = std::getenv("RADO_LAB_BUDGET_SECONDS")) {
        const double cap = std::stod(env);
        if (cap > 0) budget.max_wall_seconds = std::min(budget.max_wall_seconds, cap);
    }
}

/// The closed form's opinion, when one applies to (m, c, a).
std::optional<rado::RadoValue> formula_opinion(const rado::EquationParams& p) {
    if (p.c < 1) return std::nullopt;
    if (p.m == 1) return rado::rado_linear(p.c, p.a);
    if (p.a == 2) return rado::rado_number(p.m, p.c);
    return std::nullopt;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

struct Range {
    std::int64_t lo = 0, hi = 0;
};

Range parse_range(const std::string& text) {
    const auto dots = text.find("..");
    Range r;
    if (dots == std::string::npos) {
        r.lo = r.hi = std::stoll(text);
    } else {
        r.lo = std::stoll(text.substr(0, dots));
        r.hi = std::stoll(text.substr(dots + 2));
    }
    if (r.lo > r.hi) throw std::invalid_argument("empty range: " + text);
    return r;
}

// ---------------------------------------------------------------------------

int cmd_formula(std::int64_t m, std::int64_t c, std::int64_t a, const OutputOptions& opts) {
    rado::RadoValue value = rado::RadoValue::unknown_above(0);
    if (m == 1) {
        value = rado::rado_linear(c, a);
    } else if (a == 2) {
        value = rado::rado_number(m, c);
    } else {
        throw std::domain_error("no closed form for m >= 2 with a != 2; use `brute`");
    }
    ordered_json j;
    j["command"] = "formula";
    j["params"] = params_json({m, c, a});
    j["result"] = rado_value_json(value);
    j["diagnostics"] = ordered_json::object();
    j["budget_used"] = ordered_json::object();
    emit(opts, value.str() + "\n", j);
    return exit_ok;
}

int cmd_brute(const rado::EquationParams& p, const rado::SearchBudget& budget,
              std::string cert_path, const OutputOptions& opts) {
    const auto res = rado::rado_brute_certified(p, budget);

    if (cert_path.empty())
        cert_path = "rado-cert-m" + std::to_string(p.m) + "-c" + std::to_string(p.c) + "-a" +
                    std::to_string(p.a) + ".json";
    bool wrote_cert = false;
    if (res.certificate || (res.value.is_finite() && res.value.value() == 1)) {
        const rado::Coloring cert = res.certificate ? *res.certificate : rado::Coloring(0);
        std::ofstream f(cert_path);
        if (!f) throw std::runtime_error("cannot write " + cert_path);
        f << cert.to_json().dump(2) << "\n";
        wrote_cert = true;
    }

    std::string text = res.value.str();
    if (res.value.is_unknown()) {
        if (const auto opinion = formula_opinion(p); opinion && opinion->is_infinite())
            text += " (formula: " + opinion->str() + ")";
    }
    text += "\n";
    if (wrote_cert) text += "certificate: " + cert_path + "\n";

    ordered_json j;
    j["command"] = "brute";
    j["params"] = params_json(p);
    j["result"] = rado_value_json(res.value);
    if (wrote_cert) j["certificate"] = cert_path;
    ordered_json diag = ordered_json::object();
    if (res.value.is_unknown()) {
        if (const auto opinion = formula_opinion(p))
            diag["formula"] = rado_value_json(*opinion);
    }
    j["diagnostics"] = diag;
    j["budget_used"] = {{"nodes", res.nodes}};
    emit(opts, text, j);
    return res.value.is_unknown() ? exit_budget : exit_ok;
}

int cmd_table(const Range& m_range, const Range& c_range, std::int64_t a,
              const rado::SearchBudget& budget, const OutputOptions& opts) {
    struct Row {
        std::int64_t m, c;
        std::string formula, brute, agree;
        std::uint64_t nodes;
        double seconds;
    };
    std::vector<Row> rows;
    bool any_disagreement = false;

    for (std::int64_t m = m_range.lo; m <= m_range.hi; ++m) {
        for (std::int64_t c = c_range.lo; c <= c_range.hi; ++c) {
            const rado::EquationParams p{m, c, a};
            const auto opinion = formula_opinion(p);
            const auto start = std::chrono::steady_clock::now();
            const auto brute = rado::rado_brute_certified(p, budget);
            const double seconds =
                std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();

            std::string agree;
            if (!opinion) {
                agree = "n/a";
            } else if (opinion->is_finite()) {
                if (brute.value.is_finite())
                    agree = brute.value == *opinion ? "yes" : "no";
                else
                    agree = "budget";
            } else {
                agree = brute.value.is_unknown() ? "yes" : "no";
            }
            if (agree == "no") any_disagreement = true;
            rows.push_back({m, c, opinion ? opinion->str() : "n/a", brute.value.str(), agree,
                            brute.nodes, seconds});
        }
    }

    std::string text;
    if (opts.format == "csv") {
        text = "m,c,formula,brute,agree,nodes,seconds\n";
        for (const auto& r : rows) {
            char buf[64];
            std::snprintf(buf, sizeof buf, "%.3f", r.seconds);
            text += std::to_string(r.m) + "," + std::to_string(r.c) + "," + r.formula + "," +
                    r.brute + "," + r.agree + "," + std::to_string(r.nodes) + "," + buf + "\n";
        }
    } else {
        for (const auto& r : rows) {
            char buf[160];
            std::snprintf(buf, sizeof buf,
                          "m=%-3lld c=%-3lld formula=%-22s brute=%-22s agree=%-6s nodes=%llu\n",
                          static_cast<long long>(r.m), static_cast<long long>(r.c),
                          r.formula.c_str(), r.brute.c_str(), r.agree.c_str(),
                          static_cast<unsigned long long>(r.nodes));
            text += buf;
        }
    }

    ordered_json jrows = ordered_json::array();
    for (const auto& r : rows)
        jrows.push_back({{"m", r.m},
                         {"c", r.c},
                         {"formula", r.formula},
                         {"brute", r.brute},
                         {"agree", r.agree},
                         {"nodes", r.nodes},
                         {"seconds", r.seconds}});
    ordered_json j;
    j["command"] = "table";
    j["params"] = {{"m", std::to_string(m_range.lo) + ".." + std::to_string(m_range.hi)},
                   {"c", std::to_string(c_range.lo) + ".." + std::to_string(c_range.hi)},
                   {"a", a}};
    j["result"] = jrows;
    j["diagnostics"] = ordered_json::object();
    j["budget_used"] = ordered_json::object();
    emit(opts, text, j);
    return any_disagreement ? exit_disagreement : exit_ok;
}

int cmd_check_coloring(const std::string& file, const rado::EquationParams& p,
                       const OutputOptions& opts) {
    const rado::Coloring coloring = rado::Coloring::parse(read_file(file));
    const auto witness = rado::find_monochromatic_solution(coloring, p);

    ordered_json j;
    j["command"] = "check-coloring";
    j["params"] = params_json(p);
    j["result"] = witness ? ordered_json{{"witness", witness_json(*witness)}}
                          : ordered_json{{"witness", nullptr}};
    j["diagnostics"] = {{"n", coloring.size()}};
    j["budget_used"] = ordered_json::object();

    if (!witness) {
        emit(opts, "no monochromatic solution\n", j);
        return exit_ok;
    }
    std::string text = "monochromatic solution: (";
    for (std::size_t i = 0; i < witness->xs.size(); ++i)
        text += (i ? ", " : "") + std::to_string(witness->xs[i]);
    text += " | " + std::to_string(witness->x0) + ") all " +
            rado::color_name(witness->color) + "\n";
    emit(opts, text, j);
    return exit_disagreement;
}

int cmd_chain_verify(const std::string& file, const OutputOptions& opts) {
    const rado::ForcingChain chain = rado::load_chain(file);
    const rado::ChainReport report = rado::verify_chain(chain);

    std::string text;
    ordered_json jsteps = ordered_json::array();
    for (const auto& s : report.steps) {
        jsteps.push_back({{"index", s.index},
                          {"arithmetic", s.arithmetic_ok},
                          {"premises", s.premise_ok},
                          {"range", s.range_ok},
                          {"detail", s.detail}});
        if (!s.ok())
            text += "step " + std::to_string(s.index + 1) + ": " + s.detail + "\n";
    }
    if (!report.contradiction_arithmetic_ok || !report.contradiction_mono_ok ||
        !report.contradiction_range_ok)
        text += "contradiction: " + report.contradiction_detail + "\n";
    text += report.pass() ? "PASS\n" : "FAIL (" + report.first_failure() + ")\n";

    ordered_json j;
    j["command"] = "chain-verify";
    j["params"] = params_json(chain.params);
    j["result"] = {{"pass", report.pass()}, {"first_failure", report.first_failure()}};
    j["diagnostics"] = {{"steps", jsteps},
                        {"contradiction",
                         {{"arithmetic", report.contradiction_arithmetic_ok},
                          {"monochromatic", report.contradiction_mono_ok},
                          {"range", report.contradiction_range_ok}}}};
    j["budget_used"] = ordered_json::object();
    emit(opts, text, j);
    return report.pass() ? exit_ok : exit_disagreement;
}

int cmd_chain_corpus(const std::string& dir, const OutputOptions& opts) {
    const auto corpus = rado::load_chain_corpus(dir);
    std::string text;
    ordered_json jrows = ordered_json::array();
    bool all_as_expected = true;
    for (const auto& chain : corpus) {
        const auto report = rado::verify_chain(chain);
        const std::string actual =
            report.pass() ? "pass" : "fail:" + report.first_failure();
        const std::string expected = chain.expected.empty() ? "pass" : chain.expected;
        const bool ok = actual == expected;
        all_as_expected = all_as_expected && ok;
        text += std::string(ok ? "ok   " : "BAD  ") + chain.name + " [" + actual + "]\n";
        jrows.push_back({{"name", chain.name}, {"expected", expected}, {"actual", actual}});
    }
    text += all_as_expected ? "all chains behave as recorded\n" : "corpus mismatch\n";
    ordered_json j;
    j["command"] = "chain-corpus";
    j["params"] = {{"dir", dir}};
    j["result"] = {{"as_recorded", all_as_expected}, {"chains", jrows}};
    j["diagnostics"] = ordered_json::object();
    j["budget_used"] = ordered_json::object();
    emit(opts, text, j);
    return all_as_expected ? exit_ok : exit_disagreement;
}

int cmd_continuous_verify(const std::string& c_text, const std::string& a_text,
                          std::int64_t k_max, const OutputOptions& opts) {
    const rado::Rational c(c_text), a(a_text);
    std::string text;
    ordered_json checks = ordered_json::array();
    bool all_pass = true;

    auto record = [&](const std::string& name, const rado::VerificationReport& report) {
        all_pass = all_pass && report.pass();
        text += name + ": " + (report.pass() ? "PASS" : "FAIL") + "\n";
        ordered_json failed = ordered_json::array();
        for (auto k : report.failed_ks()) failed.push_back(k);
        checks.push_back({{"check", name}, {"pass", report.pass()}, {"failed_k", failed}});
    };

    if (a == 1) {
        record("translation-chain", rado::verify_translation_chain(c, k_max));
    } else {
        record("interval-chain", rado::verify_interval_chain(c, a, k_max));
        using boost::multiprecision::denominator;
        using boost::multiprecision::numerator;
        if (denominator(c) == 1 && denominator(a) == 1) {
            const auto ci = static_cast<std::int64_t>(numerator(c));
            const auto ai = static_cast<std::int64_t>(numerator(a));
            if (ci % (ai - 1) != 0)
                record("discrete-blocks", rado::verify_discrete_blocks(ci, ai, k_max));
            else
                text += "discrete-blocks: skipped ((a-1) divides c, the finite case)\n";
        }
    }

    ordered_json j;
    j["command"] = "continuous-verify";
    j["params"] = {{"c", c.str()}, {"a", a.str()}, {"k_max", k_max}};
    j["result"] = {{"pass", all_pass}, {"checks", checks}};
    j["diagnostics"] = ordered_json::object();
    j["budget_used"] = ordered_json::object();
    emit(opts, text, j);
    return all_pass ? exit_ok : exit_disagreement;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact computation toolkit for 2-color Rado numbers of x1+...+xm+c = a*x0"};
    app.require_subcommand(1);

    OutputOptions opts;
    rado::EquationParams params;
    rado::SearchBudget budget;
    budget.max_n = 200;
    std::string file, cert_path, chain_dir = "data/chains";
    std::string m_range_text = "2..6", c_range_text = "1..8";
    std::string c_rational = "1", a_rational = "2";
    std::int64_t k_max = 64;

    auto add_output = [&](CLI::App* cmd, bool allow_csv = false) {
        cmd->add_option("--format", opts.format, "output format")
            ->check(CLI::IsMember(allow_csv ? std::vector<std::string>{"text", "json", "csv"}
                                            : std::vector<std::string>{"text", "json"}));
        cmd->add_option("--out", opts.out_path, "write output to this file");
    };
    auto add_budget = [&](CLI::App* cmd) {
        cmd->add_option("--max-n", budget.max_n, "largest n to scan");
        cmd->add_option("--max-nodes", budget.max_nodes, "decision budget");
        cmd->add_option("--max-seconds", budget.max_wall_seconds, "wall-clock budget");
        cmd->add_option("--threads", budget.threads, "worker threads");
    };

    auto* formula = app.add_subcommand("formula", "closed-form Rado number");
    formula->add_option("--m", params.m)->required();
    formula->add_option("--c", params.c)->required();
    formula->add_option("--a", params.a);
    add_output(formula);

    auto* brute = app.add_subcommand("brute", "exact Rado number by exhaustive search");
    brute->add_option("--m", params.m)->required();
    brute->add_option("--c", params.c)->required();
    brute->add_option("--a", params.a);
    brute->add_option("--cert", cert_path, "certificate file for the last valid coloring");
    add_budget(brute);
    add_output(brute);

    auto* table = app.add_subcommand("table", "formula vs. search over a grid");
    table->add_option("--m", m_range_text, "m or lo..hi");
    table->add_option("--c", c_range_text, "c or lo..hi");
    table->add_option("--a", params.a);
    add_budget(table);
    add_output(table, true);

    auto* check = app.add_subcommand("check-coloring", "search a coloring file for solutions");
    check->add_option("file", file)->required();
    check->add_option("--m", params.m)->required();
    check->add_option("--c", params.c)->required();
    check->add_option("--a", params.a);
    add_output(check);

    auto* chain = app.add_subcommand("chain", "forcing-chain documents");
    chain->require_subcommand(1);
    auto* chain_verify = chain->add_subcommand("verify", "replay and check one chain");
    chain_verify->add_option("file", file)->required();
    add_output(chain_verify);
    auto* chain_corpus = chain->add_subcommand("corpus", "check every chain in a directory");
    chain_corpus->add_option("--dir", chain_dir, "chain directory");
    add_output(chain_corpus);

    auto* continuous = app.add_subcommand("continuous", "exact rational interval identities");
    continuous->require_subcommand(1);
    auto* cont_verify = continuous->add_subcommand("verify", "interval/translation/block checks");
    cont_verify->add_option("--c", c_rational)->required();
    cont_verify->add_option("--a", a_rational);
    cont_verify->add_option("--k-max", k_max);
    add_output(cont_verify);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return exit_usage;
    }

    try {
        apply_global_budget_cap(budget);
        if (formula->parsed()) return cmd_formula(params.m, params.c, params.a, opts);
        if (brute->parsed()) return cmd_brute(params, budget, cert_path, opts);
        if (table->parsed())
            return cmd_table(parse_range(m_range_text), parse_range(c_range_text), params.a,
                             budget, opts);
        if (check->parsed()) return cmd_check_coloring(file, params, opts);
        if (chain_verify->parsed()) return cmd_chain_verify(file, opts);
        if (chain_corpus->parsed()) return cmd_chain_corpus(chain_dir, opts);
        if (cont_verify->parsed()) return cmd_continuous_verify(c_rational, a_rational, k_max, opts);
        std::cerr << "no command selected\n";
        return exit_usage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_usage;
    }
}
