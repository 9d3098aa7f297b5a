#pragma once

#include <algorithm>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "rado/checker.hpp"
#include "rado/core.hpp"
#include "rado/formula.hpp"

namespace rado {

/// One deduction: the tuple (x1..xm | x0) is a solution whose entries, apart
/// from occurrences of `forced_value`, are all already known to carry the
/// opposite of `forced_color`; the forced value must then take `forced_color`
/// to avoid a monochromatic solution.
struct ChainStep {
    std::vector<std::int64_t> xs;
    std::int64_t x0 = 0;
    std::int64_t forced_value = 0;
    Color forced_color = Color::red;
};

/// A replayable upper-bound argument: assumptions, forcing steps, and a
/// terminal solution tuple whose entries are all the same known color.
struct ForcingChain {
    std::string name;
    EquationParams params;
    std::map<std::int64_t, Color> assumptions;
    std::vector<ChainStep> steps;
    std::vector<std::int64_t> contradiction_xs;
    std::int64_t contradiction_x0 = 0;
    std::optional<std::int64_t> claimed_r;
    std::string expected;  // "", "pass", or "fail:<reason>"
    std::string notes;
};

struct StepReport {
    std::size_t index = 0;
    bool arithmetic_ok = true;
    bool premise_ok = true;
    bool range_ok = true;
    std::string detail;

    bool ok() const noexcept { return arithmetic_ok && premise_ok && range_ok; }
};

struct ChainReport {
    std::vector<StepReport> steps;
    bool assumptions_range_ok = true;
    bool contradiction_arithmetic_ok = true;
    bool contradiction_mono_ok = true;
    bool contradiction_range_ok = true;
    std::optional<std::int64_t> range_bound;  // absent when no finite closed form applies
    std::string contradiction_detail;

    bool pass() const noexcept {
        for (const auto& s : steps)
            if (!s.ok()) return false;
        return assumptions_range_ok && contradiction_arithmetic_ok && contradiction_mono_ok &&
               contradiction_range_ok;
    }

    /// Category of the first failed check, in replay order:
    /// "arithmetic", "premise", "range", "contradiction", or "" if none.
    std::string first_failure() const {
        if (!assumptions_range_ok) return "range";
        for (const auto& s : steps) {
            if (!s.arithmetic_ok) return "arithmetic";
            if (!s.premise_ok) return "premise";
            if (!s.range_ok) return "range";
        }
        if (!contradiction_arithmetic_ok) return "arithmetic";
        if (!contradiction_mono_ok) return "contradiction";
        if (!contradiction_range_ok) return "range";
        return "";
    }
};

namespace detail {

/// Closed-form Rado number used for range-soundness, when one applies.
inline std::optional<std::int64_t> range_bound_for(const EquationParams& p) {
    if (p.c < 1) return std::nullopt;
    if (p.m == 1) {
        const RadoValue v = rado_linear(p.c, p.a);
        return v.is_finite() ? std::optional(v.value()) : std::nullopt;
    }
    if (p.a != 2) return std::nullopt;
    const RadoValue v = rado_number(p.m, p.c);
    return v.is_finite() ? std::optional(v.value()) : std::nullopt;
}

inline bool tuple_in_range(const std::vector<std::int64_t>& xs, std::int64_t x0,
                           std::int64_t bound) {
    for (std::int64_t x : xs)
        if (x > bound) return false;
    return x0 <= bound;
}

}  // namespace detail

/// Replay a chain, checking each step's arithmetic, color premises, and
/// range-soundness, and that the terminal tuple is a known-monochromatic
/// solution. Structural defects (arity, forced value missing from its tuple)
/// throw std::invalid_argument; verification failures go in the report.
inline ChainReport verify_chain(const ForcingChain& chain) {
    chain.params.validate();
    ChainReport report;
    report.range_bound = detail::range_bound_for(chain.params);

    std::map<std::int64_t, Color> known = chain.assumptions;
    for (const auto& [v, _] : known) {
        if (v < 1) throw std::invalid_argument("chain: assumption value below 1");
        if (report.range_bound && v > *report.range_bound) report.assumptions_range_ok = false;
    }

    for (std::size_t i = 0; i < chain.steps.size(); ++i) {
        const ChainStep& step = chain.steps[i];
        StepReport sr;
        sr.index = i;

        if (static_cast<std::int64_t>(step.xs.size()) != chain.params.m)
            throw std::invalid_argument("chain: step tuple arity does not match m");
        bool forced_present = step.forced_value == step.x0;
        for (std::int64_t x : step.xs) forced_present |= x == step.forced_value;
        if (!forced_present)
            throw std::invalid_argument("chain: forced value does not occur in its tuple");

        sr.arithmetic_ok = is_solution(step.xs, step.x0, chain.params);
        if (!sr.arithmetic_ok) sr.detail = "tuple does not satisfy the equation";

        const Color premise_color = opposite(step.forced_color);
        auto entry_ok = [&](std::int64_t x) {
            if (x == step.forced_value) return true;
            const auto it = known.find(x);
            return it != known.end() && it->second == premise_color;
        };
        for (std::int64_t x : step.xs)
            if (!entry_ok(x)) {
                sr.premise_ok = false;
                sr.detail = "entry " + std::to_string(x) + " is not known " +
                            color_name(premise_color);
            }
        if (!entry_ok(step.x0)) {
            sr.premise_ok = false;
            sr.detail = "entry " + std::to_string(step.x0) + " is not known " +
                        color_name(premise_color);
        }
        // A re-forcing must agree with what is already known.
        if (const auto it = known.find(step.forced_value);
            it != known.end() && it->second != step.forced_color) {
            sr.premise_ok = false;
            sr.detail = "forced value " + std::to_string(step.forced_value) +
                        " already carries the opposite color";
        }

        if (report.range_bound && !detail::tuple_in_range(step.xs, step.x0, *report.range_bound)) {
            sr.range_ok = false;
            sr.detail = "tuple references a value above R = " + std::to_string(*report.range_bound);
        }

        known.insert({step.forced_value, step.forced_color});
        report.steps.push_back(std::move(sr));
    }

    if (static_cast<std::int64_t>(chain.contradiction_xs.size()) != chain.params.m)
        throw std::invalid_argument("chain: contradiction arity does not match m");
    report.contradiction_arithmetic_ok =
        is_solution(chain.contradiction_xs, chain.contradiction_x0, chain.params);

    auto color_of = [&](std::int64_t x) -> std::optional<Color> {
        const auto it = known.find(x);
        return it == known.end() ? std::nullopt : std::optional(it->second);
    };
    const auto first_color = color_of(chain.contradiction_xs.empty() ? chain.contradiction_x0
                                                                     : chain.contradiction_xs[0]);
    bool mono = first_color.has_value();
    for (std::int64_t x : chain.contradiction_xs) mono = mono && color_of(x) == first_color;
    mono = mono && color_of(chain.contradiction_x0) == first_color;
    report.contradiction_mono_ok = mono;
    if (!mono) report.contradiction_detail = "terminal tuple is not known-monochromatic";

    if (report.range_bound &&
        !detail::tuple_in_range(chain.contradiction_xs, chain.contradiction_x0,
                                *report.range_bound)) {
        report.contradiction_range_ok = false;
        report.contradiction_detail =
            "terminal tuple references a value above R = " + std::to_string(*report.range_bound);
    }
    return report;
}

// ---------------------------------------------------------------------------
// Chain generators
// ---------------------------------------------------------------------------

/// Chain for m, c both even with 1..s red and s+1 blue: the all-ones tuple
/// forces (m+c)/2 blue, the mixed tuple forces x = s(m-2)/2 + m + c - 1 blue,
/// and the (s+1, ..., (m+c)/2, (m+c)/2 | x) solution closes. Requires
/// s <= (m+c)/2 - 1 (which also bounds x by R) and, for m >= 4, s >= 2 since
/// the mixed tuple premises 2 red.
inline ForcingChain generate_prefix_run_chain(std::int64_t m, std::int64_t c, std::int64_t s) {
    if (m < 2 || m % 2 != 0) throw std::domain_error("prefix_run_chain: m must be even, >= 2");
    if (c < 2 || c % 2 != 0) throw std::domain_error("prefix_run_chain: c must be even, >= 2");
    const std::int64_t half = (m + c) / 2;
    if (s < 1 || s > half - 1)
        throw std::domain_error("prefix_run_chain: requires 1 <= s <= (m+c)/2 - 1");
    if (m >= 4 && s < 2)
        throw std::domain_error("prefix_run_chain: requires s >= 2 when m >= 4 (2 must be red)");

    const std::int64_t x = s * (m - 2) / 2 + m + c - 1;

    ForcingChain chain;
    chain.name = "prefix-run m=" + std::to_string(m) + " c=" + std::to_string(c) +
                 " s=" + std::to_string(s);
    chain.params = EquationParams{m, c, 2};
    for (std::int64_t v = 1; v <= s; ++v) chain.assumptions[v] = Color::red;
    chain.assumptions[s + 1] = Color::blue;
    chain.claimed_r = rado_number(m, c).value();

    ChainStep ones;
    ones.xs.assign(static_cast<std::size_t>(m), 1);
    ones.x0 = half;
    ones.forced_value = half;
    ones.forced_color = Color::blue;
    chain.steps.push_back(std::move(ones));

    ChainStep mixed;
    mixed.xs.push_back(1);
    mixed.xs.insert(mixed.xs.end(), static_cast<std::size_t>((m - 2) / 2), 2);
    mixed.xs.insert(mixed.xs.end(), static_cast<std::size_t>((m - 2) / 2), s);
    mixed.xs.push_back(x);
    mixed.x0 = x;
    mixed.forced_value = x;
    mixed.forced_color = Color::blue;
    chain.steps.push_back(std::move(mixed));

    chain.contradiction_xs.assign(static_cast<std::size_t>(m - 2), s + 1);
    chain.contradiction_xs.push_back(half);
    chain.contradiction_xs.push_back(half);
    chain.contradiction_x0 = x;
    chain.expected = "pass";
    return chain;
}

/// The floor/ceiling mixture hitting an exact target sum: counts x of
/// floor((r-c)/(m-1)) and y of ceil((r-c)/(m-1)) with x + y = m - 1 and
/// floor*x + ceil*y = r - c. Swapping one floor summand for its ceiling
/// moves the sum by exactly one, so the target is always reachable.
struct FloorCeilSplit {
    std::int64_t floor_value = 0;
    std::int64_t ceil_value = 0;
    std::int64_t floor_count = 0;
    std::int64_t ceil_count = 0;
};

inline FloorCeilSplit floor_ceil_split(std::int64_t m, std::int64_t c, std::int64_t r) {
    if (m < 3 || m % 2 == 0) throw std::domain_error("floor_ceil_split: m must be odd, >= 3");
    if (r <= c) throw std::domain_error("floor_ceil_split: requires r > c");
    const std::int64_t q = r - c;
    FloorCeilSplit out;
    out.floor_value = floor_div(q, m - 1);
    out.ceil_value = ceil_div(q, m - 1);
    out.ceil_count = m - 1 - (c + out.ceil_value * (m - 1) - r);
    out.floor_count = m - 1 - out.ceil_count;
    if (out.floor_count < 0 || out.ceil_count < 0)
        throw std::domain_error("floor_ceil_split: negative count, hypothesis violated");
    return out;
}

// ---------------------------------------------------------------------------
// Chain documents
// ---------------------------------------------------------------------------

inline nlohmann::ordered_json chain_to_json(const ForcingChain& chain) {
    nlohmann::ordered_json j;
    if (!chain.name.empty()) j["name"] = chain.name;
    j["m"] = chain.params.m;
    j["c"] = chain.params.c;
    j["a"] = chain.params.a;
    nlohmann::ordered_json assumptions = nlohmann::ordered_json::object();
    for (const auto& [v, col] : chain.assumptions)
        assumptions[std::to_string(v)] = color_name(col);
    j["assumptions"] = std::move(assumptions);
    nlohmann::ordered_json steps = nlohmann::ordered_json::array();
    for (const auto& s : chain.steps) {
        nlohmann::ordered_json js;
        auto tuple = s.xs;
        tuple.push_back(s.x0);
        js["tuple"] = tuple;
        js["forces"] = {{"value", s.forced_value}, {"color", color_name(s.forced_color)}};
        steps.push_back(std::move(js));
    }
    j["steps"] = std::move(steps);
    auto contradiction = chain.contradiction_xs;
    contradiction.push_back(chain.contradiction_x0);
    j["contradiction"] = contradiction;
    if (chain.claimed_r) j["claimed_r"] = *chain.claimed_r;
    if (!chain.expected.empty()) j["expected"] = chain.expected;
    if (!chain.notes.empty()) j["notes"] = chain.notes;
    return j;
}

inline ForcingChain chain_from_json(const nlohmann::json& j) {
    ForcingChain chain;
    chain.name = j.value("name", "");
    chain.params = EquationParams{j.at("m").get<std::int64_t>(), j.at("c").get<std::int64_t>(),
                                  j.at("a").get<std::int64_t>()};
    for (const auto& [key, val] : j.at("assumptions").items())
        chain.assumptions[std::stoll(key)] = parse_color(val.get<std::string>());
    for (const auto& js : j.at("steps")) {
        ChainStep step;
        auto tuple = js.at("tuple").get<std::vector<std::int64_t>>();
        if (tuple.empty()) throw std::invalid_argument("chain: empty tuple");
        step.x0 = tuple.back();
        tuple.pop_back();
        step.xs = std::move(tuple);
        step.forced_value = js.at("forces").at("value").get<std::int64_t>();
        step.forced_color = parse_color(js.at("forces").at("color").get<std::string>());
        chain.steps.push_back(std::move(step));
    }
    auto contradiction = j.at("contradiction").get<std::vector<std::int64_t>>();
    if (contradiction.empty()) throw std::invalid_argument("chain: empty contradiction tuple");
    chain.contradiction_x0 = contradiction.back();
    contradiction.pop_back();
    chain.contradiction_xs = std::move(contradiction);
    if (j.contains("claimed_r")) chain.claimed_r = j.at("claimed_r").get<std::int64_t>();
    chain.expected = j.value("expected", "");
    chain.notes = j.value("notes", "");
    return chain;
}

inline ForcingChain load_chain(const std::filesystem::path& file) {
    std::ifstream in(file);
    if (!in) throw std::runtime_error("cannot open chain file: " + file.string());
    return chain_from_json(nlohmann::json::parse(in));
}

/// Load every *.json chain in `dir`, sorted by filename for determinism.
inline std::vector<ForcingChain> load_chain_corpus(const std::filesystem::path& dir) {
    std::vector<std::filesystem::path> files;
    for (const auto& entry : std::filesystem::directory_iterator(dir))
        if (entry.is_regular_file() && entry.path().extension() == ".json")
            files.push_back(entry.path());
    std::sort(files.begin(), files.end());
    std::vector<ForcingChain> out;
    out.reserve(files.size());
    for (const auto& f : files) out.push_back(load_chain(f));
    return out;
}

}  // namespace rado
