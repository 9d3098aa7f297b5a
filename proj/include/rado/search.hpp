#pragma once

#include <array>
#include <atomic>
#include <chrono>
#include <cstdint>
#include <limits>
#include <optional>
#include <thread>
#include <variant>
#include <vector>

#include "rado/checker.hpp"
#include "rado/coloring.hpp"
#include "rado/core.hpp"

namespace rado {

struct SearchBudget {
    std::int64_t max_n = 1'000'000;
    std::uint64_t max_nodes = std::numeric_limits<std::uint64_t>::max();
    double max_wall_seconds = std::numeric_limits<double>::infinity();
    int threads = 1;

    void validate() const {
        if (max_n < 1) throw std::domain_error("budget: max_n must be >= 1");
        if (max_nodes < 1) throw std::domain_error("budget: max_nodes must be >= 1");
        if (!(max_wall_seconds > 0)) throw std::domain_error("budget: max_wall_seconds must be > 0");
        if (threads < 1) throw std::domain_error("budget: threads must be >= 1");
    }
};

struct ValidColoring {
    Coloring coloring;
    bool operator==(const ValidColoring&) const = default;
};
struct NoValidColoring {
    std::uint64_t nodes_explored = 0;
    bool operator==(const NoValidColoring&) const = default;
};
struct BudgetExhausted {
    std::uint64_t nodes_explored = 0;
    bool operator==(const BudgetExhausted&) const = default;
};
using SearchOutcome = std::variant<ValidColoring, NoValidColoring, BudgetExhausted>;

namespace detail {

/// One node of the backtracking search: a partial coloring plus, per color
/// class, the member list and its layered sum-reachability table. Copied at
/// decision points; forced assignments mutate in place.
class SearchState {
public:
    SearchState(std::int64_t n, const EquationParams& p)
        : p_(p), pc_(n),
          tables_{SumReachTable(p.m, witness_sum_bound(p, n)),
                  SumReachTable(p.m, witness_sum_bound(p, n))} {}

    const PartialColoring& partial() const noexcept { return pc_; }
    bool complete() const noexcept { return pc_.assigned_count() == pc_.size(); }

    bool color_completes_solution(std::int64_t v, Color c) const {
        return completes_solution(tables_[idx(c)], members_[idx(c)], v, p_);
    }

    /// Returns false when the assignment would complete a monochromatic
    /// solution among assigned values; the state is unchanged in that case.
    bool assign(std::int64_t v, Color c) {
        if (color_completes_solution(v, c)) return false;
        pc_.assign(v, c);
        members_[idx(c)].push_back(v);
        tables_[idx(c)].add_value(v);
        return true;
    }

    /// One-step forced-color deduction iterated to fixpoint: a value whose
    /// candidate color would complete a solution is forced to the opposite
    /// color; both colors bad means contradiction.
    bool propagate() {
        bool changed = true;
        while (changed) {
            changed = false;
            for (std::int64_t v = 1; v <= pc_.size(); ++v) {
                if (pc_.is_assigned(v)) continue;
                const bool red_bad = color_completes_solution(v, Color::red);
                const bool blue_bad = color_completes_solution(v, Color::blue);
                if (red_bad && blue_bad) return false;
                if (red_bad || blue_bad) {
                    const Color forced = red_bad ? Color::blue : Color::red;
                    pc_.assign(v, forced);
                    members_[idx(forced)].push_back(v);
                    tables_[idx(forced)].add_value(v);
                    changed = true;
                }
            }
        }
        return true;
    }

private:
    static std::size_t idx(Color c) noexcept { return static_cast<std::size_t>(c); }

    EquationParams p_;
    PartialColoring pc_;
    std::array<std::vector<std::int64_t>, 2> members_;
    std::array<SumReachTable, 2> tables_;
};

struct SharedBudget {
    std::atomic<std::uint64_t> nodes{0};
    std::uint64_t max_nodes = std::numeric_limits<std::uint64_t>::max();
    std::chrono::steady_clock::time_point deadline{};
    bool has_deadline = false;
    std::atomic<bool> stop{false};

    /// Charge one decision; false when the budget is spent.
    bool charge() {
        if (stop.load(std::memory_order_relaxed)) return false;
        const std::uint64_t used = nodes.fetch_add(1, std::memory_order_relaxed) + 1;
        if (used > max_nodes ||
            (has_deadline && std::chrono::steady_clock::now() > deadline)) {
            stop.store(true, std::memory_order_relaxed);
            return false;
        }
        return true;
    }
};

enum class DfsResult { refuted, valid, exhausted };

/// Full depth-first search below `st` (already propagated, conflict-free,
/// incomplete). Branch order: smallest unassigned value, red before blue.
inline DfsResult dfs(const SearchState& st, SharedBudget& budget, Coloring& out) {
    const std::int64_t v = st.partial().first_unassigned();
    for (Color c : {Color::red, Color::blue}) {
        if (!budget.charge()) return DfsResult::exhausted;
        SearchState child = st;
        if (!child.assign(v, c)) continue;
        if (!child.propagate()) continue;
        if (child.complete()) {
            out = child.partial().to_coloring();
            return DfsResult::valid;
        }
        const DfsResult r = dfs(child, budget, out);
        if (r != DfsResult::refuted) return r;
    }
    return DfsResult::refuted;
}

/// A frontier entry for parallel exploration, in depth-first order: either a
/// subtree root still to explore or a leaf already resolved as valid.
struct FrontierEntry {
    std::optional<SearchState> subtree;
    std::optional<Coloring> resolved_valid;
};

inline void collect_frontier(const SearchState& st, int depth_left, SharedBudget& budget,
                             std::vector<FrontierEntry>& out, bool& exhausted) {
    if (exhausted) return;
    if (depth_left == 0) {
        out.push_back(FrontierEntry{st, std::nullopt});
        return;
    }
    const std::int64_t v = st.partial().first_unassigned();
    for (Color c : {Color::red, Color::blue}) {
        if (!budget.charge()) {
            exhausted = true;
            return;
        }
        SearchState child = st;
        if (!child.assign(v, c)) continue;
        if (!child.propagate()) continue;
        if (child.complete()) {
            out.push_back(FrontierEntry{std::nullopt, child.partial().to_coloring()});
            continue;
        }
        collect_frontier(child, depth_left - 1, budget, out, exhausted);
        if (exhausted) return;
    }
}

}  // namespace detail

/// Decide whether [1, n] admits a coloring free of monochromatic solutions.
/// Deterministic: 1 is fixed red (color swap is an automorphism), values are
/// decided in increasing order with red tried first, and parallel runs merge
/// subtree results in depth-first order, so the outcome is a pure function
/// of (n, params) for completed searches regardless of thread count.
inline SearchOutcome find_valid_coloring(std::int64_t n, const EquationParams& p,
                                         const SearchBudget& budget = {}) {
    p.validate();
    if (n < 1) throw std::domain_error("find_valid_coloring: n must be >= 1");
    budget.validate();

    detail::SharedBudget shared;
    shared.max_nodes = budget.max_nodes;
    if (budget.max_wall_seconds != std::numeric_limits<double>::infinity()) {
        shared.has_deadline = true;
        shared.deadline = std::chrono::steady_clock::now() +
                          std::chrono::duration_cast<std::chrono::steady_clock::duration>(
                              std::chrono::duration<double>(budget.max_wall_seconds));
    }

    auto checked_valid = [&](Coloring col) -> SearchOutcome {
        if (find_monochromatic_solution(col, p))
            throw std::logic_error("search: produced coloring fails the checker");
        return ValidColoring{std::move(col)};
    };

    detail::SearchState root(n, p);
    if (!root.assign(1, Color::red) || !root.propagate())
        return NoValidColoring{0};
    if (root.complete()) return checked_valid(root.partial().to_coloring());

    if (budget.threads == 1) {
        Coloring found;
        switch (detail::dfs(root, shared, found)) {
            case detail::DfsResult::valid: return checked_valid(std::move(found));
            case detail::DfsResult::refuted: return NoValidColoring{shared.nodes.load()};
            case detail::DfsResult::exhausted: break;
        }
        return BudgetExhausted{shared.nodes.load()};
    }

    // Parallel mode: enumerate subtree roots a few decisions deep, explore
    // them across workers, merge by subtree order rather than completion
    // order so outcomes match the sequential run.
    int depth = 1;
    while ((1 << depth) < 4 * budget.threads && depth < 24) ++depth;
    std::vector<detail::FrontierEntry> frontier;
    bool prefix_exhausted = false;
    detail::collect_frontier(root, depth, shared, frontier, prefix_exhausted);
    if (prefix_exhausted) return BudgetExhausted{shared.nodes.load()};

    enum class Slot : std::uint8_t { pending, refuted, valid, exhausted };
    std::vector<Slot> results(frontier.size(), Slot::pending);
    std::vector<Coloring> colorings(frontier.size());
    std::atomic<std::size_t> next{0};
    std::atomic<std::size_t> first_valid{std::numeric_limits<std::size_t>::max()};

    auto worker = [&] {
        for (;;) {
            const std::size_t i = next.fetch_add(1);
            if (i >= frontier.size()) return;
            if (i > first_valid.load()) {
                results[i] = Slot::refuted;  // irrelevant: a valid subtree precedes it
                continue;
            }
            auto& entry = frontier[i];
            if (entry.resolved_valid) {
                colorings[i] = *entry.resolved_valid;
                results[i] = Slot::valid;
            } else {
                Coloring found;
                switch (detail::dfs(*entry.subtree, shared, found)) {
                    case detail::DfsResult::valid:
                        colorings[i] = std::move(found);
                        results[i] = Slot::valid;
                        break;
                    case detail::DfsResult::refuted: results[i] = Slot::refuted; break;
                    case detail::DfsResult::exhausted: results[i] = Slot::exhausted; break;
                }
            }
            if (results[i] == Slot::valid) {
                std::size_t cur = first_valid.load();
                while (i < cur && !first_valid.compare_exchange_weak(cur, i)) {}
            }
        }
    };

    {
        std::vector<std::jthread> pool;
        pool.reserve(static_cast<std::size_t>(budget.threads));
        for (int i = 0; i < budget.threads; ++i) pool.emplace_back(worker);
    }

    for (std::size_t i = 0; i < frontier.size(); ++i) {
        if (results[i] == Slot::valid) return checked_valid(std::move(colorings[i]));
        if (results[i] == Slot::exhausted) return BudgetExhausted{shared.nodes.load()};
    }
    return NoValidColoring{shared.nodes.load()};
}

struct BruteResult {
    RadoValue value = RadoValue::unknown_above(0);
    std::optional<Coloring> certificate;  // last valid coloring seen (at value-1 when finite)
    std::uint64_t nodes = 0;
};

/// Exact Rado number by upward scan: validity at n is necessary at n+1, so
/// the first n with no valid coloring is the answer.
inline BruteResult rado_brute_certified(const EquationParams& p, const SearchBudget& budget = {}) {
    p.validate();
    budget.validate();
    BruteResult res;
    std::uint64_t nodes_used = 0;
    const auto start = std::chrono::steady_clock::now();
    for (std::int64_t n = 1; n <= budget.max_n; ++n) {
        SearchBudget remaining = budget;
        if (budget.max_nodes != std::numeric_limits<std::uint64_t>::max()) {
            if (nodes_used >= budget.max_nodes) {
                res.value = RadoValue::unknown_above(n - 1);
                res.nodes = nodes_used;
                return res;
            }
            remaining.max_nodes = budget.max_nodes - nodes_used;
        }
        if (budget.max_wall_seconds != std::numeric_limits<double>::infinity()) {
            const double elapsed =
                std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
            remaining.max_wall_seconds = budget.max_wall_seconds - elapsed;
            if (!(remaining.max_wall_seconds > 0)) {
                res.value = RadoValue::unknown_above(n - 1);
                res.nodes = nodes_used;
                return res;
            }
        }
        SearchOutcome outcome = find_valid_coloring(n, p, remaining);
        if (auto* valid = std::get_if<ValidColoring>(&outcome)) {
            res.certificate = std::move(valid->coloring);
            continue;
        }
        if (auto* refuted = std::get_if<NoValidColoring>(&outcome)) {
            nodes_used += refuted->nodes_explored;
            res.value = RadoValue::finite(n);
            res.nodes = nodes_used;
            return res;
        }
        nodes_used += std::get<BudgetExhausted>(outcome).nodes_explored;
        res.value = RadoValue::unknown_above(n - 1);
        res.nodes = nodes_used;
        return res;
    }
    res.value = RadoValue::unknown_above(budget.max_n);
    res.nodes = nodes_used;
    return res;
}

inline RadoValue rado_brute(const EquationParams& p, const SearchBudget& budget = {}) {
    return rado_brute_certified(p, budget).value;
}

/// Negative-c exploration at a = 2. Requires c > -m so that the all-ones
/// tuple does not trivialize every instance below the interesting range.
inline RadoValue explore_negative_c(std::int64_t m, std::int64_t c,
                                    const SearchBudget& budget = {}) {
    if (c >= 0) throw std::domain_error("explore_negative_c: c must be negative");
    if (c <= -m) throw std::domain_error("explore_negative_c: requires c > -m");
    return rado_brute(EquationParams{m, c, 2}, budget);
}

}  // namespace rado
