#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

#include "rado/coloring.hpp"
#include "rado/core.hpp"

namespace rado {

/// A monochromatic solution: xs sorted ascending, sum(xs) + c = a*x0, and
/// every entry (including x0) carries `color` in the coloring that produced it.
struct Witness {
    std::vector<std::int64_t> xs;
    std::int64_t x0 = 0;
    Color color = Color::red;

    bool operator==(const Witness&) const = default;
};

inline bool is_solution(const std::vector<std::int64_t>& xs, std::int64_t x0,
                        const EquationParams& p) {
    p.validate();
    if (static_cast<std::int64_t>(xs.size()) != p.m)
        throw std::invalid_argument("is_solution: tuple arity does not match m");
    __int128 sum = p.c;
    for (std::int64_t x : xs) sum += x;
    return sum == static_cast<__int128>(p.a) * x0;
}

/// Layered subset-sum reachability over one color class S:
/// reach(j, s) holds when s is a sum of exactly j elements of S, elements
/// reusable. Rows are bit-parallel; adding a value v folds it in with
/// row[j] |= row[j-1] << v for ascending j, so repeated use of v is allowed.
class SumReachTable {
public:
    SumReachTable(std::int64_t m, std::int64_t max_sum)
        : m_(m), smax_(max_sum), words_(static_cast<std::size_t>(max_sum / 64 + 1)) {
        if (m < 1) throw std::domain_error("SumReachTable: m must be >= 1");
        if (max_sum < 0) throw std::domain_error("SumReachTable: max_sum must be >= 0");
        rows_.assign(static_cast<std::size_t>(m + 1) * words_, 0);
        rows_[0] = 1;  // layer 0 reaches exactly sum 0
    }

    std::int64_t layer_count() const noexcept { return m_ + 1; }
    std::int64_t max_sum() const noexcept { return smax_; }

    void add_value(std::int64_t v) {
        if (v < 1) throw std::domain_error("SumReachTable: values must be >= 1");
        for (std::int64_t j = 1; j <= m_; ++j)
            or_shifted(row(j), row(j - 1), v);
    }

    bool reach(std::int64_t layer, std::int64_t sum) const {
        if (layer < 0 || layer > m_ || sum < 0 || sum > smax_) return false;
        const std::uint64_t* r = row(layer);
        return (r[static_cast<std::size_t>(sum >> 6)] >> (sum & 63)) & 1;
    }

private:
    std::uint64_t* row(std::int64_t j) { return rows_.data() + static_cast<std::size_t>(j) * words_; }
    const std::uint64_t* row(std::int64_t j) const {
        return rows_.data() + static_cast<std::size_t>(j) * words_;
    }

    // dst |= src << shift, truncated at max_sum.
    void or_shifted(std::uint64_t* dst, const std::uint64_t* src, std::int64_t shift) {
        const auto word_shift = static_cast<std::size_t>(shift >> 6);
        const int bit_shift = static_cast<int>(shift & 63);
        if (word_shift >= words_) return;
        if (bit_shift == 0) {
            for (std::size_t i = words_; i-- > word_shift;)
                dst[i] |= src[i - word_shift];
        } else {
            for (std::size_t i = words_; i-- > word_shift;) {
                std::uint64_t w = src[i - word_shift] << bit_shift;
                if (i > word_shift)
                    w |= src[i - word_shift - 1] >> (64 - bit_shift);
                dst[i] |= w;
            }
        }
        // mask tail bits beyond max_sum so reach() stays within bounds
        const int tail = static_cast<int>((smax_ & 63) + 1);
        if (tail < 64) dst[words_ - 1] &= (std::uint64_t{1} << tail) - 1;
    }

    std::int64_t m_, smax_;
    std::size_t words_;
    std::vector<std::uint64_t> rows_;
};

namespace detail {

inline std::int64_t witness_sum_bound(const EquationParams& p, std::int64_t n) {
    // Targets are a*x0 - c for x0 <= n; never negative by construction.
    const std::int64_t hi = checked_add(checked_mul(p.a, n), -p.c);
    return hi > 0 ? hi : 0;
}

/// Would adding `cand` to the class behind `table` (current members
/// `members`, `cand` excluded) complete a solution that uses `cand`?
/// Splits on the number j of times cand appears among x1..xm and on whether
/// cand serves as x0; everything else must come from the existing members.
inline bool completes_solution(const SumReachTable& table,
                               const std::vector<std::int64_t>& members, std::int64_t cand,
                               const EquationParams& p) {
    auto usable = [&](std::int64_t x0, std::int64_t j_min) {
        const std::int64_t target = p.a * x0 - p.c;
        if (target < 0) return false;
        for (std::int64_t j = j_min; j <= p.m; ++j) {
            const std::int64_t rest = target - j * cand;
            if (rest < 0) break;
            if (table.reach(p.m - j, rest)) return true;
        }
        return false;
    };
    if (usable(cand, 0)) return true;
    for (std::int64_t x0 : members)
        if (usable(x0, 1)) return true;
    return false;
}

/// Greedy layer descent: the lexicographically smallest sorted multiset of
/// m members summing to target. Assumes reach(m, target).
inline std::vector<std::int64_t> reconstruct_sum(const SumReachTable& table,
                                                 const std::vector<std::int64_t>& members_ascending,
                                                 std::int64_t m, std::int64_t target) {
    std::vector<std::int64_t> xs;
    xs.reserve(static_cast<std::size_t>(m));
    std::int64_t rest = target;
    for (std::int64_t j = m; j >= 1; --j) {
        bool found = false;
        for (std::int64_t w : members_ascending) {
            if (w > rest) break;
            if (table.reach(j - 1, rest - w)) {
                xs.push_back(w);
                rest -= w;
                found = true;
                break;
            }
        }
        if (!found) throw std::logic_error("reconstruct_sum: reachability table inconsistent");
    }
    if (rest != 0) throw std::logic_error("reconstruct_sum: nonzero remainder");
    return xs;
}

}  // namespace detail

/// Decide whether `col` contains a monochromatic solution of the equation.
/// The returned witness is canonical: minimal x0, then lexicographically
/// minimal sorted xs; parallel and sequential callers get identical bytes.
inline std::optional<Witness> find_monochromatic_solution(const Coloring& col,
                                                          const EquationParams& p) {
    p.validate();
    const std::int64_t n = col.size();
    if (n == 0) return std::nullopt;
    const std::int64_t smax = detail::witness_sum_bound(p, n);

    std::array<std::vector<std::int64_t>, 2> members;
    std::array<SumReachTable, 2> tables{SumReachTable(p.m, smax), SumReachTable(p.m, smax)};
    for (std::int64_t v = 1; v <= n; ++v) {
        const auto cls = static_cast<std::size_t>(col.color(v));
        members[cls].push_back(v);
        tables[cls].add_value(v);
    }

    for (std::int64_t x0 = 1; x0 <= n; ++x0) {
        const auto cls = static_cast<std::size_t>(col.color(x0));
        const std::int64_t target = p.a * x0 - p.c;
        if (target < 0 || !tables[cls].reach(p.m, target)) continue;
        Witness w;
        w.xs = detail::reconstruct_sum(tables[cls], members[cls], p.m, target);
        w.x0 = x0;
        w.color = col.color(x0);
        return w;
    }
    return std::nullopt;
}

/// Incremental form: `last_assigned` was the most recent assignment and the
/// partial coloring was solution-free before it, so any monochromatic
/// solution among assigned values must use it. Equivalent in outcome to
/// running the full check on the assigned subset.
inline std::optional<Witness> find_monochromatic_solution_incremental(
    const PartialColoring& pc, const EquationParams& p, std::int64_t last_assigned) {
    p.validate();
    const auto cls_color = pc.color(last_assigned);
    if (!cls_color) throw std::logic_error("incremental check: last_assigned is unassigned");

    const std::int64_t n = pc.size();
    const std::int64_t smax = detail::witness_sum_bound(p, n);
    std::vector<std::int64_t> members;  // ascending, same class, without last_assigned
    SumReachTable table(p.m, smax);
    for (std::int64_t v = 1; v <= n; ++v) {
        if (v == last_assigned) continue;
        if (auto c = pc.color(v); c && *c == *cls_color) {
            members.push_back(v);
            table.add_value(v);
        }
    }
    if (!detail::completes_solution(table, members, last_assigned, p)) return std::nullopt;

    // A solution exists; produce the canonical one over the full class.
    table.add_value(last_assigned);
    members.insert(std::lower_bound(members.begin(), members.end(), last_assigned),
                   last_assigned);
    for (std::int64_t x0 : members) {
        const std::int64_t target = p.a * x0 - p.c;
        if (target < 0 || !table.reach(p.m, target)) continue;
        Witness w;
        w.xs = detail::reconstruct_sum(table, members, p.m, target);
        w.x0 = x0;
        w.color = *cls_color;
        return w;
    }
    throw std::logic_error("incremental check: completion reported but no witness found");
}

}  // namespace rado
