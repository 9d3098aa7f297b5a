#pragma once

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "rado/core.hpp"
#include "rado/formula.hpp"

namespace rado {

/// A total 2-coloring of [1, n], packed one bit per integer.
/// n = 0 is the valid empty coloring (degenerate domains).
class Coloring {
public:
    Coloring() = default;

    explicit Coloring(std::int64_t n, Color fill = Color::red) : n_(n) {
        if (n < 0) throw std::domain_error("Coloring: n must be >= 0");
        bits_.assign(static_cast<std::size_t>((n + 63) / 64),
                     fill == Color::blue ? ~std::uint64_t{0} : 0);
    }

    std::int64_t size() const noexcept { return n_; }

    Color color(std::int64_t v) const {
        check_range(v);
        const std::uint64_t w = bits_[static_cast<std::size_t>((v - 1) >> 6)];
        return (w >> ((v - 1) & 63)) & 1 ? Color::blue : Color::red;
    }

    void set(std::int64_t v, Color c) {
        check_range(v);
        const std::uint64_t mask = std::uint64_t{1} << ((v - 1) & 63);
        auto& w = bits_[static_cast<std::size_t>((v - 1) >> 6)];
        if (c == Color::blue) w |= mask;
        else w &= ~mask;
    }

    std::vector<std::int64_t> values_with(Color c) const {
        std::vector<std::int64_t> out;
        for (std::int64_t v = 1; v <= n_; ++v)
            if (color(v) == c) out.push_back(v);
        return out;
    }

    /// Compact form: position i holds the color of i+1, 'R' or 'B'.
    std::string compact() const {
        std::string s;
        s.reserve(static_cast<std::size_t>(n_));
        for (std::int64_t v = 1; v <= n_; ++v) s += color(v) == Color::red ? 'R' : 'B';
        return s;
    }

    nlohmann::ordered_json to_json() const {
        nlohmann::ordered_json j;
        j["n"] = n_;
        j["red"] = values_with(Color::red);
        j["blue"] = values_with(Color::blue);
        return j;
    }

    static Coloring from_json(const nlohmann::json& j) {
        const std::int64_t n = j.at("n").get<std::int64_t>();
        Coloring out(n);
        std::vector<bool> seen(static_cast<std::size_t>(n) + 1, false);
        auto take = [&](const char* key, Color c) {
            for (const auto& e : j.at(key)) {
                const std::int64_t v = e.get<std::int64_t>();
                if (v < 1 || v > n) throw std::invalid_argument("coloring: value out of [1,n]");
                if (seen[static_cast<std::size_t>(v)])
                    throw std::invalid_argument("coloring: value listed twice");
                seen[static_cast<std::size_t>(v)] = true;
                out.set(v, c);
            }
        };
        take("red", Color::red);
        take("blue", Color::blue);
        for (std::int64_t v = 1; v <= n; ++v)
            if (!seen[static_cast<std::size_t>(v)])
                throw std::invalid_argument("coloring: red and blue must partition [1,n]");
        return out;
    }

    static Coloring from_compact(const std::string& s) {
        Coloring out(static_cast<std::int64_t>(s.size()));
        for (std::size_t i = 0; i < s.size(); ++i) {
            const char ch = s[i];
            if (ch == 'R' || ch == 'r') out.set(static_cast<std::int64_t>(i) + 1, Color::red);
            else if (ch == 'B' || ch == 'b') out.set(static_cast<std::int64_t>(i) + 1, Color::blue);
            else throw std::invalid_argument("coloring: compact form admits only R and B");
        }
        return out;
    }

    /// Accepts either the JSON document form or the compact "RBB..." form.
    static Coloring parse(const std::string& text) {
        const auto first = text.find_first_not_of(" \t\r\n");
        if (first != std::string::npos && text[first] == '{')
            return from_json(nlohmann::json::parse(text));
        std::string trimmed;
        for (char ch : text)
            if (!std::isspace(static_cast<unsigned char>(ch))) trimmed += ch;
        return from_compact(trimmed);
    }

    bool operator==(const Coloring&) const = default;

private:
    void check_range(std::int64_t v) const {
        if (v < 1 || v > n_) throw std::out_of_range("Coloring: value out of [1,n]");
    }

    std::int64_t n_ = 0;
    std::vector<std::uint64_t> bits_;  // bit set = blue
};

/// A coloring of [1, n] in which some values are still unassigned; the
/// search frontier and chain-replay state.
class PartialColoring {
public:
    explicit PartialColoring(std::int64_t n) : n_(n) {
        if (n < 0) throw std::domain_error("PartialColoring: n must be >= 0");
        const auto words = static_cast<std::size_t>((n + 63) / 64);
        assigned_.assign(words, 0);
        blue_.assign(words, 0);
    }

    std::int64_t size() const noexcept { return n_; }
    std::int64_t assigned_count() const noexcept { return assigned_count_; }

    bool is_assigned(std::int64_t v) const {
        check_range(v);
        return (assigned_[static_cast<std::size_t>((v - 1) >> 6)] >> ((v - 1) & 63)) & 1;
    }

    std::optional<Color> color(std::int64_t v) const {
        if (!is_assigned(v)) return std::nullopt;
        return (blue_[static_cast<std::size_t>((v - 1) >> 6)] >> ((v - 1) & 63)) & 1
                   ? Color::blue
                   : Color::red;
    }

    void assign(std::int64_t v, Color c) {
        if (is_assigned(v)) throw std::logic_error("PartialColoring: value already assigned");
        const std::uint64_t mask = std::uint64_t{1} << ((v - 1) & 63);
        assigned_[static_cast<std::size_t>((v - 1) >> 6)] |= mask;
        if (c == Color::blue) blue_[static_cast<std::size_t>((v - 1) >> 6)] |= mask;
        ++assigned_count_;
    }

    void unassign(std::int64_t v) {
        if (!is_assigned(v)) throw std::logic_error("PartialColoring: value not assigned");
        const std::uint64_t mask = std::uint64_t{1} << ((v - 1) & 63);
        assigned_[static_cast<std::size_t>((v - 1) >> 6)] &= ~mask;
        blue_[static_cast<std::size_t>((v - 1) >> 6)] &= ~mask;
        --assigned_count_;
    }

    /// Smallest unassigned value, or 0 when the coloring is total.
    std::int64_t first_unassigned() const {
        for (std::int64_t v = 1; v <= n_; ++v)
            if (!is_assigned(v)) return v;
        return 0;
    }

    std::vector<std::int64_t> assigned_values(Color c) const {
        std::vector<std::int64_t> out;
        for (std::int64_t v = 1; v <= n_; ++v)
            if (auto col = color(v); col && *col == c) out.push_back(v);
        return out;
    }

    Coloring to_coloring() const {
        if (assigned_count_ != n_) throw std::logic_error("PartialColoring: incomplete");
        Coloring out(n_);
        for (std::int64_t v = 1; v <= n_; ++v) out.set(v, *color(v));
        return out;
    }

private:
    void check_range(std::int64_t v) const {
        if (v < 1 || v > n_) throw std::out_of_range("PartialColoring: value out of [1,n]");
    }

    std::int64_t n_ = 0;
    std::int64_t assigned_count_ = 0;
    std::vector<std::uint64_t> assigned_, blue_;
};

// ---------------------------------------------------------------------------
// Extremal colorings
// ---------------------------------------------------------------------------

/// The two-block avoider behind block_coloring_lower_bound: with
/// B = ceil((m+c)/a) and R the bound, colors [1, B-1] red and [B, R-1] blue.
/// R = 1 yields the empty coloring.
inline Coloring two_block_coloring(std::int64_t m, std::int64_t c, std::int64_t a) {
    const std::int64_t r = block_coloring_lower_bound(m, c, a);
    const std::int64_t boundary = ceil_div(checked_add(m, c), a);
    Coloring out(r - 1);
    for (std::int64_t v = 1; v <= r - 1; ++v)
        out.set(v, v < boundary ? Color::red : Color::blue);
    return out;
}

/// Evens red, odds blue. Avoids every equation with m even and c odd at
/// a = 2: the left side is always odd while 2*x0 is even.
inline Coloring parity_coloring(std::int64_t n) {
    if (n < 1) throw std::domain_error("parity_coloring: n must be >= 1");
    Coloring out(n);
    for (std::int64_t v = 1; v <= n; ++v)
        out.set(v, v % 2 == 0 ? Color::red : Color::blue);
    return out;
}

/// Witness coloring for the infinite case of x1 + c = a*x0 with a >= 2 and
/// (a-1) not dividing c. Below the fixed point c/(a-1), integers are colored
/// by which contraction interval
///   [ (c(a^k - 1) + a - 1) / (a^k (a-1)), (c(a^{k+1} - 1) + a - 1) / (a^{k+1} (a-1)) )
/// contains them (exact rational comparisons); from t = ceil(c/(a-1)) upward,
/// by which expanding block [a^k t - (a^k - 1)/(a-1) c, a^{k+1} t - ...c - 1]
/// contains them. Red when the index k is even.
inline Coloring linear_infinite_coloring(std::int64_t c, std::int64_t a, std::int64_t n) {
    if (a < 2) throw std::domain_error("linear_infinite_coloring: a must be >= 2");
    if (c < 1) throw std::domain_error("linear_infinite_coloring: c must be >= 1");
    if (n < 1) throw std::domain_error("linear_infinite_coloring: n must be >= 1");
    if (c % (a - 1) == 0)
        throw std::domain_error(
            "linear_infinite_coloring: (a-1) divides c, the Rado number is finite");

    Coloring out(n);
    const std::int64_t below = c / (a - 1);  // floor; the ceiling is below + 1
    const Rational ra(a), rc(c);

    // Contraction intervals: track [lo, hi) with lo = L(k), hi = L(k+1);
    // advancing k maps both endpoints through x -> (x + c)/a.
    Rational hi = (rc + 1) / ra;  // L(1)
    std::int64_t k = 0;
    for (std::int64_t v = 1; v <= std::min(below, n); ++v) {
        while (hi <= v) {
            hi = (hi + rc) / ra;
            ++k;
        }
        out.set(v, k % 2 == 0 ? Color::red : Color::blue);
    }

    // Expanding blocks from t upward: lo(0) = t, lo(k+1) = a*lo(k) - c.
    const std::int64_t t = below + 1;
    std::int64_t next_lo = checked_add(checked_mul(a, t), -c);
    k = 0;
    for (std::int64_t v = t; v <= n; ++v) {
        while (next_lo <= v) {
            next_lo = checked_add(checked_mul(a, next_lo), -c);
            ++k;
        }
        out.set(v, k % 2 == 0 ? Color::red : Color::blue);
    }
    return out;
}

/// Witness coloring for a = 1: v red when floor((v-1)/c) is even, i.e.
/// alternating blocks of length c. Translation by c always flips the color.
inline Coloring coefficient_one_coloring(std::int64_t c, std::int64_t n) {
    if (c < 1) throw std::domain_error("coefficient_one_coloring: c must be >= 1");
    if (n < 1) throw std::domain_error("coefficient_one_coloring: n must be >= 1");
    Coloring out(n);
    for (std::int64_t v = 1; v <= n; ++v)
        out.set(v, ((v - 1) / c) % 2 == 0 ? Color::red : Color::blue);
    return out;
}

}  // namespace rado
