#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "rado/core.hpp"

namespace rado {

/// An interval of exact rationals. lo = hi with mixed closedness denotes the
/// empty interval (the k-th contraction interval degenerates to [1, 1) when
/// c = a - 1); a degenerate point requires both endpoints closed.
struct RationalInterval {
    Rational lo, hi;
    bool closed_lo = true;
    bool closed_hi = false;

    RationalInterval(Rational lo_, Rational hi_, bool closed_lo_, bool closed_hi_)
        : lo(std::move(lo_)), hi(std::move(hi_)), closed_lo(closed_lo_), closed_hi(closed_hi_) {
        if (lo > hi) throw std::domain_error("RationalInterval: lo must be <= hi");
    }

    bool empty() const { return lo == hi && !(closed_lo && closed_hi); }

    bool contains(const Rational& x) const {
        if (x < lo || x > hi) return false;
        if (x == lo && !closed_lo) return false;
        if (x == hi && !closed_hi) return false;
        return true;
    }

    bool operator==(const RationalInterval&) const = default;
};

namespace detail {

inline Rational rational_pow(const Rational& base, std::int64_t k) {
    Rational out = 1;
    for (std::int64_t i = 0; i < k; ++i) out *= base;
    return out;
}

/// Left endpoint (c(a^k - 1) + a - 1) / (a^k (a - 1)) of the k-th
/// contraction interval; increases toward the fixed point c/(a-1).
inline Rational contraction_left(std::int64_t k, const Rational& c, const Rational& a) {
    const Rational ak = rational_pow(a, k);
    return (c * (ak - 1) + a - 1) / (ak * (a - 1));
}

}  // namespace detail

/// x0 solving x1 + c = a*x0.
inline Rational map_x1_to_x0(const Rational& x1, const Rational& c, const Rational& a) {
    if (a < 1) throw std::domain_error("map_x1_to_x0: a must be >= 1");
    return (x1 + c) / a;
}

/// The k-th half-open interval of the real avoider below the fixed point:
/// [ (c(a^k-1)+a-1) / (a^k(a-1)), (c(a^{k+1}-1)+a-1) / (a^{k+1}(a-1)) ),
/// with k = 0 giving [1, (c+1)/a).
inline RationalInterval contraction_interval(std::int64_t k, const Rational& c,
                                             const Rational& a) {
    if (k < 0) throw std::domain_error("contraction_interval: k must be >= 0");
    if (a <= 1) throw std::domain_error("contraction_interval: a must be > 1");
    if (c <= 0) throw std::domain_error("contraction_interval: c must be > 0");
    return RationalInterval(detail::contraction_left(k, c, a),
                            detail::contraction_left(k + 1, c, a), true, false);
}

struct IntervalCheck {
    std::int64_t k = 0;
    bool pass = true;
    std::string detail;
};

struct VerificationReport {
    std::vector<IntervalCheck> checks;

    bool pass() const noexcept {
        for (const auto& c : checks)
            if (!c.pass) return false;
        return true;
    }
    std::vector<std::int64_t> failed_ks() const {
        std::vector<std::int64_t> out;
        for (const auto& c : checks)
            if (!c.pass) out.push_back(c.k);
        return out;
    }
};

/// For every k <= k_max, assert with exact arithmetic that the image of the
/// k-th contraction interval under x -> (x+c)/a is the (k+1)-st interval
/// endpoint-for-endpoint, that consecutive intervals abut, and that all
/// intervals lie in [1, c/(a-1)).
inline VerificationReport verify_interval_chain(const Rational& c, const Rational& a,
                                                std::int64_t k_max) {
    if (a <= 1) throw std::domain_error("verify_interval_chain: a must be > 1");
    if (c <= 0) throw std::domain_error("verify_interval_chain: c must be > 0");
    if (k_max < 1) throw std::domain_error("verify_interval_chain: k_max must be >= 1");

    const Rational fixed_point = c / (a - 1);
    VerificationReport report;
    RationalInterval cur = contraction_interval(0, c, a);
    for (std::int64_t k = 0; k <= k_max; ++k) {
        const RationalInterval next = contraction_interval(k + 1, c, a);
        IntervalCheck check;
        check.k = k;
        if (map_x1_to_x0(cur.lo, c, a) != next.lo)
            check = {k, false, "left endpoint does not map to the next left endpoint"};
        else if (map_x1_to_x0(cur.hi, c, a) != next.hi)
            check = {k, false, "right endpoint does not map to the next right endpoint"};
        else if (cur.hi != next.lo)
            check = {k, false, "intervals do not abut"};
        else if (!cur.empty() && (cur.lo < 1 || cur.hi > fixed_point))
            check = {k, false, "interval escapes [1, c/(a-1))"};
        report.checks.push_back(std::move(check));
        cur = next;
    }
    return report;
}

/// The a = 1 avoider: for every k <= k_max, the image of [kc+1, (k+1)c+1)
/// under x -> x + c is exactly the next block.
inline VerificationReport verify_translation_chain(const Rational& c, std::int64_t k_max) {
    if (c <= 0) throw std::domain_error("verify_translation_chain: c must be > 0");
    if (k_max < 1) throw std::domain_error("verify_translation_chain: k_max must be >= 1");
    VerificationReport report;
    for (std::int64_t k = 0; k <= k_max; ++k) {
        const Rational lo = k * c + 1;
        const Rational hi = (k + 1) * c + 1;
        IntervalCheck check;
        check.k = k;
        if (lo + c != hi)
            check = {k, false, "block does not translate onto the next left endpoint"};
        else if (hi + c != (k + 2) * c + 1)
            check = {k, false, "block does not translate onto the next right endpoint"};
        report.checks.push_back(std::move(check));
    }
    return report;
}

/// The discrete blocks above t = ceil(c/(a-1)) for integer c, a with
/// (a-1) not dividing c: block k is
///   [ a^k t - (a^k - 1)/(a-1) c, a^{k+1} t - (a^{k+1} - 1)/(a-1) c - 1 ],
/// and x0 in block k-1 puts x1 = a*x0 - c in block k. Endpoints grow like
/// a^k, so the check runs on arbitrary-precision integers.
inline VerificationReport verify_discrete_blocks(std::int64_t c, std::int64_t a,
                                                 std::int64_t k_max) {
    if (a < 2) throw std::domain_error("verify_discrete_blocks: a must be >= 2");
    if (c < 1) throw std::domain_error("verify_discrete_blocks: c must be >= 1");
    if (k_max < 1) throw std::domain_error("verify_discrete_blocks: k_max must be >= 1");
    if (c % (a - 1) == 0)
        throw std::domain_error("verify_discrete_blocks: (a-1) divides c, the finite case");

    const std::int64_t t = ceil_div(c, a - 1);
    auto block_lo = [&](std::int64_t k) {
        BigInt ak = 1;
        BigInt geometric = 0;  // (a^k - 1)/(a - 1) as the geometric sum
        for (std::int64_t i = 0; i < k; ++i) {
            geometric += ak;
            ak *= a;
        }
        return ak * t - geometric * c;
    };

    VerificationReport report;
    BigInt prev_lo = block_lo(0);
    for (std::int64_t k = 1; k <= k_max; ++k) {
        const BigInt lo = block_lo(k);
        const BigInt next_lo = block_lo(k + 1);
        IntervalCheck check;
        check.k = k;
        // Block k-1 is [prev_lo, lo - 1]; its image must land in [lo, next_lo - 1].
        if (a * prev_lo - c != lo)
            check = {k, false, "lower endpoint displaced off the next block"};
        else if (a * (lo - 1) - c > next_lo - 1)
            check = {k, false, "upper endpoint displaced past the next block"};
        else if (prev_lo > lo - 1)
            check = {k, false, "empty block"};
        report.checks.push_back(std::move(check));
        prev_lo = lo;
    }
    return report;
}

}  // namespace rado
