#pragma once

#include <optional>

#include "rado/core.hpp"

namespace rado {

/// Closed form for the 2-color Rado number R(m, c, 2) of
/// x1 + ... + xm + c = 2*x0, for m >= 2 and integer c >= 1:
/// infinite when m is even and c is odd, otherwise
/// ceil((m/2) * ceil((m+c)/2) + c/2), evaluated in exact integer arithmetic.
///
/// c = 0 is out of this formula's domain: the published values for the
/// c = 0 family carry exceptional small-m cases (see schaal_vestal below).
inline RadoValue rado_number(std::int64_t m, std::int64_t c) {
    if (m < 2) throw std::domain_error("rado_number: m must be >= 2");
    if (c < 1) throw std::domain_error("rado_number: c must be >= 1 (c = 0 is served by the registry)");
    if (m % 2 == 0 && c % 2 == 1) return RadoValue::infinite(InfiniteReason::parity);
    // With M = ceil((m+c)/2), the value is ceil((m*M + c)/2); when m and c are
    // both even, m*M + c is even and the outer ceiling is exact division.
    const std::int64_t inner = ceil_div(checked_add(m, c), 2);
    return RadoValue::finite(ceil_div(checked_add(checked_mul(m, inner), c), 2));
}

/// The two-block coloring bound ceil((m/a) * ceil((m+c)/a) + c/a): a lower
/// bound for R(m, c, a), tight at a = 2 on the finite branch.
inline std::int64_t block_coloring_lower_bound(std::int64_t m, std::int64_t c, std::int64_t a) {
    if (m < 2) throw std::domain_error("block_coloring_lower_bound: m must be >= 2");
    if (c < 1) throw std::domain_error("block_coloring_lower_bound: c must be >= 1");
    if (a < 1) throw std::domain_error("block_coloring_lower_bound: a must be >= 1");
    const std::int64_t inner = ceil_div(checked_add(m, c), a);
    return ceil_div(checked_add(checked_mul(m, inner), c), a);
}

/// R(1, c, a) for x1 + c = a*x0: c/(a-1) when (a-1) | c, infinite otherwise.
inline RadoValue rado_linear(std::int64_t c, std::int64_t a) {
    if (c < 1) throw std::domain_error("rado_linear: c must be >= 1");
    if (a < 1) throw std::domain_error("rado_linear: a must be >= 1");
    if (a == 1) return RadoValue::infinite(InfiniteReason::coefficient_one);
    if (c % (a - 1) != 0) return RadoValue::infinite(InfiniteReason::divisibility);
    return RadoValue::finite(c / (a - 1));
}

/// A continuous (real-colored) Rado number: an exact rational, or absent
/// when the number is infinite.
using ContinuousValue = std::optional<Rational>;

inline std::string continuous_str(const ContinuousValue& v) {
    return v ? v->str() : std::string("infinite");
}

/// Continuous 2-color Rado number of x1 + c = a*x0 over the reals in [1, R]:
/// infinite for a = 1, c/(a-1) otherwise.
inline ContinuousValue continuous_rado_linear(const Rational& c, const Rational& a) {
    if (c <= 0) throw std::domain_error("continuous_rado_linear: c must be > 0");
    if (a < 1) throw std::domain_error("continuous_rado_linear: a must be >= 1");
    if (a == 1) return std::nullopt;
    return c / (a - 1);
}

// ---------------------------------------------------------------------------
// Registry of published 2-color Rado numbers for related equations, used as
// cross-checks (notably at the c = 0 boundary of this family).
// ---------------------------------------------------------------------------

/// S(t): x1 + x2 = x3 with t colors. Known only for t <= 4.
inline std::int64_t schur_number(std::int64_t t) {
    switch (t) {
        case 1: return 2;
        case 2: return 5;
        case 3: return 14;
        case 4: return 45;
        default: throw std::domain_error("schur_number: known only for 1 <= t <= 4");
    }
}

/// x1 + ... + x_{m-1} = x_m (m total variables, m >= 3): m^2 - m - 1.
inline std::int64_t beutelspacher_brestovansky(std::int64_t m) {
    if (m < 3) throw std::domain_error("beutelspacher_brestovansky: m must be >= 3");
    return checked_add(checked_mul(m, m) - m, -1);
}

/// x1 + x2 + c = x3, integer c: 4c + 5 for c >= 0, |c| - ceil((|c|-5)/5) for c < 0.
inline std::int64_t burr_loo(std::int64_t c) {
    if (c >= 0) return checked_add(checked_mul(4, c), 5);
    const std::int64_t ac = -c;
    return ac - ceil_div(ac - 5, 5);
}

/// x1 + ... + x_{m-1} + c = x_m (m total variables, m >= 3, c >= 0):
/// infinite for m even and c odd, otherwise m^2 - m - 1 + (m+1)c.
inline RadoValue schaal(std::int64_t m, std::int64_t c) {
    if (m < 3) throw std::domain_error("schaal: m must be >= 3");
    if (c < 0) throw std::domain_error("schaal: c must be >= 0");
    if (m % 2 == 0 && c % 2 == 1) return RadoValue::infinite(InfiniteReason::parity);
    return RadoValue::finite(checked_add(beutelspacher_brestovansky(m), checked_mul(m + 1, c)));
}

/// A registry result: a finite exact rational or infinite (no obstruction
/// tag; the sources state the values without one).
class RegistryValue {
public:
    static RegistryValue finite(Rational v) { return RegistryValue(std::move(v)); }
    static RegistryValue infinite() { return RegistryValue(std::nullopt); }

    bool is_finite() const noexcept { return v_.has_value(); }
    const Rational& value() const {
        if (!v_) throw std::logic_error("RegistryValue: infinite");
        return *v_;
    }
    std::string str() const { return v_ ? v_->str() : std::string("infinite"); }
    bool operator==(const RegistryValue&) const = default;

private:
    explicit RegistryValue(std::optional<Rational> v) : v_(std::move(v)) {}
    std::optional<Rational> v_;
};

/// x1 + ... + xm = 2*x0 with m left-hand variables; the c = 0, a = 2 member
/// of this family. Re-indexed from the published table (which counts m+1
/// total variables): ceil((m/2) * ceil(m/2)) for m >= 5 with exceptional
/// values 5, 4, 1 at m = 4, 3, 2 and infinite at m = 1.
inline RegistryValue schaal_vestal(std::int64_t m_left) {
    if (m_left < 1) throw std::domain_error("schaal_vestal: m must be >= 1");
    switch (m_left) {
        case 1: return RegistryValue::infinite();
        case 2: return RegistryValue::finite(1);
        case 3: return RegistryValue::finite(4);
        case 4: return RegistryValue::finite(5);
        default:
            return RegistryValue::finite(ceil_div(checked_mul(m_left, ceil_div(m_left, 2)), 2));
    }
}

/// Continuous Rado number of x1 + ... + xm = a*x0 for integer a >= 2 and
/// m >= a(a-1): m^2 / a^2 exactly.
inline Rational vestal_continuous(std::int64_t m, std::int64_t a) {
    if (a < 2) throw std::domain_error("vestal_continuous: a must be >= 2");
    if (m < a * (a - 1)) throw std::domain_error("vestal_continuous: m must be >= a(a-1)");
    return Rational(BigInt(m) * m, BigInt(a) * a);
}

enum class KnownEquation {
    schur,
    beutelspacher_brestovansky,
    burr_loo,
    schaal,
    schaal_vestal,
    vestal_continuous,
};

struct KnownEquationParams {
    std::optional<std::int64_t> t;  // color count (schur)
    std::optional<std::int64_t> m;
    std::optional<std::int64_t> c;
    std::optional<std::int64_t> a;
};

inline std::int64_t require_param(const std::optional<std::int64_t>& p, const char* name) {
    if (!p) throw std::domain_error(std::string("registry_lookup: missing parameter ") + name);
    return *p;
}

/// Enum-dispatched lookup over the registry above.
inline RegistryValue registry_lookup(KnownEquation eq, const KnownEquationParams& p) {
    switch (eq) {
        case KnownEquation::schur:
            return RegistryValue::finite(schur_number(require_param(p.t, "t")));
        case KnownEquation::beutelspacher_brestovansky:
            return RegistryValue::finite(beutelspacher_brestovansky(require_param(p.m, "m")));
        case KnownEquation::burr_loo:
            return RegistryValue::finite(burr_loo(require_param(p.c, "c")));
        case KnownEquation::schaal: {
            const RadoValue v = schaal(require_param(p.m, "m"), require_param(p.c, "c"));
            return v.is_finite() ? RegistryValue::finite(v.value()) : RegistryValue::infinite();
        }
        case KnownEquation::schaal_vestal:
            return schaal_vestal(require_param(p.m, "m"));
        case KnownEquation::vestal_continuous:
            return RegistryValue::finite(vestal_continuous(require_param(p.m, "m"), require_param(p.a, "a")));
    }
    throw std::domain_error("registry_lookup: unknown equation id");
}

}  // namespace rado
