#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <variant>

#include <boost/multiprecision/cpp_int.hpp>

namespace rado {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

enum class Color : std::uint8_t { red, blue };

constexpr Color opposite(Color c) noexcept {
    return c == Color::red ? Color::blue : Color::red;
}

inline const char* color_name(Color c) noexcept {
    return c == Color::red ? "red" : "blue";
}

inline Color parse_color(const std::string& s) {
    if (s == "red" || s == "R" || s == "r") return Color::red;
    if (s == "blue" || s == "B" || s == "b") return Color::blue;
    throw std::invalid_argument("unknown color: " + s);
}

/// The equation x1 + ... + xm + c = a*x0 over the positive integers.
/// c may be negative (exploration mode); m and a are at least 1.
struct EquationParams {
    std::int64_t m = 2;
    std::int64_t c = 1;
    std::int64_t a = 2;

    void validate() const {
        if (m < 1) throw std::domain_error("equation: m must be >= 1");
        if (a < 1) throw std::domain_error("equation: a must be >= 1");
    }

    bool operator==(const EquationParams&) const = default;
};

// Checked 64-bit arithmetic. Formula results must be bit-exact, so overflow
// is a typed error rather than wraparound.

inline std::int64_t checked_add(std::int64_t x, std::int64_t y) {
    std::int64_t r = 0;
    if (__builtin_add_overflow(x, y, &r)) throw std::overflow_error("integer overflow in addition");
    return r;
}

inline std::int64_t checked_mul(std::int64_t x, std::int64_t y) {
    std::int64_t r = 0;
    if (__builtin_mul_overflow(x, y, &r)) throw std::overflow_error("integer overflow in multiplication");
    return r;
}

/// ceil(p / q) for q > 0, exact in integer arithmetic (no floating point).
inline std::int64_t ceil_div(std::int64_t p, std::int64_t q) {
    if (q <= 0) throw std::domain_error("ceil_div: divisor must be positive");
    if (p > 0) return (p - 1) / q + 1;
    return -(-p / q);
}

/// floor(p / q) for q > 0.
inline std::int64_t floor_div(std::int64_t p, std::int64_t q) {
    if (q <= 0) throw std::domain_error("floor_div: divisor must be positive");
    if (p >= 0) return p / q;
    return -((-p - 1) / q + 1);
}

enum class InfiniteReason : std::uint8_t {
    parity,           // m even, c odd: both sides can never match modulo 2
    divisibility,     // (a-1) does not divide c in the one-variable equation
    coefficient_one,  // a = 1: translation by c never closes
};

inline const char* infinite_reason_name(InfiniteReason r) noexcept {
    switch (r) {
        case InfiniteReason::parity: return "parity";
        case InfiniteReason::divisibility: return "divisibility";
        case InfiniteReason::coefficient_one: return "coefficient-one";
    }
    return "?";
}

/// A Rado number: finite, provably infinite (with the obstruction), or
/// undecided above a search bound.
class RadoValue {
public:
    static RadoValue finite(std::int64_t v) {
        if (v < 1) throw std::domain_error("RadoValue: finite value must be >= 1");
        return RadoValue(Fin{v});
    }
    static RadoValue infinite(InfiniteReason r) { return RadoValue(Inf{r}); }
    static RadoValue unknown_above(std::int64_t bound) { return RadoValue(Unk{bound}); }

    bool is_finite() const noexcept { return std::holds_alternative<Fin>(v_); }
    bool is_infinite() const noexcept { return std::holds_alternative<Inf>(v_); }
    bool is_unknown() const noexcept { return std::holds_alternative<Unk>(v_); }

    std::int64_t value() const {
        if (!is_finite()) throw std::logic_error("RadoValue: not finite");
        return std::get<Fin>(v_).v;
    }
    InfiniteReason reason() const {
        if (!is_infinite()) throw std::logic_error("RadoValue: not infinite");
        return std::get<Inf>(v_).r;
    }
    std::int64_t bound() const {
        if (!is_unknown()) throw std::logic_error("RadoValue: not unknown-above");
        return std::get<Unk>(v_).bound;
    }

    std::string str() const {
        if (is_finite()) return std::to_string(value());
        if (is_infinite()) return std::string("infinite (") + infinite_reason_name(reason()) + ")";
        return "unknown above " + std::to_string(bound());
    }

    bool operator==(const RadoValue&) const = default;

private:
    struct Fin {
        std::int64_t v;
        bool operator==(const Fin&) const = default;
    };
    struct Inf {
        InfiniteReason r;
        bool operator==(const Inf&) const = default;
    };
    struct Unk {
        std::int64_t bound;
        bool operator==(const Unk&) const = default;
    };

    template <typename T>
    explicit RadoValue(T t) : v_(t) {}

    std::variant<Fin, Inf, Unk> v_;
};

}  // namespace rado
