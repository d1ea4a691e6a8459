#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>

#include "mainspectra/graph.hpp"

namespace mainspectra {

/// Exact quadratic irrational (s + sign*sqrt(D)) / 2 with integer s and D >= 0.
/// Every comparison is decided in integer arithmetic.
struct Surd {
    std::int64_t s = 0;
    std::int64_t D = 0;
    int sign = 1;  // +1 or -1

    Surd() = default;
    Surd(std::int64_t s_, std::int64_t D_, int sign_);

    static Surd integer(std::int64_t v) { return Surd(2 * v, 0, 1); }

    /// The value as a rational when D is a perfect square.
    std::optional<Rational> rational() const;
    bool is_rational() const { return rational().has_value(); }
    double approx() const;

    /// "(s+√D)/2", or the reduced rational when D is a perfect square.
    std::string str() const;

    std::strong_ordering operator<=>(const Rational& r) const;
    bool operator==(const Rational& r) const { return (*this <=> r) == 0; }
    std::strong_ordering operator<=>(std::int64_t v) const { return *this <=> Rational(v); }
    bool operator==(std::int64_t v) const { return (*this <=> Rational(v)) == 0; }

    /// Exact equality of values (different (s, D, sign) triples may coincide).
    friend bool operator==(const Surd& x, const Surd& y);
};

/// Integer square root of a nonnegative value if it is a perfect square.
std::optional<std::int64_t> exact_sqrt(std::int64_t v);

}  // namespace mainspectra
