#pragma once

// Exact scalars: arbitrary-precision integers and rationals (GMP), half-integer
// weight labels, and generalized binomial coefficients.

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

namespace jordan {

using Integer = mpz_class;
using Rational = mpq_class;

/// Parses "p/q" or "p" (optional leading sign). Throws std::invalid_argument.
Rational parse_rational(std::string_view text);

/// Lowest-terms form, "p/q" or "p".
std::string to_string(const Rational& value);

/// Builds a canonical rational from numerator/denominator.
Rational make_rational(long numerator, long denominator = 1);

/// A weight that is an integer or a half-integer, stored as twice its value.
class HalfInt {
public:
    constexpr HalfInt() = default;
    static constexpr HalfInt from_twice(int twice) { return HalfInt(twice); }
    static constexpr HalfInt from_int(int value) { return HalfInt(2 * value); }
    /// Throws std::invalid_argument unless 2*value is an integer.
    static HalfInt from_rational(const Rational& value);
    static HalfInt parse(std::string_view text);

    constexpr int twice() const { return twice_; }
    Rational value() const {
        Rational r(twice_, 2);
        r.canonicalize();
        return r;
    }
    constexpr bool is_integer() const { return twice_ % 2 == 0; }
    std::string str() const;

    constexpr HalfInt operator+(HalfInt o) const { return HalfInt(twice_ + o.twice_); }
    constexpr HalfInt operator-(HalfInt o) const { return HalfInt(twice_ - o.twice_); }
    constexpr HalfInt operator-() const { return HalfInt(-twice_); }
    constexpr HalfInt operator+(int n) const { return HalfInt(twice_ + 2 * n); }
    constexpr HalfInt operator-(int n) const { return HalfInt(twice_ - 2 * n); }
    constexpr auto operator<=>(const HalfInt&) const = default;

private:
    constexpr explicit HalfInt(int twice) : twice_(twice) {}
    int twice_ = 0;
};

/// Binomial coefficient for any integer top: zero when r < 0 or 0 <= n < r,
/// and (-1)^r * C(|n| + r - 1, r) when n < 0.
Integer gen_binomial(long n, long r);

/// Falling-factorial binomial x(x-1)...(x-r+1)/r! for rational x; zero when r < 0.
/// Coincides with gen_binomial on integer arguments.
Rational falling_binomial(const Rational& x, long r);

/// (-1)^n
inline int sign_power(long n) { return (n % 2 == 0) ? 1 : -1; }

}  // namespace jordan
