#pragma once

#include "jordan/rational.hpp"

#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace jordan {

/// Polynomial in the deformation parameter h with exact rational coefficients.
///
/// Terms are kept sorted by ascending exponent and never hold a zero
/// coefficient, so the zero polynomial has no terms and structural equality
/// is mathematical equality.
class HPoly {
public:
    struct Term {
        int exponent = 0;
        Rational coeff;
        bool operator==(const Term&) const = default;
    };

    HPoly() = default;
    HPoly(const Rational& constant);  // NOLINT(google-explicit-constructor)
    HPoly(long constant);             // NOLINT(google-explicit-constructor)
    HPoly(int constant) : HPoly(static_cast<long>(constant)) {}  // NOLINT

    static HPoly monomial(const Rational& coeff, int exponent);
    /// The polynomial h.
    static HPoly h() { return monomial(1, 1); }
    /// Inverse of str(). Throws std::invalid_argument on malformed input.
    static HPoly parse(std::string_view text);

    const std::vector<Term>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].exponent == 0); }
    /// -1 for the zero polynomial.
    int degree() const { return terms_.empty() ? -1 : terms_.back().exponent; }
    /// Lowest exponent present; -1 for the zero polynomial.
    int valuation() const { return terms_.empty() ? -1 : terms_.front().exponent; }
    Rational coeff(int exponent) const;
    Rational leading_coeff() const;

    /// Constant coefficient (value at h = 0).
    Rational eval_h0() const { return coeff(0); }
    Rational evaluate(const Rational& h) const;
    /// p(h) -> p(-h).
    HPoly negate_h() const;
    /// Exact division by h^e. Throws std::domain_error if any term has exponent < e.
    HPoly divide_by_h_power(int e) const;
    /// True iff every term has exponent >= e.
    bool divisible_by_h_power(int e) const { return is_zero() || valuation() >= e; }

    HPoly& operator+=(const HPoly& o);
    HPoly& operator-=(const HPoly& o);
    HPoly& operator*=(const HPoly& o);
    HPoly& operator*=(const Rational& c);
    HPoly operator-() const;

    friend HPoly operator+(HPoly a, const HPoly& b) { return a += b; }
    friend HPoly operator-(HPoly a, const HPoly& b) { return a -= b; }
    friend HPoly operator*(const HPoly& a, const HPoly& b);
    friend HPoly operator*(HPoly a, const Rational& c) { return a *= c; }
    friend HPoly operator*(const Rational& c, HPoly a) { return a *= c; }
    friend bool operator==(const HPoly&, const HPoly&) = default;

    /// Canonical form: ascending powers, "c*h^e" with reduced c, e.g. "1 - 3/2*h^2".
    std::string str() const;

private:
    void add_scaled(const HPoly& o, const Rational& scale);
    std::vector<Term> terms_;
};

HPoly poly_add(const HPoly& a, const HPoly& b);
HPoly poly_mul(const HPoly& a, const HPoly& b);
HPoly poly_scale(const HPoly& a, const Rational& c);
Rational poly_eval_h0(const HPoly& p);

/// Quotient and remainder of univariate division over Q. Throws on division by zero.
std::pair<HPoly, HPoly> poly_divmod(const HPoly& a, const HPoly& b);
/// a / b, throwing std::domain_error when b does not divide a.
HPoly poly_exact_div(const HPoly& a, const HPoly& b);
/// Monic gcd (zero only if both inputs are zero).
HPoly poly_gcd(HPoly a, HPoly b);

}  // namespace jordan
