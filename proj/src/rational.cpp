#include "jordan/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace jordan {

namespace {

bool is_integer_literal(std::string_view s) {
    if (s.empty()) return false;
    std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i) {
        if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    }
    return true;
}

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

}  // namespace

Rational parse_rational(std::string_view text) {
    text = trim(text);
    const auto slash = text.find('/');
    std::string_view num = text.substr(0, slash);
    std::string_view den = slash == std::string_view::npos ? std::string_view{"1"} : text.substr(slash + 1);
    if (num.size() > 1 && num[0] == '+') num.remove_prefix(1);
    if (!is_integer_literal(num) || !is_integer_literal(den) || den[0] == '-' || den[0] == '+') {
        throw std::invalid_argument("not a rational literal: '" + std::string(text) + "'");
    }
    Integer n(std::string(num), 10);
    Integer d(std::string(den), 10);
    if (d == 0) throw std::invalid_argument("zero denominator: '" + std::string(text) + "'");
    Rational r(n, d);
    r.canonicalize();
    return r;
}

std::string to_string(const Rational& value) {
    if (value.get_den() == 1) return value.get_num().get_str();
    return value.get_num().get_str() + "/" + value.get_den().get_str();
}

Rational make_rational(long numerator, long denominator) {
    if (denominator == 0) throw std::invalid_argument("zero denominator");
    Rational r(numerator, denominator);
    r.canonicalize();
    return r;
}

HalfInt HalfInt::from_rational(const Rational& value) {
    Rational twice = value * 2;
    if (twice.get_den() != 1 || !twice.get_num().fits_sint_p()) {
        throw std::invalid_argument("not a half-integer: " + to_string(value));
    }
    return HalfInt(static_cast<int>(twice.get_num().get_si()));
}

HalfInt HalfInt::parse(std::string_view text) { return from_rational(parse_rational(text)); }

std::string HalfInt::str() const {
    if (is_integer()) return std::to_string(twice_ / 2);
    return std::to_string(twice_) + "/2";
}

Integer gen_binomial(long n, long r) {
    if (r < 0) return 0;
    Integer out;
    if (n >= 0) {
        if (r > n) return 0;
        mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(r));
        return out;
    }
    mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(-n + r - 1), static_cast<unsigned long>(r));
    return sign_power(r) == 1 ? out : Integer(-out);
}

Rational falling_binomial(const Rational& x, long r) {
    if (r < 0) return 0;
    Rational acc = 1;
    for (long i = 0; i < r; ++i) {
        acc *= (x - i);
        acc /= (i + 1);
    }
    return acc;
}

}  // namespace jordan
