#include "jordan/hpoly.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <stdexcept>

namespace jordan {

HPoly::HPoly(const Rational& constant) {
    if (constant != 0) terms_.push_back({0, constant});
}

HPoly::HPoly(long constant) : HPoly(Rational(constant)) {}

HPoly HPoly::monomial(const Rational& coeff, int exponent) {
    if (exponent < 0) throw std::domain_error("negative power of h");
    HPoly p;
    if (coeff != 0) p.terms_.push_back({exponent, coeff});
    return p;
}

Rational HPoly::coeff(int exponent) const {
    auto it = std::lower_bound(terms_.begin(), terms_.end(), exponent,
                               [](const Term& t, int e) { return t.exponent < e; });
    if (it != terms_.end() && it->exponent == exponent) return it->coeff;
    return 0;
}

Rational HPoly::leading_coeff() const { return terms_.empty() ? Rational(0) : terms_.back().coeff; }

Rational HPoly::evaluate(const Rational& h) const {
    // Horner over the sparse terms, from the top.
    Rational acc = 0;
    int prev = degree();
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        for (int e = prev; e > it->exponent; --e) acc *= h;
        acc += it->coeff;
        prev = it->exponent;
    }
    for (int e = prev; e > 0; --e) acc *= h;
    return acc;
}

HPoly HPoly::negate_h() const {
    HPoly out = *this;
    for (auto& t : out.terms_) {
        if (t.exponent % 2 != 0) t.coeff = -t.coeff;
    }
    return out;
}

HPoly HPoly::divide_by_h_power(int e) const {
    if (!divisible_by_h_power(e)) {
        throw std::domain_error("division by h^" + std::to_string(e) + " leaves a remainder in " + str());
    }
    HPoly out = *this;
    for (auto& t : out.terms_) t.exponent -= e;
    return out;
}

void HPoly::add_scaled(const HPoly& o, const Rational& scale) {
    if (o.terms_.empty() || scale == 0) return;
    std::vector<Term> merged;
    merged.reserve(terms_.size() + o.terms_.size());
    auto a = terms_.begin();
    auto b = o.terms_.begin();
    while (a != terms_.end() || b != o.terms_.end()) {
        if (b == o.terms_.end() || (a != terms_.end() && a->exponent < b->exponent)) {
            merged.push_back(std::move(*a++));
        } else if (a == terms_.end() || b->exponent < a->exponent) {
            merged.push_back({b->exponent, b->coeff * scale});
            ++b;
        } else {
            Rational c = a->coeff + b->coeff * scale;
            if (c != 0) merged.push_back({a->exponent, std::move(c)});
            ++a;
            ++b;
        }
    }
    terms_ = std::move(merged);
}

HPoly& HPoly::operator+=(const HPoly& o) {
    add_scaled(o, 1);
    return *this;
}

HPoly& HPoly::operator-=(const HPoly& o) {
    add_scaled(o, -1);
    return *this;
}

HPoly& HPoly::operator*=(const HPoly& o) {
    *this = *this * o;
    return *this;
}

HPoly& HPoly::operator*=(const Rational& c) {
    if (c == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& t : terms_) t.coeff *= c;
    return *this;
}

HPoly HPoly::operator-() const {
    HPoly out = *this;
    for (auto& t : out.terms_) t.coeff = -t.coeff;
    return out;
}

HPoly operator*(const HPoly& a, const HPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    if (a.terms_.size() == 1 && a.terms_[0].exponent == 0) return b * a.terms_[0].coeff;
    if (b.terms_.size() == 1 && b.terms_[0].exponent == 0) return a * b.terms_[0].coeff;
    const int deg = a.degree() + b.degree();
    std::vector<Rational> dense(static_cast<std::size_t>(deg) + 1);
    std::vector<bool> touched(dense.size(), false);
    for (const auto& x : a.terms_) {
        for (const auto& y : b.terms_) {
            auto idx = static_cast<std::size_t>(x.exponent + y.exponent);
            dense[idx] += x.coeff * y.coeff;
            touched[idx] = true;
        }
    }
    HPoly out;
    for (std::size_t e = 0; e < dense.size(); ++e) {
        if (touched[e] && dense[e] != 0) out.terms_.push_back({static_cast<int>(e), std::move(dense[e])});
    }
    return out;
}

std::string HPoly::str() const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& t : terms_) {
        Rational mag = abs(t.coeff);
        const bool negative = t.coeff < 0;
        if (first) {
            if (negative) out += "-";
        } else {
            out += negative ? " - " : " + ";
        }
        first = false;
        if (t.exponent == 0) {
            out += to_string(mag);
            continue;
        }
        if (mag != 1) out += to_string(mag) + "*";
        out += "h";
        if (t.exponent != 1) out += "^" + std::to_string(t.exponent);
    }
    return out;
}

HPoly HPoly::parse(std::string_view text) {
    std::string s;
    for (char c : text) {
        if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
    }
    auto fail = [&] { throw std::invalid_argument("malformed h-polynomial: '" + std::string(text) + "'"); };
    if (s.empty()) fail();
    std::map<int, Rational> acc;
    std::size_t pos = 0;
    while (pos < s.size()) {
        int sign = 1;
        if (s[pos] == '+' || s[pos] == '-') {
            sign = s[pos] == '-' ? -1 : 1;
            ++pos;
        } else if (pos != 0) {
            fail();
        }
        std::size_t end = s.find_first_of("+-", pos);
        // a '-' directly after '^' or '/' cannot occur in canonical output
        std::string term = s.substr(pos, end == std::string::npos ? std::string::npos : end - pos);
        pos = end == std::string::npos ? s.size() : end;
        if (term.empty()) fail();
        Rational coeff = 1;
        int exponent = 0;
        auto hpos = term.find('h');
        if (hpos == std::string::npos) {
            coeff = parse_rational(term);
        } else {
            std::string head = term.substr(0, hpos);
            std::string tail = term.substr(hpos + 1);
            if (!head.empty()) {
                if (head.back() != '*') fail();
                head.pop_back();
                coeff = parse_rational(head);
            }
            if (tail.empty()) {
                exponent = 1;
            } else {
                if (tail[0] != '^' || tail.size() < 2) fail();
                for (std::size_t i = 1; i < tail.size(); ++i) {
                    if (!std::isdigit(static_cast<unsigned char>(tail[i]))) fail();
                }
                exponent = std::stoi(tail.substr(1));
            }
        }
        acc[exponent] += sign * coeff;
    }
    HPoly out;
    for (auto& [e, c] : acc) out += monomial(c, e);
    return out;
}

HPoly poly_add(const HPoly& a, const HPoly& b) { return a + b; }
HPoly poly_mul(const HPoly& a, const HPoly& b) { return a * b; }
HPoly poly_scale(const HPoly& a, const Rational& c) { return a * c; }
Rational poly_eval_h0(const HPoly& p) { return p.eval_h0(); }

std::pair<HPoly, HPoly> poly_divmod(const HPoly& a, const HPoly& b) {
    if (b.is_zero()) throw std::domain_error("polynomial division by zero");
    HPoly quotient;
    HPoly rem = a;
    const int db = b.degree();
    const Rational lead = b.leading_coeff();
    while (!rem.is_zero() && rem.degree() >= db) {
        HPoly step = HPoly::monomial(rem.leading_coeff() / lead, rem.degree() - db);
        quotient += step;
        rem -= step * b;
    }
    return {quotient, rem};
}

HPoly poly_exact_div(const HPoly& a, const HPoly& b) {
    auto [q, r] = poly_divmod(a, b);
    if (!r.is_zero()) throw std::domain_error("inexact polynomial division: (" + a.str() + ") / (" + b.str() + ")");
    return q;
}

HPoly poly_gcd(HPoly a, HPoly b) {
    while (!b.is_zero()) {
        HPoly r = poly_divmod(a, b).second;
        a = std::move(b);
        b = std::move(r);
    }
    if (a.is_zero()) return a;
    return a * (Rational(1) / a.leading_coeff());
}

}  // namespace jordan
