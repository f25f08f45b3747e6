#include "jordan/operator_series.hpp"

namespace jordan::series {

namespace {

Rational inverse_factorial(int n) {
    Integer f = 1;
    for (int i = 2; i <= n; ++i) f *= i;
    return Rational(Integer(1), f);
}

}  // namespace

HPoly half_h_power(int n) {
    Integer den = 1;
    den <<= static_cast<mp_bitcnt_t>(n);
    return HPoly::monomial(Rational(Integer(1), den), n);
}

HMatrix exp_h(const HMatrix& a) {
    return nilpotent_series(a, [](int n) { return HPoly::monomial(inverse_factorial(n), n); });
}

HMatrix sinh_h(const HMatrix& a) {
    return nilpotent_series(a, [](int n) {
        return n % 2 == 1 ? HPoly::monomial(inverse_factorial(n), n) : HPoly();
    });
}

HMatrix sinh_h_over_h(const HMatrix& a) {
    return nilpotent_series(a, [](int n) {
        return n % 2 == 1 ? HPoly::monomial(inverse_factorial(n), n - 1) : HPoly();
    });
}

HMatrix cosh_h(const HMatrix& a) {
    return nilpotent_series(a, [](int n) {
        return n % 2 == 0 ? HPoly::monomial(inverse_factorial(n), n) : HPoly();
    });
}

HMatrix sinh_half_h(const HMatrix& a) {
    return nilpotent_series(a, [](int n) {
        return n % 2 == 1 ? half_h_power(n) * inverse_factorial(n) : HPoly();
    });
}

HMatrix cosh_half_h(const HMatrix& a) {
    return nilpotent_series(a, [](int n) {
        return n % 2 == 0 ? half_h_power(n) * inverse_factorial(n) : HPoly();
    });
}

HMatrix two_over_h_artanh_half(const HMatrix& a) {
    return nilpotent_series(a, [](int n) {
        return n % 2 == 1 ? half_h_power(n - 1) * Rational(1, n) : HPoly();
    });
}

HMatrix two_over_h_tanh_half(const HMatrix& a) {
    HMatrix sinh_over_h = sinh_half_h(a).divide_by_h_power(1);
    return sinh_over_h * unipotent_inverse(cosh_half_h(a)) * HPoly(2);
}

HMatrix cayley_h(const HMatrix& a) {
    return nilpotent_series(a, [](int n) { return n == 0 ? HPoly(1) : half_h_power(n) * Rational(2); });
}

HMatrix weighted_geometric(const HMatrix& a, int sign, int weight_offset, int start) {
    return nilpotent_series(a, [=](int n) {
        if (n < start) return HPoly();
        return half_h_power(n) * Rational(sign_power(sign < 0 ? n : 0) * (n + weight_offset));
    });
}

}  // namespace jordan::series
