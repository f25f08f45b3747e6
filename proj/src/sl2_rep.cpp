#include "jordan/sl2_rep.hpp"

#include "jordan/operator_series.hpp"

#include <stdexcept>
#include <string>
#include <tuple>

namespace jordan {

namespace {

std::vector<int> sl2_grading(HalfInt j) {
    std::vector<int> g;
    for (int k = 0; k <= j.twice(); ++k) g.push_back(j.twice() - 2 * k);
    return g;
}

}  // namespace

ClassicalGenerators build_classical(HalfInt j) {
    if (j.twice() < 0) throw std::invalid_argument("2j must be a nonnegative integer");
    const auto dim = static_cast<std::size_t>(j.twice() + 1);
    auto grading = sl2_grading(j);
    ClassicalGenerators g{HMatrix(dim, grading), HMatrix(dim, grading), HMatrix(dim, grading)};
    const Rational jv = j.value();
    for (std::size_t k = 0; k < dim; ++k) {
        const Rational m = (j - static_cast<int>(k)).value();
        g.cartan(k, k) = HPoly(2 * m);
        if (k >= 1) g.raising(k - 1, k) = HPoly(1);
        if (k + 1 < dim) g.lowering(k + 1, k) = HPoly(Rational((jv + m) * (jv - m + 1)));
    }
    return g;
}

JordanianGenerators build_jordanian(const HMatrix& raising, const HMatrix& lowering) {
    HMatrix x = series::two_over_h_artanh_half(raising);
    HMatrix cosh_inv = unipotent_inverse(series::cosh_half_h(x));
    HMatrix y = cosh_inv * lowering * cosh_inv;
    return {std::move(x), std::move(y)};
}

std::pair<HMatrix, HMatrix> build_exponentials(const HMatrix& zp) {
    return {series::cayley_h(zp), series::cayley_h(-zp)};
}

HMatrix casimir_from_jordanian(const HMatrix& x, const HMatrix& y, const HMatrix& h) {
    HMatrix s = series::sinh_h(x);
    HMatrix sym = (y * s + s * y).divide_by_h_power(1) * HPoly(Rational(1, 2));
    return sym + h * h * HPoly(Rational(1, 4)) + s * s * HPoly(Rational(1, 4));
}

HMatrix casimir_from_classical(const HMatrix& zp, const HMatrix& zm, const HMatrix& h) {
    HMatrix half = h * HPoly(Rational(1, 2));
    HMatrix id = HMatrix::identity(h.dim(), h.grading());
    return zp * zm + half * (half - id);
}

RepSL2 make_rep_sl2(HalfInt j) {
    auto cl = build_classical(j);
    RepSL2 rep;
    rep.j = j;
    rep.dim = cl.raising.dim();
    rep.zp = std::move(cl.raising);
    rep.zm = std::move(cl.lowering);
    rep.hm = std::move(cl.cartan);
    auto jg = build_jordanian(rep.zp, rep.zm);
    rep.x = std::move(jg.x);
    rep.y = std::move(jg.y);
    std::tie(rep.ehx, rep.emhx) = build_exponentials(rep.zp);
    rep.casimir = casimir_from_jordanian(rep.x, rep.y, rep.hm);
    rep.s_x = -rep.x;
    rep.s_y = -(rep.ehx * rep.y * rep.emhx);
    rep.s_h = -(rep.ehx * rep.hm * rep.emhx);
    return rep;
}

CheckReport verify_power_identities(const RepSL2& rep, int n_max) {
    CheckReport report;
    const HMatrix sinh_over_h = series::sinh_h_over_h(rep.x);
    for (int n = 1; n <= n_max; ++n) {
        HMatrix xn = rep.x.pow(n);
        HMatrix xn1 = rep.x.pow(n - 1);
        HMatrix lhs_h = mat_commutator(rep.hm, xn);
        HMatrix rhs_h = xn1 * sinh_over_h * HPoly(2 * n);
        report.add("[H, X^" + std::to_string(n) + "] = 2n X^(n-1) sinh(hX)/h", lhs_h == rhs_h);

        HMatrix lhs_y = mat_commutator(rep.y, xn);
        HMatrix rhs_y = -(xn1 * rep.hm * HPoly(n));
        if (n >= 2) rhs_y -= rep.x.pow(n - 2) * sinh_over_h * HPoly(n * (n - 1));
        report.add("[Y, X^" + std::to_string(n) + "] = -n X^(n-1) H - n(n-1) X^(n-2) sinh(hX)/h", lhs_y == rhs_y);
    }
    return report;
}

CheckReport verify_algebra(const RepSL2& rep) {
    CheckReport r;
    const std::size_t n = rep.dim;
    const HMatrix id = HMatrix::identity(n, rep.hm.grading());
    const HMatrix sinh_over_h = series::sinh_h_over_h(rep.x);
    const HMatrix cosh_hx = series::cosh_h(rep.x);

    r.add("[H, X] = 2 sinh(hX)/h", mat_commutator(rep.hm, rep.x) == sinh_over_h * HPoly(2));
    r.add("[H, Y] = -Y cosh(hX) - cosh(hX) Y", mat_commutator(rep.hm, rep.y) == -(rep.y * cosh_hx + cosh_hx * rep.y));
    r.add("[X, Y] = H", mat_commutator(rep.x, rep.y) == rep.hm);

    // Classical generators reconstructed from X, Y.
    const HMatrix zp_back = series::two_over_h_tanh_half(rep.x);
    const HMatrix cosh_half = series::cosh_half_h(rep.x);
    const HMatrix zm_back = cosh_half * rep.y * cosh_half;
    r.add("Z+ = (2/h) tanh(hX/2) round trip", zp_back == rep.zp);
    r.add("Z- = cosh(hX/2) Y cosh(hX/2) round trip", zm_back == rep.zm);
    r.add("[H, Z+] = 2 Z+", mat_commutator(rep.hm, zp_back) == zp_back * HPoly(2));
    r.add("[H, Z-] = -2 Z-", mat_commutator(rep.hm, zm_back) == zm_back * HPoly(-2));
    r.add("[Z+, Z-] = H", mat_commutator(zp_back, zm_back) == rep.hm);

    const HMatrix cas2 = casimir_from_classical(rep.zp, rep.zm, rep.hm);
    const Rational jv = rep.j.value();
    r.add("Casimir (Jordanian form) = Casimir (classical form)", rep.casimir == cas2);
    r.add("Casimir = j(j+1) I", rep.casimir == id * HPoly(Rational(jv * (jv + 1))));

    r.add("e^{hX} (Cayley form) = exp series", rep.ehx == series::exp_h(rep.x));
    r.add("e^{-hX} (Cayley form) = exp series", rep.emhx == series::exp_h(-rep.x));
    r.add("e^{hX} e^{-hX} = I", rep.ehx * rep.emhx == id);

    r.add("S(X) = -X", rep.s_x == -rep.x);
    r.add("S([X,Y]) = [S(Y), S(X)]", rep.s_h == mat_commutator(rep.s_y, rep.s_x));
    r.add("S([H,X]) = [S(X), S(H)]",
          mat_commutator(rep.s_x, rep.s_h) == series::sinh_h_over_h(rep.s_x) * HPoly(2));
    const HMatrix cosh_sx = series::cosh_h(rep.s_x);
    r.add("S([H,Y]) = [S(Y), S(H)]",
          mat_commutator(rep.s_y, rep.s_h) == -(cosh_sx * rep.s_y + rep.s_y * cosh_sx));

    const int top = rep.j.twice() + 1;
    r.add("X^(2j+1) = 0", rep.x.pow(top).is_zero());
    r.add("Z+^(2j+1) = 0", rep.zp.pow(top).is_zero());
    if (rep.j.twice() >= 1) r.add("X^(2j) != 0", !rep.x.pow(top - 1).is_zero());
    r.add("Z+ raises weight by 1", rep.zp.is_weight_shift(1));
    r.add("X raises weight by an odd amount >= 1",
          rep.x.weight_changes_satisfy([](int d) { return d >= 1 && (d % 2 != 0); }));
    r.add("Z- lowers weight by 1", rep.zm.is_weight_shift(-1));
    r.add("Y changes weight by an odd amount >= -1",
          rep.y.weight_changes_satisfy([](int d) { return d >= -1 && (d % 2 != 0); }));

    r.add("X at h=0 is Z+", rep.x.eval_h0() == rep.zp);
    r.add("Y at h=0 is Z-", rep.y.eval_h0() == rep.zm);
    r.add("e^{hX} at h=0 is I", rep.ehx.eval_h0() == id);
    r.add("S(Y) at h=0 is -Z-", rep.s_y.eval_h0() == -rep.zm);
    r.add("S(H) at h=0 is -H", rep.s_h.eval_h0() == -rep.hm);

    r.append(verify_power_identities(rep, top));
    return r;
}

}  // namespace jordan
