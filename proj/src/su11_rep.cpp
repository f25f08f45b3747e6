#include "jordan/su11_rep.hpp"

#include "jordan/operator_series.hpp"
#include "jordan/sl2_rep.hpp"

#include <stdexcept>
#include <tuple>

namespace jordan {

namespace {

std::vector<int> su_grading(int cutoff) {
    std::vector<int> g;
    for (int i = 0; i <= cutoff; ++i) g.push_back(2 * i);
    return g;
}

long level_or_throw(const Rational& kappa, const Rational& mu) {
    Rational d = mu - kappa;
    if (d.get_den() != 1 || d < 0 || !d.get_num().fits_slong_p()) {
        throw std::invalid_argument("mu - kappa must be a nonnegative integer (mu=" + to_string(mu) +
                                    ", kappa=" + to_string(kappa) + ")");
    }
    return d.get_num().get_si();
}

}  // namespace

TruncationContract make_contract(const RepSU11& rep, std::string expression, int excursion) {
    const long valid = std::max<long>(0, rep.cutoff + 1 - excursion);
    return {std::move(expression), excursion, static_cast<std::size_t>(valid),
            rep.kappa + static_cast<long>(rep.cutoff - excursion)};
}

ClassicalSU11 build_posdes(const Rational& kappa, int cutoff) {
    if (cutoff < 1) throw std::invalid_argument("cutoff must be a positive integer");
    const auto dim = static_cast<std::size_t>(cutoff) + 1;
    auto grading = su_grading(cutoff);
    ClassicalSU11 g{HMatrix(dim, grading), HMatrix(dim, grading), HMatrix(dim, grading)};
    for (std::size_t i = 0; i < dim; ++i) {
        const Rational mu = kappa + static_cast<long>(i);
        g.f(i, i) = HPoly(Rational(2 * mu));
        if (i + 1 < dim) g.tp(i + 1, i) = HPoly(1);
        if (i >= 1) g.tm(i - 1, i) = HPoly(Rational((mu - kappa) * (mu + kappa - 1)));
    }
    return g;
}

RepSU11 make_rep_su11(const Rational& kappa, int cutoff) {
    auto cl = build_posdes(kappa, cutoff);
    RepSU11 rep;
    rep.kappa = kappa;
    rep.cutoff = cutoff;
    rep.tp = std::move(cl.tp);
    rep.tm = std::move(cl.tm);
    rep.f = std::move(cl.f);
    // T+ = (2/h) tanh(hR/2) and T- = cosh(hR/2) V cosh(hR/2) have the same
    // shape as the sl(2) map, so the same inversion applies.
    auto jg = build_jordanian(rep.tp, rep.tm);
    rep.r = std::move(jg.x);
    rep.v = std::move(jg.y);
    std::tie(rep.ehr, rep.emhr) = build_exponentials(rep.tp);

    const HMatrix s = series::sinh_h(rep.r);
    const HMatrix sym = (rep.v * s + s * rep.v).divide_by_h_power(1) * HPoly(Rational(-1, 2));
    rep.casimir = sym + rep.f * rep.f * HPoly(Rational(1, 4)) + s * s * HPoly(Rational(1, 4));
    const HMatrix half = rep.f * HPoly(Rational(1, 2));
    rep.casimir_classical = half * (half - HMatrix::identity(rep.dim(), rep.f.grading())) - rep.tp * rep.tm;
    return rep;
}

SU11Verification verify_su11(const RepSU11& rep, int n_max) {
    SU11Verification out;
    auto check = [&](std::string name, int excursion, const HMatrix& lhs, const HMatrix& rhs) {
        auto contract = make_contract(rep, name, excursion);
        const bool ok = equal_on_rows(lhs, rhs, contract.valid_rows);
        out.report.add(name, ok, "rows mu <= " + to_string(contract.mu_limit) + " (excursion " +
                                     std::to_string(excursion) + ")");
        out.contracts.push_back(std::move(contract));
    };

    const std::size_t n = rep.dim();
    const HMatrix id = HMatrix::identity(n, rep.f.grading());
    const HMatrix sinh_over_h = series::sinh_h_over_h(rep.r);
    const HMatrix cosh_hr = series::cosh_h(rep.r);
    const HMatrix cosh_half = series::cosh_half_h(rep.r);

    check("[F, R] = 2 sinh(hR)/h", 0, mat_commutator(rep.f, rep.r), sinh_over_h * HPoly(2));
    check("[F, V] = -V cosh(hR) - cosh(hR) V", 1, mat_commutator(rep.f, rep.v), -(rep.v * cosh_hr + cosh_hr * rep.v));
    check("[R, V] = -F", 1, mat_commutator(rep.r, rep.v), -rep.f);
    check("T+ = (2/h) tanh(hR/2) round trip", 0, series::two_over_h_tanh_half(rep.r), rep.tp);
    check("T- = cosh(hR/2) V cosh(hR/2) round trip", 1, cosh_half * rep.v * cosh_half, rep.tm);
    check("[F, T+] = 2 T+", 0, mat_commutator(rep.f, rep.tp), rep.tp * HPoly(2));
    check("[F, T-] = -2 T-", 1, mat_commutator(rep.f, rep.tm), rep.tm * HPoly(-2));
    check("[T+, T-] = -F", 1, mat_commutator(rep.tp, rep.tm), -rep.f);

    const Rational eigen = rep.kappa * (rep.kappa - 1);
    check("Casimir (Jordanian form) = Casimir (classical form)", 1, rep.casimir, rep.casimir_classical);
    check("Casimir (Jordanian form) = kappa(kappa-1) I", 1, rep.casimir, id * HPoly(eigen));
    check("Casimir (classical form) = kappa(kappa-1) I", 1, rep.casimir_classical, id * HPoly(eigen));

    for (int k = 1; k <= n_max; ++k) {
        const HMatrix rk = rep.r.pow(k);
        const HMatrix rk1 = rep.r.pow(k - 1);
        check("[F, R^" + std::to_string(k) + "] = 2n R^(n-1) sinh(hR)/h", 0, mat_commutator(rep.f, rk),
              rk1 * sinh_over_h * HPoly(2 * k));
        HMatrix rhs = rk1 * rep.f * HPoly(k);
        if (k >= 2) rhs += rep.r.pow(k - 2) * sinh_over_h * HPoly(k * (k - 1));
        check("[V, R^" + std::to_string(k) + "] = n R^(n-1) F + n(n-1) R^(n-2) sinh(hR)/h", 1,
              mat_commutator(rep.v, rk), rhs);
    }

    check("e^{hR} (Cayley form) = exp series", 0, rep.ehr, series::exp_h(rep.r));
    check("e^{hR} e^{-hR} = I", 0, rep.ehr * rep.emhr, id);

    // Transport from the sl(2)-style construction: X -> -R, Y -> V, H -> F with
    // classical generators Z+ = -T+, Z- = T-.
    auto transported = build_jordanian(-rep.tp, rep.tm);
    check("R = -X under the sl(2) transport", 0, rep.r, -transported.x);
    check("V = Y under the sl(2) transport", 0, rep.v, transported.y);

    check("R at h=0 is T+", 0, rep.r.eval_h0(), rep.tp);
    check("V at h=0 is T-", 0, rep.v.eval_h0(), rep.tm);
    return out;
}

HMatrix delta_F(const RepSU11& a, const RepSU11& b) { return kron(a.f, b.emhr) + kron(a.ehr, b.f); }

HMatrix delta_F_expanded(const RepSU11& a, const RepSU11& b) {
    const HMatrix ia = HMatrix::identity(a.dim(), a.f.grading());
    const HMatrix ib = HMatrix::identity(b.dim(), b.f.grading());
    const HMatrix tail_minus = series::cayley_h(-b.tp) - ib;
    const HMatrix tail_plus = series::cayley_h(a.tp) - ia;
    return kron(a.f, ib) + kron(ia, b.f) + kron(a.f, tail_minus) + kron(tail_plus, b.f);
}

AlphaTable alpha_su_recsu1(const Rational& kappa1, const Rational& mu1, const Rational& kappa2, const Rational& mu2,
                           int degree_max) {
    level_or_throw(kappa1, mu1);
    level_or_throw(kappa2, mu2);
    return alpha_first_recurrence(mu1, mu2, AlphaDomain::triangle(degree_max), Deformation::su11);
}

AlphaTable alpha_su_recsu2(const Rational& kappa1, const Rational& mu1, const Rational& kappa2, const Rational& mu2,
                           int degree_max) {
    level_or_throw(kappa1, mu1);
    level_or_throw(kappa2, mu2);
    return alpha_four_term_recurrence(mu1, mu2, AlphaDomain::triangle(degree_max), Deformation::su11);
}

AlphaTable alpha_su_recurrence(const Rational& kappa1, const Rational& mu1, const Rational& kappa2,
                               const Rational& mu2, int degree_max) {
    auto first = alpha_su_recsu1(kappa1, mu1, kappa2, mu2, degree_max);
    if (first != alpha_su_recsu2(kappa1, mu1, kappa2, mu2, degree_max)) {
        throw std::logic_error("su(1,1) recurrences disagree");
    }
    return first;
}

AlphaTable alpha_su_closed_form(const Rational& kappa1, const Rational& mu1, const Rational& kappa2,
                                const Rational& mu2, int degree_max, BinomialDomain binomials) {
    level_or_throw(kappa1, mu1);
    level_or_throw(kappa2, mu2);
    return alpha_binomial_sum(mu1, mu2, AlphaDomain::triangle(degree_max), Deformation::su11, binomials);
}

HVector su_weight_eigenvector(const RepSU11& a, const RepSU11& b, const Rational& mu1, const Rational& mu2,
                              const AlphaTable& table, int degree_max) {
    const long i1 = level_or_throw(a.kappa, mu1);
    const long i2 = level_or_throw(b.kappa, mu2);
    if (i1 + degree_max > a.cutoff || i2 + degree_max > b.cutoff) {
        throw std::invalid_argument("degree exceeds the truncation headroom");
    }
    HVector v(a.dim() * b.dim());
    for (const auto& [kl, coeff] : table.entries) {
        if (kl.first + kl.second > degree_max) continue;
        v[static_cast<std::size_t>(i1 + kl.first) * b.dim() + static_cast<std::size_t>(i2 + kl.second)] = coeff;
    }
    return v;
}

bool su_eigen_equation_holds(const RepSU11& a, const RepSU11& b, const HMatrix& df, const Rational& mu1,
                             const Rational& mu2, const HVector& v, int degree_max) {
    const long i1 = level_or_throw(a.kappa, mu1);
    const long i2 = level_or_throw(b.kappa, mu2);
    const HVector image = df * std::span<const HPoly>(v);
    const Rational eigen = 2 * (mu1 + mu2);
    for (std::size_t p = 0; p < a.dim(); ++p) {
        for (std::size_t q = 0; q < b.dim(); ++q) {
            const long rho = static_cast<long>(p) - i1;
            const long sigma = static_cast<long>(q) - i2;
            const std::size_t idx = p * b.dim() + q;
            if (rho < 0 || sigma < 0) {
                if (!image[idx].is_zero()) return false;
            } else if (rho + sigma <= degree_max) {
                if (image[idx] != v[idx] * eigen) return false;
            }
        }
    }
    return true;
}

DecompositionReport su_decomposition_rule(const Rational& kappa1, const Rational& kappa2, const Rational& mu_max) {
    const Rational floor_mu = kappa1 + kappa2;
    if (mu_max < floor_mu) throw std::invalid_argument("mu_max must be at least kappa1 + kappa2");
    DecompositionReport rep;
    rep.family = "su11";
    rep.first = kappa1;
    rep.second = kappa2;
    rep.mu_max = mu_max;
    for (Rational mu = floor_mu - 1; mu <= mu_max; mu += 1) {
        // pairs mu1 = kappa1 + a, mu2 = kappa2 + b with a, b >= 0
        int count = 0;
        for (Rational mu1 = kappa1; mu1 <= mu - kappa2; mu1 += 1) ++count;
        rep.n_of_m[mu] = count;
        const int expected = mu < floor_mu ? 0 : static_cast<int>(Rational(mu - floor_mu + 1).get_num().get_si());
        if (count != expected) throw std::logic_error("pair count disagrees with the closed rule at mu=" + to_string(mu));
    }
    for (Rational mu = floor_mu; mu <= mu_max; mu += 1) {
        const int mult = rep.n_of_m.at(mu) - rep.n_of_m.at(mu - 1);
        if (mult != 1) throw std::logic_error("multiplicity disagrees with the closed rule at mu=" + to_string(mu));
        rep.multiplicity[mu] = mult;
    }
    return rep;
}

}  // namespace jordan
