#pragma once

#include "jordan/cg_engine.hpp"
#include "jordan/check_report.hpp"
#include "jordan/hmatrix.hpp"

#include <string>
#include <vector>

namespace jordan {

/// Positive-discrete-series representation of U_h(su(1,1)) truncated to the
/// basis mu = kappa, kappa+1, ..., kappa+cutoff (index i <-> mu = kappa + i).
///
///   F|k mu> = 2mu|k mu>,  T+|k mu> = |k mu+1>,  T-|k mu> = (mu-k)(mu+k-1)|k mu-1>.
///
/// Truncation makes T+ annihilate the top basis vector; only raising-only
/// expressions are exact on every row.
struct RepSU11 {
    Rational kappa;
    int cutoff = 0;
    HMatrix tp, tm, f;
    HMatrix r, v;
    HMatrix ehr, emhr;
    HMatrix casimir;            // -(1/2h){V sinh hR + sinh hR V} + F²/4 + (sinh hR)²/4
    HMatrix casimir_classical;  // (F/2)(F/2 - 1) - T+ T-

    std::size_t dim() const { return static_cast<std::size_t>(cutoff) + 1; }
    Rational mu_of(std::size_t i) const { return kappa + static_cast<long>(i); }
};

/// Rows on which a truncated expression equals the compression of the
/// infinite-dimensional one. `excursion` is the largest number of lowering
/// factors (T-, V) in any monomial: a row mu is exact when mu + excursion
/// stays within the cutoff.
struct TruncationContract {
    std::string expression;
    int excursion = 0;
    std::size_t valid_rows = 0;  // rows [0, valid_rows) i.e. mu <= kappa + cutoff - excursion
    Rational mu_limit;
    bool operator==(const TruncationContract&) const = default;
};

TruncationContract make_contract(const RepSU11& rep, std::string expression, int excursion);

struct ClassicalSU11 {
    HMatrix tp, tm, f;
};

/// Throws std::invalid_argument for cutoff < 1.
ClassicalSU11 build_posdes(const Rational& kappa, int cutoff);
RepSU11 make_rep_su11(const Rational& kappa, int cutoff);

struct SU11Verification {
    CheckReport report;
    std::vector<TruncationContract> contracts;  // one per check, same order
};

/// Commutation relations, both Casimir forms and their eigenvalue, the power
/// identities up to n_max, exponentials, round trip of the classical map,
/// sign transport from the sl(2) construction, and classical limits; each
/// restricted to its truncation-valid rows.
SU11Verification verify_su11(const RepSU11& rep, int n_max);

/// Δ(F) = F⊗e^{-hR} + e^{hR}⊗F on the truncated tensor space.
HMatrix delta_F(const RepSU11& a, const RepSU11& b);
/// Δ(F) = F⊗1 + 1⊗F + F⊗2Σ(-hT+/2)^n + 2Σ(hT+/2)^n⊗F.
HMatrix delta_F_expanded(const RepSU11& a, const RepSU11& b);

/// Eigenvector coefficients of Δ(F); all throw std::invalid_argument unless
/// mu_i - kappa_i is a nonnegative integer.
AlphaTable alpha_su_recsu1(const Rational& kappa1, const Rational& mu1, const Rational& kappa2, const Rational& mu2,
                           int degree_max);
AlphaTable alpha_su_recsu2(const Rational& kappa1, const Rational& mu1, const Rational& kappa2, const Rational& mu2,
                           int degree_max);
/// Both recurrences; throws std::logic_error if they disagree.
AlphaTable alpha_su_recurrence(const Rational& kappa1, const Rational& mu1, const Rational& kappa2,
                               const Rational& mu2, int degree_max);
/// Binomial closed form. With BinomialDomain::integer, throws
/// std::invalid_argument("non-integer binomial argument") unless 2mu_i are integers.
AlphaTable alpha_su_closed_form(const Rational& kappa1, const Rational& mu1, const Rational& kappa2,
                                const Rational& mu2, int degree_max,
                                BinomialDomain binomials = BinomialDomain::integer);

/// Places the table on the truncated tensor space. Throws std::invalid_argument
/// if mu_i + degree exceeds either cutoff.
HVector su_weight_eigenvector(const RepSU11& a, const RepSU11& b, const Rational& mu1, const Rational& mu2,
                              const AlphaTable& table, int degree_max);

/// Δ(F) v = 2(mu1 + mu2) v on every component of total degree <= degree_max,
/// and Δ(F) v vanishes below the base weights.
bool su_eigen_equation_holds(const RepSU11& a, const RepSU11& b, const HMatrix& df, const Rational& mu1,
                             const Rational& mu2, const HVector& v, int degree_max);

/// n(mu) by pair counting for mu in [kappa1+kappa2-1, mu_max], N(mu) = n(mu) - n(mu-1).
/// Throws std::logic_error if the counts disagree with the closed rule.
DecompositionReport su_decomposition_rule(const Rational& kappa1, const Rational& kappa2, const Rational& mu_max);

}  // namespace jordan
