#pragma once

#include "jordan/check_report.hpp"
#include "jordan/hmatrix.hpp"
#include "jordan/rational.hpp"

namespace jordan {

/// Classical sl(2) generators in the non-unitary convention
///   Z+|j m> = |j m+1>,  Z-|j m> = (j+m)(j-m+1)|j m-1>,  H|j m> = 2m|j m>.
struct ClassicalGenerators {
    HMatrix raising;
    HMatrix lowering;
    HMatrix cartan;
};

/// Jordanian generators recovered from a classical pair by inverting
///   Z+ = (2/h) tanh(hX/2),  Z- = cosh(hX/2) Y cosh(hX/2).
struct JordanianGenerators {
    HMatrix x;
    HMatrix y;
};

/// Finite-dimensional highest-weight representation of U_h(sl(2)).
///
/// Basis index k = 0..2j carries weight m = j - k (highest weight first), so
/// raising operators are strictly upper triangular.
struct RepSL2 {
    HalfInt j;
    std::size_t dim = 0;
    HMatrix zp, zm, hm;
    HMatrix x, y;
    HMatrix ehx, emhx;
    HMatrix casimir;
    HMatrix s_x, s_y, s_h;

    HalfInt weight_of(std::size_t k) const { return j - static_cast<int>(k); }
    std::size_t index_of(HalfInt m) const { return static_cast<std::size_t>((j - m).twice() / 2); }
};

/// Throws std::invalid_argument if 2j < 0.
ClassicalGenerators build_classical(HalfInt j);
JordanianGenerators build_jordanian(const HMatrix& raising, const HMatrix& lowering);
/// e^{hX} and e^{-hX} from the Cayley form in Z+.
std::pair<HMatrix, HMatrix> build_exponentials(const HMatrix& zp);
/// (1/2h){Y sinh hX + sinh hX Y} + H^2/4 + (sinh hX)^2/4, with an exact division by h.
HMatrix casimir_from_jordanian(const HMatrix& x, const HMatrix& y, const HMatrix& h);
/// Z+ Z- + (H/2)(H/2 - 1)
HMatrix casimir_from_classical(const HMatrix& zp, const HMatrix& zm, const HMatrix& h);

/// Builds every matrix of the representation.
RepSL2 make_rep_sl2(HalfInt j);

/// Defining relations, the classical map round trip, both Casimir forms,
/// exponential and antipode identities, nilpotency, and classical limits.
CheckReport verify_algebra(const RepSL2& rep);

/// [H, X^n] = 2n X^{n-1} sinh(hX)/h and
/// [Y, X^n] = -n X^{n-1} H - n(n-1) X^{n-2} sinh(hX)/h for n = 1..n_max.
CheckReport verify_power_identities(const RepSL2& rep, int n_max);

}  // namespace jordan
