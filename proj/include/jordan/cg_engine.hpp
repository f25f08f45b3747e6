#pragma once

#include "jordan/check_report.hpp"
#include "jordan/hopf_coproduct.hpp"

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace jordan {

/// Coefficients α(w1 + k, w2 + l) of a weight eigenvector relative to its
/// base weights (w1, w2). Absent indices are zero; the root (0,0) is 1.
struct AlphaTable {
    Rational w1, w2;
    std::map<std::pair<int, int>, HPoly> entries;

    const HPoly& at(int k, int l) const;
    /// Entries ordered by (k + l, k).
    std::vector<std::pair<std::pair<int, int>, HPoly>> ordered() const;
    bool operator==(const AlphaTable&) const = default;
};

/// Index sets for α tables: the sl(2) rectangle 0 <= k <= K, 0 <= l <= L,
/// or the su(1,1) triangle k + l <= D.
struct AlphaDomain {
    int k_max = 0;
    int l_max = 0;
    std::optional<int> total_max;

    static AlphaDomain rectangle(int k_max, int l_max) { return {k_max, l_max, std::nullopt}; }
    static AlphaDomain triangle(int degree) { return {degree, degree, degree}; }
    /// Indices sorted by (k + l, k).
    std::vector<std::pair<int, int>> indices() const;
};

/// Direction of the deformation in the eigen-equation: +1 for U_h(sl(2))
/// (Δ(H) carries (h/2)^n on the right factor), -1 for U_h(su(1,1)).
enum class Deformation { sl2 = 1, su11 = -1 };

enum class BinomialDomain {
    integer,     // requires 2*w1, 2*w2 integral; negative tops via (-1)^r C(|n|+r-1, r)
    polynomial,  // falling-factorial binomials, valid for any rational weights
};

/// Generic engines shared by both algebras.
AlphaTable alpha_first_recurrence(const Rational& w1, const Rational& w2, const AlphaDomain& dom, Deformation d);
AlphaTable alpha_four_term_recurrence(const Rational& w1, const Rational& w2, const AlphaDomain& dom, Deformation d);
AlphaTable alpha_binomial_sum(const Rational& w1, const Rational& w2, const AlphaDomain& dom, Deformation d,
                              BinomialDomain binomials);

/// U_h(sl(2)) eigenvector coefficients. All throw std::invalid_argument
/// unless |m_i| <= j_i with j_i - m_i integral.
AlphaTable alpha_recurrence_rec1(HalfInt j1, HalfInt m1, HalfInt j2, HalfInt m2);
AlphaTable alpha_recurrence_rec3(HalfInt j1, HalfInt m1, HalfInt j2, HalfInt m2);
AlphaTable alpha_closed_form(HalfInt j1, HalfInt m1, HalfInt j2, HalfInt m2);

struct WeightVector {
    HVector coeffs;    // over the product basis of the tensor space
    int twice_weight = 0;
    bool operator==(const WeightVector&) const = default;
};

using WeightPair = std::pair<HalfInt, HalfInt>;

/// Δ(H) eigenvector with eigenvalue 2(m1 + m2) built from an α table.
WeightVector weight_eigenvector(const TensorSpace& ts, HalfInt m1, HalfInt m2, const AlphaTable& table);
WeightVector weight_eigenvector(const TensorSpace& ts, HalfInt m1, HalfInt m2);

/// Weight pairs (m1, m2) with m1 + m2 = m, ordered by decreasing m2.
std::vector<WeightPair> weight_pairs(HalfInt j1, HalfInt j2, HalfInt m);

struct DecompositionReport {
    std::string family;            // "sl2" or "su11"
    Rational first, second;        // (j1, j2) or (kappa1, kappa2)
    std::optional<Rational> mu_max;
    std::map<Rational, int> n_of_m;        // eigenvector counts per weight
    std::map<Rational, int> multiplicity;  // N(j) or N(mu)
    bool operator==(const DecompositionReport&) const = default;
};

/// Pair counting, N(j) = n(j) - n(j+1); throws std::logic_error if the
/// counts disagree with the closed piecewise rule.
DecompositionReport decomposition_rule(HalfInt j1, HalfInt j2);

/// Everything the CG constructions share for one tensor product.
struct CouplingContext {
    TensorSpace space;
    CoproductSet coproducts;

    CouplingContext(HalfInt j1, HalfInt j2);
    HalfInt j1() const { return space.left.j; }
    HalfInt j2() const { return space.right.j; }
};

/// A vector expressed in the weight-eigenvector basis and in the product basis.
struct CoupledVector {
    std::vector<WeightPair> labels;
    std::vector<HPoly> eigen_coeffs;
    WeightVector vector;
    bool operator==(const CoupledVector&) const = default;
};

/// Kernel of ΔX on the weight-j eigenvectors, as coprime integers whose
/// largest-m1 coefficient has sign (-1)^{j1+j2-j}. Throws
/// std::invalid_argument("no such j in decomposition") outside |j1 - j2| <= j <= j1 + j2.
CoupledVector highest_weight_vector(const CouplingContext& ctx, HalfInt j);

/// |j, m-1> = Δ(Z-)|j, m> / ((j+m)(j-m+1)), from m = j down to -j.
std::vector<CoupledVector> lower_to_basis(const CouplingContext& ctx, const CoupledVector& hw, HalfInt j);

/// Expresses a Δ(H) eigenvector of weight m in the eigenvector basis; throws
/// std::logic_error when it is not in their span.
CoupledVector to_eigen_basis(const CouplingContext& ctx, const WeightVector& v);

struct CoupledState {
    HalfInt j, m;
    CoupledVector vec;
    bool operator==(const CoupledState&) const = default;
};

struct CGTable {
    HalfInt j1, j2;
    std::vector<CoupledState> states;  // sorted by (j desc, m desc)
    HMatrix change_of_basis;           // column i is states[i] in the product basis
    HPoly determinant;
    bool eigen_coeffs_h_free = true;
    CheckReport checks;
    bool operator==(const CGTable&) const = default;
};

CGTable cg_table(HalfInt j1, HalfInt j2);

}  // namespace jordan
