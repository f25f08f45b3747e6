#pragma once

#include "jordan/check_report.hpp"
#include "jordan/hmatrix.hpp"
#include "jordan/sl2_rep.hpp"

namespace jordan {

/// Tensor product of two representations. Flat index k1 * right.dim + k2
/// (left factor major); grading is the sum of the factor gradings.
struct TensorSpace {
    RepSL2 left;
    RepSL2 right;

    TensorSpace(RepSL2 l, RepSL2 r) : left(std::move(l)), right(std::move(r)) {}
    TensorSpace(HalfInt j1, HalfInt j2) : left(make_rep_sl2(j1)), right(make_rep_sl2(j2)) {}

    std::size_t dim() const { return left.dim * right.dim; }
    std::size_t index(std::size_t k1, std::size_t k2) const { return k1 * right.dim + k2; }
    std::size_t index_of(HalfInt m1, HalfInt m2) const { return index(left.index_of(m1), right.index_of(m2)); }
    std::pair<std::size_t, std::size_t> split(std::size_t flat) const { return {flat / right.dim, flat % right.dim}; }
    std::vector<int> grading() const;
};

/// Coproduct images on a TensorSpace. The counit is zero on X, Y, H and is
/// not materialized.
struct CoproductSet {
    HMatrix dx, dy, dh, dzp, dzm;
};

struct PrimitiveCoproducts {
    HMatrix dx, dy, dh;
};

/// ΔX = X⊗1 + 1⊗X, ΔY = Y⊗e^{hX} + e^{-hX}⊗Y, ΔH = H⊗e^{hX} + e^{-hX}⊗H.
PrimitiveCoproducts delta_primitive(const TensorSpace& ts);
/// ΔH rewritten through Z+: H⊗1 + 1⊗H + H⊗2Σ(hZ+/2)^n + 2Σ(-hZ+/2)^n⊗H.
HMatrix delta_H_expanded(const TensorSpace& ts);
/// Δ(Z+) = (2/h) tanh(h ΔX / 2).
HMatrix delta_Zplus(const HMatrix& dx);
/// Δ(cosh(hX/2)) as a series in ΔX.
HMatrix delta_cosh_half_direct(const HMatrix& dx);
/// Δ(cosh(hX/2)) = cosh⊗cosh + sinh⊗sinh.
HMatrix delta_cosh_half_factored(const TensorSpace& ts);
/// Δ(Z-) = Δ(cosh hX/2) ΔY Δ(cosh hX/2).
HMatrix delta_Zminus_product(const HMatrix& dx, const HMatrix& dy);
/// Δ(Z-) from the six Z±-series, with C - H²/4 taken from each factor's Casimir.
HMatrix delta_Zminus_expanded(const TensorSpace& ts);

CoproductSet build_coproducts(const TensorSpace& ts);

/// Images of the defining relations and of the classical relations under Δ.
CheckReport verify_homomorphism(const CoproductSet& cs);
/// Both routes to Δ(H), Δ(cosh hX/2) and Δ(Z-) agree, plus classical limits.
CheckReport verify_coproduct_routes(const TensorSpace& ts);

/// dim - rank over the fraction field.
std::size_t kernel_dimension(const HMatrix& m);

}  // namespace jordan
