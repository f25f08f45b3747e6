#pragma once

// Operator-valued power series in a nilpotent matrix A, truncated exactly at
// the nilpotency index. All coefficients are polynomials in h.

#include "jordan/hmatrix.hpp"

namespace jordan::series {

/// (h/2)^n
HPoly half_h_power(int n);

/// Σ h^n A^n / n!
HMatrix exp_h(const HMatrix& a);
/// sinh(hA) = Σ h^{2k+1} A^{2k+1} / (2k+1)!
HMatrix sinh_h(const HMatrix& a);
/// sinh(hA)/h = Σ h^{2k} A^{2k+1} / (2k+1)!
HMatrix sinh_h_over_h(const HMatrix& a);
/// cosh(hA)
HMatrix cosh_h(const HMatrix& a);
/// sinh(hA/2)
HMatrix sinh_half_h(const HMatrix& a);
/// cosh(hA/2)
HMatrix cosh_half_h(const HMatrix& a);
/// (2/h) artanh(hA/2) = Σ (h/2)^{2k} A^{2k+1} / (2k+1)
HMatrix two_over_h_artanh_half(const HMatrix& a);
/// (2/h) tanh(hA/2), evaluated as 2 (sinh(hA/2)/h) cosh(hA/2)^{-1} with an
/// exact division by h.
HMatrix two_over_h_tanh_half(const HMatrix& a);
/// (1 + hA/2)/(1 - hA/2) = I + 2 Σ_{n>=1} (hA/2)^n
HMatrix cayley_h(const HMatrix& a);
/// Σ_{n>=start} (n + weight_offset) (sign * hA/2)^n, sign = ±1
HMatrix weighted_geometric(const HMatrix& a, int sign, int weight_offset, int start);

}  // namespace jordan::series
