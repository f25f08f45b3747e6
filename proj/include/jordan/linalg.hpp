#pragma once

// Fraction-free (Bareiss) elimination over Q[h]. Every intermediate quantity
// is a minor of the input, so each division is exact; kernels over the field
// of fractions are returned with polynomial entries.

#include "jordan/hpoly.hpp"

#include <cstddef>
#include <vector>

namespace jordan {

using PolyRows = std::vector<std::vector<HPoly>>;

struct Echelon {
    PolyRows rows;                         // rank() nonzero rows, fraction-free
    std::vector<std::size_t> pivot_cols;
    std::size_t rank() const { return pivot_cols.size(); }
};

Echelon fraction_free_echelon(PolyRows m);
HPoly bareiss_determinant(PolyRows m);
std::size_t poly_rank(const PolyRows& m);

/// Basis of { x : m x = 0 } over Q(h), one vector per free column, each made
/// primitive (entries share no common polynomial factor, constant factor
/// chosen so all rational coefficients are coprime integers).
std::vector<std::vector<HPoly>> kernel_basis(const PolyRows& m, std::size_t cols);

/// Divides out the polynomial gcd of the entries and rescales so that the
/// coefficients are coprime integers. The overall sign is left untouched
/// up to a positive factor.
std::vector<HPoly> make_primitive(std::vector<HPoly> v);

}  // namespace jordan
