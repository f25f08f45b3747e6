#include "jordan/linalg.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace jordan {

Echelon fraction_free_echelon(PolyRows m) {
    Echelon out;
    if (m.empty()) return out;
    const std::size_t rows = m.size();
    const std::size_t cols = m[0].size();
    HPoly prev = 1;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t piv = r;
        while (piv < rows && m[piv][c].is_zero()) ++piv;
        if (piv == rows) continue;
        std::swap(m[r], m[piv]);
        for (std::size_t i = r + 1; i < rows; ++i) {
            for (std::size_t j = c + 1; j < cols; ++j) {
                HPoly v = m[i][j] * m[r][c] - m[i][c] * m[r][j];
                m[i][j] = poly_exact_div(v, prev);
            }
            m[i][c] = HPoly();
        }
        prev = m[r][c];
        out.pivot_cols.push_back(c);
        ++r;
    }
    m.resize(r);
    out.rows = std::move(m);
    return out;
}

HPoly bareiss_determinant(PolyRows m) {
    const std::size_t n = m.size();
    if (n == 0) return 1;
    for (const auto& row : m) {
        if (row.size() != n) throw std::invalid_argument("determinant of a non-square matrix");
    }
    HPoly prev = 1;
    int sign = 1;
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t piv = k;
        while (piv < n && m[piv][k].is_zero()) ++piv;
        if (piv == n) return {};
        if (piv != k) {
            std::swap(m[piv], m[k]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                m[i][j] = poly_exact_div(m[i][j] * m[k][k] - m[i][k] * m[k][j], prev);
            }
        }
        prev = m[k][k];
    }
    return sign == 1 ? m[n - 1][n - 1] : -m[n - 1][n - 1];
}

std::size_t poly_rank(const PolyRows& m) { return fraction_free_echelon(m).rank(); }

std::vector<HPoly> make_primitive(std::vector<HPoly> v) {
    HPoly g;
    for (const auto& x : v) g = poly_gcd(g, x);
    if (g.is_zero()) return v;
    // Keep a positive factor: divide by the monic gcd only.
    for (auto& x : v) x = poly_exact_div(x, g);
    Integer num_gcd = 0;
    Integer den_lcm = 1;
    for (const auto& x : v) {
        for (const auto& t : x.terms()) {
            mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), t.coeff.get_num_mpz_t());
            mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), t.coeff.get_den_mpz_t());
        }
    }
    Rational scale(den_lcm, num_gcd);
    scale.canonicalize();
    for (auto& x : v) x *= scale;
    return v;
}

std::vector<std::vector<HPoly>> kernel_basis(const PolyRows& m, std::size_t cols) {
    Echelon ech = fraction_free_echelon(m);
    const std::size_t rank = ech.rank();
    std::vector<bool> is_pivot(cols, false);
    for (auto c : ech.pivot_cols) is_pivot[c] = true;

    std::vector<std::vector<HPoly>> basis;
    for (std::size_t f = 0; f < cols; ++f) {
        if (is_pivot[f]) continue;
        // Columns P ∪ {f} in increasing order; the kernel of this rank x (rank+1)
        // block is spanned by its signed maximal minors.
        std::vector<std::size_t> sel = ech.pivot_cols;
        sel.push_back(f);
        std::sort(sel.begin(), sel.end());
        std::vector<HPoly> x(cols);
        for (std::size_t drop = 0; drop < sel.size(); ++drop) {
            PolyRows minor(rank);
            for (std::size_t i = 0; i < rank; ++i) {
                for (std::size_t s = 0; s < sel.size(); ++s) {
                    if (s != drop) minor[i].push_back(ech.rows[i][sel[s]]);
                }
            }
            HPoly d = bareiss_determinant(std::move(minor));
            x[sel[drop]] = (drop % 2 == 0) ? d : -d;
        }
        basis.push_back(make_primitive(std::move(x)));
    }
    return basis;
}

}  // namespace jordan
