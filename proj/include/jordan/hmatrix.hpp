#pragma once

#include "jordan/hpoly.hpp"

#include <cstddef>
#include <functional>
#include <span>
#include <vector>

namespace jordan {

using HVector = std::vector<HPoly>;

/// Dense square matrix over Q[h] carrying a weight label per basis index.
///
/// grading[i] is twice the weight of basis vector i (possibly shifted by a
/// constant offset, which cancels in every comparison made here).
class HMatrix {
public:
    HMatrix() = default;
    /// Zero matrix; grading defaults to all zeros.
    explicit HMatrix(std::size_t dim, std::vector<int> grading = {});

    static HMatrix identity(std::size_t dim, std::vector<int> grading = {});

    std::size_t dim() const { return dim_; }
    const std::vector<int>& grading() const { return grading_; }

    HPoly& operator()(std::size_t r, std::size_t c) { return entries_[r * dim_ + c]; }
    const HPoly& operator()(std::size_t r, std::size_t c) const { return entries_[r * dim_ + c]; }

    bool is_zero() const;
    /// Highest h-exponent over all entries (-1 for the zero matrix).
    int max_degree() const;

    HMatrix& operator+=(const HMatrix& o);
    HMatrix& operator-=(const HMatrix& o);
    HMatrix& operator*=(const HPoly& c);
    HMatrix operator-() const;

    friend HMatrix operator+(HMatrix a, const HMatrix& b) { return a += b; }
    friend HMatrix operator-(HMatrix a, const HMatrix& b) { return a -= b; }
    friend HMatrix operator*(const HMatrix& a, const HMatrix& b);
    friend HMatrix operator*(HMatrix a, const HPoly& c) { return a *= c; }
    friend HMatrix operator*(const HPoly& c, HMatrix a) { return a *= c; }
    friend HVector operator*(const HMatrix& a, std::span<const HPoly> v);
    /// Entry-wise equality; grading is metadata and is not compared.
    friend bool operator==(const HMatrix& a, const HMatrix& b);

    HMatrix pow(int n) const;
    /// Entry-wise p(h) -> p(-h).
    HMatrix negate_h() const;
    /// Entry-wise h = 0 specialization.
    HMatrix eval_h0() const;
    /// Exact entry-wise division by h^e; throws std::domain_error on a remainder.
    HMatrix divide_by_h_power(int e) const;

    /// Entry (r,c) vanishes unless grading[r] == grading[c] + 2*d.
    bool is_weight_shift(int d) const;
    /// Every nonzero entry (r,c) has weight change d = (grading[r] - grading[c])/2
    /// with allowed(d).
    bool weight_changes_satisfy(const std::function<bool(int)>& allowed) const;
    /// Entry (r,c) vanishes unless grading[r] >= grading[c].
    bool is_weight_nondecreasing() const;
    /// True iff A^k = 0 for some k <= dim.
    bool is_nilpotent() const;

    /// Rows [0, row_count) of a and b agree.
    friend bool equal_on_rows(const HMatrix& a, const HMatrix& b, std::size_t row_count);

private:
    void require_same_dim(const HMatrix& o, const char* op) const;
    std::size_t dim_ = 0;
    std::vector<int> grading_;
    std::vector<HPoly> entries_;
};

HMatrix mat_add(const HMatrix& a, const HMatrix& b);
HMatrix mat_mul(const HMatrix& a, const HMatrix& b);
/// ab - ba
HMatrix mat_commutator(const HMatrix& a, const HMatrix& b);
/// Kronecker product; row-major (a index major). Grading is the pairwise sum.
HMatrix kron(const HMatrix& a, const HMatrix& b);

/// Σ_{n>=0} coeff(n) A^n for nilpotent A. The sum stops at the first vanishing
/// power; throws std::domain_error if A is not nilpotent.
HMatrix nilpotent_series(const HMatrix& a, const std::function<HPoly(int)>& coeff);

/// (I + N)^{-1} for nilpotent N = m - I, via the finite Neumann series.
HMatrix unipotent_inverse(const HMatrix& m);

}  // namespace jordan
