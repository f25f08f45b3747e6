#include "jordan/hmatrix.hpp"

#include <stdexcept>
#include <string>

namespace jordan {

HMatrix::HMatrix(std::size_t dim, std::vector<int> grading)
    : dim_(dim), grading_(std::move(grading)), entries_(dim * dim) {
    if (grading_.empty()) grading_.assign(dim, 0);
    if (grading_.size() != dim) throw std::invalid_argument("grading length does not match dimension");
}

HMatrix HMatrix::identity(std::size_t dim, std::vector<int> grading) {
    HMatrix m(dim, std::move(grading));
    for (std::size_t i = 0; i < dim; ++i) m(i, i) = HPoly(1);
    return m;
}

void HMatrix::require_same_dim(const HMatrix& o, const char* op) const {
    if (dim_ != o.dim_) {
        throw std::invalid_argument(std::string("dimension mismatch in ") + op + ": " + std::to_string(dim_) +
                                    " vs " + std::to_string(o.dim_));
    }
}

bool HMatrix::is_zero() const {
    for (const auto& e : entries_) {
        if (!e.is_zero()) return false;
    }
    return true;
}

int HMatrix::max_degree() const {
    int d = -1;
    for (const auto& e : entries_) d = std::max(d, e.degree());
    return d;
}

HMatrix& HMatrix::operator+=(const HMatrix& o) {
    require_same_dim(o, "addition");
    for (std::size_t i = 0; i < entries_.size(); ++i) entries_[i] += o.entries_[i];
    return *this;
}

HMatrix& HMatrix::operator-=(const HMatrix& o) {
    require_same_dim(o, "subtraction");
    for (std::size_t i = 0; i < entries_.size(); ++i) entries_[i] -= o.entries_[i];
    return *this;
}

HMatrix& HMatrix::operator*=(const HPoly& c) {
    for (auto& e : entries_) {
        if (!e.is_zero()) e *= c;
    }
    return *this;
}

HMatrix HMatrix::operator-() const {
    HMatrix out = *this;
    for (auto& e : out.entries_) e = -e;
    return out;
}

HMatrix operator*(const HMatrix& a, const HMatrix& b) {
    a.require_same_dim(b, "multiplication");
    const std::size_t n = a.dim_;
    HMatrix out(n, a.grading_);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t k = 0; k < n; ++k) {
            const HPoly& aik = a(i, k);
            if (aik.is_zero()) continue;
            for (std::size_t j = 0; j < n; ++j) {
                const HPoly& bkj = b(k, j);
                if (bkj.is_zero()) continue;
                out(i, j) += aik * bkj;
            }
        }
    }
    return out;
}

HVector operator*(const HMatrix& a, std::span<const HPoly> v) {
    if (v.size() != a.dim_) throw std::invalid_argument("dimension mismatch in matrix-vector product");
    HVector out(a.dim_);
    for (std::size_t i = 0; i < a.dim_; ++i) {
        for (std::size_t k = 0; k < a.dim_; ++k) {
            if (a(i, k).is_zero() || v[k].is_zero()) continue;
            out[i] += a(i, k) * v[k];
        }
    }
    return out;
}

bool operator==(const HMatrix& a, const HMatrix& b) { return a.dim_ == b.dim_ && a.entries_ == b.entries_; }

bool equal_on_rows(const HMatrix& a, const HMatrix& b, std::size_t row_count) {
    a.require_same_dim(b, "row comparison");
    row_count = std::min(row_count, a.dim_);
    for (std::size_t r = 0; r < row_count; ++r) {
        for (std::size_t c = 0; c < a.dim_; ++c) {
            if (a(r, c) != b(r, c)) return false;
        }
    }
    return true;
}

HMatrix HMatrix::pow(int n) const {
    if (n < 0) throw std::invalid_argument("negative matrix power");
    HMatrix out = identity(dim_, grading_);
    for (int i = 0; i < n; ++i) out = out * *this;
    return out;
}

HMatrix HMatrix::negate_h() const {
    HMatrix out = *this;
    for (auto& e : out.entries_) e = e.negate_h();
    return out;
}

HMatrix HMatrix::eval_h0() const {
    HMatrix out = *this;
    for (auto& e : out.entries_) e = HPoly(e.eval_h0());
    return out;
}

HMatrix HMatrix::divide_by_h_power(int e) const {
    HMatrix out = *this;
    for (auto& x : out.entries_) x = x.divide_by_h_power(e);
    return out;
}

bool HMatrix::is_weight_shift(int d) const {
    for (std::size_t r = 0; r < dim_; ++r) {
        for (std::size_t c = 0; c < dim_; ++c) {
            if (!(*this)(r, c).is_zero() && grading_[r] != grading_[c] + 2 * d) return false;
        }
    }
    return true;
}

bool HMatrix::weight_changes_satisfy(const std::function<bool(int)>& allowed) const {
    for (std::size_t r = 0; r < dim_; ++r) {
        for (std::size_t c = 0; c < dim_; ++c) {
            if (!(*this)(r, c).is_zero() && !allowed((grading_[r] - grading_[c]) / 2)) return false;
        }
    }
    return true;
}

bool HMatrix::is_weight_nondecreasing() const {
    for (std::size_t r = 0; r < dim_; ++r) {
        for (std::size_t c = 0; c < dim_; ++c) {
            if (!(*this)(r, c).is_zero() && grading_[r] < grading_[c]) return false;
        }
    }
    return true;
}

bool HMatrix::is_nilpotent() const {
    HMatrix p = *this;
    for (std::size_t k = 1; k <= dim_; ++k) {
        if (p.is_zero()) return true;
        p = p * *this;
    }
    return p.is_zero();
}

HMatrix mat_add(const HMatrix& a, const HMatrix& b) { return a + b; }
HMatrix mat_mul(const HMatrix& a, const HMatrix& b) { return a * b; }
HMatrix mat_commutator(const HMatrix& a, const HMatrix& b) { return a * b - b * a; }

HMatrix kron(const HMatrix& a, const HMatrix& b) {
    const std::size_t na = a.dim();
    const std::size_t nb = b.dim();
    std::vector<int> grading(na * nb);
    for (std::size_t i = 0; i < na; ++i) {
        for (std::size_t j = 0; j < nb; ++j) grading[i * nb + j] = a.grading()[i] + b.grading()[j];
    }
    HMatrix out(na * nb, std::move(grading));
    for (std::size_t r1 = 0; r1 < na; ++r1) {
        for (std::size_t c1 = 0; c1 < na; ++c1) {
            const HPoly& x = a(r1, c1);
            if (x.is_zero()) continue;
            for (std::size_t r2 = 0; r2 < nb; ++r2) {
                for (std::size_t c2 = 0; c2 < nb; ++c2) {
                    const HPoly& y = b(r2, c2);
                    if (y.is_zero()) continue;
                    out(r1 * nb + r2, c1 * nb + c2) = x * y;
                }
            }
        }
    }
    return out;
}

HMatrix nilpotent_series(const HMatrix& a, const std::function<HPoly(int)>& coeff) {
    HMatrix out(a.dim(), a.grading());
    HMatrix power = HMatrix::identity(a.dim(), a.grading());
    for (int n = 0;; ++n) {
        if (power.is_zero()) return out;
        if (static_cast<std::size_t>(n) > a.dim()) throw std::domain_error("series argument is not nilpotent");
        HPoly c = coeff(n);
        if (!c.is_zero()) out += power * c;
        power = power * a;
    }
}

HMatrix unipotent_inverse(const HMatrix& m) {
    HMatrix nil = m - HMatrix::identity(m.dim(), m.grading());
    return nilpotent_series(nil, [](int n) { return HPoly(sign_power(n)); });
}

}  // namespace jordan
