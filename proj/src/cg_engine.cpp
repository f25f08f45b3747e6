#include "jordan/cg_engine.hpp"

#include "jordan/linalg.hpp"
#include "jordan/operator_series.hpp"

#include <algorithm>
#include <stdexcept>

namespace jordan {

// ---------------------------------------------------------------------------
// α tables

const HPoly& AlphaTable::at(int k, int l) const {
    static const HPoly zero;
    auto it = entries.find({k, l});
    return it == entries.end() ? zero : it->second;
}

std::vector<std::pair<std::pair<int, int>, HPoly>> AlphaTable::ordered() const {
    std::vector<std::pair<std::pair<int, int>, HPoly>> out(entries.begin(), entries.end());
    std::stable_sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
        const int ta = a.first.first + a.first.second;
        const int tb = b.first.first + b.first.second;
        return ta != tb ? ta < tb : a.first.first < b.first.first;
    });
    return out;
}

std::vector<std::pair<int, int>> AlphaDomain::indices() const {
    std::vector<std::pair<int, int>> out;
    const int top = total_max ? *total_max : k_max + l_max;
    for (int t = 0; t <= top; ++t) {
        for (int k = 0; k <= std::min(t, k_max); ++k) {
            const int l = t - k;
            if (l <= l_max) out.emplace_back(k, l);
        }
    }
    return out;
}

namespace {

// (sign * h/2)^n
HPoly signed_half_h(int sign, int n) { return series::half_h_power(n) * Rational(sign_power(sign < 0 ? n : 0)); }

long integral_or_throw(const Rational& x) {
    if (x.get_den() != 1 || !x.get_num().fits_slong_p()) {
        throw std::invalid_argument("non-integer binomial argument: " + to_string(x));
    }
    return x.get_num().get_si();
}

void validate_weight(HalfInt j, HalfInt m) {
    if (j.twice() < 0) throw std::invalid_argument("2j must be a nonnegative integer");
    if (m > j || m < -j || !(j - m).is_integer()) {
        throw std::invalid_argument("weight " + m.str() + " is not in the spin-" + j.str() + " representation");
    }
}

AlphaDomain sl2_domain(HalfInt j1, HalfInt m1, HalfInt j2, HalfInt m2) {
    validate_weight(j1, m1);
    validate_weight(j2, m2);
    return AlphaDomain::rectangle((j1 - m1).twice() / 2, (j2 - m2).twice() / 2);
}

}  // namespace

AlphaTable alpha_first_recurrence(const Rational& w1, const Rational& w2, const AlphaDomain& dom, Deformation d) {
    const int s = static_cast<int>(d);
    AlphaTable t{w1, w2, {}};
    for (auto [k, l] : dom.indices()) {
        if (k == 0 && l == 0) {
            t.entries[{0, 0}] = HPoly(1);
            continue;
        }
        HPoly acc;
        HPoly right_sum;
        for (int n = 1; n <= l; ++n) right_sum += signed_half_h(s, n) * t.at(k, l - n);
        acc += right_sum * Rational(2 * (w1 + k));
        HPoly left_sum;
        for (int n = 1; n <= k; ++n) left_sum += signed_half_h(-s, n) * t.at(k - n, l);
        acc += left_sum * Rational(2 * (w2 + l));
        HPoly value = acc * Rational(-1, k + l);
        t.entries[{k, l}] = std::move(value);
    }
    return t;
}

AlphaTable alpha_four_term_recurrence(const Rational& w1, const Rational& w2, const AlphaDomain& dom,
                                      Deformation d) {
    const int s = static_cast<int>(d);
    AlphaTable t{w1, w2, {}};
    const HPoly half_h = series::half_h_power(1);
    const HPoly quarter_h2 = series::half_h_power(2);
    for (auto [k, l] : dom.indices()) {
        if (k == 0 && l == 0) {
            t.entries[{0, 0}] = HPoly(1);
            continue;
        }
        HPoly acc = half_h * t.at(k, l - 1) * Rational(s * (2 * w1 + 1 + k - l));
        acc -= half_h * t.at(k - 1, l) * Rational(s * (2 * w2 + 1 - k + l));
        acc += quarter_h2 * t.at(k - 1, l - 1) * Rational(2 * w1 + 2 * w2 - 2 + k + l);
        HPoly value = acc * Rational(-1, k + l);
        t.entries[{k, l}] = std::move(value);
    }
    return t;
}

AlphaTable alpha_binomial_sum(const Rational& w1, const Rational& w2, const AlphaDomain& dom, Deformation d,
                              BinomialDomain binomials) {
    const int s = static_cast<int>(d);
    const Rational a = 2 * w1;
    const Rational b = 2 * w2;
    auto binom = [&](const Rational& top, long r) -> Rational {
        if (binomials == BinomialDomain::integer) return Rational(gen_binomial(integral_or_throw(top), r));
        return falling_binomial(top, r);
    };
    if (binomials == BinomialDomain::integer) {
        integral_or_throw(a);
        integral_or_throw(b);
    }
    AlphaTable t{w1, w2, {}};
    for (auto [k, l] : dom.indices()) {
        // Only p with every lower index >= 0 contributes.
        Rational sum = 0;
        for (int p = 0; p <= std::min(k, l); ++p) {
            sum += binom(a + k - p, l - p) * binom(a + k - 1, p) * binom(b, k - p);
        }
        const int sign = sign_power(l) * (s < 0 ? sign_power(k + l) : 1);
        HPoly value = series::half_h_power(k + l) * Rational(sign * sum);
        t.entries[{k, l}] = std::move(value);
    }
    return t;
}

AlphaTable alpha_recurrence_rec1(HalfInt j1, HalfInt m1, HalfInt j2, HalfInt m2) {
    return alpha_first_recurrence(m1.value(), m2.value(), sl2_domain(j1, m1, j2, m2), Deformation::sl2);
}

AlphaTable alpha_recurrence_rec3(HalfInt j1, HalfInt m1, HalfInt j2, HalfInt m2) {
    return alpha_four_term_recurrence(m1.value(), m2.value(), sl2_domain(j1, m1, j2, m2), Deformation::sl2);
}

AlphaTable alpha_closed_form(HalfInt j1, HalfInt m1, HalfInt j2, HalfInt m2) {
    return alpha_binomial_sum(m1.value(), m2.value(), sl2_domain(j1, m1, j2, m2), Deformation::sl2,
                              BinomialDomain::integer);
}

// ---------------------------------------------------------------------------
// Eigenvectors

WeightVector weight_eigenvector(const TensorSpace& ts, HalfInt m1, HalfInt m2, const AlphaTable& table) {
    validate_weight(ts.left.j, m1);
    validate_weight(ts.right.j, m2);
    WeightVector v{HVector(ts.dim()), (m1 + m2).twice()};
    for (const auto& [kl, coeff] : table.entries) {
        HalfInt a = m1 + kl.first;
        HalfInt b = m2 + kl.second;
        if (a > ts.left.j || b > ts.right.j) throw std::invalid_argument("alpha table exceeds the tensor space");
        v.coeffs[ts.index_of(a, b)] = coeff;
    }
    return v;
}

WeightVector weight_eigenvector(const TensorSpace& ts, HalfInt m1, HalfInt m2) {
    return weight_eigenvector(ts, m1, m2, alpha_closed_form(ts.left.j, m1, ts.right.j, m2));
}

std::vector<WeightPair> weight_pairs(HalfInt j1, HalfInt j2, HalfInt m) {
    std::vector<WeightPair> out;
    for (HalfInt m2 = j2; m2 >= -j2; m2 = m2 - 1) {
        HalfInt m1 = m - m2;
        if (m1 <= j1 && m1 >= -j1 && (j1 - m1).is_integer()) out.emplace_back(m1, m2);
    }
    return out;
}

// ---------------------------------------------------------------------------
// Decomposition rule

DecompositionReport decomposition_rule(HalfInt j1, HalfInt j2) {
    if (j1.twice() < 0 || j2.twice() < 0) throw std::invalid_argument("2j must be a nonnegative integer");
    DecompositionReport rep;
    rep.family = "sl2";
    rep.first = j1.value();
    rep.second = j2.value();
    const HalfInt top = j1 + j2;
    for (HalfInt m = -top; m <= top; m = m + 1) {
        rep.n_of_m[m.value()] = static_cast<int>(weight_pairs(j1, j2, m).size());
    }
    auto n = [&](HalfInt m) {
        auto it = rep.n_of_m.find(m.value());
        return it == rep.n_of_m.end() ? 0 : it->second;
    };
    const int lo = std::abs(j1.twice() - j2.twice());
    for (HalfInt j = top; j >= HalfInt::from_twice(0); j = j - 1) {
        rep.multiplicity[j.value()] = n(j) - n(j + 1);
    }
    // Closed piecewise rule for n(m) and N(j).
    for (const auto& [m, count] : rep.n_of_m) {
        const int tm = std::abs(HalfInt::from_rational(m).twice());
        int expected = 0;
        if (tm > top.twice()) expected = 0;
        else if (tm >= lo) expected = (top.twice() - tm) / 2 + 1;
        else expected = std::min(j1.twice(), j2.twice()) + 1;
        if (count != expected) throw std::logic_error("pair count disagrees with the piecewise rule at m=" + to_string(m));
    }
    for (const auto& [j, mult] : rep.multiplicity) {
        const int tj = HalfInt::from_rational(j).twice();
        const int expected = (tj <= top.twice() && tj >= lo) ? 1 : 0;
        if (mult != expected) throw std::logic_error("multiplicity disagrees with the closed rule at j=" + to_string(j));
    }
    return rep;
}

// ---------------------------------------------------------------------------
// Highest-weight vectors and lowering

CouplingContext::CouplingContext(HalfInt j1, HalfInt j2) : space(j1, j2), coproducts(build_coproducts(space)) {}

namespace {

int lowest_order_sign(const HPoly& p) {
    if (p.is_zero()) return 0;
    return p.terms().front().coeff < 0 ? -1 : 1;
}

std::vector<WeightVector> eigen_vectors(const CouplingContext& ctx, const std::vector<WeightPair>& labels) {
    std::vector<WeightVector> out;
    for (auto [m1, m2] : labels) out.push_back(weight_eigenvector(ctx.space, m1, m2));
    return out;
}

WeightVector combine(const std::vector<WeightVector>& basis, const std::vector<HPoly>& coeffs, int twice_weight,
                     std::size_t dim) {
    WeightVector v{HVector(dim), twice_weight};
    for (std::size_t i = 0; i < basis.size(); ++i) {
        if (coeffs[i].is_zero()) continue;
        for (std::size_t r = 0; r < dim; ++r) {
            if (!basis[i].coeffs[r].is_zero()) v.coeffs[r] += coeffs[i] * basis[i].coeffs[r];
        }
    }
    return v;
}

}  // namespace

CoupledVector highest_weight_vector(const CouplingContext& ctx, HalfInt j) {
    const HalfInt j1 = ctx.j1();
    const HalfInt j2 = ctx.j2();
    const HalfInt lo = HalfInt::from_twice(std::abs(j1.twice() - j2.twice()));
    if (j > j1 + j2 || j < lo || !(j1 + j2 - j).is_integer()) {
        throw std::invalid_argument("no such j in decomposition: " + j.str());
    }
    CoupledVector out;
    out.labels = weight_pairs(j1, j2, j);
    const auto basis = eigen_vectors(ctx, out.labels);
    const std::size_t dim = ctx.space.dim();

    // Columns: ΔX applied to each eigenvector.
    PolyRows system(dim, std::vector<HPoly>(basis.size()));
    for (std::size_t c = 0; c < basis.size(); ++c) {
        HVector img = ctx.coproducts.dx * std::span<const HPoly>(basis[c].coeffs);
        for (std::size_t r = 0; r < dim; ++r) system[r][c] = std::move(img[r]);
    }
    auto kernel = kernel_basis(system, basis.size());
    if (kernel.size() != 1) {
        throw std::logic_error("highest-weight space for j=" + j.str() + " has dimension " +
                               std::to_string(kernel.size()));
    }
    // Labels run by decreasing m2, so the last one has the largest m1.
    auto coeffs = std::move(kernel.front());
    const int want = sign_power((j1 + j2 - j).twice() / 2);
    if (lowest_order_sign(coeffs.back()) != want) {
        for (auto& c : coeffs) c = -c;
    }
    out.eigen_coeffs = coeffs;
    out.vector = combine(basis, coeffs, j.twice(), dim);
    return out;
}

CoupledVector to_eigen_basis(const CouplingContext& ctx, const WeightVector& v) {
    const HalfInt m = HalfInt::from_twice(v.twice_weight);
    CoupledVector out;
    out.labels = weight_pairs(ctx.j1(), ctx.j2(), m);
    // Each eigenvector has a unit component on its own product state and no
    // other component at the same total weight.
    for (auto [m1, m2] : out.labels) out.eigen_coeffs.push_back(v.coeffs[ctx.space.index_of(m1, m2)]);
    out.vector = v;
    const auto basis = eigen_vectors(ctx, out.labels);
    if (combine(basis, out.eigen_coeffs, v.twice_weight, ctx.space.dim()) != v) {
        throw std::logic_error("vector of weight " + m.str() + " is not in the span of the weight eigenvectors");
    }
    return out;
}

std::vector<CoupledVector> lower_to_basis(const CouplingContext& ctx, const CoupledVector& hw, HalfInt j) {
    std::vector<CoupledVector> out{hw};
    const Rational jv = j.value();
    for (HalfInt m = j; m > -j; m = m - 1) {
        const Rational mv = m.value();
        const Rational divisor = (jv + mv) * (jv - mv + 1);
        HVector next = ctx.coproducts.dzm * std::span<const HPoly>(out.back().vector.coeffs);
        for (auto& c : next) c *= Rational(1 / divisor);
        out.push_back(to_eigen_basis(ctx, WeightVector{std::move(next), (m - 1).twice()}));
    }
    HVector tail = ctx.coproducts.dzm * std::span<const HPoly>(out.back().vector.coeffs);
    if (std::any_of(tail.begin(), tail.end(), [](const HPoly& p) { return !p.is_zero(); })) {
        throw std::logic_error("lowering string for j=" + j.str() + " does not terminate");
    }
    return out;
}

// ---------------------------------------------------------------------------
// Full table

CGTable cg_table(HalfInt j1, HalfInt j2) {
    CouplingContext ctx(j1, j2);
    const auto& cs = ctx.coproducts;
    const std::size_t dim = ctx.space.dim();
    CGTable table;
    table.j1 = j1;
    table.j2 = j2;

    const auto decomposition = decomposition_rule(j1, j2);
    bool hw_ok = true;
    bool eigen_ok = true;
    bool raise_ok = true;
    bool classical_ok = true;

    const auto& a = ctx.space.left;
    const auto& b = ctx.space.right;
    const HMatrix cl_raise = kron(a.zp, HMatrix::identity(b.dim)) + kron(HMatrix::identity(a.dim), b.zp);

    for (auto it = decomposition.multiplicity.rbegin(); it != decomposition.multiplicity.rend(); ++it) {
        if (it->second == 0) continue;
        const HalfInt j = HalfInt::from_rational(it->first);
        const CoupledVector hw = highest_weight_vector(ctx, j);
        const auto& hv = hw.vector.coeffs;
        HVector killed = cs.dx * std::span<const HPoly>(hv);
        hw_ok = hw_ok && std::all_of(killed.begin(), killed.end(), [](const HPoly& p) { return p.is_zero(); });

        auto string = lower_to_basis(ctx, hw, j);
        for (std::size_t i = 0; i < string.size(); ++i) {
            const HalfInt m = j - static_cast<int>(i);
            const auto& v = string[i].vector.coeffs;
            HVector hv_img = cs.dh * std::span<const HPoly>(v);
            for (std::size_t r = 0; r < dim; ++r) eigen_ok = eigen_ok && hv_img[r] == v[r] * Rational(m.twice());
            // Δ(Z+)|j m> = |j m+1>, and Δ(Z+)|j j> = 0.
            HVector up = cs.dzp * std::span<const HPoly>(v);
            HVector expect = i == 0 ? HVector(dim) : string[i - 1].vector.coeffs;
            raise_ok = raise_ok && up == expect;
            // h = 0: the same relation for the classical coproduct.
            HVector v0(dim), e0(dim);
            for (std::size_t r = 0; r < dim; ++r) {
                v0[r] = HPoly(v[r].eval_h0());
                e0[r] = HPoly(expect[r].eval_h0());
            }
            classical_ok = classical_ok && (cl_raise * std::span<const HPoly>(v0)) == e0;
            for (const auto& c : string[i].eigen_coeffs) table.eigen_coeffs_h_free = table.eigen_coeffs_h_free && c.is_constant();
            table.states.push_back({j, m, string[i]});
        }
    }

    table.change_of_basis = HMatrix(dim, ctx.space.grading());
    PolyRows rows(dim, std::vector<HPoly>(dim));
    for (std::size_t c = 0; c < table.states.size(); ++c) {
        for (std::size_t r = 0; r < dim; ++r) {
            table.change_of_basis(r, c) = table.states[c].vec.vector.coeffs[r];
            rows[r][c] = table.states[c].vec.vector.coeffs[r];
        }
    }
    table.determinant = bareiss_determinant(std::move(rows));

    table.checks.add("state count equals tensor dimension", table.states.size() == dim);
    table.checks.add("highest-weight vectors are annihilated by dX", hw_ok);
    table.checks.add("coupled states are dH eigenvectors", eigen_ok);
    table.checks.add("dZ+ |j m> = |j m+1>", raise_ok);
    table.checks.add("h=0 classical cross-check: classical Z+ coproduct raises the h=0 table", classical_ok);
    table.checks.add("change of basis is invertible", !table.determinant.is_zero());
    return table;
}

}  // namespace jordan
