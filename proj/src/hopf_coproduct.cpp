#include "jordan/hopf_coproduct.hpp"

#include "jordan/linalg.hpp"
#include "jordan/operator_series.hpp"

namespace jordan {

std::vector<int> TensorSpace::grading() const {
    std::vector<int> g(dim());
    for (std::size_t a = 0; a < left.dim; ++a) {
        for (std::size_t b = 0; b < right.dim; ++b) g[index(a, b)] = left.hm.grading()[a] + right.hm.grading()[b];
    }
    return g;
}

namespace {

HMatrix id_of(const RepSL2& r) { return HMatrix::identity(r.dim, r.hm.grading()); }

}  // namespace

PrimitiveCoproducts delta_primitive(const TensorSpace& ts) {
    const auto& a = ts.left;
    const auto& b = ts.right;
    return {
        kron(a.x, id_of(b)) + kron(id_of(a), b.x),
        kron(a.y, b.ehx) + kron(a.emhx, b.y),
        kron(a.hm, b.ehx) + kron(a.emhx, b.hm),
    };
}

HMatrix delta_H_expanded(const TensorSpace& ts) {
    const auto& a = ts.left;
    const auto& b = ts.right;
    const HMatrix ia = id_of(a);
    const HMatrix ib = id_of(b);
    // 2Σ_{n>=1}(±hZ+/2)^n is the Cayley series minus the identity.
    const HMatrix tail_plus = series::cayley_h(b.zp) - ib;
    const HMatrix tail_minus = series::cayley_h(-a.zp) - ia;
    return kron(a.hm, ib) + kron(ia, b.hm) + kron(a.hm, tail_plus) + kron(tail_minus, b.hm);
}

HMatrix delta_Zplus(const HMatrix& dx) { return series::two_over_h_tanh_half(dx); }

HMatrix delta_cosh_half_direct(const HMatrix& dx) { return series::cosh_half_h(dx); }

HMatrix delta_cosh_half_factored(const TensorSpace& ts) {
    const auto& a = ts.left;
    const auto& b = ts.right;
    return kron(series::cosh_half_h(a.x), series::cosh_half_h(b.x)) +
           kron(series::sinh_half_h(a.x), series::sinh_half_h(b.x));
}

HMatrix delta_Zminus_product(const HMatrix& dx, const HMatrix& dy) {
    const HMatrix c = delta_cosh_half_direct(dx);
    return c * dy * c;
}

HMatrix delta_Zminus_expanded(const TensorSpace& ts) {
    const auto& a = ts.left;
    const auto& b = ts.right;
    auto shifted_casimir = [](const RepSL2& r) {
        return (r.casimir - r.hm * r.hm * HPoly(Rational(1, 4))) * HPoly::h();
    };
    auto sandwich = [](const RepSL2& r) { return r.zp * r.zm * r.zp * series::half_h_power(2); };

    using series::weighted_geometric;
    HMatrix out = kron(a.zm, weighted_geometric(b.zp, +1, 1, 0)) + kron(weighted_geometric(a.zp, -1, 1, 0), b.zm);
    out += kron(shifted_casimir(a), weighted_geometric(b.zp, +1, 0, 1));
    out -= kron(weighted_geometric(a.zp, -1, 0, 1), shifted_casimir(b));
    out += kron(sandwich(a), weighted_geometric(b.zp, +1, -1, 2));
    out += kron(weighted_geometric(a.zp, -1, -1, 2), sandwich(b));
    return out;
}

CoproductSet build_coproducts(const TensorSpace& ts) {
    auto prim = delta_primitive(ts);
    CoproductSet cs;
    cs.dzp = delta_Zplus(prim.dx);
    cs.dzm = delta_Zminus_product(prim.dx, prim.dy);
    cs.dx = std::move(prim.dx);
    cs.dy = std::move(prim.dy);
    cs.dh = std::move(prim.dh);
    return cs;
}

CheckReport verify_homomorphism(const CoproductSet& cs) {
    CheckReport r;
    const HMatrix cosh_dx = series::cosh_h(cs.dx);
    r.add("[dH, dX] = 2 sinh(h dX)/h", mat_commutator(cs.dh, cs.dx) == series::sinh_h_over_h(cs.dx) * HPoly(2));
    r.add("[dH, dY] = -dY cosh(h dX) - cosh(h dX) dY",
          mat_commutator(cs.dh, cs.dy) == -(cs.dy * cosh_dx + cosh_dx * cs.dy));
    r.add("[dX, dY] = dH", mat_commutator(cs.dx, cs.dy) == cs.dh);
    r.add("[dH, dZ+] = 2 dZ+", mat_commutator(cs.dh, cs.dzp) == cs.dzp * HPoly(2));
    r.add("[dH, dZ-] = -2 dZ-", mat_commutator(cs.dh, cs.dzm) == cs.dzm * HPoly(-2));
    r.add("[dZ+, dZ-] = dH", mat_commutator(cs.dzp, cs.dzm) == cs.dh);
    return r;
}

CheckReport verify_coproduct_routes(const TensorSpace& ts) {
    CheckReport r;
    const auto prim = delta_primitive(ts);
    const HMatrix dh_expanded = delta_H_expanded(ts);
    r.add("dH: primitive form = Z+ series form", prim.dh == dh_expanded);
    r.add("dcosh(hX/2): series in dX = cosh⊗cosh + sinh⊗sinh",
          delta_cosh_half_direct(prim.dx) == delta_cosh_half_factored(ts));
    const HMatrix dzm_product = delta_Zminus_product(prim.dx, prim.dy);
    r.add("dZ-: cosh sandwich = Z± series form", dzm_product == delta_Zminus_expanded(ts));

    const auto& a = ts.left;
    const auto& b = ts.right;
    const HMatrix ia = HMatrix::identity(a.dim, a.hm.grading());
    const HMatrix ib = HMatrix::identity(b.dim, b.hm.grading());
    const HMatrix dzp = delta_Zplus(prim.dx);
    r.add("dH at h=0 is H⊗1 + 1⊗H", prim.dh.eval_h0() == kron(a.hm, ib) + kron(ia, b.hm));
    r.add("dX at h=0 is Z+⊗1 + 1⊗Z+", prim.dx.eval_h0() == kron(a.zp, ib) + kron(ia, b.zp));
    r.add("dZ+ at h=0 is Z+⊗1 + 1⊗Z+", dzp.eval_h0() == kron(a.zp, ib) + kron(ia, b.zp));
    r.add("dZ- at h=0 is Z-⊗1 + 1⊗Z-", dzm_product.eval_h0() == kron(a.zm, ib) + kron(ia, b.zm));
    r.add("dY at h=0 is Z-⊗1 + 1⊗Z-", prim.dy.eval_h0() == kron(a.zm, ib) + kron(ia, b.zm));

    // dH maps weight w into weights >= w, acting as the classical 2(m1+m2) on the diagonal block.
    bool diagonal_ok = true;
    const HMatrix& dh = prim.dh;
    for (std::size_t r1 = 0; r1 < dh.dim(); ++r1) {
        for (std::size_t c1 = 0; c1 < dh.dim(); ++c1) {
            if (dh.grading()[r1] != dh.grading()[c1]) continue;
            HPoly expected = r1 == c1 ? HPoly(dh.grading()[r1]) : HPoly();
            if (dh(r1, c1) != expected) diagonal_ok = false;
        }
    }
    r.add("dH is weight-nondecreasing", dh.is_weight_nondecreasing());
    r.add("dH weight-diagonal block is 2(m1+m2) I", diagonal_ok);
    return r;
}

std::size_t kernel_dimension(const HMatrix& m) {
    PolyRows rows(m.dim(), std::vector<HPoly>(m.dim()));
    for (std::size_t r = 0; r < m.dim(); ++r) {
        for (std::size_t c = 0; c < m.dim(); ++c) rows[r][c] = m(r, c);
    }
    return m.dim() - poly_rank(rows);
}

}  // namespace jordan
