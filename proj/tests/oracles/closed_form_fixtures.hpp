#pragma once

// Closed-form weight eigenvectors and coupled states for the top three
// weights of j1 (x) j2, transcribed as functions of (j1, j2).

#include "jordan/cg_engine.hpp"

#include <optional>
#include <string>
#include <vector>

namespace fixtures {

using jordan::HalfInt;
using jordan::HPoly;
using jordan::Rational;

struct Term {
    HalfInt m1, m2;
    HPoly coeff;
};

struct Fixture {
    std::string name;
    HalfInt m1, m2;           // eigenvector label, or (j, m) for coupled states
    std::vector<Term> terms;  // product-basis terms for eigenvectors, eigen-basis terms for coupled states
};

inline HPoly h_times(const Rational& c, int power = 1) { return HPoly::monomial(c, power); }

inline bool valid(HalfInt j, HalfInt m) { return m <= j && m >= -j; }

/// Weight eigenvectors |(j1 m1)(j2 m2)> in the product basis.
inline std::vector<Fixture> eigenvector_fixtures(HalfInt j1, HalfInt j2) {
    const Rational a = j1.value();
    const Rational b = j2.value();
    std::vector<Fixture> out;
    out.push_back({"j1j2", j1, j2, {{j1, j2, HPoly(1)}}});
    if (valid(j2, j2 - 1)) {
        out.push_back({"m1p1", j1, j2 - 1, {{j1, j2 - 1, HPoly(1)}, {j1, j2, h_times(-a)}}});
    }
    if (valid(j1, j1 - 1)) {
        out.push_back({"m1p2", j1 - 1, j2, {{j1 - 1, j2, HPoly(1)}, {j1, j2, h_times(b)}}});
    }
    if (valid(j2, j2 - 2)) {
        out.push_back({"m2p1", j1, j2 - 2,
                       {{j1, j2 - 2, HPoly(1)},
                        {j1, j2 - 1, h_times(-a)},
                        {j1, j2, h_times(Rational(a * (2 * a - 1) / 4), 2)}}});
    }
    if (valid(j1, j1 - 1) && valid(j2, j2 - 1)) {
        out.push_back({"m2p2", j1 - 1, j2 - 1,
                       {{j1 - 1, j2 - 1, HPoly(1)},
                        {j1 - 1, j2, h_times(-(a - 1))},
                        {j1, j2 - 1, h_times(b - 1)},
                        {j1, j2, h_times(Rational(-(2 * a * b - a - b) / 2), 2)}}});
    }
    if (valid(j1, j1 - 2)) {
        out.push_back({"m2p3", j1 - 2, j2,
                       {{j1 - 2, j2, HPoly(1)},
                        {j1 - 1, j2, h_times(b)},
                        {j1, j2, h_times(Rational(b * (2 * b - 1) / 4), 2)}}});
    }
    return out;
}

/// Coupled states |j m> in the weight-eigenvector basis.
inline std::vector<Fixture> coupled_fixtures(HalfInt j1, HalfInt j2) {
    const Rational a = j1.value();
    const Rational b = j2.value();
    const HalfInt top = j1 + j2;
    const Rational J = top.value();
    const HalfInt floor = j1 > j2 ? j1 - j2 : j2 - j1;
    std::vector<Fixture> out;
    out.push_back({"high", top, top, {{j1, j2, HPoly(1)}}});
    if (top - 1 >= floor) {
        out.push_back({"secondhigh", top - 1, top - 1, {{j1 - 1, j2, HPoly(1)}, {j1, j2 - 1, HPoly(-1)}}});
    }
    if (top - 2 >= floor) {
        out.push_back({"thirdhigh", top - 2, top - 2,
                       {{j1, j2 - 2, HPoly(1)}, {j1 - 1, j2 - 1, HPoly(-1)}, {j1 - 2, j2, HPoly(1)}}});
    }
    if (top.twice() >= 1) {
        out.push_back({"lowered |J, J-1>", top, top - 1,
                       {{j1 - 1, j2, HPoly(Rational(a / J))}, {j1, j2 - 1, HPoly(Rational(b / J))}}});
    }
    if (top.twice() >= 2) {
        const Rational d = J * (2 * J - 1);
        out.push_back({"lowered |J, J-2>", top, top - 2,
                       {{j1, j2 - 2, HPoly(Rational(b * (2 * b - 1) / d))},
                        {j1 - 1, j2 - 1, HPoly(Rational(2 * a * b / d))},
                        {j1 - 2, j2, HPoly(Rational(a * (2 * a - 1) / d))}}});
    }
    if (top - 1 >= floor && top.twice() >= 3) {
        const Rational d = J - 1;
        out.push_back({"lowered |J-1, J-2>", top - 1, top - 2,
                       {{j1, j2 - 2, HPoly(Rational(-(2 * b - 1) / d))},
                        {j1 - 1, j2 - 1, HPoly(Rational((b - a) / d))},
                        {j1 - 2, j2, HPoly(Rational((2 * a - 1) / d))}}});
    }
    return out;
}

/// Compares a product-basis vector against the fixture terms; every other
/// component must vanish. Terms whose labels are out of range must have a zero coefficient.
inline bool matches_product(const jordan::TensorSpace& ts, const jordan::HVector& v, const std::vector<Term>& terms) {
    jordan::HVector expected(ts.dim());
    for (const auto& t : terms) {
        if (!valid(ts.left.j, t.m1) || !valid(ts.right.j, t.m2)) {
            if (!t.coeff.is_zero()) return false;
            continue;
        }
        expected[ts.index_of(t.m1, t.m2)] = t.coeff;
    }
    return expected == v;
}

inline bool matches_eigen(const jordan::CoupledVector& v, HalfInt j1, HalfInt j2, const std::vector<Term>& terms) {
    std::vector<HPoly> expected(v.labels.size());
    for (const auto& t : terms) {
        if (!valid(j1, t.m1) || !valid(j2, t.m2)) {
            if (!t.coeff.is_zero()) return false;
            continue;
        }
        bool found = false;
        for (std::size_t i = 0; i < v.labels.size(); ++i) {
            if (v.labels[i] == jordan::WeightPair{t.m1, t.m2}) {
                expected[i] = t.coeff;
                found = true;
            }
        }
        if (!found) return false;
    }
    return expected == v.eigen_coeffs;
}

}  // namespace fixtures
