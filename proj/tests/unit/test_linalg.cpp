#include "doctest.h"

#include "jordan/linalg.hpp"

#include <random>

using namespace jordan;

namespace {

// Cofactor expansion; independent of the elimination code.
HPoly laplace_det(const PolyRows& m) {
    const std::size_t n = m.size();
    if (n == 0) return HPoly(1);
    if (n == 1) return m[0][0];
    HPoly det;
    for (std::size_t c = 0; c < n; ++c) {
        PolyRows minor;
        for (std::size_t r = 1; r < n; ++r) {
            std::vector<HPoly> row;
            for (std::size_t k = 0; k < n; ++k) {
                if (k != c) row.push_back(m[r][k]);
            }
            minor.push_back(row);
        }
        const HPoly term = m[0][c] * laplace_det(minor);
        det = c % 2 == 0 ? det + term : det - term;
    }
    return det;
}

PolyRows random_rows(std::mt19937& rng, std::size_t r, std::size_t c) {
    std::uniform_int_distribution<int> num(-3, 3);
    std::uniform_int_distribution<int> deg(0, 2);
    PolyRows m(r, std::vector<HPoly>(c));
    for (auto& row : m) {
        for (auto& e : row) e = HPoly::monomial(num(rng), deg(rng)) + HPoly(num(rng));
    }
    return m;
}

}  // namespace

TEST_CASE("Bareiss determinant agrees with cofactor expansion") {
    std::mt19937 rng(9);
    for (std::size_t n = 1; n <= 4; ++n) {
        for (int i = 0; i < 6; ++i) {
            const auto m = random_rows(rng, n, n);
            CHECK(bareiss_determinant(m) == laplace_det(m));
        }
    }
}

TEST_CASE("singular matrix has zero determinant and deficient rank") {
    const HPoly h = HPoly::h();
    PolyRows m{{HPoly(1), h}, {h, h * h}};
    CHECK(bareiss_determinant(m).is_zero());
    CHECK(poly_rank(m) == 1);
    const auto ker = kernel_basis(m, 2);
    REQUIRE(ker.size() == 1);
    CHECK(ker[0][0] * HPoly(1) + ker[0][1] * h == HPoly());
}

TEST_CASE("kernel vectors are annihilated and primitive") {
    std::mt19937 rng(13);
    for (int i = 0; i < 10; ++i) {
        const auto m = random_rows(rng, 2, 4);
        const auto ker = kernel_basis(m, 4);
        CHECK(ker.size() == 4 - poly_rank(m));
        for (const auto& v : ker) {
            for (const auto& row : m) {
                HPoly dot;
                for (std::size_t c = 0; c < 4; ++c) dot += row[c] * v[c];
                CHECK(dot.is_zero());
            }
            HPoly g;
            for (const auto& e : v) g = poly_gcd(g, e);
            CHECK(g == HPoly(1));
        }
    }
}

TEST_CASE("make_primitive scales to coprime integer content") {
    const HPoly h = HPoly::h();
    const auto v = make_primitive({h * Rational(2, 3), h * h * Rational(4, 9)});
    CHECK(v[0] == HPoly(3));
    CHECK(v[1] == h * Rational(2));
}
