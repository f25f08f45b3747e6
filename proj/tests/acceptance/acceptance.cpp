// One line per acceptance criterion; exit status is nonzero if any fails.

#include "jordan/cg_engine.hpp"
#include "jordan/driver.hpp"
#include "jordan/hopf_coproduct.hpp"
#include "jordan/sl2_rep.hpp"
#include "jordan/su11_rep.hpp"

#include "../oracles/classical_cg_oracle.hpp"
#include "../oracles/closed_form_fixtures.hpp"

#include <array>
#include <chrono>
#include <cstdio>
#include <iostream>
#include <span>
#include <sstream>
#include <string>
#include <vector>

using namespace jordan;

namespace {

struct Result {
    bool passed = true;
    std::string detail;
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

std::string fmt_seconds(double s) {
    std::ostringstream os;
    os.precision(2);
    os << std::fixed << s << " s";
    return os.str();
}

void fail(Result& r, const std::string& why) {
    if (r.passed) r.detail = why;
    r.passed = false;
}

std::vector<std::pair<HalfInt, HalfInt>> pairs_with_total(int twice_total_max) {
    std::vector<std::pair<HalfInt, HalfInt>> out;
    for (int a = 0; a <= twice_total_max; ++a) {
        for (int b = 0; a + b <= twice_total_max; ++b) out.emplace_back(HalfInt::from_twice(a), HalfInt::from_twice(b));
    }
    return out;
}

Result algebra_identities() {
    Result r;
    const auto t0 = Clock::now();
    std::size_t count = 0;
    for (int tj = 0; tj <= 5; ++tj) {
        const auto report = verify_algebra(make_rep_sl2(HalfInt::from_twice(tj)));
        count += report.checks.size();
        for (const auto& c : report.checks) {
            if (!c.passed) fail(r, "j=" + HalfInt::from_twice(tj).str() + ": " + c.name);
        }
    }
    const double t = seconds_since(t0);
    if (t >= 5.0) fail(r, "runtime " + fmt_seconds(t) + " exceeds 5 s");
    if (r.passed) r.detail = std::to_string(count) + " identities, " + fmt_seconds(t);
    return r;
}

Result coproduct_routes() {
    Result r;
    const auto t0 = Clock::now();
    std::size_t spaces = 0;
    for (auto [j1, j2] : pairs_with_total(6)) {
        const TensorSpace ts(j1, j2);
        auto report = verify_coproduct_routes(ts);
        report.append(verify_homomorphism(build_coproducts(ts)));
        ++spaces;
        for (const auto& c : report.checks) {
            if (!c.passed) fail(r, "(" + j1.str() + "," + j2.str() + "): " + c.name);
        }
    }
    const double t = seconds_since(t0);
    if (t >= 30.0) fail(r, "runtime " + fmt_seconds(t) + " exceeds 30 s");
    if (r.passed) r.detail = std::to_string(spaces) + " tensor spaces, " + fmt_seconds(t);
    return r;
}

Result triple_agreement() {
    Result r;
    const auto t0 = Clock::now();
    std::size_t count = 0;
    for (auto [j1, j2] : pairs_with_total(8)) {
        const TensorSpace ts(j1, j2);
        const HMatrix dh = delta_primitive(ts).dh;
        for (HalfInt m1 = j1; m1 >= -j1; m1 = m1 - 1) {
            for (HalfInt m2 = j2; m2 >= -j2; m2 = m2 - 1) {
                const auto closed = alpha_closed_form(j1, m1, j2, m2);
                if (closed != alpha_recurrence_rec1(j1, m1, j2, m2) || closed != alpha_recurrence_rec3(j1, m1, j2, m2)) {
                    fail(r, "alpha routes disagree at (" + j1.str() + "," + m1.str() + "," + j2.str() + "," +
                                m2.str() + ")");
                }
                const auto v = weight_eigenvector(ts, m1, m2, closed);
                const HVector image = dh * std::span<const HPoly>(v.coeffs);
                for (std::size_t i = 0; i < image.size(); ++i) {
                    if (image[i] != v.coeffs[i] * Rational((m1 + m2).twice())) {
                        fail(r, "eigen-equation fails at (" + j1.str() + "," + m1.str() + "," + j2.str() + "," +
                                    m2.str() + ")");
                        break;
                    }
                }
                ++count;
            }
        }
    }
    if (r.passed) r.detail = std::to_string(count) + " weight pairs, " + fmt_seconds(seconds_since(t0));
    return r;
}

const CoupledState* find_state(const CGTable& t, HalfInt j, HalfInt m) {
    for (const auto& s : t.states) {
        if (s.j == j && s.m == m) return &s;
    }
    return nullptr;
}

Result closed_form_fixtures() {
    Result r;
    const std::array<std::pair<HalfInt, HalfInt>, 5> cases{{
        {HalfInt::from_twice(1), HalfInt::from_twice(1)},
        {HalfInt::from_int(1), HalfInt::from_twice(1)},
        {HalfInt::from_int(1), HalfInt::from_int(1)},
        {HalfInt::from_twice(3), HalfInt::from_int(1)},
        {HalfInt::from_int(2), HalfInt::from_twice(3)},
    }};
    std::size_t count = 0;
    for (auto [j1, j2] : cases) {
        const std::string where = "(" + j1.str() + "," + j2.str() + ") ";
        const TensorSpace ts(j1, j2);
        for (const auto& f : fixtures::eigenvector_fixtures(j1, j2)) {
            const auto v = weight_eigenvector(ts, f.m1, f.m2);
            if (!fixtures::matches_product(ts, v.coeffs, f.terms)) fail(r, where + f.name);
            ++count;
        }
        const auto table = cg_table(j1, j2);
        if (!table.checks.all_passed()) fail(r, where + "table assembly checks");
        for (const auto& f : fixtures::coupled_fixtures(j1, j2)) {
            const auto* s = find_state(table, f.m1, f.m2);
            if (s == nullptr || !fixtures::matches_eigen(s->vec, j1, j2, f.terms)) fail(r, where + f.name);
            ++count;
        }
    }
    if (r.passed) r.detail = std::to_string(count) + " fixtures over 5 tensor products";
    return r;
}

Result decomposition_rules() {
    Result r;
    std::size_t count = 0;
    for (int a = 0; a <= 5; ++a) {
        for (int b = 0; b <= 5; ++b) {
            const HalfInt j1 = HalfInt::from_twice(a);
            const HalfInt j2 = HalfInt::from_twice(b);
            const auto rep = decomposition_rule(j1, j2);
            Integer total = 0;
            for (const auto& [j, n] : rep.multiplicity) {
                const int tj = HalfInt::from_rational(j).twice();
                const int expected = (tj >= std::abs(a - b) && tj <= a + b) ? 1 : 0;
                if (n != expected) fail(r, "sl2 N(" + to_string(j) + ") for (" + j1.str() + "," + j2.str() + ")");
                total += Integer(n) * (tj + 1);
            }
            if (total != (a + 1) * (b + 1)) fail(r, "sl2 dimension identity for (" + j1.str() + "," + j2.str() + ")");
            ++count;
        }
    }
    const std::array<Rational, 3> kappas{Rational(1, 2), Rational(1), Rational(2, 3)};
    for (const auto& k1 : kappas) {
        for (const auto& k2 : kappas) {
            const Rational mu_max = k1 + k2 + 10;
            const auto rep = su_decomposition_rule(k1, k2, mu_max);
            if (rep.n_of_m.at(k1 + k2 - 1) != 0) fail(r, "su11 n below the floor");
            int rows = 0;
            for (const auto& [mu, n] : rep.multiplicity) {
                const Rational steps = mu - k1 - k2;
                if (n != 1 || steps.get_den() != 1 || steps < 0) fail(r, "su11 N(" + to_string(mu) + ")");
                const Rational count_mu = steps + 1;
                if (Rational(rep.n_of_m.at(mu)) != count_mu) fail(r, "su11 n(" + to_string(mu) + ")");
                ++rows;
            }
            if (rows != 11) fail(r, "su11 row count for (" + to_string(k1) + "," + to_string(k2) + ")");
            ++count;
        }
    }
    if (r.passed) r.detail = std::to_string(count) + " tensor products";
    return r;
}

Result classical_oracle() {
    Result r;
    const std::array<std::pair<int, int>, 3> cases{{{1, 1}, {2, 1}, {2, 2}}};
    for (auto [a, b] : cases) {
        const auto table = cg_table(HalfInt::from_twice(a), HalfInt::from_twice(b));
        const auto expected = oracle::classical_cg(a, b);
        const std::string where = "(" + HalfInt::from_twice(a).str() + "," + HalfInt::from_twice(b).str() + ")";
        if (expected.size() != table.states.size()) {
            fail(r, where + " state count");
            continue;
        }
        for (std::size_t i = 0; i < expected.size(); ++i) {
            const auto& s = table.states[i];
            if (s.j.twice() != expected[i].twice_j || s.m.twice() != expected[i].twice_m) {
                fail(r, where + " state order");
                continue;
            }
            for (std::size_t k = 0; k < expected[i].coeffs.size(); ++k) {
                if (s.vec.vector.coeffs[k].eval_h0() != expected[i].coeffs[k]) {
                    fail(r, where + " |" + s.j.str() + "," + s.m.str() + "> component " + std::to_string(k));
                    break;
                }
            }
        }
    }
    if (r.passed) r.detail = "h=0 tables equal classical lowering for (1/2,1/2), (1,1/2), (1,1)";
    return r;
}

Result su11_suite() {
    Result r;
    const auto t0 = Clock::now();
    const std::array<Rational, 3> kappas{Rational(1, 2), Rational(1), Rational(2, 3)};
    constexpr int cutoff = 12;
    constexpr int degree = 6;
    std::size_t identities = 0;
    std::size_t eigen = 0;
    std::vector<RepSU11> reps;
    for (const auto& k : kappas) {
        reps.push_back(make_rep_su11(k, cutoff));
        const auto v = verify_su11(reps.back(), cutoff + 1);
        identities += v.report.checks.size();
        for (const auto& c : v.report.checks) {
            if (!c.passed) fail(r, "kappa=" + to_string(k) + ": " + c.name);
        }
    }
    for (const auto& a : reps) {
        for (const auto& b : reps) {
            const HMatrix df = delta_F(a, b);
            if (df != delta_F_expanded(a, b)) fail(r, "Delta(F) routes disagree");
            for (int t1 = 0; t1 + degree <= cutoff; ++t1) {
                for (int t2 = 0; t2 + degree <= cutoff; ++t2) {
                    const Rational mu1 = a.kappa + t1;
                    const Rational mu2 = b.kappa + t2;
                    const auto rec1 = alpha_su_recsu1(a.kappa, mu1, b.kappa, mu2, degree);
                    const auto rec2 = alpha_su_recsu2(a.kappa, mu1, b.kappa, mu2, degree);
                    const bool integral = Rational(2 * mu1).get_den() == 1 && Rational(2 * mu2).get_den() == 1;
                    const auto closed = alpha_su_closed_form(
                        a.kappa, mu1, b.kappa, mu2, degree,
                        integral ? BinomialDomain::integer : BinomialDomain::polynomial);
                    if (rec1 != rec2 || rec1 != closed) {
                        fail(r, "alpha routes disagree at mu=(" + to_string(mu1) + "," + to_string(mu2) + ")");
                    }
                    const auto v = su_weight_eigenvector(a, b, mu1, mu2, rec1, degree);
                    if (!su_eigen_equation_holds(a, b, df, mu1, mu2, v, degree)) {
                        fail(r, "Delta(F) eigen-equation at mu=(" + to_string(mu1) + "," + to_string(mu2) + ")");
                    }
                    ++eigen;
                }
            }
        }
    }
    const double t = seconds_since(t0);
    if (t >= 60.0) fail(r, "runtime " + fmt_seconds(t) + " exceeds 60 s");
    if (r.passed) {
        r.detail = std::to_string(identities) + " identities, " + std::to_string(eigen) + " eigenvectors, " +
                   fmt_seconds(t);
    }
    return r;
}

#ifdef JORDAN_CLI_PATH
std::string capture(const std::string& args, int& status) {
    const std::string command = std::string(JORDAN_CLI_PATH) + " " + args + " 2>/dev/null";
    std::string out;
    FILE* pipe = popen(command.c_str(), "r");
    if (pipe == nullptr) {
        status = -1;
        return out;
    }
    std::array<char, 4096> buf{};
    std::size_t n = 0;
    while ((n = std::fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), n);
    status = pclose(pipe);
    return out;
}
#endif

Result determinism() {
    Result r;
    const std::vector<std::string> commands{
        "verify sl2 --j 2",
        "verify su11 --kappa 2/3 --cutoff 8 --format csv",
        "decompose sl2 --j1 1 --j2 3/2 --format latex",
        "decompose su11 --kappa1 1/2 --kappa2 1 --mu-max 5",
        "eigvec sl2 --j1 3/2 --m1 -1/2 --j2 1 --m2 0",
        "eigvec su11 --kappa1 2/3 --mu1 5/3 --kappa2 1 --mu2 1 --degree 4 --format csv",
        "cgtable sl2 --j1 1 --j2 1",
        "cgtable sl2 --j1 3/2 --j2 1 --format latex",
    };
#ifdef JORDAN_CLI_PATH
    for (const auto& c : commands) {
        int s1 = 0;
        int s2 = 0;
        const auto first = capture(c, s1);
        const auto second = capture(c, s2);
        if (first.empty() || first != second || s1 != s2) fail(r, "`" + c + "` differs between runs");
    }
    if (r.passed) r.detail = std::to_string(commands.size()) + " commands byte-identical across two runs";
#else
    (void)commands;
    fail(r, "command-line tool not built");
#endif
    return r;
}

}  // namespace

int main() {
    struct Criterion {
        const char* label;
        Result (*run)();
    };
    const std::array<Criterion, 8> criteria{{
        {"sl(2) algebra identities, j <= 5/2", algebra_identities},
        {"coproduct dual routes, j1+j2 <= 3", coproduct_routes},
        {"eigenvector coefficient triple agreement, j1+j2 <= 4", triple_agreement},
        {"top-weight eigenvector and coupled-state fixtures", closed_form_fixtures},
        {"decomposition rules", decomposition_rules},
        {"h=0 table vs classical lowering oracle", classical_oracle},
        {"su(1,1) suite, kappa in {1/2, 1, 2/3}, N=12, degree 6", su11_suite},
        {"CLI determinism", determinism},
    }};
    int failures = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        Result r;
        try {
            r = criteria[i].run();
        } catch (const std::exception& e) {
            r = {false, std::string("exception: ") + e.what()};
        }
        failures += r.passed ? 0 : 1;
        std::cout << (r.passed ? "[PASS] " : "[FAIL] ") << (i + 1) << ". " << criteria[i].label << " -- " << r.detail
                  << '\n';
    }
    std::cout << (failures == 0 ? "all criteria passed" : std::to_string(failures) + " criteria failed") << '\n';
    return failures == 0 ? 0 : 1;
}
