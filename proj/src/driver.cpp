#include "jordan/driver.hpp"

#include "jordan/sl2_rep.hpp"

#include <cstdlib>
#include <span>
#include <stdexcept>

namespace jordan::driver {

namespace {

class UsageError : public std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

const std::string& require(const std::optional<std::string>& value, const char* flag) {
    if (!value) throw UsageError(std::string("missing required option ") + flag);
    return *value;
}

void check_dim(std::size_t dim, std::size_t cap) {
    if (dim > cap) {
        throw UsageError("tensor dimension " + std::to_string(dim) + " exceeds JORDAN_CG_MAX_DIM=" +
                         std::to_string(cap));
    }
}

std::size_t sl2_dim(HalfInt j) {
    if (j.twice() < 0) throw std::invalid_argument("2j must be a nonnegative integer");
    return static_cast<std::size_t>(j.twice()) + 1;
}

bool h_order_ok(const AlphaTable& t) {
    for (const auto& [kl, p] : t.entries) {
        if (!p.divisible_by_h_power(kl.first + kl.second)) return false;
    }
    return true;
}

Outcome verify(const Request& rq) {
    if (rq.family == "sl2") {
        const HalfInt j = HalfInt::parse(require(rq.j, "--j"));
        check_dim(sl2_dim(j), rq.max_dim);
        const auto checks = verify_algebra(make_rep_sl2(j));
        return {checks.all_passed() ? pass : identity_failure, io::sl2_verification_document(j, checks), {}};
    }
    const Rational kappa = parse_rational(require(rq.kappa, "--kappa"));
    if (rq.cutoff < 1) throw UsageError("cutoff must be a positive integer");
    check_dim(static_cast<std::size_t>(rq.cutoff) + 1, rq.max_dim);
    const auto rep = make_rep_su11(kappa, rq.cutoff);
    const auto result = verify_su11(rep, rq.cutoff + 1);
    return {result.report.all_passed() ? pass : identity_failure, io::su11_verification_document(rep, result), {}};
}

Outcome decompose(const Request& rq) {
    CheckReport checks;
    DecompositionReport report;
    if (rq.family == "sl2") {
        const HalfInt j1 = HalfInt::parse(require(rq.j1, "--j1"));
        const HalfInt j2 = HalfInt::parse(require(rq.j2, "--j2"));
        const Integer product = Integer(sl2_dim(j1)) * Integer(sl2_dim(j2));
        report = decomposition_rule(j1, j2);
        Integer total = 0;
        bool multiplicity_free = true;
        for (const auto& [j, n] : report.multiplicity) {
            total += Integer(n) * Integer(2 * j + 1);
            multiplicity_free = multiplicity_free && (n == 0 || n == 1);
        }
        checks.add("pair counts agree with the closed rule", true);
        checks.add("sum N(j)(2j+1) = (2j1+1)(2j2+1)", total == product);
        checks.add("multiplicity-free", multiplicity_free);
    } else {
        const Rational k1 = parse_rational(require(rq.kappa1, "--kappa1"));
        const Rational k2 = parse_rational(require(rq.kappa2, "--kappa2"));
        const Rational mu_max = rq.mu_max ? parse_rational(*rq.mu_max) : Rational(k1 + k2 + 10);
        report = su_decomposition_rule(k1, k2, mu_max);
        checks.add("pair counts agree with the closed rule", true);
        checks.add("n(kappa1+kappa2-1) = 0", report.n_of_m.at(k1 + k2 - 1) == 0);
    }
    const bool ok = checks.all_passed();
    return {ok ? pass : internal, io::decomposition_document(report, checks), {}};
}

Outcome eigvec(const Request& rq) {
    CheckReport checks;
    io::Json params;
    params["family"] = rq.family;
    AlphaTable table;
    if (rq.family == "sl2") {
        const HalfInt j1 = HalfInt::parse(require(rq.j1, "--j1"));
        const HalfInt m1 = HalfInt::parse(require(rq.m1, "--m1"));
        const HalfInt j2 = HalfInt::parse(require(rq.j2, "--j2"));
        const HalfInt m2 = HalfInt::parse(require(rq.m2, "--m2"));
        check_dim(sl2_dim(j1) * sl2_dim(j2), rq.max_dim);
        table = alpha_closed_form(j1, m1, j2, m2);
        params["j1"] = j1.str();
        params["j2"] = j2.str();
        checks.add("closed form = first recurrence", table == alpha_recurrence_rec1(j1, m1, j2, m2));
        checks.add("closed form = four-term recurrence", table == alpha_recurrence_rec3(j1, m1, j2, m2));
        const TensorSpace ts(j1, j2);
        const HMatrix dh = delta_primitive(ts).dh;
        const auto v = weight_eigenvector(ts, m1, m2, table);
        checks.add("Delta(H) v = 2(m1+m2) v",
                   dh * std::span<const HPoly>(v.coeffs) == HMatrix::identity(ts.dim()) * HPoly((m1 + m2).twice()) *
                                                                std::span<const HPoly>(v.coeffs));
    } else {
        const Rational k1 = parse_rational(require(rq.kappa1, "--kappa1"));
        const Rational mu1 = parse_rational(require(rq.mu1, "--mu1"));
        const Rational k2 = parse_rational(require(rq.kappa2, "--kappa2"));
        const Rational mu2 = parse_rational(require(rq.mu2, "--mu2"));
        if (rq.degree < 0) throw UsageError("degree must be nonnegative");
        params["kappa1"] = to_string(k1);
        params["kappa2"] = to_string(k2);
        params["degree"] = rq.degree;
        table = alpha_su_recurrence(k1, mu1, k2, mu2, rq.degree);
        checks.add("first recurrence = four-term recurrence", true);
        const bool integral = Rational(2 * mu1).get_den() == 1 && Rational(2 * mu2).get_den() == 1;
        if (integral) {
            checks.add("closed form = recurrence",
                       table == alpha_su_closed_form(k1, mu1, k2, mu2, rq.degree, BinomialDomain::integer));
        } else {
            checks.add("closed form (falling-factorial binomials) = recurrence",
                       table == alpha_su_closed_form(k1, mu1, k2, mu2, rq.degree, BinomialDomain::polynomial));
        }
        const Rational level1 = mu1 - k1;
        const Rational level2 = mu2 - k2;
        const int n1 = std::max<int>(rq.cutoff, static_cast<int>(level1.get_num().get_si()) + rq.degree);
        const int n2 = std::max<int>(rq.cutoff, static_cast<int>(level2.get_num().get_si()) + rq.degree);
        check_dim(static_cast<std::size_t>(n1 + 1) * static_cast<std::size_t>(n2 + 1), rq.max_dim);
        params["cutoff1"] = n1;
        params["cutoff2"] = n2;
        const auto a = make_rep_su11(k1, n1);
        const auto b = make_rep_su11(k2, n2);
        const HMatrix df = delta_F(a, b);
        const auto v = su_weight_eigenvector(a, b, mu1, mu2, table, rq.degree);
        checks.add("Delta(F) v = 2(mu1+mu2) v up to total degree " + std::to_string(rq.degree),
                   su_eigen_equation_holds(a, b, df, mu1, mu2, v, rq.degree));
    }
    checks.add("alpha(k,l) divisible by h^(k+l)", h_order_ok(table));
    const bool ok = checks.all_passed();
    return {ok ? pass : internal, io::alpha_document(table, std::move(params), checks), {}};
}

Outcome cgtable(const Request& rq) {
    if (rq.family != "sl2") throw UsageError("cgtable supports the sl2 family only");
    const HalfInt j1 = HalfInt::parse(require(rq.j1, "--j1"));
    const HalfInt j2 = HalfInt::parse(require(rq.j2, "--j2"));
    check_dim(sl2_dim(j1) * sl2_dim(j2), rq.max_dim);
    const auto table = cg_table(j1, j2);
    return {table.checks.all_passed() ? pass : internal, io::cg_document(table), {}};
}

}  // namespace

std::size_t max_dim_from_env() {
    const char* raw = std::getenv("JORDAN_CG_MAX_DIM");
    if (raw == nullptr || *raw == '\0') return 400;
    const std::string text(raw);
    std::size_t pos = 0;
    unsigned long value = 0;
    try {
        value = std::stoul(text, &pos);
    } catch (const std::exception&) {
        pos = 0;
    }
    if (pos != text.size() || value == 0) throw std::invalid_argument("JORDAN_CG_MAX_DIM must be a positive integer");
    return value;
}

Outcome run(const Request& rq) {
    const auto start = std::chrono::steady_clock::now();
    Outcome out;
    try {
        if (rq.family != "sl2" && rq.family != "su11") throw UsageError("family must be sl2 or su11");
        if (rq.command == "verify") {
            out = verify(rq);
        } else if (rq.command == "decompose") {
            out = decompose(rq);
        } else if (rq.command == "eigvec") {
            out = eigvec(rq);
        } else if (rq.command == "cgtable") {
            out = cgtable(rq);
        } else {
            throw UsageError("unknown command: " + rq.command);
        }
    } catch (const std::invalid_argument& e) {
        return {usage, nullptr, e.what()};
    } catch (const std::exception& e) {
        return {internal, nullptr, std::string("internal inconsistency: ") + e.what()};
    }
    if (out.exit_code == identity_failure) out.message = "identity check failed";
    if (out.exit_code == internal) out.message = "internal cross-check failed";
    if (rq.timings) {
        const std::chrono::duration<double, std::milli> elapsed = std::chrono::steady_clock::now() - start;
        out.document["timings_ms"] = {{"total", elapsed.count()}};
    }
    return out;
}

}  // namespace jordan::driver
