#include "doctest.h"

#include "jordan/driver.hpp"
#include "jordan/io.hpp"

using namespace jordan;

namespace {

HalfInt spin(int twice) { return HalfInt::from_twice(twice); }

driver::Request request(std::string command, std::string family) {
    driver::Request rq;
    rq.command = std::move(command);
    rq.family = std::move(family);
    return rq;
}

}  // namespace

TEST_CASE("decomposition documents round-trip") {
    for (const auto& rep : {decomposition_rule(spin(2), spin(3)), decomposition_rule(spin(0), spin(0)),
                            su_decomposition_rule(Rational(2, 3), Rational(1), Rational(6))}) {
        const auto doc = io::decomposition_document(rep);
        CHECK(io::decomposition_from_document(doc) == rep);
        CHECK(io::decomposition_from_document(io::Json::parse(io::dump(doc))) == rep);
    }
}

TEST_CASE("alpha documents round-trip and are ordered by (k+l, k)") {
    const auto t = alpha_closed_form(spin(3), spin(-1), spin(2), spin(0));
    io::Json params;
    params["family"] = "sl2";
    const auto doc = io::alpha_document(t, params, {});
    CHECK(io::alpha_from_document(io::Json::parse(io::dump(doc))) == t);
    int prev_total = -1;
    int prev_k = -1;
    for (const auto& e : doc.at("entries")) {
        const int k = e.at("k");
        const int total = k + e.at("l").get<int>();
        CHECK((total > prev_total || (total == prev_total && k > prev_k)));
        prev_total = total;
        prev_k = k;
    }
    io::Json su_params;
    su_params["family"] = "su11";
    const auto su = alpha_su_recurrence(Rational(2, 3), Rational(5, 3), Rational(1), Rational(1), 4);
    CHECK(io::alpha_from_document(io::alpha_document(su, su_params, {})) == su);
}

TEST_CASE("CG documents round-trip") {
    for (auto [a, b] : {std::pair{1, 1}, {2, 1}, {3, 2}}) {
        const auto table = cg_table(spin(a), spin(b));
        const auto back = io::cg_from_document(io::Json::parse(io::dump(io::cg_document(table))));
        CHECK(back == table);
    }
}

TEST_CASE("verification documents round-trip") {
    const auto rep = make_rep_su11(Rational(1, 2), 6);
    const auto result = verify_su11(rep, 3);
    const auto back = io::su11_verification_from_document(io::su11_verification_document(rep, result));
    CHECK(back.report == result.report);
    CHECK(back.contracts == result.contracts);
    const auto checks = verify_algebra(make_rep_sl2(spin(2)));
    CHECK(io::check_report_from_json(io::sl2_verification_document(spin(2), checks).at("checks")) == checks);
}

TEST_CASE("documents follow the common schema") {
    const auto doc = io::decomposition_document(decomposition_rule(spin(1), spin(1)));
    std::vector<std::string> keys;
    for (const auto& [k, v] : doc.items()) keys.push_back(k);
    CHECK(keys == std::vector<std::string>{"command", "engine_version", "params", "entries", "counts", "checks"});
}

TEST_CASE("CSV is a view of the document") {
    const auto doc = io::decomposition_document(decomposition_rule(spin(2), spin(3)));
    CHECK(io::render(doc, io::Format::csv) == "j,N\n5/2,1\n3/2,1\n1/2,1\n");
    io::Json edited = doc;
    edited["entries"][0]["N"] = 7;
    CHECK(io::render(edited, io::Format::csv) == "j,N\n5/2,7\n3/2,1\n1/2,1\n");
}

TEST_CASE("LaTeX rendering") {
    CHECK(io::latex_poly(HPoly(1) - HPoly::monomial(Rational(3, 2), 2)) == "1 - \\frac{3}{2} h^{2}");
    CHECK(io::latex_poly(HPoly::monomial(-1, 1)) == "-h");
    CHECK(io::latex_poly(HPoly()) == "0");
    const auto doc = io::cg_document(cg_table(spin(1), spin(1)));
    const auto tex = io::render(doc, io::Format::latex);
    CHECK(tex.find(R"(\ket{0\; 0} = \ket{(\frac{1}{2}\; -\frac{1}{2})\; (\frac{1}{2}\; \frac{1}{2})} - )"
                   R"(\ket{(\frac{1}{2}\; \frac{1}{2})\; (\frac{1}{2}\; -\frac{1}{2})})") != std::string::npos);
}

TEST_CASE("format parsing") {
    CHECK(io::parse_format("csv") == io::Format::csv);
    CHECK_THROWS_AS(io::parse_format("xml"), std::invalid_argument);
}

TEST_CASE("driver exit codes") {
    auto rq = request("verify", "sl2");
    rq.j = "2";
    CHECK(driver::run(rq).exit_code == driver::pass);
    rq.j = "-1";
    const auto bad = driver::run(rq);
    CHECK(bad.exit_code == driver::usage);
    CHECK(bad.message == "2j must be a nonnegative integer");
    CHECK(bad.document.is_null());

    auto missing = request("decompose", "sl2");
    missing.j1 = "1";
    CHECK(driver::run(missing).exit_code == driver::usage);

    auto su = request("cgtable", "su11");
    su.j1 = "1";
    su.j2 = "1";
    CHECK(driver::run(su).exit_code == driver::usage);

    auto capped = request("cgtable", "sl2");
    capped.j1 = "2";
    capped.j2 = "2";
    capped.max_dim = 10;
    CHECK(driver::run(capped).exit_code == driver::usage);
    capped.max_dim = 400;
    CHECK(driver::run(capped).exit_code == driver::pass);
}

TEST_CASE("driver output is deterministic unless timings are requested") {
    auto rq = request("eigvec", "su11");
    rq.kappa1 = "1/2";
    rq.mu1 = "1/2";
    rq.kappa2 = "1";
    rq.mu2 = "1";
    rq.degree = 4;
    const auto first = driver::run(rq);
    CHECK(first.exit_code == driver::pass);
    CHECK(first.document.at("entries").size() == 15);
    CHECK(io::dump(first.document) == io::dump(driver::run(rq).document));
    CHECK_FALSE(first.document.contains("timings_ms"));
    rq.timings = true;
    CHECK(driver::run(rq).document.contains("timings_ms"));
}

TEST_CASE("eigvec sl2 entry (0,2) is divisible by h^2") {
    auto rq = request("eigvec", "sl2");
    rq.j1 = "1";
    rq.m1 = "1";
    rq.j2 = "1";
    rq.m2 = "-1";
    const auto out = driver::run(rq);
    CHECK(out.exit_code == driver::pass);
    const auto t = io::alpha_from_document(out.document);
    CHECK(t.at(0, 2).divisible_by_h_power(2));
    CHECK_FALSE(t.at(0, 2).is_zero());
}

TEST_CASE("su11 verify reports valid rows per check") {
    auto rq = request("verify", "su11");
    rq.kappa = "1/2";
    rq.cutoff = 8;
    const auto out = driver::run(rq);
    CHECK(out.exit_code == driver::pass);
    const auto& entries = out.document.at("entries");
    REQUIRE(entries.size() == out.document.at("checks").size());
    for (const auto& e : entries) CHECK(e.contains("valid_rows"));
}
