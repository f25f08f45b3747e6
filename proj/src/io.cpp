#include "jordan/io.hpp"

#include <sstream>
#include <stdexcept>

#ifndef JORDAN_VERSION
#define JORDAN_VERSION "0.0.0"
#endif

namespace jordan::io {

namespace {

Json header(std::string_view command, Json params) {
    Json doc;
    doc["command"] = command;
    doc["engine_version"] = engine_version();
    doc["params"] = std::move(params);
    return doc;
}

std::string rat(const Rational& r) { return to_string(r); }
Rational rat(const Json& j) { return parse_rational(j.get<std::string>()); }
HalfInt half(const Json& j) { return HalfInt::parse(j.get<std::string>()); }

// ----- CSV ------------------------------------------------------------------

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + "\"";
}

void csv_row(std::ostringstream& os, std::initializer_list<std::string> fields) {
    bool first = true;
    for (const auto& f : fields) {
        if (!first) os << ',';
        os << csv_field(f);
        first = false;
    }
    os << '\n';
}

// ----- LaTeX ----------------------------------------------------------------

std::string latex_rational(const Rational& r) {
    if (r.get_den() == 1) return r.get_num().get_str();
    std::string sign = r < 0 ? "-" : "";
    Integer num = abs(r.get_num());
    return sign + "\\frac{" + num.get_str() + "}{" + r.get_den().get_str() + "}";
}

std::string latex_weight(const Json& j) { return latex_rational(rat(j)); }

std::string latex_escape(const std::string& s) {
    std::string out;
    for (char c : s) {
        switch (c) {
            case '\\': out += "\\textbackslash{}"; break;
            case '&': case '%': case '$': case '#': case '_': case '{': case '}':
                out += '\\';
                out += c;
                break;
            case '^': out += "\\^{}"; break;
            case '~': out += "\\~{}"; break;
            default: out += c;
        }
    }
    return out;
}

std::string ket(const std::string& a, const std::string& b) { return "\\ket{" + a + "\\; " + b + "}"; }

std::string coupled_ket(const std::string& j1, const std::string& m1, const std::string& j2, const std::string& m2) {
    return "\\ket{(" + j1 + "\\; " + m1 + ")\\; (" + j2 + "\\; " + m2 + ")}";
}

// Appends "± coeff ket" to a running sum.
void append_term(std::string& sum, const HPoly& coeff, const std::string& basis) {
    if (coeff.is_zero()) return;
    const bool single = coeff.terms().size() == 1;
    const bool negative = single && coeff.terms().front().coeff < 0;
    const HPoly magnitude = negative ? -coeff : coeff;
    std::string body;
    if (magnitude == HPoly(1)) {
        body = basis;
    } else if (single) {
        body = latex_poly(magnitude) + " " + basis;
    } else {
        body = "\\left(" + latex_poly(magnitude) + "\\right) " + basis;
    }
    if (sum.empty()) {
        sum = (negative ? "-" : "") + body;
    } else {
        sum += (negative ? " - " : " + ") + body;
    }
}

const char* latex_preamble = "\\providecommand{\\ket}[1]{\\left| #1 \\right\\rangle}\n";

std::string render_csv(const Json& doc) {
    std::ostringstream os;
    const std::string command = doc.at("command");
    if (command == "decompose") {
        const bool sl2 = doc.at("params").at("family") == "sl2";
        csv_row(os, {sl2 ? "j" : "mu", "N"});
        for (const auto& e : doc.at("entries")) {
            csv_row(os, {e.at(sl2 ? "j" : "mu").get<std::string>(), std::to_string(e.at("N").get<int>())});
        }
    } else if (command == "eigvec") {
        csv_row(os, {"k", "l", "poly"});
        for (const auto& e : doc.at("entries")) {
            csv_row(os, {std::to_string(e.at("k").get<int>()), std::to_string(e.at("l").get<int>()),
                         e.at("poly").get<std::string>()});
        }
    } else if (command == "cgtable") {
        csv_row(os, {"j", "m", "basis", "m1", "m2", "coefficient"});
        for (const auto& e : doc.at("entries")) {
            for (const char* basis : {"eigen", "product"}) {
                for (const auto& c : e.at(basis)) {
                    csv_row(os, {e.at("j").get<std::string>(), e.at("m").get<std::string>(), basis,
                                 c.at("m1").get<std::string>(), c.at("m2").get<std::string>(),
                                 c.at("poly").get<std::string>()});
                }
            }
        }
    } else if (command == "verify") {
        const bool su = doc.at("params").at("family") == "su11";
        if (su) {
            csv_row(os, {"check", "passed", "excursion", "valid_rows", "mu_limit"});
            const auto& checks = doc.at("checks");
            const auto& entries = doc.at("entries");
            for (std::size_t i = 0; i < checks.size(); ++i) {
                csv_row(os, {checks[i].at("name").get<std::string>(), checks[i].at("passed").get<bool>() ? "1" : "0",
                             std::to_string(entries[i].at("excursion").get<int>()),
                             std::to_string(entries[i].at("valid_rows").get<std::size_t>()),
                             entries[i].at("mu_limit").get<std::string>()});
            }
        } else {
            csv_row(os, {"check", "passed"});
            for (const auto& c : doc.at("checks")) {
                csv_row(os, {c.at("name").get<std::string>(), c.at("passed").get<bool>() ? "1" : "0"});
            }
        }
    } else {
        throw std::invalid_argument("unknown document command: " + command);
    }
    return os.str();
}

std::string render_latex(const Json& doc) {
    std::ostringstream os;
    const std::string command = doc.at("command");
    const auto& params = doc.at("params");
    if (command == "decompose") {
        const bool sl2 = params.at("family") == "sl2";
        os << "\\begin{tabular}{cc}\n\\hline\n";
        os << (sl2 ? "$j$ & $N(j)$" : "$\\mu$ & $N(\\mu)$") << " \\\\\n\\hline\n";
        for (const auto& e : doc.at("entries")) {
            os << '$' << latex_weight(e.at(sl2 ? "j" : "mu")) << "$ & " << e.at("N").get<int>() << " \\\\\n";
        }
        os << "\\hline\n\\end{tabular}\n";
    } else if (command == "eigvec") {
        const bool sl2 = params.at("family") == "sl2";
        const std::string a = latex_weight(params.at(sl2 ? "j1" : "kappa1"));
        const std::string b = latex_weight(params.at(sl2 ? "j2" : "kappa2"));
        const Rational w1 = rat(params.at(sl2 ? "m1" : "mu1"));
        const Rational w2 = rat(params.at(sl2 ? "m2" : "mu2"));
        std::string sum;
        for (const auto& e : doc.at("entries")) {
            const std::string basis = ket(a, latex_rational(w1 + e.at("k").get<int>())) + " \\otimes " +
                                      ket(b, latex_rational(w2 + e.at("l").get<int>()));
            append_term(sum, HPoly::parse(e.at("poly").get<std::string>()), basis);
        }
        os << latex_preamble << "\\begin{equation}\n "
           << coupled_ket(a, latex_rational(w1), b, latex_rational(w2)) << " = " << sum << "\n\\end{equation}\n";
    } else if (command == "cgtable") {
        const std::string a = latex_weight(params.at("j1"));
        const std::string b = latex_weight(params.at("j2"));
        os << latex_preamble << "\\begin{eqnarray}\n";
        const auto& entries = doc.at("entries");
        for (std::size_t i = 0; i < entries.size(); ++i) {
            const auto& e = entries[i];
            std::string sum;
            for (const auto& c : e.at("eigen")) {
                append_term(sum, HPoly::parse(c.at("poly").get<std::string>()),
                            coupled_ket(a, latex_weight(c.at("m1")), b, latex_weight(c.at("m2"))));
            }
            os << " & & " << ket(latex_weight(e.at("j")), latex_weight(e.at("m"))) << " = " << sum
               << (i + 1 < entries.size() ? ", \\nonumber \\\\\n" : ". \\nonumber\n");
        }
        os << "\\end{eqnarray}\n";
    } else if (command == "verify") {
        const bool su = params.at("family") == "su11";
        os << (su ? "\\begin{tabular}{lcl}\n\\hline\nCheck & Result & Rows \\\\\n"
                  : "\\begin{tabular}{lc}\n\\hline\nCheck & Result \\\\\n")
           << "\\hline\n";
        const auto& checks = doc.at("checks");
        for (std::size_t i = 0; i < checks.size(); ++i) {
            os << "\\texttt{" << latex_escape(checks[i].at("name").get<std::string>()) << "} & "
               << (checks[i].at("passed").get<bool>() ? "pass" : "FAIL");
            if (su) os << " & $\\mu \\le " << latex_weight(doc.at("entries")[i].at("mu_limit")) << "$";
            os << " \\\\\n";
        }
        os << "\\hline\n\\end{tabular}\n";
    } else {
        throw std::invalid_argument("unknown document command: " + command);
    }
    return os.str();
}

}  // namespace

Format parse_format(std::string_view text) {
    if (text == "json") return Format::json;
    if (text == "csv") return Format::csv;
    if (text == "latex") return Format::latex;
    throw std::invalid_argument("unknown format: " + std::string(text));
}

std::string engine_version() { return JORDAN_VERSION; }

std::string latex_poly(const HPoly& p) {
    if (p.is_zero()) return "0";
    std::string out;
    for (const auto& t : p.terms()) {
        const bool negative = t.coeff < 0;
        const Rational mag = negative ? Rational(-t.coeff) : t.coeff;
        std::string body;
        if (t.exponent == 0) {
            body = latex_rational(mag);
        } else {
            if (mag != 1) body = latex_rational(mag) + " ";
            body += t.exponent == 1 ? "h" : "h^{" + std::to_string(t.exponent) + "}";
        }
        if (out.empty()) {
            out = (negative ? "-" : "") + body;
        } else {
            out += (negative ? " - " : " + ") + body;
        }
    }
    return out;
}

Json check_report_json(const CheckReport& report) {
    Json arr = Json::array();
    for (const auto& c : report.checks) {
        Json o;
        o["name"] = c.name;
        o["passed"] = c.passed;
        o["detail"] = c.detail;
        arr.push_back(std::move(o));
    }
    return arr;
}

CheckReport check_report_from_json(const Json& array) {
    CheckReport r;
    for (const auto& o : array) r.add(o.at("name"), o.at("passed"), o.at("detail"));
    return r;
}

Json decomposition_document(const DecompositionReport& report, const CheckReport& checks) {
    const bool sl2 = report.family == "sl2";
    Json params;
    params["family"] = report.family;
    params[sl2 ? "j1" : "kappa1"] = rat(report.first);
    params[sl2 ? "j2" : "kappa2"] = rat(report.second);
    if (report.mu_max) params["mu_max"] = rat(*report.mu_max);
    Json doc = header("decompose", std::move(params));

    // sl2 rows run from the top weight down; su11 rows from the bottom up.
    Json entries = Json::array();
    Json counts = Json::array();
    auto emit = [&](const auto& begin, const auto& end, const auto& cbegin, const auto& cend) {
        for (auto it = begin; it != end; ++it) {
            Json e;
            e[sl2 ? "j" : "mu"] = rat(it->first);
            e["N"] = it->second;
            entries.push_back(std::move(e));
        }
        for (auto it = cbegin; it != cend; ++it) {
            Json e;
            e["m"] = rat(it->first);
            e["n"] = it->second;
            counts.push_back(std::move(e));
        }
    };
    if (sl2) {
        emit(report.multiplicity.rbegin(), report.multiplicity.rend(), report.n_of_m.rbegin(), report.n_of_m.rend());
    } else {
        emit(report.multiplicity.begin(), report.multiplicity.end(), report.n_of_m.begin(), report.n_of_m.end());
    }
    doc["entries"] = std::move(entries);
    doc["counts"] = std::move(counts);
    doc["checks"] = check_report_json(checks);
    return doc;
}

DecompositionReport decomposition_from_document(const Json& doc) {
    const auto& params = doc.at("params");
    DecompositionReport r;
    r.family = params.at("family");
    const bool sl2 = r.family == "sl2";
    r.first = rat(params.at(sl2 ? "j1" : "kappa1"));
    r.second = rat(params.at(sl2 ? "j2" : "kappa2"));
    if (params.contains("mu_max")) r.mu_max = rat(params.at("mu_max"));
    for (const auto& e : doc.at("entries")) r.multiplicity[rat(e.at(sl2 ? "j" : "mu"))] = e.at("N");
    for (const auto& e : doc.at("counts")) r.n_of_m[rat(e.at("m"))] = e.at("n");
    return r;
}

Json alpha_document(const AlphaTable& table, Json params, const CheckReport& checks) {
    const bool sl2 = params.at("family") == "sl2";
    params[sl2 ? "m1" : "mu1"] = rat(table.w1);
    params[sl2 ? "m2" : "mu2"] = rat(table.w2);
    Json doc = header("eigvec", std::move(params));
    Json entries = Json::array();
    for (const auto& [kl, p] : table.ordered()) {
        Json e;
        e["k"] = kl.first;
        e["l"] = kl.second;
        e["poly"] = p.str();
        entries.push_back(std::move(e));
    }
    doc["entries"] = std::move(entries);
    doc["checks"] = check_report_json(checks);
    return doc;
}

AlphaTable alpha_from_document(const Json& doc) {
    const auto& params = doc.at("params");
    const bool sl2 = params.at("family") == "sl2";
    AlphaTable t;
    t.w1 = rat(params.at(sl2 ? "m1" : "mu1"));
    t.w2 = rat(params.at(sl2 ? "m2" : "mu2"));
    for (const auto& e : doc.at("entries")) {
        t.entries[{e.at("k").get<int>(), e.at("l").get<int>()}] = HPoly::parse(e.at("poly").get<std::string>());
    }
    return t;
}

Json cg_document(const CGTable& table) {
    Json params;
    params["family"] = "sl2";
    params["j1"] = table.j1.str();
    params["j2"] = table.j2.str();
    Json doc = header("cgtable", std::move(params));

    const int d2 = table.j2.twice() + 1;
    Json entries = Json::array();
    for (const auto& s : table.states) {
        Json e;
        e["j"] = s.j.str();
        e["m"] = s.m.str();
        Json eigen = Json::array();
        for (std::size_t i = 0; i < s.vec.labels.size(); ++i) {
            Json c;
            c["m1"] = s.vec.labels[i].first.str();
            c["m2"] = s.vec.labels[i].second.str();
            c["poly"] = s.vec.eigen_coeffs[i].str();
            eigen.push_back(std::move(c));
        }
        Json product = Json::array();
        const auto& coeffs = s.vec.vector.coeffs;
        for (std::size_t idx = 0; idx < coeffs.size(); ++idx) {
            if (coeffs[idx].is_zero()) continue;
            const int a = static_cast<int>(idx) / d2;
            const int b = static_cast<int>(idx) % d2;
            Json c;
            c["m1"] = (table.j1 - a).str();
            c["m2"] = (table.j2 - b).str();
            c["poly"] = coeffs[idx].str();
            product.push_back(std::move(c));
        }
        e["eigen"] = std::move(eigen);
        e["product"] = std::move(product);
        entries.push_back(std::move(e));
    }
    doc["entries"] = std::move(entries);
    doc["determinant"] = table.determinant.str();
    doc["eigen_coeffs_h_free"] = table.eigen_coeffs_h_free;
    doc["checks"] = check_report_json(table.checks);
    return doc;
}

CGTable cg_from_document(const Json& doc) {
    const auto& params = doc.at("params");
    CGTable t;
    t.j1 = half(params.at("j1"));
    t.j2 = half(params.at("j2"));
    const std::size_t d1 = static_cast<std::size_t>(t.j1.twice()) + 1;
    const std::size_t d2 = static_cast<std::size_t>(t.j2.twice()) + 1;
    std::vector<int> grading(d1 * d2);
    for (std::size_t a = 0; a < d1; ++a) {
        for (std::size_t b = 0; b < d2; ++b) {
            grading[a * d2 + b] = (t.j1 - static_cast<int>(a)).twice() + (t.j2 - static_cast<int>(b)).twice();
        }
    }
    for (const auto& e : doc.at("entries")) {
        CoupledState s{half(e.at("j")), half(e.at("m")), {}};
        for (const auto& c : e.at("eigen")) {
            s.vec.labels.emplace_back(half(c.at("m1")), half(c.at("m2")));
            s.vec.eigen_coeffs.push_back(HPoly::parse(c.at("poly").get<std::string>()));
        }
        s.vec.vector.twice_weight = s.m.twice();
        s.vec.vector.coeffs.assign(d1 * d2, HPoly());
        for (const auto& c : e.at("product")) {
            const std::size_t a = static_cast<std::size_t>((t.j1 - half(c.at("m1"))).twice() / 2);
            const std::size_t b = static_cast<std::size_t>((t.j2 - half(c.at("m2"))).twice() / 2);
            s.vec.vector.coeffs.at(a * d2 + b) = HPoly::parse(c.at("poly").get<std::string>());
        }
        t.states.push_back(std::move(s));
    }
    t.change_of_basis = HMatrix(d1 * d2, grading);
    for (std::size_t col = 0; col < t.states.size() && col < d1 * d2; ++col) {
        for (std::size_t row = 0; row < d1 * d2; ++row) t.change_of_basis(row, col) = t.states[col].vec.vector.coeffs[row];
    }
    t.determinant = HPoly::parse(doc.at("determinant").get<std::string>());
    t.eigen_coeffs_h_free = doc.at("eigen_coeffs_h_free");
    t.checks = check_report_from_json(doc.at("checks"));
    return t;
}

Json sl2_verification_document(HalfInt j, const CheckReport& checks) {
    Json params;
    params["family"] = "sl2";
    params["j"] = j.str();
    Json doc = header("verify", std::move(params));
    doc["entries"] = Json::array();
    doc["summary"] = {{"passed", checks.checks.size() - checks.failures()}, {"failed", checks.failures()}};
    doc["checks"] = check_report_json(checks);
    return doc;
}

Json su11_verification_document(const RepSU11& rep, const SU11Verification& result) {
    Json params;
    params["family"] = "su11";
    params["kappa"] = rat(rep.kappa);
    params["cutoff"] = rep.cutoff;
    Json doc = header("verify", std::move(params));
    Json entries = Json::array();
    for (const auto& c : result.contracts) {
        Json e;
        e["expression"] = c.expression;
        e["excursion"] = c.excursion;
        e["valid_rows"] = c.valid_rows;
        e["mu_limit"] = rat(c.mu_limit);
        entries.push_back(std::move(e));
    }
    doc["entries"] = std::move(entries);
    const auto& checks = result.report;
    doc["summary"] = {{"passed", checks.checks.size() - checks.failures()}, {"failed", checks.failures()}};
    doc["checks"] = check_report_json(checks);
    return doc;
}

SU11Verification su11_verification_from_document(const Json& doc) {
    SU11Verification v;
    for (const auto& e : doc.at("entries")) {
        v.contracts.push_back({e.at("expression"), e.at("excursion"), e.at("valid_rows"), rat(e.at("mu_limit"))});
    }
    v.report = check_report_from_json(doc.at("checks"));
    return v;
}

std::string dump(const Json& doc) { return doc.dump(2) + "\n"; }

std::string render(const Json& doc, Format format) {
    switch (format) {
        case Format::json: return dump(doc);
        case Format::csv: return render_csv(doc);
        case Format::latex: return render_latex(doc);
    }
    throw std::invalid_argument("unknown format");
}

}  // namespace jordan::io
