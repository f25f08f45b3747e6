#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "jordan/driver.hpp"

#include <optional>
#include <string>
#include <tuple>

namespace py = pybind11;
using namespace jordan;

namespace {

std::tuple<int, std::string, std::string> run(const std::string& command, const std::string& family,
                                              const py::dict& options) {
    driver::Request rq;
    rq.command = command;
    rq.family = family;
    rq.max_dim = driver::max_dim_from_env();
    auto text = [&](const char* key) -> std::optional<std::string> {
        if (!options.contains(key) || options[key].is_none()) return std::nullopt;
        return py::str(options[key]).cast<std::string>();
    };
    rq.j = text("j");
    rq.kappa = text("kappa");
    rq.j1 = text("j1");
    rq.j2 = text("j2");
    rq.m1 = text("m1");
    rq.m2 = text("m2");
    rq.kappa1 = text("kappa1");
    rq.kappa2 = text("kappa2");
    rq.mu1 = text("mu1");
    rq.mu2 = text("mu2");
    rq.mu_max = text("mu_max");
    if (options.contains("cutoff")) rq.cutoff = options["cutoff"].cast<int>();
    if (options.contains("degree")) rq.degree = options["degree"].cast<int>();
    if (options.contains("timings")) rq.timings = options["timings"].cast<bool>();
    if (options.contains("max_dim")) rq.max_dim = options["max_dim"].cast<std::size_t>();
    driver::Outcome out;
    {
        py::gil_scoped_release release;
        out = driver::run(rq);
    }
    return {out.exit_code, out.document.is_null() ? std::string() : io::dump(out.document), out.message};
}

std::map<std::pair<int, int>, std::string> alpha(const std::string& j1, const std::string& m1, const std::string& j2,
                                                 const std::string& m2, const std::string& route) {
    const auto a = HalfInt::parse(j1), b = HalfInt::parse(m1), c = HalfInt::parse(j2), d = HalfInt::parse(m2);
    AlphaTable t;
    if (route == "closed") {
        t = alpha_closed_form(a, b, c, d);
    } else if (route == "rec1") {
        t = alpha_recurrence_rec1(a, b, c, d);
    } else if (route == "rec3") {
        t = alpha_recurrence_rec3(a, b, c, d);
    } else {
        throw std::invalid_argument("route must be closed, rec1 or rec3");
    }
    std::map<std::pair<int, int>, std::string> out;
    for (const auto& [kl, p] : t.entries) out[kl] = p.str();
    return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Jordanian U_h(sl(2)) / U_h(su(1,1)) engine";
    m.attr("__version__") = io::engine_version();

    m.def("run", &run, py::arg("command"), py::arg("family"), py::arg("options") = py::dict(),
          "Run a CLI command; returns (exit_code, json_document, message).");
    m.def("render", [](const std::string& doc, const std::string& format) {
        return io::render(io::Json::parse(doc), io::parse_format(format));
    }, py::arg("document"), py::arg("format"));

    m.def("decomposition", [](const std::string& j1, const std::string& j2) {
        std::vector<std::pair<std::string, int>> out;
        const auto rep = decomposition_rule(HalfInt::parse(j1), HalfInt::parse(j2));
        for (auto it = rep.multiplicity.rbegin(); it != rep.multiplicity.rend(); ++it) {
            if (it->second != 0) out.emplace_back(to_string(it->first), it->second);
        }
        return out;
    }, py::arg("j1"), py::arg("j2"), "Nonzero multiplicities N(j), largest j first.");

    m.def("alpha_table", &alpha, py::arg("j1"), py::arg("m1"), py::arg("j2"), py::arg("m2"),
          py::arg("route") = "closed", "Coefficients alpha(k,l) as canonical polynomial strings.");

    m.def("verify_sl2", [](const std::string& j) {
        std::vector<std::pair<std::string, bool>> out;
        for (const auto& c : verify_algebra(make_rep_sl2(HalfInt::parse(j))).checks) out.emplace_back(c.name, c.passed);
        return out;
    }, py::arg("j"));

    m.def("cg_table", [](const std::string& j1, const std::string& j2) {
        return io::dump(io::cg_document(cg_table(HalfInt::parse(j1), HalfInt::parse(j2))));
    }, py::arg("j1"), py::arg("j2"), "Coupled basis as a JSON document.");
}
