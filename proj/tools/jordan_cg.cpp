#include "jordan/driver.hpp"

#include "CLI11.hpp"

#include <fstream>
#include <iostream>

namespace {

using jordan::driver::Request;

void add_family(CLI::App* sub, Request& rq) {
    sub->add_option("family", rq.family, "sl2 or su11")->required()->check(CLI::IsMember({"sl2", "su11"}));
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact Clebsch-Gordan engine for the Jordanian algebras U_h(sl(2)) and U_h(su(1,1))"};
    app.require_subcommand(1);

    Request rq;
    std::string format = "json";
    std::string out_path;
    app.add_option("--format", format, "json, csv or latex")->check(CLI::IsMember({"json", "csv", "latex"}));
    app.add_option("--out", out_path, "write output to this path instead of stdout");
    app.add_flag("--timings", rq.timings, "append wall-clock timings (output is then not reproducible)");

    auto* verify = app.add_subcommand("verify", "run the identity suite for one representation");
    add_family(verify, rq);
    auto* decompose = app.add_subcommand("decompose", "tensor-product decomposition rule");
    add_family(decompose, rq);
    auto* eigvec = app.add_subcommand("eigvec", "weight-eigenvector coefficient table");
    add_family(eigvec, rq);
    auto* cgtable = app.add_subcommand("cgtable", "full coupled basis of a tensor product");
    add_family(cgtable, rq);

    for (auto* sub : {verify, decompose, eigvec, cgtable}) {
        sub->fallthrough();
        sub->add_option("--j", rq.j, "spin of an sl2 representation (p/q)");
        sub->add_option("--kappa", rq.kappa, "su11 lowest weight (p/q)");
        sub->add_option("--cutoff", rq.cutoff, "su11 truncation level");
        sub->add_option("--j1", rq.j1);
        sub->add_option("--j2", rq.j2);
        sub->add_option("--m1", rq.m1);
        sub->add_option("--m2", rq.m2);
        sub->add_option("--kappa1", rq.kappa1);
        sub->add_option("--kappa2", rq.kappa2);
        sub->add_option("--mu1", rq.mu1);
        sub->add_option("--mu2", rq.mu2);
        sub->add_option("--mu-max", rq.mu_max);
        sub->add_option("--degree", rq.degree, "su11 total degree of the eigenvector table");
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return jordan::driver::usage;
    }

    try {
        rq.max_dim = jordan::driver::max_dim_from_env();
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return jordan::driver::usage;
    }
    rq.command = app.get_subcommands().front()->get_name();

    const auto outcome = jordan::driver::run(rq);
    if (outcome.document.is_null()) {
        std::cerr << "error: " << outcome.message << '\n';
        return outcome.exit_code;
    }
    const std::string text = jordan::io::render(outcome.document, jordan::io::parse_format(format));
    if (out_path.empty()) {
        std::cout << text;
    } else {
        std::ofstream file(out_path, std::ios::binary);
        if (!file) {
            std::cerr << "error: cannot open " << out_path << '\n';
            return jordan::driver::usage;
        }
        file << text;
    }
    if (!outcome.message.empty()) std::cerr << "error: " << outcome.message << '\n';
    return outcome.exit_code;
}
