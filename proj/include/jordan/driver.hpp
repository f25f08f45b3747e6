#pragma once

#include "jordan/io.hpp"

#include <chrono>
#include <cstddef>
#include <optional>
#include <string>

namespace jordan::driver {

enum ExitCode : int { pass = 0, identity_failure = 1, usage = 2, internal = 3 };

/// Weights are kept as text and parsed by the driver (p/q or integer only).
struct Request {
    std::string command;  // verify | decompose | eigvec | cgtable
    std::string family;   // sl2 | su11
    std::optional<std::string> j, kappa;
    std::optional<std::string> j1, j2, m1, m2;
    std::optional<std::string> kappa1, kappa2, mu1, mu2, mu_max;
    int cutoff = 12;
    int degree = 6;
    bool timings = false;
    std::size_t max_dim = 400;
};

struct Outcome {
    int exit_code = pass;
    io::Json document;    // null when the request was rejected
    std::string message;  // diagnostics for stderr
};

/// JORDAN_CG_MAX_DIM, or 400 when unset; throws std::invalid_argument if malformed.
std::size_t max_dim_from_env();

Outcome run(const Request& request);

}  // namespace jordan::driver
