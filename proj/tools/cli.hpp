#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>

namespace ncopuc::cli {

enum ExitCode : int { kOk = 0, kInputError = 1, kPropertyViolation = 2 };

struct RunConfig {
    std::string command;  // "kernel check", "verblunsky extract", ...
    std::string moments_path;
    std::string gamma_path;
    std::string point_path;
    std::optional<int> max_len;  // horizon sigma(max_len)
    std::optional<int> N;
    double tol = 1e-8;
    std::uint64_t seed = 1;
    std::string format = "json";
    std::string out_path;  // empty: write to the output stream
    bool fill_zero = false;

    // oracle compare
    std::string density = "bernstein";
    double a = 0.5;
    int n = 8;
    int nodes = 512;

    // zeros sweep
    int samples = 100;
    int max_level = 3;
};

/// Runs one command. Results go to `out` (or config.out_path), diagnostics to `err`.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

}  // namespace ncopuc::cli
