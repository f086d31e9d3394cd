#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>

namespace rankrange::cli {

enum ExitCode : int {
    kOk = 0,
    kInputError = 2,
    kEmptyRange = 3,
};

struct RunConfig {
    std::string command;  // range, radii, converge, bounds, witness, power-check, fig1
    std::optional<std::filesystem::path> input;
    std::optional<std::string> builtin;
    std::size_t k = 2;
    std::size_t grid = 1024;
    std::size_t count = 200;
    std::uint64_t seed = 42;
    double tol = 1e-9;
    std::filesystem::path out = ".";

    // witness
    std::optional<std::string> lambda;
    std::size_t max_iters = 5000;
    std::size_t restarts = 10;

    // converge: explicit coordinate family, e.g. "1,2,3,4;2,3,4,5" (1-based)
    std::optional<std::string> coords;
    double early_stop = 0.0;
};

/// Runs one subcommand. The machine-readable summary goes to `out`,
/// diagnostics to `err`. Returns the process exit code.
int run(const RunConfig& cfg, std::ostream& out, std::ostream& err);

}  // namespace rankrange::cli
