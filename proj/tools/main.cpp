// rankrange: rank-k numerical ranges, radii and witnesses from the command line.

#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "commands.hpp"

int main(int argc, char** argv) {
    using rankrange::cli::RunConfig;

    CLI::App app{"Rank-k numerical range of a complex matrix: support-function sweep, "
                 "compression intersections, radii and witness isometries"};
    app.require_subcommand(1);

    RunConfig cfg;
    std::string input;
    std::string builtin;
    std::string lambda;
    std::string coords;

    struct Sub {
        const char* name;
        const char* help;
    };
    const Sub subs[] = {
        {"range", "Compute Lambda_k(A); writes range.csv, range.json, range.svg"},
        {"radii", "Rank-k numerical radius and inner radius; writes radii.json"},
        {"converge", "Trace q_nu and t_nu over an isometry family; writes trace.csv, trace.svg"},
        {"bounds", "Compression bounds on r_k and the inner radius; writes bounds.json"},
        {"witness", "Search an isometry N with N*AN = lambda I_k; writes witness.json"},
        {"power-check", "Compare r_k(A)^2 with r_k(A^2); writes power_check.json"},
        {"fig1", "Render compression ranges over Lambda_k for A and A^2; writes fig1_A.svg, fig1_A2.svg"},
    };

    for (const Sub& s : subs) {
        CLI::App* sub = app.add_subcommand(s.name, s.help);
        auto* in = sub->add_option("--input", input, "Matrix file (JSON or CSV)");
        auto* bi = sub->add_option("--builtin", builtin, "Built-in matrix: paper-example, jordan-<n>");
        in->excludes(bi);
        sub->add_option("--k", cfg.k, "Rank k")->capture_default_str();
        sub->add_option("--grid", cfg.grid, "Number of uniform angles m (>= 16)")->capture_default_str();
        sub->add_option("--count", cfg.count, "Size of the random isometry family")->capture_default_str();
        sub->add_option("--seed", cfg.seed, "Random seed")->capture_default_str();
        sub->add_option("--tol", cfg.tol, "Witness residual tolerance")->capture_default_str();
        sub->add_option("--out", cfg.out, "Output directory")->capture_default_str();
        if (std::string(s.name) == "witness") {
            sub->add_option("--lambda", lambda,
                            "Target point, e.g. 0.1+0.2i (default: Chebyshev center of Lambda_k)");
            sub->add_option("--max-iters", cfg.max_iters, "Descent steps per restart")->capture_default_str();
            sub->add_option("--restarts", cfg.restarts, "Number of restarts")->capture_default_str();
        }
        if (std::string(s.name) == "converge" || std::string(s.name) == "bounds") {
            sub->add_option("--coords", coords,
                            "Coordinate family instead of random isometries, e.g. \"1,2,3,4;2,3,4,5\"");
        }
        if (std::string(s.name) == "converge") {
            sub->add_option("--early-stop", cfg.early_stop,
                            "Stop once the Hausdorff distance to Lambda_k falls below this")
                ->capture_default_str();
        }
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : rankrange::cli::kInputError;
    }

    cfg.command = app.get_subcommands().front()->get_name();
    if (!input.empty()) cfg.input = input;
    if (!builtin.empty()) cfg.builtin = builtin;
    if (!lambda.empty()) cfg.lambda = lambda;
    if (!coords.empty()) cfg.coords = coords;
    return rankrange::cli::run(cfg, std::cout, std::cerr);
}
