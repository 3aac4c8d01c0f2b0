#include <iostream>
#include <map>
#include <string>

#include "CLI11.hpp"
#include "cli.hpp"

int main(int argc, char** argv) {
    CLI::App app{"ncopuc: free noncommutative orthogonal polynomials and Szego theory"};
    app.require_subcommand(1);
    ncopuc::cli::RunConfig cfg;

    auto common = [&](CLI::App* sub) {
        sub->add_option("--moments", cfg.moments_path, "moment file (JSON)");
        sub->add_option("--gamma", cfg.gamma_path, "Verblunsky file (JSON)");
        sub->add_option("--max-len", cfg.max_len, "horizon sigma(max_len)");
        sub->add_option("--N", cfg.N, "table length / iteration cap");
        sub->add_option("--tol", cfg.tol, "tolerance for verdicts")->capture_default_str();
        sub->add_option("--seed", cfg.seed, "random seed")->capture_default_str();
        sub->add_option("--format", cfg.format, "csv or json")->capture_default_str();
        sub->add_option("--out", cfg.out_path, "output file (default stdout)");
        sub->add_flag("--fill-zero", cfg.fill_zero, "treat absent words as 0");
    };

    struct Pair {
        const char* group;
        const char* action;
        const char* help;
    };
    const Pair pairs[] = {
        {"kernel", "check", "non-triviality and multi-Toeplitz residuals"},
        {"verblunsky", "extract", "moments -> Verblunsky coefficients"},
        {"favard", "synth", "Verblunsky coefficients -> moments"},
        {"szego", "table", "Szego identity table"},
        {"christoffel", "eval", "Christoffel approximates at a point"},
        {"zeros", "sweep", "determinantal zeros sweep (JSON lines)"},
        {"oracle", "compare", "d = 1 cross-check against Levinson"},
    };
    std::map<std::string, CLI::App*> groups;
    for (const auto& p : pairs) {
        CLI::App*& g = groups[p.group];
        if (g == nullptr) {
            g = app.add_subcommand(p.group);
            g->require_subcommand(1);
        }
        CLI::App* sub = g->add_subcommand(p.action, p.help);
        common(sub);
        const std::string name = std::string(p.group) + " " + p.action;
        sub->callback([&cfg, name] { cfg.command = name; });
        if (name == "christoffel eval") {
            sub->add_option("--point", cfg.point_path, "matrix tuple (JSON)")->required();
        } else if (name == "zeros sweep") {
            sub->add_option("--samples", cfg.samples, "samples per (kind, k, n)")->capture_default_str();
            sub->add_option("--k", cfg.max_level, "largest level")->capture_default_str();
        } else if (name == "oracle compare") {
            sub->add_option("--density", cfg.density, "bernstein or fejer")->capture_default_str();
            sub->add_option("--a", cfg.a, "Bernstein-Szego parameter")->capture_default_str();
            sub->add_option("--n", cfg.n, "number of coefficients")->capture_default_str();
            sub->add_option("--nodes", cfg.nodes, "quadrature nodes")->capture_default_str();
        }
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : ncopuc::cli::kInputError;
    }
    return ncopuc::cli::run(cfg, std::cout, std::cerr);
}
