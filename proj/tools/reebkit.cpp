// reebkit command-line front end.

#include "reebkit/commands.hpp"

#include <CLI11.hpp>
#include <spdlog/sinks/stdout_color_sinks.h>
#include <spdlog/spdlog.h>

#include <cstdlib>
#include <iostream>

using namespace reebkit;
using namespace reebkit::cli;

namespace {

void setup_logging() {
    auto logger = spdlog::stderr_color_mt("reebkit");
    spdlog::set_default_logger(logger);
    spdlog::set_level(spdlog::level::warn);
    if (const char* env = std::getenv("REEBKIT_LOG")) spdlog::set_level(spdlog::level::from_str(env));
}

io::json system_arg(const std::string& s) {
    if (!s.empty() && s.front() == '{') {
        try {
            return io::json::parse(s);
        } catch (const nlohmann::json::parse_error& e) {
            throw io::ConfigError(std::string("--system: invalid JSON: ") + e.what());
        }
    }
    return io::read_json(s);
}

} // namespace

int main(int argc, char** argv) {
    setup_logging();

    CLI::App app{"Reeb dynamics on lens spaces: indices, sections and bookkeeping"};
    app.require_subcommand(1);
    app.fallthrough();

    std::string config_path, system, tree_path, catalog_path, out, svg, csv, orbit, direction;
    std::uint64_t seed = 1;
    double tol = 0, C = 0, sigma = 0, r = 0, theta = 0;
    int jobs = 1, k = 0, p = 0, samples = 0, quads = 0, iterations = 0;

    auto* o_config = app.add_option("--config", config_path, "JSON run configuration");
    auto* o_system = app.add_option("--system", system, "system JSON file or inline JSON");
    auto* o_out = app.add_option("--out", out, "output path (default stdout)");
    auto* o_svg = app.add_option("--svg", svg, "write an SVG plot of the return map");
    auto* o_csv = app.add_option("--csv", csv, "write the CSV table");
    auto* o_jobs = app.add_option("--jobs", jobs, "worker threads")->check(CLI::PositiveNumber);
    auto* o_seed = app.add_option("--seed", seed, "random seed");
    auto* o_tol = app.add_option("--tol", tol, "tolerance of the command's main numerical test");
    for (auto* o : {o_config, o_system, o_out, o_svg, o_csv, o_jobs, o_seed, o_tol}) o->configurable(false);

    auto* index = app.add_subcommand("index", "Conley-Zehnder indices and rotation numbers of iterates");
    auto* o_orbit = index->add_option("--orbit", orbit, "K or K'");
    auto* o_k = index->add_option("-k,--iterates", k, "iterates 1..k");

    auto* verify = app.add_subcommand("verify", "verify the global surface of section conditions");
    auto* o_C = verify->add_option("-C,--action", C, "action cutoff for the orbit catalog");
    auto* o_samples = verify->add_option("-n,--samples", samples, "random starts for the return map");
    auto* o_quads = verify->add_option("--quads", quads, "quadrilaterals for the area check");

    auto* lens = app.add_subcommand("lens", "classification tables of L(p,q) for fixed p");
    auto* o_p = lens->add_option("-p", p, "order of the lens space");

    auto* tree = app.add_subcommand("tree-validate", "check a bubbling tree against the combinatorial rules");
    auto* o_tree = tree->add_option("--tree", tree_path, "tree JSON file");
    auto* o_sigma = tree->add_option("--sigma", sigma, "period gap (default: from the catalog)");
    auto* o_tcat = tree->add_option("--catalog", catalog_path, "period catalog JSON file");

    auto* sig = app.add_subcommand("sigma", "period gap constant of a catalog");
    auto* o_scat = sig->add_option("--catalog", catalog_path, "period catalog JSON file");
    auto* o_sC = sig->add_option("-C,--action", C, "action cutoff");

    auto* ret = app.add_subcommand("return-map", "iterate the first-return map of the page");
    auto* o_r = ret->add_option("-r", r, "radial page coordinate in (0, 1)");
    auto* o_theta = ret->add_option("--theta", theta, "angular page coordinate");
    auto* o_dir = ret->add_option("--direction", direction, "forward or backward");
    auto* o_iter = ret->add_option("--iterations", iterations, "number of returns");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? Success : UsageError;
    }

    RunConfig cfg;
    try {
        const std::string command = app.get_subcommands().front()->get_name();
        cfg.command = command;
        if (*o_config) cfg = load_config(config_path);
        cfg.command = command;
        if (*o_system) cfg.system = system_arg(system);
        if (*o_out) cfg.out = out;
        if (*o_svg) cfg.svg = svg;
        if (*o_csv) cfg.csv = csv;
        if (*o_jobs) cfg.jobs = jobs;
        if (*o_seed) cfg.seed = seed;
        if (*o_tol) cfg.tol = tol;
        if (*o_orbit) cfg.orbit = orbit;
        if (*o_k) cfg.k = k;
        if (*o_C) cfg.C = C;
        if (*o_sC) cfg.C = C;
        if (*o_samples) cfg.samples = samples;
        if (*o_quads) cfg.quads = quads;
        if (*o_p) cfg.p = p;
        if (*o_tree) cfg.tree = io::read_json(tree_path);
        if (*o_sigma) cfg.sigma = sigma;
        if (*o_tcat || *o_scat) cfg.catalog = io::read_json(catalog_path);
        if (*o_r) cfg.r = r;
        if (*o_theta) cfg.theta = theta;
        if (*o_dir) cfg.direction = direction;
        if (*o_iter) cfg.iterations = iterations;

        const CommandOutput result = run_command(cfg);
        write_outputs(cfg, result, std::cout);
        if (result.exit_code != Success) spdlog::error("{}: verification failed", cfg.command);
        return result.exit_code;
    } catch (const std::exception& e) {
        std::cerr << "reebkit " << cfg.command << ": " << e.what() << '\n';
        return exit_code_for(e);
    }
}
