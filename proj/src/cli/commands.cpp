#include "reebkit/commands.hpp"

#include "reebkit/parallel.hpp"
#include "reebkit/svg.hpp"

#include <spdlog/spdlog.h>

#include <cmath>
#include <fstream>
#include <numbers>
#include <sstream>

namespace reebkit::cli {

using io::ConfigError;
using io::json;

namespace {

template <class T>
void take(const json& j, const char* key, T& slot) {
    if (!j.contains(key) || j[key].is_null()) return;
    try {
        slot = j[key].get<T>();
    } catch (const nlohmann::json::exception&) {
        throw ConfigError(std::string("config: field \"") + key + "\" has the wrong type");
    }
}

Principal parse_orbit(const std::string& s) {
    if (s == "K") return Principal::K;
    if (s == "K'" || s == "Kprime" || s == "KPrime") return Principal::KPrime;
    throw ConfigError("unknown orbit selector \"" + s + "\" (expected K or K')");
}

Direction parse_direction(const std::string& s) {
    if (s == "forward") return Direction::Forward;
    if (s == "backward") return Direction::Backward;
    throw ConfigError("unknown direction \"" + s + "\" (expected forward or backward)");
}

json envelope(const std::string& command, const RunConfig& cfg) {
    return {{"command", command}, {"seed", cfg.seed}};
}

ReturnOptions return_options(const RunConfig& cfg) {
    ReturnOptions opt;
    if (cfg.tol) opt.tol = *cfg.tol;
    return opt;
}

// Sigma from the explicit value, a period catalog or the orbit catalog of the system.
std::pair<double, json> resolve_sigma(const RunConfig& cfg, double bound) {
    const double resolution = cfg.tol.value_or(1e-9);
    if (cfg.sigma) {
        if (!(*cfg.sigma > 0)) throw ConfigError("sigma must be positive");
        return {*cfg.sigma, "config"};
    }
    if (cfg.catalog) {
        const PeriodCatalog cat = io::catalog_from_json(*cfg.catalog);
        return {sigma_gap(cat, resolution), io::to_json(cat)};
    }
    if (cfg.system) {
        const ContactSystem sys = cfg.contact_system();
        const PeriodCatalog cat = PeriodCatalog::from_orbits(catalog(sys, bound), bound);
        return {sigma_gap(cat, resolution), io::to_json(cat)};
    }
    throw ConfigError("no sigma: give sigma, a catalog or a system");
}

} // namespace

ContactSystem RunConfig::contact_system() const {
    if (!system) throw ConfigError("no system given (use --config with a \"system\" entry)");
    return io::system_from_json(*system);
}

void RunConfig::validate() const {
    if (tol && !(*tol > 0)) throw ConfigError("tolerance must be positive");
    if (jobs < 1) throw ConfigError("jobs must be >= 1");
    if (!(C > 0)) throw ConfigError("C must be positive");
    if (samples < 0 || quads < 0) throw ConfigError("sample counts must be non-negative");
    if (k < 1) throw ConfigError("k must be >= 1");
    if (iterations < 1) throw ConfigError("iterations must be >= 1");
    parse_orbit(orbit);
    parse_direction(direction);
}

RunConfig config_from_json(const json& j, const std::filesystem::path& base) {
    if (!j.is_object()) throw ConfigError("config: expected a JSON object");
    RunConfig cfg;
    take(j, "command", cfg.command);
    if (j.contains("system")) cfg.system = io::inline_or_file(j["system"], base);
    if (j.contains("tree")) cfg.tree = io::inline_or_file(j["tree"], base);
    if (j.contains("catalog")) cfg.catalog = io::inline_or_file(j["catalog"], base);
    take(j, "out", cfg.out);
    take(j, "svg", cfg.svg);
    take(j, "csv", cfg.csv);
    take(j, "seed", cfg.seed);
    if (j.contains("tol") && !j["tol"].is_null()) {
        double t = 0;
        take(j, "tol", t);
        cfg.tol = t;
    }
    if (j.contains("sigma") && !j["sigma"].is_null()) {
        double s = 0;
        take(j, "sigma", s);
        cfg.sigma = s;
    }
    take(j, "jobs", cfg.jobs);
    take(j, "C", cfg.C);
    take(j, "samples", cfg.samples);
    take(j, "quads", cfg.quads);
    take(j, "orbit", cfg.orbit);
    take(j, "k", cfg.k);
    take(j, "p", cfg.p);
    take(j, "r", cfg.r);
    take(j, "theta", cfg.theta);
    take(j, "direction", cfg.direction);
    take(j, "iterations", cfg.iterations);
    return cfg;
}

RunConfig load_config(const std::filesystem::path& path) {
    if (!std::filesystem::exists(path)) throw ConfigError("config file not found: " + path.string());
    return config_from_json(io::read_json(path), path.parent_path().empty() ? "." : path.parent_path());
}

// ---------------------------------------------------------------------------

CommandOutput cmd_index(const RunConfig& cfg) {
    cfg.validate();
    const ContactSystem sys = cfg.contact_system();
    const ClosedOrbit orbit = principal_orbit(sys, parse_orbit(cfg.orbit));
    // refuses degenerate and resonant systems
    catalog(sys, orbit.period() * cfg.k);
    spdlog::debug("index: {} iterates of {}", cfg.k, cfg.orbit);

    const std::vector<json> rows = parallel_map(cfg.k, cfg.jobs, [&](std::size_t i) -> json {
        const int k = static_cast<int>(i) + 1;
        try {
            const OrbitIndex idx = orbit_index(orbit, k);
            json row = io::to_json(idx);
            row["rho_closed_form"] = io::round12(principal_rho_closed_form(orbit, k));
            spdlog::debug("index: k={} mu={} rho={}", k, idx.mu, idx.rho);
            return row;
        } catch (const UnsupportedError& e) {
            return {{"k", k}, {"period", io::round12(orbit.period() * k)}, {"unsupported", e.what()}};
        }
    });

    CommandOutput out;
    out.body = envelope("index", cfg);
    out.body["system"] = io::to_json(sys);
    out.body["orbit"] = io::to_json(orbit);
    out.body["rows"] = rows;

    std::ostringstream csv;
    csv << "k,period,mu,mu_spectral,rho,degenerate\n";
    for (const auto& r : rows) {
        csv << r["k"].get<int>() << ',' << io::fmt12(r["period"].get<double>()) << ',';
        if (r.contains("unsupported"))
            csv << ",,,\n";
        else
            csv << r["mu"].get<int>() << ',' << r["mu_spectral"].get<int>() << ','
                << io::fmt12(r["rho"].get<double>()) << ',' << (r["degenerate"].get<bool>() ? 1 : 0) << '\n';
    }
    out.csv = csv.str();
    return out;
}

CommandOutput cmd_verify(const RunConfig& cfg) {
    cfg.validate();
    const ContactSystem sys = cfg.contact_system();
    Main3Options opt;
    opt.C = cfg.C;
    opt.samples = cfg.samples;
    opt.quads = cfg.quads;
    opt.seed = cfg.seed;
    opt.jobs = cfg.jobs;
    if (cfg.tol) opt.fixed_point_tol = *cfg.tol;
    spdlog::debug("verify: C={} samples={} quads={} seed={}", opt.C, opt.samples, opt.quads, opt.seed);
    const Main3Report rep = verify_main3(sys, opt);
    for (const auto& c : rep.checks)
        spdlog::debug("verify: {} {} {}", c.name, c.skipped ? "skipped" : (c.pass ? "pass" : "FAIL"), c.detail);

    CommandOutput out;
    out.body = envelope("verify", cfg);
    out.body["system"] = io::to_json(sys);
    out.body["report"] = io::to_json(rep);
    out.exit_code = rep.pass() ? Success : VerificationFailure;
    out.svg = return_scatter_svg(rep);
    out.csv = io::samples_csv(rep);
    return out;
}

CommandOutput cmd_lens(const RunConfig& cfg) {
    if (cfg.p < 2) throw ConfigError("lens: p must be >= 2");
    const LensTables t = lens_tables(cfg.p);
    json bindings = json::array();
    for (int q : t.residues) {
        const LensParams l = LensParams::make(cfg.p, q);
        const PDisk disk(l);
        bindings.push_back({{"q", q},
                            {"monodromy", lens_binding_monodromy(l)},
                            {"monodromy_signed", -q},
                            {"monodromy_numeric", binding_monodromy_numeric(disk)},
                            {"self_linking", binding_sl_numeric(disk)}});
    }
    CommandOutput out;
    out.body = envelope("lens", cfg);
    out.body["tables"] = io::to_json(t);
    out.body["bindings"] = std::move(bindings);
    return out;
}

CommandOutput cmd_tree_validate(const RunConfig& cfg) {
    if (!cfg.tree) throw ConfigError("tree-validate: no tree given");
    const BubblingTree tree = io::tree_from_json(*cfg.tree);
    check_tree_structure(tree);
    const auto [sigma, source] = resolve_sigma(cfg, tree.energy_bound);
    const TreeReport rep = validate_tree(tree, sigma);
    CommandOutput out;
    out.body = envelope("tree-validate", cfg);
    out.body["sigma_source"] = source;
    out.body["report"] = io::to_json(rep);
    out.exit_code = rep.pass ? Success : VerificationFailure;
    return out;
}

CommandOutput cmd_sigma(const RunConfig& cfg) {
    cfg.validate();
    RunConfig c = cfg;
    c.sigma.reset();
    const auto [sigma, source] = resolve_sigma(c, cfg.C);
    CommandOutput out;
    out.body = envelope("sigma", cfg);
    out.body["sigma"] = io::round12(sigma);
    out.body["convention"] = "half of the infimum";
    out.body["catalog"] = source;
    return out;
}

CommandOutput cmd_return_map(const RunConfig& cfg) {
    cfg.validate();
    const ContactSystem sys = cfg.contact_system();
    if (sys.family() != Family::Ellipsoid) throw DegenerateError("degenerate: orbit families not isolated");
    if (!(cfg.r > 0 && cfg.r < 1)) throw ConfigError("return-map: r must lie in (0, 1)");
    const Page page = build_page(sys);
    const Direction dir = parse_direction(cfg.direction);
    const ReturnOptions opt = return_options(cfg);

    json records = json::array();
    SvgCanvas svg(480, 480, -1.1, 1.1, -1.1, 1.1);
    svg.ring(0, 0, 1, "black");
    cplx zeta = page.zeta_of(page.point(cfg.r, cfg.theta));
    svg.circle(zeta.real(), zeta.imag(), 3, "#1f77b4");
    for (int i = 0; i < cfg.iterations; ++i) {
        const ReturnRecord rec = return_from(page, zeta, dir, opt);
        records.push_back(io::to_json(rec));
        svg.line(rec.zeta0.real(), rec.zeta0.imag(), rec.zeta1.real(), rec.zeta1.imag(), "#999999", 0.5);
        svg.circle(rec.zeta1.real(), rec.zeta1.imag(), 3, "#ff7f0e");
        zeta = rec.zeta1;
    }
    CommandOutput out;
    out.body = envelope("return-map", cfg);
    out.body["system"] = io::to_json(sys);
    out.body["direction"] = direction_name(dir);
    out.body["returns"] = std::move(records);
    out.svg = svg.str();
    return out;
}

CommandOutput run_command(const RunConfig& cfg) {
    if (cfg.command == "index") return cmd_index(cfg);
    if (cfg.command == "verify") return cmd_verify(cfg);
    if (cfg.command == "lens") return cmd_lens(cfg);
    if (cfg.command == "tree-validate") return cmd_tree_validate(cfg);
    if (cfg.command == "sigma") return cmd_sigma(cfg);
    if (cfg.command == "return-map") return cmd_return_map(cfg);
    throw ConfigError("unknown command \"" + cfg.command + "\"");
}

int exit_code_for(const std::exception& e) {
    if (dynamic_cast<const DegenerateError*>(&e)) return DegenerateInput;
    if (dynamic_cast<const NumericalError*>(&e)) return VerificationFailure;
    return UsageError;
}

std::string render(const json& j) { return io::dump(j) + "\n"; }

namespace {

void write_file(const std::string& path, const std::string& text) {
    std::ofstream f(path, std::ios::binary);
    if (!f) throw ConfigError("cannot write " + path);
    f << text;
    f.flush();
    if (!f) throw ConfigError("write failed: " + path);
}

} // namespace

void write_outputs(const RunConfig& cfg, const CommandOutput& out, std::ostream& stdout_stream) {
    if (cfg.out.empty())
        stdout_stream << render(out.body);
    else
        write_file(cfg.out, render(out.body));
    if (!cfg.svg.empty()) {
        if (!out.svg) throw ConfigError("command " + cfg.command + " produces no plot");
        write_file(cfg.svg, *out.svg);
    }
    if (!cfg.csv.empty()) {
        if (!out.csv) throw ConfigError("command " + cfg.command + " produces no table");
        write_file(cfg.csv, *out.csv);
    }
}

std::string return_scatter_svg(const Main3Report& rep) {
    SvgCanvas svg(520, 520, -1.15, 1.15, -1.15, 1.15);
    svg.ring(0, 0, 1, "black");
    for (const auto& s : rep.samples) {
        if (!s.forward) continue;
        const cplx a = s.forward->zeta0, b = s.forward->zeta1;
        svg.line(a.real(), a.imag(), b.real(), b.imag(), "#999999", 0.5, 0.6);
    }
    for (const auto& s : rep.samples) {
        if (!s.forward) continue;
        svg.circle(s.forward->zeta0.real(), s.forward->zeta0.imag(), 2.5, "#1f77b4", 0.8);
        svg.circle(s.forward->zeta1.real(), s.forward->zeta1.imag(), 2.5, "#ff7f0e", 0.8);
    }
    if (rep.fixed) svg.circle(rep.fixed->zeta.real(), rep.fixed->zeta.imag(), 4, "#d62728");
    std::ostringstream title;
    title << "L(" << rep.lens.p << "," << rep.lens.q << ") return map, seed " << rep.options.seed;
    svg.text(-1.1, 1.08, title.str());
    svg.text(-1.1, -1.12, "blue: start, orange: first return", 10);
    return svg.str();
}

} // namespace reebkit::cli
