#include "reebkit/io.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace reebkit::io {

double round12(double x) {
    if (!std::isfinite(x) || x == 0) return x;
    return std::stod(fmt12(x));
}

std::string fmt12(double x) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.12g", x);
    return buf;
}

namespace {

void dump_to(std::string& out, const json& j, int indent, int depth) {
    const std::string pad(static_cast<std::size_t>(indent * (depth + 1)), ' ');
    const std::string close(static_cast<std::size_t>(indent * depth), ' ');
    switch (j.type()) {
    case json::value_t::object: {
        if (j.empty()) {
            out += "{}";
            return;
        }
        out += "{\n";
        bool first = true;
        for (const auto& [key, value] : j.items()) {
            if (!first) out += ",\n";
            first = false;
            out += pad + json(key).dump() + ": ";
            dump_to(out, value, indent, depth + 1);
        }
        out += "\n" + close + "}";
        return;
    }
    case json::value_t::array: {
        if (j.empty()) {
            out += "[]";
            return;
        }
        out += "[\n";
        for (std::size_t i = 0; i < j.size(); ++i) {
            if (i) out += ",\n";
            out += pad;
            dump_to(out, j[i], indent, depth + 1);
        }
        out += "\n" + close + "]";
        return;
    }
    case json::value_t::number_float: {
        const double x = j.get<double>();
        if (!std::isfinite(x)) {
            out += "null";
            return;
        }
        char buf[64];
        const auto res = std::to_chars(buf, buf + sizeof buf, x);
        std::string s(buf, res.ptr);
        if (s.find_first_of(".e") == std::string::npos) s += ".0";
        out += s;
        return;
    }
    default:
        out += j.dump();
    }
}

json num(double x) {
    if (!std::isfinite(x)) return nullptr;
    return round12(x);
}

template <class T>
T get(const json& j, const char* key, const char* what) {
    if (!j.is_object() || !j.contains(key)) throw ConfigError(std::string(what) + ": missing field \"" + key + "\"");
    try {
        return j.at(key).get<T>();
    } catch (const nlohmann::json::exception&) {
        throw ConfigError(std::string(what) + ": field \"" + key + "\" has the wrong type");
    }
}

template <class T>
T get_or(const json& j, const char* key, T fallback, const char* what) {
    if (!j.contains(key) || j.at(key).is_null()) return fallback;
    return get<T>(j, key, what);
}

json checks_json(const std::vector<CheckResult>& checks) {
    json out = json::array();
    for (const auto& c : checks)
        out.push_back({{"name", c.name}, {"pass", c.pass}, {"skipped", c.skipped}, {"detail", c.detail}});
    return out;
}

json entry_json(const OrbitEntry& e) {
    json j{{"name", e.name}, {"multiplicity", e.multiplicity}, {"period", num(e.period)}, {"contractible", e.contractible}};
    j["rho"] = e.rho ? num(*e.rho) : json(nullptr);
    j["mu"] = e.mu ? json(*e.mu) : json(nullptr);
    j["linking"] = e.linking ? json(*e.linking) : json(nullptr);
    return j;
}

json cplx_json(cplx z) { return json::array({num(z.real()), num(z.imag())}); }

TreeVertex parse_vertex(const json& v, BubblingTree& t, int depth) {
    if (depth > 10000) throw ConfigError("tree: nesting too deep");
    if (!v.is_object()) throw ConfigError("tree: vertex must be an object");
    TreeVertex out;
    out.period = get<double>(v, "period", "tree vertex");
    out.mu = get<int>(v, "mu", "tree vertex");
    if (v.contains("area_positive") && !v["area_positive"].is_null())
        out.area_positive = get<bool>(v, "area_positive", "tree vertex");
    if (v.contains("wind_inf") && !v["wind_inf"].is_null()) out.wind_inf = get<int>(v, "wind_inf", "tree vertex");
    const json children = v.contains("children") ? v["children"] : json::array();
    if (!children.is_array()) throw ConfigError("tree: \"children\" must be an array");
    for (const auto& e : children) {
        TreeEdge edge;
        edge.period = get<double>(e, "period", "tree edge");
        edge.mu = get<int>(e, "mu", "tree edge");
        if (e.contains("vertex") && !e["vertex"].is_null()) {
            TreeVertex child = parse_vertex(e["vertex"], t, depth + 1);
            t.vertices.push_back(std::move(child));
            edge.child = t.vertices.size() - 1;
        }
        out.edges.push_back(edge);
    }
    return out;
}

json vertex_json(const BubblingTree& t, std::size_t v) {
    const TreeVertex& x = t.vertices.at(v);
    json j{{"period", num(x.period)}, {"mu", x.mu}};
    if (x.area_positive) j["area_positive"] = *x.area_positive;
    if (x.wind_inf) j["wind_inf"] = *x.wind_inf;
    json children = json::array();
    for (const auto& e : x.edges)
        children.push_back({{"period", num(e.period)}, {"mu", e.mu},
                            {"vertex", e.child ? vertex_json(t, *e.child) : json(nullptr)}});
    j["children"] = std::move(children);
    return j;
}

} // namespace

std::string dump(const json& j, int indent) {
    std::string out;
    dump_to(out, j, indent, 0);
    return out;
}

json to_json(const ContactSystem& sys) {
    json j{{"family", sys.family() == Family::Round ? "round" : "ellipsoid"}, {"a", num(sys.a())}, {"b", num(sys.b())}};
    j["lens"] = sys.lens() ? json{{"p", sys.lens()->p}, {"q", sys.lens()->q}} : json(nullptr);
    return j;
}

ContactSystem system_from_json(const json& j) {
    if (!j.is_object()) throw ConfigError("system: expected an object");
    const auto family = get<std::string>(j, "family", "system");
    std::optional<LensParams> lens;
    if (j.contains("lens") && !j["lens"].is_null()) {
        const json& l = j["lens"];
        lens = LensParams::make(get<int>(l, "p", "system lens"), get<int>(l, "q", "system lens"));
    }
    try {
        if (family == "round") return ContactSystem::round(lens);
        if (family == "ellipsoid")
            return ContactSystem::ellipsoid(get<double>(j, "a", "system"), get<double>(j, "b", "system"), lens);
    } catch (const PreconditionError& e) {
        throw ConfigError(std::string("system: ") + e.what());
    }
    throw ConfigError("system: unknown family \"" + family + "\"");
}

json to_json(const Point4& pt) { return json::array({num(pt.x1), num(pt.y1), num(pt.x2), num(pt.y2)}); }

json to_json(const ClosedOrbit& orbit) {
    std::string name = principal_name(orbit.which);
    return {{"name", name},
            {"anchor", to_json(orbit.anchor)},
            {"prime_period", num(orbit.prime_period)},
            {"multiplicity", orbit.multiplicity},
            {"period", num(orbit.period())},
            {"deck_power", orbit.deck_power},
            {"total_deck_power", orbit.total_deck_power()},
            {"contractible", orbit.closes_on_lift()}};
}

json to_json(const OrbitIndex& idx) {
    return {{"k", idx.k},           {"period", num(idx.period)},   {"mu", idx.mu},
            {"mu_spectral", idx.mu_spectral}, {"rho", num(idx.rho)}, {"degenerate", idx.degenerate},
            {"frame_shift", idx.frame_shift}};
}

json to_json(const ReturnRecord& rec) {
    return {{"direction", direction_name(rec.direction)},
            {"r0", num(rec.r0)},
            {"theta0", num(rec.theta0)},
            {"return_time", num(rec.return_time)},
            {"r1", num(rec.r1)},
            {"theta1", num(rec.theta1)},
            {"zeta0", cplx_json(rec.zeta0)},
            {"zeta1", cplx_json(rec.zeta1)},
            {"deck", rec.deck}};
}

json to_json(const LensTables& t) {
    json j{{"p", t.p}, {"residues", t.residues}, {"homeomorphic", t.homeomorphic},
           {"homotopy_equivalent", t.homotopy_equivalent}, {"classes", t.classes}};
    return j;
}

json to_json(const TreeReport& rep) {
    json v = json::array();
    for (const auto& x : rep.violations) v.push_back({{"rule", x.rule}, {"path", x.path}, {"detail", x.detail}});
    return {{"pass", rep.pass}, {"sigma", num(rep.sigma)}, {"violations", std::move(v)}};
}

json to_json(const PeriodCatalog& cat) {
    json e = json::array();
    for (const auto& x : cat.entries) e.push_back({{"label", x.label}, {"period", num(x.period)}});
    return {{"bound", num(cat.bound)}, {"periods", std::move(e)}};
}

json to_json(const Main3Report& rep) {
    json j;
    j["pass"] = rep.pass();
    j["failures"] = rep.failures();
    j["system"] = {{"a", num(rep.a)}, {"b", num(rep.b)}, {"lens", {{"p", rep.lens.p}, {"q", rep.lens.q}}}};
    j["options"] = {{"C", num(rep.options.C)},
                    {"samples", rep.options.samples},
                    {"quads", rep.options.quads},
                    {"seed", rep.options.seed},
                    {"fixed_point_tol", num(rep.options.fixed_point_tol)},
                    {"area_tol", num(rep.options.area_tol)}};
    j["binding"] = {{"self_linking", rep.sl},
                    {"monodromy", rep.monodromy},
                    {"monodromy_signed", rep.monodromy == 0 ? 0 : rep.monodromy - rep.lens.p},
                    {"mu", rep.mu_binding},
                    {"mu_spectral", rep.mu_binding_spectral},
                    {"rho", num(rep.rho_binding)},
                    {"degenerate", rep.binding_degenerate}};
    json orbits = json::array(), pstar = json::array();
    for (const auto& e : rep.orbits) orbits.push_back(entry_json(e));
    for (const auto& e : rep.pstar) pstar.push_back(entry_json(e));
    j["orbits"] = {{"action_cutoff", num(rep.options.C)}, {"catalog", std::move(orbits)}, {"pstar", std::move(pstar)}};
    j["page"] = {{"min_transverse", num(rep.min_transverse)},
                 {"area_absolute", num(rep.area.absolute)},
                 {"area_signed", num(rep.area.signed_value)},
                 {"min_density", num(rep.area.min_density)},
                 {"max_density", num(rep.area.max_density)},
                 {"boundary_action", num(rep.boundary_action)},
                 {"disk_area_bound", num(rep.disk_area_bound)}};
    json dyn;
    dyn["status"] = rep.dynamics_skipped ? "skipped" : "run";
    if (!rep.dynamics_skipped) {
        dyn["samples"] = rep.samples.size();
        dyn["forward_returns"] = rep.forward_returns;
        dyn["backward_returns"] = rep.backward_returns;
        if (rep.fixed) {
            dyn["fixed_point"] = {{"zeta", cplx_json(rep.fixed->zeta)},
                                  {"r", num(rep.fixed->r)},
                                  {"displacement", num(rep.fixed->displacement)},
                                  {"return_time", num(rep.fixed->return_time)},
                                  {"iterations", rep.fixed->iterations},
                                  {"center_distance", num(rep.fixed_center_distance)}};
        }
        dyn["max_area_distortion"] = num(rep.max_area_distortion);
    }
    j["dynamics"] = std::move(dyn);
    j["checks"] = checks_json(rep.checks);
    return j;
}

std::string samples_csv(const Main3Report& rep) {
    std::ostringstream os;
    os << "index,r,theta,forward_time,forward_r,forward_theta,backward_time,backward_r,backward_theta\n";
    for (std::size_t i = 0; i < rep.samples.size(); ++i) {
        const GssSample& s = rep.samples[i];
        os << i << ',' << fmt12(s.r) << ',' << fmt12(s.theta);
        for (const auto& rec : {s.forward, s.backward}) {
            if (rec)
                os << ',' << fmt12(rec->return_time) << ',' << fmt12(rec->r1) << ',' << fmt12(rec->theta1);
            else
                os << ",,,";
        }
        os << '\n';
    }
    return os.str();
}

BubblingTree tree_from_json(const json& j) {
    if (!j.is_object()) throw ConfigError("tree: expected an object");
    BubblingTree t;
    t.energy_bound = get<double>(j, "energy_bound", "tree");
    if (!j.contains("root")) throw ConfigError("tree: missing field \"root\"");
    // root first so that it sits at index 0 before its descendants are appended
    t.vertices.emplace_back();
    TreeVertex root = parse_vertex(j["root"], t, 0);
    t.vertices[0] = std::move(root);
    t.root = 0;
    return t;
}

json tree_to_json(const BubblingTree& t) {
    return {{"energy_bound", num(t.energy_bound)}, {"root", vertex_json(t, t.root)}};
}

PeriodCatalog catalog_from_json(const json& j) {
    if (!j.is_object()) throw ConfigError("catalog: expected an object");
    const double bound = get<double>(j, "bound", "catalog");
    const json periods = j.contains("periods") ? j["periods"] : json();
    if (!periods.is_array()) throw ConfigError("catalog: \"periods\" must be an array");
    std::vector<PeriodEntry> e;
    for (std::size_t i = 0; i < periods.size(); ++i) {
        const json& x = periods[i];
        if (x.is_number())
            e.push_back({"T" + std::to_string(i), x.get<double>()});
        else
            e.push_back({get_or<std::string>(x, "label", "T" + std::to_string(i), "catalog entry"),
                         get<double>(x, "period", "catalog entry")});
    }
    try {
        return PeriodCatalog::make(std::move(e), bound);
    } catch (const PreconditionError& ex) {
        throw ConfigError(std::string("catalog: ") + ex.what());
    }
}

json read_json(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot read " + path.string());
    try {
        return json::parse(in);
    } catch (const nlohmann::json::parse_error& e) {
        throw ConfigError("invalid JSON in " + path.string() + ": " + e.what());
    }
}

json inline_or_file(const json& value, const std::filesystem::path& base) {
    if (!value.is_string()) return value;
    std::filesystem::path p = value.get<std::string>();
    if (p.is_relative()) p = base / p;
    return read_json(p);
}

} // namespace reebkit::io
