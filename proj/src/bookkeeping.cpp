#include "reebkit/bookkeeping.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <sstream>

namespace reebkit {

PeriodCatalog PeriodCatalog::make(std::vector<PeriodEntry> entries, double bound) {
    if (!(bound > 0)) throw PreconditionError("catalog bound must be positive");
    PeriodCatalog c;
    c.bound = bound;
    for (auto& e : entries) {
        if (!(e.period > 0)) throw PreconditionError("periods must be positive");
        if (e.period <= bound) c.entries.push_back(std::move(e));
    }
    std::stable_sort(c.entries.begin(), c.entries.end(),
                     [](const PeriodEntry& a, const PeriodEntry& b) { return a.period < b.period; });
    return c;
}

PeriodCatalog PeriodCatalog::from_orbits(const std::vector<ClosedOrbit>& orbits, double bound) {
    std::vector<PeriodEntry> e;
    for (const auto& o : orbits) {
        std::string label = principal_name(o.which);
        if (o.multiplicity > 1) label += "^" + std::to_string(o.multiplicity);
        e.push_back({std::move(label), o.period()});
    }
    return make(std::move(e), bound);
}

double sigma_gap(const PeriodCatalog& cat, double resolution) {
    std::vector<double> t;
    for (const auto& e : cat.entries)
        if (e.period <= cat.bound) t.push_back(e.period);
    if (t.empty()) throw PreconditionError("no periods below the bound");
    std::sort(t.begin(), t.end());
    double inf = t.front();
    for (std::size_t i = 1; i < t.size(); ++i) {
        const double gap = t[i] - t[i - 1];
        if (gap < resolution) {
            std::ostringstream os;
            os << "resolution failure: periods " << t[i - 1] << " and " << t[i] << " are closer than " << resolution;
            throw ResolutionError(os.str());
        }
        inf = std::min(inf, gap);
    }
    return inf / 2;
}

void CurveWindingData::validate() const {
    const auto n = wind_inf_positive.size() + wind_inf_negative.size();
    if (puncture_count < 1 || static_cast<std::size_t>(puncture_count) != n)
        throw PreconditionError("puncture count must equal the number of windings and be >= 1");
}

int wind_pi_from_relation(const CurveWindingData& d) {
    d.validate();
    const int pos = std::accumulate(d.wind_inf_positive.begin(), d.wind_inf_positive.end(), 0);
    const int neg = std::accumulate(d.wind_inf_negative.begin(), d.wind_inf_negative.end(), 0);
    return pos - neg - d.euler_char + d.puncture_count;
}

bool winding_feasible(const CurveWindingData& d) { return wind_pi_from_relation(d) >= 0; }

int wind_below(int mu) { return static_cast<int>(std::floor(mu / 2.0)); }
int wind_above(int mu) { return wind_below(mu) + ((mu % 2 + 2) % 2); }

// ---------------------------------------------------------------------------

void check_tree_structure(const BubblingTree& t) {
    const std::size_t n = t.vertices.size();
    if (n == 0) throw StructuralError("tree has no vertices");
    if (t.root >= n) throw StructuralError("root index out of range");
    std::vector<int> parents(n, 0);
    for (std::size_t v = 0; v < n; ++v)
        for (std::size_t e = 0; e < t.vertices[v].edges.size(); ++e) {
            const TreeEdge& edge = t.vertices[v].edges[e];
            std::ostringstream where;
            where << "edge " << e << " of vertex " << v;
            if (!edge.child) throw StructuralError("dangling " + where.str());
            if (*edge.child >= n) throw StructuralError(where.str() + " points outside the tree");
            const TreeVertex& c = t.vertices[*edge.child];
            if (std::abs(c.period - edge.period) > 1e-12 * std::max(1.0, edge.period) || c.mu != edge.mu)
                throw StructuralError(where.str() + " disagrees with the positive puncture of its child");
            ++parents[*edge.child];
        }
    if (parents[t.root] != 0) throw StructuralError("root has a parent edge");
    for (std::size_t v = 0; v < n; ++v)
        if (v != t.root && parents[v] != 1) throw StructuralError("vertex " + std::to_string(v) + " has " + std::to_string(parents[v]) + " parent edges");
    // every vertex reachable from the root (with unique parents this also rules out cycles)
    std::vector<bool> seen(n, false);
    std::vector<std::size_t> stack{t.root};
    while (!stack.empty()) {
        const std::size_t v = stack.back();
        stack.pop_back();
        if (seen[v]) throw StructuralError("cycle through vertex " + std::to_string(v));
        seen[v] = true;
        for (const auto& e : t.vertices[v].edges) stack.push_back(*e.child);
    }
    if (std::find(seen.begin(), seen.end(), false) != seen.end()) throw StructuralError("tree has unreachable vertices");
}

TreeReport validate_tree(const BubblingTree& t, double sigma) {
    if (!(sigma > 0)) throw PreconditionError("sigma must be positive");
    check_tree_structure(t);
    TreeReport rep;
    rep.sigma = sigma;
    auto flag = [&](std::string rule, const std::string& path, std::string detail) {
        rep.violations.push_back({std::move(rule), path, std::move(detail)});
    };

    struct Item {
        std::size_t v;
        std::string path;
    };
    std::vector<Item> stack{{t.root, "root"}};
    while (!stack.empty()) {
        const Item it = stack.back();
        stack.pop_back();
        const TreeVertex& v = t.vertices[it.v];
        std::ostringstream os;

        if (v.mu < 2) flag("b", it.path, "index " + std::to_string(v.mu) + " < 2");
        if (v.period > t.energy_bound) {
            os << "period " << v.period << " exceeds the energy bound " << t.energy_bound;
            flag("e", it.path, os.str());
        }
        bool all_at_least_two = true, all_two = true;
        for (const auto& e : v.edges) {
            all_at_least_two = all_at_least_two && e.mu >= 2;
            all_two = all_two && e.mu == 2;
        }
        for (std::size_t i = 0; i < v.edges.size(); ++i) {
            const TreeEdge& e = v.edges[i];
            if (!(e.period < v.period - sigma)) {
                std::ostringstream d;
                d << "child period " << e.period << " not below " << v.period << " - sigma";
                flag("a", it.path + "/" + std::to_string(i), d.str());
            }
        }
        if (v.mu == 2 && all_at_least_two && !all_two)
            flag("c", it.path, "index 2 with children of index >= 2 forces all children to index 2");
        if (v.area_positive.value_or(false) && v.wind_inf && *v.wind_inf <= 1 && all_at_least_two && !all_two)
            flag("f", it.path, "positive area and wind_inf <= 1 force all children to index 2");

        for (std::size_t i = v.edges.size(); i-- > 0;)
            stack.push_back({*v.edges[i].child, it.path + "/" + std::to_string(i)});
    }
    rep.pass = rep.violations.empty();
    return rep;
}

} // namespace reebkit
