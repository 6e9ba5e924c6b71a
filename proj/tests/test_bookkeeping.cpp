#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "reebkit/bookkeeping.hpp"

#include <cmath>
#include <functional>
#include <numbers>
#include <random>

using namespace reebkit;
using std::numbers::pi;

namespace {

// Brute-force gap: minimum over all ordered pairs and single periods.
double naive_inf(const std::vector<double>& t) {
    double inf = 1e300;
    for (double a : t) {
        inf = std::min(inf, a);
        for (double b : t)
            if (a != b) inf = std::min(inf, std::abs(a - b));
    }
    return inf;
}

// root (T=3, mu=2) with children (1, 2) and (1.5, 2), energy bound 5.
BubblingTree valid_tree() {
    BubblingTree t;
    t.energy_bound = 5;
    t.vertices = {{3, 2, {{1, 2, 1}, {1.5, 2, 2}}, {}, {}}, {1, 2, {}, {}, {}}, {1.5, 2, {}, {}, {}}};
    return t;
}

BubblingTree random_tree(std::mt19937_64& rng) {
    std::uniform_real_distribution<double> u(0, 1);
    std::uniform_int_distribution<int> mu(1, 4), kids(0, 3);
    BubblingTree t;
    t.energy_bound = 10;
    t.vertices.push_back({5 + 6 * u(rng), mu(rng), {}, {}, {}});
    for (std::size_t v = 0; v < t.vertices.size() && t.vertices.size() < 12; ++v) {
        const int n = kids(rng);
        for (int i = 0; i < n; ++i) {
            const double period = t.vertices[v].period * u(rng);
            if (period <= 0) continue;
            const int m = mu(rng);
            t.vertices.push_back({period, m, {}, {}, {}});
            t.vertices[v].edges.push_back({period, m, t.vertices.size() - 1});
        }
    }
    return t;
}

std::vector<std::string> rules(const TreeReport& r) {
    std::vector<std::string> out;
    for (const auto& v : r.violations) out.push_back(v.rule);
    return out;
}

} // namespace

TEST_CASE("sigma gap examples") {
    CHECK(sigma_gap(PeriodCatalog::make({{"a", pi}, {"b", 2 * pi}, {"c", 3 * pi}}, 10)) == doctest::Approx(pi / 2));
    CHECK(sigma_gap(PeriodCatalog::make({{"a", 1}}, 10)) == doctest::Approx(0.5));
    CHECK(sigma_gap(PeriodCatalog::make({{"a", 1}, {"b", 1.1}}, 10)) == doctest::Approx(0.05));
    CHECK_THROWS_AS(sigma_gap(PeriodCatalog::make({{"a", 20}}, 10)), PreconditionError);
    CHECK_THROWS_AS(sigma_gap(PeriodCatalog::make({{"a", 1}, {"b", 1 + 1e-12}}, 10)), ResolutionError);
    CHECK_THROWS_AS(PeriodCatalog::make({{"a", -1}}, 10), PreconditionError);
    const auto cat = PeriodCatalog::make({{"b", 2}, {"a", 1}, {"c", 30}}, 10);
    REQUIRE(cat.entries.size() == 2);
    CHECK(cat.entries[0].label == "a");

    const auto orbits = catalog(ContactSystem::ellipsoid(1, std::numbers::sqrt2), 2.5);
    const auto oc = PeriodCatalog::from_orbits(orbits, 2.5);
    CHECK(oc.entries[2].label == "K^2");
    CHECK(sigma_gap(oc) == doctest::Approx((std::numbers::sqrt2 - 1) / 2));
}

TEST_CASE("sigma gap satisfies the strict inequality on random catalogs") {
    std::mt19937_64 rng(21);
    std::uniform_real_distribution<double> u(0.01, 12);
    std::uniform_int_distribution<int> size(1, 15);
    for (int trial = 0; trial < 500; ++trial) {
        std::vector<PeriodEntry> e;
        const int n = size(rng);
        for (int i = 0; i < n; ++i) e.push_back({"T" + std::to_string(i), u(rng)});
        const auto cat = PeriodCatalog::make(e, 10);
        std::vector<double> t;
        for (const auto& x : cat.entries) t.push_back(x.period);
        if (t.empty()) {
            CHECK_THROWS_AS(sigma_gap(cat), PreconditionError);
            continue;
        }
        const double s = sigma_gap(cat);
        const double inf = naive_inf(t);
        CHECK(s > 0);
        CHECK(s < inf);
        CHECK(s == doctest::Approx(inf / 2));
    }
}

TEST_CASE("winding relation examples") {
    CHECK(wind_pi_from_relation({{1}, {}, 2, 1}) == 0);
    CHECK(wind_pi_from_relation({{0}, {}, 2, 1}) == -1);
    CHECK_FALSE(winding_feasible({{0}, {}, 2, 1}));
    CHECK(wind_pi_from_relation({{1}, {1}, 2, 2}) == 0);
    CHECK_THROWS_AS(wind_pi_from_relation({{1}, {}, 2, 2}), PreconditionError);
    CHECK_THROWS_AS(wind_pi_from_relation({{}, {}, 2, 0}), PreconditionError);
    CHECK(wind_below(3) == 1);
    CHECK(wind_above(3) == 2);
    CHECK(wind_below(2) == 1);
    CHECK(wind_above(2) == 1);
    CHECK(wind_below(-1) == -1);
    CHECK(wind_above(-1) == 0);
    for (int mu = -7; mu <= 7; ++mu) CHECK(2 * wind_below(mu) + (wind_above(mu) - wind_below(mu)) == mu);
}

TEST_CASE("feasibility rejects the index-estimate contradictions exhaustively") {
    // spheres with one positive puncture and up to three negative ones
    int checked = 0;
    std::function<void(std::vector<int>&, int)> rec;
    for (int w_inf = -3; w_inf <= 3; ++w_inf) {
        rec = [&](std::vector<int>& neg, int depth) {
            const CurveWindingData d{{w_inf}, neg, 2, 1 + static_cast<int>(neg.size())};
            int sum = 0;
            for (int w : neg) sum += w;
            // independent evaluation of the relation for this shape
            CHECK(winding_feasible(d) == (w_inf - sum + static_cast<int>(neg.size()) - 1 >= 0));
            // every case ruled out by the index estimates is infeasible
            const bool all_ge1 = std::all_of(neg.begin(), neg.end(), [](int w) { return w >= 1; });
            const bool some_ge2 = std::any_of(neg.begin(), neg.end(), [](int w) { return w >= 2; });
            if (w_inf <= 0 && neg.empty()) CHECK_FALSE(winding_feasible(d));
            if (w_inf <= 0 && all_ge1) CHECK_FALSE(winding_feasible(d));
            if (w_inf <= 1 && !neg.empty() && all_ge1 && some_ge2) CHECK_FALSE(winding_feasible(d));
            // and fast planes are exactly the planes with wind_inf = 1
            if (neg.empty()) CHECK((wind_pi_from_relation(d) == 0) == (w_inf == 1));
            ++checked;
            if (depth == 3) return;
            for (int w = -3; w <= 3; ++w) {
                neg.push_back(w);
                rec(neg, depth + 1);
                neg.pop_back();
            }
        };
        std::vector<int> neg;
        rec(neg, 0);
    }
    CHECK(checked == 7 * (1 + 7 + 49 + 343));
}

TEST_CASE("tree validation examples and mutants") {
    const BubblingTree good = valid_tree();
    CHECK(validate_tree(good, 0.4).pass);

    BubblingTree single;
    single.energy_bound = 5;
    single.vertices = {{2, 3, {}, {}, {}}};
    CHECK(validate_tree(single, 0.4).pass);

    BubblingTree a = good;  // child too close to its parent
    a.vertices[0].edges[1].period = a.vertices[2].period = 2.8;
    CHECK(rules(validate_tree(a, 0.4)) == std::vector<std::string>{"a"});
    CHECK(validate_tree(a, 0.4).violations[0].path == "root/1");

    BubblingTree b = single;  // index below 2
    b.vertices[0].mu = 1;
    CHECK(rules(validate_tree(b, 0.4)) == std::vector<std::string>{"b"});

    BubblingTree c = good;  // index 3 below an index-2 vertex
    c.vertices[0].edges[0].mu = c.vertices[1].mu = 3;
    CHECK(rules(validate_tree(c, 0.4)) == std::vector<std::string>{"c"});

    BubblingTree e = good;  // beyond the energy bound
    e.energy_bound = 2.9;
    CHECK(rules(validate_tree(e, 0.4)) == std::vector<std::string>{"e"});

    BubblingTree f = good;  // area rule at an index-3 root
    f.vertices[0].mu = 3;
    f.vertices[0].area_positive = true;
    f.vertices[0].wind_inf = 1;
    f.vertices[0].edges[0].mu = f.vertices[1].mu = 3;
    CHECK(rules(validate_tree(f, 0.4)) == std::vector<std::string>{"f"});
    f.vertices[0].area_positive = false;
    CHECK(validate_tree(f, 0.4).pass);

    CHECK_THROWS_AS(validate_tree(good, 0), PreconditionError);
}

TEST_CASE("malformed trees are structural errors") {
    BubblingTree t = valid_tree();
    t.vertices[0].edges[0].child.reset();
    CHECK_THROWS_AS(validate_tree(t, 0.4), StructuralError);
    t = valid_tree();
    t.vertices[0].edges[0].period = 1.2;
    CHECK_THROWS_AS(validate_tree(t, 0.4), StructuralError);
    t = valid_tree();
    t.vertices[0].edges[0].child = 7;
    CHECK_THROWS_AS(validate_tree(t, 0.4), StructuralError);
    t = valid_tree();
    t.vertices[0].edges.pop_back();  // vertex 2 unreachable
    CHECK_THROWS_AS(validate_tree(t, 0.4), StructuralError);
    t = valid_tree();
    t.vertices[1].edges.push_back({3, 2, 0});  // cycle back to the root
    CHECK_THROWS_AS(validate_tree(t, 0.4), StructuralError);
    CHECK_THROWS_AS(validate_tree(BubblingTree{}, 0.4), StructuralError);
}

TEST_CASE("tree validation is monotone in sigma") {
    std::mt19937_64 rng(8);
    std::uniform_real_distribution<double> u(0.01, 3);
    int passes = 0;
    for (int trial = 0; trial < 400; ++trial) {
        const BubblingTree t = random_tree(rng);
        const double s = u(rng);
        const TreeReport r = validate_tree(t, s);
        for (double smaller : {s / 2, s / 10, 1e-6}) {
            const TreeReport r2 = validate_tree(t, smaller);
            CHECK(r2.violations.size() <= r.violations.size());
            if (r.pass) CHECK(r2.pass);
        }
        passes += r.pass;
    }
    CHECK(passes > 0);
}
