#pragma once

// Period gaps, the winding relation for punctured curves and the
// combinatorial rules obeyed by bubbling-off trees.

#include "reebkit/errors.hpp"
#include "reebkit/orbits.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace reebkit {

struct PeriodEntry {
    std::string label;
    double period = 0;
};

struct PeriodCatalog {
    std::vector<PeriodEntry> entries;
    double bound = 0;

    /// Keeps entries with 0 < period <= bound, sorted ascending.
    static PeriodCatalog make(std::vector<PeriodEntry> entries, double bound);
    static PeriodCatalog from_orbits(const std::vector<ClosedOrbit>& orbits, double bound);
};

/// Two periods closer than the resolution.
class ResolutionError : public DegenerateError {
public:
    using DegenerateError::DegenerateError;
};

/// Half of inf { T', |T' - T''| } over distinct catalogued periods <= C.
/// Throws PreconditionError when nothing survives the cutoff and
/// ResolutionError when two periods are closer than `resolution`.
double sigma_gap(const PeriodCatalog& cat, double resolution = 1e-9);

struct CurveWindingData {
    std::vector<int> wind_inf_positive;
    std::vector<int> wind_inf_negative;
    int euler_char = 2;
    int puncture_count = 0;

    void validate() const;
};

/// wind_pi = (sum positive - sum negative) - chi + #punctures.
int wind_pi_from_relation(const CurveWindingData& d);
/// wind_pi counts zeros positively, so a negative value is a contradiction.
bool winding_feasible(const CurveWindingData& d);

/// Extremal windings of the asymptotic operator with index mu:
/// wind^{<0} = floor(mu / 2), wind^{>=0} = wind^{<0} + parity.
int wind_below(int mu);
int wind_above(int mu);

struct TreeEdge {
    /// Period and index of the negative-puncture asymptotic limit.
    double period = 0;
    int mu = 0;
    /// Vertex capping this puncture; empty means a dangling edge.
    std::optional<std::size_t> child;
};

struct TreeVertex {
    /// Period and index of the positive-puncture asymptotic limit.
    double period = 0;
    int mu = 0;
    std::vector<TreeEdge> edges;
    /// Optional data for the area rule: int v^* dlambda > 0 and wind_inf at the positive puncture.
    std::optional<bool> area_positive;
    std::optional<int> wind_inf;
};

struct BubblingTree {
    std::vector<TreeVertex> vertices;
    std::size_t root = 0;
    double energy_bound = 0;
};

/// Malformed tree: dangling edge, bad child index, cycle, unreachable vertex
/// or parent edge inconsistent with the child's positive puncture.
class StructuralError : public PreconditionError {
public:
    using PreconditionError::PreconditionError;
};

struct TreeViolation {
    /// "a" period gap, "b" index >= 2, "c" index propagation at 2,
    /// "e" energy bound, "f" area rule.
    std::string rule;
    /// Child-edge indices from the root, e.g. "root/1/0".
    std::string path;
    std::string detail;
};

struct TreeReport {
    bool pass = true;
    double sigma = 0;
    std::vector<TreeViolation> violations;
};

/// Throws StructuralError on a malformed tree before any rule is checked.
void check_tree_structure(const BubblingTree& t);
TreeReport validate_tree(const BubblingTree& t, double sigma);

} // namespace reebkit
