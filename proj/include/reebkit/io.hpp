#pragma once

// JSON and CSV serialization of systems, orbit tables, verification reports,
// trees and catalogs. Every floating-point value is rounded to 12
// significant digits before it is written.

#include "reebkit/bookkeeping.hpp"
#include "reebkit/errors.hpp"
#include "reebkit/knots.hpp"
#include "reebkit/orbits.hpp"
#include "reebkit/section.hpp"

#include <json.hpp>

#include <filesystem>
#include <string>
#include <vector>

namespace reebkit::io {

using json = nlohmann::ordered_json;

/// Malformed or missing configuration input.
class ConfigError : public PreconditionError {
public:
    using PreconditionError::PreconditionError;
};

double round12(double x);
/// Text form with 12 significant digits (CSV, SVG labels).
std::string fmt12(double x);

/// Indented JSON text like json::dump, with floats printed in their
/// shortest round-trip form (so rounded values keep at most 12 digits).
std::string dump(const json& j, int indent = 2);

json to_json(const ContactSystem& sys);
/// {"family": "round"|"ellipsoid", "a", "b", "lens": {"p", "q"} | null}.
ContactSystem system_from_json(const json& j);

json to_json(const Point4& pt);
json to_json(const ClosedOrbit& orbit);
json to_json(const OrbitIndex& idx);
json to_json(const ReturnRecord& rec);
json to_json(const LensTables& t);
json to_json(const TreeReport& rep);
json to_json(const PeriodCatalog& cat);
json to_json(const Main3Report& rep);

/// One row per sampled start: r, theta, forward and backward return data.
std::string samples_csv(const Main3Report& rep);

/// Nested tree: {"energy_bound", "root": V} with
/// V = {"period", "mu", "area_positive"?, "wind_inf"?, "children": [E]} and
/// E = {"period", "mu", "vertex": V | null}. A missing or null vertex is a
/// dangling edge, reported later by the structural check.
BubblingTree tree_from_json(const json& j);
json tree_to_json(const BubblingTree& t);

/// {"bound": C, "periods": [T | {"label", "period"}]}.
PeriodCatalog catalog_from_json(const json& j);

/// Reads a JSON file; ConfigError when missing or unparsable.
json read_json(const std::filesystem::path& path);

/// Resolves a value that is either inline JSON or a string path to a JSON
/// file (relative paths are taken from `base`).
json inline_or_file(const json& value, const std::filesystem::path& base);

} // namespace reebkit::io
