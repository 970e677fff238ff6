#pragma once

// Vertex matrix CSV: one point per row, decimal literals parsed exactly;
// a first row whose first cell is not a number is skipped as a header.
//
// Hull JSON:
//   {"dim": 5, "vertices": [[...], ...],
//    "facets": [{"normal": [...], "offset": "p/q", "vertices": [...]}]}
// Facet "vertices" are indices into the input point list.

#include "bierkit/polytope/hull.hpp"
#include "bierkit/polytope/realization.hpp"

#include "json.hpp"

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace bierkit::polytope {

using Json = nlohmann::ordered_json;

/// With `round_digits`, every cell is first rounded half away from zero to
/// that many fractional digits. Throws ParseError with row and column.
std::vector<Vec> read_points_csv(std::istream& in, std::optional<int> round_digits = std::nullopt);
std::vector<Vec> read_points_csv_file(const std::string& path, std::optional<int> round_digits = std::nullopt);

Json to_json(const HullResult& h);
Json to_json(const VerificationReport& r);

}  // namespace bierkit::polytope
