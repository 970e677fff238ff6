#pragma once

// Fan file: {"rays": [[1,0],[0,1],...], "cones": [[0,1],[1,2],...]} with
// 0-based ray indices and an optional "support": [...] vector.
//
// DefConeReport JSON:
//   {"lin_dim", "lineality", "essential_dim", "verdict", "equalities",
//    "inequalities", "justification", "witness"}

#include "bierkit/defcone/fan.hpp"
#include "bierkit/defcone/wall_system.hpp"

#include "json.hpp"

#include <optional>

namespace bierkit::defcone {

using Json = nlohmann::ordered_json;

struct FanFile {
    SimplicialFan fan;
    std::optional<Vec> support;
};

// Throws ParseError on malformed documents.
FanFile fan_from_json(const Json& j);

Json to_json(const WallRow& row);
Json to_json(const DefConeReport& rep, const WallSystem& system);

}  // namespace bierkit::defcone
