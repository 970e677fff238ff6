#pragma once

// JSON forms:
//   complex:     {"n": 6, "facets": [[1,2,3], [1,2,6], ...]}
//   Bier sphere: {"n": 6, "facets": [[4,6,-1,-2,-3], ...]}  (negative = barred)

#include "bierkit/scomplex/bier.hpp"
#include "bierkit/scomplex/complex.hpp"
#include "bierkit/scomplex/threshold.hpp"

#include "json.hpp"

namespace bierkit::scomplex {

using Json = nlohmann::ordered_json;

Json to_json(const SimplicialComplex& k);
Json to_json(const BierSphere& s);
Json to_json(const ThresholdResult& r);

// Throws ParseError on malformed documents, ValidationError on bad labels.
SimplicialComplex complex_from_json(const Json& j);

}  // namespace bierkit::scomplex
