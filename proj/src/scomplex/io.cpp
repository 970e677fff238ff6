#include "bierkit/scomplex/io.hpp"

#include "bierkit/exactla/error.hpp"

#include <string>

namespace bierkit::scomplex {

namespace {

Json rational_array(const std::vector<Rational>& v) {
    Json out = Json::array();
    for (const auto& x : v) out.push_back(x.str());
    return out;
}

}  // namespace

Json to_json(const SimplicialComplex& k) {
    Json j;
    j["n"] = k.n();
    j["facets"] = k.facet_lists();
    return j;
}

Json to_json(const BierSphere& s) {
    Json j;
    j["n"] = s.n();
    j["facets"] = s.signed_facets();
    return j;
}

Json to_json(const ThresholdResult& r) {
    Json j;
    if (const auto* cert = std::get_if<ThresholdCert>(&r)) {
        j["threshold"] = true;
        j["weights"] = rational_array(cert->weights);
        j["nu"] = cert->threshold.str();
        j["margin"] = cert->margin.str();
    } else {
        const auto& no = std::get<NotThreshold>(r);
        j["threshold"] = false;
        j["optimum"] = no.optimum.str();
        j["lp_certified"] = exactla::certifies_optimality(no.lp, no.solution);
    }
    return j;
}

SimplicialComplex complex_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("n") || !j.contains("facets"))
        throw ParseError("complex JSON must be an object with \"n\" and \"facets\"");
    if (!j["n"].is_number_integer()) throw ParseError("complex JSON: \"n\" must be an integer");
    if (!j["facets"].is_array()) throw ParseError("complex JSON: \"facets\" must be an array");
    const int n = j["n"].get<int>();
    std::vector<std::vector<int>> faces;
    for (const auto& f : j["facets"]) {
        if (!f.is_array()) throw ParseError("complex JSON: each facet must be an array");
        std::vector<int> face;
        for (const auto& e : f) {
            if (!e.is_number_integer()) throw ParseError("complex JSON: facet entries must be integers");
            face.push_back(e.get<int>());
        }
        faces.push_back(std::move(face));
    }
    return make_complex(n, faces);
}

}  // namespace bierkit::scomplex
