#include "bierkit/defcone/io.hpp"

#include "bierkit/exactla/error.hpp"

#include <string>

namespace bierkit::defcone {

namespace {

Rational rational_from(const Json& v) {
    if (v.is_number_integer()) return Rational(v.get<long>());
    if (v.is_string()) return exactla::parse_rational(v.get<std::string>());
    throw ParseError("expected an integer or a rational string");
}

Vec vec_from(const Json& v, const char* what) {
    if (!v.is_array()) throw ParseError(std::string(what) + " must be an array");
    Vec out;
    for (const auto& x : v) out.push_back(rational_from(x));
    return out;
}

Json number_or_string(const Rational& x) {
    if (x.is_integer() && x.numerator().fits_slong_p()) return x.numerator().get_si();
    return x.str();
}

}  // namespace

FanFile fan_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("rays") || !j.contains("cones"))
        throw ParseError("fan JSON must be an object with \"rays\" and \"cones\"");
    if (!j["rays"].is_array() || !j["cones"].is_array()) throw ParseError("fan JSON: rays and cones must be arrays");
    std::vector<Vec> rays;
    for (const auto& r : j["rays"]) rays.push_back(vec_from(r, "ray"));
    std::vector<std::vector<int>> cones;
    for (const auto& c : j["cones"]) {
        if (!c.is_array()) throw ParseError("fan JSON: each cone must be an array");
        std::vector<int> idx;
        for (const auto& i : c) {
            if (!i.is_number_integer()) throw ParseError("fan JSON: cone entries must be integers");
            idx.push_back(i.get<int>());
        }
        cones.push_back(std::move(idx));
    }
    FanFile out{make_fan(std::move(rays), cones), std::nullopt};
    if (j.contains("support")) {
        out.support = vec_from(j["support"], "support");
        if (out.support->size() != out.fan.rays.size())
            throw ValidationError("fan JSON: support has one entry per ray");
    }
    return out;
}

Json to_json(const WallRow& row) {
    Json coeffs = Json::array();
    for (const auto& c : row.coeffs) coeffs.push_back(number_or_string(c));
    return Json{{"row", coeffs}, {"ridge", {row.cone_a, row.cone_b}}};
}

Json to_json(const DefConeReport& rep, const WallSystem& system) {
    Json j;
    j["lin_dim"] = rep.lin_dim;
    j["lineality"] = rep.lineality;
    j["essential_dim"] = rep.essential_dim;
    j["verdict"] = rep.indecomposable ? "Indecomposable" : "Decomposable";
    Json eq = Json::array();
    for (const auto& r : system.equalities) eq.push_back(to_json(r));
    Json ineq = Json::array();
    for (const auto& r : system.inequalities) ineq.push_back(to_json(r));
    j["equalities"] = std::move(eq);
    j["inequalities"] = std::move(ineq);
    j["justification"] = rep.justification;
    Json w = Json::array();
    for (const auto& v : rep.witness) {
        Json row = Json::array();
        for (const auto& x : v) row.push_back(number_or_string(x));
        w.push_back(std::move(row));
    }
    j["witness"] = std::move(w);
    return j;
}

}  // namespace bierkit::defcone
