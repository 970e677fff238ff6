#include "bierkit/cli/commands.hpp"

#include "bierkit/defcone/io.hpp"
#include "bierkit/exactla/error.hpp"
#include "bierkit/polytope/io.hpp"
#include "bierkit/polytope/realization.hpp"
#include "bierkit/polytope/vpolytope.hpp"
#include "bierkit/scomplex/io.hpp"

#include "CLI11.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>

namespace bierkit::cli {

using exactla::Rational;
using exactla::Vec;
using Json = nlohmann::ordered_json;

namespace {

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> parts;
    std::stringstream in(s);
    std::string item;
    while (std::getline(in, item, sep)) parts.push_back(item);
    if (!s.empty() && s.back() == sep) parts.emplace_back();
    return parts;
}

int parse_int(const std::string& s, const std::string& what) {
    std::size_t used = 0;
    int v = 0;
    try {
        v = std::stoi(s, &used);
    } catch (const std::exception&) {
        used = 0;
    }
    if (used == 0 || used != s.size()) throw ParseError(what + ": \"" + s + "\" is not an integer");
    return v;
}

std::pair<int, int> int_pair(const std::string& s, const std::string& what) {
    const auto parts = split(s, ',');
    if (parts.size() != 2) throw ParseError(what + ": expected two comma-separated integers, got \"" + s + "\"");
    return {parse_int(parts[0], what), parse_int(parts[1], what)};
}

Json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open " + path);
    try {
        return Json::parse(in);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(path + ": " + e.what());
    }
}

void emit(const Json& j, const std::string& out_path, std::ostream& out) {
    const std::string text = j.dump(2) + "\n";
    if (out_path.empty()) {
        out << text;
        return;
    }
    std::ofstream file(out_path, std::ios::binary);
    if (!file) throw ParseError("cannot write " + out_path);
    file << text;
}

Json label_pairs(const std::vector<std::pair<int, int>>& edges) {
    Json arr = Json::array();
    for (const auto& [a, b] : edges) arr.push_back({a, b});
    return arr;
}

int cmd_bier(const std::string& complex, const std::string& out_path, std::ostream& out, std::ostream& err) {
    const auto sphere = scomplex::bier_sphere(load_complex(complex));
    const auto edges = sphere.edges();
    const int vertices = scomplex::popcount(sphere.used_vertices());
    Json j = scomplex::to_json(sphere);
    j["edges"] = label_pairs(edges);
    j["counts"] = {{"vertices", vertices}, {"edges", edges.size()}, {"facets", sphere.facets().size()}};
    emit(j, out_path, out);
    err << "Bier sphere on n=" << sphere.n() << ": " << sphere.facets().size() << " facets, " << edges.size()
        << " edges, " << vertices << " vertices\n";
    return kOk;
}

int cmd_verify(const std::string& vertices, const std::string& complex, std::optional<int> round,
               const std::string& out_path, std::ostream& out, std::ostream& err) {
    if (round && *round < 0) throw ParseError("--round must be non-negative");
    const auto points = polytope::read_points_csv_file(vertices, round);
    const auto sphere = scomplex::bier_sphere(load_complex(complex));
    const auto report = polytope::verify_polytopality(points, sphere);
    emit(polytope::to_json(report), out_path, out);
    if (report.pass) {
        err << "PASS: " << report.hull_vertices << " vertices, " << report.hull_facets << " facets, "
            << report.hull_edges << " edges (" << report.labeling_kind << " labeling)\n";
        return kOk;
    }
    err << "FAIL: " << report.reason << "\n";
    return kFail;
}

int cmd_defcone(const std::string& hypersimplex, const std::string& complex, const std::string& coarsen,
                const std::string& out_path, std::ostream& out, std::ostream& err) {
    if (hypersimplex.empty() == complex.empty())
        throw ParseError("defcone: give exactly one of --hypersimplex and --complex");
    if (!coarsen.empty() && coarsen != "diplo") throw ParseError("--coarsen: only \"diplo\" is supported");

    defcone::SimplicialFan fan;
    std::optional<Vec> support;
    std::size_t lineality = 0;
    bool do_coarsen = coarsen == "diplo";
    if (!hypersimplex.empty()) {
        const auto [n, k] = int_pair(hypersimplex, "--hypersimplex");
        if (n != 2 * k || k < 2)
            throw DomainError("--hypersimplex n,k needs n = 2k with k >= 2, got " + hypersimplex);
        fan = defcone::bier_fan(scomplex::skeleton(n, k - 1));
        const auto pts = polytope::project_to_h0(polytope::hypersimplex(n, k));
        support = defcone::support_vector(pts.points(), fan.rays);
        lineality = static_cast<std::size_t>(n - 1);
        do_coarsen = true;
    } else {
        const auto doc = read_json_file(complex);
        if (doc.is_object() && doc.contains("rays")) {
            auto file = defcone::fan_from_json(doc);
            fan = std::move(file.fan);
            support = std::move(file.support);
        } else {
            fan = defcone::bier_fan(scomplex::complex_from_json(doc));
        }
        lineality = fan.dim();
        const auto check = defcone::check_fan(fan);
        if (!check.ok()) throw ValidationError("not a complete simplicial fan: " + check.message);
    }

    std::optional<defcone::CoarseningMap> map;
    if (do_coarsen) map = defcone::coarsen_to_diplo(fan);
    const auto system = defcone::assemble_wall_system(fan, map);
    const auto report = defcone::deformation_dims(system, lineality, support);
    emit(defcone::to_json(report, system), out_path, out);
    err << (report.indecomposable ? "Indecomposable" : "Decomposable") << ": lin_dim " << report.lin_dim
        << ", lineality " << report.lineality << ", essential_dim " << report.essential_dim << " ("
        << report.equalities << " equalities, " << report.inequalities << " inequalities)\n";
    return kOk;
}

int cmd_threshold(const std::string& complex, const std::string& out_path, std::ostream& out, std::ostream& err) {
    const auto k = load_complex(complex);
    const auto result = scomplex::is_threshold(k);
    Json j = scomplex::to_json(result);
    if (const auto* cert = std::get_if<scomplex::ThresholdCert>(&result)) {
        const bool ok = scomplex::verify_threshold_cert(k, *cert);
        j["verified"] = ok;
        emit(j, out_path, out);
        err << "threshold: nu " << cert->threshold.str() << ", margin " << cert->margin.str()
            << (ok ? ", certificate re-verified\n" : ", certificate FAILED re-verification\n");
        return ok ? kOk : kFail;
    }
    emit(j, out_path, out);
    err << "not threshold: best margin " << std::get<scomplex::NotThreshold>(result).optimum.str() << "\n";
    return kOk;
}

int cmd_minkowski(int n, const std::string& x_list, const std::string& out_path, std::ostream& out,
                  std::ostream& err) {
    if (n < 2) throw DomainError("--n must be at least 2");
    Vec x;
    if (x_list.empty()) {
        for (int i = n; i >= 1; --i) x.emplace_back(i);
    } else {
        for (const auto& s : split(x_list, ',')) x.push_back(exactla::parse_rational(s));
    }
    if (x.size() != static_cast<std::size_t>(n))
        throw ParseError("--x has " + std::to_string(x.size()) + " entries, expected " + std::to_string(n));
    for (std::size_t i = 0; i + 1 < x.size(); ++i)
        if (x[i] < x[i + 1]) throw DomainError("--x must be non-increasing");

    const auto lhs = polytope::project_to_h0(polytope::permutahedron(x));
    polytope::VPolytope rhs({Vec(x.size())}, polytope::Ambient::plain(x.size()));
    Json summands = Json::array();
    for (int i = 1; i < n; ++i) {
        const Rational c = x[static_cast<std::size_t>(i - 1)] - x[static_cast<std::size_t>(i)];
        if (c.is_zero()) continue;
        rhs = polytope::minkowski_sum(rhs, polytope::scaled(polytope::hypersimplex(n, i), c));
        summands.push_back({{"coefficient", c.str()}, {"r", i}});
    }
    rhs = polytope::project_to_h0(rhs);
    const bool pass = polytope::same_vertex_set(lhs, rhs);
    Json xs = Json::array();
    for (const auto& v : x) xs.push_back(v.str());
    Json j;
    j["verdict"] = pass ? "PASS" : "FAIL";
    j["n"] = n;
    j["x"] = xs;
    j["summands"] = summands;
    j["permutahedron_vertices"] = polytope::extreme_points(lhs.points()).size();
    j["sum_vertices"] = polytope::extreme_points(rhs.points()).size();
    emit(j, out_path, out);
    err << (pass ? "PASS" : "FAIL") << ": permutahedron vs sum of " << summands.size() << " hypersimplices\n";
    return pass ? kOk : kFail;
}

}  // namespace

scomplex::SimplicialComplex load_complex(const std::string& spec) {
    const std::string prefix = "builtin:";
    if (spec.rfind(prefix, 0) != 0) return scomplex::complex_from_json(read_json_file(spec));
    const std::string name = spec.substr(prefix.size());
    if (name == "hemi_icosahedron") return scomplex::hemi_icosahedron();
    if (name.rfind("skeleton:", 0) == 0) {
        const auto [n, r] = int_pair(name.substr(9), "builtin:skeleton");
        return scomplex::skeleton(n, r);
    }
    throw ParseError("unknown builtin complex \"" + name + "\"");
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Bier spheres, exact hulls and deformation cones", "bierkit"};
    app.require_subcommand(1);

    std::string complex, vertices, out_path, hypersimplex, coarsen, x_list;
    std::optional<int> round;
    int n = 0;

    auto* bier = app.add_subcommand("bier", "Bier sphere of a complex");
    bier->add_option("--complex", complex, "complex JSON path or builtin:<name>")->required();
    bier->add_option("--out", out_path, "write JSON here instead of stdout");

    auto* verify = app.add_subcommand("verify", "check a vertex matrix realizes Bier(K)");
    verify->add_option("--vertices", vertices, "CSV vertex matrix")->required();
    verify->add_option("--complex", complex, "complex JSON path or builtin:<name>")->required();
    verify->add_option("--round", round, "round cells to this many decimals first");
    verify->add_option("--out", out_path, "write JSON here instead of stdout");

    auto* defc = app.add_subcommand("defcone", "deformation cone dimension");
    defc->add_option("--hypersimplex", hypersimplex, "n,k with n = 2k");
    defc->add_option("--complex", complex, "complex JSON or fan JSON path");
    defc->add_option("--coarsen", coarsen, "diplo");
    defc->add_option("--out", out_path, "write JSON here instead of stdout");

    auto* thr = app.add_subcommand("threshold", "threshold certificate or LP refutation");
    thr->add_option("--complex", complex, "complex JSON path or builtin:<name>")->required();
    thr->add_option("--out", out_path, "write JSON here instead of stdout");

    auto* mink = app.add_subcommand("minkowski-check", "permutahedron as a sum of hypersimplices");
    mink->add_option("--n", n, "coordinate count")->required();
    mink->add_option("--x", x_list, "comma-separated non-increasing rationals");
    mink->add_option("--out", out_path, "write JSON here instead of stdout");

    try {
        std::vector<std::string> rev(args.rbegin(), args.rend());
        app.parse(rev);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return kUsage;
    }

    const std::function<int()> dispatch = [&] {
        if (bier->parsed()) return cmd_bier(complex, out_path, out, err);
        if (verify->parsed()) return cmd_verify(vertices, complex, round, out_path, out, err);
        if (defc->parsed()) return cmd_defcone(hypersimplex, complex, coarsen, out_path, out, err);
        if (thr->parsed()) return cmd_threshold(complex, out_path, out, err);
        return cmd_minkowski(n, x_list, out_path, out, err);
    };
    try {
        return dispatch();
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kUsage;
    }
}

}  // namespace bierkit::cli
