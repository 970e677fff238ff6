#include "bierkit/polytope/io.hpp"

#include "bierkit/exactla/error.hpp"

#include <fstream>
#include <istream>
#include <sstream>

namespace bierkit::polytope {

namespace {

std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return "";
    const auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

std::vector<std::string> split_cells(const std::string& line) {
    std::vector<std::string> cells;
    std::stringstream ss(line);
    std::string cell;
    while (std::getline(ss, cell, ',')) cells.push_back(trim(cell));
    if (!line.empty() && line.back() == ',') cells.emplace_back();
    return cells;
}

Json strings(const Vec& v) {
    Json out = Json::array();
    for (const auto& x : v) out.push_back(x.str());
    return out;
}

}  // namespace

std::vector<Vec> read_points_csv(std::istream& in, std::optional<int> round_digits) {
    std::vector<Vec> rows;
    std::string line;
    int line_no = 0;
    bool first = true;
    while (std::getline(in, line)) {
        ++line_no;
        if (trim(line).empty()) continue;
        const auto cells = split_cells(line);
        if (first) {
            first = false;
            try {
                exactla::parse_decimal(cells.front());
            } catch (const ParseError&) {
                continue;
            }
        }
        Vec row;
        for (std::size_t c = 0; c < cells.size(); ++c) {
            try {
                const std::string text = round_digits ? exactla::round_decimal_string(cells[c], *round_digits) : cells[c];
                row.push_back(exactla::parse_decimal(text));
            } catch (const ParseError& e) {
                throw ParseError("line " + std::to_string(line_no) + ", column " + std::to_string(c + 1) + ": " +
                                 e.what());
            }
        }
        if (!rows.empty() && row.size() != rows.front().size())
            throw ParseError("line " + std::to_string(line_no) + ": expected " + std::to_string(rows.front().size()) +
                             " columns, found " + std::to_string(row.size()));
        rows.push_back(std::move(row));
    }
    if (rows.empty()) throw ParseError("no data rows");
    return rows;
}

std::vector<Vec> read_points_csv_file(const std::string& path, std::optional<int> round_digits) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open " + path);
    try {
        return read_points_csv(in, round_digits);
    } catch (const ParseError& e) {
        throw ParseError(path + ": " + e.what());
    }
}

Json to_json(const HullResult& h) {
    Json j;
    j["dim"] = h.dim;
    Json verts = Json::array();
    for (int v : h.vertex_indices()) verts.push_back(strings(h.points[static_cast<std::size_t>(v)]));
    j["vertices"] = std::move(verts);
    Json facets = Json::array();
    for (const auto& f : h.facets) {
        Json fj;
        fj["normal"] = strings(f.normal);
        fj["offset"] = f.offset.str();
        fj["vertices"] = scomplex::elements(f.incidence);
        facets.push_back(std::move(fj));
    }
    j["facets"] = std::move(facets);
    return j;
}

Json to_json(const VerificationReport& r) {
    Json j;
    j["verdict"] = r.pass ? "PASS" : "FAIL";
    if (!r.pass) j["reason"] = r.reason;
    j["hull"] = {{"dim", r.hull_dim}, {"vertices", r.hull_vertices}, {"facets", r.hull_facets}, {"edges", r.hull_edges}};
    if (r.pass) {
        j["labeling_kind"] = r.labeling_kind;
        j["labeling"] = r.labeling;
    } else {
        j["non_vertices"] = r.non_vertices;
        j["missing_facets"] = r.missing_facets;
        j["extra_facets"] = r.extra_facets;
    }
    return j;
}

}  // namespace bierkit::polytope
