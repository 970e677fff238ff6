#pragma once

// Soundness checks on a computed hull, using only the result's fields and
// the brute-force oracles.

#include "bierkit/polytope/hull.hpp"
#include "oracles.hpp"

#include <set>
#include <string>

namespace oracle {

inline std::size_t affine_rank_of(const std::vector<Vec>& pts, std::uint64_t mask) {
    std::vector<Vec> diffs;
    const Vec* base = nullptr;
    for (std::size_t i = 0; i < pts.size(); ++i) {
        if (!(mask >> i & 1)) continue;
        if (!base) {
            base = &pts[i];
            continue;
        }
        Vec d;
        for (std::size_t c = 0; c < pts[i].size(); ++c) d.push_back(pts[i][c] - (*base)[c]);
        diffs.push_back(d);
    }
    return rank(diffs);
}

/**
 * Empty string when sound, else the first violated property:
 * inequalities hold for all input points; incidences are exactly the
 * equality sets; each facet spans dim - 1; vertices are the singleton
 * faces; the lattice is intersection closed with top and bottom; the
 * Euler relation sum (-1)^dim = 0 holds over all faces.
 */
inline std::string hull_soundness(const bierkit::polytope::HullResult& h) {
    const auto& pts = h.points;
    for (std::size_t f = 0; f < h.facets.size(); ++f) {
        const auto& fa = h.facets[f];
        std::uint64_t tight = 0;
        for (std::size_t i = 0; i < pts.size(); ++i) {
            Rational v;
            for (std::size_t c = 0; c < pts[i].size(); ++c) v += fa.normal[c] * pts[i][c];
            if (v > fa.offset) return "point " + std::to_string(i) + " violates facet " + std::to_string(f);
            if (v == fa.offset) tight |= std::uint64_t{1} << i;
        }
        if (tight != fa.incidence) return "incidence of facet " + std::to_string(f) + " is not the equality set";
        if (affine_rank_of(pts, fa.incidence & h.vertices) + 1 != static_cast<std::size_t>(h.dim))
            return "facet " + std::to_string(f) + " does not span a hyperplane";
    }
    if (affine_rank_of(pts, (std::uint64_t{1} << pts.size()) - 1) != static_cast<std::size_t>(h.dim))
        return "dimension mismatch";
    std::set<std::uint64_t> faces;
    long euler = 0;
    for (const auto& face : h.lattice) {
        faces.insert(face.vertices);
        const int expected = face.vertices == 0 ? -1 : static_cast<int>(affine_rank_of(pts, face.vertices));
        if (face.dim != expected) return "face dimension mismatch";
        euler += (face.dim % 2 == 0) ? 1 : -1;
    }
    if (!faces.count(0) || !faces.count(h.vertices)) return "lattice lacks top or bottom";
    for (auto a : faces)
        for (auto b : faces)
            if (!faces.count(a & b)) return "lattice not closed under intersection";
    if (euler != 0) return "Euler relation fails";
    for (std::size_t i = 0; i < pts.size(); ++i) {
        const std::uint64_t bit = std::uint64_t{1} << i;
        if ((h.vertices & bit) && !faces.count(bit)) return "vertex missing from lattice";
    }
    return "";
}

}  // namespace oracle
