#include "bierkit/polytope/realization.hpp"

#include "bierkit/exactla/error.hpp"

#include <algorithm>
#include <set>
#include <string>

namespace bierkit::polytope {

using exactla::RatMatrix;
using scomplex::BierSphere;
using scomplex::elements;
using scomplex::SetMask;

namespace {

// Re-indexes the facet sets of a hull by vertex rank.
std::vector<SetMask> compact_facets(const HullResult& h) {
    const auto verts = h.vertex_indices();
    std::vector<SetMask> out;
    for (auto f : h.facet_vertex_sets()) {
        SetMask m = 0;
        for (std::size_t k = 0; k < verts.size(); ++k)
            if (f >> verts[k] & 1) m |= SetMask{1} << k;
        out.push_back(m);
    }
    return out;
}

std::vector<SetMask> compact_sphere(const BierSphere& s, std::vector<int>& used) {
    used = elements(s.used_vertices());
    std::vector<SetMask> out;
    for (auto f : s.vertex_sets()) {
        SetMask m = 0;
        for (std::size_t k = 0; k < used.size(); ++k)
            if (f >> used[k] & 1) m |= SetMask{1} << k;
        out.push_back(m);
    }
    return out;
}

std::vector<int> labels_of(SetMask rows, const std::vector<int>& row_label) {
    std::vector<int> out;
    for (int r : elements(rows)) out.push_back(row_label[static_cast<std::size_t>(r)]);
    std::sort(out.begin(), out.end(), [](int a, int b) {
        if ((a > 0) != (b > 0)) return a > 0;
        return std::abs(a) < std::abs(b);
    });
    return out;
}

}  // namespace

RealizationMap::RealizationMap(int n) : n_(n) {
    auto deltas = exactla::simplex_vertices(static_cast<std::size_t>(n));
    points_ = deltas;
    for (const auto& d : deltas) points_.push_back(-d);
}

const HPoint& RealizationMap::at(int label) const {
    if (label == 0 || std::abs(label) > n_) throw DomainError("label " + std::to_string(label) + " out of range");
    return points_[static_cast<std::size_t>(scomplex::label_index(label, n_))];
}

RealizationMap starshaped_realization(const scomplex::SimplicialComplex& k) {
    if (!k.is_proper() || !scomplex::is_maximal_volume(k))
        throw DomainError("starshaped_realization: only complexes with the maximal-volume condition are supported");
    return RealizationMap(k.n());
}

VerificationReport verify_polytopality(const std::vector<Vec>& points, const BierSphere& sphere) {
    VerificationReport rep;
    std::vector<int> used;
    const auto sphere_facets = compact_sphere(sphere, used);
    if (points.size() != used.size()) {
        rep.reason = "vertex count mismatch: " + std::to_string(points.size()) + " points, sphere has " +
                     std::to_string(used.size()) + " vertices";
        return rep;
    }
    HullResult h;
    try {
        h = convex_hull(points);
    } catch (const std::exception& e) {
        rep.reason = std::string("hull failed: ") + e.what();
        return rep;
    }
    rep.hull_dim = h.dim;
    rep.hull_vertices = static_cast<std::size_t>(scomplex::popcount(h.vertices));
    rep.hull_facets = h.facets.size();
    rep.hull_edges = h.count(1);
    const int sphere_dim = sphere.facets().empty() ? -1 : scomplex::popcount(sphere.vertex_sets().front()) - 1;
    for (std::size_t r = 0; r < points.size(); ++r)
        if (!(h.vertices >> r & 1)) rep.non_vertices.push_back(static_cast<int>(r));

    std::vector<int> direct;
    for (int v : used) direct.push_back(scomplex::index_label(v, sphere.n()));
    std::vector<SetMask> hull_sets;  // over input rows
    for (const auto& f : h.facets) hull_sets.push_back(f.incidence);
    const auto sorted_hull = scomplex::sorted_family(hull_sets);
    const auto sorted_sphere = scomplex::sorted_family(sphere_facets);
    {
        std::vector<SetMask> missing, extra;
        std::set_difference(sorted_sphere.begin(), sorted_sphere.end(), sorted_hull.begin(), sorted_hull.end(),
                            std::back_inserter(missing));
        std::set_difference(sorted_hull.begin(), sorted_hull.end(), sorted_sphere.begin(), sorted_sphere.end(),
                            std::back_inserter(extra));
        for (auto m : missing) rep.missing_facets.push_back(labels_of(m, direct));
        for (auto m : extra) rep.extra_facets.push_back(labels_of(m, direct));
    }

    if (h.dim != sphere_dim + 1) {
        rep.reason = "dimension mismatch: hull has dimension " + std::to_string(h.dim) + ", sphere needs " +
                     std::to_string(sphere_dim + 1);
        return rep;
    }
    if (!rep.non_vertices.empty()) {
        rep.reason = std::to_string(rep.non_vertices.size()) + " input points are not vertices";
        return rep;
    }
    if (rep.missing_facets.empty() && rep.extra_facets.empty()) {
        rep.pass = true;
        rep.labeling_kind = "direct";
        rep.labeling = direct;
        return rep;
    }
    if (auto iso = scomplex::find_family_isomorphism(static_cast<int>(points.size()), sorted_hull, sorted_sphere)) {
        rep.pass = true;
        rep.labeling_kind = "isomorphism";
        for (int img : *iso) rep.labeling.push_back(direct[static_cast<std::size_t>(img)]);
        rep.missing_facets.clear();
        rep.extra_facets.clear();
        return rep;
    }
    rep.reason = "facet families differ: " + std::to_string(rep.missing_facets.size()) + " missing, " +
                 std::to_string(rep.extra_facets.size()) + " extra under the direct labeling, and no isomorphism";
    return rep;
}

std::optional<std::vector<int>> lattices_isomorphic(const HullResult& a, const HullResult& b) {
    const auto va = a.vertex_indices();
    const auto vb = b.vertex_indices();
    if (va.size() != vb.size() || a.facets.size() != b.facets.size()) return std::nullopt;
    const auto fa = compact_facets(a);
    const auto fb = compact_facets(b);
    auto iso = scomplex::find_family_isomorphism(static_cast<int>(va.size()), fa, fb);
    if (!iso) return std::nullopt;
    for (auto& x : *iso) x = vb[static_cast<std::size_t>(x)];
    return iso;
}

std::optional<std::vector<int>> lattices_isomorphic(const HullResult& a, const BierSphere& b) {
    std::vector<int> used;
    const auto fb = compact_sphere(b, used);
    const auto va = a.vertex_indices();
    if (va.size() != used.size() || a.facets.size() != fb.size()) return std::nullopt;
    auto iso = scomplex::find_family_isomorphism(static_cast<int>(va.size()), compact_facets(a), fb);
    if (!iso) return std::nullopt;
    for (auto& x : *iso) x = used[static_cast<std::size_t>(x)];
    return iso;
}

Vec AffineMap::apply(const Vec& x) const {
    Vec out = translation;
    for (std::size_t j = 0; j < linear.size(); ++j) out[j] += exactla::dot(linear[j], x);
    return out;
}

std::optional<AffineMap> affine_fit(const std::vector<Vec>& src, const std::vector<Vec>& dst) {
    if (src.empty() || src.size() != dst.size()) return std::nullopt;
    const std::size_t ds = src.front().size();
    const std::size_t dd = dst.front().size();
    auto affine_dim = [](const std::vector<Vec>& pts) {
        std::vector<Vec> diffs;
        for (std::size_t i = 1; i < pts.size(); ++i) diffs.push_back(exactla::sub(pts[i], pts[0]));
        return exactla::rank(RatMatrix(std::move(diffs), pts.front().size()));
    };
    if (affine_dim(src) != affine_dim(dst)) return std::nullopt;
    std::vector<Vec> rows;
    for (const auto& p : src) {
        Vec r = p;
        r.emplace_back(1);
        rows.push_back(std::move(r));
    }
    const RatMatrix m(std::move(rows), ds + 1);
    AffineMap out;
    for (std::size_t j = 0; j < dd; ++j) {
        Vec rhs;
        for (const auto& q : dst) rhs.push_back(q[j]);
        auto sol = exactla::solve(m, rhs);
        if (!sol) return std::nullopt;
        out.translation.push_back(sol->back());
        sol->pop_back();
        out.linear.push_back(std::move(*sol));
    }
    return out;
}

}  // namespace bierkit::polytope
