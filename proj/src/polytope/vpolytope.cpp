#include "bierkit/polytope/vpolytope.hpp"

#include "bierkit/exactla/error.hpp"
#include "bierkit/exactla/simplex_lp.hpp"
#include "bierkit/scomplex/threshold.hpp"

#include <algorithm>
#include <set>
#include <string>

namespace bierkit::polytope {

namespace {

std::vector<Vec> from_hpoints(const std::vector<HPoint>& pts) {
    std::vector<Vec> out;
    out.reserve(pts.size());
    for (const auto& p : pts) out.push_back(p.coords());
    return out;
}

Ambient ambient_of(const std::vector<HPoint>& pts) {
    return Ambient::h0(pts.empty() ? 0 : pts.front().ambient());
}

std::vector<Vec> dedupe_sorted(std::vector<Vec> pts) {
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    return pts;
}

// Is `target` a convex combination of `others`?
bool in_convex_hull(const std::vector<const Vec*>& others, const Vec& target) {
    exactla::LinearProgram lp;
    lp.num_vars = others.size();
    for (std::size_t c = 0; c < target.size(); ++c) {
        Vec row(lp.num_vars);
        for (std::size_t k = 0; k < others.size(); ++k) row[k] = (*others[k])[c];
        lp.eq_rows.push_back(std::move(row));
        lp.eq_rhs.push_back(target[c]);
    }
    lp.eq_rows.emplace_back(lp.num_vars, Rational(1));
    lp.eq_rhs.emplace_back(1);
    lp.objective.assign(lp.num_vars, Rational(0));
    return exactla::is_feasible(lp);
}

}  // namespace

VPolytope::VPolytope(std::vector<Vec> points, Ambient ambient) : points_(std::move(points)), ambient_(ambient) {
    if (points_.empty()) throw ValidationError("polytope needs at least one point");
    for (const auto& p : points_) {
        if (p.size() != ambient_.n)
            throw ValidationError("point has " + std::to_string(p.size()) + " coordinates, ambient has " +
                                  std::to_string(ambient_.n));
        if (ambient_.kind == Ambient::Kind::H0 && !exactla::sum(p).is_zero())
            throw DomainError("point coordinates must sum to zero in H0");
    }
    std::set<Vec> seen;
    for (std::size_t i = 0; i < points_.size(); ++i)
        if (!seen.insert(points_[i]).second) throw ValidationError("duplicate point at index " + std::to_string(i));
}

VPolytope::VPolytope(const std::vector<HPoint>& points) : VPolytope(from_hpoints(points), ambient_of(points)) {}

VPolytope hypersimplex(int n, int r) {
    if (n < 2 || r < 1 || r > n - 1)
        throw DomainError("hypersimplex(" + std::to_string(n) + "," + std::to_string(r) + "): need 1 <= r <= n-1");
    std::vector<int> bits(static_cast<std::size_t>(n), 0);
    std::fill(bits.begin(), bits.begin() + r, 1);
    std::vector<Vec> pts;
    do {
        Vec p;
        for (int b : bits) p.emplace_back(b);
        pts.push_back(std::move(p));
    } while (std::prev_permutation(bits.begin(), bits.end()));
    return VPolytope(std::move(pts), Ambient::plain(static_cast<std::size_t>(n)));
}

VPolytope permutahedron(const Vec& x) {
    Vec v = x;
    std::sort(v.begin(), v.end());
    std::vector<Vec> pts;
    do pts.push_back(v);
    while (std::next_permutation(v.begin(), v.end()));
    return VPolytope(std::move(pts), Ambient::plain(x.size()));
}

VPolytope diplo_simplex(int n) {
    if (n < 3) throw DomainError("diplo_simplex: need n >= 3");
    auto deltas = exactla::simplex_vertices(static_cast<std::size_t>(n));
    std::vector<HPoint> pts = deltas;
    for (const auto& d : deltas) pts.push_back(-d);
    return VPolytope(pts);
}

VPolytope q_alpha(const std::vector<Rational>& weights, const Rational& nu) {
    scomplex::validate_weights(weights, nu);
    if (weights.size() < 2) throw DomainError("q_alpha: need n >= 2");
    if (!scomplex::is_generic_threshold(weights, nu))
        throw DomainError("q_alpha: some subset has weight exactly nu; the threshold pair is not generic");
    const Rational alpha = (Rational(1) - nu) / nu;
    const auto deltas = exactla::simplex_vertices(weights.size());
    std::vector<HPoint> pts;
    for (std::size_t i = 0; i < deltas.size(); ++i) pts.push_back(deltas[i].scaled(weights[i].reciprocal()));
    for (std::size_t i = 0; i < deltas.size(); ++i) pts.push_back(deltas[i].scaled(-alpha / weights[i]));
    return VPolytope(pts);
}

VPolytope scaled(const VPolytope& p, const Rational& c) {
    if (c.is_zero()) return VPolytope({Vec(p.ambient().n, Rational(0))}, p.ambient());
    std::vector<Vec> pts;
    for (const auto& x : p.points()) pts.push_back(exactla::scale(x, c));
    return VPolytope(std::move(pts), p.ambient());
}

VPolytope project_to_h0(const VPolytope& p) {
    std::vector<Vec> pts;
    for (const auto& x : p.points()) pts.push_back(exactla::project_to_h0(x).coords());
    return VPolytope(dedupe_sorted(std::move(pts)), Ambient::h0(p.ambient().n));
}

std::vector<Vec> extreme_points(const std::vector<Vec>& points) {
    const auto pts = dedupe_sorted(points);
    std::vector<Vec> out;
    for (std::size_t i = 0; i < pts.size(); ++i) {
        std::vector<const Vec*> others;
        for (std::size_t j = 0; j < pts.size(); ++j)
            if (j != i) others.push_back(&pts[j]);
        if (others.empty() || !in_convex_hull(others, pts[i])) out.push_back(pts[i]);
    }
    return out;
}

VPolytope minkowski_sum(const VPolytope& p, const VPolytope& q) {
    if (!(p.ambient() == q.ambient())) throw DomainError("minkowski_sum: ambient spaces differ");
    std::vector<Vec> sums;
    sums.reserve(p.size() * q.size());
    for (const auto& a : p.points())
        for (const auto& b : q.points()) sums.push_back(exactla::add(a, b));
    return VPolytope(extreme_points(sums), p.ambient());
}

bool same_vertex_set(const VPolytope& a, const VPolytope& b) {
    return a.ambient() == b.ambient() && extreme_points(a.points()) == extreme_points(b.points());
}

}  // namespace bierkit::polytope
