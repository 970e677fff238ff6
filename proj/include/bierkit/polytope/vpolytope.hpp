#pragma once

#include "bierkit/exactla/hpoint.hpp"
#include "bierkit/exactla/matrix.hpp"
#include "bierkit/exactla/rational.hpp"

#include <cstddef>
#include <vector>

namespace bierkit::polytope {

using exactla::HPoint;
using exactla::Rational;
using exactla::Vec;

// Where the coordinates of a point list live.
struct Ambient {
    enum class Kind { Plain, H0 };
    Kind kind = Kind::Plain;
    std::size_t n = 0;  // coordinate count (the ground size for H0)

    static Ambient plain(std::size_t d) { return {Kind::Plain, d}; }
    static Ambient h0(std::size_t n) { return {Kind::H0, n}; }

    friend bool operator==(const Ambient&, const Ambient&) = default;
};

/**
 * A finite point list whose convex hull is the polytope. Points are kept
 * in the order given. Construction rejects an empty list, coordinate
 * counts that differ from the ambient, duplicate points (ValidationError)
 * and, for H0, points whose coordinates do not sum to zero (DomainError).
 */
class VPolytope {
public:
    VPolytope(std::vector<Vec> points, Ambient ambient);
    VPolytope(const std::vector<HPoint>& points);  // H0 ambient

    const std::vector<Vec>& points() const { return points_; }
    const Ambient& ambient() const { return ambient_; }
    std::size_t size() const { return points_.size(); }

private:
    std::vector<Vec> points_;
    Ambient ambient_;
};

/// 0/1 vectors of length n with exactly r ones, in lexicographically
/// decreasing order (ones first). Requires 1 <= r <= n-1.
VPolytope hypersimplex(int n, int r);

/// All distinct coordinate permutations of x.
VPolytope permutahedron(const Vec& x);

/// {delta_i} followed by {-delta_i} in H0, i = 1..n. Requires n >= 3.
VPolytope diplo_simplex(int n);

/**
 * Points delta_i / l_i followed by -alpha * delta_i / l_i with
 * alpha = (1 - nu) / nu. Weights must be positive and sum to 1,
 * 0 < nu < 1, and no subset of [n] may have weight exactly nu.
 */
VPolytope q_alpha(const std::vector<Rational>& weights, const Rational& nu);

VPolytope scaled(const VPolytope& p, const Rational& c);

// Every point projected orthogonally onto H0; duplicates merged.
VPolytope project_to_h0(const VPolytope& p);

/// Points of the list not in the convex hull of the others, decided by an
/// exact LP feasibility test each. Sorted lexicographically.
std::vector<Vec> extreme_points(const std::vector<Vec>& points);

/// Extreme points of {p + q}. Throws DomainError on an ambient mismatch.
VPolytope minkowski_sum(const VPolytope& p, const VPolytope& q);

// Same extreme point sets.
bool same_vertex_set(const VPolytope& a, const VPolytope& b);

}  // namespace bierkit::polytope
