#pragma once

#include "bierkit/exactla/matrix.hpp"
#include "bierkit/polytope/vpolytope.hpp"
#include "bierkit/scomplex/family.hpp"

#include <cstddef>
#include <span>
#include <vector>

namespace bierkit::polytope {

using scomplex::SetMask;

inline constexpr std::size_t kMaxHullPoints = 64;

// Supporting inequality <normal, x> <= offset. `normal` is a primitive
// integer vector lying in the direction space of the affine hull.
struct Facet {
    Vec normal;
    Rational offset;
    SetMask incidence = 0;  // input points with equality
};

struct Face {
    SetMask vertices = 0;  // extreme input points only
    int dim = -1;
};

struct HullResult {
    int dim = -1;  // intrinsic
    Ambient ambient;
    std::vector<Vec> points;  // the input, in order
    SetMask vertices = 0;     // extreme input points
    std::vector<Facet> facets;  // sorted by normal
    std::vector<Face> lattice;  // sorted by (dim, mask); includes the empty face and the top

    std::vector<int> vertex_indices() const;
    std::vector<int> facet_vertices(std::size_t f) const;  // incident extreme points
    std::vector<SetMask> facet_vertex_sets() const;
    std::vector<std::size_t> f_vector() const;  // f_0 .. f_{dim-1}
    std::size_t count(int face_dim) const;
};

/**
 * Exact convex hull by supporting-hyperplane enumeration.
 *
 * Works in an exact affine chart of the input's affine hull, so lower
 * dimensional inputs (H0 objects, hypersimplex slices) are fine. Every
 * affinely independent d-subset not already inside a known facet spans a
 * candidate hyperplane; it is kept when all points lie on one side.
 * The lattice is the intersection closure of the facets.
 *
 * Throws ValidationError on duplicate points or ragged input, DomainError
 * for more than kMaxHullPoints points, RankDeficiencyError when the points
 * are all equal.
 */
HullResult convex_hull(std::span<const Vec> points);  // plain ambient
HullResult convex_hull(const VPolytope& p);

/// Vertices normal / offset of the polar inside the affine hull. Requires
/// the origin in the relative interior; throws DomainError otherwise.
VPolytope polar_dual(const HullResult& h);

}  // namespace bierkit::polytope
