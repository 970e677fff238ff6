#pragma once

#include "bierkit/polytope/hull.hpp"
#include "bierkit/scomplex/bier.hpp"
#include "bierkit/scomplex/complex.hpp"

#include <optional>
#include <string>
#include <vector>

namespace bierkit::polytope {

// Signed label -> point: i -> delta_i, -i -> -delta_i.
class RealizationMap {
public:
    explicit RealizationMap(int n);

    int n() const { return n_; }
    const HPoint& at(int label) const;
    // Points in vertex index order (labels 1..n, then -1..-n).
    const std::vector<HPoint>& points() const { return points_; }

private:
    int n_;
    std::vector<HPoint> points_;
};

/// Canonical realization of Bier(K) for K satisfying the maximal-volume
/// condition. Throws DomainError for any other K.
RealizationMap starshaped_realization(const scomplex::SimplicialComplex& k);

struct VerificationReport {
    bool pass = false;
    std::string reason;  // empty on PASS
    int hull_dim = -1;
    std::size_t hull_vertices = 0;
    std::size_t hull_facets = 0;
    std::size_t hull_edges = 0;
    std::string labeling_kind;  // "direct", "isomorphism" or empty
    std::vector<int> labeling;  // signed label of each input row
    std::vector<int> non_vertices;  // input rows that are not extreme
    // Under the direct labeling, as signed-label lists.
    std::vector<std::vector<int>> missing_facets;  // in the sphere, not the hull
    std::vector<std::vector<int>> extra_facets;    // in the hull, not the sphere
};

/**
 * Decides whether the points realize the sphere as a polytope boundary.
 *
 * PASS iff every point is a vertex and the hull's facet family equals the
 * sphere's, first tried with row r labeled by the r-th used vertex of the
 * sphere (labels 1..n, then -1..-n), then under any isomorphism. Count or
 * dimension mismatches and degenerate hulls are reported as FAIL.
 */
VerificationReport verify_polytopality(const std::vector<Vec>& points, const scomplex::BierSphere& sphere);

/// Bijection between vertex sets carrying facets onto facets: entry k is
/// the image of the k-th vertex of `a` (ascending input order), given as
/// an input index of `b` or a vertex index of the sphere.
std::optional<std::vector<int>> lattices_isomorphic(const HullResult& a, const HullResult& b);
std::optional<std::vector<int>> lattices_isomorphic(const HullResult& a, const scomplex::BierSphere& b);

struct AffineMap {
    std::vector<Vec> linear;  // dst dim x src dim
    Vec translation;
    Vec apply(const Vec& x) const;
};

/// Affine map with A src_i + t = dst_i for every i that is injective on the
/// affine hull of src (both affine hulls have the same dimension), or
/// nullopt.
std::optional<AffineMap> affine_fit(const std::vector<Vec>& src, const std::vector<Vec>& dst);

}  // namespace bierkit::polytope
