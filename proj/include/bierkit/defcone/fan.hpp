#pragma once

#include "bierkit/exactla/matrix.hpp"
#include "bierkit/scomplex/complex.hpp"
#include "bierkit/scomplex/family.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace bierkit::defcone {

using exactla::Rational;
using exactla::Vec;
using scomplex::SetMask;

/**
 * Complete simplicial fan given by rays and maximal cones (ray index sets).
 *
 * Bier fans have 2n rays in H0 at vertex indices (delta_i at label i,
 * -delta_i at label -i) and `ground` = n. Fans read from files have
 * `ground` = 0 and labels 1..#rays.
 */
struct SimplicialFan {
    int ground = 0;
    std::vector<Vec> rays;
    std::vector<int> labels;
    std::vector<SetMask> cones;

    std::size_t dim() const;  // rank of the rays
};

/// Bier fan of K. K must be proper and satisfy the maximal-volume
/// condition; throws DomainError otherwise.
SimplicialFan bier_fan(const scomplex::SimplicialComplex& k);

// Fan from explicit rays and 0-based cone index lists. ValidationError on
// bad indices or ragged rays.
SimplicialFan make_fan(std::vector<Vec> rays, const std::vector<std::vector<int>>& cones);

struct FanCheck {
    bool simplicial = true;  // every cone: dim() independent generators
    bool ridges_ok = true;   // every ridge in exactly two cones
    bool disjoint_ok = true;  // no sampled interior point in two cones
    std::size_t samples = 0;
    std::string message;
    bool ok() const { return simplicial && ridges_ok && disjoint_ok; }
};

/// Structural checks plus an interior-disjointness spot check: for every
/// cone, `per_cone` random positive combinations of its generators are
/// tested for exact membership in the interior of every other cone.
FanCheck check_fan(const SimplicialFan& fan, std::uint64_t seed = 1, int per_cone = 2);

struct RidgePair {
    std::size_t cone_a = 0;  // cone_a < cone_b
    std::size_t cone_b = 0;
    SetMask ridge = 0;
};

/// Adjacent cone pairs, sorted by (cone_a, cone_b). Throws ValidationError
/// if some ridge lies in other than two cones.
std::vector<RidgePair> ridge_pairs(const SimplicialFan& fan);

/**
 * The linear dependence among the rays of R ∪ R', one entry per ray of the
 * fan (zero off R ∪ R'), scaled so that alpha(r) + alpha(r') = 2 where
 * {r} = R \ R' and {r'} = R' \ R. Throws RankDeficiencyError unless the
 * dependence is unique up to scale, DomainError if alpha(r) + alpha(r') = 0.
 */
Vec wall_dependence(SetMask r, SetMask r_prime, const std::vector<Vec>& rays);

}  // namespace bierkit::defcone
