#pragma once

#include "bierkit/defcone/fan.hpp"
#include "bierkit/scomplex/complex.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace bierkit::defcone {

/**
 * Assignment of every cone of a Bier fan on [2k] to the facet (S, T) of the
 * diplo-simplex containing it. A facet (A, B) missing m goes to
 * (A + m, B) when |A| = k - 1 and to (A, B + m) otherwise.
 */
struct CoarseningMap {
    std::vector<std::pair<scomplex::FaceMask, scomplex::FaceMask>> st;  // per cone
    std::vector<SetMask> coarse;  // per cone: S ∪ barred(T) as vertex indices
};

/// Requires an even ground size n = 2k and a Bier fan with cones inside the
/// facets of the diplo-simplex; each assignment is checked against the
/// facet incidences of the exact hull. DomainError for odd n,
/// ConsistencyError if a cone fits no facet.
CoarseningMap coarsen_to_diplo(const SimplicialFan& fan);

struct WallRow {
    Vec coeffs;  // primitive integer, one per ray
    std::size_t cone_a = 0;
    std::size_t cone_b = 0;
};

struct WallSystem {
    std::size_t num_vars = 0;
    std::vector<WallRow> equalities;    // sum coeffs * h = 0
    std::vector<WallRow> inequalities;  // sum coeffs * h >= 0
};

/**
 * One row per ridge: an equality when both cones map to the same coarse
 * cone, an inequality otherwise (all inequalities without a coarsening).
 * Equalities are scaled to primitive integers with a positive leading
 * entry, inequalities by positive factors only; duplicates keep the first
 * ridge. Dependences are computed on worker_count() threads.
 */
WallSystem assemble_wall_system(const SimplicialFan& fan, const std::optional<CoarseningMap>& coarsening);

struct DefConeReport {
    std::size_t lin_dim = 0;
    std::size_t lineality = 0;
    std::size_t essential_dim = 0;
    bool indecomposable = false;
    std::vector<Vec> witness;  // nullspace basis of the equalities
    std::size_t equalities = 0;
    std::size_t inequalities = 0;
    bool support_interior = false;
    std::string justification;
};

/**
 * lin_dim = dim of the equality nullspace, essential_dim = lin_dim - d.
 * With a support vector, verifies it satisfies the equalities and every
 * inequality strictly, which makes lin_dim the dimension of the cone's
 * span. Throws ConsistencyError if essential_dim < 1.
 */
DefConeReport deformation_dims(const WallSystem& system, std::size_t lineality,
                               const std::optional<Vec>& support = std::nullopt);

struct DeformationCheck {
    bool ok = true;
    std::vector<std::string> violated;  // e.g. "equality 3", "inequality 0"
};

DeformationCheck is_deformation(const Vec& h, const WallSystem& system);

struct Normalized {
    Vec h;            // x'_i = y'_i
    Vec translation;  // v in H0
};

/// Translate of the polytope given by h = (x, y) in which x_i = y_i for all
/// i. Requires x_1 + ... + x_n = y_1 + ... + y_n (DomainError otherwise).
Normalized normalize_translation(const Vec& h);

/// h_s = max over points p of <s, p>.
Vec support_vector(const std::vector<Vec>& points, const std::vector<Vec>& rays);

}  // namespace bierkit::defcone
