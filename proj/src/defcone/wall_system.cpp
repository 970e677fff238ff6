#include "bierkit/defcone/wall_system.hpp"

#include "bierkit/exactla/error.hpp"
#include "bierkit/exactla/hpoint.hpp"
#include "bierkit/exactla/parallel.hpp"
#include "bierkit/polytope/hull.hpp"
#include "bierkit/polytope/vpolytope.hpp"

#include <set>
#include <string>

namespace bierkit::defcone {

using exactla::RatMatrix;
using scomplex::FaceMask;
using scomplex::popcount;

CoarseningMap coarsen_to_diplo(const SimplicialFan& fan) {
    const int n = fan.ground;
    if (n < 4 || n % 2 != 0) throw DomainError("coarsen_to_diplo: needs a Bier fan on an even ground set, n >= 4");
    const int k = n / 2;
    const FaceMask full = scomplex::ground_mask(n);
    const auto hull = polytope::convex_hull(polytope::diplo_simplex(n));
    std::set<SetMask> facets;
    for (const auto& f : hull.facets) facets.insert(f.incidence);

    CoarseningMap out;
    for (std::size_t c = 0; c < fan.cones.size(); ++c) {
        const SetMask cone = fan.cones[c];
        const auto a = static_cast<FaceMask>(cone & full);
        const auto b = static_cast<FaceMask>(cone >> n);
        const FaceMask rest = full & ~(a | b);
        if ((a & b) != 0 || popcount(rest) != 1)
            throw ConsistencyError("coarsen_to_diplo: cone " + std::to_string(c) + " is not a Bier facet");
        FaceMask s = a, t = b;
        if (popcount(a) == k - 1)
            s |= rest;
        else if (popcount(b) == k - 1)
            t |= rest;
        else
            throw ConsistencyError("coarsen_to_diplo: cone " + std::to_string(c) + " has no side of size k-1");
        const SetMask coarse = SetMask{s} | (SetMask{t} << n);
        if (!facets.count(coarse) || (cone & ~coarse) != 0)
            throw ConsistencyError("coarsen_to_diplo: cone " + std::to_string(c) + " does not lie in facet (S,T)");
        out.st.emplace_back(s, t);
        out.coarse.push_back(coarse);
    }
    return out;
}

WallSystem assemble_wall_system(const SimplicialFan& fan, const std::optional<CoarseningMap>& coarsening) {
    if (coarsening && coarsening->coarse.size() != fan.cones.size())
        throw ValidationError("coarsening does not match the fan");
    const auto pairs = ridge_pairs(fan);
    std::vector<Vec> alphas(pairs.size());
    exactla::parallel_for(pairs.size(), [&](std::size_t i) {
        alphas[i] = wall_dependence(fan.cones[pairs[i].cone_a], fan.cones[pairs[i].cone_b], fan.rays);
    });
    WallSystem sys;
    sys.num_vars = fan.rays.size();
    std::set<Vec> seen_eq, seen_ineq;
    for (std::size_t i = 0; i < pairs.size(); ++i) {
        const auto& p = pairs[i];
        const bool same = coarsening && coarsening->coarse[p.cone_a] == coarsening->coarse[p.cone_b];
        if (same) {
            Vec row = exactla::primitive_integer_normalized(alphas[i]);
            if (seen_eq.insert(row).second) sys.equalities.push_back({std::move(row), p.cone_a, p.cone_b});
        } else {
            Vec row = exactla::primitive_integer(alphas[i]);
            if (seen_ineq.insert(row).second) sys.inequalities.push_back({std::move(row), p.cone_a, p.cone_b});
        }
    }
    return sys;
}

DeformationCheck is_deformation(const Vec& h, const WallSystem& system) {
    if (h.size() != system.num_vars)
        throw ValidationError("deforming vector has " + std::to_string(h.size()) + " entries, system has " +
                              std::to_string(system.num_vars) + " variables");
    DeformationCheck out;
    for (std::size_t i = 0; i < system.equalities.size(); ++i)
        if (!exactla::dot(system.equalities[i].coeffs, h).is_zero()) out.violated.push_back("equality " + std::to_string(i));
    for (std::size_t i = 0; i < system.inequalities.size(); ++i)
        if (exactla::dot(system.inequalities[i].coeffs, h).sign() < 0)
            out.violated.push_back("inequality " + std::to_string(i));
    out.ok = out.violated.empty();
    return out;
}

DefConeReport deformation_dims(const WallSystem& system, std::size_t lineality, const std::optional<Vec>& support) {
    DefConeReport rep;
    std::vector<Vec> rows;
    for (const auto& r : system.equalities) rows.push_back(r.coeffs);
    rep.witness = exactla::nullspace(RatMatrix(std::move(rows), system.num_vars));
    rep.lin_dim = rep.witness.size();
    rep.lineality = lineality;
    rep.equalities = system.equalities.size();
    rep.inequalities = system.inequalities.size();
    if (rep.lin_dim < lineality + 1)
        throw ConsistencyError("essential dimension below 1: the cone always contains the dilates of P");
    rep.essential_dim = rep.lin_dim - lineality;
    rep.indecomposable = rep.essential_dim == 1;

    if (!support) {
        rep.justification = "no support vector supplied: lin_dim is an upper bound on the dimension of the cone";
        return rep;
    }
    const auto check = is_deformation(*support, system);
    bool strict = check.ok;
    for (const auto& r : system.inequalities)
        if (exactla::dot(r.coeffs, *support).sign() <= 0) strict = false;
    rep.support_interior = strict;
    if (strict) {
        rep.justification = "support vector strictly interior: it satisfies all " + std::to_string(rep.equalities) +
                            " equalities and all " + std::to_string(rep.inequalities) +
                            " inequalities strictly, so the equality nullspace is the linear span of the cone";
    } else {
        rep.justification =
            "support vector not strictly interior: lin_dim is an upper bound on the dimension of the cone";
    }
    return rep;
}

Normalized normalize_translation(const Vec& h) {
    if (h.size() < 4 || h.size() % 2 != 0) throw ValidationError("normalize_translation: need 2n entries, n >= 2");
    const std::size_t n = h.size() / 2;
    Rational sx, sy;
    for (std::size_t i = 0; i < n; ++i) {
        sx += h[i];
        sy += h[n + i];
    }
    if (sx != sy) throw DomainError("normalize_translation: x_[n] != y_[n], the equality rows are violated");
    const auto deltas = exactla::simplex_vertices(n);
    const auto dual = exactla::dual_basis(std::vector<exactla::HPoint>(deltas.begin(), deltas.end() - 1));
    Vec v(n);
    for (std::size_t j = 0; j + 1 < n; ++j)
        v = exactla::add(v, exactla::scale(dual[j].coords(), (h[n + j] - h[j]) / Rational(2)));
    Normalized out{h, v};
    for (std::size_t i = 0; i < n; ++i) {
        const Rational shift = exactla::dot(deltas[i].coords(), v);
        out.h[i] += shift;
        out.h[n + i] -= shift;
        if (out.h[i] != out.h[n + i]) throw ConsistencyError("normalize_translation: x_i != y_i after translation");
    }
    return out;
}

Vec support_vector(const std::vector<Vec>& points, const std::vector<Vec>& rays) {
    if (points.empty()) throw ValidationError("support_vector: no points");
    Vec h;
    for (const auto& s : rays) {
        Rational best = exactla::dot(s, points.front());
        for (const auto& p : points) best = std::max(best, exactla::dot(s, p));
        h.push_back(best);
    }
    return h;
}

}  // namespace bierkit::defcone
