#include "bierkit/defcone/fan.hpp"

#include "bierkit/exactla/error.hpp"
#include "bierkit/exactla/hpoint.hpp"
#include "bierkit/scomplex/bier.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <string>

namespace bierkit::defcone {

using exactla::RatMatrix;
using scomplex::elements;
using scomplex::popcount;

namespace {

std::vector<Vec> generators(const SimplicialFan& fan, SetMask cone) {
    std::vector<Vec> out;
    for (int i : elements(cone)) out.push_back(fan.rays[static_cast<std::size_t>(i)]);
    return out;
}

// Rows F with F * G = I and rows in the span of the generators G.
std::vector<Vec> coordinate_functionals(const std::vector<Vec>& gens) {
    const std::size_t k = gens.size();
    RatMatrix gram(k, k);
    for (std::size_t a = 0; a < k; ++a)
        for (std::size_t b = 0; b < k; ++b) gram(a, b) = exactla::dot(gens[a], gens[b]);
    std::vector<Vec> inv_cols;
    for (std::size_t j = 0; j < k; ++j) {
        Vec e(k);
        e[j] = 1;
        auto col = exactla::solve(gram, e);
        if (!col) throw RankDeficiencyError("cone generators are dependent");
        inv_cols.push_back(std::move(*col));
    }
    const std::size_t amb = gens.front().size();
    std::vector<Vec> f(k, Vec(amb));
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j)
            for (std::size_t c = 0; c < amb; ++c) f[i][c] += inv_cols[j][i] * gens[j][c];
    return f;
}

}  // namespace

std::size_t SimplicialFan::dim() const { return exactla::rank(RatMatrix(rays, rays.empty() ? 0 : rays.front().size())); }

SimplicialFan bier_fan(const scomplex::SimplicialComplex& k) {
    if (!k.is_proper() || !scomplex::is_maximal_volume(k))
        throw DomainError("bier_fan: K must be proper and satisfy the maximal-volume condition");
    const int n = k.n();
    SimplicialFan fan;
    fan.ground = n;
    const auto deltas = exactla::simplex_vertices(static_cast<std::size_t>(n));
    for (const auto& d : deltas) fan.rays.push_back(d.coords());
    for (const auto& d : deltas) fan.rays.push_back((-d).coords());
    for (int i = 0; i < 2 * n; ++i) fan.labels.push_back(scomplex::index_label(i, n));
    fan.cones = scomplex::bier_sphere(k).vertex_sets();
    return fan;
}

SimplicialFan make_fan(std::vector<Vec> rays, const std::vector<std::vector<int>>& cones) {
    if (rays.empty()) throw ValidationError("fan needs at least one ray");
    if (rays.size() > 64) throw DomainError("fan: at most 64 rays supported");
    for (const auto& r : rays)
        if (r.size() != rays.front().size()) throw ValidationError("fan rays have different coordinate counts");
    SimplicialFan fan;
    fan.rays = std::move(rays);
    for (std::size_t i = 0; i < fan.rays.size(); ++i) fan.labels.push_back(static_cast<int>(i + 1));
    for (const auto& c : cones) {
        SetMask m = 0;
        for (int i : c) {
            if (i < 0 || static_cast<std::size_t>(i) >= fan.rays.size())
                throw ValidationError("cone refers to ray " + std::to_string(i) + " which does not exist");
            m |= SetMask{1} << i;
        }
        fan.cones.push_back(m);
    }
    if (fan.cones.empty()) throw ValidationError("fan needs at least one cone");
    return fan;
}

FanCheck check_fan(const SimplicialFan& fan, std::uint64_t seed, int per_cone) {
    FanCheck out;
    const std::size_t d = fan.dim();
    std::vector<std::vector<Vec>> functionals(fan.cones.size());
    for (std::size_t c = 0; c < fan.cones.size(); ++c) {
        const auto gens = generators(fan, fan.cones[c]);
        if (gens.size() != d ||
            exactla::rank(RatMatrix(gens, gens.front().size())) != d) {
            out.simplicial = false;
            out.message = "cone " + std::to_string(c) + " is not a full-dimensional simplicial cone";
            return out;
        }
        functionals[c] = coordinate_functionals(gens);
    }
    try {
        ridge_pairs(fan);
    } catch (const ValidationError& e) {
        out.ridges_ok = false;
        out.message = e.what();
        return out;
    }
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> weight(1, 9);
    for (std::size_t a = 0; a < fan.cones.size(); ++a) {
        const auto gens = generators(fan, fan.cones[a]);
        for (int s = 0; s < per_cone; ++s) {
            Vec x(gens.front().size());
            for (const auto& g : gens) x = exactla::add(x, exactla::scale(g, Rational(weight(rng))));
            ++out.samples;
            for (std::size_t b = 0; b < fan.cones.size(); ++b) {
                if (b == a) continue;
                bool inside = true;
                for (const auto& f : functionals[b])
                    if (exactla::dot(f, x).sign() <= 0) {
                        inside = false;
                        break;
                    }
                if (inside) {
                    out.disjoint_ok = false;
                    out.message = "cones " + std::to_string(a) + " and " + std::to_string(b) + " overlap";
                    return out;
                }
            }
        }
    }
    return out;
}

std::vector<RidgePair> ridge_pairs(const SimplicialFan& fan) {
    std::map<SetMask, std::vector<std::size_t>> by_ridge;
    for (std::size_t c = 0; c < fan.cones.size(); ++c)
        for (int i : elements(fan.cones[c])) by_ridge[fan.cones[c] & ~(SetMask{1} << i)].push_back(c);
    std::vector<RidgePair> out;
    for (const auto& [ridge, cones] : by_ridge) {
        if (cones.size() != 2)
            throw ValidationError("pseudomanifold violation: a ridge lies in " + std::to_string(cones.size()) +
                                  " cones instead of 2");
        out.push_back({cones[0], cones[1], ridge});
    }
    std::sort(out.begin(), out.end(), [](const RidgePair& x, const RidgePair& y) {
        return x.cone_a != y.cone_a ? x.cone_a < y.cone_a : x.cone_b < y.cone_b;
    });
    return out;
}

Vec wall_dependence(SetMask r, SetMask r_prime, const std::vector<Vec>& rays) {
    const SetMask both = r | r_prime;
    if (popcount(r) != popcount(r_prime) || popcount(both) != popcount(r) + 1)
        throw DomainError("wall_dependence: cones must share all but one generator");
    const auto idx = elements(both);
    const std::size_t amb = rays.front().size();
    RatMatrix m(amb, idx.size());
    for (std::size_t j = 0; j < idx.size(); ++j)
        for (std::size_t c = 0; c < amb; ++c) m(c, j) = rays[static_cast<std::size_t>(idx[j])][c];
    const auto ns = exactla::nullspace(m);
    if (ns.size() != 1)
        throw RankDeficiencyError("wall_dependence: dependence space has dimension " + std::to_string(ns.size()));
    Vec alpha(rays.size());
    for (std::size_t j = 0; j < idx.size(); ++j) alpha[static_cast<std::size_t>(idx[j])] = ns[0][j];
    const auto swing = static_cast<std::size_t>(__builtin_ctzll(r & ~r_prime));
    const auto swing_prime = static_cast<std::size_t>(__builtin_ctzll(r_prime & ~r));
    const Rational s = alpha[swing] + alpha[swing_prime];
    if (s.is_zero()) throw DomainError("wall_dependence: degenerate wall, alpha(r) + alpha(r') = 0");
    return exactla::scale(alpha, Rational(2) / s);
}

}  // namespace bierkit::defcone
