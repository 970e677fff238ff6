#include "bierkit/exactla/hpoint.hpp"

#include "bierkit/exactla/error.hpp"

#include <string>
#include <utility>

namespace bierkit::exactla {

HPoint::HPoint(Vec coords) : coords_(std::move(coords)) {
    if (!sum(coords_).is_zero()) throw DomainError("HPoint coordinates must sum to zero");
}

HPoint HPoint::operator-() const { return HPoint(scale(coords_, Rational(-1))); }

HPoint HPoint::scaled(const Rational& s) const { return HPoint(scale(coords_, s)); }

Rational dot(const HPoint& a, const HPoint& b) { return dot(a.coords(), b.coords()); }

HPoint project_to_h0(std::span<const Rational> x) {
    if (x.empty()) throw DomainError("project_to_h0: empty vector");
    const Rational mean = sum(x) / Rational(x.size());
    Vec out(x.begin(), x.end());
    for (auto& c : out) c -= mean;
    return HPoint(std::move(out));
}

std::vector<HPoint> simplex_vertices(std::size_t n) {
    if (n < 2) throw DomainError("simplex_vertices: need n >= 2, got " + std::to_string(n));
    const Rational off = Rational(-1) / Rational(n);
    std::vector<HPoint> out;
    out.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        Vec c(n, off);
        c[i] += 1;
        out.emplace_back(std::move(c));
    }
    return out;
}

std::vector<HPoint> dual_basis(const std::vector<HPoint>& us) {
    if (us.empty()) throw DomainError("dual_basis: empty input");
    const std::size_t n = us.front().ambient();
    if (us.size() + 1 != n)
        throw DomainError("dual_basis: expected " + std::to_string(n - 1) + " points in H0 of R^" + std::to_string(n) +
                          ", got " + std::to_string(us.size()));

    // Rows: u_1..u_{n-1} and the all-ones functional pinning v to H0.
    std::vector<Vec> rows;
    for (const auto& u : us) {
        if (u.ambient() != n) throw ValidationError("dual_basis: mixed ambient dimensions");
        rows.push_back(u.coords());
    }
    rows.emplace_back(n, Rational(1));
    const RatMatrix m(std::move(rows));
    if (rank(m) != n) throw RankDeficiencyError("dual_basis: input points are linearly dependent");

    std::vector<HPoint> out;
    out.reserve(n - 1);
    for (std::size_t j = 0; j + 1 < n; ++j) {
        Vec rhs(n, Rational(0));
        rhs[j] = 1;
        auto v = solve(m, rhs);
        if (!v) throw ConsistencyError("dual_basis: full-rank system without solution");
        out.emplace_back(std::move(*v));
    }
    return out;
}

}  // namespace bierkit::exactla
