#pragma once

#include "bierkit/exactla/matrix.hpp"

#include <cstddef>
#include <vector>

namespace bierkit::exactla {

/**
 * A point of the hyperplane H0 = {x in R^n : x_1 + ... + x_n = 0}.
 *
 * H0 is the rational model of R^n / R(1,...,1) used for every Bier-sphere
 * object: a regular simplex centered at the origin has rational vertices
 * here, while an isometric copy in R^(n-1) would need square roots.
 */
class HPoint {
public:
    // Throws DomainError unless the coordinates sum to zero.
    explicit HPoint(Vec coords);

    std::size_t ambient() const { return coords_.size(); }
    const Vec& coords() const { return coords_; }
    const Rational& operator[](std::size_t i) const { return coords_[i]; }

    HPoint operator-() const;
    HPoint scaled(const Rational& s) const;

    friend bool operator==(const HPoint&, const HPoint&) = default;

private:
    Vec coords_;
};

Rational dot(const HPoint& a, const HPoint& b);

// Orthogonal projection of R^n onto H0 (subtracts the coordinate mean).
HPoint project_to_h0(std::span<const Rational> x);

/// delta_i = e_i - (e_1 + ... + e_n) / n for i = 1..n. Requires n >= 2.
std::vector<HPoint> simplex_vertices(std::size_t n);

/**
 * Dual basis inside H0: given n-1 independent points u_1..u_{n-1} of H0,
 * returns v_1..v_{n-1} in H0 with <u_i, v_j> = [i == j].
 * Throws RankDeficiencyError if the u_i are dependent.
 */
std::vector<HPoint> dual_basis(const std::vector<HPoint>& us);

}  // namespace bierkit::exactla
