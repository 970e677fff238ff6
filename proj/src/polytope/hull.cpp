#include "bierkit/polytope/hull.hpp"

#include "bierkit/exactla/error.hpp"

#include <algorithm>
#include <set>
#include <string>

namespace bierkit::polytope {

using exactla::BigInt;
using exactla::RatMatrix;
using scomplex::elements;
using scomplex::popcount;

namespace {

using IntVec = std::vector<BigInt>;

// Determinant by fraction-free elimination; destroys `a`.
BigInt det(std::vector<IntVec>& a) {
    const std::size_t n = a.size();
    if (n == 0) return 1;
    int sign = 1;
    BigInt prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        std::size_t p = k;
        while (p < n && a[p][k] == 0) ++p;
        if (p == n) return 0;
        if (p != k) {
            std::swap(a[p], a[k]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                a[i][j] = a[i][j] * a[k][k] - a[i][k] * a[k][j];
                mpz_divexact(a[i][j].get_mpz_t(), a[i][j].get_mpz_t(), prev.get_mpz_t());
            }
        }
        prev = a[k][k];
    }
    return sign * a[n - 1][n - 1];
}

// Coordinates of the input in the pivot columns of its difference space.
struct Chart {
    std::size_t dim = 0;
    std::vector<std::size_t> pivots;
    std::vector<Vec> basis;  // echelon rows spanning the direction space
    std::vector<IntVec> coords;  // chart points scaled to integers
    std::vector<Vec> rational_coords;
};

Chart make_chart(std::span<const Vec> points) {
    Chart c;
    const std::size_t amb = points.front().size();
    std::vector<Vec> diffs;
    for (std::size_t i = 1; i < points.size(); ++i) diffs.push_back(exactla::sub(points[i], points[0]));
    const auto e = exactla::echelon(RatMatrix(std::move(diffs), amb));
    c.dim = e.rank();
    c.pivots = e.pivot_cols;
    for (const auto& row : e.rows) {
        Vec r;
        for (const auto& x : row) r.emplace_back(x);
        c.basis.push_back(std::move(r));
    }
    BigInt lcm = 1;
    for (const auto& p : points) {
        Vec q;
        for (auto col : c.pivots) {
            q.push_back(p[col]);
            mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), p[col].denominator().get_mpz_t());
        }
        c.rational_coords.push_back(std::move(q));
    }
    for (const auto& q : c.rational_coords) {
        IntVec v;
        for (const auto& x : q) v.push_back(x.numerator() * (lcm / x.denominator()));
        c.coords.push_back(std::move(v));
    }
    return c;
}

int affine_rank(const Chart& c, SetMask m) {
    if (m == 0) return -1;
    const auto idx = elements(m);
    std::vector<Vec> diffs;
    for (std::size_t k = 1; k < idx.size(); ++k)
        diffs.push_back(exactla::sub(c.rational_coords[static_cast<std::size_t>(idx[k])],
                                     c.rational_coords[static_cast<std::size_t>(idx[0])]));
    if (diffs.empty()) return 0;
    return static_cast<int>(exactla::rank(RatMatrix(std::move(diffs), c.dim)));
}

// Ambient vector N in the direction space with <N, v> = sum_j a_j v[pivot_j].
Vec ambient_normal(const Chart& c, const IntVec& a, std::size_t amb) {
    if (c.dim == amb) {
        Vec n;
        for (const auto& x : a) n.emplace_back(x);
        return exactla::primitive_integer(n);
    }
    const std::size_t d = c.dim;
    RatMatrix gram(d, d);
    Vec rhs(d);
    for (std::size_t k = 0; k < d; ++k) {
        for (std::size_t l = 0; l < d; ++l) gram(k, l) = exactla::dot(c.basis[k], c.basis[l]);
        for (std::size_t j = 0; j < d; ++j) rhs[k] += Rational(a[j]) * c.basis[k][c.pivots[j]];
    }
    const auto g = exactla::solve(gram, rhs);
    if (!g) throw ConsistencyError("Gram matrix of an echelon basis is invertible");
    Vec n(amb);
    for (std::size_t k = 0; k < d; ++k)
        for (std::size_t col = 0; col < amb; ++col) n[col] += (*g)[k] * c.basis[k][col];
    return exactla::primitive_integer(n);
}

}  // namespace

std::vector<int> HullResult::vertex_indices() const { return elements(vertices); }

std::vector<int> HullResult::facet_vertices(std::size_t f) const { return elements(facets[f].incidence & vertices); }

std::vector<SetMask> HullResult::facet_vertex_sets() const {
    std::vector<SetMask> out;
    for (const auto& f : facets) out.push_back(f.incidence & vertices);
    return out;
}

std::size_t HullResult::count(int face_dim) const {
    return static_cast<std::size_t>(
        std::count_if(lattice.begin(), lattice.end(), [&](const Face& f) { return f.dim == face_dim; }));
}

std::vector<std::size_t> HullResult::f_vector() const {
    std::vector<std::size_t> out;
    for (int k = 0; k < dim; ++k) out.push_back(count(k));
    return out;
}

HullResult convex_hull(std::span<const Vec> points) {
    if (points.empty()) throw ValidationError("convex_hull: no points");
    const std::size_t amb = points.front().size();
    for (const auto& p : points)
        if (p.size() != amb) throw ValidationError("convex_hull: points have different coordinate counts");
    return convex_hull(VPolytope(std::vector<Vec>(points.begin(), points.end()), Ambient::plain(amb)));
}

HullResult convex_hull(const VPolytope& poly) {
    const auto& points = poly.points();
    const std::size_t m = points.size();
    if (m > kMaxHullPoints)
        throw DomainError("convex_hull: at most " + std::to_string(kMaxHullPoints) + " points supported");
    const std::size_t amb = poly.ambient().n;
    const Chart chart = make_chart(points);
    const std::size_t d = chart.dim;
    if (d == 0) throw RankDeficiencyError("convex_hull: points span no line");

    HullResult h;
    h.dim = static_cast<int>(d);
    h.ambient = poly.ambient();
    h.points = points;

    struct Raw {
        IntVec normal;
        SetMask incidence;
    };
    std::vector<Raw> found;
    std::vector<std::size_t> idx(d);
    for (std::size_t i = 0; i < d; ++i) idx[i] = i;
    std::vector<IntVec> minor;
    for (;;) {
        SetMask mask = 0;
        for (auto i : idx) mask |= SetMask{1} << i;
        const bool known = std::any_of(found.begin(), found.end(),
                                       [&](const Raw& r) { return (mask & ~r.incidence) == 0; });
        if (!known) {
            // Cofactor normal of the hyperplane through the chosen points.
            const auto& base = chart.coords[idx[0]];
            IntVec a(d);
            bool nonzero = false;
            for (std::size_t j = 0; j < d; ++j) {
                minor.assign(d - 1, IntVec(d - 1));
                for (std::size_t r = 1; r < d; ++r) {
                    const auto& q = chart.coords[idx[r]];
                    for (std::size_t col = 0, out = 0; col < d; ++col) {
                        if (col == j) continue;
                        minor[r - 1][out++] = q[col] - base[col];
                    }
                }
                a[j] = det(minor);
                if (j % 2 == 1) a[j] = -a[j];
                if (a[j] != 0) nonzero = true;
            }
            if (nonzero) {
                BigInt b = 0;
                for (std::size_t j = 0; j < d; ++j) b += a[j] * base[j];
                bool pos = false, neg = false;
                SetMask tight = 0;
                for (std::size_t k = 0; k < m && !(pos && neg); ++k) {
                    BigInt v = -b;
                    for (std::size_t j = 0; j < d; ++j) v += a[j] * chart.coords[k][j];
                    const int s = sgn(v);
                    if (s > 0) pos = true;
                    if (s < 0) neg = true;
                    if (s == 0) tight |= SetMask{1} << k;
                }
                if (!(pos && neg)) {
                    if (pos)
                        for (auto& x : a) x = -x;
                    found.push_back({std::move(a), tight});
                }
            }
        }
        // Next d-subset in lexicographic order.
        std::size_t i = d;
        while (i > 0 && idx[i - 1] == m - d + i - 1) --i;
        if (i == 0) break;
        ++idx[i - 1];
        for (std::size_t j = i; j < d; ++j) idx[j] = idx[j - 1] + 1;
    }

    for (const auto& r : found) {
        Facet f;
        f.normal = ambient_normal(chart, r.normal, amb);
        f.offset = exactla::dot(f.normal, points[static_cast<std::size_t>(__builtin_ctzll(r.incidence))]);
        f.incidence = r.incidence;
        h.facets.push_back(std::move(f));
    }
    std::sort(h.facets.begin(), h.facets.end(), [](const Facet& x, const Facet& y) { return x.normal < y.normal; });

    for (std::size_t k = 0; k < m; ++k) {
        const SetMask bit = SetMask{1} << k;
        SetMask meet = ~SetMask{0};
        bool on_boundary = false;
        for (const auto& f : h.facets)
            if (f.incidence & bit) {
                meet &= f.incidence;
                on_boundary = true;
            }
        if (on_boundary && meet == bit) h.vertices |= bit;
    }

    std::set<SetMask> faces;
    std::vector<SetMask> work;
    auto add = [&](SetMask f) {
        if (faces.insert(f).second) work.push_back(f);
    };
    add(h.vertices);
    add(0);
    for (const auto& f : h.facets) add(f.incidence & h.vertices);
    while (!work.empty()) {
        const SetMask f = work.back();
        work.pop_back();
        for (const auto& g : h.facets) add(f & g.incidence);
    }
    for (auto f : faces) h.lattice.push_back({f, affine_rank(chart, f)});
    std::sort(h.lattice.begin(), h.lattice.end(), [](const Face& x, const Face& y) {
        return x.dim != y.dim ? x.dim < y.dim : x.vertices < y.vertices;
    });
    return h;
}

VPolytope polar_dual(const HullResult& h) {
    const auto& p0 = h.points.front();
    const std::size_t amb = p0.size();
    // The origin must lie in the affine hull: p0 in the direction space.
    std::vector<Vec> diffs;
    for (std::size_t i = 1; i < h.points.size(); ++i) diffs.push_back(exactla::sub(h.points[i], p0));
    if (!exactla::in_row_space(RatMatrix(std::move(diffs), amb), p0))
        throw DomainError("polar_dual: origin is not in the affine hull");
    std::vector<Vec> pts;
    for (const auto& f : h.facets) {
        if (f.offset.sign() <= 0) throw DomainError("polar_dual: origin is not in the relative interior");
        pts.push_back(exactla::scale(f.normal, f.offset.reciprocal()));
    }
    return VPolytope(std::move(pts), h.ambient);
}

}  // namespace bierkit::polytope
