#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "bierkit/exactla/error.hpp"
#include "bierkit/polytope/hull.hpp"
#include "bierkit/polytope/io.hpp"
#include "bierkit/polytope/realization.hpp"
#include "bierkit/polytope/vpolytope.hpp"
#include "bierkit/scomplex/threshold.hpp"
#include "hull_checks.hpp"
#include "oracles.hpp"

#include <algorithm>
#include <random>
#include <set>
#include <sstream>

using namespace bierkit;
using namespace bierkit::polytope;
using exactla::BigInt;

#ifndef BIERKIT_DATA_DIR
#error "BIERKIT_DATA_DIR must be defined"
#endif

namespace {

Rational q(long p, long d = 1) { return Rational(BigInt(p), BigInt(d)); }

Vec ints(std::initializer_list<long> xs) {
    Vec v;
    for (long x : xs) v.emplace_back(x);
    return v;
}

HullResult checked_hull(const VPolytope& p) {
    auto h = convex_hull(p);
    CHECK_MESSAGE(oracle::hull_soundness(h).empty(), oracle::hull_soundness(h));
    return h;
}

HullResult checked_hull(const std::vector<Vec>& p) { return checked_hull(VPolytope(p, Ambient::plain(p.front().size()))); }

std::vector<Vec> cube() {
    std::vector<Vec> pts;
    for (int m = 0; m < 8; ++m) pts.push_back(ints({m & 1, m >> 1 & 1, m >> 2 & 1}));
    return pts;
}

std::vector<Vec> centered_cube() {
    std::vector<Vec> pts;
    for (int m = 0; m < 8; ++m) pts.push_back(ints({m & 1 ? 1 : -1, m & 2 ? 1 : -1, m & 4 ? 1 : -1}));
    return pts;
}

// Facets of a 3-D point set by brute force over triples (cross products).
std::set<std::uint64_t> brute_facets_3d(const std::vector<Vec>& p) {
    std::set<std::uint64_t> out;
    const std::size_t m = p.size();
    for (std::size_t a = 0; a < m; ++a)
        for (std::size_t b = a + 1; b < m; ++b)
            for (std::size_t c = b + 1; c < m; ++c) {
                Vec u, v;
                for (int k = 0; k < 3; ++k) {
                    u.push_back(p[b][k] - p[a][k]);
                    v.push_back(p[c][k] - p[a][k]);
                }
                Vec n = {u[1] * v[2] - u[2] * v[1], u[2] * v[0] - u[0] * v[2], u[0] * v[1] - u[1] * v[0]};
                if (n[0].is_zero() && n[1].is_zero() && n[2].is_zero()) continue;
                bool pos = false, neg = false;
                std::uint64_t tight = 0;
                for (std::size_t i = 0; i < m; ++i) {
                    Rational s;
                    for (int k = 0; k < 3; ++k) s += n[k] * (p[i][k] - p[a][k]);
                    if (s.sign() > 0) pos = true;
                    if (s.sign() < 0) neg = true;
                    if (s.is_zero()) tight |= std::uint64_t{1} << i;
                }
                if (!(pos && neg)) out.insert(tight);
            }
    return out;
}

std::vector<Vec> hemi_rows(std::optional<int> digits = std::nullopt) {
    return read_points_csv_file(std::string(BIERKIT_DATA_DIR) + "/hemi12.csv", digits);
}

}  // namespace

TEST_CASE("hypersimplex") {
    auto h42 = hypersimplex(4, 2);
    CHECK(h42.size() == 6);
    auto simplex = hypersimplex(5, 1);
    CHECK(simplex.size() == 5);
    for (const auto& p : simplex.points()) CHECK(exactla::sum(p) == Rational(1));
    auto h63 = hypersimplex(6, 3);
    CHECK(h63.size() == 20);
    auto hull = checked_hull(h63);
    CHECK(hull.dim == 5);
    CHECK(hull.facets.size() == 12);
    CHECK_THROWS_AS(hypersimplex(4, 0), DomainError);
    CHECK_THROWS_AS(hypersimplex(4, 4), DomainError);
}

TEST_CASE("permutahedron") {
    auto hex = checked_hull(permutahedron(ints({1, 2, 3})));
    CHECK(hex.dim == 2);
    CHECK(scomplex::popcount(hex.vertices) == 6);
    CHECK(hex.facets.size() == 6);
    auto tri = permutahedron(ints({1, 1, 2}));
    CHECK(tri.size() == 3);
    CHECK(checked_hull(tri).facets.size() == 3);
    auto p4 = checked_hull(permutahedron(ints({1, 2, 3, 4})));
    CHECK(scomplex::popcount(p4.vertices) == 24);
    CHECK(p4.facets.size() == 14);
    CHECK(p4.f_vector() == std::vector<std::size_t>{24, 36, 14});
}

TEST_CASE("convex hull basics") {
    SUBCASE("octahedron") {
        auto h = checked_hull(hypersimplex(4, 2));
        CHECK(h.dim == 3);
        CHECK(h.facets.size() == 8);
        CHECK(h.count(1) == 12);
    }
    SUBCASE("cube") {
        auto h = checked_hull(cube());
        CHECK(h.facets.size() == 6);
        CHECK(h.count(1) == 12);
        CHECK(h.facets.front().normal == ints({-1, 0, 0}));
        CHECK(h.facets.front().offset == Rational(0));
    }
    SUBCASE("interior and boundary points are not vertices") {
        auto h = checked_hull({ints({0, 0}), ints({2, 0}), ints({2, 2}), ints({0, 2}), ints({1, 1}), ints({1, 0})});
        CHECK(h.vertex_indices() == std::vector<int>{0, 1, 2, 3});
        CHECK(h.facets.size() == 4);
        auto seg = checked_hull({ints({0, 0}), ints({2, 2}), ints({1, 1})});
        CHECK(seg.dim == 1);
        CHECK(seg.vertex_indices() == std::vector<int>{0, 1});
    }
    SUBCASE("lower-dimensional input keeps ambient normals") {
        auto h = checked_hull(VPolytope({ints({1, 0, 0}), ints({0, 1, 0}), ints({0, 0, 1})}, Ambient::plain(3)));
        CHECK(h.dim == 2);
        CHECK(h.facets.size() == 3);
        for (const auto& f : h.facets) CHECK(exactla::sum(f.normal).is_zero());
    }
    SUBCASE("errors") {
        CHECK_THROWS_AS(convex_hull(std::vector<Vec>{ints({1, 2}), ints({1, 2})}), ValidationError);
        CHECK_THROWS_AS(convex_hull(std::vector<Vec>{ints({1, 2})}), RankDeficiencyError);
        CHECK_THROWS_AS(convex_hull(std::vector<Vec>{ints({1, 2}), ints({1})}), ValidationError);
    }
}

TEST_CASE("hull facets agree with brute force in 3-D") {
    std::mt19937_64 rng(21);
    for (int trial = 0; trial < 40; ++trial) {
        std::set<Vec> pts;
        const std::size_t m = 5 + static_cast<std::size_t>(trial % 9);
        while (pts.size() < m) {
            // Small integer range forces coplanar and collinear degeneracies.
            Vec p;
            for (int k = 0; k < 3; ++k) p.push_back(oracle::random_rational(rng, -2, 2, trial % 3 + 1));
            pts.insert(p);
        }
        std::vector<Vec> list(pts.begin(), pts.end());
        if (oracle::affine_rank_of(list, (std::uint64_t{1} << list.size()) - 1) < 3) continue;
        auto h = checked_hull(list);
        std::set<std::uint64_t> got;
        for (const auto& f : h.facets) got.insert(f.incidence);
        CHECK(got == brute_facets_3d(list));
    }
}

TEST_CASE("polar duality") {
    auto cube_h = checked_hull(centered_cube());
    auto oct = polar_dual(cube_h);
    CHECK(oct.size() == 6);
    auto oct_h = checked_hull(oct);
    CHECK(oct_h.facets.size() == 8);
    // Involution on vertex sets.
    auto back = polar_dual(oct_h);
    std::set<Vec> a(back.points().begin(), back.points().end());
    const auto cc = centered_cube();
    std::set<Vec> b(cc.begin(), cc.end());
    CHECK(a == b);

    CHECK_THROWS_AS(polar_dual(checked_hull(cube())), DomainError);
    CHECK_THROWS_AS(polar_dual(checked_hull(hypersimplex(4, 2))), DomainError);

    auto om4 = checked_hull(polar_dual(checked_hull(diplo_simplex(4))));
    auto d42 = checked_hull(hypersimplex(4, 2));
    auto iso = lattices_isomorphic(om4, d42);
    REQUIRE(iso);
    std::vector<Vec> src, dst;
    for (std::size_t k = 0; k < iso->size(); ++k) {
        src.push_back(om4.points[static_cast<std::size_t>(om4.vertex_indices()[k])]);
        dst.push_back(d42.points[static_cast<std::size_t>((*iso)[k])]);
    }
    auto fit = affine_fit(src, dst);
    REQUIRE(fit);
    for (std::size_t k = 0; k < src.size(); ++k) CHECK(fit->apply(src[k]) == dst[k]);

    CHECK(polar_dual(checked_hull(diplo_simplex(5))).size() == 30);
}

TEST_CASE("Minkowski sums") {
    auto square = minkowski_sum(VPolytope({ints({0, 0}), ints({1, 0})}, Ambient::plain(2)),
                                VPolytope({ints({0, 0}), ints({0, 1})}, Ambient::plain(2)));
    CHECK(std::set<Vec>(square.points().begin(), square.points().end()) ==
          std::set<Vec>{ints({0, 0}), ints({1, 0}), ints({0, 1}), ints({1, 1})});

    auto sum = minkowski_sum(minkowski_sum(hypersimplex(4, 1), hypersimplex(4, 2)), hypersimplex(4, 3));
    CHECK(same_vertex_set(project_to_h0(sum), project_to_h0(permutahedron(ints({1, 2, 3, 4})))));
    CHECK(sum.size() == 24);

    auto tri = permutahedron(ints({1, 1, 2}));
    auto moved = minkowski_sum(tri, VPolytope({ints({5, -1, 0})}, Ambient::plain(3)));
    std::vector<Vec> expect;
    for (const auto& p : tri.points()) expect.push_back(exactla::add(p, ints({5, -1, 0})));
    CHECK(same_vertex_set(moved, VPolytope(expect, Ambient::plain(3))));

    CHECK_THROWS_AS(minkowski_sum(tri, diplo_simplex(3)), DomainError);
    CHECK_THROWS_AS(minkowski_sum(tri, hypersimplex(4, 1)), DomainError);
}

TEST_CASE("diplo-simplex") {
    auto hex = checked_hull(diplo_simplex(3));
    CHECK(hex.dim == 2);
    CHECK(hex.facets.size() == 6);
    CHECK_THROWS_AS(diplo_simplex(2), DomainError);

    auto h = checked_hull(diplo_simplex(4));
    CHECK(scomplex::popcount(h.vertices) == 8);
    REQUIRE(h.facets.size() == 6);
    std::set<std::uint64_t> expected;
    for (std::uint64_t s = 0; s < 16; ++s) {
        if (__builtin_popcountll(s) != 2) continue;
        const std::uint64_t t = 15 & ~s;
        expected.insert(s | t << 4);
    }
    std::set<std::uint64_t> got;
    for (const auto& f : h.facets) {
        got.insert(f.incidence);
        // normal proportional to 1_S - 1_T
        std::set<Rational> values(f.normal.begin(), f.normal.end());
        CHECK(values.size() == 2);
    }
    CHECK(got == expected);
    for (int n = 5; n <= 6; ++n) CHECK(scomplex::popcount(checked_hull(diplo_simplex(n)).vertices) == 2 * n);
}

TEST_CASE("q_alpha realizes Bier spheres of threshold complexes") {
    SUBCASE("uniform weights on three elements") {
        const std::vector<Rational> w(3, q(1, 3));
        auto qa = q_alpha(w, q(1, 2));
        CHECK(qa.points()[3] == exactla::scale(qa.points()[0], Rational(-1)));
        auto h = checked_hull(qa);
        auto k = scomplex::threshold_complex(w, q(1, 2));
        CHECK(k == scomplex::skeleton(3, 1));
        auto report = verify_polytopality(qa.points(), scomplex::bier_sphere(k));
        CHECK(report.pass);
        CHECK(report.labeling_kind == "direct");
        CHECK(h.facets.size() == 6);
    }
    SUBCASE("random generic pairs") {
        std::mt19937_64 rng(17);
        std::uniform_int_distribution<int> wd(1, 12);
        int done = 0;
        while (done < 12) {
            const int n = 3 + done % 3;
            std::vector<Rational> w;
            Rational total;
            for (int i = 0; i < n; ++i) {
                w.emplace_back(wd(rng));
                total += w.back();
            }
            for (auto& x : w) x /= total;
            const Rational nu(BigInt(wd(rng)), BigInt(13));
            if (!scomplex::is_generic_threshold(w, nu)) continue;
            const auto k = scomplex::threshold_complex(w, nu);
            if (k.is_full_simplex()) continue;
            const auto sphere = scomplex::bier_sphere(k);
            auto h = checked_hull(q_alpha(w, nu));
            std::vector<scomplex::SetMask> hull_sets;
            for (const auto& f : h.facets) hull_sets.push_back(f.incidence & h.vertices);
            CHECK(scomplex::sorted_family(hull_sets) == scomplex::sorted_family(sphere.vertex_sets()));
            CHECK(h.vertices == sphere.used_vertices());
            ++done;
        }
    }
    SUBCASE("non-generic pair is rejected") {
        CHECK_THROWS_AS(q_alpha({q(1, 4), q(1, 4), q(1, 2)}, q(1, 2)), DomainError);
        CHECK_THROWS_AS(q_alpha({q(1, 2), q(1, 3)}, q(1, 2)), DomainError);
    }
}

TEST_CASE("starshaped realization") {
    const auto k = scomplex::skeleton(4, 1);
    const auto r = starshaped_realization(k);
    CHECK(r.at(2) == -r.at(-2));
    const auto sphere = scomplex::bier_sphere(k);
    CHECK(sphere.facets().size() == 12);
    const auto omega = checked_hull(diplo_simplex(4));
    for (const auto& f : sphere.facets()) {
        std::vector<Vec> gens;
        for (int label : scomplex::signed_labels(f)) gens.push_back(r.at(label).coords());
        CHECK(oracle::rank(gens) == 3);
        const auto vs = scomplex::vertex_set(f, 4);
        CHECK(std::any_of(omega.facets.begin(), omega.facets.end(),
                          [&](const Facet& fa) { return (vs & ~fa.incidence) == 0; }));
    }
    CHECK_THROWS_AS(starshaped_realization(scomplex::skeleton(5, 1)), DomainError);
    CHECK_NOTHROW(starshaped_realization(scomplex::hemi_icosahedron()));
}

TEST_CASE("polytopality of the twelve-point matrix") {
    const auto sphere = scomplex::bier_sphere(scomplex::hemi_icosahedron());
    const auto rows = hemi_rows();
    REQUIRE(rows.size() == 12);
    CHECK(rows[0][0] == q(34083657, 10000000));

    auto h = checked_hull(rows);
    CHECK(h.dim == 5);
    CHECK(scomplex::popcount(h.vertices) == 12);
    CHECK(h.facets.size() == 60);
    CHECK(h.count(1) == 60);

    auto rep = verify_polytopality(rows, sphere);
    CHECK(rep.pass);
    CHECK(rep.labeling_kind == "direct");
    CHECK(rep.labeling == std::vector<int>{1, 2, 3, 4, 5, 6, -1, -2, -3, -4, -5, -6});

    auto iso = lattices_isomorphic(h, sphere);
    REQUIRE(iso);

    SUBCASE("five decimals lose the combinatorics") {
        auto r5 = verify_polytopality(hemi_rows(5), sphere);
        CHECK_FALSE(r5.pass);
        CHECK(r5.non_vertices.size() + r5.missing_facets.size() + r5.extra_facets.size() > 0);
        checked_hull(hemi_rows(5));
    }
    SUBCASE("row order does not matter") {
        auto shuffled = rows;
        std::reverse(shuffled.begin(), shuffled.end());
        auto r = verify_polytopality(shuffled, sphere);
        CHECK(r.pass);
        CHECK(r.labeling_kind == "isomorphism");
    }
    SUBCASE("wrong cardinality") {
        auto oct = hypersimplex(4, 2).points();
        auto r = verify_polytopality(oct, sphere);
        CHECK_FALSE(r.pass);
        CHECK(r.reason.rfind("vertex count mismatch", 0) == 0);
    }
    SUBCASE("wrong dimension") {
        std::vector<Vec> flat;
        for (auto row : rows) {
            row.back() = 0;
            flat.push_back(row);
        }
        auto r = verify_polytopality(flat, sphere);
        CHECK_FALSE(r.pass);
        CHECK(r.reason.rfind("dimension mismatch", 0) == 0);
    }
}

TEST_CASE("lattice isomorphism") {
    auto hex = checked_hull(permutahedron(ints({1, 2, 3})));
    std::vector<Vec> pent = {ints({0, 0}), ints({2, 0}), ints({3, 2}), ints({1, 3}), ints({-1, 2})};
    CHECK_FALSE(lattices_isomorphic(hex, checked_hull(pent)));
    auto d3 = checked_hull(diplo_simplex(3));
    CHECK(lattices_isomorphic(hex, d3));
}

TEST_CASE("CSV and JSON") {
    std::istringstream with_header("a,b\n1.5,-2\n\n0.25,3e1\n");
    auto rows = read_points_csv(with_header);
    CHECK(rows == std::vector<Vec>{{q(3, 2), q(-2)}, {q(1, 4), q(30)}});

    std::istringstream rounding("0.123455,1.999995\n");
    auto r = read_points_csv(rounding, 5);
    CHECK(r.front() == Vec{q(12346, 100000), q(2)});

    std::istringstream ragged("1,2\n3\n");
    CHECK_THROWS_AS(read_points_csv(ragged), ParseError);
    std::istringstream bad("1,2\n3,x\n");
    try {
        read_points_csv(bad);
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(std::string(e.what()).find("line 2, column 2") != std::string::npos);
    }
    std::istringstream empty("x,y\n");
    CHECK_THROWS_AS(read_points_csv(empty), ParseError);
    CHECK_THROWS_AS(read_points_csv_file("/nonexistent.csv"), ParseError);

    auto j = to_json(checked_hull({ints({0, 0}), ints({1, 0}), ints({0, 1})}));
    CHECK(j.dump() ==
          R"({"dim":2,"vertices":[["0","0"],["1","0"],["0","1"]],"facets":[)"
          R"({"normal":["-1","0"],"offset":"0","vertices":[0,2]},)"
          R"({"normal":["0","-1"],"offset":"0","vertices":[0,1]},)"
          R"({"normal":["1","1"],"offset":"1","vertices":[1,2]}]})");
}
