#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "bierkit/exactla/error.hpp"
#include "bierkit/exactla/hpoint.hpp"
#include "bierkit/exactla/matrix.hpp"
#include "bierkit/exactla/rational.hpp"
#include "bierkit/exactla/simplex_lp.hpp"
#include "oracles.hpp"

#include <random>
#include <string>

using namespace bierkit;
using namespace bierkit::exactla;

namespace {

Rational q(long p, long d = 1) { return Rational(BigInt(p), BigInt(d)); }

bool canonical(const Rational& r) {
    BigInt g;
    BigInt num = r.numerator();
    mpz_gcd(g.get_mpz_t(), num.get_mpz_t(), r.denominator().get_mpz_t());
    return r.denominator() > 0 && (r.is_zero() ? r.denominator() == 1 : g == 1);
}

RatMatrix random_matrix(std::mt19937_64& rng, std::size_t rows, std::size_t cols, bool low_rank) {
    std::vector<Vec> m;
    for (std::size_t i = 0; i < rows; ++i) {
        Vec r;
        for (std::size_t j = 0; j < cols; ++j) r.push_back(oracle::random_rational(rng, -4, 4, 3));
        m.push_back(std::move(r));
    }
    if (low_rank && rows >= 3) {
        // Force dependencies: last row = combination of the first two.
        m[rows - 1] = add(scale(m[0], q(2, 3)), scale(m[1], q(-5)));
    }
    return RatMatrix(std::move(m));
}

}  // namespace

TEST_CASE("parse_decimal reads literals exactly") {
    CHECK(parse_decimal("3.4083657") == q(34083657, 10000000));
    CHECK(parse_decimal("0") == q(0));
    CHECK(parse_decimal("0").denominator() == 1);
    CHECK(parse_decimal("-0.5413665") == q(-5413665, 10000000));
    CHECK(parse_decimal("+12") == q(12));
    CHECK(parse_decimal("1.5e2") == q(150));
    CHECK(parse_decimal("-25E-3") == q(-1, 40));
    CHECK(parse_decimal(".5") == q(1, 2));
    CHECK(parse_decimal("7.") == q(7));
}

TEST_CASE("parse_decimal reports the offending position") {
    auto message = [](const char* s) {
        try {
            parse_decimal(s);
        } catch (const ParseError& e) {
            return std::string(e.what());
        }
        return std::string("no error");
    };
    CHECK(message("1.2x").find("position 3") != std::string::npos);
    CHECK(message("").find("position 0") != std::string::npos);
    CHECK(message("--1").find("position 1") != std::string::npos);
    CHECK(message("1e").find("position 2") != std::string::npos);
    CHECK(message("1.2.3").find("position 3") != std::string::npos);
}

TEST_CASE("parse_rational accepts fractions") {
    CHECK(parse_rational("-6/4") == q(-3, 2));
    CHECK(parse_rational("2.25") == q(9, 4));
    CHECK_THROWS_AS(parse_rational("1/0"), DomainError);
    CHECK_THROWS_AS(parse_rational("1/-2"), ParseError);
}

TEST_CASE("round_decimal_string rounds half away from zero") {
    CHECK(round_decimal_string("3.4083657", 5) == "3.40837");
    CHECK(round_decimal_string("-2.256866", 5) == "-2.25687");
    CHECK(round_decimal_string("1.200048", 5) == "1.20005");
    CHECK(round_decimal_string("-0.000004", 5) == "0.00000");
    CHECK(round_decimal_string("-0.000005", 5) == "-0.00001");
    CHECK(round_decimal_string("2", 3) == "2.000");
    CHECK(round_decimal_string("1.5e-1", 0) == "0");
    CHECK(round_decimal_string("9.99996", 4) == "10.0000");
}

TEST_CASE("rational values stay canonical under arithmetic") {
    std::mt19937_64 rng(11);
    for (int i = 0; i < 500; ++i) {
        const Rational a = oracle::random_rational(rng, -50, 50, 40);
        const Rational b = oracle::random_rational(rng, -50, 50, 40);
        CHECK(canonical(a + b));
        CHECK(canonical(a - b));
        CHECK(canonical(a * b));
        if (!b.is_zero()) CHECK(canonical(a / b));
    }
    CHECK_THROWS_AS(q(1) / q(0), DomainError);
}

TEST_CASE("nullspace examples") {
    CHECK(nullspace(RatMatrix({{q(1), q(0)}, {q(0), q(1)}})).empty());

    const auto ns = nullspace(RatMatrix({{q(1), q(1)}}));
    REQUIRE(ns.size() == 1);
    CHECK(ns[0] == Vec{q(1), q(-1)});

    // Content-1 integer scaling.
    const auto ns2 = nullspace(RatMatrix({{q(1, 2), q(1, 3), q(0)}}));
    REQUIRE(ns2.size() == 2);
    CHECK(ns2[0] == Vec{q(2), q(-3), q(0)});
    CHECK(ns2[1] == Vec{q(0), q(0), q(1)});
}

TEST_CASE("nullspace and rank agree with an independent Gauss-Jordan oracle") {
    std::mt19937_64 rng(2024);
    for (int trial = 0; trial < 200; ++trial) {
        std::uniform_int_distribution<int> dim(1, 6);
        const auto rows = static_cast<std::size_t>(dim(rng));
        const auto cols = static_cast<std::size_t>(dim(rng));
        const RatMatrix m = random_matrix(rng, rows, cols, trial % 2 == 0);
        const auto basis = nullspace(m);
        const std::size_t r = rank(m);
        CHECK(r == oracle::rank(m.row_list()));
        CHECK(r + basis.size() == cols);
        for (const auto& b : basis) {
            CHECK(is_zero(m.apply(b)));
            for (const auto& x : b) CHECK(x.is_integer());
        }
        if (!basis.empty()) CHECK(oracle::rank(basis) == basis.size());
        CHECK(nullspace(m) == basis);  // deterministic
    }
}

TEST_CASE("solve finds a solution or reports inconsistency") {
    const RatMatrix m({{q(1), q(2)}, {q(2), q(4)}});
    CHECK_FALSE(solve(m, Vec{q(1), q(3)}).has_value());
    const auto x = solve(m, Vec{q(1), q(2)});
    REQUIRE(x.has_value());
    CHECK(m.apply(*x) == Vec{q(1), q(2)});
    CHECK(in_row_space(m, Vec{q(-3), q(-6)}));
    CHECK_FALSE(in_row_space(m, Vec{q(0), q(1)}));
}

TEST_CASE("simplex_vertices") {
    const auto d3 = simplex_vertices(3);
    REQUIRE(d3.size() == 3);
    CHECK(d3[0].coords() == Vec{q(2, 3), q(-1, 3), q(-1, 3)});
    CHECK(d3[1].coords() == Vec{q(-1, 3), q(2, 3), q(-1, 3)});
    const auto d2 = simplex_vertices(2);
    CHECK(d2[0].coords() == Vec{q(1, 2), q(-1, 2)});
    CHECK(d2[1].coords() == Vec{q(-1, 2), q(1, 2)});
    CHECK_THROWS_AS(simplex_vertices(1), DomainError);

    for (std::size_t n = 2; n <= 9; ++n) {
        const auto d = simplex_vertices(n);
        Vec total(n, q(0));
        for (const auto& p : d) total = add(total, p.coords());
        CHECK(is_zero(total));
        const Rational self = dot(d[0], d[0]);
        const Rational cross = dot(d[0], d[1]);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) CHECK(dot(d[i], d[j]) == (i == j ? self : cross));
    }
}

TEST_CASE("HPoint rejects points off H0") {
    CHECK_THROWS_AS(HPoint(Vec{q(1), q(0)}), DomainError);
    CHECK(project_to_h0(Vec{q(1), q(2), q(3)}).coords() == Vec{q(-1), q(0), q(1)});
}

TEST_CASE("dual_basis pairs exactly") {
    const auto v = dual_basis({HPoint(Vec{q(1, 2), q(-1, 2)})});
    REQUIRE(v.size() == 1);
    CHECK(v[0].coords() == Vec{q(1), q(-1)});

    for (std::size_t n = 3; n <= 7; ++n) {
        auto d = simplex_vertices(n);
        d.pop_back();
        const auto dual = dual_basis(d);
        for (std::size_t i = 0; i + 1 < n; ++i)
            for (std::size_t j = 0; j + 1 < n; ++j) CHECK(dot(d[i], dual[j]) == Rational(i == j ? 1 : 0));
        // Pairing is symmetric, so the dual of the dual pairs with the dual.
        const auto back = dual_basis(dual);
        for (std::size_t i = 0; i + 1 < n; ++i)
            for (std::size_t j = 0; j + 1 < n; ++j) CHECK(dot(back[i], dual[j]) == Rational(i == j ? 1 : 0));
        CHECK(back == d);
        CHECK(dual_basis(d) == dual);
    }

    const HPoint a(Vec{q(1), q(-1), q(0)});
    CHECK_THROWS_AS(dual_basis({a, a.scaled(q(2))}), RankDeficiencyError);
}

TEST_CASE("simplex LP: textbook instance with certificate") {
    // max 3x + 5y  s.t. x <= 4, 2y <= 12, 3x + 2y <= 18  ->  36 at (2, 6).
    LinearProgram lp;
    lp.num_vars = 2;
    lp.le_rows = {{q(1), q(0)}, {q(0), q(2)}, {q(3), q(2)}};
    lp.le_rhs = {q(4), q(12), q(18)};
    lp.objective = {q(3), q(5)};
    const auto sol = solve_lp(lp);
    REQUIRE(sol.status == LpStatus::Optimal);
    CHECK(sol.value == q(36));
    CHECK(sol.x == Vec{q(2), q(6)});
    CHECK(certifies_optimality(lp, sol));
}

TEST_CASE("simplex LP: equality rows, negative rhs, infeasible and unbounded") {
    LinearProgram lp;
    lp.num_vars = 2;
    lp.eq_rows = {{q(1), q(1)}};
    lp.eq_rhs = {q(1)};
    lp.le_rows = {{q(-1), q(0)}};  // x >= 1/4
    lp.le_rhs = {q(-1, 4)};
    lp.objective = {q(0), q(1)};
    auto sol = solve_lp(lp);
    REQUIRE(sol.status == LpStatus::Optimal);
    CHECK(sol.value == q(3, 4));
    CHECK(certifies_optimality(lp, sol));

    lp.le_rhs = {q(-2)};  // x >= 2 with x + y = 1
    CHECK(solve_lp(lp).status == LpStatus::Infeasible);
    CHECK_FALSE(is_feasible(lp));

    LinearProgram unb;
    unb.num_vars = 2;
    unb.le_rows = {{q(1), q(-1)}};
    unb.le_rhs = {q(1)};
    unb.objective = {q(1), q(0)};
    CHECK(solve_lp(unb).status == LpStatus::Unbounded);
}

TEST_CASE("simplex LP matches brute-force vertex enumeration on random boxed LPs") {
    // Oracle: the optimum of a bounded 2-variable LP sits at an intersection
    // of two constraint lines; enumerate them all.
    std::mt19937_64 rng(77);
    for (int trial = 0; trial < 60; ++trial) {
        LinearProgram lp;
        lp.num_vars = 2;
        std::vector<Vec> rows = {{q(1), q(0)}, {q(0), q(1)}};  // box x, y <= 5
        Vec rhs = {q(5), q(5)};
        for (int k = 0; k < 4; ++k) {
            rows.push_back({oracle::random_rational(rng, -5, 5, 3), oracle::random_rational(rng, -5, 5, 3)});
            rhs.push_back(oracle::random_rational(rng, -2, 8, 2));
        }
        lp.le_rows = rows;
        lp.le_rhs = rhs;
        lp.objective = {oracle::random_rational(rng, -4, 4, 2), oracle::random_rational(rng, -4, 4, 2)};

        // All constraints as a.x <= b, including -x <= 0, -y <= 0.
        auto all_rows = rows;
        auto all_rhs = rhs;
        all_rows.push_back({q(-1), q(0)});
        all_rhs.push_back(q(0));
        all_rows.push_back({q(0), q(-1)});
        all_rhs.push_back(q(0));
        bool any = false;
        Rational best;
        for (std::size_t i = 0; i < all_rows.size(); ++i)
            for (std::size_t j = i + 1; j < all_rows.size(); ++j) {
                const Rational d = oracle::det({all_rows[i], all_rows[j]});
                if (d.is_zero()) continue;
                const Rational x = (all_rhs[i] * all_rows[j][1] - all_rhs[j] * all_rows[i][1]) / d;
                const Rational y = (all_rows[i][0] * all_rhs[j] - all_rows[j][0] * all_rhs[i]) / d;
                bool ok = true;
                for (std::size_t k = 0; k < all_rows.size(); ++k)
                    if (all_rows[k][0] * x + all_rows[k][1] * y > all_rhs[k]) ok = false;
                if (!ok) continue;
                const Rational v = lp.objective[0] * x + lp.objective[1] * y;
                if (!any || v > best) best = v;
                any = true;
            }

        const auto sol = solve_lp(lp);
        if (!any) {
            CHECK(sol.status == LpStatus::Infeasible);
            continue;
        }
        REQUIRE(sol.status == LpStatus::Optimal);
        CHECK(sol.value == best);
        CHECK(certifies_optimality(lp, sol));
    }
}
