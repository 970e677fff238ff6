#include "bierkit/scomplex/threshold.hpp"

#include "bierkit/exactla/error.hpp"

#include <algorithm>
#include <string>

namespace bierkit::scomplex {

using exactla::LinearProgram;
using exactla::LpStatus;
using exactla::Vec;

namespace {

// Smallest slack over faces and minimal non-faces.
Rational exact_margin(const SimplicialComplex& k, const std::vector<Rational>& weights, const Rational& threshold) {
    bool first = true;
    Rational m;
    auto take = [&](const Rational& v) {
        if (first || v < m) m = v;
        first = false;
    };
    for (auto f : k.facets()) take(threshold - measure(weights, f));
    for (auto b : k.minimal_nonfaces()) take(measure(weights, b) - threshold);
    return m;
}

}  // namespace

void validate_weights(const std::vector<Rational>& weights, const Rational& threshold) {
    if (weights.empty() || weights.size() > static_cast<std::size_t>(kMaxGround))
        throw DomainError("weights: need 1.." + std::to_string(kMaxGround) + " entries");
    Rational total;
    for (const auto& w : weights) {
        if (w.sign() <= 0) throw DomainError("weights must be positive");
        total += w;
    }
    if (total != Rational(1)) throw DomainError("weights must sum to 1, got " + total.str());
    if (threshold.sign() <= 0 || threshold >= Rational(1)) throw DomainError("threshold must lie in (0, 1)");
}

Rational measure(const std::vector<Rational>& weights, FaceMask face) {
    Rational s;
    for (int e : face_elements(face)) s += weights[static_cast<std::size_t>(e - 1)];
    return s;
}

ThresholdResult is_threshold(const SimplicialComplex& k) {
    if (!k.is_proper() || k.is_empty_complex())
        throw DomainError("is_threshold: complex must differ from {∅}, the full simplex and the void complex");
    const int n = k.n();
    const auto nu = static_cast<std::size_t>(n);
    const std::size_t s = nu + 1;  // t = s - 1, so s >= 0 loses nothing (t = -1 is always feasible)

    LinearProgram lp;
    lp.num_vars = nu + 2;
    for (auto a : k.facets()) {
        Vec row(lp.num_vars, Rational(0));
        for (int e : face_elements(a)) row[static_cast<std::size_t>(e - 1)] = 1;
        row[nu] = -1;
        row[s] = 1;
        lp.le_rows.push_back(std::move(row));
        lp.le_rhs.emplace_back(1);
    }
    for (auto b : k.minimal_nonfaces()) {
        Vec row(lp.num_vars, Rational(0));
        for (int e : face_elements(b)) row[static_cast<std::size_t>(e - 1)] = -1;
        row[nu] = 1;
        row[s] = 1;
        lp.le_rows.push_back(std::move(row));
        lp.le_rhs.emplace_back(1);
    }
    {
        Vec row(lp.num_vars, Rational(0));
        row[nu] = 1;
        lp.le_rows.push_back(std::move(row));
        lp.le_rhs.emplace_back(1);
        Vec cap(lp.num_vars, Rational(0));
        cap[s] = 1;
        lp.le_rows.push_back(std::move(cap));
        lp.le_rhs.emplace_back(2);
    }
    {
        Vec row(lp.num_vars, Rational(0));
        for (std::size_t i = 0; i < nu; ++i) row[i] = 1;
        lp.eq_rows.push_back(std::move(row));
        lp.eq_rhs.emplace_back(1);
    }
    lp.objective.assign(lp.num_vars, Rational(0));
    lp.objective[s] = 1;

    auto sol = exactla::solve_lp(lp);
    if (sol.status != LpStatus::Optimal) throw ConsistencyError("threshold LP is feasible and bounded by construction");
    const Rational t = sol.value - Rational(1);
    if (t.sign() <= 0) return NotThreshold{t, std::move(lp), std::move(sol)};

    std::vector<Rational> weights(sol.x.begin(), sol.x.begin() + n);
    Rational threshold = sol.x[nu];
    const bool has_zero = std::any_of(weights.begin(), weights.end(), [](const Rational& w) { return w.is_zero(); });
    if (has_zero || threshold.is_zero() || threshold == Rational(1)) {
        // Blend with uniform weights and threshold 1/2: keeps at least half
        // of the margin for eps = t / (2t + 1).
        const Rational eps = t / (Rational(2) * t + Rational(1));
        const Rational keep = Rational(1) - eps;
        for (auto& w : weights) w = keep * w + eps / Rational(n);
        threshold = keep * threshold + eps / Rational(2);
    }
    ThresholdCert cert{weights, threshold, exact_margin(k, weights, threshold)};
    if (cert.margin.sign() <= 0) throw ConsistencyError("threshold certificate lost its margin");
    return cert;
}

bool verify_threshold_cert(const SimplicialComplex& k, const ThresholdCert& cert) {
    const int n = k.n();
    if (cert.weights.size() != static_cast<std::size_t>(n) || cert.margin.sign() <= 0) return false;
    Rational total;
    for (const auto& w : cert.weights) {
        if (w.sign() <= 0) return false;
        total += w;
    }
    if (total != Rational(1)) return false;
    if (cert.threshold.sign() <= 0 || cert.threshold >= Rational(1)) return false;
    for (FaceMask a = 0; a <= ground_mask(n); ++a) {
        const Rational mu = measure(cert.weights, a);
        if (k.contains(a)) {
            if (mu > cert.threshold - cert.margin) return false;
        } else {
            bool minimal = true;
            for (int e : face_elements(a))
                if (!k.contains(a & ~(FaceMask{1} << (e - 1)))) minimal = false;
            if (minimal && mu < cert.threshold + cert.margin) return false;
            if (mu < cert.threshold) return false;
        }
    }
    return true;
}

SimplicialComplex threshold_complex(const std::vector<Rational>& weights, const Rational& threshold) {
    validate_weights(weights, threshold);
    const int n = static_cast<int>(weights.size());
    std::vector<FaceMask> faces;
    for (FaceMask a = 0; a <= ground_mask(n); ++a)
        if (measure(weights, a) < threshold) faces.push_back(a);
    return make_complex_from_masks(n, std::move(faces));
}

bool is_generic_threshold(const std::vector<Rational>& weights, const Rational& threshold) {
    const int n = static_cast<int>(weights.size());
    for (FaceMask a = 0; a <= ground_mask(n); ++a)
        if (measure(weights, a) == threshold) return false;
    return true;
}

}  // namespace bierkit::scomplex
