#pragma once

#include "bierkit/exactla/rational.hpp"
#include "bierkit/exactla/simplex_lp.hpp"
#include "bierkit/scomplex/complex.hpp"

#include <variant>
#include <vector>

namespace bierkit::scomplex {

using exactla::Rational;

/**
 * Witness that K = {A : l(A) < threshold}: every face has weight at most
 * threshold - margin, every minimal non-face at least threshold + margin.
 */
struct ThresholdCert {
    std::vector<Rational> weights;  // positive, summing to 1
    Rational threshold;             // in (0, 1)
    Rational margin;                // > 0
};

struct NotThreshold {
    Rational optimum;  // best achievable margin, <= 0
    exactla::LinearProgram lp;
    exactla::LpSolution solution;  // carries the optimal dual certificate
};

using ThresholdResult = std::variant<ThresholdCert, NotThreshold>;

/**
 * Margin-maximizing LP over (l, threshold, t), solved exactly:
 *   max t  s.t.  l(A) <= threshold - t   for facets A of K,
 *                l(B) >= threshold + t   for minimal non-faces B,
 *                sum l = 1, l >= 0, 0 <= threshold <= 1, t <= 1.
 * Returns a certificate iff the optimum is positive. Zero weights in the LP
 * optimum are blended toward uniform weights so the certificate's weights
 * are strictly positive; the reported margin is recomputed exactly.
 * Rejects {∅}, the full simplex and the void complex with DomainError.
 */
ThresholdResult is_threshold(const SimplicialComplex& k);

// Exhaustive re-check of a certificate against every subset of [n].
bool verify_threshold_cert(const SimplicialComplex& k, const ThresholdCert& cert);

// Weight of a face: sum of weights over its elements.
Rational measure(const std::vector<Rational>& weights, FaceMask face);

/// T = {A ⊆ [n] : l(A) < threshold}. Weights positive summing to 1,
/// 0 < threshold < 1.
SimplicialComplex threshold_complex(const std::vector<Rational>& weights, const Rational& threshold);

// DomainError unless weights are positive, sum to 1, and 0 < threshold < 1.
void validate_weights(const std::vector<Rational>& weights, const Rational& threshold);

// True iff no subset of [n] has weight exactly `threshold`.
bool is_generic_threshold(const std::vector<Rational>& weights, const Rational& threshold);

}  // namespace bierkit::scomplex
