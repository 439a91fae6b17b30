#pragma once

// Checkable consequences of membership in KH0(k, gamma): the coefficient
// bound, the coefficient sufficient condition, the distortion envelopes,
// closure under convex combinations, and the Caratheodory representation
// z F'(z) / Phi_k(z) = gamma + (1 - gamma) P(z) with Re P > 0.

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "hctc/class_constructs.hpp"
#include "hctc/grid.hpp"
#include "hctc/series.hpp"

namespace hctc {

/// gamma + m (1 - gamma): the sharp bound on |u_m| + |v_m|.
double coefficient_bound(std::size_t m, double gamma) noexcept;

struct CoefficientRow {
    std::size_t m;
    double observed;  // |u_m| + |v_m|
    double bound;
    double slack;     // bound - observed
};

struct SufficientAggregate {
    double lhs;
    double rhs;
    double slack;  // rhs - lhs
};

struct CoefficientReport {
    Verdict verdict = Verdict::Pass;
    std::vector<CoefficientRow> per_index;
    std::optional<SufficientAggregate> aggregate_sufficient;
};

/// |u_m| + |v_m| <= gamma + m(1 - gamma) for m = 2..N. A FAIL certifies
/// non-membership; a PASS is only necessary evidence.
CoefficientReport necessary_coeff_check(const HarmonicPolynomialMap& f, double gamma);

/// sum 2m(|u_m| + |v_m|) + sum (|1 - 2 gamma| + 1)|C_m| <= 2(1 - gamma),
/// with C_m taken from Phi_k. Equality counts as PASS; a PASS implies
/// membership.
CoefficientReport sufficient_coeff_check(const HarmonicPolynomialMap& f, const ClassContext& ctx);

/// z + [gamma + m(1 - gamma)] z^m with v = 0. Throws InvalidIndex if m < 2.
HarmonicPolynomialMap extremal_map(std::size_t m, double gamma,
                                   std::size_t degree = kDefaultTruncation);

struct DistortionEnvelope {
    double gamma = 0.0;
    double radius = 0.0;
    std::size_t n_terms = 0;

    // Reported bounds (closed forms).
    double lower_modulus = 0.0;
    double upper_modulus = 0.0;
    double lower_derivative = 0.0;
    double upper_derivative = 0.0;

    // Partial sums of the series presentations through z^{n_terms}.
    double lower_modulus_series = 0.0;
    double upper_modulus_series = 0.0;
    double lower_derivative_series = 0.0;
    double upper_derivative_series = 0.0;

    // Bounds on the neglected tails of the modulus and derivative series.
    double modulus_tail_bound = 0.0;
    double derivative_tail_bound = 0.0;
};

/// Envelopes at |z| = r:
///   r + sum (-1)^{m-1} [m(1-g)+g] r^m  <=  |f|  <=  r + sum [m(1-g)+g] r^m
///   (1 - (1-2g) r)/(1+r)^3  <=  |f'|  <=  (1 + (1-2g) r)/(1-r)^3
/// Throws RadiusOutOfRange unless 0 <= r < 1; n_terms must be >= 2.
DistortionEnvelope distortion_envelope(double gamma, double r, std::size_t n_terms);

/// An n_terms (searched upward) for which both tail bounds fall below `tol`.
std::size_t terms_for_tail(double r, double tol = 1e-10);

/// sum s_a f_a, taken separately on u and v. Throws BadWeights unless the
/// weights are nonnegative, match the maps one-to-one and sum to 1 within 1e-12.
HarmonicPolynomialMap convex_combine(std::span<const HarmonicPolynomialMap> maps,
                                     std::span<const double> weights);

struct HerglotzReport {
    /// Re P(z) on the grid (plus the origin).
    MarginReport positivity;
    /// |P(0) - 1|.
    double p0_error = 0.0;
    /// p_1, ..., p_n of P(z) = 1 + p_1 z + p_2 z^2 + ...
    std::vector<Complex> coefficients;
    double max_abs_coefficient = 0.0;
    /// max |p_m| <= 2 + 1e-9.
    bool coefficient_bound_holds = true;
};

inline constexpr double kCaratheodorySlack = 1e-9;

/// Forms P(z) = (z F'(z)/Phi_k(z) - gamma) / (1 - gamma), certifies Re P > 0
/// on the grid and extracts the first `n_coefficients` coefficients of P by
/// series division.
HerglotzReport herglotz_diagnostic(const ComplexPolynomial& F, const ClassContext& ctx,
                                   const SamplingGrid& grid, std::size_t n_coefficients);

}  // namespace hctc
