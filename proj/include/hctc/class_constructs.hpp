#pragma once

// The function class KH0(k, gamma) and its analytic counterpart K(k, gamma).
//
// Given phi(z) = z + c_2 z^2 + ... and a positive integer k, the class is
// defined through the rotation product
//
//     phi_k(z) = prod_{v=0}^{k-1} mu^{-v} phi(mu^v z),   mu = e^{2 pi i / k},
//
// which vanishes to order k at the origin, and its normalization
// Phi_k(z) = phi_k(z) / z^{k-1} = z + C_2 z^2 + ....  A harmonic map
// f = u + conj(v) belongs to KH0(k, gamma) when the margin
//
//     Re(z u'(z) / Phi_k(z)) - gamma - |z v'(z) / Phi_k(z)|
//
// is positive on the unit disk. Margins are evaluated through Phi_k(z)/z,
// a polynomial with constant term 1, so the origin needs no special casing.

#include <cstddef>

#include "hctc/grid.hpp"
#include "hctc/series.hpp"

namespace hctc {

class ClassParams {
public:
    /// Throws InvalidArgument unless k >= 1, 0 <= gamma < 1 and
    /// phi = z + c_2 z^2 + ... exactly.
    ClassParams(int k, double gamma, ComplexPolynomial phi);

    /// phi(z) = z.
    static ClassParams identity_phi(int k, double gamma, std::size_t degree = kDefaultTruncation);

    int k() const noexcept { return k_; }
    double gamma() const noexcept { return gamma_; }
    const ComplexPolynomial& phi() const noexcept { return phi_; }

    /// Order (k-1)/k that phi must be starlike of.
    double required_phi_order() const noexcept;

private:
    int k_;
    double gamma_;
    ComplexPolynomial phi_;
};

/// phi_k truncated at `degree`. Throws TruncationTooSmall if degree < k.
ComplexPolynomial rotation_product(const ClassParams& params, std::size_t degree);

/// Phi_k = phi_k / z^{k-1}; its coefficients are the C_m. Propagates
/// NonDivisible if the product does not vanish to order k-1.
ComplexPolynomial normalized_rotation_product(const ClassParams& params, std::size_t degree);

/// ClassParams together with the precomputed Phi_k.
class ClassContext {
public:
    explicit ClassContext(ClassParams params, std::size_t degree = kDefaultTruncation);

    const ClassParams& params() const noexcept { return params_; }
    double gamma() const noexcept { return params_.gamma(); }
    const ComplexPolynomial& normalized_product() const noexcept { return big_phi_; }

    /// Phi_k(z) / z (equal to 1 at the origin). Throws DenominatorNearZero
    /// if |Phi_k(z)| < 1e-12 at z != 0.
    Complex reduced_denominator(Complex z) const;

private:
    ClassParams params_;
    ComplexPolynomial big_phi_;
    ComplexPolynomial big_phi_over_z_;
};

inline constexpr double kDenominatorFloor = 1e-12;

/// Re(z u'/Phi_k) - gamma - |z v'/Phi_k| at z; 1 - gamma at the origin.
double harmonic_margin(const HarmonicPolynomialMap& f, const ClassContext& ctx, Complex z);

/// Re(z F'/Phi_k) - gamma at z; 1 - gamma at the origin.
double analytic_margin(const ComplexPolynomial& F, const ClassContext& ctx, Complex z);

/// Grid certification of the harmonic margin. PASS is numerical evidence
/// on |z| <= r_max, not a proof.
MarginReport check_membership(const HarmonicPolynomialMap& f, const ClassContext& ctx,
                              const SamplingGrid& grid);

/// Grid certification of the analytic class K(k, gamma) for F.
MarginReport check_analytic_membership(const ComplexPolynomial& F, const ClassContext& ctx,
                                       const SamplingGrid& grid);

/// F_eps = u + eps v. Requires |eps| = 1 within 1e-12.
ComplexPolynomial slice(const HarmonicPolynomialMap& f, Complex eps);

/// Certifies Re(z phi'(z) / phi(z)) > alpha on the grid.
MarginReport check_phi_order(const ComplexPolynomial& phi, double alpha, const SamplingGrid& grid);

}  // namespace hctc
