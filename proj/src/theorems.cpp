#include "hctc/theorems.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "hctc/errors.hpp"

namespace hctc {

double coefficient_bound(std::size_t m, double gamma) noexcept {
    return gamma + static_cast<double>(m) * (1.0 - gamma);
}

CoefficientReport necessary_coeff_check(const HarmonicPolynomialMap& f, double gamma) {
    CoefficientReport report;
    for (std::size_t m = 2; m <= f.degree(); ++m) {
        const double observed = std::abs(f.u()[m]) + std::abs(f.v()[m]);
        const double bound = coefficient_bound(m, gamma);
        const double slack = bound - observed;
        report.per_index.push_back({m, observed, bound, slack});
        if (slack < 0.0) report.verdict = Verdict::Fail;
    }
    return report;
}

CoefficientReport sufficient_coeff_check(const HarmonicPolynomialMap& f, const ClassContext& ctx) {
    const double gamma = ctx.gamma();
    double lhs = 0.0;
    for (std::size_t m = 2; m <= f.degree(); ++m) {
        lhs += 2.0 * static_cast<double>(m) * (std::abs(f.u()[m]) + std::abs(f.v()[m]));
    }
    const ComplexPolynomial& big_phi = ctx.normalized_product();
    const double weight = std::abs(1.0 - 2.0 * gamma) + 1.0;
    for (std::size_t m = 2; m <= big_phi.degree(); ++m) {
        lhs += weight * std::abs(big_phi[m]);
    }
    const double rhs = 2.0 * (1.0 - gamma);

    CoefficientReport report;
    report.aggregate_sufficient = SufficientAggregate{lhs, rhs, rhs - lhs};
    report.verdict = (rhs - lhs >= 0.0) ? Verdict::Pass : Verdict::Fail;
    return report;
}

HarmonicPolynomialMap extremal_map(std::size_t m, double gamma, std::size_t degree) {
    if (m < 2) throw InvalidIndex("extremal_map: index must be >= 2, got " + std::to_string(m));
    const std::size_t n = std::max(degree, m);
    std::vector<Complex> u(n + 1);
    u[1] = 1.0;
    u[m] = coefficient_bound(m, gamma);
    return HarmonicPolynomialMap::analytic(ComplexPolynomial(std::move(u)));
}

namespace {

void require_radius(double r) {
    if (!(r >= 0.0 && r < 1.0)) {
        throw RadiusOutOfRange("radius " + std::to_string(r) + " outside [0, 1)");
    }
}

// sum_{m > n} m r^m, an upper bound on both modulus tails since
// m(1-g) + g <= m.
double modulus_tail(double r, std::size_t n) {
    const double nn = static_cast<double>(n);
    return std::pow(r, nn + 1.0) * ((nn + 1.0) - nn * r) / ((1.0 - r) * (1.0 - r));
}

// sum_{m > n} m^2 r^{m-1} dominated by a geometric series: consecutive
// ratios are at most ((n+2)/(n+1))^2 r beyond the cut.
double derivative_tail(double r, std::size_t n) {
    const double nn = static_cast<double>(n);
    const double first = (nn + 1.0) * (nn + 1.0) * std::pow(r, nn);
    const double ratio = ((nn + 2.0) / (nn + 1.0)) * ((nn + 2.0) / (nn + 1.0)) * r;
    if (ratio >= 1.0) return std::numeric_limits<double>::infinity();
    return first / (1.0 - ratio);
}

}  // namespace

DistortionEnvelope distortion_envelope(double gamma, double r, std::size_t n_terms) {
    require_radius(r);
    if (!(gamma >= 0.0 && gamma < 1.0)) {
        throw InvalidArgument("distortion_envelope: gamma must lie in [0, 1)");
    }
    if (n_terms < 2) throw InvalidArgument("distortion_envelope: n_terms must be >= 2");

    DistortionEnvelope env;
    env.gamma = gamma;
    env.radius = r;
    env.n_terms = n_terms;

    const double h = 1.0 - 2.0 * gamma;
    env.upper_derivative = (1.0 + h * r) / std::pow(1.0 - r, 3);
    env.lower_derivative = (1.0 - h * r) / std::pow(1.0 + r, 3);
    // Termwise integrals of the derivative closed forms from 0 to r.
    env.upper_modulus = (1.0 - gamma) * r / ((1.0 - r) * (1.0 - r)) + gamma * r / (1.0 - r);
    env.lower_modulus = (1.0 - gamma) * r / ((1.0 + r) * (1.0 + r)) + gamma * r / (1.0 + r);

    double up_mod = r, lo_mod = r, up_der = 1.0, lo_der = 1.0;
    double r_pow = r;  // r^{m-1}
    for (std::size_t m = 2; m <= n_terms; ++m) {
        const double a = coefficient_bound(m, gamma);
        const double sign = (m % 2 == 0) ? -1.0 : 1.0;  // (-1)^{m-1}
        const double md = static_cast<double>(m);
        up_der += md * a * r_pow;
        lo_der += sign * md * a * r_pow;
        r_pow *= r;
        up_mod += a * r_pow;
        lo_mod += sign * a * r_pow;
    }
    env.upper_modulus_series = up_mod;
    env.lower_modulus_series = lo_mod;
    env.upper_derivative_series = up_der;
    env.lower_derivative_series = lo_der;
    env.modulus_tail_bound = (r == 0.0) ? 0.0 : modulus_tail(r, n_terms);
    env.derivative_tail_bound = (r == 0.0) ? 0.0 : derivative_tail(r, n_terms);
    return env;
}

std::size_t terms_for_tail(double r, double tol) {
    require_radius(r);
    if (r == 0.0) return 2;
    constexpr std::size_t kCap = 1u << 20;
    std::size_t n = 2;
    while (n < kCap && (modulus_tail(r, n) >= tol || derivative_tail(r, n) >= tol)) {
        n = (n < 64) ? n + 1 : n + n / 8;
    }
    return n;
}

HarmonicPolynomialMap convex_combine(std::span<const HarmonicPolynomialMap> maps,
                                     std::span<const double> weights) {
    if (maps.empty()) throw BadWeights("convex_combine: no maps given");
    if (maps.size() != weights.size()) {
        throw BadWeights("convex_combine: " + std::to_string(maps.size()) + " maps but " +
                         std::to_string(weights.size()) + " weights");
    }
    double total = 0.0;
    for (double s : weights) {
        if (!(s >= 0.0) || !std::isfinite(s)) {
            throw BadWeights("convex_combine: weights must be finite and nonnegative");
        }
        total += s;
    }
    if (std::abs(total - 1.0) > 1e-12) {
        throw BadWeights("convex_combine: weights sum to " + std::to_string(total) + ", not 1");
    }

    std::size_t n = 1;
    for (const auto& f : maps) n = std::max(n, f.degree());
    std::vector<Complex> u(n + 1), v(n + 1);
    for (std::size_t a = 0; a < maps.size(); ++a) {
        for (std::size_t m = 2; m <= n; ++m) {
            u[m] += weights[a] * maps[a].u()[m];
            v[m] += weights[a] * maps[a].v()[m];
        }
    }
    u[1] = 1.0;
    return HarmonicPolynomialMap(ComplexPolynomial(std::move(u)), ComplexPolynomial(std::move(v)));
}

HerglotzReport herglotz_diagnostic(const ComplexPolynomial& F, const ClassContext& ctx,
                                   const SamplingGrid& grid, std::size_t n_coefficients) {
    if (F[0] != Complex{} || F[1] != Complex{1.0, 0.0}) {
        throw InvalidArgument("herglotz_diagnostic: F must be normalized as z + ...");
    }
    const double gamma = ctx.gamma();
    const double scale = 1.0 - gamma;
    const ComplexPolynomial dF = derivative(F);

    HerglotzReport report;
    auto P = [&](Complex z) { return (eval(dF, z) / ctx.reduced_denominator(z) - gamma) / scale; };
    report.positivity = scan_grid(grid, [&](Complex z) { return P(z).real(); });
    report.p0_error = std::abs(P(Complex{}) - 1.0);

    const std::size_t n = std::max<std::size_t>(n_coefficients, 1);
    const ComplexPolynomial over_z = divide_by_power(ctx.normalized_product(), 1);
    const ComplexPolynomial h = series_quotient(dF, over_z, n);
    report.coefficients.reserve(n);
    for (std::size_t m = 1; m <= n; ++m) {
        const Complex p = h[m] / scale;
        report.coefficients.push_back(p);
        report.max_abs_coefficient = std::max(report.max_abs_coefficient, std::abs(p));
    }
    report.coefficient_bound_holds = report.max_abs_coefficient <= 2.0 + kCaratheodorySlack;
    return report;
}

}  // namespace hctc
