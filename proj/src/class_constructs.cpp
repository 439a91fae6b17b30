#include "hctc/class_constructs.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <string>

#include "hctc/errors.hpp"

namespace hctc {

namespace {

std::size_t effective_degree(const ComplexPolynomial& p) {
    std::size_t d = p.degree();
    while (d > 1 && p[d] == Complex{}) --d;
    return d;
}

[[noreturn]] void throw_near_zero(const char* what, Complex z, double modulus) {
    std::ostringstream msg;
    msg.precision(17);
    msg << what << " vanishes at z = (" << z.real() << ", " << z.imag()
        << "): modulus " << modulus << " below 1e-12";
    throw DenominatorNearZero(msg.str());
}

// phi(z)/z evaluated with a guard on |phi(z)| away from the origin.
Complex guarded_quotient(const ComplexPolynomial& over_z, Complex z, const char* what) {
    const Complex q = eval(over_z, z);
    if (z != Complex{}) {
        const double modulus = std::abs(z) * std::abs(q);
        if (modulus < kDenominatorFloor) throw_near_zero(what, z, modulus);
    }
    return q;
}

}  // namespace

ClassParams::ClassParams(int k, double gamma, ComplexPolynomial phi)
    : k_(k), gamma_(gamma), phi_(std::move(phi)) {
    if (k_ < 1) throw InvalidArgument("ClassParams: k must be a positive integer");
    if (!(gamma_ >= 0.0 && gamma_ < 1.0)) {
        throw InvalidArgument("ClassParams: gamma must lie in [0, 1)");
    }
    if (phi_[0] != Complex{} || phi_[1] != Complex{1.0, 0.0}) {
        throw InvalidArgument("ClassParams: phi must be normalized as z + c_2 z^2 + ...");
    }
}

ClassParams ClassParams::identity_phi(int k, double gamma, std::size_t degree) {
    return ClassParams(k, gamma, ComplexPolynomial::identity(degree));
}

double ClassParams::required_phi_order() const noexcept {
    return static_cast<double>(k_ - 1) / static_cast<double>(k_);
}

ComplexPolynomial rotation_product(const ClassParams& params, std::size_t degree) {
    const auto k = static_cast<std::size_t>(params.k());
    if (degree < k) {
        throw TruncationTooSmall("rotation product of order " + std::to_string(k) +
                                 " needs truncation degree >= k, got " + std::to_string(degree));
    }
    const ComplexPolynomial& phi = params.phi();
    const std::size_t top = std::min(phi.degree(), degree);

    // mu^{-v} phi(mu^v z) has coefficients c_m mu^{v(m-1)}; the unit leading
    // term is untouched, so the z^k coefficient of the product is exactly 1.
    auto factor = [&](std::size_t v) {
        std::vector<Complex> c(degree + 1);
        for (std::size_t m = 1; m <= top; ++m) {
            if (phi[m] == Complex{}) continue;
            c[m] = phi[m] * root_of_unity(static_cast<long long>(v * (m - 1)),
                                          static_cast<long long>(k));
        }
        return ComplexPolynomial(std::move(c));
    };

    ComplexPolynomial product = factor(0);
    for (std::size_t v = 1; v < k; ++v) {
        product = multiply(product, factor(v), degree);
    }
    return product;
}

ComplexPolynomial normalized_rotation_product(const ClassParams& params, std::size_t degree) {
    return divide_by_power(rotation_product(params, degree),
                           static_cast<std::size_t>(params.k() - 1));
}

ClassContext::ClassContext(ClassParams params, std::size_t degree)
    : params_(std::move(params)),
      big_phi_([&] {
          // Wide enough to hold the untruncated product of the phi factors.
          const auto k = static_cast<std::size_t>(params_.k());
          const std::size_t exact = k * (effective_degree(params_.phi()) - 1) + 1;
          const std::size_t d = std::max({degree, exact, std::size_t{1}});
          return normalized_rotation_product(params_, d + k - 1);
      }()),
      big_phi_over_z_(divide_by_power(big_phi_, 1)) {}

Complex ClassContext::reduced_denominator(Complex z) const {
    return guarded_quotient(big_phi_over_z_, z, "Phi_k");
}

double harmonic_margin(const HarmonicPolynomialMap& f, const ClassContext& ctx, Complex z) {
    if (z == Complex{}) return 1.0 - ctx.gamma();
    const Complex q = ctx.reduced_denominator(z);
    const Complex a = eval(derivative(f.u()), z) / q;
    const Complex b = eval(derivative(f.v()), z) / q;
    return a.real() - ctx.gamma() - std::abs(b);
}

double analytic_margin(const ComplexPolynomial& F, const ClassContext& ctx, Complex z) {
    if (z == Complex{}) return 1.0 - ctx.gamma();
    const Complex q = ctx.reduced_denominator(z);
    return (eval(derivative(F), z) / q).real() - ctx.gamma();
}

MarginReport check_membership(const HarmonicPolynomialMap& f, const ClassContext& ctx,
                              const SamplingGrid& grid) {
    const ComplexPolynomial du = derivative(f.u());
    const ComplexPolynomial dv = derivative(f.v());
    const double gamma = ctx.gamma();
    return scan_grid(grid, [&](Complex z) {
        if (z == Complex{}) return 1.0 - gamma;
        const Complex q = ctx.reduced_denominator(z);
        return (eval(du, z) / q).real() - gamma - std::abs(eval(dv, z) / q);
    });
}

MarginReport check_analytic_membership(const ComplexPolynomial& F, const ClassContext& ctx,
                                       const SamplingGrid& grid) {
    const ComplexPolynomial dF = derivative(F);
    const double gamma = ctx.gamma();
    return scan_grid(grid, [&](Complex z) {
        if (z == Complex{}) return 1.0 - gamma;
        return (eval(dF, z) / ctx.reduced_denominator(z)).real() - gamma;
    });
}

ComplexPolynomial slice(const HarmonicPolynomialMap& f, Complex eps) {
    if (std::abs(std::abs(eps) - 1.0) > kUnimodularTol) {
        std::ostringstream msg;
        msg.precision(17);
        msg << "slice: |eps| = " << std::abs(eps) << " is not 1";
        throw NonUnimodularRotation(msg.str());
    }
    return f.u() + eps * f.v();
}

MarginReport check_phi_order(const ComplexPolynomial& phi, double alpha, const SamplingGrid& grid) {
    if (phi[0] != Complex{} || phi[1] != Complex{1.0, 0.0}) {
        throw InvalidArgument("check_phi_order: phi must be normalized as z + c_2 z^2 + ...");
    }
    const ComplexPolynomial over_z = divide_by_power(phi, 1);
    const ComplexPolynomial dphi = derivative(phi);
    return scan_grid(grid, [&](Complex z) {
        if (z == Complex{}) return 1.0 - alpha;
        return (eval(dphi, z) / guarded_quotient(over_z, z, "phi")).real() - alpha;
    });
}

}  // namespace hctc
