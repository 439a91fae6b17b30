#include "hctc/series.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <string>

#include "hctc/errors.hpp"

namespace hctc {

ComplexPolynomial::ComplexPolynomial(std::vector<Complex> coeffs) : coeffs_(std::move(coeffs)) {
    if (coeffs_.size() < 2) {
        throw InvalidArgument("ComplexPolynomial: truncation degree must be at least 1");
    }
    for (std::size_t m = 0; m < coeffs_.size(); ++m) {
        if (!std::isfinite(coeffs_[m].real()) || !std::isfinite(coeffs_[m].imag())) {
            throw InvalidArgument("ComplexPolynomial: non-finite coefficient at index " +
                                  std::to_string(m));
        }
    }
}

ComplexPolynomial ComplexPolynomial::zero(std::size_t degree) {
    return ComplexPolynomial(std::vector<Complex>(std::max<std::size_t>(degree, 1) + 1));
}

ComplexPolynomial ComplexPolynomial::identity(std::size_t degree) {
    return monomial(1, Complex{1.0, 0.0}, degree);
}

ComplexPolynomial ComplexPolynomial::monomial(std::size_t power, Complex coeff, std::size_t degree) {
    if (power > degree) {
        throw TruncationTooSmall("monomial z^" + std::to_string(power) +
                                 " exceeds truncation degree " + std::to_string(degree));
    }
    std::vector<Complex> c(std::max<std::size_t>(degree, 1) + 1);
    c[power] = coeff;
    return ComplexPolynomial(std::move(c));
}

ComplexPolynomial ComplexPolynomial::padded(std::size_t degree) const {
    if (degree <= this->degree()) return *this;
    std::vector<Complex> c(coeffs_);
    c.resize(degree + 1);
    return ComplexPolynomial(std::move(c));
}

Complex eval(const ComplexPolynomial& p, Complex z) noexcept {
    const auto c = p.coeffs();
    Complex acc{};
    for (auto it = c.rbegin(); it != c.rend(); ++it) {
        acc = acc * z + *it;
    }
    return acc;
}

ComplexPolynomial derivative(const ComplexPolynomial& p) {
    const std::size_t n = p.degree();
    std::vector<Complex> c(n + 1);
    for (std::size_t m = 0; m < n; ++m) {
        c[m] = static_cast<double>(m + 1) * p[m + 1];
    }
    return ComplexPolynomial(std::move(c));
}

ComplexPolynomial multiply(const ComplexPolynomial& p, const ComplexPolynomial& q,
                           std::size_t degree) {
    if (degree < 1) throw InvalidArgument("multiply: truncation degree must be at least 1");
    std::vector<Complex> c(degree + 1);
    const std::size_t np = std::min(p.degree(), degree);
    for (std::size_t i = 0; i <= np; ++i) {
        const Complex a = p[i];
        if (a == Complex{}) continue;
        const std::size_t nq = std::min(q.degree(), degree - i);
        for (std::size_t j = 0; j <= nq; ++j) {
            c[i + j] += a * q[j];
        }
    }
    return ComplexPolynomial(std::move(c));
}

ComplexPolynomial rotate(const ComplexPolynomial& p, Complex omega) {
    if (std::abs(std::abs(omega) - 1.0) > kUnimodularTol) {
        std::ostringstream msg;
        msg.precision(17);
        msg << "rotate: |omega| = " << std::abs(omega) << " is not 1";
        throw NonUnimodularRotation(msg.str());
    }
    std::vector<Complex> c(p.degree() + 1);
    Complex power{1.0, 0.0};
    for (std::size_t m = 0; m <= p.degree(); ++m) {
        c[m] = p[m] * power;
        power *= omega;
    }
    return ComplexPolynomial(std::move(c));
}

ComplexPolynomial divide_by_power(const ComplexPolynomial& p, std::size_t j, double tol) {
    for (std::size_t m = 0; m < j; ++m) {
        if (std::abs(p[m]) > tol) {
            std::ostringstream msg;
            msg.precision(17);
            msg << "divide_by_power: |a_" << m << "| = " << std::abs(p[m])
                << " exceeds tolerance " << tol << " for division by z^" << j;
            throw NonDivisible(msg.str());
        }
    }
    const std::size_t n = p.degree();
    std::vector<Complex> c(n + 1);
    for (std::size_t m = j; m <= n; ++m) {
        c[m - j] = p[m];
    }
    return ComplexPolynomial(std::move(c));
}

ComplexPolynomial series_quotient(const ComplexPolynomial& p, const ComplexPolynomial& q,
                                  std::size_t degree, double tol) {
    if (degree < 1) throw InvalidArgument("series_quotient: truncation degree must be at least 1");
    const Complex q0 = q[0];
    if (std::abs(q0) < tol) {
        std::ostringstream msg;
        msg.precision(17);
        msg << "series_quotient: |q_0| = " << std::abs(q0) << " below tolerance " << tol;
        throw DenominatorNearZero(msg.str());
    }
    std::vector<Complex> h(degree + 1);
    for (std::size_t n = 0; n <= degree; ++n) {
        Complex acc = p[n];
        const std::size_t top = std::min(n, q.degree());
        for (std::size_t j = 1; j <= top; ++j) acc -= q[j] * h[n - j];
        h[n] = acc / q0;
    }
    return ComplexPolynomial(std::move(h));
}

ComplexPolynomial operator+(const ComplexPolynomial& p, const ComplexPolynomial& q) {
    const std::size_t n = std::max(p.degree(), q.degree());
    std::vector<Complex> c(n + 1);
    for (std::size_t m = 0; m <= n; ++m) c[m] = p[m] + q[m];
    return ComplexPolynomial(std::move(c));
}

ComplexPolynomial operator*(Complex s, const ComplexPolynomial& p) {
    std::vector<Complex> c(p.coeffs().begin(), p.coeffs().end());
    for (auto& a : c) a *= s;
    return ComplexPolynomial(std::move(c));
}

namespace {

void require_normalized(const ComplexPolynomial& u, const ComplexPolynomial& v) {
    if (u[0] != Complex{} || u[1] != Complex{1.0, 0.0}) {
        throw InvalidArgument("HarmonicPolynomialMap: u must start z + ... (u_0 = 0, u_1 = 1)");
    }
    if (v[0] != Complex{} || v[1] != Complex{}) {
        throw InvalidArgument("HarmonicPolynomialMap: v must start at z^2 (v_0 = v_1 = 0)");
    }
}

}  // namespace

HarmonicPolynomialMap::HarmonicPolynomialMap(ComplexPolynomial u, ComplexPolynomial v)
    : u_(u.padded(v.degree())), v_(v.padded(u.degree())) {
    require_normalized(u_, v_);
}

HarmonicPolynomialMap HarmonicPolynomialMap::analytic(ComplexPolynomial u) {
    const std::size_t n = u.degree();
    return HarmonicPolynomialMap(std::move(u), ComplexPolynomial::zero(n));
}

Complex eval_harmonic(const HarmonicPolynomialMap& f, Complex z) noexcept {
    return eval(f.u(), z) + std::conj(eval(f.v(), z));
}

double jacobian(const HarmonicPolynomialMap& f, Complex z) {
    return std::norm(eval(derivative(f.u()), z)) - std::norm(eval(derivative(f.v()), z));
}

}  // namespace hctc
