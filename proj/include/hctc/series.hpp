#pragma once

// Truncated complex power series about the origin.
//
// A ComplexPolynomial stores a_0..a_N, the coefficients of 1, z, ..., z^N.
// N is the truncation degree; trailing zeros are allowed and carry meaning
// (they fix the degree at which products are truncated). All values are
// immutable after construction and every operation below is a pure function.

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

namespace hctc {

using Complex = std::complex<double>;

inline constexpr std::size_t kDefaultTruncation = 64;
inline constexpr double kDivideTol = 1e-10;
inline constexpr double kUnimodularTol = 1e-12;

class ComplexPolynomial {
public:
    /// Takes ownership of a_0..a_N. Throws InvalidArgument when fewer than
    /// two coefficients are given or any coefficient is NaN/Inf.
    explicit ComplexPolynomial(std::vector<Complex> coeffs);

    static ComplexPolynomial zero(std::size_t degree);
    /// The polynomial z at the given truncation degree.
    static ComplexPolynomial identity(std::size_t degree);
    static ComplexPolynomial monomial(std::size_t power, Complex coeff, std::size_t degree);

    std::size_t degree() const noexcept { return coeffs_.size() - 1; }

    /// Coefficient of z^m; zero past the truncation degree.
    Complex operator[](std::size_t m) const noexcept {
        return m < coeffs_.size() ? coeffs_[m] : Complex{};
    }

    std::span<const Complex> coeffs() const noexcept { return coeffs_; }

    /// Same series at a larger truncation degree (zero-extended).
    ComplexPolynomial padded(std::size_t degree) const;

    friend bool operator==(const ComplexPolynomial&, const ComplexPolynomial&) = default;

private:
    std::vector<Complex> coeffs_;
};

/// Horner evaluation of sum a_m z^m.
Complex eval(const ComplexPolynomial& p, Complex z) noexcept;

/// Coefficient m of the result is (m+1) a_{m+1}; the degree stays N with a
/// zero top coefficient.
ComplexPolynomial derivative(const ComplexPolynomial& p);

/// Cauchy product truncated at degree `degree`.
ComplexPolynomial multiply(const ComplexPolynomial& p, const ComplexPolynomial& q,
                           std::size_t degree);

/// p(omega z). Requires |omega| = 1 within kUnimodularTol.
ComplexPolynomial rotate(const ComplexPolynomial& p, Complex omega);

/// p(z) / z^j. The first j coefficients must be within `tol` of zero;
/// otherwise NonDivisible is thrown. Degree is preserved by zero padding.
ComplexPolynomial divide_by_power(const ComplexPolynomial& p, std::size_t j,
                                  double tol = kDivideTol);

/// Power-series quotient p / q truncated at `degree`, solved coefficient by
/// coefficient. Throws DenominatorNearZero if |q_0| < tol.
ComplexPolynomial series_quotient(const ComplexPolynomial& p, const ComplexPolynomial& q,
                                  std::size_t degree, double tol = kDivideTol);

ComplexPolynomial operator+(const ComplexPolynomial& p, const ComplexPolynomial& q);
ComplexPolynomial operator*(Complex s, const ComplexPolynomial& p);

/// f = u + conj(v) with u = z + sum_{m>=2} u_m z^m and v = sum_{m>=2} v_m z^m.
class HarmonicPolynomialMap {
public:
    /// Pads u and v to a common degree. Throws InvalidArgument unless
    /// u_0 = 0, u_1 = 1, v_0 = 0 and v_1 = 0 exactly.
    HarmonicPolynomialMap(ComplexPolynomial u, ComplexPolynomial v);

    /// Map with v identically zero.
    static HarmonicPolynomialMap analytic(ComplexPolynomial u);

    const ComplexPolynomial& u() const noexcept { return u_; }
    const ComplexPolynomial& v() const noexcept { return v_; }
    std::size_t degree() const noexcept { return u_.degree(); }

    friend bool operator==(const HarmonicPolynomialMap&, const HarmonicPolynomialMap&) = default;

private:
    ComplexPolynomial u_;
    ComplexPolynomial v_;
};

/// u(z) + conj(v(z)).
Complex eval_harmonic(const HarmonicPolynomialMap& f, Complex z) noexcept;

/// |u'(z)|^2 - |v'(z)|^2.
double jacobian(const HarmonicPolynomialMap& f, Complex z);

}  // namespace hctc
