#include <doctest.h>

#include <cmath>
#include <limits>
#include <numbers>

#include "hctc/corpus.hpp"
#include "hctc/errors.hpp"
#include "hctc/series.hpp"

using namespace hctc;

namespace {

ComplexPolynomial poly(std::initializer_list<Complex> c) { return ComplexPolynomial(c); }

// Truncation of z/(1 - s z) to the given degree: coefficient of z^n is s^{n-1}.
ComplexPolynomial geometric(double s, std::size_t degree) {
    std::vector<Complex> c(degree + 1);
    double p = 1.0;
    for (std::size_t n = 1; n <= degree; ++n, p *= s) c[n] = p;
    return ComplexPolynomial(std::move(c));
}

double max_coeff_diff(const ComplexPolynomial& a, const ComplexPolynomial& b) {
    double d = 0.0;
    const std::size_t n = std::max(a.degree(), b.degree());
    for (std::size_t m = 0; m <= n; ++m) d = std::max(d, std::abs(a[m] - b[m]));
    return d;
}

ComplexPolynomial random_poly(SeededUniform& rng, std::size_t degree, double scale = 1.0) {
    std::vector<Complex> c(degree + 1);
    for (auto& a : c) a = Complex{rng.in(-scale, scale), rng.in(-scale, scale)};
    return ComplexPolynomial(std::move(c));
}

}  // namespace

TEST_CASE("eval") {
    CHECK(eval(ComplexPolynomial::identity(4), {0.3, 0.4}) == Complex{0.3, 0.4});
    CHECK(eval(poly({0, 1, 0.5}), 0.5) == Complex{0.625, 0.0});

    // Partial sum of the geometric series: 1 - 2^{-50}.
    const Complex s = eval(geometric(1.0, 50), 0.5);
    CHECK(std::abs(s - 1.0) < 1e-12);
}

TEST_CASE("derivative") {
    CHECK(derivative(ComplexPolynomial::identity(3)) == poly({1, 0, 0, 0}));
    CHECK(derivative(poly({0, 1, 0, 2})) == poly({1, 0, 6, 0}));

    // z + c z^m differentiates to 1 + m c z^{m-1}.
    const Complex c{0.2, -0.1};
    const auto d = derivative(ComplexPolynomial::identity(8) + ComplexPolynomial::monomial(5, c, 8));
    CHECK(d[0] == Complex{1.0, 0.0});
    CHECK(d[4] == 5.0 * c);
    CHECK(d.degree() == 8);
    CHECK(d[8] == Complex{});
}

TEST_CASE("multiply") {
    const auto z = ComplexPolynomial::identity(4);
    CHECK(multiply(z, z, 4) == ComplexPolynomial::monomial(2, 1.0, 4));
    CHECK(multiply(poly({0, 1, 1, 0, 0}), poly({0, 1, -1, 0, 0}), 4) == poly({0, 0, 1, 0, -1}));

    // z/(1-z) * z/(1+z) = z^2/(1-z^2): ones at even degrees >= 2.
    const auto prod = multiply(geometric(1.0, 10), geometric(-1.0, 10), 10);
    for (std::size_t n = 0; n <= 10; ++n) {
        const double expected = (n >= 2 && n % 2 == 0) ? 1.0 : 0.0;
        CHECK(prod[n] == Complex{expected, 0.0});
    }

    CHECK_THROWS_AS(multiply(z, z, 0), InvalidArgument);
}

TEST_CASE("rotate") {
    CHECK(rotate(ComplexPolynomial::monomial(2, 1.0, 3), -1.0) == ComplexPolynomial::monomial(2, 1.0, 3));
    const auto r = rotate(ComplexPolynomial::monomial(3, 1.0, 3), Complex{0.0, 1.0});
    CHECK(r[3] == Complex{0.0, -1.0});

    const Complex w = std::polar(1.0, 2.0 * std::numbers::pi / 3.0);
    const auto q = rotate(poly({0, 1, 1}), w);
    CHECK(std::abs(q[1] - w) < 1e-15);
    CHECK(std::abs(q[2] - std::polar(1.0, 4.0 * std::numbers::pi / 3.0)) < 1e-15);

    CHECK_THROWS_AS(rotate(poly({0, 1}), 1.001), NonUnimodularRotation);
}

TEST_CASE("divide_by_power") {
    CHECK(divide_by_power(ComplexPolynomial::monomial(3, 1.0, 3), 2) == poly({0, 1, 0, 0}));
    CHECK(divide_by_power(poly({0, 0, 1, 0, -1}), 1) == poly({0, 1, 0, -1, 0}));
    CHECK_THROWS_AS(divide_by_power(poly({1, 1}), 1), NonDivisible);
    // Rounding-level residue below the tolerance is discarded.
    CHECK(divide_by_power(poly({1e-13, 0, 1}), 1) == poly({0, 1, 0}));
    CHECK(divide_by_power(poly({0, 1}), 0) == poly({0, 1}));
}

TEST_CASE("series_quotient inverts multiplication") {
    SeededUniform rng(11);
    std::vector<Complex> qc(13);
    qc[0] = 1.0;
    for (std::size_t m = 1; m <= 12; ++m) qc[m] = Complex{rng.in(-0.3, 0.3), rng.in(-0.3, 0.3)};
    const ComplexPolynomial q(qc);
    const auto p = random_poly(rng, 12);
    const auto h = series_quotient(multiply(p, q, 12), q, 12);
    CHECK(max_coeff_diff(h, p) < 1e-12);
    CHECK_THROWS_AS(series_quotient(p, poly({0, 1}), 4), DenominatorNearZero);
}

TEST_CASE("construction rejects non-finite coefficients") {
    CHECK_THROWS_AS(poly({0, std::numeric_limits<double>::quiet_NaN()}), InvalidArgument);
    CHECK_THROWS_AS(poly({0, Complex{0, std::numeric_limits<double>::infinity()}}), InvalidArgument);
    CHECK_THROWS_AS(poly({0}), InvalidArgument);
}

TEST_CASE("harmonic map normalization") {
    CHECK_THROWS_AS(HarmonicPolynomialMap(poly({0, 0.9}), poly({0, 0})), InvalidArgument);
    CHECK_THROWS_AS(HarmonicPolynomialMap(poly({0, 1}), poly({0, 0.1})), InvalidArgument);
    CHECK_THROWS_AS(HarmonicPolynomialMap(poly({0.1, 1}), poly({0, 0})), InvalidArgument);

    const HarmonicPolynomialMap f(poly({0, 1}), poly({0, 0, 0.1}));
    CHECK(f.degree() == 2);
    CHECK(f.u().degree() == f.v().degree());
}

TEST_CASE("eval_harmonic") {
    const auto id = HarmonicPolynomialMap::analytic(ComplexPolynomial::identity(4));
    CHECK(eval_harmonic(id, {0.0, 1.0}) == Complex{0.0, 1.0});

    const HarmonicPolynomialMap ex3(poly({0, 1}), poly({0, 0, 0.1}));
    CHECK(std::abs(eval_harmonic(ex3, 1.0) - 1.1) < 1e-15);

    // conj((99/200) i^2) = -99/200.
    const HarmonicPolynomialMap ex2(poly({0, 1}), poly({0, 0, 99.0 / 200.0}));
    CHECK(std::abs(eval_harmonic(ex2, {0.0, 1.0}) - Complex{-99.0 / 200.0, 1.0}) < 1e-15);
}

TEST_CASE("jacobian") {
    const auto id = HarmonicPolynomialMap::analytic(ComplexPolynomial::identity(4));
    CHECK(jacobian(id, {0.3, -0.2}) == 1.0);

    const HarmonicPolynomialMap ex3(poly({0, 1}), poly({0, 0, 0.1}));
    CHECK(jacobian(ex3, 0.0) == 1.0);

    // |v'| = 2 (99/200) 0.9 = 0.891.
    const HarmonicPolynomialMap ex2(poly({0, 1}), poly({0, 0, 99.0 / 200.0}));
    CHECK(jacobian(ex2, std::polar(0.9, 1.3)) == doctest::Approx(0.206119).epsilon(1e-12));
}

TEST_CASE("property: derivative matches central differences") {
    SeededUniform rng(101);
    const double h = 1e-5;
    for (int trial = 0; trial < 200; ++trial) {
        const auto p = random_poly(rng, rng.index(1, 20));
        const Complex z = std::polar(rng.in(0.0, 0.9), rng.in(0.0, 2.0 * std::numbers::pi));
        const Complex fd = (eval(p, z + h) - eval(p, z - h)) / (2.0 * h);
        const Complex exact = eval(derivative(p), z);
        CHECK(std::abs(fd - exact) <= 1e-6 * std::max(1.0, std::abs(exact)));
    }
}

TEST_CASE("property: multiply commutes and associates below N/3") {
    SeededUniform rng(202);
    const std::size_t n = 30;
    for (int trial = 0; trial < 50; ++trial) {
        const auto p = random_poly(rng, n / 3).padded(n);
        const auto q = random_poly(rng, n / 3).padded(n);
        const auto r = random_poly(rng, n / 3).padded(n);
        CHECK(max_coeff_diff(multiply(p, q, n), multiply(q, p, n)) <= 1e-12);
        CHECK(max_coeff_diff(multiply(multiply(p, q, n), r, n), multiply(p, multiply(q, r, n), n)) <= 1e-12);
    }
}

TEST_CASE("property: rotate by omega then conj(omega) is the identity") {
    SeededUniform rng(303);
    for (int trial = 0; trial < 100; ++trial) {
        const auto p = random_poly(rng, 40);
        const Complex w = std::polar(1.0, rng.in(0.0, 2.0 * std::numbers::pi));
        CHECK(max_coeff_diff(rotate(rotate(p, w), std::conj(w)), p) <= 1e-14);
    }
}

TEST_CASE("property: real coefficients give conjugate-symmetric maps") {
    SeededUniform rng(404);
    for (int trial = 0; trial < 50; ++trial) {
        std::vector<Complex> u(9), v(9);
        u[1] = 1.0;
        for (std::size_t m = 2; m <= 8; ++m) {
            u[m] = rng.in(-0.1, 0.1);
            v[m] = rng.in(-0.1, 0.1);
        }
        const HarmonicPolynomialMap f{ComplexPolynomial(u), ComplexPolynomial(v)};
        const Complex z = std::polar(rng.in(0.0, 0.99), rng.in(0.0, 2.0 * std::numbers::pi));
        CHECK(std::abs(eval_harmonic(f, std::conj(z)) - std::conj(eval_harmonic(f, z))) < 1e-15);
    }
}
