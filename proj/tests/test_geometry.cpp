#include <doctest.h>

#include <cmath>
#include <numbers>
#include <regex>

#include "hctc/corpus.hpp"
#include "hctc/errors.hpp"
#include "hctc/geometry.hpp"
#include "hctc/parallel.hpp"

using namespace hctc;

namespace {

constexpr double kPi = std::numbers::pi;

HarmonicPolynomialMap corpus_map(std::size_t m, double c) {
    return HarmonicPolynomialMap(ComplexPolynomial::identity(m), ComplexPolynomial::monomial(m, c, m));
}

std::size_t count(const std::string& text, const std::string& needle) {
    std::size_t n = 0;
    for (auto pos = text.find(needle); pos != std::string::npos; pos = text.find(needle, pos + 1)) ++n;
    return n;
}

}  // namespace

TEST_CASE("image_boundary") {
    const auto f = corpus_map(2, 99.0 / 200.0);
    const auto curve = image_boundary(f, 0.99, 1024);
    CHECK(curve.radius == 0.99);
    REQUIRE(curve.points.size() == 1024);
    CHECK(std::abs(curve.points[0] - (0.99 + 0.495 * 0.9801)) < 1e-15);
    // theta = pi/2: i r + conj(c (i r)^2) = -c r^2 + i r.
    CHECK(std::abs(curve.points[256] - Complex{-0.495 * 0.9801, 0.99}) < 1e-15);

    CHECK_THROWS_AS(image_boundary(f, 0.0, 128), RadiusOutOfRange);
    CHECK_THROWS_AS(image_boundary(f, 1.0, 128), RadiusOutOfRange);
    CHECK_THROWS_AS(image_boundary(f, 0.5, 63), InvalidArgument);
}

TEST_CASE("sense_preserving_check") {
    const auto grid = SamplingGrid::standard();
    SUBCASE("|u'|^2 - |v'|^2 = 1 - 4 c^2 r^2 for z + c conj(z)^2") {
        const auto rep = sense_preserving_check(corpus_map(2, 0.495), grid);
        CHECK(rep.verdict == Verdict::Pass);
        CHECK(rep.min_margin == doctest::Approx(1.0 - 4.0 * 0.495 * 0.495 * 0.9801).epsilon(1e-12));
    }
    SUBCASE("z + conj(z)^2 folds beyond |z| = 1/2") {
        const auto rep = sense_preserving_check(corpus_map(2, 1.0), grid);
        CHECK(rep.verdict == Verdict::Fail);
        CHECK(std::abs(rep.argmin_z) == doctest::Approx(0.99));
    }
    SUBCASE("analytic maps") {
        const auto rep = sense_preserving_check(HarmonicPolynomialMap::analytic(ComplexPolynomial::identity(3)), grid);
        CHECK(rep.min_margin == 1.0);
    }
}

TEST_CASE("starlike_diagnostic") {
    SUBCASE("identity disk image") {
        const auto d = starlike_diagnostic(
            image_boundary(HarmonicPolynomialMap::analytic(ComplexPolynomial::identity(2)), 0.5, 256));
        CHECK(d.verdict_starlike == Verdict::Pass);
        CHECK(d.winding == 1);
        CHECK(d.starlike_margin == doctest::Approx(2.0 * kPi / 256.0).epsilon(1e-12));
        CHECK(d.angle_tol == doctest::Approx(2.0 * kPi / 256.0 * 1e-3));
    }
    SUBCASE("Examples 2, 4, 6 are starlike at r = 0.999") {
        for (const auto& ex : corpus_examples()) {
            if (ex.claimed_shape != ClaimedShape::Starlike) continue;
            const auto d = starlike_diagnostic(image_boundary(ex.map, 0.999));
            INFO(ex.anchor);
            CHECK(d.verdict_starlike == Verdict::Pass);
            CHECK(d.winding == 1);
        }
    }
    SUBCASE("a doubly wound circle") {
        const BoundaryCurve twice{0.5, [] {
            std::vector<Complex> p(128);
            for (std::size_t j = 0; j < p.size(); ++j) p[j] = std::polar(0.25, 4.0 * kPi * j / 128.0);
            return p;
        }()};
        const auto e = starlike_diagnostic(twice);
        CHECK(e.winding == 2);
        CHECK(e.verdict_starlike == Verdict::Fail);
    }
    SUBCASE("origin on the curve") {
        BoundaryCurve c{0.5, std::vector<Complex>(64, Complex{1.0, 0.0})};
        c.points[10] = 0.0;
        CHECK_THROWS_AS(starlike_diagnostic(c), OriginOnCurve);
    }
    SUBCASE("a curve that backtracks in angle fails") {
        std::vector<Complex> p(512);
        for (std::size_t j = 0; j < p.size(); ++j) {
            const double t = 2.0 * kPi * j / 512.0;
            p[j] = std::polar(1.0, t) + 0.8 * std::polar(1.0, -4.0 * t);
        }
        const auto d = starlike_diagnostic(BoundaryCurve{0.5, p});
        CHECK(d.starlike_margin < 0.0);
        CHECK(d.verdict_starlike == Verdict::Fail);
    }
}

TEST_CASE("convex_diagnostic") {
    SUBCASE("circle") {
        const auto d = convex_diagnostic(
            image_boundary(HarmonicPolynomialMap::analytic(ComplexPolynomial::identity(2)), 0.9, 512));
        CHECK(d.verdict_convex == Verdict::Pass);
        CHECK(d.turning == 1);
        CHECK(d.convex_margin == doctest::Approx(2.0 * kPi / 512.0).epsilon(1e-9));
    }
    SUBCASE("Examples 3, 5, 7 are convex at r = 0.999") {
        for (const auto& ex : corpus_examples()) {
            if (ex.claimed_shape != ClaimedShape::Convex) continue;
            const auto d = shape_diagnostic(image_boundary(ex.map, 0.999));
            INFO(ex.anchor);
            CHECK(d.verdict_convex == Verdict::Pass);
            CHECK(d.verdict_starlike == Verdict::Pass);
        }
    }
    SUBCASE("Example 2 image is starlike but not convex") {
        const auto d = shape_diagnostic(image_boundary(corpus_examples()[0].map, 0.999));
        CHECK(d.verdict_starlike == Verdict::Pass);
        CHECK(d.verdict_convex == Verdict::Fail);
        CHECK(d.convex_margin < 0.0);
    }
    SUBCASE("convex curve not surrounding the origin") {
        std::vector<Complex> p(256);
        for (std::size_t j = 0; j < p.size(); ++j) p[j] = 3.0 + std::polar(1.0, 2.0 * kPi * j / 256.0);
        const auto d = convex_diagnostic(BoundaryCurve{0.5, p});
        CHECK(d.turning == 1);
        CHECK(d.winding == 0);
        CHECK(d.verdict_convex == Verdict::Fail);
    }
    SUBCASE("repeated samples") {
        std::vector<Complex> p(64);
        for (std::size_t j = 0; j < p.size(); ++j) p[j] = std::polar(1.0, 2.0 * kPi * j / 64.0);
        p[5] = p[4];
        CHECK_THROWS_AS(convex_diagnostic(BoundaryCurve{0.5, p}), DegenerateEdge);
    }
    CHECK_THROWS_AS(convex_diagnostic(BoundaryCurve{0.5, std::vector<Complex>(10, 1.0)}), InvalidArgument);
}

TEST_CASE("property: verdicts are stable between 4096 and 8192 samples") {
    for (const auto& ex : corpus_examples()) {
        const auto a = shape_diagnostic(image_boundary(ex.map, 0.999, 4096));
        const auto b = shape_diagnostic(image_boundary(ex.map, 0.999, 8192));
        INFO(ex.anchor);
        CHECK(a.verdict_starlike == b.verdict_starlike);
        CHECK(a.verdict_convex == b.verdict_convex);
        CHECK(a.winding == b.winding);
        CHECK(a.turning == b.turning);
    }
}

TEST_CASE("property: z + c conj(z)^m images are (m+1)-fold symmetric") {
    // f(e^{2 pi i/(m+1)} z) = e^{2 pi i/(m+1)} f(z).
    const std::size_t n = 3072;
    for (std::size_t m : {2u, 3u, 5u}) {
        const auto f = corpus_map(m, 0.1);
        const auto curve = image_boundary(f, 0.9, n);
        const std::size_t shift = n / (m + 1);
        const Complex rot = std::polar(1.0, 2.0 * kPi / static_cast<double>(m + 1));
        for (std::size_t j = 0; j < n; j += 7) {
            CHECK(std::abs(curve.points[(j + shift) % n] - rot * curve.points[j]) < 1e-12);
        }
    }
}

TEST_CASE("render_svg") {
    const auto f = corpus_examples()[1].map;
    RenderOptions opt;
    opt.title = "z + conj(z)^2 / 10 <test>";
    const std::string svg = render_svg(f, opt);

    CHECK(svg.rfind("<?xml", 0) == 0);
    CHECK(svg.find("<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\"") != std::string::npos);
    CHECK(svg.find("<title>z + conj(z)^2 / 10 &lt;test&gt;</title>") != std::string::npos);
    CHECK(count(svg, "class=\"circle\"") == 5);
    CHECK(count(svg, "class=\"ray\"") == 24);
    CHECK(svg.find("data-radius=\"0.999000\"") != std::string::npos);
    CHECK(svg.find("-0.000000") == std::string::npos);
    CHECK(svg.find("nan") == std::string::npos);
    CHECK(svg.substr(svg.size() - 7) == "</svg>\n");

    // Every path coordinate carries exactly six decimals.
    const std::regex path_data(R"re( d="([^"]*)")re");
    const std::regex number(R"(-?\d+\.(\d+))");
    std::size_t numbers = 0;
    for (auto p = std::sregex_iterator(svg.begin(), svg.end(), path_data); p != std::sregex_iterator(); ++p) {
        const std::string d = (*p)[1];
        for (auto it = std::sregex_iterator(d.begin(), d.end(), number); it != std::sregex_iterator(); ++it) {
            REQUIRE((*it)[1].length() == 6);
            ++numbers;
        }
    }
    CHECK(numbers == 2 * (5 * 720 + 24 * 201));

    set_worker_threads(1);
    const std::string one = render_svg(f, opt);
    set_worker_threads(4);
    const std::string four = render_svg(f, opt);
    set_worker_threads(0);
    CHECK(one == svg);
    CHECK(four == svg);

    RenderOptions bad;
    bad.radii = {0.5, 0.4};
    CHECK_THROWS_AS(render_svg(f, bad), InvalidArgument);
    bad.radii = {1.0};
    CHECK_THROWS_AS(render_svg(f, bad), InvalidArgument);
}
