#include "hctc/geometry.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>

#include "hctc/errors.hpp"
#include "hctc/parallel.hpp"

namespace hctc {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

double angle_tolerance(std::size_t n) { return kTwoPi / static_cast<double>(n) * 1e-3; }

int round_turns(double total_angle) {
    return static_cast<int>(std::lround(total_angle / kTwoPi));
}

Verdict shape_verdict(bool topology_ok, double margin, double tol) {
    return topology_ok ? classify_margin(margin, tol) : Verdict::Fail;
}

void require_samples(std::size_t n) {
    if (n < kMinCurveSamples) {
        throw InvalidArgument("curves need at least 64 samples, got " + std::to_string(n));
    }
}

// Sum of principal arg increments p_j -> p_{j+1} around the closed polygon;
// the smallest increment is written to min_step.
double total_arg_change(const std::vector<Complex>& p, double* min_step) {
    const std::size_t n = p.size();
    double total = 0.0;
    double lowest = std::numeric_limits<double>::infinity();
    for (std::size_t j = 0; j < n; ++j) {
        const double step = std::arg(p[(j + 1) % n] / p[j]);
        total += step;
        lowest = std::min(lowest, step);
    }
    if (min_step) *min_step = lowest;
    return total;
}

bool touches_origin(const std::vector<Complex>& p) {
    return std::any_of(p.begin(), p.end(), [](Complex w) { return std::abs(w) < kOriginGuard; });
}

std::string fixed6(double x) {
    char buf[64];
    auto res = std::to_chars(buf, buf + sizeof buf, x, std::chars_format::fixed, 6);
    std::string s(buf, res.ptr);
    if (s == "-0.000000") s = "0.000000";
    return s;
}

std::string xml_escape(const std::string& text) {
    std::string out;
    for (char c : text) {
        switch (c) {
            case '&': out += "&amp;"; break;
            case '<': out += "&lt;"; break;
            case '>': out += "&gt;"; break;
            case '"': out += "&quot;"; break;
            default: out += c;
        }
    }
    return out;
}

}  // namespace

BoundaryCurve image_boundary(const HarmonicPolynomialMap& f, double r, std::size_t n) {
    if (!(r > 0.0 && r < 1.0)) {
        throw RadiusOutOfRange("image_boundary: radius " + std::to_string(r) + " outside (0, 1)");
    }
    require_samples(n);
    BoundaryCurve curve{r, std::vector<Complex>(n)};
    parallel_for(n, [&](std::size_t j) {
        const double theta = kTwoPi * static_cast<double>(j) / static_cast<double>(n);
        curve.points[j] = eval_harmonic(f, std::polar(r, theta));
    });
    return curve;
}

MarginReport sense_preserving_check(const HarmonicPolynomialMap& f, const SamplingGrid& grid) {
    const ComplexPolynomial du = derivative(f.u());
    const ComplexPolynomial dv = derivative(f.v());
    return scan_grid(grid, [&](Complex z) { return std::norm(eval(du, z)) - std::norm(eval(dv, z)); });
}

ShapeDiagnostic starlike_diagnostic(const BoundaryCurve& curve) {
    require_samples(curve.points.size());
    if (touches_origin(curve.points)) {
        throw OriginOnCurve("starlike_diagnostic: image curve passes within 1e-9 of the origin");
    }
    ShapeDiagnostic d;
    d.angle_tol = angle_tolerance(curve.points.size());
    d.winding = round_turns(total_arg_change(curve.points, &d.starlike_margin));
    d.verdict_starlike = shape_verdict(d.winding == 1, d.starlike_margin, d.angle_tol);
    return d;
}

ShapeDiagnostic convex_diagnostic(const BoundaryCurve& curve) {
    const auto& p = curve.points;
    const std::size_t n = p.size();
    require_samples(n);

    std::vector<Complex> edges(n);
    for (std::size_t j = 0; j < n; ++j) {
        edges[j] = p[(j + 1) % n] - p[j];
        if (std::abs(edges[j]) < kEdgeGuard) {
            throw DegenerateEdge("convex_diagnostic: samples " + std::to_string(j) + " and " +
                                 std::to_string((j + 1) % n) + " coincide");
        }
    }

    ShapeDiagnostic d;
    d.angle_tol = angle_tolerance(n);
    d.turning = round_turns(total_arg_change(edges, &d.convex_margin));
    d.winding = touches_origin(p) ? 0 : round_turns(total_arg_change(p, nullptr));
    d.verdict_convex = shape_verdict(d.turning == 1 && d.winding == 1, d.convex_margin, d.angle_tol);
    return d;
}

ShapeDiagnostic shape_diagnostic(const BoundaryCurve& curve) {
    ShapeDiagnostic d = convex_diagnostic(curve);
    const ShapeDiagnostic s = starlike_diagnostic(curve);
    d.starlike_margin = s.starlike_margin;
    d.verdict_starlike = s.verdict_starlike;
    return d;
}

std::string render_svg(const HarmonicPolynomialMap& f, const RenderOptions& options) {
    const auto& radii = options.radii;
    if (radii.empty()) throw InvalidArgument("render_svg: no radii given");
    for (std::size_t i = 0; i < radii.size(); ++i) {
        if (!(radii[i] > 0.0 && radii[i] < 1.0) || (i > 0 && !(radii[i] > radii[i - 1]))) {
            throw InvalidArgument("render_svg: radii must be ascending inside (0, 1)");
        }
    }
    if (options.circle_samples < 16 || options.ray_samples < 2) {
        throw InvalidArgument("render_svg: too few samples per path");
    }

    // Polylines in image coordinates; SVG y grows downward so Im is negated.
    std::vector<std::vector<Complex>> circles, rays;
    for (double r : radii) {
        std::vector<Complex> pts(options.circle_samples);
        parallel_for(pts.size(), [&](std::size_t j) {
            const double theta = kTwoPi * static_cast<double>(j) /
                                 static_cast<double>(options.circle_samples);
            pts[j] = eval_harmonic(f, std::polar(r, theta));
        });
        circles.push_back(std::move(pts));
    }
    const double r_outer = radii.back();
    for (std::size_t k = 0; k < options.rays; ++k) {
        const double theta = kTwoPi * static_cast<double>(k) / static_cast<double>(options.rays);
        std::vector<Complex> pts(options.ray_samples + 1);
        parallel_for(pts.size(), [&](std::size_t j) {
            const double t = r_outer * static_cast<double>(j) /
                             static_cast<double>(options.ray_samples);
            pts[j] = eval_harmonic(f, std::polar(t, theta));
        });
        rays.push_back(std::move(pts));
    }

    double min_x = 0.0, max_x = 0.0, min_y = 0.0, max_y = 0.0;
    for (const auto* group : {&circles, &rays}) {
        for (const auto& path : *group) {
            for (Complex w : path) {
                min_x = std::min(min_x, w.real());
                max_x = std::max(max_x, w.real());
                min_y = std::min(min_y, -w.imag());
                max_y = std::max(max_y, -w.imag());
            }
        }
    }
    const double span = std::max({max_x - min_x, max_y - min_y, 1e-6});
    const double pad = 0.05 * span;
    const double stroke = 0.005 * (span + 2.0 * pad);

    auto path_data = [](const std::vector<Complex>& pts, bool closed) {
        std::string d;
        for (std::size_t j = 0; j < pts.size(); ++j) {
            d += (j == 0) ? "M" : " L";
            d += fixed6(pts[j].real());
            d += ' ';
            d += fixed6(-pts[j].imag());
        }
        if (closed) d += " Z";
        return d;
    };

    std::ostringstream out;
    out << "<?xml version=\"1.0\" encoding=\"UTF-8\" standalone=\"no\"?>\n"
        << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"800\" height=\"800\""
        << " viewBox=\"" << fixed6(min_x - pad) << ' ' << fixed6(min_y - pad) << ' '
        << fixed6(max_x - min_x + 2.0 * pad) << ' ' << fixed6(max_y - min_y + 2.0 * pad)
        << "\">\n";
    if (!options.title.empty()) out << "<title>" << xml_escape(options.title) << "</title>\n";
    out << "<g fill=\"none\" stroke-linejoin=\"round\" stroke-width=\"" << fixed6(stroke) << "\">\n";
    for (std::size_t i = 0; i < circles.size(); ++i) {
        out << "<path class=\"circle\" data-radius=\"" << fixed6(radii[i])
            << "\" stroke=\"#1f4e79\" d=\"" << path_data(circles[i], true) << "\"/>\n";
    }
    for (const auto& ray : rays) {
        out << "<path class=\"ray\" stroke=\"#b03a2e\" d=\"" << path_data(ray, false) << "\"/>\n";
    }
    out << "</g>\n</svg>\n";
    return out.str();
}

}  // namespace hctc
