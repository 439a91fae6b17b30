#pragma once

// Image curves of circles |z| = r under a harmonic map, with discrete
// starlikeness (about the origin) and convexity diagnostics.

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "hctc/grid.hpp"
#include "hctc/series.hpp"

namespace hctc {

/// f(r e^{2 pi i j / n}) for j = 0..n-1; implicitly closed.
struct BoundaryCurve {
    double radius = 0.0;
    std::vector<Complex> points;
};

inline constexpr std::size_t kMinCurveSamples = 64;
inline constexpr std::size_t kDefaultCurveSamples = 4096;
inline constexpr double kOriginGuard = 1e-9;
inline constexpr double kEdgeGuard = 1e-14;

struct ShapeDiagnostic {
    /// min_j of the principal arg increment arg(p_{j+1} / p_j).
    double starlike_margin = 0.0;
    /// min_j of the tangent turning arg(e_{j+1} / e_j), e_j = p_{j+1} - p_j.
    double convex_margin = 0.0;
    /// Winding number of the curve about the origin.
    int winding = 0;
    /// Turning number of the tangent.
    int turning = 0;
    /// (2 pi / n) * 1e-3; margins within +-angle_tol are INCONCLUSIVE.
    double angle_tol = 0.0;
    Verdict verdict_starlike = Verdict::Inconclusive;
    Verdict verdict_convex = Verdict::Inconclusive;
};

/// Throws RadiusOutOfRange unless 0 < r < 1, InvalidArgument if n < 64.
BoundaryCurve image_boundary(const HarmonicPolynomialMap& f, double r,
                             std::size_t n = kDefaultCurveSamples);

/// min over the grid (and the origin) of |u'|^2 - |v'|^2.
MarginReport sense_preserving_check(const HarmonicPolynomialMap& f, const SamplingGrid& grid);

/// Fills the starlike fields and the winding number. Throws OriginOnCurve
/// if a sample lies within 1e-9 of 0.
ShapeDiagnostic starlike_diagnostic(const BoundaryCurve& curve);

/// Fills the convex fields, the turning number and (when the origin is off
/// the curve) the winding number; a convex PASS also needs winding 1.
/// Throws DegenerateEdge if consecutive samples coincide within 1e-14.
ShapeDiagnostic convex_diagnostic(const BoundaryCurve& curve);

/// Both diagnostics on one curve.
ShapeDiagnostic shape_diagnostic(const BoundaryCurve& curve);

struct RenderOptions {
    std::vector<double> radii{0.2, 0.4, 0.6, 0.8, 0.999};
    std::size_t rays = 24;
    std::size_t circle_samples = 720;
    std::size_t ray_samples = 200;
    std::string title;
};

/// SVG 1.1 document with one path per circle image and one per ray image.
/// Output is a pure function of the inputs (fixed 6-decimal formatting).
/// Throws InvalidArgument unless radii are ascending inside (0, 1).
std::string render_svg(const HarmonicPolynomialMap& f, const RenderOptions& options = {});

}  // namespace hctc
