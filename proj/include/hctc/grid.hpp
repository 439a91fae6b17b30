#pragma once

// Disk sampling and the margin report shared by every grid certification.

#include <cstddef>
#include <functional>
#include <string_view>
#include <vector>

#include "hctc/series.hpp"

namespace hctc {

enum class Verdict { Pass, Fail, Inconclusive };

std::string_view to_string(Verdict v) noexcept;

/// PASS above +tol, FAIL below -tol, INCONCLUSIVE in between.
Verdict classify_margin(double min_margin, double tol) noexcept;

/// Concentric circles |z| = r_i, each sampled at `angles` equispaced points
/// starting at arg z = 0. Every certification also evaluates z = 0.
class SamplingGrid {
public:
    static constexpr std::size_t kMinAngles = 16;
    static constexpr std::size_t kDefaultAngles = 2048;
    static constexpr double kDefaultMarginTol = 1e-9;

    /// Throws InvalidArgument unless radii are nonempty, strictly increasing
    /// and inside (0, 1), angles >= 16 and margin_tol > 0.
    SamplingGrid(std::vector<double> radii, std::size_t angles,
                 double margin_tol = kDefaultMarginTol);

    /// Radii {0.1, ..., 0.9, 0.95, 0.99}, 2048 angles, tolerance 1e-9.
    static SamplingGrid standard();

    /// Standard ladder cut below r_max, with r_max appended as the outer circle.
    static SamplingGrid up_to(double r_max, std::size_t angles = kDefaultAngles,
                              double margin_tol = kDefaultMarginTol);

    const std::vector<double>& radii() const noexcept { return radii_; }
    std::size_t angles() const noexcept { return angles_; }
    double margin_tol() const noexcept { return margin_tol_; }
    double r_max() const noexcept { return radii_.back(); }

    std::size_t size() const noexcept { return radii_.size() * angles_; }

    /// Point with flat index i = radius_index * angles + angle_index.
    Complex point(std::size_t i) const;
    Complex point(std::size_t radius_index, std::size_t angle_index) const;

private:
    std::vector<double> radii_;
    std::size_t angles_;
    double margin_tol_;
};

struct RadiusMinimum {
    double radius;
    double min_margin;
};

struct MarginReport {
    Verdict verdict = Verdict::Inconclusive;
    double min_margin = 0.0;
    Complex argmin_z{};
    std::vector<RadiusMinimum> per_radius_min;
    /// Scope of the verdict: the outermost circle sampled.
    double r_max = 0.0;
    double margin_tol = 0.0;
};

/// Evaluates `margin` at z = 0 and at every grid point (concurrently), then
/// reduces sequentially in (radius, angle) order so the witness is the first
/// minimizer in lexicographic order.
MarginReport scan_grid(const SamplingGrid& grid, const std::function<double(Complex)>& margin);

/// `count` equispaced unimodular points e^{2 pi i j / count}.
std::vector<Complex> unit_circle_mesh(std::size_t count);

/// e^{2 pi i num / den} with the index reduced modulo den first, so exact
/// multiples of a full turn come out as exactly 1.
Complex root_of_unity(long long num, long long den);

}  // namespace hctc
