#include "hctc/grid.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "hctc/errors.hpp"
#include "hctc/parallel.hpp"

namespace hctc {

std::string_view to_string(Verdict v) noexcept {
    switch (v) {
        case Verdict::Pass: return "PASS";
        case Verdict::Fail: return "FAIL";
        case Verdict::Inconclusive: return "INCONCLUSIVE";
    }
    return "INCONCLUSIVE";
}

Verdict classify_margin(double min_margin, double tol) noexcept {
    if (min_margin > tol) return Verdict::Pass;
    if (min_margin < -tol) return Verdict::Fail;
    return Verdict::Inconclusive;
}

SamplingGrid::SamplingGrid(std::vector<double> radii, std::size_t angles, double margin_tol)
    : radii_(std::move(radii)), angles_(angles), margin_tol_(margin_tol) {
    if (radii_.empty()) throw InvalidArgument("SamplingGrid: radius ladder is empty");
    for (std::size_t i = 0; i < radii_.size(); ++i) {
        const double r = radii_[i];
        if (!(r > 0.0 && r < 1.0)) {
            throw InvalidArgument("SamplingGrid: radius " + std::to_string(r) +
                                  " outside (0, 1)");
        }
        if (i > 0 && !(r > radii_[i - 1])) {
            throw InvalidArgument("SamplingGrid: radii must be strictly increasing");
        }
    }
    if (angles_ < kMinAngles) {
        throw InvalidArgument("SamplingGrid: need at least 16 angles per circle");
    }
    if (!(margin_tol_ > 0.0) || !std::isfinite(margin_tol_)) {
        throw InvalidArgument("SamplingGrid: margin tolerance must be positive");
    }
}

SamplingGrid SamplingGrid::standard() {
    return SamplingGrid({0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9, 0.95, 0.99},
                        kDefaultAngles, kDefaultMarginTol);
}

SamplingGrid SamplingGrid::up_to(double r_max, std::size_t angles, double margin_tol) {
    if (!(r_max > 0.0 && r_max < 1.0)) {
        throw InvalidArgument("SamplingGrid: r_max must lie in (0, 1)");
    }
    const SamplingGrid ladder = standard();
    std::vector<double> radii;
    for (double r : ladder.radii()) {
        if (r < r_max) radii.push_back(r);
    }
    radii.push_back(r_max);
    return SamplingGrid(std::move(radii), angles, margin_tol);
}

Complex SamplingGrid::point(std::size_t i) const {
    return point(i / angles_, i % angles_);
}

Complex SamplingGrid::point(std::size_t radius_index, std::size_t angle_index) const {
    const double theta = 2.0 * std::numbers::pi * static_cast<double>(angle_index) /
                         static_cast<double>(angles_);
    return std::polar(radii_.at(radius_index), theta);
}

MarginReport scan_grid(const SamplingGrid& grid, const std::function<double(Complex)>& margin) {
    std::vector<double> values(grid.size());
    parallel_for(grid.size(), [&](std::size_t i) { values[i] = margin(grid.point(i)); });

    MarginReport report;
    report.r_max = grid.r_max();
    report.margin_tol = grid.margin_tol();
    report.min_margin = margin(Complex{});
    report.argmin_z = Complex{};

    const std::size_t a = grid.angles();
    for (std::size_t ri = 0; ri < grid.radii().size(); ++ri) {
        double circle_min = values[ri * a];
        std::size_t circle_arg = 0;
        for (std::size_t j = 1; j < a; ++j) {
            if (values[ri * a + j] < circle_min) {
                circle_min = values[ri * a + j];
                circle_arg = j;
            }
        }
        report.per_radius_min.push_back({grid.radii()[ri], circle_min});
        if (circle_min < report.min_margin) {
            report.min_margin = circle_min;
            report.argmin_z = grid.point(ri, circle_arg);
        }
    }
    report.verdict = classify_margin(report.min_margin, grid.margin_tol());
    return report;
}

Complex root_of_unity(long long num, long long den) {
    if (den <= 0) throw InvalidArgument("root_of_unity: denominator must be positive");
    long long j = num % den;
    if (j < 0) j += den;
    if (j == 0) return {1.0, 0.0};
    if (4 * j == den) return {0.0, 1.0};
    if (2 * j == den) return {-1.0, 0.0};
    if (4 * j == 3 * den) return {0.0, -1.0};
    return std::polar(1.0, 2.0 * std::numbers::pi * static_cast<double>(j) /
                               static_cast<double>(den));
}

std::vector<Complex> unit_circle_mesh(std::size_t count) {
    std::vector<Complex> mesh;
    mesh.reserve(count);
    for (std::size_t j = 0; j < count; ++j) {
        mesh.push_back(root_of_unity(static_cast<long long>(j), static_cast<long long>(count)));
    }
    return mesh;
}

}  // namespace hctc
