// Acceptance criteria 1-10: one PASS/FAIL line each, nonzero exit on any FAIL.

#include <algorithm>
#include <array>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <limits>
#include <sstream>
#include <string>
#include <unistd.h>
#include <vector>

#include "hctc/class_constructs.hpp"
#include "hctc/cli.hpp"
#include "hctc/corpus.hpp"
#include "hctc/geometry.hpp"
#include "hctc/grid.hpp"
#include "hctc/parallel.hpp"
#include "hctc/series.hpp"
#include "hctc/theorems.hpp"

using namespace hctc;

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

struct Outcome {
    bool pass = false;
    std::string measured;
};

using Clock = std::chrono::steady_clock;

double elapsed_ms(Clock::time_point start) {
    return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

std::string fmt(const char* format, auto... args) {
    char buf[512];
    std::snprintf(buf, sizeof buf, format, args...);
    return buf;
}

Outcome identity_product() {
    const auto start = Clock::now();
    double worst = 0.0;
    for (int k = 1; k <= 8; ++k) {
        const auto params = ClassParams::identity_phi(k, 0.0, 64);
        const auto prod = rotation_product(params, 64);
        for (std::size_t n = 0; n <= prod.degree(); ++n) {
            const Complex expected = n == static_cast<std::size_t>(k) ? Complex{1.0} : Complex{};
            worst = std::max(worst, std::abs(prod[n] - expected));
        }
    }
    const double ms = elapsed_ms(start);
    return {worst == 0.0 && ms < 1.0,
            fmt("k = 1..8, N = 64: max coefficient error %.3g (exact required), %.3f ms (< 1 ms)", worst, ms)};
}

Outcome corpus_membership() {
    const auto examples = corpus_examples();
    const auto start = Clock::now();
    const auto grid = SamplingGrid::up_to(0.99);
    bool ok = true;
    double worst = 0.0;
    for (const auto& ex : examples) {
        const ClassContext ctx(ex.params);
        const auto rep = check_membership(ex.map, ctx, grid);
        const double expected = example1_margin(ex.power, ex.params.gamma(), 0.99);
        worst = std::max(worst, std::abs(rep.min_margin - expected));
        ok = ok && rep.verdict == Verdict::Pass;
    }
    const double ms = elapsed_ms(start);
    return {ok && worst <= 1e-9 && ms < 1000.0,
            fmt("%zu maps PASS: %s, max |min margin - closed form| %.3g (<= 1e-9), %.1f ms (< 1 s)",
                examples.size(), ok ? "yes" : "no", worst, ms)};
}

Outcome extremal_sharpness() {
    double worst = 0.0;
    for (std::size_t m : {2u, 3u, 5u}) {
        for (double gamma : {0.0, 0.01, 0.5, 0.8}) {
            const auto rep = necessary_coeff_check(extremal_map(m, gamma), gamma);
            worst = std::max(worst, std::abs(rep.per_index[m - 2].slack));
        }
    }
    return {worst <= 1e-15, fmt("max |slack| at the extremal index %.3g (<= 1e-15)", worst)};
}

Outcome distortion_identity() {
    const auto start = Clock::now();
    double worst = 0.0;
    for (double gamma : {0.0, 0.01, 0.5, 0.8}) {
        for (int i = 1; i <= 9; ++i) {
            const auto e = distortion_envelope(gamma, 0.1 * i, 400);
            worst = std::max({worst, std::abs(e.lower_modulus - e.lower_modulus_series),
                              std::abs(e.upper_modulus - e.upper_modulus_series),
                              std::abs(e.lower_derivative - e.lower_derivative_series),
                              std::abs(e.upper_derivative - e.upper_derivative_series)});
        }
    }
    const double ms = elapsed_ms(start);
    return {worst <= 1e-8 && ms < 10.0,
            fmt("400-term series vs closed form, max error %.3g (<= 1e-8), %.3f ms (< 10 ms)", worst, ms)};
}

double duality_error(std::size_t mesh_size) {
    const auto grid = SamplingGrid::standard();
    const auto mesh = unit_circle_mesh(mesh_size);
    double worst = 0.0;
    for (const auto& ex : corpus_examples()) {
        const ClassContext ctx(ex.params);
        SeededUniform rng(11);
        for (int s = 0; s < 32; ++s) {
            const Complex z = grid.point(rng.index(0, grid.size() - 1));
            double best = kInf;
            for (Complex eps : mesh) best = std::min(best, analytic_margin(slice(ex.map, eps), ctx, z));
            worst = std::max(worst, std::abs(best - harmonic_margin(ex.map, ctx, z)));
        }
    }
    return worst;
}

Outcome slice_duality() {
    const double coarse = duality_error(256);
    const double fine = duality_error(4096);
    return {coarse <= 1e-4 && fine <= 1e-7,
            fmt("32 points per map, 256 mesh %.3g (<= 1e-4), 4096 mesh %.3g (<= 1e-7)", coarse, fine)};
}

Outcome random_soundness() {
    SeededUniform rng(12);
    const auto grid = SamplingGrid::standard();
    std::size_t pass = 0;
    double lowest = kInf;
    for (int i = 0; i < 100; ++i) {
        const auto member = random_sufficient_member(rng);
        const ClassContext ctx(member.params);
        const bool sufficient = sufficient_coeff_check(member.map, ctx).verdict == Verdict::Pass;
        const auto rep = check_membership(member.map, ctx, grid);
        lowest = std::min(lowest, rep.min_margin);
        if (sufficient && rep.verdict == Verdict::Pass) ++pass;
    }
    return {pass == 100, fmt("%zu/100 seeded sufficient maps PASS membership, lowest margin %.6g", pass, lowest)};
}

double margin_at(const ComplexPolynomial& du, const ComplexPolynomial& dv, const ClassContext& ctx,
                 Complex z) {
    if (z == Complex{}) return 1.0 - ctx.gamma();
    const Complex q = ctx.reduced_denominator(z);
    return (eval(du, z) / q).real() - ctx.gamma() - std::abs(eval(dv, z) / q);
}

Outcome superposition() {
    SeededUniform rng(13);
    const auto grid = SamplingGrid::standard();
    double worst = kInf;
    for (int trial = 0; trial < 50; ++trial) {
        const auto member = random_sufficient_member(rng);
        const ClassContext ctx(member.params);
        const auto second = random_sufficient_map(rng, ctx);
        const double s = rng.next();
        const std::array<HarmonicPolynomialMap, 2> maps{member.map, second};
        const std::array<double, 2> w{s, 1.0 - s};
        const auto g = convex_combine(maps, w);
        const auto du1 = derivative(member.map.u()), dv1 = derivative(member.map.v());
        const auto du2 = derivative(second.u()), dv2 = derivative(second.v());
        const auto dug = derivative(g.u()), dvg = derivative(g.v());
        for (std::size_t i = 0; i < grid.size(); ++i) {
            const Complex z = grid.point(i);
            const double lhs = margin_at(dug, dvg, ctx, z);
            const double rhs = s * margin_at(du1, dv1, ctx, z) + (1.0 - s) * margin_at(du2, dv2, ctx, z);
            worst = std::min(worst, lhs - rhs);
        }
    }
    return {worst >= -1e-12,
            fmt("50 pairs, min margin(combination) - weighted margins %.3g (>= -1e-12)", worst)};
}

Outcome herglotz() {
    const auto grid = SamplingGrid::standard();
    bool ok = true;
    double min_re = kInf, p0 = 0.0, max_coeff = 0.0;
    for (const auto& ex : corpus_examples()) {
        const ClassContext ctx(ex.params);
        for (Complex eps : unit_circle_mesh(8)) {
            const auto rep = herglotz_diagnostic(slice(ex.map, eps), ctx, grid, 32);
            ok = ok && rep.positivity.verdict == Verdict::Pass;
            min_re = std::min(min_re, rep.positivity.min_margin);
            p0 = std::max(p0, rep.p0_error);
            max_coeff = std::max(max_coeff, rep.max_abs_coefficient);
        }
    }
    return {ok && min_re > 0.0 && p0 <= 1e-12 && max_coeff <= 2.0 + kCaratheodorySlack,
            fmt("6 maps x 8 slices: min Re P %.6g (> 0), |P(0) - 1| %.3g (<= 1e-12), max |p_m| %.10g (<= 2 + 1e-9)",
                min_re, p0, max_coeff)};
}

Outcome figure_shapes() {
    const auto start = Clock::now();
    std::size_t pass = 0, total = 0;
    std::string failed;
    for (const auto& ex : corpus_examples()) {
        const auto d = shape_diagnostic(image_boundary(ex.map, 0.999, 4096));
        const bool starlike = ex.claimed_shape == ClaimedShape::Starlike;
        const Verdict v = starlike ? d.verdict_starlike : d.verdict_convex;
        ++total;
        if (v == Verdict::Pass) ++pass; else failed += " " + ex.anchor;
        if (ex.anchor == "Example 2") {
            ++total;
            if (d.verdict_convex == Verdict::Fail) ++pass; else failed += " Example 2 (convex)";
        }
    }
    const double ms = elapsed_ms(start);
    return {pass == total && total == 7 && ms < 1000.0,
            fmt("%zu/%zu shape claims hold at r = 0.999, n = 4096%s%s, %.1f ms (< 1 s)", pass, total,
                failed.empty() ? "" : "; failed:", failed.c_str(), ms)};
}

std::string map_document(const CorpusEntry& ex) {
    cli::Json doc;
    doc["label"] = ex.anchor;
    auto coeffs = [](const ComplexPolynomial& p) {
        cli::Json arr = cli::Json::array();
        std::size_t top = 0;
        for (std::size_t n = 0; n <= p.degree(); ++n) if (p[n] != Complex{}) top = n;
        for (std::size_t n = 0; n <= std::max<std::size_t>(top, 1); ++n) arr.push_back({p[n].real(), p[n].imag()});
        return arr;
    };
    doc["u"] = coeffs(ex.map.u());
    doc["v"] = coeffs(ex.map.v());
    doc["phi"] = coeffs(ex.params.phi());
    doc["k"] = ex.params.k();
    doc["gamma"] = ex.params.gamma();
    return cli::canonical_json(doc);
}

struct RunResult {
    int code;
    std::string out;
};

RunResult run_cli(const std::vector<std::string>& args) {
    std::ostringstream out, err;
    const int code = cli::run(args, out, err);
    return {code, out.str()};
}

Outcome cli_determinism() {
    const auto dir = std::filesystem::temp_directory_path() / ("hctc_acceptance_" + std::to_string(::getpid()));
    std::filesystem::create_directories(dir);
    std::size_t identical = 0, total = 0;
    bool codes_ok = true;
    for (const auto& ex : corpus_examples()) {
        const auto path = (dir / (ex.anchor.substr(ex.anchor.find(' ') + 1) + ".json")).string();
        std::ofstream(path, std::ios::binary) << map_document(ex);
        for (const char* cmd : {"check", "render"}) {
            const auto a = run_cli({cmd, path});
            const auto b = run_cli({cmd, path});
            const auto t1 = run_cli({"--threads", "1", cmd, path});
            const auto t4 = run_cli({"--threads", "4", cmd, path});
            codes_ok = codes_ok && a.code == 0 && b.code == 0 && t1.code == 0 && t4.code == 0;
            total += 3;
            identical += (a.out == b.out) + (a.out == t1.out) + (a.out == t4.out);
        }
    }
    set_worker_threads(0);
    std::filesystem::remove_all(dir);
    return {codes_ok && identical == total,
            fmt("check and render on 6 maps: %zu/%zu output pairs byte-identical (repeat, threads 1, threads 4), exit codes %s",
                identical, total, codes_ok ? "0" : "unexpected")};
}

}  // namespace

int main() {
    const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria{
        {"phi_k identity product", identity_product},
        {"corpus membership", corpus_membership},
        {"extremal coefficient sharpness", extremal_sharpness},
        {"distortion envelope identity", distortion_identity},
        {"slice margin duality", slice_duality},
        {"sufficient condition soundness", random_soundness},
        {"convex combination superposition", superposition},
        {"herglotz positivity", herglotz},
        {"figure shapes", figure_shapes},
        {"cli determinism", cli_determinism},
    };
    int failures = 0;
    int index = 0;
    for (const auto& [name, run] : criteria) {
        ++index;
        Outcome o;
        try {
            o = run();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        if (!o.pass) ++failures;
        std::printf("%s  %2d  %-34s %s\n", o.pass ? "PASS" : "FAIL", index, name, o.measured.c_str());
        std::fflush(stdout);
    }
    std::printf("%d/%zu criteria passed\n", index - failures, criteria.size());
    return failures == 0 ? 0 : 1;
}
