#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <sstream>

#include "hctc/cli.hpp"
#include "hctc/corpus.hpp"
#include "hctc/errors.hpp"
#include "hctc/geometry.hpp"
#include "hctc/theorems.hpp"

namespace hctc::cli {

namespace {

constexpr double kShapeRadius = 0.999;
constexpr double kInf = std::numeric_limits<double>::infinity();

Json point_json(Complex z) { return Json::array({z.real(), z.imag()}); }

std::string verdict_name(Verdict v) { return std::string(to_string(v)); }

Json error_entry(const std::string& name, const Error& e) {
    Json j;
    j["name"] = name;
    j["verdict"] = "ERROR";
    j["error"] = e.what();
    return j;
}

struct Entry {
    Json json;
    std::optional<Verdict> verdict;  // empty when the check raised
};

template <class Fn>
Entry guarded(const std::string& name, Fn&& fn) {
    try {
        return fn();
    } catch (const DenominatorNearZero& e) {
        return {error_entry(name, e), std::nullopt};
    } catch (const OriginOnCurve& e) {
        return {error_entry(name, e), std::nullopt};
    } catch (const DegenerateEdge& e) {
        return {error_entry(name, e), std::nullopt};
    }
}

Entry margin_entry(const std::string& name, const MarginReport& rep) {
    Json j;
    j["name"] = name;
    const Json margin = margin_json(rep);
    for (const auto& [key, value] : margin.items()) j[key] = value;
    return {std::move(j), rep.verdict};
}

Json envelope_row(const DistortionEnvelope& e) {
    Json j;
    j["radius"] = e.radius;
    j["lower_modulus"] = e.lower_modulus;
    j["upper_modulus"] = e.upper_modulus;
    j["lower_derivative"] = e.lower_derivative;
    j["upper_derivative"] = e.upper_derivative;
    return j;
}

Entry distortion_entry(const MapDefinition& def, const SamplingGrid& grid) {
    const auto& f = def.map;
    const ComplexPolynomial du = derivative(f.u());
    const ComplexPolynomial dv = derivative(f.v());
    Json rows = Json::array();
    bool inside = true;
    for (std::size_t ri = 0; ri < grid.radii().size(); ++ri) {
        const auto env = distortion_envelope(def.params.gamma(), grid.radii()[ri], 2);
        double lo_mod = kInf, hi_mod = 0.0, lo_der = kInf, hi_der = 0.0;
        for (std::size_t aj = 0; aj < grid.angles(); ++aj) {
            const Complex z = grid.point(ri, aj);
            const double modulus = std::abs(eval_harmonic(f, z));
            const double a = std::abs(eval(du, z));
            const double b = std::abs(eval(dv, z));
            lo_mod = std::min(lo_mod, modulus);
            hi_mod = std::max(hi_mod, modulus);
            lo_der = std::min(lo_der, a - b);
            hi_der = std::max(hi_der, a + b);
        }
        Json row = envelope_row(env);
        row["observed_min_modulus"] = lo_mod;
        row["observed_max_modulus"] = hi_mod;
        row["observed_min_derivative"] = lo_der;
        row["observed_max_derivative"] = hi_der;
        const bool ok = lo_mod >= env.lower_modulus && hi_mod <= env.upper_modulus &&
                        lo_der >= env.lower_derivative && hi_der <= env.upper_derivative;
        row["within_envelope"] = ok;
        inside = inside && ok;
        rows.push_back(std::move(row));
    }
    Json j;
    j["name"] = "distortion";
    j["informational"] = true;
    j["within_envelope"] = inside;
    j["rows"] = std::move(rows);
    return {std::move(j), std::nullopt};
}

Entry shape_entry(const MapDefinition& def) {
    const auto d = shape_diagnostic(image_boundary(def.map, kShapeRadius, kDefaultCurveSamples));
    Json j;
    j["name"] = "shape";
    j["informational"] = true;
    j["radius"] = kShapeRadius;
    j["samples"] = kDefaultCurveSamples;
    j["starlike_margin"] = d.starlike_margin;
    j["convex_margin"] = d.convex_margin;
    j["winding"] = d.winding;
    j["turning"] = d.turning;
    j["angle_tol"] = d.angle_tol;
    j["verdict_starlike"] = verdict_name(d.verdict_starlike);
    j["verdict_convex"] = verdict_name(d.verdict_convex);
    return {std::move(j), std::nullopt};
}

// FAIL if any certificate of non-membership fired; PASS if membership is
// certified (grid scan or coefficient sufficiency) on a valid class
// instance; INCONCLUSIVE otherwise, including any check that raised.
Verdict combine(const std::optional<Verdict>& phi, const std::optional<Verdict>& member,
                const std::optional<Verdict>& necessary, const std::optional<Verdict>& sufficient,
                const std::optional<Verdict>& sense) {
    for (const auto* v : {&phi, &member, &necessary, &sense}) {
        if (*v == Verdict::Fail) return Verdict::Fail;
    }
    if (phi != Verdict::Pass || sense != Verdict::Pass) return Verdict::Inconclusive;
    if (member == Verdict::Pass || sufficient == Verdict::Pass) return Verdict::Pass;
    return Verdict::Inconclusive;
}

std::string pad(const std::string& s, std::size_t width) {
    return s.size() >= width ? s + " " : s + std::string(width - s.size(), ' ');
}

}  // namespace

Json grid_json(const SamplingGrid& grid) {
    Json j;
    j["radii"] = grid.radii();
    j["angles"] = grid.angles();
    j["margin_tol"] = grid.margin_tol();
    j["r_max"] = grid.r_max();
    j["includes_origin"] = true;
    return j;
}

Json margin_json(const MarginReport& rep) {
    Json j;
    j["verdict"] = verdict_name(rep.verdict);
    j["min_margin"] = rep.min_margin;
    j["argmin"] = point_json(rep.argmin_z);
    j["r_max"] = rep.r_max;
    j["margin_tol"] = rep.margin_tol;
    Json per = Json::array();
    for (const auto& row : rep.per_radius_min) {
        per.push_back(Json{{"radius", row.radius}, {"min_margin", row.min_margin}});
    }
    j["per_radius"] = std::move(per);
    return j;
}

CheckOutcome check_report(const MapDefinition& def, const SamplingGrid& grid,
                          std::string_view input_digest) {
    const ClassContext ctx(def.params);
    const double gamma = ctx.gamma();

    const Entry phi = guarded("phi_order", [&] {
        Entry e = margin_entry("phi_order",
                               check_phi_order(def.params.phi(), def.params.required_phi_order(), grid));
        e.json["required_order"] = def.params.required_phi_order();
        return e;
    });
    const Entry member = guarded("membership", [&] {
        return margin_entry("membership", check_membership(def.map, ctx, grid));
    });
    const Entry necessary = guarded("necessary_coefficients", [&] {
        const auto rep = necessary_coeff_check(def.map, gamma);
        Json rows = Json::array();
        double min_slack = kInf;
        std::size_t worst = 0;
        for (const auto& row : rep.per_index) {
            if (row.slack < min_slack) {
                min_slack = row.slack;
                worst = row.m;
            }
            if (row.observed == 0.0) continue;
            rows.push_back(Json{{"m", row.m}, {"observed", row.observed}, {"bound", row.bound},
                                {"slack", row.slack}});
        }
        Json j;
        j["name"] = "necessary_coefficients";
        j["verdict"] = verdict_name(rep.verdict);
        j["min_slack"] = min_slack;
        j["worst_index"] = worst;
        j["nonzero_rows"] = std::move(rows);
        return Entry{std::move(j), rep.verdict};
    });
    const Entry sufficient = guarded("sufficient_coefficients", [&] {
        const auto rep = sufficient_coeff_check(def.map, ctx);
        Json j;
        j["name"] = "sufficient_coefficients";
        j["verdict"] = verdict_name(rep.verdict);
        j["lhs"] = rep.aggregate_sufficient->lhs;
        j["rhs"] = rep.aggregate_sufficient->rhs;
        j["slack"] = rep.aggregate_sufficient->slack;
        return Entry{std::move(j), rep.verdict};
    });
    const Entry sense = guarded("sense_preserving", [&] {
        return margin_entry("sense_preserving", sense_preserving_check(def.map, grid));
    });
    const Entry distortion = guarded("distortion", [&] { return distortion_entry(def, grid); });
    const Entry shape = guarded("shape", [&] { return shape_entry(def); });

    CheckOutcome out;
    out.overall = combine(phi.verdict, member.verdict, necessary.verdict, sufficient.verdict,
                          sense.verdict);

    Json& r = out.report;
    r["schema"] = kReportSchema;
    r["tool_version"] = kToolVersion;
    r["command"] = "check";
    r["input_digest"] = input_digest;
    r["label"] = def.label;
    r["class"] = Json{{"k", def.params.k()},
                      {"gamma", gamma},
                      {"phi_degree", def.params.phi().degree()},
                      {"required_phi_order", def.params.required_phi_order()}};
    r["truncation_degree"] = def.map.degree();
    r["grid"] = grid_json(grid);
    Json checks = Json::array();
    for (const Entry* e : {&phi, &member, &necessary, &sufficient, &sense, &distortion, &shape}) {
        checks.push_back(e->json);
    }
    r["checks"] = std::move(checks);
    r["overall"] = verdict_name(out.overall);
    return out;
}

// Regression suite.

namespace {

using Rows = std::vector<VerifyRow>;

constexpr std::uint64_t kDualitySeed = 5;
constexpr std::uint64_t kSoundnessSeed = 6;
constexpr std::uint64_t kSuperpositionSeed = 7;

VerifyRow row(std::string name, std::string anchor, bool ok, double measured, double tol,
              std::string detail = {}) {
    return {std::move(name), std::move(anchor), ok ? Verdict::Pass : Verdict::Fail, measured, tol,
            std::move(detail)};
}

// z u'/Phi_k and z v'/Phi_k margin with derivatives prepared once.
struct FastMargin {
    ComplexPolynomial du, dv;
    explicit FastMargin(const HarmonicPolynomialMap& f) : du(derivative(f.u())), dv(derivative(f.v())) {}
    double operator()(const ClassContext& ctx, Complex z) const {
        if (z == Complex{}) return 1.0 - ctx.gamma();
        const Complex q = ctx.reduced_denominator(z);
        return (eval(du, z) / q).real() - ctx.gamma() - std::abs(eval(dv, z) / q);
    }
};

Rows phi_identity(const VerifyOptions&) {
    double worst = 0.0;
    for (int k = 1; k <= 8; ++k) {
        const auto p = rotation_product(ClassParams::identity_phi(k, 0.0), kDefaultTruncation);
        const auto target = ComplexPolynomial::monomial(static_cast<std::size_t>(k), 1.0, kDefaultTruncation);
        for (std::size_t m = 0; m <= kDefaultTruncation; ++m) worst = std::max(worst, std::abs(p[m] - target[m]));
    }
    return {row("phi_k identity product", "", worst == 0.0, worst, 0.0, "k = 1..8, N = 64")};
}

Rows corpus_membership(const VerifyOptions&) {
    Rows out;
    const auto grid = SamplingGrid::up_to(0.99);
    for (const auto& ex : corpus_examples()) {
        const auto rep = check_membership(ex.map, ClassContext(ex.params), grid);
        const double expected = example1_margin(ex.power, ex.params.gamma(), 0.99);
        const double err = std::abs(rep.min_margin - expected);
        std::ostringstream detail;
        detail.precision(10);
        detail << "min margin " << rep.min_margin << " " << to_string(rep.verdict);
        if (!ex.notes.empty()) detail << "; " << ex.notes;
        out.push_back(row("corpus membership", ex.anchor, rep.verdict == Verdict::Pass && err <= 1e-9,
                          err, 1e-9, detail.str()));
    }
    return out;
}

Rows example1_formula(const VerifyOptions&) {
    double worst = 0.0;
    const auto grid = SamplingGrid(SamplingGrid::standard().radii(), 64);
    for (std::size_t m : {2u, 3u, 5u, 8u}) {
        for (double gamma : {0.0, 0.01, 0.5, 0.8}) {
            const auto f = example1_map(m, gamma);
            const FastMargin margin(f);
            for (int k : {1, 2, 3}) {
                const ClassContext ctx(ClassParams::identity_phi(k, gamma));
                for (std::size_t i = 0; i < grid.size(); ++i) {
                    const Complex z = grid.point(i);
                    worst = std::max(worst, std::abs(margin(ctx, z) - example1_margin(m, gamma, std::abs(z))));
                }
            }
        }
    }
    return {row("example1 margin formula", "Example 1", worst <= 1e-12, worst, 1e-12,
                "m in {2,3,5,8}, gamma in {0,0.01,0.5,0.8}, k in {1,2,3}")};
}

Rows slice_duality(const VerifyOptions&) {
    Rows out;
    const auto grid = SamplingGrid::standard();
    const auto mesh = unit_circle_mesh(256);
    for (const auto& ex : corpus_examples()) {
        const ClassContext ctx(ex.params);
        SeededUniform rng(kDualitySeed);
        double worst = 0.0;
        for (int s = 0; s < 32; ++s) {
            const Complex z = grid.point(rng.index(0, grid.size() - 1));
            double best = kInf;
            for (Complex eps : mesh) best = std::min(best, analytic_margin(slice(ex.map, eps), ctx, z));
            worst = std::max(worst, std::abs(best - harmonic_margin(ex.map, ctx, z)));
        }
        out.push_back(row("slice margin duality", ex.anchor, worst <= 1e-4, worst, 1e-4,
                          "32 grid points, 256-point mesh"));
    }
    return out;
}

Rows envelope_identity(const VerifyOptions&) {
    Rows out;
    for (double gamma : {0.0, 0.01, 0.5, 0.8}) {
        double worst = 0.0;
        for (int i = 1; i <= 9; ++i) {
            const auto e = distortion_envelope(gamma, 0.1 * i, 400);
            worst = std::max({worst, std::abs(e.lower_modulus - e.lower_modulus_series),
                              std::abs(e.upper_modulus - e.upper_modulus_series),
                              std::abs(e.lower_derivative - e.lower_derivative_series),
                              std::abs(e.upper_derivative - e.upper_derivative_series)});
        }
        std::ostringstream detail;
        detail << "gamma " << gamma << ", r = 0.1..0.9, 400 terms";
        out.push_back(row("distortion envelope identity", "", worst <= 1e-8, worst, 1e-8, detail.str()));
    }
    return out;
}

Rows extremal_sharpness(const VerifyOptions&) {
    double worst = 0.0;
    for (std::size_t m : {2u, 3u, 5u}) {
        for (double gamma : {0.0, 0.01, 0.5, 0.8}) {
            const auto rep = necessary_coeff_check(extremal_map(m, gamma), gamma);
            worst = std::max(worst, std::abs(rep.per_index[m - 2].slack));
        }
    }
    return {row("extremal coefficient sharpness", "", worst <= 1e-15, worst, 1e-15,
                "slack at the extremal index")};
}

Rows superposition(const VerifyOptions&) {
    SeededUniform rng(kSuperpositionSeed);
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
        const FastMargin m1(member.map), m2(second), mg(g);
        for (std::size_t i = 0; i < grid.size(); ++i) {
            const Complex z = grid.point(i);
            worst = std::min(worst, mg(ctx, z) - (s * m1(ctx, z) + (1.0 - s) * m2(ctx, z)));
        }
    }
    return {row("convex combination superposition", "", worst >= -1e-12, worst, 1e-12,
                "min of margin(combination) - weighted margins, 50 pairs")};
}

Rows herglotz_corpus(const VerifyOptions&) {
    Rows out;
    const auto grid = SamplingGrid::standard();
    for (const auto& ex : corpus_examples()) {
        const ClassContext ctx(ex.params);
        bool ok = true;
        double worst = 0.0;
        for (Complex eps : unit_circle_mesh(8)) {
            const auto rep = herglotz_diagnostic(slice(ex.map, eps), ctx, grid, 32);
            ok = ok && rep.positivity.verdict == Verdict::Pass && rep.p0_error <= 1e-12 &&
                 rep.coefficient_bound_holds;
            worst = std::max(worst, rep.max_abs_coefficient);
        }
        out.push_back(row("herglotz positivity", ex.anchor, ok, worst, 2.0 + kCaratheodorySlack,
                          "max |p_m|, m <= 32, 8-point eps mesh"));
    }
    return out;
}

Rows herglotz_witness(const VerifyOptions&) {
    // F = phi = z/(1-z)^2 with k = 1, gamma = 0 gives P = (1+z)/(1-z).
    std::vector<Complex> c(kDefaultTruncation + 1);
    for (std::size_t n = 1; n <= kDefaultTruncation; ++n) c[n] = static_cast<double>(n);
    const ComplexPolynomial koebe(c);
    const ClassContext ctx(ClassParams(1, 0.0, koebe));
    const auto rep = herglotz_diagnostic(koebe, ctx, SamplingGrid::up_to(0.5), 32);
    double worst = 0.0;
    for (Complex p : rep.coefficients) worst = std::max(worst, std::abs(p - 2.0));
    return {row("herglotz coefficient bound attained", "", worst <= 1e-9, worst, 1e-9,
                "max |p_m - 2| for the Koebe quotient")};
}

Rows soundness(const VerifyOptions& options) {
    const auto grid = SamplingGrid::standard();
    auto chain = [&](std::uint64_t seed, std::size_t count, const std::string& label) {
        SeededUniform rng(seed);
        std::size_t bad = 0;
        double lowest = kInf;
        for (std::size_t i = 0; i < count; ++i) {
            const auto member = random_sufficient_member(rng);
            const ClassContext ctx(member.params);
            const bool sufficient = sufficient_coeff_check(member.map, ctx).verdict == Verdict::Pass;
            const auto rep = check_membership(member.map, ctx, grid);
            lowest = std::min(lowest, rep.min_margin);
            const bool ok = sufficient && rep.verdict == Verdict::Pass &&
                            necessary_coeff_check(member.map, ctx.gamma()).verdict == Verdict::Pass &&
                            sense_preserving_check(member.map, grid).verdict == Verdict::Pass;
            if (!ok) ++bad;
        }
        std::ostringstream detail;
        detail.precision(6);
        detail << count << " maps, seed " << seed << ", lowest membership margin " << lowest;
        return row("sufficient condition soundness", label, bad == 0, static_cast<double>(bad), 0.0,
                   detail.str());
    };
    Rows out{chain(kSoundnessSeed, 100, "")};
    if (options.random_corpus > 0) out.push_back(chain(options.seed, options.random_corpus, ""));
    return out;
}

Rows figure_shapes(const VerifyOptions&) {
    Rows out;
    for (const auto& ex : corpus_examples()) {
        const auto d = shape_diagnostic(image_boundary(ex.map, 0.999, kDefaultCurveSamples));
        const bool starlike = ex.claimed_shape == ClaimedShape::Starlike;
        const Verdict v = starlike ? d.verdict_starlike : d.verdict_convex;
        const double margin = starlike ? d.starlike_margin : d.convex_margin;
        out.push_back(row(starlike ? "figure starlike" : "figure convex", ex.anchor, v == Verdict::Pass,
                          margin, d.angle_tol, "r = 0.999, 4096 samples"));
        if (ex.anchor == "Example 2") {
            out.push_back(row("figure not convex", ex.anchor, d.verdict_convex == Verdict::Fail,
                              d.convex_margin, d.angle_tol, "r = 0.999, 4096 samples"));
        }
    }
    return out;
}

}  // namespace

const std::vector<VerifyCheck>& verify_registry() {
    static const std::vector<VerifyCheck> registry{
        {"phi_k identity product", phi_identity},
        {"corpus membership", corpus_membership},
        {"example1 margin formula", example1_formula},
        {"slice margin duality", slice_duality},
        {"distortion envelope identity", envelope_identity},
        {"extremal coefficient sharpness", extremal_sharpness},
        {"convex combination superposition", superposition},
        {"herglotz positivity", herglotz_corpus},
        {"herglotz coefficient bound attained", herglotz_witness},
        {"sufficient condition soundness", soundness},
        {"figure shapes", figure_shapes},
    };
    return registry;
}

std::vector<VerifyRow> run_verify(const VerifyOptions& options) {
    std::vector<VerifyRow> rows;
    for (const auto& check : verify_registry()) {
        if (!options.filter.empty() && check.name.find(options.filter) == std::string::npos) continue;
        for (auto& r : check.run(options)) rows.push_back(std::move(r));
    }
    return rows;
}

Json verify_json(const std::vector<VerifyRow>& rows, const VerifyOptions& options) {
    Json r;
    r["schema"] = kReportSchema;
    r["tool_version"] = kToolVersion;
    r["command"] = "verify";
    r["filter"] = options.filter;
    r["seed"] = options.seed;
    r["random_corpus"] = options.random_corpus;
    Json list = Json::array();
    bool all = true;
    for (const auto& row : rows) {
        all = all && row.verdict == Verdict::Pass;
        list.push_back(Json{{"name", row.name},
                            {"anchor", row.anchor},
                            {"verdict", verdict_name(row.verdict)},
                            {"measured", row.measured},
                            {"tolerance", row.tolerance},
                            {"detail", row.detail}});
    }
    r["checks"] = std::move(list);
    r["overall"] = verdict_name(all ? Verdict::Pass : Verdict::Fail);
    return r;
}

std::string verify_table(const std::vector<VerifyRow>& rows) {
    auto brief = [](double x) {
        std::ostringstream s;
        s.precision(6);
        s << x;
        return s.str();
    };
    std::string out = pad("CHECK", 38) + pad("ANCHOR", 12) + pad("VERDICT", 9) + pad("MEASURED", 14) +
                      pad("TOLERANCE", 12) + "DETAIL\n";
    std::size_t passed = 0;
    for (const auto& r : rows) {
        if (r.verdict == Verdict::Pass) ++passed;
        out += pad(r.name, 38) + pad(r.anchor.empty() ? "-" : r.anchor, 12) +
               pad(verdict_name(r.verdict), 9) + pad(brief(r.measured), 14) + pad(brief(r.tolerance), 12) +
               r.detail + "\n";
    }
    out += std::to_string(passed) + "/" + std::to_string(rows.size()) + " checks passed\n";
    return out;
}

namespace {

const char* const kDistortionColumns[] = {
    "gamma", "r", "n_terms",
    "lower_modulus", "lower_modulus_series", "upper_modulus", "upper_modulus_series",
    "modulus_tail_bound",
    "lower_derivative", "lower_derivative_series", "upper_derivative", "upper_derivative_series",
    "derivative_tail_bound",
};

std::vector<double> distortion_values(const DistortionEnvelope& e) {
    return {e.gamma, e.radius, static_cast<double>(e.n_terms),
            e.lower_modulus, e.lower_modulus_series, e.upper_modulus, e.upper_modulus_series,
            e.modulus_tail_bound,
            e.lower_derivative, e.lower_derivative_series, e.upper_derivative, e.upper_derivative_series,
            e.derivative_tail_bound};
}

}  // namespace

std::string distortion_csv(double gamma, const std::vector<double>& radii, std::size_t n_terms) {
    std::vector<DistortionEnvelope> rows;
    for (double r : radii) rows.push_back(distortion_envelope(gamma, r, n_terms));
    std::string out;
    for (std::size_t c = 0; c < std::size(kDistortionColumns); ++c) {
        if (c > 0) out += ',';
        out += kDistortionColumns[c];
    }
    out += "\r\n";
    for (const auto& e : rows) {
        const auto values = distortion_values(e);
        for (std::size_t c = 0; c < values.size(); ++c) {
            if (c > 0) out += ',';
            out += format_double(values[c]);
        }
        out += "\r\n";
    }
    return out;
}

Json distortion_json(double gamma, const std::vector<double>& radii, std::size_t n_terms) {
    Json list = Json::array();
    for (double r : radii) {
        const auto values = distortion_values(distortion_envelope(gamma, r, n_terms));
        Json row;
        for (std::size_t c = 0; c < values.size(); ++c) {
            if (c == 2) {
                row[kDistortionColumns[c]] = n_terms;
            } else {
                row[kDistortionColumns[c]] = values[c];
            }
        }
        list.push_back(std::move(row));
    }
    Json r;
    r["schema"] = kReportSchema;
    r["tool_version"] = kToolVersion;
    r["command"] = "distortion";
    r["rows"] = std::move(list);
    return r;
}

}  // namespace hctc::cli
