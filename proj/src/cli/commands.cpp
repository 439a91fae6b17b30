#include <algorithm>
#include <chrono>
#include <ctime>
#include <fstream>
#include <ostream>

#include <CLI11.hpp>

#include "hctc/cli.hpp"
#include "hctc/errors.hpp"
#include "hctc/geometry.hpp"
#include "hctc/parallel.hpp"

namespace hctc::cli {

namespace {

struct GlobalFlags {
    std::string out_path;
    std::optional<double> grid_rmax;
    std::optional<std::size_t> grid_angles;
    std::optional<double> tol;
    bool timestamp = false;
    std::optional<unsigned> threads;
};

std::string utc_timestamp() {
    const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    std::tm tm{};
    gmtime_r(&now, &tm);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

void emit(const GlobalFlags& flags, const std::string& text, std::ostream& out) {
    if (flags.out_path.empty()) {
        out << text;
        return;
    }
    std::ofstream file(flags.out_path, std::ios::binary | std::ios::trunc);
    file << text;
    file.close();
    if (!file) throw Error("cannot write " + flags.out_path);
}

int cmd_check(const GlobalFlags& flags, const std::string& path, std::ostream& out) {
    const std::string bytes = read_file(path);
    const MapDefinition def = parse_map(bytes);
    GridOverrides overrides;
    overrides.r_max = flags.grid_rmax;
    overrides.angles = flags.grid_angles;
    overrides.margin_tol = flags.tol;
    const SamplingGrid grid = resolve_grid(def.grid, overrides);

    CheckOutcome outcome = check_report(def, grid, sha256_hex(bytes));
    if (flags.timestamp) outcome.report["timestamp"] = utc_timestamp();
    emit(flags, canonical_json(outcome.report) + "\n", out);
    if (!flags.out_path.empty()) {
        out << (def.label.empty() ? path : def.label) << ": " << to_string(outcome.overall) << "\n";
    }
    return exit_code_for(outcome.overall);
}

int cmd_verify(const GlobalFlags& flags, const VerifyOptions& options, std::ostream& out) {
    const auto rows = run_verify(options);
    out << verify_table(rows);
    if (!flags.out_path.empty()) {
        Json report = verify_json(rows, options);
        if (flags.timestamp) report["timestamp"] = utc_timestamp();
        emit(flags, canonical_json(report) + "\n", out);
    }
    const bool all = std::all_of(rows.begin(), rows.end(),
                                 [](const VerifyRow& r) { return r.verdict == Verdict::Pass; });
    return all ? kExitPass : kExitFail;
}

int cmd_distortion(const GlobalFlags& flags, double gamma, const std::vector<double>& radii,
                   std::size_t terms, const std::string& format, std::ostream& out) {
    if (format == "json") {
        Json report = distortion_json(gamma, radii, terms);
        if (flags.timestamp) report["timestamp"] = utc_timestamp();
        emit(flags, canonical_json(report) + "\n", out);
    } else {
        emit(flags, distortion_csv(gamma, radii, terms), out);
    }
    return kExitPass;
}

int cmd_render(const GlobalFlags& flags, const std::string& path, const RenderOptions& options,
               std::ostream& out) {
    const MapDefinition def = load_map(path);
    RenderOptions opt = options;
    opt.title = def.label;
    emit(flags, render_svg(def.map, opt), out);
    return kExitPass;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Numerical certification for harmonic close-to-convex maps of the unit disk", "hctc"};
    app.fallthrough();
    app.require_subcommand(1);
    app.set_version_flag("--version", std::string(kToolVersion));

    GlobalFlags flags;
    app.add_option("--out", flags.out_path, "Write the report, table or figure to PATH");
    app.add_option("--grid-rmax", flags.grid_rmax, "Outer radius of the sampling grid");
    app.add_option("--grid-angles", flags.grid_angles, "Sample points per grid circle");
    app.add_option("--tol", flags.tol, "Margin tolerance of the INCONCLUSIVE band");
    app.add_flag("--timestamp", flags.timestamp, "Embed a UTC timestamp in JSON output");
    app.add_option("--threads", flags.threads, "Worker threads (0 = hardware concurrency)");

    std::string map_path;
    auto* check = app.add_subcommand("check", "Certify membership of the map in a JSON file");
    check->add_option("map", map_path, "Map definition file")->required();

    VerifyOptions verify_opts;
    auto* verify = app.add_subcommand("verify", "Run the built-in regression suite");
    verify->add_option("--filter", verify_opts.filter, "Only run checks whose name contains NAME");
    verify->add_option("--seed", verify_opts.seed, "Seed for --random-corpus");
    verify->add_option("--random-corpus", verify_opts.random_corpus,
                       "Add N random sufficient-condition maps to the soundness chain");

    double gamma = 0.0;
    std::vector<double> radii;
    std::size_t terms = 400;
    std::string format = "csv";
    auto* distortion = app.add_subcommand("distortion", "Tabulate distortion envelopes");
    distortion->add_option("--gamma", gamma, "Order gamma in [0, 1)")->required();
    distortion->add_option("--r", radii, "Radii in [0, 1), comma separated")->required()->delimiter(',');
    distortion->add_option("--terms", terms, "Series terms per envelope")->capture_default_str();
    distortion->add_option("--format", format, "csv or json")
        ->check(CLI::IsMember({"csv", "json"}))
        ->capture_default_str();

    RenderOptions render_opts;
    std::string render_path;
    auto* render = app.add_subcommand("render", "Draw images of circles and rays as SVG");
    render->add_option("map", render_path, "Map definition file")->required();
    render->add_option("--radii", render_opts.radii, "Circle radii, comma separated")->delimiter(',');
    render->add_option("--rays", render_opts.rays, "Number of radial segments")->capture_default_str();

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitPass : kExitError;
    }

    set_worker_threads(flags.threads.value_or(0));
    try {
        if (*check) return cmd_check(flags, map_path, out);
        if (*verify) return cmd_verify(flags, verify_opts, out);
        if (*distortion) return cmd_distortion(flags, gamma, radii, terms, format, out);
        if (*render) return cmd_render(flags, render_path, render_opts, out);
    } catch (const std::exception& e) {
        err << "hctc: " << e.what() << "\n";
        return kExitError;
    }
    return kExitError;
}

}  // namespace hctc::cli
