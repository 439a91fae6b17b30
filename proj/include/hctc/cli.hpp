#pragma once

// Command-line front end: map-definition files, canonical JSON reports,
// the built-in regression suite, distortion tables and SVG rendering.

#include <cstdint>
#include <filesystem>
#include <functional>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "hctc/class_constructs.hpp"
#include "hctc/grid.hpp"
#include "hctc/series.hpp"

namespace hctc::cli {

inline constexpr std::string_view kToolVersion = "1.0.0";
inline constexpr std::string_view kReportSchema = "harmonic-ctc/1";

enum ExitCode : int { kExitPass = 0, kExitFail = 1, kExitInconclusive = 2, kExitError = 3 };

int exit_code_for(Verdict v) noexcept;

using Json = nlohmann::ordered_json;

/// Compact JSON with keys in insertion order and doubles printed with 17
/// significant digits; non-finite numbers become null.
std::string canonical_json(const Json& value);

/// 17-significant-digit shortest form shared by JSON and CSV output.
std::string format_double(double x);

/// Lowercase hex SHA-256 of `bytes`.
std::string sha256_hex(std::string_view bytes);

struct GridOverrides {
    std::optional<std::vector<double>> radii;
    std::optional<double> r_max;
    std::optional<std::size_t> angles;
    std::optional<double> margin_tol;
};

struct MapDefinition {
    HarmonicPolynomialMap map;
    ClassParams params;
    GridOverrides grid;
    std::string label;
    std::string notes;
};

/// Parses a map document. Throws ParseError on malformed JSON and
/// ValidationError ("<field path>: <reason>") on schema or normalization
/// violations, including unknown fields.
MapDefinition parse_map(std::string_view text);

/// Reads and parses a file; IO failures throw ParseError.
MapDefinition load_map(const std::filesystem::path& path);

std::string read_file(const std::filesystem::path& path);

/// Standard grid, then file overrides, then command-line overrides. An
/// explicit radius list and an r_max together are a ValidationError.
SamplingGrid resolve_grid(const GridOverrides& from_file, const GridOverrides& from_flags);

Json grid_json(const SamplingGrid& grid);
Json margin_json(const MarginReport& report);

struct CheckOutcome {
    Json report;
    Verdict overall = Verdict::Inconclusive;
};

/// Runs the certification suite on a loaded map: phi order, membership,
/// coefficient necessary and sufficient conditions, sense preservation,
/// the distortion table and the r = 0.999 shape diagnostic.
CheckOutcome check_report(const MapDefinition& def, const SamplingGrid& grid,
                          std::string_view input_digest);

struct VerifyRow {
    std::string name;
    std::string anchor;
    Verdict verdict = Verdict::Inconclusive;
    double measured = 0.0;
    double tolerance = 0.0;
    std::string detail;
};

struct VerifyOptions {
    std::string filter;
    std::uint64_t seed = 1;
    std::size_t random_corpus = 0;
};

struct VerifyCheck {
    std::string name;
    std::function<std::vector<VerifyRow>(const VerifyOptions&)> run;
};

/// Built-in regression suite in report order.
const std::vector<VerifyCheck>& verify_registry();

std::vector<VerifyRow> run_verify(const VerifyOptions& options);

Json verify_json(const std::vector<VerifyRow>& rows, const VerifyOptions& options);

/// Fixed-width text table with a trailing "passed/total" line.
std::string verify_table(const std::vector<VerifyRow>& rows);

/// RFC 4180 table of distortion envelopes, CRLF line endings.
std::string distortion_csv(double gamma, const std::vector<double>& radii, std::size_t n_terms);
Json distortion_json(double gamma, const std::vector<double>& radii, std::size_t n_terms);

/// Full command line. Output goes to `out` unless --out names a file;
/// diagnostics go to `err`. Returns the process exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace hctc::cli
