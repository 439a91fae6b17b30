#include <algorithm>
#include <cmath>
#include <fstream>
#include <set>
#include <sstream>

#include "hctc/cli.hpp"
#include "hctc/errors.hpp"

namespace hctc::cli {

namespace {

[[noreturn]] void invalid(const std::string& path, const std::string& reason) {
    throw ValidationError(path + ": " + reason);
}

void reject_unknown(const Json& object, const std::string& path, const std::set<std::string>& known) {
    for (const auto& [key, item] : object.items()) {
        if (!known.count(key)) invalid(path.empty() ? key : path + "." + key, "unknown field");
    }
}

double number_at(const Json& v, const std::string& path) {
    if (!v.is_number()) invalid(path, "expected a number");
    const double x = v.get<double>();
    if (!std::isfinite(x)) invalid(path, "must be finite");
    return x;
}

std::vector<Complex> coefficient_list(const Json& doc, const std::string& key) {
    if (!doc.contains(key)) invalid(key, "required field is missing");
    const Json& list = doc.at(key);
    if (!list.is_array() || list.empty()) invalid(key, "expected a nonempty array of [re, im] pairs");
    std::vector<Complex> out;
    for (std::size_t i = 0; i < list.size(); ++i) {
        const std::string path = key + "[" + std::to_string(i) + "]";
        const Json& pair = list[i];
        if (!pair.is_array() || pair.size() != 2) invalid(path, "expected a [re, im] pair");
        out.emplace_back(number_at(pair[0], path + "[0]"), number_at(pair[1], path + "[1]"));
    }
    return out;
}

std::vector<Complex> padded(std::vector<Complex> c, std::size_t degree) {
    c.resize(degree + 1);
    return c;
}

GridOverrides grid_overrides(const Json& g) {
    if (!g.is_object()) invalid("grid", "expected an object");
    reject_unknown(g, "grid", {"radii", "r_max", "angles", "margin_tol"});
    GridOverrides out;
    if (g.contains("radii")) {
        const Json& list = g.at("radii");
        if (!list.is_array() || list.empty()) invalid("grid.radii", "expected a nonempty array");
        std::vector<double> radii;
        for (std::size_t i = 0; i < list.size(); ++i) {
            radii.push_back(number_at(list[i], "grid.radii[" + std::to_string(i) + "]"));
        }
        out.radii = std::move(radii);
    }
    if (g.contains("r_max")) out.r_max = number_at(g.at("r_max"), "grid.r_max");
    if (g.contains("angles")) {
        const Json& a = g.at("angles");
        if (!a.is_number_unsigned()) invalid("grid.angles", "expected a positive integer");
        out.angles = a.get<std::size_t>();
    }
    if (g.contains("margin_tol")) out.margin_tol = number_at(g.at("margin_tol"), "grid.margin_tol");
    if (out.radii && out.r_max) invalid("grid", "give either radii or r_max, not both");
    return out;
}

}  // namespace

MapDefinition parse_map(std::string_view text) {
    Json doc;
    try {
        doc = Json::parse(text);
    } catch (const Json::parse_error& e) {
        throw ParseError(std::string("map file is not valid JSON: ") + e.what());
    }
    if (!doc.is_object()) throw ParseError("map file must hold a JSON object");
    reject_unknown(doc, "", {"u", "v", "phi", "k", "gamma", "grid", "label", "notes"});

    auto u = coefficient_list(doc, "u");
    auto v = coefficient_list(doc, "v");
    auto phi = coefficient_list(doc, "phi");

    if (u.size() < 2) invalid("u", "needs at least the coefficients of z^0 and z^1");
    if (u[0] != Complex{}) invalid("u[0]", "u(0) must be 0");
    if (u[1] != Complex{1.0, 0.0}) invalid("u[1]", "u'(0) must be 1");
    if (v[0] != Complex{}) invalid("v[0]", "v(0) must be 0");
    if (v.size() > 1 && v[1] != Complex{}) invalid("v[1]", "v'(0) must be 0");
    if (phi.size() < 2) invalid("phi", "needs at least the coefficients of z^0 and z^1");
    if (phi[0] != Complex{}) invalid("phi[0]", "phi(0) must be 0");
    if (phi[1] != Complex{1.0, 0.0}) invalid("phi[1]", "phi'(0) must be 1");

    if (!doc.contains("k")) invalid("k", "required field is missing");
    const Json& kj = doc.at("k");
    if (!kj.is_number_integer()) invalid("k", "expected an integer");
    const auto k = kj.get<long long>();
    if (k < 1) invalid("k", "must be >= 1");
    if (k > 64) invalid("k", "must be <= 64");

    if (!doc.contains("gamma")) invalid("gamma", "required field is missing");
    const double gamma = number_at(doc.at("gamma"), "gamma");
    if (!(gamma >= 0.0 && gamma < 1.0)) invalid("gamma", "must lie in [0, 1)");

    const std::size_t degree =
        std::max({kDefaultTruncation, u.size() - 1, v.size() - 1, phi.size() - 1});

    MapDefinition def{
        HarmonicPolynomialMap(ComplexPolynomial(padded(std::move(u), degree)),
                              ComplexPolynomial(padded(std::move(v), degree))),
        ClassParams(static_cast<int>(k), gamma, ComplexPolynomial(padded(std::move(phi), degree))),
        {}, {}, {}};

    if (doc.contains("grid")) def.grid = grid_overrides(doc.at("grid"));
    for (const char* key : {"label", "notes"}) {
        if (!doc.contains(key)) continue;
        if (!doc.at(key).is_string()) invalid(key, "expected a string");
        (std::string(key) == "label" ? def.label : def.notes) = doc.at(key).get<std::string>();
    }
    return def;
}

std::string read_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot open " + path.string());
    std::ostringstream buf;
    buf << in.rdbuf();
    if (in.bad()) throw ParseError("cannot read " + path.string());
    return buf.str();
}

MapDefinition load_map(const std::filesystem::path& path) {
    return parse_map(read_file(path));
}

SamplingGrid resolve_grid(const GridOverrides& from_file, const GridOverrides& from_flags) {
    GridOverrides g = from_file;
    if (from_flags.radii) {
        g.radii = from_flags.radii;
        g.r_max.reset();
    }
    if (from_flags.r_max) {
        g.r_max = from_flags.r_max;
        g.radii.reset();
    }
    if (from_flags.angles) g.angles = from_flags.angles;
    if (from_flags.margin_tol) g.margin_tol = from_flags.margin_tol;

    const std::size_t angles = g.angles.value_or(SamplingGrid::kDefaultAngles);
    const double tol = g.margin_tol.value_or(SamplingGrid::kDefaultMarginTol);
    try {
        if (g.radii) return SamplingGrid(*g.radii, angles, tol);
        if (g.r_max) return SamplingGrid::up_to(*g.r_max, angles, tol);
        return SamplingGrid(SamplingGrid::standard().radii(), angles, tol);
    } catch (const InvalidArgument& e) {
        throw ValidationError(std::string("grid: ") + e.what());
    }
}

}  // namespace hctc::cli
