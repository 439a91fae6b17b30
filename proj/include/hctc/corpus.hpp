#pragma once

// Regression corpus: the six worked example maps z + c conj(z)^m with
// phi(z) = z, plus seeded random generators for property checks.

#include <cstddef>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "hctc/class_constructs.hpp"
#include "hctc/series.hpp"

namespace hctc {

enum class ClaimedShape { Starlike, Convex };

struct CorpusEntry {
    std::string anchor;  // e.g. "Example 4"
    HarmonicPolynomialMap map;
    ClassParams params;
    std::size_t power;   // m in z + c conj(z)^m
    double coefficient;  // c
    ClaimedShape claimed_shape;
    std::string notes;
};

/// z + ((1 - gamma) / m) conj(z)^m, a member for every k when phi = z.
HarmonicPolynomialMap example1_map(std::size_t m, double gamma,
                                   std::size_t degree = kDefaultTruncation);

/// Closed-form margin of example1_map at |z| = r: (1 - gamma)(1 - r^{m-1}).
double example1_margin(std::size_t m, double gamma, double r);

/// The six example maps, with gamma taken from each example's statement and
/// k = 2 (margins do not depend on k when phi = z).
std::vector<CorpusEntry> corpus_examples();

/// Portable uniform doubles from mt19937_64 (independent of the standard
/// library's distribution implementations).
class SeededUniform {
public:
    explicit SeededUniform(std::uint64_t seed) : engine_(seed) {}
    /// Uniform in [0, 1).
    double next();
    double in(double lo, double hi) { return lo + (hi - lo) * next(); }
    std::size_t index(std::size_t lo, std::size_t hi_inclusive);

private:
    std::mt19937_64 engine_;
};

struct RandomMember {
    HarmonicPolynomialMap map;
    ClassParams params;
};

/// Random map and class instance satisfying the coefficient sufficient
/// condition with lhs = s * rhs, s uniform in [0.05, 0.999]. Half of the
/// draws use phi = z + c z^2 (|c| <= 0.15, k in {1, 2, 3}); the rest use phi = z.
RandomMember random_sufficient_member(SeededUniform& rng);

/// As above but for a fixed class instance (phi = z assumed if the C_m
/// budget leaves no room).
HarmonicPolynomialMap random_sufficient_map(SeededUniform& rng, const ClassContext& ctx);

}  // namespace hctc
