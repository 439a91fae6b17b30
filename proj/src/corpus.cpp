#include "hctc/corpus.hpp"

#include <cmath>
#include <numbers>

#include "hctc/errors.hpp"

namespace hctc {

HarmonicPolynomialMap example1_map(std::size_t m, double gamma, std::size_t degree) {
    if (m < 2) throw InvalidIndex("example1_map: power must be >= 2");
    const std::size_t n = std::max(degree, m);
    return HarmonicPolynomialMap(
        ComplexPolynomial::identity(n),
        ComplexPolynomial::monomial(m, (1.0 - gamma) / static_cast<double>(m), n));
}

double example1_margin(std::size_t m, double gamma, double r) {
    return (1.0 - gamma) * (1.0 - std::pow(r, static_cast<double>(m - 1)));
}

std::vector<CorpusEntry> corpus_examples() {
    struct Row {
        const char* anchor;
        std::size_t m;
        double c;
        double gamma;
        ClaimedShape shape;
        const char* notes;
    };
    static const Row rows[] = {
        {"Example 2", 2, 99.0 / 200.0, 1.0 / 100.0, ClaimedShape::Starlike,
         "caption states order 33/100; the body gamma 1/100 is used"},
        {"Example 3", 2, 1.0 / 10.0, 4.0 / 5.0, ClaimedShape::Convex, ""},
        {"Example 4", 3, 33.0 / 100.0, 1.0 / 100.0, ClaimedShape::Starlike,
         "caption states order 33/100; the body gamma 1/100 is used"},
        {"Example 5", 3, 1.0 / 15.0, 4.0 / 5.0, ClaimedShape::Convex, ""},
        {"Example 6", 5, 99.0 / 500.0, 1.0 / 100.0, ClaimedShape::Starlike,
         "caption states order 99/500; the body gamma 1/100 is used"},
        {"Example 7", 5, 1.0 / 25.0, 4.0 / 5.0, ClaimedShape::Convex, ""},
    };
    std::vector<CorpusEntry> out;
    for (const Row& r : rows) {
        HarmonicPolynomialMap f(ComplexPolynomial::identity(kDefaultTruncation),
                                ComplexPolynomial::monomial(r.m, r.c, kDefaultTruncation));
        out.push_back(CorpusEntry{r.anchor, std::move(f), ClassParams::identity_phi(2, r.gamma),
                                  r.m, r.c, r.shape, r.notes});
    }
    return out;
}

double SeededUniform::next() {
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
}

std::size_t SeededUniform::index(std::size_t lo, std::size_t hi_inclusive) {
    const std::size_t span = hi_inclusive - lo + 1;
    return lo + std::min(span - 1, static_cast<std::size_t>(next() * static_cast<double>(span)));
}

namespace {

Complex random_phase(SeededUniform& rng) {
    return std::polar(1.0, 2.0 * std::numbers::pi * rng.next());
}

double phi_budget(const ClassContext& ctx) {
    const double gamma = ctx.gamma();
    const ComplexPolynomial& big_phi = ctx.normalized_product();
    double s = 0.0;
    for (std::size_t m = 2; m <= big_phi.degree(); ++m) s += std::abs(big_phi[m]);
    return (std::abs(1.0 - 2.0 * gamma) + 1.0) * s;
}

}  // namespace

HarmonicPolynomialMap random_sufficient_map(SeededUniform& rng, const ClassContext& ctx) {
    const double rhs = 2.0 * (1.0 - ctx.gamma());
    const double budget = rhs - phi_budget(ctx);
    if (!(budget > 0.0)) {
        throw InvalidArgument("random_sufficient_map: phi leaves no coefficient budget");
    }
    const std::size_t top = rng.index(2, 8);
    std::vector<Complex> u(kDefaultTruncation + 1), v(kDefaultTruncation + 1);
    double raw = 0.0;
    for (std::size_t m = 2; m <= top; ++m) {
        // Roughly a quarter of the coefficients are switched off.
        const double a = rng.next() < 0.25 ? 0.0 : rng.next();
        const double b = rng.next() < 0.25 ? 0.0 : rng.next();
        u[m] = a * random_phase(rng);
        v[m] = b * random_phase(rng);
        raw += 2.0 * static_cast<double>(m) * (a + b);
    }
    if (raw == 0.0) {
        v[2] = 1.0;
        raw = 4.0;
    }
    const double scale = rng.in(0.05, 0.999) * budget / raw;
    for (std::size_t m = 2; m <= top; ++m) {
        u[m] *= scale;
        v[m] *= scale;
    }
    u[1] = 1.0;
    return HarmonicPolynomialMap(ComplexPolynomial(std::move(u)), ComplexPolynomial(std::move(v)));
}

RandomMember random_sufficient_member(SeededUniform& rng) {
    const double gamma = rng.in(0.0, 0.95);
    const int k = static_cast<int>(rng.index(1, 3));
    std::vector<Complex> phi(kDefaultTruncation + 1);
    phi[1] = 1.0;
    if (rng.next() < 0.5) phi[2] = rng.in(0.0, 0.15) * random_phase(rng);

    ClassParams params(k, gamma, ComplexPolynomial(phi));
    ClassContext ctx(params);
    if (phi_budget(ctx) > 0.5 * 2.0 * (1.0 - gamma)) {
        params = ClassParams::identity_phi(k, gamma);
        ctx = ClassContext(params);
    }
    HarmonicPolynomialMap f = random_sufficient_map(rng, ctx);
    return RandomMember{std::move(f), std::move(params)};
}

}  // namespace hctc
