#include "balis/generator.hpp"

#include <cmath>
#include <functional>
#include <random>

#include "balis/errors.hpp"

namespace balis {

namespace {

// Deterministic integer in [-range, range]; avoids std::uniform_int_distribution,
// whose output is not pinned down by the standard.
std::int64_t draw(std::mt19937_64& rng, std::int64_t range) {
    std::uint64_t span = 2 * static_cast<std::uint64_t>(range) + 1;
    return static_cast<std::int64_t>(rng() % span) - range;
}

int red_count_for(int n, const Rat& red_fraction) {
    if (sign(red_fraction) < 0 || cmp(red_fraction, Rat(1)) > 0)
        throw input_error("red fraction must lie in [0, 1]");
    // Nearest integer to n * fraction, ties rounding up.
    BigInt num = 2 * red_fraction.get_num() * n + red_fraction.get_den();
    BigInt den = 2 * red_fraction.get_den();
    BigInt r;
    mpz_fdiv_q(r.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    return static_cast<int>(r.get_si());
}

// Replace offending points until the set is in general position.
void enforce_general_position(ColoredPointSet& ps, std::mt19937_64& rng,
                              const std::function<std::pair<std::int64_t, std::int64_t>(int)>& resample) {
    for (int round = 0; round < 1000; ++round) {
        auto violation = find_violation_fast(ps);
        if (!violation) return;
        int victim = violation->kind == GeneralPositionViolation::Kind::DuplicatePoint
                         ? violation->j
                         : violation->k;
        auto [x, y] = resample(victim);
        ps.points[static_cast<std::size_t>(victim)].x = BigInt(static_cast<long>(x));
        ps.points[static_cast<std::size_t>(victim)].y = BigInt(static_cast<long>(y));
        (void)rng;
    }
    throw internal_error("generator could not reach general position");
}

constexpr std::int64_t kUniformRange = (1LL << 40);  // well under the 48-bit bound

}  // namespace

Distribution parse_distribution(const std::string& name) {
    if (name == "uniform") return Distribution::Uniform;
    if (name == "polygon-trap") return Distribution::PolygonTrap;
    if (name == "clusters") return Distribution::Clusters;
    throw input_error("unknown distribution: " + name +
                      " (expected uniform|polygon-trap|clusters)");
}

namespace {

ColoredPointSet generate_uniform(int n, int reds, std::mt19937_64& rng, std::int64_t range) {
    std::vector<ColoredPoint> pts(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        pts[static_cast<std::size_t>(i)].x = BigInt(static_cast<long>(draw(rng, range)));
        pts[static_cast<std::size_t>(i)].y = BigInt(static_cast<long>(draw(rng, range)));
        pts[static_cast<std::size_t>(i)].color = i < reds ? Color::Red : Color::Blue;
    }
    ColoredPointSet ps = ColoredPointSet::from_points(std::move(pts));
    enforce_general_position(
        ps, rng, [&](int) { return std::make_pair(draw(rng, range), draw(rng, range)); });
    return ps;
}

ColoredPointSet generate_clusters(int n, int reds, std::mt19937_64& rng) {
    const int kClusters = 3;
    const std::int64_t spread = kUniformRange;
    const std::int64_t local = kUniformRange >> 6;
    std::vector<std::pair<std::int64_t, std::int64_t>> centers;
    for (int c = 0; c < kClusters; ++c)
        centers.push_back({draw(rng, spread), draw(rng, spread)});
    std::vector<ColoredPoint> pts(static_cast<std::size_t>(n));
    std::vector<int> cluster_of(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        int c = static_cast<int>(rng() % kClusters);
        cluster_of[static_cast<std::size_t>(i)] = c;
        pts[static_cast<std::size_t>(i)].x =
            BigInt(static_cast<long>(centers[static_cast<std::size_t>(c)].first + draw(rng, local)));
        pts[static_cast<std::size_t>(i)].y = BigInt(
            static_cast<long>(centers[static_cast<std::size_t>(c)].second + draw(rng, local)));
        pts[static_cast<std::size_t>(i)].color = i < reds ? Color::Red : Color::Blue;
    }
    ColoredPointSet ps = ColoredPointSet::from_points(std::move(pts));
    enforce_general_position(ps, rng, [&](int i) {
        int c = cluster_of[static_cast<std::size_t>(i)];
        return std::make_pair(centers[static_cast<std::size_t>(c)].first + draw(rng, local),
                              centers[static_cast<std::size_t>(c)].second + draw(rng, local));
    });
    return ps;
}

}  // namespace

ColoredPointSet generate_polygon_trap(int red, int blue, std::uint64_t seed) {
    if (red < 3) throw input_error("polygon-trap needs at least 3 red points");
    std::mt19937_64 rng(seed);
    const double radius = 1e7;
    const std::int64_t jitter = 8;
    const std::int64_t inner = 64;
    std::vector<ColoredPoint> pts;
    for (int i = 0; i < red; ++i) {
        double angle = 2.0 * M_PI * i / red;
        ColoredPoint p;
        p.x = BigInt(static_cast<long>(std::llround(radius * std::cos(angle)) + draw(rng, jitter)));
        p.y = BigInt(static_cast<long>(std::llround(radius * std::sin(angle)) + draw(rng, jitter)));
        p.color = Color::Red;
        pts.push_back(std::move(p));
    }
    for (int i = 0; i < blue; ++i) {
        ColoredPoint p;
        p.x = BigInt(static_cast<long>(draw(rng, inner)));
        p.y = BigInt(static_cast<long>(draw(rng, inner)));
        p.color = Color::Blue;
        pts.push_back(std::move(p));
    }
    ColoredPointSet ps = ColoredPointSet::from_points(std::move(pts));
    enforce_general_position(ps, rng, [&](int i) {
        if (ps.points[static_cast<std::size_t>(i)].color == Color::Blue)
            return std::make_pair(draw(rng, inner), draw(rng, inner));
        double angle = 2.0 * M_PI * i / red;
        return std::make_pair(
            static_cast<std::int64_t>(std::llround(radius * std::cos(angle))) + draw(rng, jitter),
            static_cast<std::int64_t>(std::llround(radius * std::sin(angle))) + draw(rng, jitter));
    });
    return ps;
}

ColoredPointSet generate(Distribution dist, int n, const Rat& red_fraction, std::uint64_t seed) {
    if (n < 0) throw input_error("n must be non-negative");
    std::mt19937_64 rng(seed);
    int reds = red_count_for(n, red_fraction);
    switch (dist) {
        case Distribution::Uniform:
            return generate_uniform(n, reds, rng, kUniformRange);
        case Distribution::Clusters:
            return generate_clusters(n, reds, rng);
        case Distribution::PolygonTrap:
            if (n - reds < 0) throw input_error("impossible color split");
            return generate_polygon_trap(reds, n - reds, seed);
    }
    throw input_error("unknown distribution");
}

}  // namespace balis
