#include "balis/points.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "balis/errors.hpp"
#include "balis/geom.hpp"

namespace balis {

ColoredPointSet ColoredPointSet::from_points(std::vector<ColoredPoint> pts) {
    ColoredPointSet ps;
    ps.points = std::move(pts);
    for (std::size_t i = 0; i < ps.points.size(); ++i) {
        ps.points[i].id = static_cast<int>(i);
        (ps.points[i].color == Color::Red ? ps.red_count : ps.blue_count)++;
    }
    return ps;
}

bool shear_less(const ColoredPoint& a, const ColoredPoint& b) {
    int c = cmp(a.x, b.x);
    if (c != 0) return c < 0;
    return cmp(a.y, b.y) < 0;
}

std::vector<int> shear_order(const ColoredPointSet& ps) {
    std::vector<int> ids(ps.points.size());
    for (std::size_t i = 0; i < ids.size(); ++i) ids[i] = static_cast<int>(i);
    std::sort(ids.begin(), ids.end(),
              [&](int a, int b) { return shear_less(ps[a], ps[b]); });
    return ids;
}

std::string GeneralPositionViolation::describe() const {
    std::ostringstream os;
    if (kind == Kind::DuplicatePoint)
        os << "DuplicatePoint(" << i << "," << j << ")";
    else
        os << "CollinearTriple(" << i << "," << j << "," << k << ")";
    return os.str();
}

namespace {

std::optional<GeneralPositionViolation> find_duplicate(const ColoredPointSet& ps) {
    const int n = ps.size();
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (cmp(ps[i].x, ps[j].x) == 0 && cmp(ps[i].y, ps[j].y) == 0)
                return GeneralPositionViolation{GeneralPositionViolation::Kind::DuplicatePoint, i, j, -1};
    return std::nullopt;
}

}  // namespace

std::optional<GeneralPositionViolation> find_violation_serial(const ColoredPointSet& ps) {
    if (auto dup = find_duplicate(ps)) return dup;
    const int n = ps.size();
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            for (int k = j + 1; k < n; ++k)
                if (orient(ps[i], ps[j], ps[k]) == Orientation::Collinear)
                    return GeneralPositionViolation{GeneralPositionViolation::Kind::CollinearTriple, i, j, k};
    return std::nullopt;
}

std::optional<GeneralPositionViolation> find_violation_parallel(const ColoredPointSet& ps) {
    if (auto dup = find_duplicate(ps)) return dup;
    const int n = ps.size();
    // Lexicographically smallest triple wins, matching the serial reference.
    const long none = static_cast<long>(n) * n * n + 1;
    long best = none;
#pragma omp parallel for schedule(dynamic, 4) reduction(min : best) if (n >= 32)
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j)
            for (int k = j + 1; k < n; ++k) {
                if (orient(ps[i], ps[j], ps[k]) == Orientation::Collinear) {
                    long key = (static_cast<long>(i) * n + j) * n + k;
                    if (key < best) best = key;
                    break;  // smallest k for this (i,j); later k are larger keys
                }
            }
    }
    if (best == none) return std::nullopt;
    int k = static_cast<int>(best % n);
    int j = static_cast<int>((best / n) % n);
    int i = static_cast<int>(best / n / n);
    return GeneralPositionViolation{GeneralPositionViolation::Kind::CollinearTriple, i, j, k};
}

std::optional<GeneralPositionViolation> find_violation_fast(const ColoredPointSet& ps) {
    if (auto dup = find_duplicate(ps)) return dup;
    const int n = ps.size();
    // Three points are collinear iff from one of them the other two have the
    // same direction modulo pi. Canonicalize (dx,dy)/gcd with dx>0, or dx==0
    // and dy>0, and look for duplicates around each anchor.
    for (int i = 0; i < n; ++i) {
        std::map<std::pair<BigInt, BigInt>, int> seen;
        for (int j = 0; j < n; ++j) {
            if (j == i) continue;
            BigInt dx = ps[j].x - ps[i].x;
            BigInt dy = ps[j].y - ps[i].y;
            BigInt g;
            mpz_gcd(g.get_mpz_t(), dx.get_mpz_t(), dy.get_mpz_t());
            dx /= g;
            dy /= g;
            if (sign(dx) < 0 || (sign(dx) == 0 && sign(dy) < 0)) {
                dx = -dx;
                dy = -dy;
            }
            auto key = std::make_pair(dx, dy);
            auto [it, inserted] = seen.emplace(key, j);
            if (!inserted) {
                int a = i, b = it->second, c = j;
                if (b > c) std::swap(b, c);
                if (a > b) std::swap(a, b);
                if (b > c) std::swap(b, c);
                return GeneralPositionViolation{GeneralPositionViolation::Kind::CollinearTriple, a, b, c};
            }
        }
    }
    return std::nullopt;
}

}  // namespace balis
