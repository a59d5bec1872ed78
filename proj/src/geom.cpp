#include "balis/geom.hpp"

#include <algorithm>
#include <cassert>

#include "balis/errors.hpp"

namespace balis {

namespace {

Orientation orientation_from_sign(int s) {
    if (s > 0) return Orientation::CounterClockwise;
    if (s < 0) return Orientation::Clockwise;
    return Orientation::Collinear;
}

// sign(a*b - c*d) without building rationals.
int cmp_products(const BigInt& a, const BigInt& b, const BigInt& c, const BigInt& d) {
    BigInt lhs = a * b;
    BigInt rhs = c * d;
    return cmp(lhs, rhs);
}

// sign(ax*by - ay*bx) for rational vectors, via integer cross-multiplication.
int rat_cross_sign(const Rat& ax, const Rat& ay, const Rat& bx, const Rat& by) {
    BigInt lhs = ax.get_num() * by.get_num() * ay.get_den() * bx.get_den();
    BigInt rhs = ay.get_num() * bx.get_num() * ax.get_den() * by.get_den();
    return cmp(lhs, rhs);
}

}  // namespace

Orientation orient(const BigInt& ax, const BigInt& ay, const BigInt& bx, const BigInt& by,
                   const BigInt& cx, const BigInt& cy) {
    BigInt lhs = (bx - ax) * (cy - ay);
    BigInt rhs = (by - ay) * (cx - ax);
    return orientation_from_sign(cmp(lhs, rhs));
}

Orientation orient(const RatPoint& a, const ColoredPoint& b, const ColoredPoint& c) {
    // (b-a) x (c-a) with one rational operand per factor.
    Rat bax = Rat(b.x) - a.x;
    Rat bay = Rat(b.y) - a.y;
    Rat cax = Rat(c.x) - a.x;
    Rat cay = Rat(c.y) - a.y;
    return orientation_from_sign(rat_cross_sign(bax, bay, cax, cay));
}

Orientation orient(const RatPoint& a, const RatPoint& b, const RatPoint& c) {
    Rat bax = b.x - a.x;
    Rat bay = b.y - a.y;
    Rat cax = c.x - a.x;
    Rat cay = c.y - a.y;
    return orientation_from_sign(rat_cross_sign(bax, bay, cax, cay));
}

ConvexPolygon convex_hull(const ColoredPointSet& ps, const std::vector<int>& ids) {
    std::vector<int> sorted = ids;
    std::sort(sorted.begin(), sorted.end(),
              [&](int a, int b) { return shear_less(ps[a], ps[b]); });
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    const int m = static_cast<int>(sorted.size());
    if (m <= 2) return ConvexPolygon{sorted};

    std::vector<int> hull;
    hull.reserve(static_cast<std::size_t>(2 * m));
    // Lower chain, then upper chain; strict turns only.
    for (int pass = 0; pass < 2; ++pass) {
        const std::size_t base = hull.size();
        for (int idx = 0; idx < m; ++idx) {
            int p = pass == 0 ? sorted[idx] : sorted[m - 1 - idx];
            while (hull.size() >= base + 2 &&
                   orient(ps[hull[hull.size() - 2]], ps[hull.back()], ps[p]) !=
                       Orientation::CounterClockwise)
                hull.pop_back();
            hull.push_back(p);
        }
        hull.pop_back();  // endpoint repeats as the start of the next chain
    }
    return ConvexPolygon{hull};
}

namespace {

bool on_segment(const ColoredPoint& a, const ColoredPoint& b, const BigInt& qx, const BigInt& qy) {
    if (orient(a.x, a.y, b.x, b.y, qx, qy) != Orientation::Collinear) return false;
    BigInt dot = (qx - a.x) * (b.x - a.x) + (qy - a.y) * (b.y - a.y);
    if (sign(dot) < 0) return false;
    BigInt len2 = (b.x - a.x) * (b.x - a.x) + (b.y - a.y) * (b.y - a.y);
    return cmp(dot, len2) <= 0;
}

}  // namespace

bool hull_contains_scan(const ColoredPointSet& ps, const ConvexPolygon& hull, const BigInt& qx,
                        const BigInt& qy) {
    const auto& v = hull.vertex_ids;
    const int m = static_cast<int>(v.size());
    if (m == 0) return false;
    if (m == 1) return cmp(ps[v[0]].x, qx) == 0 && cmp(ps[v[0]].y, qy) == 0;
    if (m == 2) return on_segment(ps[v[0]], ps[v[1]], qx, qy);
    for (int i = 0; i < m; ++i) {
        const auto& a = ps[v[i]];
        const auto& b = ps[v[(i + 1) % m]];
        if (orient(a.x, a.y, b.x, b.y, qx, qy) == Orientation::Clockwise) return false;
    }
    return true;
}

bool hull_contains(const ColoredPointSet& ps, const ConvexPolygon& hull, const BigInt& qx,
                   const BigInt& qy) {
    const auto& v = hull.vertex_ids;
    const int m = static_cast<int>(v.size());
    if (m <= 2) return hull_contains_scan(ps, hull, qx, qy);
    const auto& v0 = ps[v[0]];
    Orientation s1 = orient(v0.x, v0.y, ps[v[1]].x, ps[v[1]].y, qx, qy);
    Orientation s2 = orient(v0.x, v0.y, ps[v[m - 1]].x, ps[v[m - 1]].y, qx, qy);
    if (s1 == Orientation::Clockwise) return false;
    if (s2 == Orientation::CounterClockwise) return false;
    // Last fan ray with q on or to its left.
    int lo = 1, hi = m - 1;
    while (lo + 1 < hi) {
        int mid = (lo + hi) / 2;
        if (orient(v0.x, v0.y, ps[v[mid]].x, ps[v[mid]].y, qx, qy) != Orientation::Clockwise)
            lo = mid;
        else
            hi = mid;
    }
    int last = (orient(v0.x, v0.y, ps[v[hi]].x, ps[v[hi]].y, qx, qy) != Orientation::Clockwise)
                   ? hi
                   : lo;
    if (last == m - 1) return on_segment(v0, ps[v[m - 1]], qx, qy);
    return orient(ps[v[last]].x, ps[v[last]].y, ps[v[last + 1]].x, ps[v[last + 1]].y, qx, qy) !=
           Orientation::Clockwise;
}

namespace {

Rat squared_distance_point(const ColoredPoint& a, const ColoredPoint& q) {
    BigInt dx = q.x - a.x;
    BigInt dy = q.y - a.y;
    return Rat(dx * dx + dy * dy);
}

Rat squared_distance_segment(const ColoredPoint& a, const ColoredPoint& b, const ColoredPoint& q) {
    BigInt ex = b.x - a.x;
    BigInt ey = b.y - a.y;
    BigInt dot = (q.x - a.x) * ex + (q.y - a.y) * ey;
    if (sign(dot) <= 0) return squared_distance_point(a, q);
    BigInt len2 = ex * ex + ey * ey;
    if (cmp(dot, len2) >= 0) return squared_distance_point(b, q);
    BigInt d2 = (q.x - a.x) * (q.x - a.x) + (q.y - a.y) * (q.y - a.y);
    return make_rat(d2 * len2 - dot * dot, len2);
}

}  // namespace

Rat squared_distance_to_hull_scan(const ColoredPointSet& ps, const ConvexPolygon& hull,
                                  const ColoredPoint& q) {
    const auto& v = hull.vertex_ids;
    const int m = static_cast<int>(v.size());
    if (m == 0) throw precondition_error("EmptyHull: distance to an empty hull is undefined");
    if (m == 1) return squared_distance_point(ps[v[0]], q);
    if (hull_contains_scan(ps, hull, q.x, q.y)) return Rat(0);
    Rat best = squared_distance_segment(ps[v[0]], ps[v[m == 2 ? 1 : m - 1]], q);
    for (int i = 0; i + 1 < m; ++i) {
        Rat d = squared_distance_segment(ps[v[i]], ps[v[i + 1]], q);
        if (d < best) best = d;
    }
    return best;
}

namespace {

// Edge i of a CCW polygon faces q if q is strictly on its outer side.
bool edge_faces(const ColoredPointSet& ps, const std::vector<int>& v, int i,
                const ColoredPoint& q) {
    const int m = static_cast<int>(v.size());
    const auto& a = ps[v[i]];
    const auto& b = ps[v[(i + 1) % m]];
    return orient(a, b, q) == Orientation::Clockwise;
}

int rat_dot_sign(const Rat& ax, const Rat& ay, const Rat& bx, const Rat& by) {
    BigInt lhs = ax.get_num() * bx.get_num() * ay.get_den() * by.get_den();
    BigInt rhs = -(ay.get_num() * by.get_num() * ax.get_den() * bx.get_den());
    return cmp(lhs, rhs);
}

// Index i of the fan sector [v_i, v_{i+1}) around the interior point c that
// contains the given rational direction. Vertices are strictly CCW-sorted
// around c, so this is an O(log m) angular binary search against v_0.
int crossed_edge(const ColoredPointSet& ps, const std::vector<int>& v, const RatPoint& c,
                 const Rat& dirx, const Rat& diry) {
    const int m = static_cast<int>(v.size());
    Rat w0x = Rat(ps[v[0]].x) - c.x;
    Rat w0y = Rat(ps[v[0]].y) - c.y;
    // Angular position class relative to w0: 0 on [w0, w0+pi), 1 otherwise.
    auto cls = [&](const Rat& ux, const Rat& uy) {
        int cr = rat_cross_sign(w0x, w0y, ux, uy);
        if (cr != 0) return cr > 0 ? 0 : 1;
        return rat_dot_sign(w0x, w0y, ux, uy) > 0 ? 0 : 1;
    };
    const int dcls = cls(dirx, diry);
    // True while angle(w_i) <= angle(dir), measured CCW from w0.
    auto not_past = [&](int i) {
        if (i == 0) return true;
        Rat wx = Rat(ps[v[i]].x) - c.x;
        Rat wy = Rat(ps[v[i]].y) - c.y;
        int icls = cls(wx, wy);
        if (icls != dcls) return icls < dcls;
        int cr = rat_cross_sign(wx, wy, dirx, diry);
        return cr >= 0;  // equal directions land in sector i
    };
    int lo = 0, hi = m - 1;
    while (lo < hi) {
        int mid = (lo + hi + 1) / 2;
        if (not_past(mid))
            lo = mid;
        else
            hi = mid - 1;
    }
    return lo;
}

}  // namespace

Rat squared_distance_to_hull(const ColoredPointSet& ps, const ConvexPolygon& hull,
                             const ColoredPoint& q) {
    const auto& v = hull.vertex_ids;
    const int m = static_cast<int>(v.size());
    if (m == 0) throw precondition_error("EmptyHull: distance to an empty hull is undefined");
    if (m < 8) return squared_distance_to_hull_scan(ps, hull, q);
    if (hull_contains(ps, hull, q.x, q.y)) return Rat(0);

    // Interior reference point: centroid of three spread vertices.
    RatPoint c;
    {
        const auto& a = ps[v[0]];
        const auto& b = ps[v[m / 3]];
        const auto& d = ps[v[2 * m / 3]];
        c.x = make_rat(a.x + b.x + d.x, BigInt(3));
        c.y = make_rat(a.y + b.y + d.y, BigInt(3));
    }
    Rat ux = Rat(q.x) - c.x;
    Rat uy = Rat(q.y) - c.y;

    // e0: a front-facing edge (crossed by ray c->q); e1: a back-facing edge
    // (crossed by the opposite ray).
    int e0 = crossed_edge(ps, v, c, ux, uy);
    if (!edge_faces(ps, v, e0, q)) {
        // q may sit exactly on the crossed edge's line; a neighbor then faces it.
        if (edge_faces(ps, v, (e0 + 1) % m, q))
            e0 = (e0 + 1) % m;
        else if (edge_faces(ps, v, (e0 + m - 1) % m, q))
            e0 = (e0 + m - 1) % m;
        else
            return squared_distance_to_hull_scan(ps, hull, q);
    }
    int e1 = crossed_edge(ps, v, c, -ux, -uy);
    if (edge_faces(ps, v, e1, q)) return squared_distance_to_hull_scan(ps, hull, q);

    // Front edges form one contiguous cyclic arc containing e0; e1 lies in the
    // complementary arc. Binary search both boundaries.
    auto fwd_steps = [&](int from, int to) { return (to - from + m) % m; };
    int span_fwd = fwd_steps(e0, e1);
    int lo = 0, hi = span_fwd;  // first non-facing offset forward from e0
    while (lo + 1 < hi) {
        int mid = (lo + hi) / 2;
        if (edge_faces(ps, v, (e0 + mid) % m, q))
            lo = mid;
        else
            hi = mid;
    }
    int arc_end = (e0 + lo) % m;  // last front-facing edge forward
    int span_bwd = fwd_steps(e1, e0);
    lo = 0;
    hi = span_bwd;
    while (lo + 1 < hi) {
        int mid = (lo + hi) / 2;
        if (edge_faces(ps, v, (e0 - mid + 2 * m) % m, q))
            lo = mid;
        else
            hi = mid;
    }
    int arc_start = (e0 - lo + 2 * m) % m;  // first front-facing edge backward

    // Chain of candidate vertices: arc_start .. arc_end+1 (inclusive, cyclic).
    int count = fwd_steps(arc_start, arc_end) + 2;
    auto vertex_at = [&](int t) { return v[(arc_start + t) % m]; };
    auto dist_at = [&](int t) { return squared_distance_point(ps[vertex_at(t)], q); };

    // Shrinking search over the unimodal vertex-distance sequence.
    int a = 0, b = count - 1;
    while (b - a > 3) {
        int m1 = a + (b - a) / 3;
        int m2 = b - (b - a) / 3;
        Rat d1 = dist_at(m1);
        Rat d2 = dist_at(m2);
        int cc = cmp(d1, d2);
        if (cc < 0)
            b = m2 - 1;
        else if (cc > 0)
            a = m1 + 1;
        else {
            a = m1;
            b = m2;
        }
    }
    int best_t = a;
    Rat best = dist_at(a);
    for (int t = a + 1; t <= b; ++t) {
        Rat d = dist_at(t);
        if (d < best) {
            best = d;
            best_t = t;
        }
    }
    // The nearest boundary point lies on an edge adjacent to the best vertex.
    if (best_t > 0) {
        Rat d = squared_distance_segment(ps[vertex_at(best_t - 1)], ps[vertex_at(best_t)], q);
        if (d < best) best = d;
    }
    if (best_t + 1 < count) {
        Rat d = squared_distance_segment(ps[vertex_at(best_t)], ps[vertex_at(best_t + 1)], q);
        if (d < best) best = d;
    }
    return best;
}

namespace {

// Half-plane classification for the clockwise sweep that starts at +x:
// 0 = below the x-axis or on +x, 1 = above or on -x.
int sweep_half(int sy, int sx) {
    if (sy < 0) return 0;
    if (sy == 0 && sx > 0) return 0;
    return 1;
}

}  // namespace

bool clockwise_less(const RatPoint& apex, const ColoredPoint& lhs, const ColoredPoint& rhs) {
    Rat lx = Rat(lhs.x) - apex.x;
    Rat ly = Rat(lhs.y) - apex.y;
    Rat rx = Rat(rhs.x) - apex.x;
    Rat ry = Rat(rhs.y) - apex.y;
    int hl = sweep_half(sign(ly), sign(lx));
    int hr = sweep_half(sign(ry), sign(rx));
    if (hl != hr) return hl < hr;
    int c = rat_cross_sign(lx, ly, rx, ry);
    if (c == 0)
        throw precondition_error("ApexOnLine(" + std::to_string(lhs.id) + "," +
                                 std::to_string(rhs.id) + "): points angularly equal from apex");
    return c < 0;
}

std::vector<int> angular_order(const RatPoint& apex, const ColoredPointSet& ps) {
    struct Entry {
        int id;
        int half;
        Rat dx, dy;
    };
    std::vector<Entry> entries;
    entries.reserve(ps.points.size());
    for (const auto& p : ps.points) {
        Entry e;
        e.id = p.id;
        e.dx = Rat(p.x) - apex.x;
        e.dy = Rat(p.y) - apex.y;
        if (sign(e.dx) == 0 && sign(e.dy) == 0)
            throw precondition_error("ApexOnLine: apex coincides with point " +
                                     std::to_string(p.id));
        e.half = sweep_half(sign(e.dy), sign(e.dx));
        entries.push_back(std::move(e));
    }
    std::sort(entries.begin(), entries.end(), [&](const Entry& a, const Entry& b) {
        if (a.half != b.half) return a.half < b.half;
        int c = rat_cross_sign(a.dx, a.dy, b.dx, b.dy);
        if (c == 0)
            throw precondition_error("ApexOnLine(" + std::to_string(a.id) + "," +
                                     std::to_string(b.id) + "): points angularly equal from apex");
        return c < 0;
    });
    std::vector<int> order;
    order.reserve(entries.size());
    for (const auto& e : entries) order.push_back(e.id);
    return order;
}

BigInt ceil_scale(const Rat& alpha, const BigInt& m) {
    if (sign(alpha) < 0 || cmp(alpha, Rat(1, 2)) > 0)
        throw input_error("AlphaOutOfRange: alpha must lie in [0, 1/2], got " +
                          rat_to_string(alpha));
    if (sign(m) < 0) throw input_error("ceil_scale: m must be non-negative");
    BigInt num = alpha.get_num() * m;
    BigInt q;
    mpz_cdiv_q(q.get_mpz_t(), num.get_mpz_t(), alpha.get_den().get_mpz_t());
    return q;
}

}  // namespace balis
