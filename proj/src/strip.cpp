#include "balis/strip.hpp"

#include <algorithm>

#include "balis/errors.hpp"
#include "balis/geom.hpp"

namespace balis {

namespace {

BigInt dot_axis(const ColoredPoint& p, const BigInt& dx, const BigInt& dy) {
    return p.x * dx + p.y * dy;
}

// Slope of the line through the pair as (dy, dx) with dx >= 0; vertical pairs
// normalize to (1, 0) and sort last.
std::pair<BigInt, BigInt> pair_slope(const ColoredPointSet& ps, int i, int j) {
    BigInt dx = ps[j].x - ps[i].x;
    BigInt dy = ps[j].y - ps[i].y;
    if (sign(dx) < 0) {
        dx = -dx;
        dy = -dy;
    }
    if (sign(dx) == 0) return {BigInt(1), BigInt(0)};
    return {dy, dx};
}

// -1 / 0 / +1 comparison of slopes (dy, dx) with dx >= 0, vertical = (1, 0).
int slope_cmp(const std::pair<BigInt, BigInt>& a, const std::pair<BigInt, BigInt>& b) {
    bool va = sign(a.second) == 0, vb = sign(b.second) == 0;
    if (va && vb) return 0;
    if (va) return 1;
    if (vb) return -1;
    BigInt lhs = a.first * b.second;
    BigInt rhs = b.first * a.second;
    return cmp(lhs, rhs);
}

}  // namespace

bool strip_contains(const ColoredPointSet& ps, const Strip& s, int point_id) {
    if (s.first_id < 0) return false;
    BigInt lo = dot_axis(ps[s.first_id], s.dir_x, s.dir_y);
    BigInt hi = dot_axis(ps[s.last_id], s.dir_x, s.dir_y);
    if (cmp(lo, hi) > 0) std::swap(lo, hi);
    BigInt v = dot_axis(ps[point_id], s.dir_x, s.dir_y);
    return cmp(lo, v) <= 0 && cmp(v, hi) <= 0;
}

Island strip_to_island(const ColoredPointSet& ps, const Strip& s) {
    std::vector<int> members;
    for (int id = 0; id < ps.size(); ++id)
        if (strip_contains(ps, s, id)) members.push_back(id);
    Island isl = make_island(ps, std::move(members));
    if (!is_island(ps, isl))
        throw internal_error("strip_to_island: strip interior is not an island");
    return isl;
}

std::vector<SlopeEvent> slope_events(const ColoredPointSet& ps) {
    const int n = ps.size();
    std::vector<SlopeEvent> events;
    events.reserve(static_cast<std::size_t>(n) * (n - 1) / 2);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) events.push_back({i, j});
    std::sort(events.begin(), events.end(), [&](const SlopeEvent& a, const SlopeEvent& b) {
        int c = slope_cmp(pair_slope(ps, a.i, a.j), pair_slope(ps, b.i, b.j));
        if (c != 0) return c < 0;
        if (a.i != b.i) return a.i < b.i;
        return a.j < b.j;
    });
    return events;
}

int ProjectionOrder::first_hit() const {
    if (!target_red || hits == 0) return -1;
    for (int s = 0; s < window_count(); ++s)
        if (window_hit(s)) return s;
    return -1;
}

ProjectionOrder initial_order(const ColoredPointSet& ps, int k, std::optional<int> target_red) {
    const int n = ps.size();
    if (k < 1 || k > n) throw precondition_error("initial_order: k must be in [1, n]");
    ProjectionOrder po;
    po.k = k;
    po.n = n;
    po.target_red = target_red;
    po.order = shear_order(ps);
    po.pos.assign(static_cast<std::size_t>(n), -1);
    for (int t = 0; t < n; ++t) po.pos[static_cast<std::size_t>(po.order[static_cast<std::size_t>(t)])] = t;
    po.window_red.assign(static_cast<std::size_t>(n - k + 1), 0);
    int red = 0;
    for (int t = 0; t < k; ++t)
        if (ps[po.order[static_cast<std::size_t>(t)]].color == Color::Red) red++;
    for (int s = 0; s + k <= n; ++s) {
        po.window_red[static_cast<std::size_t>(s)] = red;
        if (s + k < n) {
            if (ps[po.order[static_cast<std::size_t>(s)]].color == Color::Red) red--;
            if (ps[po.order[static_cast<std::size_t>(s + k)]].color == Color::Red) red++;
        }
    }
    po.hits = 0;
    for (int s = 0; s < po.window_count(); ++s)
        if (po.window_hit(s)) po.hits++;
    return po;
}

std::vector<int> order_along(const ColoredPointSet& ps, const BigInt& dx, const BigInt& dy) {
    std::vector<int> ids(static_cast<std::size_t>(ps.size()));
    for (int i = 0; i < ps.size(); ++i) ids[static_cast<std::size_t>(i)] = i;
    std::sort(ids.begin(), ids.end(), [&](int a, int b) {
        int c = cmp(dot_axis(ps[a], dx, dy), dot_axis(ps[b], dx, dy));
        if (c == 0)
            throw precondition_error("order_along: two points project equally on the axis");
        return c < 0;
    });
    return ids;
}

std::vector<int> advance(ProjectionOrder& order, const ColoredPointSet& ps, const SlopeEvent& e) {
    const int n = order.n;
    const int k = order.k;
    int pa = order.pos[static_cast<std::size_t>(e.i)];
    int pb = order.pos[static_cast<std::size_t>(e.j)];
    if (pa > pb) std::swap(pa, pb);
    if (pb != pa + 1)
        throw internal_error("NonAdjacentSwap: event pair (" + std::to_string(e.i) + "," +
                             std::to_string(e.j) + ") not adjacent in the projection order");
    std::swap(order.order[static_cast<std::size_t>(pa)], order.order[static_cast<std::size_t>(pb)]);
    order.pos[static_cast<std::size_t>(order.order[static_cast<std::size_t>(pa)])] = pa;
    order.pos[static_cast<std::size_t>(order.order[static_cast<std::size_t>(pb)])] = pb;

    std::vector<int> changed;
    auto red_of = [&](int id) { return ps[id].color == Color::Red ? 1 : 0; };
    int now_left = order.order[static_cast<std::size_t>(pa)];
    int now_right = order.order[static_cast<std::size_t>(pb)];
    int delta = red_of(now_left) - red_of(now_right);
    if (delta != 0) {
        // Window ending at pa loses the old left point, gains the new one.
        int s_end = pa - k + 1;
        if (s_end >= 0) {
            bool before = order.window_hit(s_end);
            order.window_red[static_cast<std::size_t>(s_end)] += delta;
            bool after = order.window_hit(s_end);
            order.hits += (after ? 1 : 0) - (before ? 1 : 0);
            changed.push_back(s_end);
        }
        // Window starting at pb gains the old left point, loses the new one.
        if (pb + k - 1 < n) {
            bool before = order.window_hit(pb);
            order.window_red[static_cast<std::size_t>(pb)] -= delta;
            bool after = order.window_hit(pb);
            order.hits += (after ? 1 : 0) - (before ? 1 : 0);
            changed.push_back(pb);
        }
    }
    return changed;
}

std::pair<BigInt, BigInt> axis_after(const ColoredPointSet& ps,
                                     const std::vector<SlopeEvent>& events, int processed) {
    // Steep enough that ordering by <p, axis> is (x, y)-lexicographic.
    BigInt max_dy(0);
    for (const auto& p : ps.points) {
        BigInt a = abs(p.y);
        if (cmp(a, max_dy) > 0) max_dy = a;
    }
    BigInt steep = 2 * max_dy + 1;
    if (processed <= 0) return {steep, BigInt(1)};
    if (processed >= static_cast<int>(events.size())) return {-steep, BigInt(-1)};

    auto slope_before = pair_slope(ps, events[static_cast<std::size_t>(processed - 1)].i,
                                   events[static_cast<std::size_t>(processed - 1)].j);
    auto slope_next = pair_slope(ps, events[static_cast<std::size_t>(processed)].i,
                                 events[static_cast<std::size_t>(processed)].j);
    if (slope_cmp(slope_before, slope_next) == 0)
        throw precondition_error("axis_after: position inside an equal-slope group");
    // Strip direction strictly between the two slopes: the mediant. For a
    // vertical successor (1, 0) the mediant still lands strictly between.
    BigInt vy = slope_before.first + slope_next.first;
    BigInt vx = slope_before.second + slope_next.second;
    // Axis = strip direction rotated +90 degrees. This is the rotation that
    // continues the initial axis (steep, 1) as the sweep starts just below
    // every event slope and ends just past vertical at (-steep, -1).
    return {-vy, vx};
}

std::optional<Strip> strip_search(const ColoredPointSet& ps, const TargetCounts& t,
                                  StripSearchStats* stats, bool exhaustive) {
    const int n = ps.size();
    const int k = t.total();
    if (k < 1 || k > n) throw precondition_error("strip_search: k must be in [1, n]");
    if (t.red < 0 || t.blue < 0 || t.red > ps.red_count || t.blue > ps.blue_count)
        return std::nullopt;

    std::vector<SlopeEvent> events = slope_events(ps);
    ProjectionOrder po = initial_order(ps, k, t.red);

    std::optional<Strip> found;
    long hits = 0;
    auto try_report = [&](int processed) {
        if (po.hits == 0) return;
        hits += po.hits;
        if (found) return;
        auto [ax, ay] = axis_after(ps, events, processed);
        int s = po.first_hit();
        Strip cand{ax, ay, po.order[static_cast<std::size_t>(s)],
                   po.order[static_cast<std::size_t>(s + k - 1)]};
        int red = 0, blue = 0;
        for (int id = 0; id < n; ++id)
            if (strip_contains(ps, cand, id)) (ps[id].color == Color::Red ? red : blue)++;
        if (red != t.red || blue != t.blue)
            throw internal_error("strip_search: window counts disagree with direct containment");
        found = cand;
    };

    try_report(0);
    long processed = 0;
    if (!(found && !exhaustive)) {
        const long total = static_cast<long>(events.size());
        for (long e = 0; e < total; ++e) {
            advance(po, ps, events[static_cast<std::size_t>(e)]);
            processed++;
            bool group_end =
                e + 1 == total ||
                slope_cmp(pair_slope(ps, events[static_cast<std::size_t>(e)].i,
                                     events[static_cast<std::size_t>(e)].j),
                          pair_slope(ps, events[static_cast<std::size_t>(e + 1)].i,
                                     events[static_cast<std::size_t>(e + 1)].j)) != 0;
            if (group_end) {
                try_report(static_cast<int>(e) + 1);
                if (found && !exhaustive) break;
            }
        }
    }
    if (stats) {
        stats->events_processed = processed;
        stats->hits = hits;
    }
    return found;
}

}  // namespace balis
