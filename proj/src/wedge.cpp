#include "balis/wedge.hpp"

#include <algorithm>

#include "balis/errors.hpp"

namespace balis {

bool wedge_contains(const ColoredPointSet& ps, const Wedge& w, int point_id) {
    if (w.first_id < 0) return false;  // empty wedge
    if (point_id == w.first_id || point_id == w.last_id) return true;
    const auto& q = ps[point_id];
    if (orient(w.apex, ps[w.first_id], q) != Orientation::Clockwise) return false;
    return orient(w.apex, ps[w.last_id], q) == Orientation::CounterClockwise;
}

Island wedge_to_island(const ColoredPointSet& ps, const Wedge& w) {
    std::vector<int> members;
    for (int id = 0; id < ps.size(); ++id)
        if (wedge_contains(ps, w, id)) members.push_back(id);
    Island isl = make_island(ps, std::move(members));
    if (!is_island(ps, isl))
        throw internal_error("wedge_to_island: wedge interior is not an island");
    return isl;
}

OrientFn rational_orient_fn(const ColoredPointSet& ps, const RatPoint& apex) {
    return [&ps, apex](int u, int w) { return orient(apex, ps[u], ps[w]); };
}

int AngularState::first_hit() const {
    if (!target_red || hits == 0) return -1;
    for (int s = 0; s < n; ++s)
        if (window_hit(s)) return s;
    return -1;
}

namespace {

void refresh_hit(AngularState& st, int s, bool present_before) {
    bool present_after = st.window_hit(s);
    if (present_before && !present_after) st.hits--;
    if (!present_before && present_after) st.hits++;
}

void recompute_flag(AngularState& st, int s, const OrientFn& orient_fn) {
    bool before = st.window_hit(s);
    bool convex;
    if (st.k == 1) {
        convex = true;  // a single ray is a degenerate convex wedge
    } else {
        convex = orient_fn(st.window_first(s), st.window_last(s)) == Orientation::Clockwise;
    }
    st.window_convex[static_cast<std::size_t>(s)] = convex ? 1 : 0;
    refresh_hit(st, s, before);
}

void add_red(AngularState& st, int s, int delta) {
    if (delta == 0) return;
    bool before = st.window_hit(s);
    st.window_red[static_cast<std::size_t>(s)] += delta;
    refresh_hit(st, s, before);
}

}  // namespace

AngularState init_state(const RatPoint& apex, const ColoredPointSet& ps, int k,
                        const OrientFn& orient_fn, std::optional<int> target_red) {
    const int n = ps.size();
    if (k < 1 || k > n) throw precondition_error("init_state: k must be in [1, n]");
    AngularState st;
    st.k = k;
    st.n = n;
    st.target_red = target_red;
    st.order = angular_order(apex, ps);
    st.pos.assign(static_cast<std::size_t>(n), -1);
    for (int p = 0; p < n; ++p) st.pos[static_cast<std::size_t>(st.order[static_cast<std::size_t>(p)])] = p;

    st.window_red.assign(static_cast<std::size_t>(n), 0);
    int red = 0;
    for (int t = 0; t < k; ++t)
        if (ps[st.order[static_cast<std::size_t>(t)]].color == Color::Red) red++;
    for (int s = 0; s < n; ++s) {
        st.window_red[static_cast<std::size_t>(s)] = red;
        // Slide: drop order[s], take order[(s + k) % n].
        if (ps[st.order[static_cast<std::size_t>(s)]].color == Color::Red) red--;
        if (ps[st.order[static_cast<std::size_t>((s + k) % n)]].color == Color::Red) red++;
    }
    st.window_convex.assign(static_cast<std::size_t>(n), 0);
    st.hits = 0;
    for (int s = 0; s < n; ++s) {
        bool convex = k == 1 || orient_fn(st.window_first(s), st.window_last(s)) ==
                                    Orientation::Clockwise;
        st.window_convex[static_cast<std::size_t>(s)] = convex ? 1 : 0;
        if (st.window_hit(s)) st.hits++;
    }
    return st;
}

void cross_line(AngularState& state, const ColoredPointSet& ps, int a, int b, bool inside_segment,
                const OrientFn& orient_fn) {
    const int n = state.n;
    const int k = state.k;
    if (inside_segment) {
        // Only the convexity of the windows spanned exactly by {a, b} can change.
        int sa = state.pos[static_cast<std::size_t>(a)];
        int sb = state.pos[static_cast<std::size_t>(b)];
        if (k >= 2) {
            if (state.window_last(sa) == b) recompute_flag(state, sa, orient_fn);
            if (state.window_last(sb) == a) recompute_flag(state, sb, orient_fn);
        }
        return;
    }
    int pa = state.pos[static_cast<std::size_t>(a)];
    int pb = state.pos[static_cast<std::size_t>(b)];
    int first, second;
    if ((pa + 1) % n == pb) {
        first = pa;
        second = pb;
    } else if ((pb + 1) % n == pa) {
        first = pb;
        second = pa;
    } else {
        throw internal_error("NonAdjacentSwap: crossing line(" + std::to_string(a) + "," +
                             std::to_string(b) + ") but points not angularly adjacent");
    }
    std::swap(state.order[static_cast<std::size_t>(first)],
              state.order[static_cast<std::size_t>(second)]);
    state.pos[static_cast<std::size_t>(state.order[static_cast<std::size_t>(first)])] = first;
    state.pos[static_cast<std::size_t>(state.order[static_cast<std::size_t>(second)])] = second;

    if (k < n) {
        // Point sets change for the window ending at `first` and starting at `second`.
        auto red_of = [&](int id) { return ps[id].color == Color::Red ? 1 : 0; };
        int out_first = state.order[static_cast<std::size_t>(second)];  // left the ending window
        int in_first = state.order[static_cast<std::size_t>(first)];
        int s_end = (first - k + 1 + 2 * n) % n;
        add_red(state, s_end, red_of(in_first) - red_of(out_first));
        add_red(state, second, red_of(out_first) - red_of(in_first));
    }
    if (k >= 2) {
        // Windows whose first or last element sits at the swapped positions.
        int touched[4] = {first, second, (first - k + 1 + 2 * n) % n,
                          (second - k + 1 + 2 * n) % n};
        for (int t = 0; t < 4; ++t) {
            bool dup = false;
            for (int u = 0; u < t; ++u) dup |= touched[u] == touched[t];
            if (!dup) recompute_flag(state, touched[t], orient_fn);
        }
    }
}

bool states_equivalent(const AngularState& lhs, const AngularState& rhs) {
    if (lhs.n != rhs.n || lhs.k != rhs.k) return false;
    const int n = lhs.n;
    if (n == 0) return true;
    int d = rhs.pos[static_cast<std::size_t>(lhs.order[0])];  // rotation offset
    for (int s = 0; s < n; ++s) {
        int s2 = (s + d) % n;
        if (lhs.order[static_cast<std::size_t>(s)] != rhs.order[static_cast<std::size_t>(s2)])
            return false;
        if (lhs.window_red[static_cast<std::size_t>(s)] !=
            rhs.window_red[static_cast<std::size_t>(s2)])
            return false;
        if (lhs.window_convex[static_cast<std::size_t>(s)] !=
            rhs.window_convex[static_cast<std::size_t>(s2)])
            return false;
    }
    return true;
}

namespace {

// Per-line apex sides maintained by the DFS; orient(apex, u, w) lookups
// become integer sign reads.
struct SignVector {
    const LineArrangement* arr;
    std::vector<int> pair_line;  // n*n -> line index
    std::vector<std::int8_t> side;
    int n;

    void init(const LineArrangement& arrangement, const RatPoint& sample) {
        arr = &arrangement;
        n = arrangement.parent().size();
        pair_line.assign(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), -1);
        for (int l = 0; l < static_cast<int>(arrangement.lines.size()); ++l) {
            const auto& ln = arrangement.lines[static_cast<std::size_t>(l)];
            pair_line[static_cast<std::size_t>(ln.i) * n + ln.j] = l;
            pair_line[static_cast<std::size_t>(ln.j) * n + ln.i] = l;
        }
        side.resize(arrangement.lines.size());
        for (std::size_t l = 0; l < arrangement.lines.size(); ++l) {
            int s = arrangement.lines[l].side(sample);
            if (s == 0) throw internal_error("arrangement sample lies on a line");
            side[l] = static_cast<std::int8_t>(s);
        }
    }

    void flip(int line) { side[static_cast<std::size_t>(line)] = -side[static_cast<std::size_t>(line)]; }

    Orientation orient_apex(int u, int w) const {
        int l = pair_line[static_cast<std::size_t>(u) * n + w];
        const auto& ln = arr->lines[static_cast<std::size_t>(l)];
        int s = side[static_cast<std::size_t>(l)];
        if (ln.flipped) s = -s;
        // side gives sign of orient(p_i, p_j, apex) = orient(apex, u, w) for
        // (u, w) == (i, j); reversed query flips.
        if (u != ln.i) s = -s;
        return s > 0 ? Orientation::CounterClockwise : Orientation::Clockwise;
    }
};

std::optional<Wedge> verify_and_make(const ColoredPointSet& ps, const RatPoint& apex,
                                     const AngularState& st, int s, const TargetCounts& t) {
    Wedge w{apex, st.window_first(s), st.window_last(s)};
    int red = 0, blue = 0;
    for (int id = 0; id < ps.size(); ++id)
        if (wedge_contains(ps, w, id)) (ps[id].color == Color::Red ? red : blue)++;
    if (red != t.red || blue != t.blue)
        throw internal_error("wedge_search: window counts disagree with direct containment");
    return w;
}

}  // namespace

std::optional<Wedge> wedge_search(const ColoredPointSet& ps, const TargetCounts& t,
                                  WedgeSearchStats* stats, bool exhaustive,
                                  const CellObserver& on_cell) {
    const int n = ps.size();
    const int k = t.total();
    if (k == 0) {
        // Immediate success: the empty wedge is a valid certificate.
        if (stats) stats->cells_visited = 0, stats->hits = 1;
        return Wedge{RatPoint{Rat(0), Rat(0)}, -1, -1};
    }
    if (k < 0 || k > n) throw precondition_error("wedge_search: k must be in [0, n]");
    if (t.red < 0 || t.blue < 0 || t.red > ps.red_count || t.blue > ps.blue_count)
        return std::nullopt;

    if (n == 1) {
        // Single point: a ray from an apex just left of it.
        bool match = ps[0].color == Color::Red ? (t.red == 1 && t.blue == 0)
                                               : (t.red == 0 && t.blue == 1);
        if (stats) stats->cells_visited = 1, stats->hits = match ? 1 : 0;
        if (!match) return std::nullopt;
        RatPoint apex{Rat(ps[0].x - 1), Rat(ps[0].y)};
        return Wedge{apex, 0, 0};
    }

    LineArrangement arr = build_arrangement(ps);
    const auto cells = arr.cells();
    const int root = cells.front();

    SignVector sv;
    RatPoint root_sample = arr.face_sample(root);
    sv.init(arr, root_sample);
    OrientFn orient_fn = [&sv](int u, int w) { return sv.orient_apex(u, w); };

    AngularState st = init_state(root_sample, ps, k, orient_fn, t.red);

    std::optional<Wedge> found;
    long visited = 0, hit_cells = 0;
    auto check_cell = [&](int face) {
        visited++;
        if (on_cell) on_cell(face, st);
        if (st.hits > 0) {
            hit_cells++;
            if (!found) {
                RatPoint apex = arr.face_sample(face);
                found = verify_and_make(ps, apex, st, st.first_hit(), t);
            }
        }
    };

    check_cell(root);
    if (found && !exhaustive) {
        if (stats) stats->cells_visited = visited, stats->hits = hit_cells;
        return found;
    }

    // Iterative DFS over the cell dual graph; crossings are undone on retreat.
    std::vector<char> seen(static_cast<std::size_t>(arr.face_count()), 0);
    seen[static_cast<std::size_t>(root)] = 1;
    seen[static_cast<std::size_t>(arr.outer_face)] = 1;

    struct Frame {
        int face;
        int h;      // boundary cursor
        int stop;   // cycle start
        int entry;  // half-edge used to enter (-1 at root)
        bool started = false;
    };
    auto cross_edge = [&](int h) {
        const auto& he = arr.half_edges[static_cast<std::size_t>(h)];
        const auto& ln = arr.lines[static_cast<std::size_t>(he.line)];
        sv.flip(he.line);
        cross_line(st, ps, ln.i, ln.j, he.inside_segment, orient_fn);
    };

    std::vector<Frame> stack;
    int root_h = arr.face_edge[static_cast<std::size_t>(root)];
    stack.push_back({root, root_h, root_h, -1, false});
    while (!stack.empty()) {
        Frame& fr = stack.back();
        if (fr.started && fr.h == fr.stop) {
            if (fr.entry >= 0) cross_edge(fr.entry);  // undo on the way out
            stack.pop_back();
            continue;
        }
        fr.started = true;
        int cur = fr.h;
        const auto& he = arr.half_edges[static_cast<std::size_t>(cur)];
        fr.h = he.next;
        if (he.line < 0) continue;  // box boundary
        int neighbor = arr.half_edges[static_cast<std::size_t>(arr.twin(cur))].face;
        if (seen[static_cast<std::size_t>(neighbor)]) continue;
        seen[static_cast<std::size_t>(neighbor)] = 1;
        cross_edge(cur);
        check_cell(neighbor);
        if (found && !exhaustive) break;
        int entry = arr.twin(cur);
        stack.push_back({neighbor, entry, entry, entry, false});
    }

    if (stats) {
        stats->cells_visited = visited;
        stats->hits = hit_cells;
    }
    return found;
}

bool wedge_cell_scan_finds(const ColoredPointSet& ps, const TargetCounts& t) {
    const int n = ps.size();
    const int k = t.total();
    if (k < 1 || k > n) throw precondition_error("wedge_cell_scan_finds: k must be in [1, n]");
    if (n == 1)
        return ps[0].color == Color::Red ? (t.red == 1 && t.blue == 0)
                                         : (t.red == 0 && t.blue == 1);
    LineArrangement arr = build_arrangement(ps);
    for (int face : arr.cells()) {
        RatPoint apex = arr.face_sample(face);
        AngularState st = init_state(apex, ps, k, rational_orient_fn(ps, apex), t.red);
        if (st.hits > 0) return true;
    }
    return false;
}

}  // namespace balis
