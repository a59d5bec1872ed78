#include "balis/arrangement.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <tuple>
#include <unordered_map>

#include "balis/errors.hpp"

namespace balis {

int ArrangementLine::side(const RatPoint& p) const {
    // sign of a*px + b*py + c with rational px, py
    BigInt v = a * p.x.get_num() * p.y.get_den() + b * p.y.get_num() * p.x.get_den() +
               c * p.x.get_den() * p.y.get_den();
    return sign(v);
}

int ArrangementLine::side(const BigInt& x, const BigInt& y) const {
    BigInt v = a * x + b * y + c;
    return sign(v);
}

ArrangementLine line_through(const ColoredPointSet& ps, int i, int j) {
    if (i > j) std::swap(i, j);
    const auto& p = ps[i];
    const auto& q = ps[j];
    ArrangementLine ln;
    ln.i = i;
    ln.j = j;
    // L(z) = cross(q - p, z - p): positive on the CCW side of p->q.
    ln.a = p.y - q.y;
    ln.b = q.x - p.x;
    ln.c = p.x * q.y - q.x * p.y;
    BigInt g;
    mpz_gcd(g.get_mpz_t(), ln.a.get_mpz_t(), ln.b.get_mpz_t());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), ln.c.get_mpz_t());
    if (sign(g) != 0) {
        ln.a /= g;
        ln.b /= g;
        ln.c /= g;
    }
    if (sign(ln.a) < 0 || (sign(ln.a) == 0 && sign(ln.b) < 0)) {
        ln.a = -ln.a;
        ln.b = -ln.b;
        ln.c = -ln.c;
        ln.flipped = true;
    }
    return ln;
}

ArrangementLine synthetic_line(BigInt a, BigInt b, BigInt c, bool crossable) {
    ArrangementLine ln;
    ln.a = std::move(a);
    ln.b = std::move(b);
    ln.c = std::move(c);
    ln.crossable = crossable;
    BigInt g;
    mpz_gcd(g.get_mpz_t(), ln.a.get_mpz_t(), ln.b.get_mpz_t());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), ln.c.get_mpz_t());
    if (sign(g) != 0) {
        ln.a /= g;
        ln.b /= g;
        ln.c /= g;
    }
    if (sign(ln.a) < 0 || (sign(ln.a) == 0 && sign(ln.b) < 0)) {
        ln.a = -ln.a;
        ln.b = -ln.b;
        ln.c = -ln.c;
        ln.flipped = true;
    }
    return ln;
}

namespace {

constexpr int kPointMarker = -5;

struct RatPointHash {
    std::size_t operator()(const std::pair<Rat, Rat>& p) const {
        std::size_t h = hash_rat(p.first);
        h ^= hash_rat(p.second) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
        return h;
    }
};

struct RatPointEq {
    bool operator()(const std::pair<Rat, Rat>& a, const std::pair<Rat, Rat>& b) const {
        return mpq_equal(a.first.get_mpq_t(), b.first.get_mpq_t()) &&
               mpq_equal(a.second.get_mpq_t(), b.second.get_mpq_t());
    }
};

// CCW-from-+x comparison of direction vectors.
bool dir_ccw_less(const std::pair<BigInt, BigInt>& u, const std::pair<BigInt, BigInt>& v) {
    auto cls = [](const std::pair<BigInt, BigInt>& d) {
        int sy = sign(d.second);
        int sx = sign(d.first);
        return (sy > 0 || (sy == 0 && sx > 0)) ? 0 : 1;
    };
    int cu = cls(u), cv = cls(v);
    if (cu != cv) return cu < cv;
    BigInt cr = u.first * v.second - u.second * v.first;
    return sign(cr) > 0;
}

}  // namespace

std::vector<int> LineArrangement::cells() const {
    std::vector<int> result;
    result.reserve(face_edge.size());
    for (int f = 0; f < static_cast<int>(face_edge.size()); ++f)
        if (f != outer_face) result.push_back(f);
    return result;
}

RatPoint LineArrangement::vertex_point(int v) const {
    auto [ca, cb] = vertex_defs[static_cast<std::size_t>(v)];
    if (ca == kPointMarker) return to_rat(parent()[cb]);
    // Express both curves as exact lines ax + by + c = 0.
    auto coeffs = [&](int curve) -> std::array<BigInt, 3> {
        if (curve >= 0) {
            const auto& ln = lines[static_cast<std::size_t>(curve)];
            return {ln.a, ln.b, ln.c};
        }
        switch (curve) {
            case kBoxLeft: return {BigInt(1), BigInt(0), box};
            case kBoxRight: return {BigInt(1), BigInt(0), -box};
            case kBoxBottom: return {BigInt(0), BigInt(1), box};
            default: return {BigInt(0), BigInt(1), -box};  // kBoxTop
        }
    };
    auto [a1, b1, c1] = coeffs(ca);
    auto [a2, b2, c2] = coeffs(cb);
    BigInt den = a1 * b2 - a2 * b1;
    if (sign(den) == 0) throw internal_error("vertex_point: defining curves parallel");
    RatPoint p;
    p.x = make_rat(b1 * c2 - b2 * c1, den);
    p.y = make_rat(a2 * c1 - a1 * c2, den);
    return p;
}

RatPoint LineArrangement::face_sample(int face) const {
    int h0 = face_edge[static_cast<std::size_t>(face)];
    int h = h0;
    // Find a strict corner: three consecutive cycle vertices that turn.
    int guard = 0;
    do {
        int h1 = half_edges[static_cast<std::size_t>(h)].next;
        int u = half_edges[static_cast<std::size_t>(twin(h))].head;
        int v = half_edges[static_cast<std::size_t>(h)].head;
        int w = half_edges[static_cast<std::size_t>(h1)].head;
        RatPoint pu = vertex_point(u), pv = vertex_point(v), pw = vertex_point(w);
        if (orient(pu, pv, pw) != Orientation::Collinear) {
            RatPoint s;
            s.x = (pu.x + pv.x + pw.x) / 3;
            s.y = (pu.y + pv.y + pw.y) / 3;
            return s;
        }
        h = h1;
        if (++guard > static_cast<int>(half_edges.size()))
            throw internal_error("face_sample: no strict corner found");
    } while (h != h0);
    throw internal_error("face_sample: degenerate face");
}

LineArrangement build_arrangement(const ColoredPointSet& ps) {
    const int n = ps.size();
    if (n < 2) throw precondition_error("build_arrangement: needs n >= 2");
    std::vector<ArrangementLine> lines;
    lines.reserve(static_cast<std::size_t>(n) * (n - 1) / 2);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) lines.push_back(line_through(ps, i, j));
    return build_arrangement(ps, std::move(lines));
}

LineArrangement build_arrangement(const ColoredPointSet& ps,
                                  std::vector<ArrangementLine> input_lines) {
    const int n = ps.size();
    LineArrangement arr;
    arr.parent_ = &ps;

    // Dedupe by normalized coefficients. General position makes this a no-op
    // for pair lines; coinciding synthetic boundaries stay uncrossable.
    {
        std::map<std::tuple<BigInt, BigInt, BigInt>, int> seen;
        for (auto& ln : input_lines) {
            auto key = std::make_tuple(ln.a, ln.b, ln.c);
            auto [it, inserted] = seen.emplace(key, static_cast<int>(arr.lines.size()));
            if (inserted) {
                arr.lines.push_back(std::move(ln));
            } else {
                auto& kept = arr.lines[static_cast<std::size_t>(it->second)];
                kept.crossable = kept.crossable && ln.crossable;
                if (kept.i < 0 && ln.i >= 0) {
                    kept.i = ln.i;
                    kept.j = ln.j;
                    kept.flipped = ln.flipped;
                }
            }
        }
    }
    const int m = static_cast<int>(arr.lines.size());
    if (m < 1) throw precondition_error("build_arrangement: needs at least one line");

    // Vertex registry: exact coordinates -> id. Coordinates are only needed
    // during construction; vertex_point() recomputes them afterwards.
    std::vector<RatPoint> coords;
    std::unordered_map<std::pair<Rat, Rat>, int, RatPointHash, RatPointEq> registry;
    auto add_vertex = [&](RatPoint p, std::pair<int, int> def) {
        auto key = std::make_pair(p.x, p.y);
        auto it = registry.find(key);
        if (it != registry.end()) return it->second;
        int id = static_cast<int>(coords.size());
        registry.emplace(std::move(key), id);
        coords.push_back(std::move(p));
        arr.vertex_defs.push_back(def);
        return id;
    };

    std::vector<std::vector<int>> line_events(static_cast<std::size_t>(m));
    std::vector<int> point_vertex(static_cast<std::size_t>(n));

    // Defining points are vertices on their lines; registering them explicitly
    // keeps the n = 2 case (no line crossings) correct and anchors the
    // inside-segment marking.
    std::fill(point_vertex.begin(), point_vertex.end(), -1);
    for (int l = 0; l < m; ++l) {
        const auto& ln = arr.lines[static_cast<std::size_t>(l)];
        if (ln.i < 0) continue;
        for (int pt : {ln.i, ln.j}) {
            if (point_vertex[static_cast<std::size_t>(pt)] < 0)
                point_vertex[static_cast<std::size_t>(pt)] =
                    add_vertex(to_rat(ps[pt]), {kPointMarker, pt});
            line_events[static_cast<std::size_t>(l)].push_back(
                point_vertex[static_cast<std::size_t>(pt)]);
        }
    }

    // All pairwise line crossings.
    for (int l1 = 0; l1 < m; ++l1) {
        const auto& A = arr.lines[static_cast<std::size_t>(l1)];
        for (int l2 = l1 + 1; l2 < m; ++l2) {
            const auto& B = arr.lines[static_cast<std::size_t>(l2)];
            BigInt den = A.a * B.b - B.a * A.b;
            if (sign(den) == 0) continue;  // parallel
            RatPoint p;
            p.x = make_rat(A.b * B.c - B.b * A.c, den);
            p.y = make_rat(B.a * A.c - A.a * B.c, den);
            int v = add_vertex(std::move(p), {l1, l2});
            line_events[static_cast<std::size_t>(l1)].push_back(v);
            line_events[static_cast<std::size_t>(l2)].push_back(v);
        }
    }

    // Clip box strictly beyond every vertex and input point.
    {
        BigInt maxi(1);
        for (const auto& p : coords) {
            BigInt cx, cy;
            mpz_cdiv_q(cx.get_mpz_t(), BigInt(abs(p.x.get_num())).get_mpz_t(),
                       p.x.get_den().get_mpz_t());
            mpz_cdiv_q(cy.get_mpz_t(), BigInt(abs(p.y.get_num())).get_mpz_t(),
                       p.y.get_den().get_mpz_t());
            if (cmp(cx, maxi) > 0) maxi = cx;
            if (cmp(cy, maxi) > 0) maxi = cy;
        }
        arr.box = 2 * (maxi + 1);
    }
    const BigInt& K = arr.box;

    // Box crossings of each line.
    for (int l = 0; l < m; ++l) {
        const auto& ln = arr.lines[static_cast<std::size_t>(l)];
        std::vector<std::pair<RatPoint, int>> hits;
        if (sign(ln.b) != 0) {
            for (int side : {LineArrangement::kBoxLeft, LineArrangement::kBoxRight}) {
                BigInt x = (side == LineArrangement::kBoxLeft) ? -K : K;
                Rat y = make_rat(-(ln.a * x + ln.c), ln.b);
                if (cmp(y, Rat(-K)) >= 0 && cmp(y, Rat(K)) <= 0)
                    hits.push_back({RatPoint{Rat(x), y}, side});
            }
        }
        if (sign(ln.a) != 0) {
            for (int side : {LineArrangement::kBoxBottom, LineArrangement::kBoxTop}) {
                BigInt y = (side == LineArrangement::kBoxBottom) ? -K : K;
                Rat x = make_rat(-(ln.b * y + ln.c), ln.a);
                if (cmp(x, Rat(-K)) >= 0 && cmp(x, Rat(K)) <= 0)
                    hits.push_back({RatPoint{x, Rat(y)}, side});
            }
        }
        for (auto& [p, side] : hits) {
            int v = add_vertex(std::move(p), {l, side});
            line_events[static_cast<std::size_t>(l)].push_back(v);
        }
    }

    // Box corners.
    std::vector<int> box_vertices;
    {
        const std::pair<std::pair<int, int>, std::pair<int, int>> corners[4] = {
            {{-1, -1}, {LineArrangement::kBoxLeft, LineArrangement::kBoxBottom}},
            {{1, -1}, {LineArrangement::kBoxRight, LineArrangement::kBoxBottom}},
            {{1, 1}, {LineArrangement::kBoxRight, LineArrangement::kBoxTop}},
            {{-1, 1}, {LineArrangement::kBoxLeft, LineArrangement::kBoxTop}},
        };
        for (const auto& [sgn, def] : corners) {
            RatPoint p{Rat(sgn.first * K), Rat(sgn.second * K)};
            box_vertices.push_back(add_vertex(std::move(p), def));
        }
    }
    for (const auto& [key, id] : registry) {
        const Rat& x = key.first;
        const Rat& y = key.second;
        bool on_box = cmp(abs(x), Rat(K)) == 0 || cmp(abs(y), Rat(K)) == 0;
        if (on_box) box_vertices.push_back(id);
    }
    std::sort(box_vertices.begin(), box_vertices.end());
    box_vertices.erase(std::unique(box_vertices.begin(), box_vertices.end()),
                       box_vertices.end());

    // Undirected edges: (u, v, line, inside_segment).
    struct Edge {
        int u, v, line;
        bool inside;
    };
    std::vector<Edge> edges;

    for (int l = 0; l < m; ++l) {
        auto& evs = line_events[static_cast<std::size_t>(l)];
        std::sort(evs.begin(), evs.end());
        evs.erase(std::unique(evs.begin(), evs.end()), evs.end());
        const auto& ln = arr.lines[static_cast<std::size_t>(l)];
        const bool by_x = sign(ln.b) != 0;  // vertical lines sort by y
        std::sort(evs.begin(), evs.end(), [&](int a, int b) {
            const RatPoint& pa = coords[static_cast<std::size_t>(a)];
            const RatPoint& pb = coords[static_cast<std::size_t>(b)];
            return by_x ? (cmp(pa.x, pb.x) < 0) : (cmp(pa.y, pb.y) < 0);
        });
        int pos_i = -1, pos_j = -1;
        if (ln.i >= 0) {
            for (int t = 0; t < static_cast<int>(evs.size()); ++t) {
                if (evs[static_cast<std::size_t>(t)] ==
                    point_vertex[static_cast<std::size_t>(ln.i)])
                    pos_i = t;
                if (evs[static_cast<std::size_t>(t)] ==
                    point_vertex[static_cast<std::size_t>(ln.j)])
                    pos_j = t;
            }
            if (pos_i > pos_j) std::swap(pos_i, pos_j);
        }
        for (int t = 0; t + 1 < static_cast<int>(evs.size()); ++t) {
            bool inside = pos_i >= 0 && t >= pos_i && t + 1 <= pos_j;
            edges.push_back({evs[static_cast<std::size_t>(t)], evs[static_cast<std::size_t>(t + 1)],
                             l, inside});
        }
    }

    // Box boundary edges, walked CCW: bottom, right, top, left.
    {
        auto side_rank = [&](int v) {
            const RatPoint& p = coords[static_cast<std::size_t>(v)];
            bool left = cmp(p.x, Rat(-K)) == 0;
            bool right = cmp(p.x, Rat(K)) == 0;
            bool bottom = cmp(p.y, Rat(-K)) == 0;
            bool top = cmp(p.y, Rat(K)) == 0;
            // Corners belong to the side on which the walk reaches them last.
            if (bottom && !left) return std::make_pair(0, Rat(p.x));
            if (right && !bottom) return std::make_pair(1, Rat(p.y));
            if (top && !right) return std::make_pair(2, Rat(-p.x));
            (void)left;
            return std::make_pair(3, Rat(-p.y));
        };
        std::sort(box_vertices.begin(), box_vertices.end(), [&](int a, int b) {
            auto ra = side_rank(a), rb = side_rank(b);
            if (ra.first != rb.first) return ra.first < rb.first;
            return cmp(ra.second, rb.second) < 0;
        });
        const int bn = static_cast<int>(box_vertices.size());
        for (int t = 0; t < bn; ++t)
            edges.push_back({box_vertices[static_cast<std::size_t>(t)],
                             box_vertices[static_cast<std::size_t>((t + 1) % bn)], -1, false});
    }

    // Half-edges; twin(h) == h ^ 1.
    const int vcount = static_cast<int>(coords.size());
    arr.half_edges.resize(2 * edges.size());
    std::vector<std::vector<std::pair<std::pair<BigInt, BigInt>, int>>> outgoing(
        static_cast<std::size_t>(vcount));
    for (std::size_t e = 0; e < edges.size(); ++e) {
        const Edge& ed = edges[e];
        int h = static_cast<int>(2 * e), g = h + 1;
        arr.half_edges[static_cast<std::size_t>(h)] = {ed.v, -1, -1, ed.line, ed.inside};
        arr.half_edges[static_cast<std::size_t>(g)] = {ed.u, -1, -1, ed.line, ed.inside};
        const RatPoint& pu = coords[static_cast<std::size_t>(ed.u)];
        const RatPoint& pv = coords[static_cast<std::size_t>(ed.v)];
        // Exact direction u -> v scaled to integers by the positive factor
        // den(dx) * den(dy).
        Rat ddx = pv.x - pu.x;
        Rat ddy = pv.y - pu.y;
        BigInt dx = ddx.get_num() * ddy.get_den();
        BigInt dy = ddy.get_num() * ddx.get_den();
        outgoing[static_cast<std::size_t>(ed.u)].push_back({{dx, dy}, h});
        outgoing[static_cast<std::size_t>(ed.v)].push_back({{-dx, -dy}, g});
    }

    std::vector<int> rot_pos(arr.half_edges.size());
    std::vector<std::vector<int>> rotation(static_cast<std::size_t>(vcount));
    for (int v = 0; v < vcount; ++v) {
        auto& out = outgoing[static_cast<std::size_t>(v)];
        std::sort(out.begin(), out.end(),
                  [](const auto& a, const auto& b) { return dir_ccw_less(a.first, b.first); });
        auto& rot = rotation[static_cast<std::size_t>(v)];
        rot.reserve(out.size());
        for (const auto& [dir, h] : out) {
            rot_pos[static_cast<std::size_t>(h)] = static_cast<int>(rot.size());
            rot.push_back(h);
        }
    }

    // next(h) = CCW-predecessor of twin(h) around head(h): keeps face on the left.
    for (int h = 0; h < static_cast<int>(arr.half_edges.size()); ++h) {
        int tw = arr.twin(h);
        int head = arr.half_edges[static_cast<std::size_t>(h)].head;
        const auto& rot = rotation[static_cast<std::size_t>(head)];
        int idx = rot_pos[static_cast<std::size_t>(tw)];
        int prev = rot[static_cast<std::size_t>((idx + rot.size() - 1) % rot.size())];
        arr.half_edges[static_cast<std::size_t>(h)].next = prev;
    }

    // Extract faces.
    for (int h = 0; h < static_cast<int>(arr.half_edges.size()); ++h) {
        if (arr.half_edges[static_cast<std::size_t>(h)].face >= 0) continue;
        int f = static_cast<int>(arr.face_edge.size());
        arr.face_edge.push_back(h);
        int cur = h;
        do {
            arr.half_edges[static_cast<std::size_t>(cur)].face = f;
            cur = arr.half_edges[static_cast<std::size_t>(cur)].next;
        } while (cur != h);
    }

    // The outer face walks the box clockwise; find it from a bottom edge
    // pointing in -x (its left side is below the box).
    for (std::size_t e = 0; e < edges.size(); ++e) {
        if (edges[e].line != -1) continue;
        const RatPoint& pu = coords[static_cast<std::size_t>(edges[e].u)];
        const RatPoint& pv = coords[static_cast<std::size_t>(edges[e].v)];
        if (cmp(pu.y, Rat(-K)) == 0 && cmp(pv.y, Rat(-K)) == 0) {
            int h = cmp(pv.x, pu.x) < 0 ? static_cast<int>(2 * e) : static_cast<int>(2 * e + 1);
            arr.outer_face = arr.half_edges[static_cast<std::size_t>(h)].face;
            break;
        }
    }
    if (arr.outer_face < 0) throw internal_error("build_arrangement: outer face not found");
    return arr;
}

}  // namespace balis
