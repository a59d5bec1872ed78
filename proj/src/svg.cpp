#include "balis/svg.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "balis/geom.hpp"

namespace balis {

namespace {

double to_double(const Rat& q) { return q.get_d(); }
double to_double(const BigInt& v) { return v.get_d(); }

struct Box {
    double min_x = 0, min_y = 0, max_x = 1, max_y = 1;
    void include(double x, double y) {
        min_x = std::min(min_x, x);
        max_x = std::max(max_x, x);
        min_y = std::min(min_y, y);
        max_y = std::max(max_y, y);
    }
};

}  // namespace

std::string render_svg(const ColoredPointSet& ps, const ResultRecord& rec) {
    Box box;
    bool first = true;
    auto include = [&](double x, double y) {
        if (first) {
            box.min_x = box.max_x = x;
            box.min_y = box.max_y = y;
            first = false;
        } else {
            box.include(x, y);
        }
    };
    for (const auto& p : ps.points) include(to_double(p.x), to_double(p.y));
    if (rec.certificate.wedge)
        include(to_double(rec.certificate.wedge->apex.x), to_double(rec.certificate.wedge->apex.y));
    if (rec.certificate.path)
        include(to_double(rec.certificate.path->apex.x), to_double(rec.certificate.path->apex.y));
    if (first) include(0, 0);

    double w = std::max(box.max_x - box.min_x, 1.0);
    double h = std::max(box.max_y - box.min_y, 1.0);
    double margin = 0.05 * std::max(w, h);
    // Normalize to a ~1000-unit canvas so coordinates stay readable.
    double scale = 1000.0 / (std::max(w, h) + 2 * margin);
    double diag = (std::hypot(w, h) + 2 * margin) * scale;
    double view_w = (w + 2 * margin) * scale;
    double view_h = (h + 2 * margin) * scale;
    double dot = 0.012 * std::max(view_w, view_h);
    double stroke = 0.4 * dot;

    std::ostringstream svg;
    svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" viewBox=\"0 0 " << view_w
        << ' ' << view_h << "\">\n";
    auto px = [&](double x) { return (x - box.min_x + margin) * scale; };
    auto py = [&](double y) { return (box.max_y + margin - y) * scale; };

    auto line = [&](double x1, double y1, double x2, double y2, const char* color, double sw) {
        svg << "  <line x1=\"" << px(x1) << "\" y1=\"" << py(y1) << "\" x2=\"" << px(x2)
            << "\" y2=\"" << py(y2) << "\" stroke=\"" << color << "\" stroke-width=\"" << sw
            << "\"/>\n";
    };

    // Certificate geometry under the points.
    if (rec.found && rec.certificate.wedge && rec.certificate.wedge->first_id >= 0) {
        const Wedge& wd = *rec.certificate.wedge;
        double ax = to_double(wd.apex.x), ay = to_double(wd.apex.y);
        for (int id : {wd.first_id, wd.last_id}) {
            double ux = to_double(ps[id].x) - ax, uy = to_double(ps[id].y) - ay;
            double len = std::hypot(ux, uy);
            if (len == 0) continue;
            line(ax, ay, ax + ux / len * 3 * diag / scale, ay + uy / len * 3 * diag / scale,
                 "#888888", stroke);
        }
        svg << "  <circle cx=\"" << px(ax) << "\" cy=\"" << py(ay) << "\" r=\"" << dot * 0.8
            << "\" fill=\"#444444\"/>\n";
    }
    if (rec.found && rec.certificate.strip) {
        const Strip& st = *rec.certificate.strip;
        double dx = to_double(st.dir_x), dy = to_double(st.dir_y);
        double len = std::hypot(dx, dy);
        if (len > 0) {
            double bx = -dy / len, by = dx / len;  // boundary direction
            for (int id : {st.first_id, st.last_id}) {
                double cx = to_double(ps[id].x), cy = to_double(ps[id].y);
                line(cx - bx * 3 * diag / scale, cy - by * 3 * diag / scale,
                     cx + bx * 3 * diag / scale, cy + by * 3 * diag / scale, "#888888", stroke);
            }
        }
    }
    if (rec.found && rec.certificate.path) {
        double ax = to_double(rec.certificate.path->apex.x);
        double ay = to_double(rec.certificate.path->apex.y);
        svg << "  <circle cx=\"" << px(ax) << "\" cy=\"" << py(ay) << "\" r=\"" << dot * 0.8
            << "\" fill=\"#444444\"/>\n";
    }

    // Island hull.
    if (rec.found && rec.island.size() >= 2) {
        ConvexPolygon hull = convex_hull(ps, rec.island.members);
        svg << "  <polygon points=\"";
        for (int id : hull.vertex_ids)
            svg << px(to_double(ps[id].x)) << ',' << py(to_double(ps[id].y)) << ' ';
        svg << "\" fill=\"#dddd66\" fill-opacity=\"0.35\" stroke=\"#998800\" stroke-width=\""
            << stroke << "\"/>\n";
    }

    for (const auto& p : ps.points) {
        svg << "  <circle cx=\"" << px(to_double(p.x)) << "\" cy=\"" << py(to_double(p.y))
            << "\" r=\"" << dot << "\" fill=\"" << (p.color == Color::Red ? "#cc2222" : "#2244cc")
            << "\"/>\n";
    }
    svg << "</svg>\n";
    return svg.str();
}

}  // namespace balis
