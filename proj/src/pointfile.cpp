#include "balis/pointfile.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

#include "balis/errors.hpp"

namespace balis {

ColoredPointSet parse_point_file(std::istream& in) {
    std::vector<ColoredPoint> pts;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        lineno++;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        std::string_view sv(line);
        auto hash = sv.find('#');
        if (hash != std::string_view::npos) sv = sv.substr(0, hash);
        std::istringstream fields{std::string(sv)};
        std::string xs, ys, cs, extra;
        if (!(fields >> xs)) continue;  // blank or comment-only line
        if (!(fields >> ys >> cs) || (fields >> extra))
            throw input_error("line " + std::to_string(lineno) +
                              ": expected \"x y color\"");
        auto x = parse_bigint(xs);
        auto y = parse_bigint(ys);
        if (!x || !y)
            throw input_error("line " + std::to_string(lineno) + ": bad integer coordinate");
        Color color;
        if (cs == "R" || cs == "r")
            color = Color::Red;
        else if (cs == "B" || cs == "b")
            color = Color::Blue;
        else
            throw input_error("line " + std::to_string(lineno) + ": color must be R or B, got \"" +
                              cs + "\"");
        ColoredPoint p;
        p.x = std::move(*x);
        p.y = std::move(*y);
        p.color = color;
        pts.push_back(std::move(p));
    }
    return ColoredPointSet::from_points(std::move(pts));
}

ColoredPointSet parse_point_file(const std::string& text) {
    std::istringstream in(text);
    return parse_point_file(in);
}

std::string serialize_point_file(const ColoredPointSet& ps) {
    std::ostringstream out;
    for (const auto& p : ps.points)
        out << p.x.get_str() << ' ' << p.y.get_str() << ' ' << color_char(p.color) << '\n';
    return out.str();
}

ColoredPointSet load_points(const std::string& path) {
    if (path == "-") return parse_point_file(std::cin);
    std::ifstream f(path);
    if (!f) throw input_error("cannot open input file: " + path);
    return parse_point_file(f);
}

}  // namespace balis
