#include "balis/island.hpp"

#include <algorithm>

#include "balis/errors.hpp"

namespace balis {

Island make_island(const ColoredPointSet& ps, std::vector<int> members) {
    std::sort(members.begin(), members.end());
    members.erase(std::unique(members.begin(), members.end()), members.end());
    Island isl;
    for (int id : members) {
        if (id < 0 || id >= ps.size())
            throw input_error("UnknownId: point id " + std::to_string(id) + " not in set");
        (ps[id].color == Color::Red ? isl.red : isl.blue)++;
    }
    isl.members = std::move(members);
    return isl;
}

bool is_island(const ColoredPointSet& ps, const std::vector<int>& members) {
    for (int id : members)
        if (id < 0 || id >= ps.size())
            throw input_error("UnknownId: point id " + std::to_string(id) + " not in set");
    if (members.empty()) return true;
    ConvexPolygon hull = convex_hull(ps, members);
    std::vector<char> in_set(static_cast<std::size_t>(ps.size()), 0);
    for (int id : members) in_set[static_cast<std::size_t>(id)] = 1;
    for (int q = 0; q < ps.size(); ++q) {
        if (in_set[static_cast<std::size_t>(q)]) continue;
        if (hull_contains(ps, hull, ps[q].x, ps[q].y)) return false;
    }
    return true;
}

namespace {

struct Enumerator {
    const ColoredPointSet& ps;
    bool stop_at_first;
    std::vector<Island>& out;

    std::vector<int> chosen;

    bool feasible_suffix(int cursor, int need_red, int need_blue) const {
        int red_avail = 0, blue_avail = 0;
        for (int id = cursor; id < ps.size(); ++id)
            (ps[id].color == Color::Red ? red_avail : blue_avail)++;
        return red_avail >= need_red && blue_avail >= need_blue;
    }

    // True once a full stop was requested.
    bool run(int cursor, int need_red, int need_blue) {
        if (need_red == 0 && need_blue == 0) {
            if (is_island(ps, chosen)) {
                out.push_back(make_island(ps, chosen));
                if (stop_at_first) return true;
            }
            return false;
        }
        if (cursor >= ps.size()) return false;
        if (!feasible_suffix(cursor, need_red, need_blue)) return false;

        const bool is_red = ps[cursor].color == Color::Red;
        if ((is_red && need_red > 0) || (!is_red && need_blue > 0)) {
            chosen.push_back(cursor);
            if (run(cursor + 1, need_red - (is_red ? 1 : 0), need_blue - (is_red ? 0 : 1)))
                return true;
            chosen.pop_back();
        }
        // Skipping `cursor` commits it to staying outside: if it is already
        // trapped by the chosen hull, no extension can be an island.
        if (chosen.size() >= 3) {
            ConvexPolygon hull = convex_hull(ps, chosen);
            if (hull_contains(ps, hull, ps[cursor].x, ps[cursor].y)) return false;
        }
        return run(cursor + 1, need_red, need_blue);
    }
};

void check_cap(const ColoredPointSet& ps, int cap) {
    if (ps.size() > cap)
        throw input_error("TooLarge(" + std::to_string(ps.size()) + "," + std::to_string(cap) +
                          "): oracle enumeration needs n <= cap");
}

std::vector<Island> enumerate_from(const ColoredPointSet& ps, const TargetCounts& t,
                                   int first_member, bool stop_at_first) {
    std::vector<Island> found;
    if (t.red < 0 || t.blue < 0) return found;
    const bool is_red = ps[first_member].color == Color::Red;
    int need_red = t.red - (is_red ? 1 : 0);
    int need_blue = t.blue - (is_red ? 0 : 1);
    if (need_red < 0 || need_blue < 0) return found;
    Enumerator e{ps, stop_at_first, found, {}};
    e.chosen.push_back(first_member);
    e.run(first_member + 1, need_red, need_blue);
    return found;
}

}  // namespace

std::vector<Island> oracle_enumerate_serial(const ColoredPointSet& ps, const TargetCounts& t,
                                            int cap) {
    check_cap(ps, cap);
    std::vector<Island> found;
    if (t.red < 0 || t.blue < 0 || t.red > ps.red_count || t.blue > ps.blue_count) return found;
    if (t.total() == 0) {
        found.push_back(Island{});
        return found;
    }
    Enumerator e{ps, false, found, {}};
    e.run(0, t.red, t.blue);
    return found;
}

std::vector<Island> oracle_enumerate(const ColoredPointSet& ps, const TargetCounts& t, int cap) {
    check_cap(ps, cap);
    std::vector<Island> found;
    if (t.red < 0 || t.blue < 0 || t.red > ps.red_count || t.blue > ps.blue_count) return found;
    if (t.total() == 0) {
        found.push_back(Island{});
        return found;
    }
    // Stratify by smallest member; each stratum enumerates in lex order, so
    // concatenation by stratum index is globally sorted and deterministic.
    std::vector<std::vector<Island>> by_first(static_cast<std::size_t>(ps.size()));
#pragma omp parallel for schedule(dynamic, 1)
    for (int f = 0; f < ps.size(); ++f)
        by_first[static_cast<std::size_t>(f)] = enumerate_from(ps, t, f, false);
    for (auto& bucket : by_first)
        for (auto& isl : bucket) found.push_back(std::move(isl));
    return found;
}

std::optional<Island> oracle_find(const ColoredPointSet& ps, const TargetCounts& t, int cap) {
    check_cap(ps, cap);
    if (t.red < 0 || t.blue < 0 || t.red > ps.red_count || t.blue > ps.blue_count)
        return std::nullopt;
    if (t.total() == 0) return Island{};
    std::vector<Island> found;
    Enumerator e{ps, true, found, {}};
    e.run(0, t.red, t.blue);
    if (found.empty()) return std::nullopt;
    return found.front();
}

}  // namespace balis
