#include "balis/island_path.hpp"

#include <algorithm>
#include <queue>
#include <set>

#include "balis/errors.hpp"
#include "balis/geom.hpp"

namespace balis {

std::vector<XWindow> x_windows(const ColoredPointSet& ps, int k) {
    if (k < 1 || k > ps.size()) throw precondition_error("x_windows: k must be in [1, n]");
    std::vector<XWindow> ws;
    for (int s = 0; s + k <= ps.size(); ++s) ws.push_back(XWindow{s});
    return ws;
}

Island window_island(const ColoredPointSet& ps, int k, const XWindow& w) {
    std::vector<int> ranks = shear_order(ps);
    std::vector<int> members(ranks.begin() + w.start, ranks.begin() + w.start + k);
    return make_island(ps, std::move(members));
}

namespace {

// Walk state over sheared ranks; the priority queue holds candidate points
// keyed by exact squared distance to the ORIGINAL hull of the island.
class Walker {
  public:
    Walker(const ColoredPointSet& ps, const Island& island) : ps_(ps) {
        if (island.size() == 0) throw precondition_error("walk: island must be non-empty");
        if (!is_island(ps, island)) throw precondition_error("NotAnIsland: walk needs an island");
        id_by_rank_ = shear_order(ps);
        rank_of_.assign(static_cast<std::size_t>(ps.size()), -1);
        for (int r = 0; r < ps.size(); ++r)
            rank_of_[static_cast<std::size_t>(id_by_rank_[static_cast<std::size_t>(r)])] = r;
        for (int id : island.members) members_.insert(rank_of_[static_cast<std::size_t>(id)]);
        red_ = island.red;

        ConvexPolygon hull = convex_hull(ps, island.members);
        int lo = *members_.begin(), hi = *members_.rbegin();
        for (int r = lo + 1; r < hi; ++r) {
            if (members_.count(r)) continue;
            int id = id_by_rank_[static_cast<std::size_t>(r)];
            queue_.push({squared_distance_to_hull(ps, hull, ps[id]), id});
        }
    }

    // One in/out swap; false when the walk is complete.
    bool step() {
        int rightmost = *members_.rbegin();
        while (!queue_.empty()) {
            auto [dist, id] = queue_.top();
            int r = rank_of_[static_cast<std::size_t>(id)];
            queue_.pop();  // extraction is permanent either way
            if (r < rightmost) {
                members_.erase(rightmost);
                members_.insert(r);
                int out_id = id_by_rank_[static_cast<std::size_t>(rightmost)];
                if (ps_[out_id].color == Color::Red) red_--;
                if (ps_[id].color == Color::Red) red_++;
                return true;
            }
        }
        return false;
    }

    int red() const { return red_; }

    std::vector<int> members() const {
        std::vector<int> ids;
        ids.reserve(members_.size());
        for (int r : members_) ids.push_back(id_by_rank_[static_cast<std::size_t>(r)]);
        std::sort(ids.begin(), ids.end());
        return ids;
    }

    int window_start() const {
        int lo = *members_.begin(), hi = *members_.rbegin();
        if (hi - lo + 1 != static_cast<int>(members_.size()))
            throw internal_error("walk did not terminate at an x-window");
        return lo;
    }

  private:
    struct QueueEntry {
        Rat dist;
        int id;
        bool operator>(const QueueEntry& o) const {
            int c = cmp(dist, o.dist);
            if (c != 0) return c > 0;
            return id > o.id;
        }
    };
    const ColoredPointSet& ps_;
    std::vector<int> id_by_rank_;
    std::vector<int> rank_of_;
    std::set<int> members_;
    int red_ = 0;
    std::priority_queue<QueueEntry, std::vector<QueueEntry>, std::greater<QueueEntry>> queue_;
};

}  // namespace

WalkResult walk_to_window(const ColoredPointSet& ps, const Island& island) {
    WalkResult res;
    Walker w(ps, island);
    res.steps.push_back(island);
    while (w.step()) res.steps.push_back(make_island(ps, w.members()));
    res.window = XWindow{w.window_start()};
    return res;
}

int walk_to_window_stream(const ColoredPointSet& ps, const Island& island,
                          const std::function<bool(int)>& visit,
                          std::vector<int>* out_members) {
    Walker w(ps, island);
    if (visit(island.red)) {
        if (out_members) *out_members = island.members;
        return -1;
    }
    while (w.step()) {
        if (visit(w.red())) {
            if (out_members) *out_members = w.members();
            return -1;
        }
    }
    return w.window_start();
}

IslandPath island_path(const ColoredPointSet& ps, const Island& from, const Island& to) {
    if (from.size() != to.size())
        throw precondition_error("SizeMismatch: islands must have equal size");
    IslandPath path;
    if (from == to) {
        path.islands.push_back(from);
        return path;
    }
    if (from.size() == 0) {
        path.islands.push_back(from);
        return path;
    }

    WalkResult wa = walk_to_window(ps, from);
    WalkResult wb = walk_to_window(ps, to);
    path.islands = std::move(wa.steps);

    const int k = from.size();
    std::vector<int> ranks = shear_order(ps);
    int s = wa.window.start;
    int dir = wb.window.start > s ? 1 : -1;
    while (s != wb.window.start) {
        s += dir;
        std::vector<int> members(ranks.begin() + s, ranks.begin() + s + k);
        path.islands.push_back(make_island(ps, std::move(members)));
    }
    // Reversed walk from `to`, skipping its window (already appended).
    for (auto it = wb.steps.rbegin() + 1; it != wb.steps.rend(); ++it)
        path.islands.push_back(*it);
    if (path.islands.size() >= 2 && !(path.islands.back() == to))
        throw internal_error("island_path: path does not end at the target island");
    return path;
}

}  // namespace balis
