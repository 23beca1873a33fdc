#include "scoutnav/follower_planner.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <queue>
#include <string>
#include <unordered_set>

namespace scoutnav {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

struct Neighbor {
    int dcol;
    int drow;
    bool diagonal;
};

constexpr Neighbor kNeighbors[8] = {
    {1, 0, false}, {-1, 0, false}, {0, 1, false}, {0, -1, false},
    {1, 1, true},  {1, -1, true},  {-1, 1, true}, {-1, -1, true},
};

// A diagonal move squeezing between two impassable side cells would cut the
// shared corner; both side cells are in bounds whenever a and b are.
bool corner_cut(const CostView& view, GridIndex a, GridIndex b) {
    return !view.passable({b.col, a.row}) && !view.passable({a.col, b.row});
}

double step_weight(const CostView& view, GridIndex a, GridIndex b, bool diagonal) {
    const double len =
        diagonal ? view.resolution() * std::numbers::sqrt2 : view.resolution();
    return len * 0.5 * (view.cost(a) + view.cost(b));
}

void check_in_bounds(const CostView& view, GridIndex c, const char* who) {
    if (!view.in_bounds(c)) {
        throw std::out_of_range(std::string(who) + ": cell " + std::to_string(c.col) + "," +
                                std::to_string(c.row) + " outside map");
    }
}

}  // namespace

double path_cost(std::span<const GridIndex> cells, const CostView& view) {
    if (cells.empty()) {
        throw std::invalid_argument("path_cost: empty path");
    }
    for (const GridIndex& c : cells) {
        check_in_bounds(view, c, "path_cost");
        if (!view.passable(c)) {
            throw PathBlockedError("path_cost: cell " + std::to_string(c.col) + "," +
                                   std::to_string(c.row) + " is impassable");
        }
    }
    double total = 0.0;
    for (std::size_t i = 0; i + 1 < cells.size(); ++i) {
        const GridIndex a = cells[i];
        const GridIndex b = cells[i + 1];
        const int dc = std::abs(a.col - b.col);
        const int dr = std::abs(a.row - b.row);
        if ((dc == 0 && dr == 0) || dc > 1 || dr > 1) {
            throw std::invalid_argument("path_cost: cells " + std::to_string(i) + " and " +
                                        std::to_string(i + 1) + " are not distinct 8-neighbors");
        }
        total += step_weight(view, a, b, dc == 1 && dr == 1);
    }
    return total;
}

std::optional<FollowerPath> plan_grid_astar(const CostView& view, GridIndex start, GridIndex goal,
                                            PathProvenance provenance, double fill_cost) {
    check_in_bounds(view, start, "plan");
    check_in_bounds(view, goal, "plan");
    if (!view.passable(start) || !view.passable(goal)) return std::nullopt;

    const int width = view.width();
    const int height = view.height();
    const std::size_t n = std::size_t(width) * height;
    const auto idx = [width](GridIndex c) { return std::size_t(c.row) * width + c.col; };

    // Euclidean distance times the cost lower bound is admissible. The bound
    // is deflated by one part in 1e12 so the heuristic stays consistent under
    // floating-point rounding; A* then settles every cell at the exact
    // minimum a Dijkstra sweep would compute.
    const double h_factor = view.min_cost() * view.resolution() * (1.0 - 1e-12);
    const auto heuristic = [&](GridIndex c) {
        return h_factor * std::hypot(double(c.col - goal.col), double(c.row - goal.row));
    };

    std::vector<double> g(n, kInf);
    std::vector<int> parent(n, -1);
    std::vector<char> closed(n, 0);

    struct Entry {
        double f;
        double h;
        std::size_t cell;
        bool operator>(const Entry& o) const {
            if (f != o.f) return f > o.f;
            if (h != o.h) return h > o.h;
            return cell > o.cell;
        }
    };
    std::priority_queue<Entry, std::vector<Entry>, std::greater<Entry>> open;

    g[idx(start)] = 0.0;
    open.push({heuristic(start), heuristic(start), idx(start)});

    const std::size_t goal_idx = idx(goal);
    while (!open.empty()) {
        const Entry top = open.top();
        open.pop();
        if (closed[top.cell]) continue;
        closed[top.cell] = 1;
        if (top.cell == goal_idx) break;

        const GridIndex a{int(top.cell % width), int(top.cell / width)};
        for (const Neighbor& nb : kNeighbors) {
            const GridIndex b{a.col + nb.dcol, a.row + nb.drow};
            if (!view.in_bounds(b)) continue;
            const std::size_t bi = idx(b);
            if (closed[bi] || !view.passable(b)) continue;
            if (nb.diagonal && corner_cut(view, a, b)) continue;
            const double cand = g[top.cell] + step_weight(view, a, b, nb.diagonal);
            if (cand < g[bi]) {
                g[bi] = cand;
                parent[bi] = int(top.cell);
                const double h = heuristic(b);
                open.push({cand + h, h, bi});
            }
        }
    }

    if (!closed[goal_idx]) return std::nullopt;

    FollowerPath path;
    path.provenance = provenance;
    path.fill_cost = provenance == PathProvenance::kOptimistic ? fill_cost : 0.0;
    path.total_cost = g[goal_idx];
    for (int at = int(goal_idx); at != -1; at = parent[at]) {
        path.cells.push_back({at % width, at / width});
    }
    std::reverse(path.cells.begin(), path.cells.end());
    return path;
}

std::optional<FollowerPath> plan_feasible(const PartialMap& map, GridIndex start, GridIndex goal) {
    const FeasibleView view(map);
    return plan_grid_astar(view, start, goal, PathProvenance::kFeasible);
}

std::optional<FollowerPath> plan_optimistic(const PartialMap& map, double fill_cost,
                                            GridIndex start, GridIndex goal) {
    const OptimisticView view(map, fill_cost);
    return plan_grid_astar(view, start, goal, PathProvenance::kOptimistic, fill_cost);
}

namespace {

// A diagonal step is proven legal once one of its side cells is observed
// traversable; until then the explored map cannot rule out that both sides
// are obstacles.
bool diagonal_step_proven(GridIndex a, GridIndex b, const PartialMap& map) {
    return map.state({b.col, a.row}) == CellState::kObserved ||
           map.state({a.col, b.row}) == CellState::kObserved;
}

bool is_diagonal(GridIndex a, GridIndex b) { return a.col != b.col && a.row != b.row; }

}  // namespace

bool is_path_explored(const FollowerPath& path, const PartialMap& map) {
    for (std::size_t i = 0; i < path.cells.size(); ++i) {
        if (map.state(path.cells[i]) != CellState::kObserved) return false;
        if (i > 0 && is_diagonal(path.cells[i - 1], path.cells[i]) &&
            !diagonal_step_proven(path.cells[i - 1], path.cells[i], map)) {
            return false;
        }
    }
    return true;
}

std::vector<GridIndex> path_observation_targets(const FollowerPath& path, const PartialMap& map) {
    std::vector<GridIndex> targets;
    std::unordered_set<std::size_t> seen;
    const auto add_if_unknown = [&](GridIndex c) {
        if (map.is_unknown(c) && seen.insert(map.index(c)).second) targets.push_back(c);
    };
    for (std::size_t i = 0; i < path.cells.size(); ++i) {
        add_if_unknown(path.cells[i]);
        if (i > 0 && is_diagonal(path.cells[i - 1], path.cells[i]) &&
            !diagonal_step_proven(path.cells[i - 1], path.cells[i], map)) {
            const GridIndex a = path.cells[i - 1];
            const GridIndex b = path.cells[i];
            add_if_unknown({b.col, a.row});
            add_if_unknown({a.col, b.row});
        }
    }
    return targets;
}

void write_path_csv(const FollowerPath& path, std::ostream& out) {
    out << "col,row\n";
    for (const GridIndex& c : path.cells) {
        out << c.col << "," << c.row << "\n";
    }
}

}  // namespace scoutnav
