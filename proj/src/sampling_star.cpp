#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <random>
#include <vector>

#include "scoutnav/follower_planner.hpp"

namespace scoutnav {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// 8-connected rasterization of the straight segment between two cell
// centers (Bresenham). Every step moves to an edge- or corner-adjacent cell,
// so chains compose into regular follower paths.
std::vector<GridIndex> rasterize_segment(GridIndex a, GridIndex b) {
    std::vector<GridIndex> cells;
    int x = a.col, y = a.row;
    const int dx = std::abs(b.col - a.col), sx = a.col < b.col ? 1 : -1;
    const int dy = -std::abs(b.row - a.row), sy = a.row < b.row ? 1 : -1;
    int err = dx + dy;
    while (true) {
        cells.push_back({x, y});
        if (x == b.col && y == b.row) break;
        const int e2 = 2 * err;
        if (e2 >= dy) {
            err += dy;
            x += sx;
        }
        if (e2 <= dx) {
            err += dx;
            y += sy;
        }
    }
    return cells;
}

struct Tree {
    struct Node {
        GridIndex cell;
        int parent = -1;
        double g = 0.0;
        std::vector<GridIndex> chain;  // cells from parent to this node, inclusive
        std::vector<int> children;
    };

    std::vector<Node> nodes;
    std::vector<int> node_at;  // cell index -> node index or -1
    int width = 0;
    int height = 0;

    int at(GridIndex c) const { return node_at[std::size_t(c.row) * width + c.col]; }
    void place(GridIndex c, int node) { node_at[std::size_t(c.row) * width + c.col] = node; }
};

// Cost of the chain with the same trapezoidal discretization as the grid
// planner; nullopt when any cell is impassable or a diagonal cuts a corner.
std::optional<double> chain_cost(const CostView& view, const std::vector<GridIndex>& chain) {
    const double res = view.resolution();
    const double res_diag = res * std::numbers::sqrt2;
    if (!view.passable(chain.front())) return std::nullopt;
    double total = 0.0;
    for (std::size_t i = 0; i + 1 < chain.size(); ++i) {
        const GridIndex a = chain[i];
        const GridIndex b = chain[i + 1];
        if (!view.passable(b)) return std::nullopt;
        const bool diagonal = a.col != b.col && a.row != b.row;
        if (diagonal && !view.passable({b.col, a.row}) && !view.passable({a.col, b.row})) {
            return std::nullopt;
        }
        total += (diagonal ? res_diag : res) * 0.5 * (view.cost(a) + view.cost(b));
    }
    return total;
}

// Nearest node to `cell` by center distance, searching outward over
// Chebyshev rings of the node grid. Ties resolve to the lowest node index.
int nearest_node(const Tree& tree, GridIndex cell) {
    long long best_d2 = std::numeric_limits<long long>::max();
    int best = -1;
    const auto visit = [&](int col, int row) {
        if (col < 0 || col >= tree.width || row < 0 || row >= tree.height) return;
        const int node = tree.at({col, row});
        if (node < 0) return;
        const long long dc = col - cell.col, dr = row - cell.row;
        const long long d2 = dc * dc + dr * dr;
        if (d2 < best_d2 || (d2 == best_d2 && node < best)) {
            best_d2 = d2;
            best = node;
        }
    };
    const int max_r = std::max(tree.width, tree.height);
    for (int r = 0; r <= max_r; ++r) {
        // Rings at Chebyshev radius r hold cells with squared Euclidean
        // distance at least r*r, so the scan may stop once that exceeds the
        // best match (equality continues, for index tie-breaking).
        if (best >= 0 && (long long)(r) * r > best_d2) break;
        if (r == 0) {
            visit(cell.col, cell.row);
            continue;
        }
        for (int col = cell.col - r; col <= cell.col + r; ++col) {
            visit(col, cell.row - r);
            visit(col, cell.row + r);
        }
        for (int row = cell.row - r + 1; row <= cell.row + r - 1; ++row) {
            visit(cell.col - r, row);
            visit(cell.col + r, row);
        }
    }
    return best;
}

std::vector<int> neighbors_within(const Tree& tree, GridIndex cell, double radius_cells) {
    std::vector<int> out;
    const int r = int(std::floor(radius_cells + 1e-9));
    const double r2 = radius_cells * radius_cells;
    for (int row = std::max(0, cell.row - r); row <= std::min(tree.height - 1, cell.row + r); ++row) {
        for (int col = std::max(0, cell.col - r); col <= std::min(tree.width - 1, cell.col + r);
             ++col) {
            const int node = tree.at({col, row});
            if (node < 0) continue;
            const double dc = col - cell.col, dr = row - cell.row;
            if (dc * dc + dr * dr <= r2 + 1e-9) out.push_back(node);
        }
    }
    return out;
}

void reparent(Tree& tree, int node, int new_parent, std::vector<GridIndex> chain, double new_g) {
    Tree::Node& n = tree.nodes[node];
    if (n.parent >= 0) {
        auto& siblings = tree.nodes[n.parent].children;
        siblings.erase(std::find(siblings.begin(), siblings.end(), node));
    }
    const double delta = new_g - n.g;
    n.parent = new_parent;
    n.chain = std::move(chain);
    n.g = new_g;
    tree.nodes[new_parent].children.push_back(node);
    // Propagate the improvement through the subtree.
    std::vector<int> stack(n.children.begin(), n.children.end());
    while (!stack.empty()) {
        const int v = stack.back();
        stack.pop_back();
        tree.nodes[v].g += delta;
        stack.insert(stack.end(), tree.nodes[v].children.begin(), tree.nodes[v].children.end());
    }
}

}  // namespace

std::optional<FollowerPath> plan_sampling_star(const CostView& view, GridIndex start,
                                               GridIndex goal, const SamplingStarParams& params,
                                               PathProvenance provenance, double fill_cost) {
    if (params.iterations <= 0) {
        throw std::invalid_argument("plan_sampling_star: iterations must be positive");
    }
    if (params.rewire_radius <= 0.0) {
        throw std::invalid_argument("plan_sampling_star: rewire_radius must be positive");
    }
    if (!view.in_bounds(start) || !view.in_bounds(goal)) {
        throw std::out_of_range("plan_sampling_star: endpoint outside map");
    }
    if (!view.passable(start) || !view.passable(goal)) return std::nullopt;

    const auto finish = [&](std::vector<GridIndex> cells) {
        FollowerPath path;
        path.cells = std::move(cells);
        path.provenance = provenance;
        path.fill_cost = provenance == PathProvenance::kOptimistic ? fill_cost : 0.0;
        path.total_cost = path_cost(path.cells, view);
        return path;
    };
    if (start == goal) return finish({start});

    const double res = view.resolution();
    const double radius_cells = params.rewire_radius / res;

    Tree tree;
    tree.width = view.width();
    tree.height = view.height();
    tree.node_at.assign(std::size_t(tree.width) * tree.height, -1);
    tree.nodes.push_back({start, -1, 0.0, {}, {}});
    tree.place(start, 0);

    std::mt19937_64 rng(params.seed);
    std::uniform_int_distribution<int> col_dist(0, tree.width - 1);
    std::uniform_int_distribution<int> row_dist(0, tree.height - 1);
    std::uniform_real_distribution<double> unit(0.0, 1.0);

    for (int it = 0; it < params.iterations; ++it) {
        GridIndex sample;
        if (unit(rng) < params.goal_bias) {
            sample = goal;
        } else {
            sample = {col_dist(rng), row_dist(rng)};
        }

        const int nearest = nearest_node(tree, sample);
        GridIndex target = sample;
        const Point2 from = cell_center(tree.nodes[nearest].cell, res);
        const Point2 to = cell_center(sample, res);
        const double dist = distance(from, to);
        if (dist < res * 0.5) continue;  // sample collapses onto the nearest node
        if (dist > params.rewire_radius) {
            const double t = params.rewire_radius / dist;
            target = {int(std::floor((from.x + (to.x - from.x) * t) / res)),
                      int(std::floor((from.y + (to.y - from.y) * t) / res))};
            if (target == tree.nodes[nearest].cell) continue;
        }
        if (!view.passable(target)) continue;

        // Choose the cheapest valid parent in the neighborhood (falling back
        // to the nearest node), then insert or improve the node at `target`.
        std::vector<int> nearby = neighbors_within(tree, target, radius_cells);
        if (std::find(nearby.begin(), nearby.end(), nearest) == nearby.end()) {
            nearby.push_back(nearest);
        }
        int best_parent = -1;
        double best_g = kInf;
        std::vector<GridIndex> best_chain;
        for (int cand : nearby) {
            if (tree.nodes[cand].cell == target) continue;
            auto chain = rasterize_segment(tree.nodes[cand].cell, target);
            const auto cost = chain_cost(view, chain);
            if (!cost) continue;
            const double g = tree.nodes[cand].g + *cost;
            if (g < best_g) {
                best_g = g;
                best_parent = cand;
                best_chain = std::move(chain);
            }
        }
        if (best_parent < 0) continue;

        int node = tree.at(target);
        if (node < 0) {
            node = int(tree.nodes.size());
            tree.nodes.push_back({target, best_parent, best_g, best_chain, {}});
            tree.nodes[best_parent].children.push_back(node);
            tree.place(target, node);
        } else if (best_g < tree.nodes[node].g) {
            reparent(tree, node, best_parent, best_chain, best_g);
        }

        // Rewire: route neighbors through the new node when that is cheaper.
        for (int cand : nearby) {
            if (cand == node || cand == tree.nodes[node].parent) continue;
            // Reattaching an ancestor of `node` under it would close a cycle.
            bool is_ancestor = false;
            for (int up = node; up >= 0; up = tree.nodes[up].parent) {
                if (up == cand) {
                    is_ancestor = true;
                    break;
                }
            }
            if (is_ancestor) continue;
            auto chain = rasterize_segment(tree.nodes[node].cell, tree.nodes[cand].cell);
            const auto cost = chain_cost(view, chain);
            if (!cost) continue;
            const double g = tree.nodes[node].g + *cost;
            if (g < tree.nodes[cand].g) {
                reparent(tree, cand, node, std::move(chain), g);
            }
        }
    }

    const int goal_node = tree.at(goal);
    if (goal_node < 0) return std::nullopt;

    std::vector<GridIndex> cells;
    std::vector<int> lineage;
    for (int at = goal_node; at >= 0; at = tree.nodes[at].parent) lineage.push_back(at);
    std::reverse(lineage.begin(), lineage.end());
    cells.push_back(start);
    for (std::size_t i = 1; i < lineage.size(); ++i) {
        const auto& chain = tree.nodes[lineage[i]].chain;
        cells.insert(cells.end(), chain.begin() + 1, chain.end());
    }
    return finish(std::move(cells));
}

}  // namespace scoutnav
