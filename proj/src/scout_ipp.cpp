#include "scoutnav/scout_ipp.hpp"

#include <algorithm>
#include <cmath>

#include "scoutnav/baselines.hpp"

namespace scoutnav {

namespace {

StepResult terminal(TerminationKind kind, std::optional<FollowerPath> path = std::nullopt) {
    StepResult r;
    r.termination = Termination{kind, std::move(path)};
    return r;
}

struct ChainSums {
    double gain_sum = 0.0;
    double cost_sum = 0.0;
};

// Gains and edge costs accumulated in root-to-node order.
ChainSums chain_sums(const ScoutTree& tree, int node) {
    std::vector<int> chain;
    for (int at = node; at >= 0; at = tree.node(at).parent) chain.push_back(at);
    std::reverse(chain.begin(), chain.end());
    ChainSums sums;
    for (int idx : chain) {
        sums.gain_sum += tree.node(idx).gain;
        if (idx != chain.front()) sums.cost_sum += tree.node(idx).edge_cost;
    }
    return sums;
}

// Chain cost from the root to every node, memoized in one pass.
std::vector<double> chain_costs(const ScoutTree& tree) {
    std::vector<double> cost(tree.size(), -1.0);
    cost[tree.root()] = 0.0;
    std::vector<int> pending;
    for (int i = 0; i < int(tree.size()); ++i) {
        if (cost[i] >= 0.0) continue;
        pending.clear();
        int at = i;
        while (cost[at] < 0.0) {
            pending.push_back(at);
            at = tree.node(at).parent;
        }
        double c = cost[at];
        for (auto it = pending.rbegin(); it != pending.rend(); ++it) {
            c += tree.node(*it).edge_cost;
            cost[*it] = c;
        }
    }
    return cost;
}

}  // namespace

ScoutTree::ScoutTree(GridIndex root_pose, std::uint64_t seed) : rng_(seed) {
    nodes_.push_back(ScoutNode{root_pose, -1, 0.0, 0.0, false});
}

int ScoutTree::add_node(GridIndex pose, int parent, double edge_cost) {
    if (parent < 0 || parent >= int(nodes_.size())) {
        throw std::invalid_argument("ScoutTree::add_node: bad parent index");
    }
    if (edge_cost <= 0.0) {
        throw std::invalid_argument("ScoutTree::add_node: edge cost must be positive");
    }
    nodes_.push_back(ScoutNode{pose, parent, 0.0, edge_cost, false});
    return int(nodes_.size()) - 1;
}

int ScoutTree::nearest(GridIndex pose) const {
    long long best_d2 = std::numeric_limits<long long>::max();
    int best = 0;
    for (int i = 0; i < int(nodes_.size()); ++i) {
        const long long dc = nodes_[i].pose.col - pose.col;
        const long long dr = nodes_[i].pose.row - pose.row;
        const long long d2 = dc * dc + dr * dr;
        if (d2 < best_d2) {
            best_d2 = d2;
            best = i;
        }
    }
    return best;
}

void ScoutTree::re_root(int child) {
    if (child < 0 || child >= int(nodes_.size()) || nodes_[child].parent != root_) {
        throw std::invalid_argument("ScoutTree::re_root: not a child of the root");
    }
    ScoutNode& c = nodes_[child];
    ScoutNode& r = nodes_[root_];
    r.parent = child;
    r.edge_cost = c.edge_cost;  // scout edges are symmetric
    c.parent = -1;
    c.edge_cost = 0.0;
    root_ = child;
}

double information_gain(GridIndex pose, const PartialMap& map, const FollowerPath& guide,
                        SensorFootprint footprint) {
    if (!map.in_bounds(pose)) {
        throw std::out_of_range("information_gain: pose outside map");
    }
    const int reach = footprint.reach_cells(map.resolution());
    int count = 0;
    for (const GridIndex& c : path_observation_targets(guide, map)) {
        if (std::abs(c.col - pose.col) <= reach && std::abs(c.row - pose.row) <= reach) {
            ++count;
        }
    }
    const double area = map.resolution() * map.resolution();
    return count * area;
}

bool footprint_fully_explored(const PartialMap& map, GridIndex pose, SensorFootprint footprint) {
    if (!map.in_bounds(pose)) {
        throw std::out_of_range("footprint_fully_explored: pose outside map");
    }
    const int reach = footprint.reach_cells(map.resolution());
    const int col_lo = std::max(0, pose.col - reach);
    const int col_hi = std::min(map.width() - 1, pose.col + reach);
    const int row_lo = std::max(0, pose.row - reach);
    const int row_hi = std::min(map.height() - 1, pose.row + reach);
    for (int row = row_lo; row <= row_hi; ++row) {
        for (int col = col_lo; col <= col_hi; ++col) {
            if (map.is_unknown({col, row})) return false;
        }
    }
    return true;
}

double scout_edge_cost(GridIndex a, GridIndex b, const ScoutFieldView& field) {
    if (a == b) {
        throw std::invalid_argument("scout_edge_cost: zero-length segment");
    }
    if (!field.in_bounds(a) || !field.in_bounds(b)) {
        throw std::out_of_range("scout_edge_cost: endpoint outside map");
    }
    const double res = field.resolution();
    const Point2 pa = cell_center(a, res);
    const Point2 pb = cell_center(b, res);
    const double length = distance(pa, pb);
    // Midpoint rule at sub-cell intervals: exact for piecewise-constant cost
    // whenever cost changes align with the interval grid.
    const int n = int(std::ceil(length / (res * 0.5)));
    const double h = length / n;
    double total = 0.0;
    for (int i = 0; i < n; ++i) {
        const double t = (i + 0.5) / n;
        const Point2 p{pa.x + (pb.x - pa.x) * t, pa.y + (pb.y - pa.y) * t};
        total += field.cost_at_point(p) * h;
    }
    return total;
}

double subtree_value(const ScoutTree& tree, int node) {
    if (node < 0 || node >= int(tree.size())) {
        throw std::invalid_argument("subtree_value: bad node index");
    }
    if (node == tree.root()) return 0.0;
    const ChainSums sums = chain_sums(tree, node);
    if (sums.cost_sum <= 0.0) {
        throw std::invalid_argument("subtree_value: zero accumulated cost off the root");
    }
    return sums.gain_sum / sums.cost_sum;
}

void rewire_through(ScoutTree& tree, int via, double radius, const ScoutFieldView& field) {
    if (via < 0 || via >= int(tree.size())) {
        throw std::invalid_argument("rewire_through: bad node index");
    }
    if (radius <= 0.0) {
        throw std::invalid_argument("rewire_through: radius must be positive");
    }
    std::vector<double> cost = chain_costs(tree);
    std::vector<char> ancestor(tree.size(), 0);
    for (int at = via; at >= 0; at = tree.node(at).parent) ancestor[at] = 1;
    const GridIndex from = tree.node(via).pose;
    const double res = field.resolution();
    const double floor_per_m = field.min_cost();
    for (int b = 0; b < int(tree.size()); ++b) {
        if (b == via || b == tree.root() || ancestor[b]) continue;
        if (tree.node(b).parent == via) continue;
        const double d = center_distance(from, tree.node(b).pose, res);
        if (d <= 0.0 || d > radius) continue;
        // Cheapest conceivable direct edge; skip before integrating the field.
        if (cost[via] + d * floor_per_m >= cost[b]) continue;
        const double edge = scout_edge_cost(from, tree.node(b).pose, field);
        if (cost[via] + edge + 1e-12 >= cost[b]) continue;
        tree.node(b).parent = via;
        tree.node(b).edge_cost = edge;
        // Descendants keep their stale (higher) cached costs for the rest of
        // this pass; later passes finish the relaxation.
        cost[b] = cost[via] + edge;
    }
}

void expand_and_update(ScoutTree& tree, const PartialMap& map, const ScoutIppParams& params,
                       const ScoutFieldView& field, const std::function<double(GridIndex)>& gain) {
    if (params.samples_per_step < 1) {
        throw std::invalid_argument("expand_and_update: samples_per_step must be >= 1");
    }
    if (params.max_edge_length <= 0.0) {
        throw std::invalid_argument("expand_and_update: max_edge_length must be positive");
    }
    if (params.retry_cap < 1) {
        throw std::invalid_argument("expand_and_update: retry_cap must be >= 1");
    }

    std::uniform_int_distribution<int> cols(0, map.width() - 1);
    std::uniform_int_distribution<int> rows(0, map.height() - 1);
    for (int s = 0; s < params.samples_per_step; ++s) {
        for (int attempt = 0; attempt < params.retry_cap; ++attempt) {
            const GridIndex cand{cols(tree.rng()), rows(tree.rng())};
            const int near = tree.nearest(cand);
            const double d = center_distance(tree.node(near).pose, cand, map.resolution());
            if (d <= 0.0 || d > params.max_edge_length) continue;
            const int added =
                tree.add_node(cand, near, scout_edge_cost(tree.node(near).pose, cand, field));
            rewire_through(tree, added, params.max_edge_length, field);
            break;
        }
    }

    for (int i = 0; i < int(tree.size()); ++i) {
        ScoutNode& node = tree.node(i);
        if (node.closed) continue;
        if (footprint_fully_explored(map, node.pose, params.footprint)) {
            node.closed = true;
            node.gain = 0.0;
            continue;
        }
        node.gain = gain(node.pose);
    }
}

FollowerPlanFn make_astar_plan_fn() {
    return [](const PartialMap& map, std::optional<double> fill, GridIndex start, GridIndex goal) {
        return fill ? plan_optimistic(map, *fill, start, goal) : plan_feasible(map, start, goal);
    };
}

TreeScoutPlanner::TreeScoutPlanner(GainMode mode, const MissionSpec& mission,
                                   const GroundTruthScene& scene, const ScoutIppParams& params,
                                   FollowerPlanFn follower)
    : gain_mode_(mode),
      mission_(mission),
      scout_field_(scene),
      params_(params),
      follower_(std::move(follower)),
      tree_(mission.start, params.seed) {
    if (mission.fill_min <= 0.0 || mission.fill_max < mission.fill_min) {
        throw std::invalid_argument("TreeScoutPlanner: need 0 < fill_min <= fill_max");
    }
    if (params_.footprint.half_extent <= 0.0) {
        throw std::invalid_argument("TreeScoutPlanner: footprint half_extent must be positive");
    }
    if (!follower_) {
        throw std::invalid_argument("TreeScoutPlanner: follower planner required");
    }
}

StepResult TreeScoutPlanner::run_guard_chain(const PartialMap& map,
                                             std::optional<FollowerPath>& guide) {
    for (;;) {
        const bool pessimistic =
            gain_mode_ == GainMode::kGoalAware || mode_ == ExplorationMode::kFindFeasible;
        const double fill = pessimistic ? mission_.fill_max : mission_.fill_min;
        guide = follower_(map, fill, mission_.start, mission_.goal);
        if (!guide) {
            // The completed map already rules every path out; by optimism the
            // true scene cannot do any better.
            return terminal(TerminationKind::kInfeasible);
        }
        if (is_path_explored(*guide, map)) {
            if (gain_mode_ == GainMode::kGoalAware) {
                return terminal(TerminationKind::kGuidePathExplored, *guide);
            }
            if (mode_ == ExplorationMode::kFindFeasible) {
                // The explored pessimistic path is feasible as it stands, so
                // the hunt switches to proving optimality.
                mode_ = ExplorationMode::kFindOptimal;
                ++mode_switch_count_;
                continue;
            }
            // Fully explored under the lower-bound fill: nothing unknown can
            // undercut it, the path is optimal.
            return terminal(TerminationKind::kOptimal, *guide);
        }
        return {};
    }
}

StepResult TreeScoutPlanner::step(const PartialMap& map) {
    if (pending_child_ >= 0) {
        throw std::logic_error("TreeScoutPlanner::step: pending waypoint not advanced");
    }

    std::optional<FollowerPath> guide;
    const bool guided =
        gain_mode_ == GainMode::kPathAware || gain_mode_ == GainMode::kGoalAware;
    if (guided) {
        StepResult guard = run_guard_chain(map, guide);
        if (guard.termination) return guard;
    }

    if (params_.budget && accumulated_cost_ > *params_.budget) {
        return terminal(TerminationKind::kBudgetExhausted,
                        follower_(map, std::nullopt, mission_.start, mission_.goal));
    }

    // Gain of a candidate viewpoint, per planner flavor.
    const int reach = params_.footprint.reach_cells(map.resolution());
    const double area = map.resolution() * map.resolution();
    std::vector<GridIndex> unknown_guide_cells;
    if (guided) {
        unknown_guide_cells = path_observation_targets(*guide, map);
    }
    const auto gain = [&](GridIndex pose) -> double {
        switch (gain_mode_) {
            case GainMode::kPathAware:
            case GainMode::kGoalAware: {
                int count = 0;
                for (const GridIndex& c : unknown_guide_cells) {
                    if (std::abs(c.col - pose.col) <= reach && std::abs(c.row - pose.row) <= reach) {
                        ++count;
                    }
                }
                return count * area;
            }
            case GainMode::kExploration:
                return gain_exploration(pose, map, params_.footprint);
            case GainMode::kCostAware:
                return gain_cost_aware(pose, map, params_.footprint, mission_.fill_min);
        }
        return 0.0;
    };

    // Flying to a zero-value viewpoint cannot help the objective, so the tree
    // keeps growing until some node sees unknown cells that matter. Highest
    // value wins; ties fall to the cheaper chain, then to insertion order.
    // The executed segment is the first edge toward that node.
    int best = -1;
    double best_value = 0.0;
    double best_cost = 0.0;
    for (int round = 0;; ++round) {
        expand_and_update(tree_, map, params_, scout_field_, gain);
        for (int i = 0; i < int(tree_.size()); ++i) {
            if (i == tree_.root()) continue;
            const ChainSums sums = chain_sums(tree_, i);
            const double value = sums.gain_sum / sums.cost_sum;
            if (value <= 0.0) continue;
            if (best < 0 || value > best_value ||
                (value == best_value && sums.cost_sum < best_cost)) {
                best = i;
                best_value = value;
                best_cost = sums.cost_sum;
            }
        }
        if (best >= 0) break;
        if (round >= 200) {
            throw std::logic_error("TreeScoutPlanner::step: tree expansion starved");
        }
    }

    int child = best;
    while (tree_.node(child).parent != tree_.root()) child = tree_.node(child).parent;

    pending_child_ = child;
    pending_cost_ = tree_.node(child).edge_cost;
    StepResult r;
    r.waypoint = tree_.node(child).pose;
    r.segment_cost = pending_cost_;
    return r;
}

void TreeScoutPlanner::advance() {
    if (pending_child_ < 0) {
        throw std::logic_error("TreeScoutPlanner::advance: no pending waypoint");
    }
    accumulated_cost_ += pending_cost_;
    tree_.re_root(pending_child_);
    // From the new root, stale chains that led here the long way around are
    // shortcut so the next selection values reflect direct reachability.
    rewire_through(tree_, tree_.root(), params_.max_edge_length, scout_field_);
    pending_child_ = -1;
    pending_cost_ = 0.0;
}

}  // namespace scoutnav
