#include "scoutnav/baselines.hpp"

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <limits>
#include <numbers>
#include <queue>
#include <stdexcept>
#include <utility>

#include "scoutnav/cost_view.hpp"
#include "scoutnav/follower_planner.hpp"

namespace scoutnav {
namespace {

struct FootprintWindow {
    int col_lo, col_hi, row_lo, row_hi;  // inclusive, clipped to the map
};

FootprintWindow clipped_window(GridIndex pose, const PartialMap& map, SensorFootprint footprint) {
    if (!map.in_bounds(pose)) {
        throw std::out_of_range("footprint pose outside the map");
    }
    const int reach = footprint.reach_cells(map.resolution());
    return FootprintWindow{std::max(0, pose.col - reach), std::min(map.width() - 1, pose.col + reach),
                           std::max(0, pose.row - reach), std::min(map.height() - 1, pose.row + reach)};
}

}  // namespace

double gain_exploration(GridIndex pose, const PartialMap& map, SensorFootprint footprint) {
    const FootprintWindow w = clipped_window(pose, map, footprint);
    int unknown = 0;
    for (int row = w.row_lo; row <= w.row_hi; ++row) {
        for (int col = w.col_lo; col <= w.col_hi; ++col) {
            if (map.state({col, row}) == CellState::kUnknown) ++unknown;
        }
    }
    const double cell_area = map.resolution() * map.resolution();
    return unknown * cell_area;
}

double gain_goal_aware(GridIndex pose, const PartialMap& map, SensorFootprint footprint,
                       const FollowerPath& goal_path) {
    return information_gain(pose, map, goal_path, footprint);
}

double gain_cost_aware(GridIndex pose, const PartialMap& map, SensorFootprint footprint,
                       double cost_min) {
    if (!(cost_min > 0.0)) {
        throw std::invalid_argument("cost_min must be positive");
    }
    const FootprintWindow w = clipped_window(pose, map, footprint);
    int unknown = 0;
    int observed = 0;
    double observed_sum = 0.0;
    for (int row = w.row_lo; row <= w.row_hi; ++row) {
        for (int col = w.col_lo; col <= w.col_hi; ++col) {
            const GridIndex cell{col, row};
            switch (map.state(cell)) {
                case CellState::kUnknown:
                    ++unknown;
                    break;
                case CellState::kObserved:
                    ++observed;
                    observed_sum += map.observed_cost(cell);
                    break;
                case CellState::kObstacle:
                    break;
            }
        }
    }
    const double cell_area = map.resolution() * map.resolution();
    const double weight = observed > 0 ? cost_min / (observed_sum / observed) : 1.0;
    return unknown * cell_area * weight;
}

std::vector<FrontierGoal> frontier_cost_goals(const PartialMap& map, double cost_min) {
    if (!(cost_min > 0.0)) {
        throw std::invalid_argument("cost_min must be positive");
    }
    std::vector<FrontierGoal> goals;
    for (int row = 0; row < map.height(); ++row) {
        for (int col = 0; col < map.width(); ++col) {
            if (map.state({col, row}) != CellState::kUnknown) continue;
            int observed = 0;
            double observed_sum = 0.0;
            for (int dr = -1; dr <= 1; ++dr) {
                for (int dc = -1; dc <= 1; ++dc) {
                    if (dr == 0 && dc == 0) continue;
                    const GridIndex nb{col + dc, row + dr};
                    if (!map.in_bounds(nb) || map.state(nb) != CellState::kObserved) continue;
                    ++observed;
                    observed_sum += map.observed_cost(nb);
                }
            }
            if (observed == 0) continue;
            goals.push_back(FrontierGoal{{col, row}, cost_min / (observed_sum / observed)});
        }
    }
    std::stable_sort(goals.begin(), goals.end(),
                     [](const FrontierGoal& a, const FrontierGoal& b) { return a.score > b.score; });
    return goals;
}

namespace {

// Single-source cheapest scout routes over the (fully passable) scout field,
// same 8-connected discretization as the follower planner.
struct ScoutRoutes {
    std::vector<double> dist;
    std::vector<int> parent;
};

ScoutRoutes scout_dijkstra(const ScoutFieldView& field, GridIndex source) {
    const int width = field.width();
    const int height = field.height();
    const std::size_t total = static_cast<std::size_t>(width) * height;
    ScoutRoutes routes;
    routes.dist.assign(total, std::numeric_limits<double>::infinity());
    routes.parent.assign(total, -1);

    const auto index = [width](GridIndex c) {
        return static_cast<std::size_t>(c.row) * width + c.col;
    };
    struct Entry {
        double d;
        std::size_t cell;
        bool operator>(const Entry& other) const {
            if (d != other.d) return d > other.d;
            return cell > other.cell;
        }
    };
    std::priority_queue<Entry, std::vector<Entry>, std::greater<Entry>> open;
    routes.dist[index(source)] = 0.0;
    open.push({0.0, index(source)});
    std::vector<char> closed(total, 0);

    const double res = field.resolution();
    const double diag = res * std::numbers::sqrt2_v<double>;
    while (!open.empty()) {
        const Entry top = open.top();
        open.pop();
        if (closed[top.cell]) continue;
        closed[top.cell] = 1;
        const GridIndex cur{static_cast<int>(top.cell % width), static_cast<int>(top.cell / width)};
        const double cur_cost = field.cost(cur);
        for (int dr = -1; dr <= 1; ++dr) {
            for (int dc = -1; dc <= 1; ++dc) {
                if (dr == 0 && dc == 0) continue;
                const GridIndex nb{cur.col + dc, cur.row + dr};
                if (!field.in_bounds(nb)) continue;
                const std::size_t nb_idx = index(nb);
                if (closed[nb_idx]) continue;
                const double len = (dr != 0 && dc != 0) ? diag : res;
                const double cand = routes.dist[top.cell] + len * 0.5 * (cur_cost + field.cost(nb));
                if (cand < routes.dist[nb_idx]) {
                    routes.dist[nb_idx] = cand;
                    routes.parent[nb_idx] = static_cast<int>(top.cell);
                    open.push({cand, nb_idx});
                }
            }
        }
    }
    return routes;
}

}  // namespace

FrontierCostPlanner::FrontierCostPlanner(const MissionSpec& mission, const GroundTruthScene& scene,
                                         const ScoutIppParams& params, FollowerPlanFn follower)
    : mission_(mission),
      scout_field_(scene),
      params_(params),
      follower_(std::move(follower)),
      pose_(mission.start) {
    if (!scene.in_bounds(mission.start) || !scene.in_bounds(mission.goal)) {
        throw std::invalid_argument("mission endpoints outside the scene");
    }
    if (!(mission.fill_min > 0.0) || !(mission.fill_max >= mission.fill_min)) {
        throw std::invalid_argument("mission fill bounds must satisfy 0 < fill_min <= fill_max");
    }
    if (!(params.footprint.half_extent > 0.0)) {
        throw std::invalid_argument("footprint half extent must be positive");
    }
    if (!follower_) {
        throw std::invalid_argument("follower plan function must be callable");
    }
}

void FrontierCostPlanner::pick_target(const PartialMap& map) {
    target_.reset();
    route_.clear();
    route_pos_ = 0;

    const std::vector<FrontierGoal> goals = frontier_cost_goals(map, mission_.fill_min);
    if (goals.empty()) return;

    const ScoutRoutes routes = scout_dijkstra(scout_field_, pose_);
    const auto index = [&](GridIndex c) {
        return static_cast<std::size_t>(c.row) * map.width() + c.col;
    };
    double best_ratio = -1.0;
    const FrontierGoal* best = nullptr;
    for (const FrontierGoal& goal : goals) {
        const double travel = routes.dist[index(goal.cell)];
        if (!(travel > 0.0)) continue;  // frontier cells are never the (observed) pose
        const double ratio = goal.score / travel;
        if (ratio > best_ratio) {
            best_ratio = ratio;
            best = &goal;
        }
    }
    if (best == nullptr) return;

    target_ = best->cell;
    std::vector<GridIndex> chain;
    for (int at = static_cast<int>(index(best->cell)); at >= 0; at = routes.parent[at]) {
        chain.push_back({at % map.width(), at / map.width()});
        if (chain.back() == pose_) break;
    }
    std::reverse(chain.begin(), chain.end());
    route_.assign(chain.begin() + 1, chain.end());  // drop the current pose
}

StepResult FrontierCostPlanner::step(const PartialMap& map) {
    if (pending_) {
        throw std::logic_error("step() called with an uncommitted waypoint");
    }
    if (params_.budget && accumulated_cost_ > *params_.budget) {
        return {std::nullopt, 0.0,
                Termination{TerminationKind::kBudgetExhausted,
                            follower_(map, std::nullopt, mission_.start, mission_.goal)}};
    }
    if (!target_ || map.state(*target_) != CellState::kUnknown || route_pos_ >= route_.size()) {
        pick_target(map);
        if (!target_) {
            return {std::nullopt, 0.0,
                    Termination{TerminationKind::kFrontiersExhausted,
                                follower_(map, std::nullopt, mission_.start, mission_.goal)}};
        }
    }
    const GridIndex waypoint = route_[route_pos_];
    pending_cost_ = scout_edge_cost(pose_, waypoint, scout_field_);
    pending_ = true;
    return {waypoint, pending_cost_, std::nullopt};
}

void FrontierCostPlanner::advance() {
    if (!pending_) {
        throw std::logic_error("advance() called without a pending waypoint");
    }
    pose_ = route_[route_pos_];
    ++route_pos_;
    accumulated_cost_ += pending_cost_;
    pending_ = false;
    pending_cost_ = 0.0;
}

std::optional<PlannerChoice> parse_planner_choice(std::string_view name) {
    if (name == "path_aware") return PlannerChoice::kPathAware;
    if (name == "exploration") return PlannerChoice::kExploration;
    if (name == "goal_aware") return PlannerChoice::kGoalAware;
    if (name == "cost_aware") return PlannerChoice::kCostAware;
    if (name == "frontier_cost") return PlannerChoice::kFrontierCost;
    return std::nullopt;
}

std::string_view planner_choice_name(PlannerChoice choice) {
    switch (choice) {
        case PlannerChoice::kPathAware: return "path_aware";
        case PlannerChoice::kExploration: return "exploration";
        case PlannerChoice::kGoalAware: return "goal_aware";
        case PlannerChoice::kCostAware: return "cost_aware";
        case PlannerChoice::kFrontierCost: return "frontier_cost";
    }
    throw std::invalid_argument("unknown planner choice");
}

std::unique_ptr<ScoutPlannerBase> make_scout_planner(PlannerChoice choice,
                                                     const MissionSpec& mission,
                                                     const GroundTruthScene& scene,
                                                     const ScoutIppParams& params,
                                                     FollowerPlanFn follower) {
    switch (choice) {
        case PlannerChoice::kPathAware:
            return std::make_unique<TreeScoutPlanner>(GainMode::kPathAware, mission, scene, params,
                                                      std::move(follower));
        case PlannerChoice::kExploration:
            return std::make_unique<TreeScoutPlanner>(GainMode::kExploration, mission, scene, params,
                                                      std::move(follower));
        case PlannerChoice::kGoalAware:
            return std::make_unique<TreeScoutPlanner>(GainMode::kGoalAware, mission, scene, params,
                                                      std::move(follower));
        case PlannerChoice::kCostAware:
            return std::make_unique<TreeScoutPlanner>(GainMode::kCostAware, mission, scene, params,
                                                      std::move(follower));
        case PlannerChoice::kFrontierCost:
            return std::make_unique<FrontierCostPlanner>(mission, scene, params,
                                                         std::move(follower));
    }
    throw std::invalid_argument("unknown planner choice");
}

}  // namespace scoutnav
