#ifndef SCOUTNAV_BASELINES_HPP
#define SCOUTNAV_BASELINES_HPP

#include <memory>
#include <optional>
#include <string_view>
#include <vector>

#include "scoutnav/scout_ipp.hpp"

namespace scoutnav {

// Unknown area (m^2) inside the footprint at `pose`, regardless of any path.
double gain_exploration(GridIndex pose, const PartialMap& map, SensorFootprint footprint);

// Identical to the scouting gain, with the guide pinned to the
// pessimistically completed path toward the goal.
double gain_goal_aware(GridIndex pose, const PartialMap& map, SensorFootprint footprint,
                       const FollowerPath& goal_path);

// Exploration gain weighted by cost_min / mean observed follower cost inside
// the footprint, so cheap terrain looks more promising. The weight is 1 when
// nothing inside the footprint has been observed yet, and lies in (0, 1]
// otherwise.
double gain_cost_aware(GridIndex pose, const PartialMap& map, SensorFootprint footprint,
                       double cost_min);

struct FrontierGoal {
    GridIndex cell;
    double score;  // cost_min / mean observed follower cost of its 8-neighbors
};

// Frontier cells (Unknown with at least one Observed 8-neighbor) ranked by
// score, highest first; ties keep scanline order.
std::vector<FrontierGoal> frontier_cost_goals(const PartialMap& map, double cost_min);

// Greedy frontier baseline: repeatedly flies to the frontier maximizing
// score over scout travel cost, following the cheapest scout grid route one
// cell per step. Terminates when no frontier remains.
class FrontierCostPlanner : public ScoutPlannerBase {
  public:
    FrontierCostPlanner(const MissionSpec& mission, const GroundTruthScene& scene,
                        const ScoutIppParams& params, FollowerPlanFn follower);

    StepResult step(const PartialMap& map) override;
    void advance() override;
    double accumulated_cost() const override { return accumulated_cost_; }
    bool self_certifying() const override { return false; }

  private:
    void pick_target(const PartialMap& map);

    MissionSpec mission_;
    ScoutFieldView scout_field_;
    ScoutIppParams params_;
    FollowerPlanFn follower_;
    GridIndex pose_;
    std::optional<GridIndex> target_;
    std::vector<GridIndex> route_;  // remaining cells toward target_, front first
    std::size_t route_pos_ = 0;
    double accumulated_cost_ = 0.0;
    bool pending_ = false;
    double pending_cost_ = 0.0;
};

enum class PlannerChoice : std::uint8_t {
    kPathAware,
    kExploration,
    kGoalAware,
    kCostAware,
    kFrontierCost,
};

std::optional<PlannerChoice> parse_planner_choice(std::string_view name);
std::string_view planner_choice_name(PlannerChoice choice);

std::unique_ptr<ScoutPlannerBase> make_scout_planner(PlannerChoice choice,
                                                     const MissionSpec& mission,
                                                     const GroundTruthScene& scene,
                                                     const ScoutIppParams& params,
                                                     FollowerPlanFn follower);

}  // namespace scoutnav

#endif
