#ifndef SCOUTNAV_SCOUT_IPP_HPP
#define SCOUTNAV_SCOUT_IPP_HPP

#include <functional>
#include <optional>
#include <random>
#include <vector>

#include "scoutnav/cost_view.hpp"
#include "scoutnav/follower_planner.hpp"
#include "scoutnav/partial_map.hpp"
#include "scoutnav/types.hpp"

namespace scoutnav {

// What the scout is told about the follower's task: endpoints and the
// declared bounds of the cost field, used as optimistic fill values. Nothing
// else about the ground truth is visible to planners.
struct MissionSpec {
    GridIndex start;
    GridIndex goal;
    double fill_min = 1.0;  // lower bound of follower costs (optimal-mode fill)
    double fill_max = 1.0;  // upper bound of follower costs (feasible-mode fill)
};

// Two-phase exploration: first fill unknown space pessimistically to chase
// any feasible follower path, then fill with the lower bound to chase the
// provably optimal one. The switch happens at most once per run.
enum class ExplorationMode : std::uint8_t { kFindFeasible, kFindOptimal };

enum class TerminationKind : std::uint8_t {
    kInfeasible,          // completed map admits no path: the task is impossible
    kOptimal,             // optimistic path fully explored in optimal mode
    kBudgetExhausted,     // scout cost budget spent before a proof
    kGuidePathExplored,   // goal-aware baseline finished its guide path
    kFrontiersExhausted,  // frontier baseline ran out of frontiers
};

struct Termination {
    TerminationKind kind;
    std::optional<FollowerPath> path;  // proven-optimal / explored / best feasible
};

struct ScoutNode {
    GridIndex pose;
    int parent = -1;        // -1 for the root
    double gain = 0.0;      // expected view value, semantics set by the planner
    double edge_cost = 0.0; // scout traversal cost from the parent, > 0 off-root
    bool closed = false;    // footprint fully explored; gain stays 0 forever
};

// Rooted viewpoint tree retained across planning steps. The root always sits
// at the scout's current pose; executing a segment re-roots the tree at the
// flown-to child and keeps everything else intact.
class ScoutTree {
  public:
    ScoutTree(GridIndex root_pose, std::uint64_t seed);

    const std::vector<ScoutNode>& nodes() const { return nodes_; }
    std::size_t size() const { return nodes_.size(); }
    int root() const { return root_; }
    GridIndex root_pose() const { return nodes_[root_].pose; }
    ScoutNode& node(int i) { return nodes_[i]; }
    const ScoutNode& node(int i) const { return nodes_[i]; }

    int add_node(GridIndex pose, int parent, double edge_cost);

    // Index of the node whose pose is closest to `pose` (center distance,
    // ties to the lowest index).
    int nearest(GridIndex pose) const;

    // Makes `child` (which must be adjacent to the current root) the new
    // root; the old root becomes its child over the same edge.
    void re_root(int child);

    std::mt19937_64& rng() { return rng_; }

  private:
    std::vector<ScoutNode> nodes_;
    int root_ = 0;
    std::mt19937_64 rng_;
};

struct ScoutIppParams {
    int samples_per_step = 20;
    double max_edge_length = 8.0;  // meters; new nodes must connect within this
    int retry_cap = 10;            // sampling retries per requested node
    SensorFootprint footprint;
    std::optional<double> budget;  // scout cost; empty = unlimited
    std::uint64_t seed = 0;
};

// Area (m^2) of the guide path's outstanding observation targets that would
// be seen from `pose`: path_observation_targets(guide, map) intersected with
// the footprint square, scaled by the cell area. Covers the path's unknown
// cells plus the side cells that still keep a diagonal step unproven.
double information_gain(GridIndex pose, const PartialMap& map, const FollowerPath& guide,
                        SensorFootprint footprint);

// True when no Unknown cell remains inside the (clipped) footprint at pose.
bool footprint_fully_explored(const PartialMap& map, GridIndex pose, SensorFootprint footprint);

// Scout traversal cost of the straight segment between two cell centers:
// line integral of the scout cost field, midpoint-discretized at intervals
// of at most resolution / 2. Rejects zero-length segments.
double scout_edge_cost(GridIndex a, GridIndex b, const ScoutFieldView& field);

// Accumulated gain over accumulated edge cost along the root-to-node chain;
// 0 for the root by convention.
double subtree_value(const ScoutTree& tree, int node);

// Re-parents every node within `radius` meters of `via` onto `via` whenever
// the direct edge strictly shortens that node's accumulated chain cost to
// the root. Ancestors of `via` are skipped so the tree stays acyclic. This
// keeps chains near-shortest as the tree grows and the root moves, so the
// executed first segments head toward the selected viewpoint instead of
// retracing stale connections. Deterministic (index order, no RNG).
void rewire_through(ScoutTree& tree, int via, double radius, const ScoutFieldView& field);

// Samples up to params.samples_per_step new viewpoints uniformly over the
// map rectangle, connecting each to its nearest tree node within
// max_edge_length (skipped after retry_cap failed draws), then rewiring the
// new node's neighborhood through it. Then closes nodes whose footprint
// holds no Unknown cell and recomputes every open node's gain with `gain`.
// Deterministic given the tree's RNG state.
void expand_and_update(ScoutTree& tree, const PartialMap& map, const ScoutIppParams& params,
                       const ScoutFieldView& field, const std::function<double(GridIndex)>& gain);

// Planner for the optimistic path of the current mode: fill is the mode's
// completion cost, or empty for a feasible (observed-cells-only) query.
using FollowerPlanFn = std::function<std::optional<FollowerPath>(
    const PartialMap& map, std::optional<double> fill, GridIndex start, GridIndex goal)>;

// plan_feasible / plan_optimistic packaged for the scout planners.
FollowerPlanFn make_astar_plan_fn();

struct StepResult {
    std::optional<GridIndex> waypoint;        // commanded next pose, root-adjacent
    double segment_cost = 0.0;                // scout edge cost of that segment
    std::optional<Termination> termination;   // set iff no waypoint
};

class ScoutPlannerBase {
  public:
    virtual ~ScoutPlannerBase() = default;

    // Decides the next waypoint or terminates. Between two step() calls that
    // return waypoints the harness must execute the segment and advance().
    virtual StepResult step(const PartialMap& map) = 0;

    // Commits the pending waypoint: the scout has flown the segment.
    virtual void advance() = 0;

    virtual double accumulated_cost() const = 0;

    // Planners that prove optimality or infeasibility on their own; the
    // harness never has to stop them from outside.
    virtual bool self_certifying() const = 0;
};

enum class GainMode : std::uint8_t {
    kPathAware,    // informative gain over the current-mode optimistic path
    kGoalAware,    // same gain, guide pinned to the feasible-mode path, no switch
    kExploration,  // unknown area in view, path-agnostic
    kCostAware,    // exploration gain weighted toward cheap observed terrain
};

// Receding-horizon tree planner behind the scouting planner and the three
// tree-based baselines; they differ only in gain definition and in how the
// guide path drives mode switching and termination.
class TreeScoutPlanner : public ScoutPlannerBase {
  public:
    TreeScoutPlanner(GainMode mode, const MissionSpec& mission, const GroundTruthScene& scene,
                     const ScoutIppParams& params, FollowerPlanFn follower);

    StepResult step(const PartialMap& map) override;
    void advance() override;
    double accumulated_cost() const override { return accumulated_cost_; }
    bool self_certifying() const override {
        return gain_mode_ == GainMode::kPathAware || gain_mode_ == GainMode::kGoalAware;
    }

    ExplorationMode mode() const { return mode_; }
    int mode_switch_count() const { return mode_switch_count_; }
    const ScoutTree& tree() const { return tree_; }

  private:
    StepResult run_guard_chain(const PartialMap& map, std::optional<FollowerPath>& guide);

    GainMode gain_mode_;
    MissionSpec mission_;
    ScoutFieldView scout_field_;
    ScoutIppParams params_;
    FollowerPlanFn follower_;
    ScoutTree tree_;
    ExplorationMode mode_ = ExplorationMode::kFindFeasible;
    int mode_switch_count_ = 0;
    double accumulated_cost_ = 0.0;
    int pending_child_ = -1;
    double pending_cost_ = 0.0;
};

}  // namespace scoutnav

#endif
