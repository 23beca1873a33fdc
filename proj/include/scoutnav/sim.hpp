#ifndef SCOUTNAV_SIM_HPP
#define SCOUTNAV_SIM_HPP

#include <cmath>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "scoutnav/baselines.hpp"
#include "scoutnav/follower_planner.hpp"
#include "scoutnav/partial_map.hpp"
#include "scoutnav/scene.hpp"
#include "scoutnav/scout_ipp.hpp"

namespace scoutnav {

// Scout vehicle model. The camera looks straight down with a square
// field of view, so the observed square has half-extent
// flying_height * tan(fov/2) on the ground.
struct RobotParams {
    double v_max = 10.0;         // m/s
    double flying_height = 2.0;  // m above ground
    double fov_deg = 90.0;       // full opening angle of the square field of view

    double footprint_half_extent() const {
        return flying_height * std::tan(fov_deg * 0.5 * std::acos(-1.0) / 180.0);
    }
};

// One sampled point of a run: recorded at mission start, after every executed
// scout segment, and at termination.
struct MetricsRow {
    double time = 0.0;        // seconds of flight, distance / v_max
    double scout_cost = 0.0;  // accumulated scout traversal cost
    double coverage = 0.0;    // explored fraction of all cells
    std::optional<double> feasible_cost;  // best proven-traversable route cost
    std::optional<double> bound_cost;     // optimistic lower bound at fill_min
    bool terminal = false;                // set on the row at which the run ended
};

enum class RunOutcome : std::uint8_t {
    kOptimal,          // planner proved its feasible route optimal
    kInfeasible,       // proven: no start-to-goal route exists
    kBudgetExhausted,  // scout cost budget ran out
    kStopped,          // harness stop for planners that cannot self-certify
};

std::string_view run_outcome_name(RunOutcome outcome);

struct RunConfig {
    PlannerChoice planner = PlannerChoice::kPathAware;
    FollowerPlannerKind follower = FollowerPlannerKind::kGridAStar;
    SamplingStarParams sampling;  // seed is derived from `seed` per planner call
    RobotParams robot;
    ScoutIppParams scout;  // footprint, budget and seed are filled in by simulate()
    std::optional<double> budget;
    std::uint64_t seed = 0;
    std::optional<double> fill_min;  // default: scene.cost_min
    std::optional<double> fill_max;  // default: scene.cost_max
};

struct RunResult {
    std::vector<MetricsRow> metrics;
    RunOutcome outcome = RunOutcome::kStopped;
    std::optional<FollowerPath> final_path;
    std::optional<double> oracle_cost;  // true optimum; empty when the scene has no route
    std::optional<double> time_to_feasible;       // first time a feasible route exists
    std::optional<double> time_to_optimal_found;  // first time feasible cost equals the oracle
    std::optional<double> time_to_done;           // termination time
    std::optional<double> coverage_at_optimal_found;
    double coverage_at_done = 0.0;
    double scout_cost_at_done = 0.0;
    std::optional<PartialMap> final_map;
};

// True optimum of the fully known scene, via the exact grid planner.
std::optional<FollowerPath> plan_scene_optimum(const GroundTruthScene& scene);

// Runs one scouting mission: perfect sensing along every flown segment
// (sampled at half-resolution intervals), metrics after every segment, and
// fair stop rules for planners that cannot prove optimality or infeasibility
// themselves (stop once the map is fully explored or the optimum is
// externally confirmed).
RunResult simulate(const GroundTruthScene& scene, const RunConfig& config);

void write_metrics_csv(const std::vector<MetricsRow>& metrics, std::ostream& out);

struct NamedScene {
    std::string name;
    GroundTruthScene scene;
};

struct CampaignConfig {
    std::vector<NamedScene> scenes;
    std::vector<PlannerChoice> planners;
    std::vector<std::uint64_t> seeds;  // at least two distinct seeds
    RunConfig base;                    // planner and seed fields are overridden per run
    std::filesystem::path out_dir;
    int jobs = 1;
};

// Full sweep over scenes x planners x seeds. Writes per-run metrics CSVs
// plus runs.csv (one row per run), summary.csv (mean, sample standard
// deviation and defined-count per scene/planner/metric) and curves.csv
// (coverage and route quality resampled onto a normalized time grid).
// Output is byte-stable for a fixed configuration, independent of `jobs`.
void run_campaign(const CampaignConfig& config);

}  // namespace scoutnav

#endif
