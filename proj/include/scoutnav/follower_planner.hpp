#ifndef SCOUTNAV_FOLLOWER_PLANNER_HPP
#define SCOUTNAV_FOLLOWER_PLANNER_HPP

#include <cstdint>
#include <optional>
#include <ostream>
#include <span>
#include <vector>

#include "scoutnav/cost_view.hpp"
#include "scoutnav/partial_map.hpp"
#include "scoutnav/types.hpp"

namespace scoutnav {

enum class PathProvenance : std::uint8_t {
    kFeasible,    // planned over observed traversable cells only
    kOptimistic,  // planned over a completed map with a constant fill cost
};

// 8-connected cell path from start to goal. total_cost is the trapezoidal
// line integral of the cell costs over the map that produced the path and
// always equals path_cost() recomputed over that map.
struct FollowerPath {
    std::vector<GridIndex> cells;
    double total_cost = 0.0;
    PathProvenance provenance = PathProvenance::kFeasible;
    double fill_cost = 0.0;  // meaningful for optimistic paths only

    GridIndex start() const { return cells.front(); }
    GridIndex goal() const { return cells.back(); }
};

enum class FollowerPlannerKind : std::uint8_t { kGridAStar, kSamplingStar };

struct SamplingStarParams {
    int iterations = 2500;
    double rewire_radius = 2.0;  // meters; also the maximum extension length
    std::uint64_t seed = 0;
    double goal_bias = 0.05;  // fraction of samples drawn at the goal cell
};

// Trapezoidal cost of a cell path: each step contributes
// step_length * (cost(a) + cost(b)) / 2, with step_length the resolution for
// axial moves and resolution * sqrt(2) for diagonal ones. A single-cell path
// costs 0. Throws std::invalid_argument when consecutive cells are not
// distinct 8-neighbors, std::out_of_range for cells outside the map, and
// PathBlockedError when a cell is impassable in the view.
double path_cost(std::span<const GridIndex> cells, const CostView& view);

// Minimum-cost path over observed traversable cells only. Returns nullopt
// when no such path exists, including unobserved or obstacle endpoints.
std::optional<FollowerPath> plan_feasible(const PartialMap& map, GridIndex start, GridIndex goal);

// Minimum-cost path over the map completed with `fill_cost`; the returned
// cost lower-bounds the true optimum when fill_cost lower-bounds the
// unobserved cells' costs.
std::optional<FollowerPath> plan_optimistic(const PartialMap& map, double fill_cost,
                                            GridIndex start, GridIndex goal);

// True iff the explored map alone proves the path traversable: every path
// cell has been observed as traversable and every diagonal step has at least
// one side cell observed as traversable (otherwise both sides could still be
// obstacles, which would forbid the corner-cutting move).
bool is_path_explored(const FollowerPath& path, const PartialMap& map);

// Cells whose observation is still missing before is_path_explored can hold:
// the path's unknown cells plus, for each diagonal step not yet proven legal,
// its unknown side cells. Deduplicated, in path order. Empty for any path a
// planner could still produce iff the path is fully explored.
std::vector<GridIndex> path_observation_targets(const FollowerPath& path, const PartialMap& map);

// Minimum-cost path over an arbitrary view; the exact deterministic planner
// behind plan_feasible and plan_optimistic.
std::optional<FollowerPath> plan_grid_astar(const CostView& view, GridIndex start, GridIndex goal,
                                            PathProvenance provenance, double fill_cost = 0.0);

// Sampling-based planner in the spirit of RRT*: grows a tree of straight
// edges between cell centers, rewiring within rewire_radius. Edges are
// rasterized onto the grid so the result is a regular 8-connected path with
// the same cost discretization as the A* planner; with a generous iteration
// budget the returned cost approaches the A* optimum from above.
// Deterministic for a fixed seed.
std::optional<FollowerPath> plan_sampling_star(const CostView& view, GridIndex start,
                                               GridIndex goal, const SamplingStarParams& params,
                                               PathProvenance provenance, double fill_cost = 0.0);

// One cell per row, "col,row".
void write_path_csv(const FollowerPath& path, std::ostream& out);

}  // namespace scoutnav

#endif
