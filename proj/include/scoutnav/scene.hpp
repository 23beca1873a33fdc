#ifndef SCOUTNAV_SCENE_HPP
#define SCOUTNAV_SCENE_HPP

#include <vector>

#include "scoutnav/types.hpp"

namespace scoutnav {

// Marker stored in the follower cost layer for cells the follower cannot
// traverse. Every other entry is a positive cost in [cost_min, cost_max].
inline constexpr double kObstacleCost = -1.0;

// Fully known environment used by the simulator and by procedural
// generation. Planners never read the follower layer directly; they see it
// only through PartialMap observations.
struct GroundTruthScene {
    int width = 0;
    int height = 0;
    double resolution = 1.0;  // cell edge length in meters

    // Declared bounds of the follower cost layer.
    double cost_min = 1.0;
    double cost_max = 1.0;

    GridIndex start;
    GridIndex goal;

    std::vector<double> follower_cost;  // row-major, kObstacleCost marks obstacles
    std::vector<double> scout_cost;     // row-major, strictly positive

    std::size_t index(GridIndex c) const { return std::size_t(c.row) * width + c.col; }
    bool in_bounds(GridIndex c) const {
        return c.col >= 0 && c.col < width && c.row >= 0 && c.row < height;
    }
    bool is_obstacle(GridIndex c) const { return follower_cost[index(c)] == kObstacleCost; }
    double follower_cost_at(GridIndex c) const { return follower_cost[index(c)]; }
    double scout_cost_at(GridIndex c) const { return scout_cost[index(c)]; }

    double width_m() const { return width * resolution; }
    double height_m() const { return height * resolution; }

    // Scout cost looked up by continuous position; the point must lie inside
    // the map rectangle (boundary included).
    double scout_cost_at_point(Point2 p) const;

    // Throws FormatError naming the offending field or cell if any structural
    // invariant is violated.
    void validate() const;
};

}  // namespace scoutnav

#endif
