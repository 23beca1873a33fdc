#ifndef SCOUTNAV_ENVIRONMENTS_HPP
#define SCOUTNAV_ENVIRONMENTS_HPP

#include <cstdint>

#include "scoutnav/scene.hpp"

namespace scoutnav {

// Parameters for the procedural soil-field generator. Costs form a geometric
// ladder of `soil_count` levels from base_cost up to base_cost * gradient,
// arranged in smooth value-noise blobs; obstacle blobs are added on top until
// the requested fraction of cells is blocked.
struct SceneSpec {
    int width = 64;
    int height = 48;
    double resolution = 0.5;      // meters per cell
    int soil_count = 3;           // number of distinct soil cost levels (>= 1)
    double gradient = 4.0;        // cost_max / cost_min ratio (>= 1)
    double obstacle_fraction = 0.1;  // target fraction of blocked cells, [0, 0.4]
    double blob_scale = 4.0;      // value-noise feature size in meters
    double base_cost = 1.0;       // cheapest soil cost (> 0)
    std::uint64_t seed = 0;
};

// Generates a random scene per the spec above. Start sits near the left edge,
// goal near the right edge, both on mid-height; a start-to-goal route is
// guaranteed (layouts that block it are re-rolled, up to a retry limit).
// Throws std::invalid_argument for out-of-range parameters and
// GenerationError when no connected layout is found within the retry limit.
GroundTruthScene generate_scene(const SceneSpec& spec);

// Uniform-cost scene with the goal enclosed by a two-cell-thick obstacle box.
// The open variant leaves a gap in the wall facing the start so exactly one
// route into the box exists; the closed variant seals the goal off entirely.
GroundTruthScene make_open_box_scene(int width, int height, double resolution, double cost);
GroundTruthScene make_closed_box_scene(int width, int height, double resolution, double cost);

}  // namespace scoutnav

#endif
