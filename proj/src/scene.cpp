#include "scoutnav/scene.hpp"

#include <algorithm>
#include <string>

namespace scoutnav {

namespace {

GridIndex cell_of_point(Point2 p, double resolution, int width, int height) {
    int col = int(std::floor(p.x / resolution));
    int row = int(std::floor(p.y / resolution));
    // Points on the far map edge belong to the last cell.
    col = std::clamp(col, 0, width - 1);
    row = std::clamp(row, 0, height - 1);
    return {col, row};
}

}  // namespace

double GroundTruthScene::scout_cost_at_point(Point2 p) const {
    if (p.x < 0.0 || p.x > width_m() || p.y < 0.0 || p.y > height_m()) {
        throw std::out_of_range("scout_cost_at_point: point outside map rectangle");
    }
    return scout_cost_at(cell_of_point(p, resolution, width, height));
}

void GroundTruthScene::validate() const {
    auto fail = [](const std::string& what) { throw FormatError("scene: " + what); };

    if (width <= 0 || height <= 0) fail("width and height must be positive");
    if (resolution <= 0.0) fail("resolution must be positive");
    if (cost_min <= 0.0) fail("cost_min must be positive");
    if (cost_max < cost_min) fail("cost_max must be >= cost_min");
    const std::size_t n = std::size_t(width) * height;
    if (follower_cost.size() != n) fail("follower cost layer size mismatch");
    if (scout_cost.size() != n) fail("scout cost layer size mismatch");

    for (int row = 0; row < height; ++row) {
        for (int col = 0; col < width; ++col) {
            const GridIndex c{col, row};
            const double f = follower_cost[index(c)];
            if (f != kObstacleCost && (f < cost_min || f > cost_max)) {
                fail("follower cost out of [cost_min, cost_max] at cell " +
                     std::to_string(col) + "," + std::to_string(row));
            }
            const double s = scout_cost[index(c)];
            if (s <= 0.0) {
                fail("scout cost not positive at cell " + std::to_string(col) + "," +
                     std::to_string(row));
            }
        }
    }

    if (!in_bounds(start)) fail("start cell out of bounds");
    if (!in_bounds(goal)) fail("goal cell out of bounds");
    if (is_obstacle(start)) fail("start cell is an obstacle");
    if (is_obstacle(goal)) fail("goal cell is an obstacle");
}

}  // namespace scoutnav
