#include "scoutnav/partial_map.hpp"

#include <algorithm>
#include <string>

namespace scoutnav {

PartialMap::PartialMap(int width, int height, double resolution)
    : width_(width), height_(height), resolution_(resolution) {
    if (width <= 0 || height <= 0) {
        throw std::invalid_argument("PartialMap: dimensions must be positive");
    }
    if (resolution <= 0.0) {
        throw std::invalid_argument("PartialMap: resolution must be positive");
    }
    state_.assign(std::size_t(width) * height, CellState::kUnknown);
    cost_.assign(std::size_t(width) * height, 0.0);
}

double PartialMap::observed_cost(GridIndex c) const {
    if (state(c) != CellState::kObserved) {
        throw std::invalid_argument("observed_cost: cell " + std::to_string(c.col) + "," +
                                    std::to_string(c.row) + " has no observed cost");
    }
    return cost_[index(c)];
}

std::vector<GridIndex> PartialMap::observe(const GroundTruthScene& scene, GridIndex pose,
                                           SensorFootprint footprint) {
    if (scene.width != width_ || scene.height != height_ || scene.resolution != resolution_) {
        throw std::invalid_argument("observe: scene and map dimensions differ");
    }
    if (!in_bounds(pose)) {
        throw std::out_of_range("observe: pose " + std::to_string(pose.col) + "," +
                                std::to_string(pose.row) + " outside map");
    }
    if (footprint.half_extent <= 0.0) {
        throw std::invalid_argument("observe: footprint half_extent must be positive");
    }

    const int reach = footprint.reach_cells(resolution_);
    const int col_lo = std::max(0, pose.col - reach);
    const int col_hi = std::min(width_ - 1, pose.col + reach);
    const int row_lo = std::max(0, pose.row - reach);
    const int row_hi = std::min(height_ - 1, pose.row + reach);

    std::vector<GridIndex> newly_observed;
    for (int row = row_lo; row <= row_hi; ++row) {
        for (int col = col_lo; col <= col_hi; ++col) {
            const GridIndex c{col, row};
            if (state_[index(c)] != CellState::kUnknown) continue;
            if (scene.is_obstacle(c)) {
                state_[index(c)] = CellState::kObstacle;
            } else {
                state_[index(c)] = CellState::kObserved;
                cost_[index(c)] = scene.follower_cost_at(c);
                min_observed_cost_ = std::min(min_observed_cost_, cost_[index(c)]);
            }
            ++explored_count_;
            newly_observed.push_back(c);
        }
    }
    return newly_observed;
}

OptimisticMap::OptimisticMap(const PartialMap& base, double fill_cost)
    : base_(base), fill_cost_(fill_cost) {
    if (fill_cost <= 0.0) {
        throw std::invalid_argument("OptimisticMap: fill cost must be positive");
    }
}

OptimisticMap complete(const PartialMap& map, double fill_cost) {
    return OptimisticMap(map, fill_cost);
}

}  // namespace scoutnav
