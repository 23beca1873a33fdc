#ifndef SCOUTNAV_PARTIAL_MAP_HPP
#define SCOUTNAV_PARTIAL_MAP_HPP

#include <limits>
#include <vector>

#include "scoutnav/scene.hpp"
#include "scoutnav/types.hpp"

namespace scoutnav {

enum class CellState : std::uint8_t {
    kUnknown,
    kObserved,  // traversable, cost known exactly
    kObstacle,  // observed and intraversable for the follower
};

// The scout's accumulated knowledge of the follower cost field. Exploration
// is monotone: cells only ever move from Unknown to Observed or Obstacle and
// never change afterwards (sensing is perfect). Not internally synchronized;
// mutate from one thread at a time, read freely between mutations.
class PartialMap {
  public:
    PartialMap(int width, int height, double resolution);

    static PartialMap blank_like(const GroundTruthScene& scene) {
        return PartialMap(scene.width, scene.height, scene.resolution);
    }

    int width() const { return width_; }
    int height() const { return height_; }
    double resolution() const { return resolution_; }
    std::size_t cell_count() const { return state_.size(); }

    std::size_t index(GridIndex c) const { return std::size_t(c.row) * width_ + c.col; }
    bool in_bounds(GridIndex c) const {
        return c.col >= 0 && c.col < width_ && c.row >= 0 && c.row < height_;
    }

    CellState state(GridIndex c) const { return state_[index(c)]; }
    bool is_unknown(GridIndex c) const { return state(c) == CellState::kUnknown; }

    // Follower cost of an Observed cell. Unknown and obstacle cells carry no cost.
    double observed_cost(GridIndex c) const;

    int explored_count() const { return explored_count_; }

    // Fraction of cells that are Observed or Obstacle, in [0, 1].
    double coverage() const { return double(explored_count_) / double(cell_count()); }

    // Smallest observed follower cost so far; +infinity while nothing is observed.
    double min_observed_cost() const { return min_observed_cost_; }

    // Reveals every cell whose center lies inside the sensor square centered
    // on `pose`, clipped at the map border. Returns the cells that changed
    // state (scanline order); repeated observation is a no-op.
    std::vector<GridIndex> observe(const GroundTruthScene& scene, GridIndex pose,
                                   SensorFootprint footprint);

  private:
    int width_;
    int height_;
    double resolution_;
    std::vector<CellState> state_;
    std::vector<double> cost_;
    int explored_count_ = 0;
    double min_observed_cost_ = std::numeric_limits<double>::infinity();
};

// Completed map: a snapshot of a PartialMap where every Unknown cell is
// assumed traversable at a constant fill cost. Observed knowledge is kept
// as-is and obstacles stay impassable. Immutable once built, safe to share.
class OptimisticMap {
  public:
    OptimisticMap(const PartialMap& base, double fill_cost);

    const PartialMap& base() const { return base_; }
    double fill_cost() const { return fill_cost_; }

    int width() const { return base_.width(); }
    int height() const { return base_.height(); }
    double resolution() const { return base_.resolution(); }

    bool passable(GridIndex c) const { return base_.state(c) != CellState::kObstacle; }

    // Cost of a passable cell: observed value if known, fill cost otherwise.
    double cost(GridIndex c) const {
        return base_.state(c) == CellState::kObserved ? base_.observed_cost(c) : fill_cost_;
    }

  private:
    PartialMap base_;
    double fill_cost_;
};

OptimisticMap complete(const PartialMap& map, double fill_cost);

}  // namespace scoutnav

#endif
