#ifndef SCOUTNAV_COST_VIEW_HPP
#define SCOUTNAV_COST_VIEW_HPP

#include <limits>

#include "scoutnav/partial_map.hpp"
#include "scoutnav/scene.hpp"
#include "scoutnav/types.hpp"

namespace scoutnav {

// Read-only traversability and cost query used by the follower planners.
// cost(c) requires passable(c); min_cost() must be a positive lower bound on
// cost() over all passable cells so heuristics stay admissible.
class CostView {
  public:
    virtual ~CostView() = default;

    virtual int width() const = 0;
    virtual int height() const = 0;
    virtual double resolution() const = 0;
    virtual bool passable(GridIndex c) const = 0;
    virtual double cost(GridIndex c) const = 0;
    virtual double min_cost() const = 0;

    bool in_bounds(GridIndex c) const {
        return c.col >= 0 && c.col < width() && c.row >= 0 && c.row < height();
    }
};

// Only cells observed as traversable are usable; everything else (unknown or
// obstacle) is impassable. Paths over this view are guaranteed feasible.
class FeasibleView final : public CostView {
  public:
    explicit FeasibleView(const PartialMap& map) : map_(map) {}

    int width() const override { return map_.width(); }
    int height() const override { return map_.height(); }
    double resolution() const override { return map_.resolution(); }
    bool passable(GridIndex c) const override { return map_.state(c) == CellState::kObserved; }
    double cost(GridIndex c) const override { return map_.observed_cost(c); }
    double min_cost() const override { return map_.min_observed_cost(); }

  private:
    const PartialMap& map_;
};

// Unknown cells are assumed traversable at a constant fill cost; observed
// obstacles stay impassable. Mirrors OptimisticMap without snapshotting.
class OptimisticView final : public CostView {
  public:
    OptimisticView(const PartialMap& map, double fill_cost) : map_(map), fill_cost_(fill_cost) {
        if (fill_cost <= 0.0) {
            throw std::invalid_argument("OptimisticView: fill cost must be positive");
        }
    }

    int width() const override { return map_.width(); }
    int height() const override { return map_.height(); }
    double resolution() const override { return map_.resolution(); }
    bool passable(GridIndex c) const override { return map_.state(c) != CellState::kObstacle; }
    double cost(GridIndex c) const override {
        return map_.state(c) == CellState::kObserved ? map_.observed_cost(c) : fill_cost_;
    }
    double min_cost() const override {
        const double observed = map_.min_observed_cost();
        return observed < fill_cost_ ? observed : fill_cost_;
    }

  private:
    const PartialMap& map_;
    double fill_cost_;
};

// Full knowledge of the follower layer; used by the ground-truth oracle.
class SceneFollowerView final : public CostView {
  public:
    explicit SceneFollowerView(const GroundTruthScene& scene) : scene_(scene) {}

    int width() const override { return scene_.width; }
    int height() const override { return scene_.height; }
    double resolution() const override { return scene_.resolution; }
    bool passable(GridIndex c) const override { return !scene_.is_obstacle(c); }
    double cost(GridIndex c) const override { return scene_.follower_cost_at(c); }
    double min_cost() const override { return scene_.cost_min; }

  private:
    const GroundTruthScene& scene_;
};

// Scout traversal layer: the scout flies over everything, so all cells are
// passable at the scene's scout cost.
class ScoutFieldView final : public CostView {
  public:
    explicit ScoutFieldView(const GroundTruthScene& scene) : scene_(scene) {
        double lo = std::numeric_limits<double>::infinity();
        for (double c : scene.scout_cost) lo = c < lo ? c : lo;
        min_cost_ = lo;
    }

    int width() const override { return scene_.width; }
    int height() const override { return scene_.height; }
    double resolution() const override { return scene_.resolution; }
    bool passable(GridIndex) const override { return true; }
    double cost(GridIndex c) const override { return scene_.scout_cost_at(c); }
    double min_cost() const override { return min_cost_; }

    double cost_at_point(Point2 p) const { return scene_.scout_cost_at_point(p); }

  private:
    const GroundTruthScene& scene_;
    double min_cost_;
};

}  // namespace scoutnav

#endif
