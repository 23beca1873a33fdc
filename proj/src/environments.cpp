#include "scoutnav/environments.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>
#include <vector>

#include "scoutnav/cost_view.hpp"
#include "scoutnav/follower_planner.hpp"
#include "scoutnav/scene_io.hpp"

namespace scoutnav {
namespace {

// Smooth value noise in [0, 1): random lattice values, bilinear blend with a
// smoothstep fade so blobs have soft round edges.
class ValueNoise {
  public:
    ValueNoise(double width_m, double height_m, double feature_m, std::mt19937_64& rng)
        : feature_(feature_m),
          nx_(std::max(2, int(std::ceil(width_m / feature_m)) + 1)),
          ny_(std::max(2, int(std::ceil(height_m / feature_m)) + 1)),
          lattice_(std::size_t(nx_) * ny_) {
        std::uniform_real_distribution<double> unit(0.0, 1.0);
        for (double& v : lattice_) v = unit(rng);
    }

    double at(double x, double y) const {
        const double u = x / feature_;
        const double v = y / feature_;
        const int i0 = std::clamp(int(std::floor(u)), 0, nx_ - 2);
        const int j0 = std::clamp(int(std::floor(v)), 0, ny_ - 2);
        const double fx = fade(std::clamp(u - i0, 0.0, 1.0));
        const double fy = fade(std::clamp(v - j0, 0.0, 1.0));
        const double a = lerp(value(i0, j0), value(i0 + 1, j0), fx);
        const double b = lerp(value(i0, j0 + 1), value(i0 + 1, j0 + 1), fx);
        return lerp(a, b, fy);
    }

  private:
    static double fade(double t) { return t * t * (3.0 - 2.0 * t); }
    static double lerp(double a, double b, double t) { return a + (b - a) * t; }
    double value(int i, int j) const { return lattice_[std::size_t(j) * nx_ + i]; }

    double feature_;
    int nx_, ny_;
    std::vector<double> lattice_;
};

void validate_spec(const SceneSpec& spec) {
    if (spec.width < 8 || spec.height < 3) {
        throw std::invalid_argument("scene must be at least 8x3 cells");
    }
    if (!(spec.resolution > 0.0)) {
        throw std::invalid_argument("resolution must be positive");
    }
    if (spec.soil_count < 1) {
        throw std::invalid_argument("soil_count must be at least 1");
    }
    if (!(spec.gradient >= 1.0)) {
        throw std::invalid_argument("gradient must be at least 1");
    }
    if (!(spec.obstacle_fraction >= 0.0) || spec.obstacle_fraction > 0.4) {
        throw std::invalid_argument("obstacle_fraction must lie in [0, 0.4]");
    }
    if (!(spec.blob_scale > 0.0)) {
        throw std::invalid_argument("blob_scale must be positive");
    }
    if (!(spec.base_cost > 0.0)) {
        throw std::invalid_argument("base_cost must be positive");
    }
}

GroundTruthScene attempt_scene(const SceneSpec& spec, std::mt19937_64& rng) {
    GroundTruthScene scene;
    scene.width = spec.width;
    scene.height = spec.height;
    scene.resolution = spec.resolution;
    scene.cost_min = spec.base_cost;
    scene.cost_max = spec.base_cost * spec.gradient;
    scene.start = GridIndex{2, spec.height / 2};
    scene.goal = GridIndex{spec.width - 3, spec.height / 2};
    scene.follower_cost.assign(std::size_t(spec.width) * spec.height, spec.base_cost);
    scene.scout_cost.assign(scene.follower_cost.size(), 1.0);

    // Soil ladder: geometric steps from base_cost to base_cost * gradient,
    // quantized through the raster mapping so saved scenes reload bit-exact.
    const RasterMapping mapping = RasterMapping::for_range(scene.cost_min, scene.cost_max);
    const double ratio =
        spec.soil_count > 1 ? std::pow(spec.gradient, 1.0 / (spec.soil_count - 1)) : 1.0;
    std::vector<double> ladder(spec.soil_count);
    for (int k = 0; k < spec.soil_count; ++k) {
        ladder[k] = mapping.quantize(spec.base_cost * std::pow(ratio, k));
    }

    const ValueNoise noise(scene.width_m(), scene.height_m(), spec.blob_scale, rng);
    for (int row = 0; row < spec.height; ++row) {
        for (int col = 0; col < spec.width; ++col) {
            const Point2 c = cell_center({col, row}, spec.resolution);
            const double n = noise.at(c.x, c.y);
            const int level = std::min(spec.soil_count - 1, int(n * spec.soil_count));
            scene.follower_cost[scene.index({col, row})] = ladder[level];
        }
    }

    // Obstacle blobs: paint random discs cell by cell until the target count
    // is hit exactly, so the realized fraction never drifts from the request.
    const std::size_t total = scene.follower_cost.size();
    const std::size_t target = std::size_t(std::llround(spec.obstacle_fraction * double(total)));
    std::size_t painted = 0;
    std::uniform_int_distribution<int> cols(0, spec.width - 1);
    std::uniform_int_distribution<int> rows(0, spec.height - 1);
    std::uniform_real_distribution<double> radius_m(spec.resolution, 3.0 * spec.resolution);
    long guard = 64 * long(total) + 1024;
    while (painted < target && guard-- > 0) {
        const GridIndex center{cols(rng), rows(rng)};
        const double radius = radius_m(rng);
        const int reach = int(std::ceil(radius / spec.resolution));
        const Point2 cc = cell_center(center, spec.resolution);
        for (int dr = -reach; dr <= reach && painted < target; ++dr) {
            for (int dc = -reach; dc <= reach && painted < target; ++dc) {
                const GridIndex cell{center.col + dc, center.row + dr};
                if (!scene.in_bounds(cell) || cell == scene.start || cell == scene.goal) continue;
                if (scene.is_obstacle(cell)) continue;
                const Point2 p = cell_center(cell, spec.resolution);
                if (std::hypot(p.x - cc.x, p.y - cc.y) > radius) continue;
                scene.follower_cost[scene.index(cell)] = kObstacleCost;
                ++painted;
            }
        }
    }
    if (painted < target) {
        throw GenerationError("could not place the requested obstacle fraction");
    }
    return scene;
}

GroundTruthScene box_scene(int width, int height, double resolution, double cost, bool open) {
    if (width < 32 || height < 20) {
        throw std::invalid_argument("box scenes need at least 32x20 cells");
    }
    if (!(resolution > 0.0) || !(cost > 0.0)) {
        throw std::invalid_argument("resolution and cost must be positive");
    }
    GroundTruthScene scene;
    scene.width = width;
    scene.height = height;
    scene.resolution = resolution;
    scene.cost_min = cost;
    scene.cost_max = cost;
    scene.start = GridIndex{2, height / 2};
    scene.goal = GridIndex{width - 12, height / 2};
    scene.follower_cost.assign(std::size_t(width) * height, cost);
    scene.scout_cost.assign(scene.follower_cost.size(), 1.0);

    const int half = 8;  // outer box half-side, walls two cells thick
    const int left = scene.goal.col - half;
    const int right = scene.goal.col + half;
    const int top = scene.goal.row - half;
    const int bottom = scene.goal.row + half;
    for (int row = top; row <= bottom; ++row) {
        for (int col = left; col <= right; ++col) {
            const bool interior = col >= left + 2 && col <= right - 2 &&  //
                                  row >= top + 2 && row <= bottom - 2;
            if (interior) continue;
            if (open && col <= left + 1 && std::abs(row - scene.goal.row) <= 1) {
                continue;  // gap through the wall facing the start
            }
            scene.follower_cost[scene.index({col, row})] = kObstacleCost;
        }
    }
    scene.validate();
    return scene;
}

}  // namespace

GroundTruthScene generate_scene(const SceneSpec& spec) {
    validate_spec(spec);
    constexpr int kAttempts = 50;
    for (int attempt = 0; attempt < kAttempts; ++attempt) {
        std::mt19937_64 rng(spec.seed + 0x9E3779B97F4A7C15ULL * std::uint64_t(attempt));
        GroundTruthScene scene = attempt_scene(spec, rng);
        scene.validate();
        if (plan_grid_astar(SceneFollowerView(scene), scene.start, scene.goal,
                            PathProvenance::kFeasible)
                .has_value()) {
            return scene;
        }
    }
    throw GenerationError("no start-to-goal connected layout found after 50 attempts");
}

GroundTruthScene make_open_box_scene(int width, int height, double resolution, double cost) {
    return box_scene(width, height, resolution, cost, true);
}

GroundTruthScene make_closed_box_scene(int width, int height, double resolution, double cost) {
    return box_scene(width, height, resolution, cost, false);
}

}  // namespace scoutnav
