#ifndef SCOUTNAV_TESTS_FIXTURES_HPP
#define SCOUTNAV_TESTS_FIXTURES_HPP

// Hand-built scenes and maps shared by the test suites.

#include <random>
#include <vector>

#include "scoutnav/partial_map.hpp"
#include "scoutnav/scene.hpp"

namespace testsupport {

// Obstacle-free scene with constant follower and scout cost.
inline scoutnav::GroundTruthScene uniform_scene(int width, int height, double resolution,
                                                double cost, scoutnav::GridIndex start,
                                                scoutnav::GridIndex goal) {
    scoutnav::GroundTruthScene scene;
    scene.width = width;
    scene.height = height;
    scene.resolution = resolution;
    scene.cost_min = cost;
    scene.cost_max = cost;
    scene.start = start;
    scene.goal = goal;
    scene.follower_cost.assign(std::size_t(width) * height, cost);
    scene.scout_cost.assign(std::size_t(width) * height, 1.0);
    return scene;
}

// Reveals the entire scene in one footprint stamp.
inline void observe_all(scoutnav::PartialMap& map, const scoutnav::GroundTruthScene& scene) {
    const double span = (scene.width + scene.height) * scene.resolution;
    map.observe(scene, {scene.width / 2, scene.height / 2}, scoutnav::SensorFootprint{span});
}

inline scoutnav::PartialMap fully_observed(const scoutnav::GroundTruthScene& scene) {
    scoutnav::PartialMap map = scoutnav::PartialMap::blank_like(scene);
    observe_all(map, scene);
    return map;
}

// Random scene: independent per-cell costs in [1, 4], obstacles with the
// given probability (start/goal kept free). No connectivity guarantee.
inline scoutnav::GroundTruthScene random_scene(int width, int height, double resolution,
                                               double obstacle_prob, std::mt19937_64& rng) {
    scoutnav::GroundTruthScene scene = uniform_scene(width, height, resolution, 1.0, {0, 0},
                                                     {width - 1, height - 1});
    scene.cost_max = 4.0;
    std::uniform_real_distribution<double> cost(1.0, 4.0);
    std::uniform_real_distribution<double> coin(0.0, 1.0);
    for (int row = 0; row < height; ++row) {
        for (int col = 0; col < width; ++col) {
            const scoutnav::GridIndex c{col, row};
            if (c == scene.start || c == scene.goal) continue;
            scene.follower_cost[scene.index(c)] =
                coin(rng) < obstacle_prob ? scoutnav::kObstacleCost : cost(rng);
        }
    }
    return scene;
}

}  // namespace testsupport

#endif
