#ifndef SCOUTNAV_SCENE_IO_HPP
#define SCOUTNAV_SCENE_IO_HPP

#include <cstdint>
#include <filesystem>

#include "scoutnav/scene.hpp"

namespace scoutnav {

// A scene on disk is a directory holding
//   scene.txt          UTF-8 key=value header (one pair per line, # comments)
//   follower_cost.pgm  16-bit grayscale raster of the follower cost layer
//   scout_cost.pgm     optional 16-bit raster of the scout cost layer
//
// Raster values map linearly to costs, cost = offset + value * scale, with
// the mapping declared in the header. One reserved raster value marks
// obstacles in the follower layer. Rasters are standard binary PGM (P5,
// maxval 65535, most significant byte first as the format requires).
inline constexpr std::uint16_t kObstacleRasterValue = 65535;
inline constexpr std::uint16_t kMaxCostRasterValue = 65534;

// Linear value<->cost mapping of one raster. The scale is nudged so that the
// largest cost value decodes back inside [lo, hi]; quantize() is the exact
// decode(encode()) round trip, used by generators so that scenes they emit
// survive save/load bit-exactly.
struct RasterMapping {
    double offset = 0.0;
    double scale = 0.0;

    static RasterMapping for_range(double lo, double hi);

    std::uint16_t encode(double cost) const;
    double decode(std::uint16_t value) const;
    double quantize(double cost) const { return decode(encode(cost)); }
};

// Writes the scene into `dir` (created if missing). The follower mapping
// anchors at [cost_min, cost_max]; a constant scout layer is stored as a
// header constant instead of a raster. Costs are quantized by the mapping,
// so scenes whose costs already lie on the raster grid round-trip exactly.
void save_scene(const GroundTruthScene& scene, const std::filesystem::path& dir);

// Throws FormatError naming the offending file, line, or cell on any
// malformed input; the loaded scene always satisfies validate().
GroundTruthScene load_scene(const std::filesystem::path& dir);

class PartialMap;

// Explored-state snapshot of a partial map in the same raster format
// (unknown = 0, observed = 32768, obstacle = 65535).
void save_exploration_raster(const PartialMap& map, const std::filesystem::path& file);

}  // namespace scoutnav

#endif
