#ifndef SCOUTNAV_TYPES_HPP
#define SCOUTNAV_TYPES_HPP

#include <cmath>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <stdexcept>

namespace scoutnav {

// Integer cell coordinate on a grid map. Valid when 0 <= col < width and
// 0 <= row < height of the map it is bound to.
struct GridIndex {
    int col = 0;
    int row = 0;

    friend bool operator==(const GridIndex& a, const GridIndex& b) {
        return a.col == b.col && a.row == b.row;
    }
    friend bool operator!=(const GridIndex& a, const GridIndex& b) { return !(a == b); }
};

struct GridIndexHash {
    std::size_t operator()(const GridIndex& c) const {
        return std::hash<std::int64_t>()((std::int64_t(c.row) << 32) ^ std::uint32_t(c.col));
    }
};

// Continuous position in meters, map frame (origin at the outer corner of
// cell (0,0), x along columns, y along rows).
struct Point2 {
    double x = 0.0;
    double y = 0.0;
};

inline Point2 cell_center(GridIndex c, double resolution) {
    return {(c.col + 0.5) * resolution, (c.row + 0.5) * resolution};
}

inline double distance(Point2 a, Point2 b) {
    return std::hypot(a.x - b.x, a.y - b.y);
}

inline double center_distance(GridIndex a, GridIndex b, double resolution) {
    return resolution * std::hypot(double(a.col - b.col), double(a.row - b.row));
}

// Square downward sensor footprint, given as half the side length in meters.
struct SensorFootprint {
    double half_extent = 0.0;

    // Number of whole cells the footprint reaches from the center cell along
    // each axis. A cell is covered iff its center lies inside the square,
    // which for a cell-centered footprint reduces to an index-delta bound.
    int reach_cells(double resolution) const {
        return int(std::floor(half_extent / resolution + 1e-9));
    }
};

// Scene files or generated scenes that violate the documented format.
class FormatError : public std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Procedural generation could not satisfy the requested constraints.
class GenerationError : public std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A path was scored against a map that does not admit it.
class PathBlockedError : public std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace scoutnav

#endif
