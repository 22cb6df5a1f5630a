#pragma once

#include <cstdint>
#include <vector>

#include "nuclabel/raster.hpp"

namespace nuclabel {

// Ordered list of annotation points, one per nucleus. Position in the list
// is the point's identity (Voronoi label = list index + 1).
using PointSet = std::vector<Point>;

// Enforces the PointSet contract: all points inside [0,width) x [0,height)
// and no duplicate coordinates. Throws std::invalid_argument otherwise.
void validate_points(const PointSet& points, int width, int height);

struct VoronoiPartition {
    InstanceMap cells;  // pixel label = 1-based index of nearest seed
    BinaryMask edges;   // both-sided boundary pixels, 4-neighbor rule
};

// Rasterized Voronoi diagram: each pixel gets the index of its nearest seed
// under squared Euclidean distance, ties broken by lowest seed index. A
// pixel is an edge pixel iff its right or down 4-neighbor carries a
// different label; both sides of such a boundary are marked, so removing
// the edges genuinely disconnects cells even under 8-connected labeling.
VoronoiPartition voronoi_partition(const PointSet& points, int width, int height);

// Sentinel written when the mask has no 1-pixels at all.
inline constexpr float kDistanceSentinel = 1e30f;

// Exact Euclidean distance to the nearest 1-pixel (not a chamfer
// approximation). All-sentinel when the mask is empty.
FloatRaster distance_transform(const BinaryMask& mask, float empty_value = kDistanceSentinel);

namespace detail {

inline constexpr std::int64_t kSquaredInf = std::int64_t{1} << 60;

// Exact squared distance to the nearest 1-pixel, two-pass separable scan.
// kSquaredInf where no 1-pixel exists.
Raster<std::int64_t> squared_distance_transform(const BinaryMask& mask);

} // namespace detail

} // namespace nuclabel
