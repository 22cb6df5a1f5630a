#pragma once

#include <cstdint>
#include <string>

#include "nuclabel/datasets.hpp"
#include "nuclabel/geometry.hpp"
#include "nuclabel/raster.hpp"

namespace nuclabel {

// Per-pixel horizontal/vertical normalized offsets to the owning instance's
// centroid. Background pixels are exactly 0; values lie in [-1, 1] and the
// extremes are attained on each side of every instance that spans more than
// one column (row).
struct HoverMaps {
    FloatRaster horizontal;
    FloatRaster vertical;

    friend bool operator==(const HoverMaps&, const HoverMaps&) = default;
};

HoverMaps hover_maps(const InstanceMap& instances);

enum class CentroidEncoding { disk, gaussian };

struct CentroidTargetConfig {
    CentroidEncoding encoding = CentroidEncoding::disk;
    double radius_or_sigma = 3.0;
};

// Detection-branch target: binary union of disks at the points, or the
// per-pixel max of unit Gaussians centered on them.
FloatRaster centroid_targets(const PointSet& points, int width, int height,
                             const CentroidTargetConfig& cfg = {});

struct TrainingRecordConfig {
    CentroidTargetConfig centroid;
    LabelSource source = LabelSource::truth;
    std::uint64_t seed = 0;
};

// One tile's worth of decoder targets plus provenance.
struct TrainingRecord {
    BinaryMask mask; // instances > 0
    HoverMaps hover;
    FloatRaster centroid_target;
    LabelSource source = LabelSource::truth;
    std::uint64_t seed = 0;
    std::string config_hash;

    friend bool operator==(const TrainingRecord&, const TrainingRecord&) = default;
};

TrainingRecord build_training_record(const InstanceMap& instances, const PointSet& points,
                                     const TrainingRecordConfig& cfg);

// Same, validating that the source image shares the label dimensions.
TrainingRecord build_training_record(const ColorImage& image, const InstanceMap& instances,
                                     const PointSet& points, const TrainingRecordConfig& cfg);

} // namespace nuclabel
