#pragma once

#include <cstdint>
#include <span>

#include "nuclabel/geometry.hpp"
#include "nuclabel/raster.hpp"
#include "nuclabel/warnings.hpp"

namespace nuclabel {

struct PerturbConfig {
    double epsilon = 0.0; // perturbation strength, >= 0
    std::uint64_t seed = 0;
    int max_redraws = 1000;
};

// Maximum horizontal/vertical perturbation distances for one instance.
struct AxisDistances {
    double dx = 0.0; // to the nearer horizontal exit along the anchor row
    double dy = 0.0; // to the nearer vertical exit along the anchor column
};

// Scan origin for the distance measurement and base point for shifts: the
// centroid itself when its rounded pixel lies inside the instance, else the
// instance pixel nearest to the centroid (concave shapes).
PointF perturb_anchor(std::span<const Point> pixels, PointF centroid);

// Distances from the anchor to the nearer exit on each axis. An exit is the
// boundary between the last inside pixel and the first outside pixel
// (half-pixel convention), or the image border when the instance reaches it.
AxisDistances max_perturbation_distances(std::span<const Point> pixels, PointF centroid,
                                         int width, int height);

// Draw (P_X, P_Y) from zero-mean Gaussians with sigma = epsilon * D / 3 per
// axis; redraw both while the shifted point's rounded pixel falls outside
// the instance. After max_redraws failures the anchor is returned and a
// saturation warning signalled. epsilon = 0 returns the anchor exactly.
PointF shift_point(PointF centroid, AxisDistances d, std::span<const Point> pixels,
                   const PerturbConfig& cfg, Warnings* warnings = nullptr);

// One shifted point per instance, ascending instance id. Each instance
// samples from an independent sub-stream derived from (seed, id), so the
// result is a pure function of (instances, epsilon, seed, max_redraws).
PointSet perturb_pointset(const InstanceMap& instances, const PerturbConfig& cfg,
                          Warnings* warnings = nullptr);

} // namespace nuclabel
