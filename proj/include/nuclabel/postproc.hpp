#pragma once

#include "nuclabel/raster.hpp"
#include "nuclabel/targets.hpp"

namespace nuclabel {

struct PostprocConfig {
    double seg_threshold = 0.5;      // in (0, 1)
    double gradient_threshold = 0.4; // on [-1,1]-normalized maps, central differences
    int min_instance_area = 10;      // pixels
};

// Instance reconstruction from a predicted segmentation probability map and
// the two distance maps. Foreground is thresholded, boundary evidence is the
// max of the central-difference gradient magnitudes (d horizontal / dx,
// d vertical / dy), low-evidence foreground components seed a marker-based
// watershed flood over the remaining foreground, and undersized instances
// are dropped. Deterministic: the flood orders by (evidence, row-major
// pixel index).
InstanceMap instances_from_predictions(const FloatRaster& seg, const HoverMaps& maps,
                                       const PostprocConfig& cfg = {});

} // namespace nuclabel
