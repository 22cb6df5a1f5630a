#pragma once

#include <array>
#include <cstdint>

#include "nuclabel/geometry.hpp"
#include "nuclabel/raster.hpp"
#include "nuclabel/warnings.hpp"

namespace nuclabel {

// Per-pixel features are (R, G, B, distance-to-nearest-point), each scaled
// to [0,1] and then multiplied by feature_weights. All values configurable;
// every run records them in its output manifest.
struct KMeansConfig {
    int k = 3; // nucleus / background / other tissue
    std::array<double, 4> feature_weights{1.0, 1.0, 1.0, 0.5};
    int max_iters = 100;
    double tolerance = 1e-4; // centroid movement threshold
    std::uint64_t seed = 0;
};

// Distance-based partial labels: foreground = points dilated by
// point_radius, background = Voronoi edge pixels (foreground wins on
// overlap), everything else ignore.
TriMask distance_based_labels(const PointSet& points, int width, int height,
                              int point_radius);

// Color-based labels by seeded k-means++ / Lloyd over (R, G, B, d) features.
// The nuclear cluster is the one whose centroid has the smallest
// d-component. If every feature vector is identical the clustering is
// degenerate: the result is all-background and a warning is signalled.
BinaryMask color_kmeans_labels(const ColorImage& image, const PointSet& points,
                               const KMeansConfig& cfg, Warnings* warnings = nullptr);

// Ps = (color foreground OR dist foreground) AND NOT dist background: the
// union of the color mask and the point disks, with Voronoi-edge pixels
// forced to 0.
BinaryMask combine_pseudo_label(const BinaryMask& color, const TriMask& dist);

struct RefineConfig {
    int remove_radius = 5; // components not meeting dilate(P, remove_radius) drop
    int patch_radius = 3;  // uncovered points gain a disk of this radius
};

// Two-pass refinement: (1) remove every connected component of Ps that does
// not intersect the dilation of the point set, (2) patch a disk around every
// point whose pixel the pass-1 result does not cover. Idempotent.
BinaryMask refine_pseudo_label(const BinaryMask& ps, const PointSet& points,
                               const RefineConfig& cfg = {});

// Erase Voronoi edge pixels from Ps, then 8-connected component labeling;
// ids 1..N in row-major first-pixel order.
InstanceMap split_instances(const BinaryMask& ps_refined, const VoronoiPartition& partition);

} // namespace nuclabel
