#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "nuclabel/geometry.hpp"
#include "nuclabel/raster.hpp"

namespace nuclabel {

// Detection-quality tally. score = tp / (tp + fp/2 + fn/2); 1.0 when both
// sides are empty (perfect agreement on nothing).
struct DQReport {
    int tp = 0;
    int fp = 0;
    int fn = 0;
    double score = 1.0;
    // (prediction segment id, 0-based index into the centroid list) for
    // dq_point; (prediction id, ground-truth id) for dq_classic.
    std::vector<std::pair<std::int32_t, std::int32_t>> assignment;
};

// 2|X n Y| / (|X| + |Y|); 1.0 when both masks are empty.
double dice(const BinaryMask& pred, const BinaryMask& gt);

// A TP is a ground-truth centroid covered by a uniquely assigned prediction
// segment. Segments are processed by ascending id; each takes the covered,
// still-unclaimed centroid nearest to the segment's own centroid (ties by
// lowest centroid index). Segments left with no centroid count as FP,
// centroids never claimed count as FN.
DQReport dq_point(const InstanceMap& pred, const PointSet& centroids);

// Classic detection quality: segments paired by IoU > 0.5 (such a matching
// is unique), unmatched predictions FP, unmatched ground truths FN.
DQReport dq_classic(const InstanceMap& pred, const InstanceMap& gt);

// Corpus-level aggregation: pool TP/FP/FN counts before the final ratio.
double pooled_dq(std::span<const DQReport> reports);

// Alternative aggregation: average of per-image scores.
double mean_dq(std::span<const DQReport> reports);

} // namespace nuclabel
