#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "nuclabel/datasets.hpp"
#include "nuclabel/pseudolabel.hpp"
#include "nuclabel/raster.hpp"
#include "nuclabel/warnings.hpp"

namespace nuclabel {

// Everything needed to go from points to pseudo-instances on one tile.
struct PipelineConfig {
    int point_radius = 3;
    KMeansConfig kmeans;
    RefineConfig refine;
};

struct PseudoLabelResult {
    BinaryMask combined; // before refinement
    BinaryMask refined;
    InstanceMap instances;
};

// distance labels + color k-means + combine + refine + Voronoi split.
PseudoLabelResult generate_pseudo_labels(const ColorImage& image, const PointSet& points,
                                         const PipelineConfig& cfg, std::uint64_t kmeans_seed,
                                         Warnings* warnings = nullptr);

struct CorpusTile {
    std::string id;
    ColorImage image;
    InstanceMap gt_instances;
    PointSet gt_points; // rounded centroids of the ground-truth instances
};

// Loads every tile referenced by a manifest; image and label paths resolve
// relative to the manifest's directory. Ground-truth points are derived
// from the instance maps.
std::vector<CorpusTile> load_corpus(const std::filesystem::path& manifest_path);

enum class SweepVariable { epsilon, pseudo_rate };

const char* to_string(SweepVariable variable);

struct SweepSpec {
    SweepVariable variable = SweepVariable::epsilon;
    std::vector<double> values;
    int replicates = 5;
    std::uint64_t base_seed = 0;
    PipelineConfig pipeline;
};

struct SweepRow {
    double value = 0.0;
    int replicate = 0;
    double dice = 0.0;
    std::optional<double> dq_point; // epsilon sweeps only
};

struct SweepAggregate {
    double value = 0.0;
    std::string metric;
    double mean = 0.0;
    double stddev = 0.0;
};

struct SweepReport {
    SweepVariable variable = SweepVariable::epsilon;
    int replicates = 1;
    std::vector<SweepRow> rows;
    std::vector<SweepAggregate> aggregates;
};

// Label-quality scores, not trained-model scores: for each epsilon and
// replicate, perturb the ground-truth points, regenerate pseudo-labels and
// pseudo-instances, and score DICE / DQ_point against ground truth.
SweepReport run_epsilon_sweep(const SweepSpec& spec, std::span<const CorpusTile> corpus,
                              Warnings* warnings = nullptr);

// For each pseudo_rate and replicate, re-sample the pseudo subset of the
// manifest and report mean tile DICE, where tiles keeping their true labels
// contribute 1.0 by definition.
SweepReport run_rate_sweep(const SweepSpec& spec, std::span<const CorpusTile> corpus,
                           Warnings* warnings = nullptr);

// Per-replicate rows; every header carries the label-quality disclaimer.
std::string sweep_report_csv(const SweepReport& report);
// Mean/stddev per (value, metric).
std::string sweep_summary_csv(const SweepReport& report);

} // namespace nuclabel
