#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "nuclabel/geometry.hpp"
#include "nuclabel/raster.hpp"
#include "nuclabel/warnings.hpp"

namespace nuclabel {

enum class LabelSource { truth, pseudo };

const char* to_string(LabelSource source);
LabelSource label_source_from_string(const std::string& text);

struct TileEntry {
    std::string id;
    std::string image_path;
    std::string label_path;
    LabelSource source = LabelSource::truth;

    friend bool operator==(const TileEntry&, const TileEntry&) = default;
};

struct DatasetManifest {
    std::vector<TileEntry> tiles;
    double pseudo_rate = 0.0;
    std::uint64_t seed = 0;

    friend bool operator==(const DatasetManifest&, const DatasetManifest&) = default;
};

// round(rate * n), half up. The manifest invariant pins this rule.
int pseudo_tile_count(double pseudo_rate, int tile_count);

// Seeded shuffle of the tile indices, first round(rate * N) become pseudo;
// tile order in the manifest is preserved. Re-invoking with a new seed
// re-samples the pseudo subset.
DatasetManifest mix_labels(std::vector<TileEntry> tiles, double pseudo_rate,
                           std::uint64_t seed);

// Synthetic stained-tissue tiles: filled ellipses with per-instance color
// jitter on a noisy light background. Ground truth for oracle tests.
struct SynthConfig {
    int tile_count = 1;
    int width = 128;
    int height = 128;
    int nuclei_min = 8;
    int nuclei_max = 12;
    double axis_min = 4.0; // semi-axes, pixels
    double axis_max = 12.0;
    double min_gap = 2.0;  // separation between bounding circles
    int max_attempts = 100;
    std::array<int, 3> nucleus_base{110, 60, 150};
    int nucleus_jitter = 25; // per-instance, per-channel
    std::array<int, 3> background_base{225, 205, 220};
    int pixel_noise = 8;
    std::uint64_t seed = 0;
};

struct SynthTile {
    ColorImage image;
    InstanceMap instances;
    PointSet points; // rounded instance centroids, always inside the instance
};

// Deterministic per seed; tiles draw from independent sub-streams. If a
// nucleus cannot be placed within max_attempts the tile gets fewer nuclei
// and a warning is signalled.
std::vector<SynthTile> synth_corpus(const SynthConfig& cfg, Warnings* warnings = nullptr);

} // namespace nuclabel
