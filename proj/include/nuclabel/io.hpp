#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "nuclabel/datasets.hpp"
#include "nuclabel/raster.hpp"
#include "nuclabel/targets.hpp"

namespace nuclabel {

// ---------------------------------------------------------------------------
// Float raster container ("NPNS"): magic, version u8 = 1, then height u32,
// width u32, channels u32 little-endian, then float32 little-endian payload,
// row-major and channel-interleaved. A 2x2x1 file is exactly 33 bytes.
// ---------------------------------------------------------------------------

struct FloatVolume {
    int width = 0;
    int height = 0;
    int channels = 0;
    std::vector<float> data; // row-major, channel-interleaved

    FloatVolume() = default;
    FloatVolume(int w, int h, int c, float fill = 0.0f)
        : width(w), height(h), channels(c),
          data(static_cast<std::size_t>(w) * h * c, fill) {}

    float& at(int x, int y, int c) {
        return data[(static_cast<std::size_t>(y) * width + x) * channels + c];
    }
    float at(int x, int y, int c) const {
        return data[(static_cast<std::size_t>(y) * width + x) * channels + c];
    }

    friend bool operator==(const FloatVolume&, const FloatVolume&) = default;
};

FloatVolume to_volume(const FloatRaster& raster);
FloatVolume to_volume(const HoverMaps& maps); // 2 channels: horizontal, vertical
FloatRaster channel(const FloatVolume& volume, int c);

std::vector<std::uint8_t> encode_float_raster(const FloatVolume& volume);
FloatVolume decode_float_raster(const std::vector<std::uint8_t>& bytes);
void write_float_raster(const std::filesystem::path& path, const FloatVolume& volume);
FloatVolume read_float_raster(const std::filesystem::path& path);

// ---------------------------------------------------------------------------
// Mask files: netpbm, lossless by construction. Binary masks are 8-bit P5
// with {0, 255}; TriMasks are P5 with maxval 2; instance maps are 16-bit P5
// (big-endian samples, ids <= 65535); color tiles are P6.
// ---------------------------------------------------------------------------

void write_mask(const std::filesystem::path& path, const BinaryMask& mask);
BinaryMask read_mask(const std::filesystem::path& path);

void write_tri_mask(const std::filesystem::path& path, const TriMask& mask);
TriMask read_tri_mask(const std::filesystem::path& path);

void write_instance_map(const std::filesystem::path& path, const InstanceMap& map);
InstanceMap read_instance_map(const std::filesystem::path& path);

void write_color_image(const std::filesystem::path& path, const ColorImage& image);
ColorImage read_color_image(const std::filesystem::path& path);

// Any single-channel P5 file, binarized nonzero -> 1. CLI convenience for
// metrics over either mask or instance inputs.
BinaryMask read_any_as_binary(const std::filesystem::path& path);

// ---------------------------------------------------------------------------
// Point files: CSV lines "x,y" with an optional "x,y" header, or a JSON
// document {"points": [[x, y], ...]} when the path ends in .json.
// ---------------------------------------------------------------------------

void write_points(const std::filesystem::path& path, const PointSet& points);
PointSet read_points(const std::filesystem::path& path);

// ---------------------------------------------------------------------------
// Dataset manifests (JSON).
// ---------------------------------------------------------------------------

std::string manifest_to_json(const DatasetManifest& manifest);
DatasetManifest manifest_from_json(const std::string& text);
void write_manifest(const std::filesystem::path& path, const DatasetManifest& manifest);
DatasetManifest read_manifest(const std::filesystem::path& path);

// ---------------------------------------------------------------------------
// Training record bundle: <stem>.mask.pgm, <stem>.hover.npns,
// <stem>.centroid.npns, <stem>.meta.json.
// ---------------------------------------------------------------------------

void write_training_record(const std::filesystem::path& stem, const TrainingRecord& record);

// Distinct color per id blended over the source tile. Inspection output.
ColorImage render_overlay(const ColorImage& image, const InstanceMap& instances);

// All writes go through a temp file in the target directory plus rename, so
// interrupted runs never leave partial outputs.
void write_bytes_atomic(const std::filesystem::path& path,
                        const std::vector<std::uint8_t>& bytes);
std::vector<std::uint8_t> read_bytes(const std::filesystem::path& path);

// FNV-1a 64-bit over a canonical config string; hex digest for run summaries.
std::string config_hash(const std::string& canonical);

} // namespace nuclabel
