#pragma once

#include <cassert>
#include <cmath>
#include <cstdint>
#include <span>
#include <vector>

namespace nuclabel {

struct Point {
    int x = 0;
    int y = 0;

    friend bool operator==(const Point&, const Point&) = default;
};

struct PointF {
    double x = 0.0;
    double y = 0.0;

    friend bool operator==(const PointF&, const PointF&) = default;
};

// Nearest integer, ties toward negative infinity. Pinned so that shifted
// points and centroids rasterize identically everywhere.
inline int round_half_down(double v) {
    return static_cast<int>(std::ceil(v - 0.5));
}

// Row-major 2-D grid of scalars. The universal carrier for images, masks
// and maps; indexing is (x, y) with x the column.
template <typename T>
class Raster {
public:
    Raster() = default;
    Raster(int width, int height, T fill = T{})
        : width_(width), height_(height),
          values_(static_cast<std::size_t>(width) * static_cast<std::size_t>(height), fill) {
        assert(width >= 1 && height >= 1);
    }

    int width() const { return width_; }
    int height() const { return height_; }
    std::size_t size() const { return values_.size(); }
    bool empty() const { return values_.empty(); }

    bool in_bounds(int x, int y) const {
        return x >= 0 && x < width_ && y >= 0 && y < height_;
    }

    T& at(int x, int y) {
        assert(in_bounds(x, y));
        return values_[static_cast<std::size_t>(y) * width_ + x];
    }
    const T& at(int x, int y) const {
        assert(in_bounds(x, y));
        return values_[static_cast<std::size_t>(y) * width_ + x];
    }

    T* data() { return values_.data(); }
    const T* data() const { return values_.data(); }

    std::vector<T>& values() { return values_; }
    const std::vector<T>& values() const { return values_; }

    bool same_shape(int w, int h) const { return width_ == w && height_ == h; }

    template <typename U>
    bool same_shape(const Raster<U>& other) const {
        return same_shape(other.width(), other.height());
    }

    friend bool operator==(const Raster&, const Raster&) = default;

private:
    int width_ = 0;
    int height_ = 0;
    std::vector<T> values_;
};

using BinaryMask = Raster<std::uint8_t>;  // values in {0, 1}
using TriMask = Raster<std::uint8_t>;     // {background=0, foreground=1, ignore=2}
using InstanceMap = Raster<std::int32_t>; // 0 = background, ids 1..N
using FloatRaster = Raster<float>;

inline constexpr std::uint8_t kTriBackground = 0;
inline constexpr std::uint8_t kTriForeground = 1;
inline constexpr std::uint8_t kTriIgnore = 2;

// 8-bit RGB tile, channel-interleaved.
struct ColorImage {
    int width = 0;
    int height = 0;
    std::vector<std::uint8_t> rgb; // size = width * height * 3

    ColorImage() = default;
    ColorImage(int w, int h, std::uint8_t fill = 0)
        : width(w), height(h),
          rgb(static_cast<std::size_t>(w) * static_cast<std::size_t>(h) * 3, fill) {}

    std::uint8_t& at(int x, int y, int c) {
        assert(x >= 0 && x < width && y >= 0 && y < height && c >= 0 && c < 3);
        return rgb[(static_cast<std::size_t>(y) * width + x) * 3 + c];
    }
    std::uint8_t at(int x, int y, int c) const {
        assert(x >= 0 && x < width && y >= 0 && y < height && c >= 0 && c < 3);
        return rgb[(static_cast<std::size_t>(y) * width + x) * 3 + c];
    }

    friend bool operator==(const ColorImage&, const ColorImage&) = default;
};

enum class Connectivity { four, eight };

// Offsets (dx, dy) with sqrt(dx^2 + dy^2) <= radius. Radius 0 is exactly
// the origin.
std::vector<Point> disk_offsets(int radius);

// Partition the 1-pixels into maximal connected regions. Ids are assigned
// 1..N in order of the first pixel met in a row-major scan; background
// stays 0.
InstanceMap connected_components(const BinaryMask& mask, Connectivity connectivity);

// Output pixel is 1 iff any input 1-pixel lies within Euclidean distance
// <= radius; clipped to image bounds. Throws on negative radius.
BinaryMask dilate(const BinaryMask& mask, int radius);

// Count of 1-pixels.
int area(const BinaryMask& mask);

// Arithmetic mean of pixel coordinates, not rounded. Throws on an empty set.
PointF centroid(std::span<const Point> pixels);

struct InstanceRegion {
    std::int32_t id = 0;
    std::vector<Point> pixels; // row-major order
};

// Pixel lists of every instance present in the map, ascending id. Tolerates
// sparse ids; empty ids are skipped.
std::vector<InstanceRegion> collect_regions(const InstanceMap& map);

// Keep only the listed regions and relabel 1..N by row-major first pixel.
InstanceMap relabel_sequential(const InstanceMap& map);

} // namespace nuclabel
