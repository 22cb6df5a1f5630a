#include "nuclabel/raster.hpp"

#include <stdexcept>

#include "nuclabel/geometry.hpp"

namespace nuclabel {

std::vector<Point> disk_offsets(int radius) {
    if (radius < 0) throw std::invalid_argument("disk_offsets: radius must be >= 0");
    std::vector<Point> offsets;
    const long r2 = static_cast<long>(radius) * radius;
    for (int dy = -radius; dy <= radius; ++dy) {
        for (int dx = -radius; dx <= radius; ++dx) {
            if (static_cast<long>(dx) * dx + static_cast<long>(dy) * dy <= r2) {
                offsets.push_back({dx, dy});
            }
        }
    }
    return offsets;
}

InstanceMap connected_components(const BinaryMask& mask, Connectivity connectivity) {
    const int w = mask.width();
    const int h = mask.height();
    InstanceMap labels(w, h, 0);

    static constexpr int dx8[] = {-1, 0, 1, -1, 1, -1, 0, 1};
    static constexpr int dy8[] = {-1, -1, -1, 0, 0, 1, 1, 1};
    static constexpr int dx4[] = {0, -1, 1, 0};
    static constexpr int dy4[] = {-1, 0, 0, 1};
    const int* dx = connectivity == Connectivity::eight ? dx8 : dx4;
    const int* dy = connectivity == Connectivity::eight ? dy8 : dy4;
    const int neighbors = connectivity == Connectivity::eight ? 8 : 4;

    std::vector<Point> queue;
    std::int32_t next_id = 0;
    for (int y = 0; y < h; ++y) {
        for (int x = 0; x < w; ++x) {
            if (mask.at(x, y) == 0 || labels.at(x, y) != 0) continue;
            ++next_id;
            labels.at(x, y) = next_id;
            queue.clear();
            queue.push_back({x, y});
            while (!queue.empty()) {
                Point p = queue.back();
                queue.pop_back();
                for (int n = 0; n < neighbors; ++n) {
                    int nx = p.x + dx[n];
                    int ny = p.y + dy[n];
                    if (!mask.in_bounds(nx, ny)) continue;
                    if (mask.at(nx, ny) == 0 || labels.at(nx, ny) != 0) continue;
                    labels.at(nx, ny) = next_id;
                    queue.push_back({nx, ny});
                }
            }
        }
    }
    return labels;
}

BinaryMask dilate(const BinaryMask& mask, int radius) {
    if (radius < 0) throw std::invalid_argument("dilate: radius must be >= 0");
    if (radius == 0) return mask;

    BinaryMask out(mask.width(), mask.height(), 0);
    if (area(mask) == 0) return out;

    // A pixel is within Euclidean distance r of some 1-pixel iff its exact
    // squared distance transform value is <= r^2.
    const auto sq = detail::squared_distance_transform(mask);
    const std::int64_t r2 = static_cast<std::int64_t>(radius) * radius;
    for (std::size_t i = 0; i < out.size(); ++i) {
        out.values()[i] = sq.values()[i] <= r2 ? 1 : 0;
    }
    return out;
}

int area(const BinaryMask& mask) {
    int count = 0;
    for (std::uint8_t v : mask.values()) count += v != 0;
    return count;
}

PointF centroid(std::span<const Point> pixels) {
    if (pixels.empty()) throw std::invalid_argument("centroid: empty pixel set");
    double sx = 0.0, sy = 0.0;
    for (const Point& p : pixels) {
        sx += p.x;
        sy += p.y;
    }
    const double n = static_cast<double>(pixels.size());
    return {sx / n, sy / n};
}

std::vector<InstanceRegion> collect_regions(const InstanceMap& map) {
    std::int32_t max_id = 0;
    for (std::int32_t v : map.values()) {
        if (v < 0) throw std::invalid_argument("collect_regions: negative instance id");
        if (v > max_id) max_id = v;
    }
    std::vector<std::vector<Point>> pixels(static_cast<std::size_t>(max_id) + 1);
    for (int y = 0; y < map.height(); ++y) {
        for (int x = 0; x < map.width(); ++x) {
            std::int32_t id = map.at(x, y);
            if (id > 0) pixels[static_cast<std::size_t>(id)].push_back({x, y});
        }
    }
    std::vector<InstanceRegion> regions;
    for (std::int32_t id = 1; id <= max_id; ++id) {
        auto& px = pixels[static_cast<std::size_t>(id)];
        if (!px.empty()) regions.push_back({id, std::move(px)});
    }
    return regions;
}

InstanceMap relabel_sequential(const InstanceMap& map) {
    InstanceMap out(map.width(), map.height(), 0);
    std::vector<std::int32_t> remap; // old id -> new id, 0 = unseen
    std::int32_t next_id = 0;
    for (int y = 0; y < map.height(); ++y) {
        for (int x = 0; x < map.width(); ++x) {
            std::int32_t id = map.at(x, y);
            if (id <= 0) continue;
            if (static_cast<std::size_t>(id) >= remap.size()) {
                remap.resize(static_cast<std::size_t>(id) + 1, 0);
            }
            if (remap[static_cast<std::size_t>(id)] == 0) {
                remap[static_cast<std::size_t>(id)] = ++next_id;
            }
            out.at(x, y) = remap[static_cast<std::size_t>(id)];
        }
    }
    return out;
}

} // namespace nuclabel
