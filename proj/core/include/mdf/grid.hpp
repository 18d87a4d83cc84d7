#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "mdf/scene.hpp"

namespace mdf {

// Regular lattice over an axis-aligned box. Lattice point (i, j, k) maps to
//   min + (i/(nx-1), j/(ny-1), k/(nz-1)) .* (max - min),
// so the corner points land exactly on the box.
struct GridSpec {
    std::array<int, 3> dims{2, 2, 2};
    Vec3 bbox_min = Vec3::Constant(-1.0);
    Vec3 bbox_max = Vec3::Constant(1.0);

    void validate() const;
    std::int64_t point_count() const {
        return static_cast<std::int64_t>(dims[0]) * dims[1] * dims[2];
    }
    Vec3 cell_size() const {
        return (bbox_max - bbox_min).cwiseQuotient(
            Vec3(dims[0] - 1.0, dims[1] - 1.0, dims[2] - 1.0));
    }
    Vec3 lattice_point(int i, int j, int k) const;
};

// K scalar channels sampled on a lattice. Layout is channel-outermost with
// x fastest within a channel:
//   data[((k*nz + z)*ny + y)*nx + x]
// so per-object meshing reads one contiguous block.
class SampledMdfGrid {
public:
    SampledMdfGrid() = default;
    SampledMdfGrid(GridSpec spec, std::size_t channels);
    SampledMdfGrid(GridSpec spec, std::size_t channels, std::vector<double> data);

    const GridSpec& spec() const { return spec_; }
    std::size_t channels() const { return channels_; }
    std::int64_t point_count() const { return spec_.point_count(); }

    std::int64_t point_index(int x, int y, int z) const {
        return (static_cast<std::int64_t>(z) * spec_.dims[1] + y) * spec_.dims[0] + x;
    }
    double& at(int x, int y, int z, std::size_t channel) {
        return data_[static_cast<std::size_t>(channel) * point_count() + point_index(x, y, z)];
    }
    double at(int x, int y, int z, std::size_t channel) const {
        return data_[static_cast<std::size_t>(channel) * point_count() + point_index(x, y, z)];
    }

    // Channel-major contiguous block for object k.
    const double* channel_data(std::size_t channel) const {
        return data_.data() + static_cast<std::size_t>(channel) * point_count();
    }
    double* channel_data(std::size_t channel) {
        return data_.data() + static_cast<std::size_t>(channel) * point_count();
    }

    std::vector<double> vector_at(std::int64_t point) const;
    SdfVector sdf_at(std::int64_t point) const { return SdfVector(vector_at(point)); }
    void set_vector_at(std::int64_t point, const std::vector<double>& values);

    const std::vector<double>& data() const { return data_; }

private:
    GridSpec spec_;
    std::size_t channels_ = 0;
    std::vector<double> data_;
};

// Evaluates every object of the scene at every lattice point. Deterministic
// for a fixed scene and spec; internally parallel over lattice slabs.
SampledMdfGrid sample_grid(const AnalyticScene& scene, const GridSpec& spec);

// Mean pointwise overlap penalty over the lattice. Requires K >= 2.
double intersection_penalty(const SampledMdfGrid& grid);

// Number of lattice points whose vector violates min1 + min2 >= eps.
std::int64_t count_infeasible(const SampledMdfGrid& grid, double eps = 0.0);

// Binary grid file, little-endian:
//   magic "MDFG" | version u32 = 1 | nx, ny, nz, K as u32 |
//   bbox as 6 x f64 (min.xyz, max.xyz) | nx*ny*nz*K x f32 payload
// in the in-memory layout (channel-outermost, x fastest).
void save_grid(const SampledMdfGrid& grid, const std::string& path);
SampledMdfGrid load_grid(const std::string& path);

}  // namespace mdf
