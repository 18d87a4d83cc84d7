#include "mdf/grid.hpp"

#include <bit>
#include <cmath>
#include <cstring>
#include <fstream>
#include <new>

#include "mdf/parallel.hpp"

static_assert(std::endian::native == std::endian::little,
              "grid file I/O assumes a little-endian host");

namespace mdf {

void GridSpec::validate() const {
    for (int d = 0; d < 3; ++d) {
        if (dims[d] < 2) {
            throw ValidationError("grid spec: dims must each be >= 2, got (" +
                                  std::to_string(dims[0]) + ", " + std::to_string(dims[1]) + ", " +
                                  std::to_string(dims[2]) + ")");
        }
    }
    if (!bbox_min.allFinite() || !bbox_max.allFinite() ||
        !(bbox_min.array() < bbox_max.array()).all()) {
        throw ValidationError("grid spec: bbox_min must be componentwise below bbox_max");
    }
}

Vec3 GridSpec::lattice_point(int i, int j, int k) const {
    const Vec3 t(static_cast<double>(i) / (dims[0] - 1), static_cast<double>(j) / (dims[1] - 1),
                 static_cast<double>(k) / (dims[2] - 1));
    return bbox_min + t.cwiseProduct(bbox_max - bbox_min);
}

SampledMdfGrid::SampledMdfGrid(GridSpec spec, std::size_t channels)
    : spec_(spec), channels_(channels) {
    spec_.validate();
    if (channels_ == 0) throw ValidationError("grid: needs at least one channel");
    try {
        data_.assign(static_cast<std::size_t>(point_count()) * channels_, 0.0);
    } catch (const std::bad_alloc&) {
        throw ResourceError("grid: allocation of " +
                            std::to_string(point_count() * static_cast<std::int64_t>(channels_)) +
                            " samples failed");
    }
}

SampledMdfGrid::SampledMdfGrid(GridSpec spec, std::size_t channels, std::vector<double> data)
    : spec_(spec), channels_(channels), data_(std::move(data)) {
    spec_.validate();
    if (channels_ == 0) throw ValidationError("grid: needs at least one channel");
    if (data_.size() != static_cast<std::size_t>(point_count()) * channels_) {
        throw ValidationError("grid: data length does not match dims * channels");
    }
    for (double v : data_) {
        if (!std::isfinite(v)) throw ValidationError("grid: non-finite sample");
    }
}

std::vector<double> SampledMdfGrid::vector_at(std::int64_t point) const {
    std::vector<double> u(channels_);
    const std::int64_t n = point_count();
    for (std::size_t k = 0; k < channels_; ++k) {
        u[k] = data_[static_cast<std::size_t>(k) * n + point];
    }
    return u;
}

void SampledMdfGrid::set_vector_at(std::int64_t point, const std::vector<double>& values) {
    const std::int64_t n = point_count();
    for (std::size_t k = 0; k < channels_; ++k) {
        data_[static_cast<std::size_t>(k) * n + point] = values[k];
    }
}

SampledMdfGrid sample_grid(const AnalyticScene& scene, const GridSpec& spec) {
    spec.validate();
    SampledMdfGrid grid(spec, scene.object_count());
    const int nx = spec.dims[0], ny = spec.dims[1];
    // Channels are independent and every lattice value is a pure function of
    // its coordinates, so slab-parallel evaluation matches the sequential
    // sweep bit for bit.
    for (std::size_t k = 0; k < scene.object_count(); ++k) {
        double* out = grid.channel_data(k);
        const SceneObject& obj = scene.objects()[k];
        parallel_for(spec.dims[2], [&](std::int64_t z0, std::int64_t z1) {
            for (std::int64_t z = z0; z < z1; ++z) {
                for (int y = 0; y < ny; ++y) {
                    std::int64_t idx = (z * ny + y) * nx;
                    for (int x = 0; x < nx; ++x, ++idx) {
                        out[idx] = obj.signed_distance(
                            spec.lattice_point(x, y, static_cast<int>(z)));
                    }
                }
            }
        });
    }
    return grid;
}

double intersection_penalty(const SampledMdfGrid& grid) {
    if (grid.channels() < 2) {
        throw ValidationError("intersection_penalty: needs K >= 2 channels");
    }
    const std::int64_t n = grid.point_count();
    double total = 0.0;
    for (std::int64_t p = 0; p < n; ++p) {
        total += intersection_penalty(grid.sdf_at(p));
    }
    return total / static_cast<double>(n);
}

std::int64_t count_infeasible(const SampledMdfGrid& grid, double eps) {
    if (grid.channels() < 2) {
        throw ValidationError("count_infeasible: needs K >= 2 channels");
    }
    const std::int64_t n = grid.point_count();
    std::int64_t bad = 0;
    for (std::int64_t p = 0; p < n; ++p) {
        if (!check_mdf(grid.sdf_at(p), eps)) ++bad;
    }
    return bad;
}

// ---- binary I/O ----

namespace {

constexpr char kMagic[4] = {'M', 'D', 'F', 'G'};
constexpr std::uint32_t kVersion = 1;

template <typename T>
void write_raw(std::ostream& out, const T& v) {
    out.write(reinterpret_cast<const char*>(&v), sizeof(T));
}

template <typename T>
T read_raw(std::istream& in) {
    T v{};
    in.read(reinterpret_cast<char*>(&v), sizeof(T));
    return v;
}

}  // namespace

void save_grid(const SampledMdfGrid& grid, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot write grid file: " + path);

    out.write(kMagic, 4);
    write_raw(out, kVersion);
    write_raw(out, static_cast<std::uint32_t>(grid.spec().dims[0]));
    write_raw(out, static_cast<std::uint32_t>(grid.spec().dims[1]));
    write_raw(out, static_cast<std::uint32_t>(grid.spec().dims[2]));
    write_raw(out, static_cast<std::uint32_t>(grid.channels()));
    for (int i = 0; i < 3; ++i) write_raw(out, grid.spec().bbox_min[i]);
    for (int i = 0; i < 3; ++i) write_raw(out, grid.spec().bbox_max[i]);

    std::vector<float> payload(grid.data().size());
    for (std::size_t i = 0; i < payload.size(); ++i) {
        payload[i] = static_cast<float>(grid.data()[i]);
    }
    out.write(reinterpret_cast<const char*>(payload.data()),
              static_cast<std::streamsize>(payload.size() * sizeof(float)));
    if (!out) throw IoError("short write on grid file: " + path);
}

SampledMdfGrid load_grid(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open grid file: " + path);

    char magic[4];
    in.read(magic, 4);
    if (!in || std::memcmp(magic, kMagic, 4) != 0) {
        throw IoError("not a grid file (bad magic): " + path);
    }
    const auto version = read_raw<std::uint32_t>(in);
    if (version != kVersion) {
        throw IoError("unsupported grid file version " + std::to_string(version) + ": " + path);
    }
    GridSpec spec;
    spec.dims[0] = static_cast<int>(read_raw<std::uint32_t>(in));
    spec.dims[1] = static_cast<int>(read_raw<std::uint32_t>(in));
    spec.dims[2] = static_cast<int>(read_raw<std::uint32_t>(in));
    const auto channels = read_raw<std::uint32_t>(in);
    for (int i = 0; i < 3; ++i) spec.bbox_min[i] = read_raw<double>(in);
    for (int i = 0; i < 3; ++i) spec.bbox_max[i] = read_raw<double>(in);
    if (!in) throw IoError("truncated grid header: " + path);
    spec.validate();
    if (channels == 0) throw IoError("grid file has zero channels: " + path);

    const std::size_t count = static_cast<std::size_t>(spec.point_count()) * channels;
    std::vector<float> payload(count);
    in.read(reinterpret_cast<char*>(payload.data()),
            static_cast<std::streamsize>(count * sizeof(float)));
    if (!in) throw IoError("truncated grid payload: " + path);

    std::vector<double> data(count);
    for (std::size_t i = 0; i < count; ++i) data[i] = static_cast<double>(payload[i]);
    return SampledMdfGrid(spec, channels, std::move(data));
}

}  // namespace mdf
