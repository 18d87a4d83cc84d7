#include "mdf/marching_cubes.hpp"

#include <cmath>
#include <unordered_map>

#include "mc_tables.hpp"

namespace mdf {

namespace {

// Exact-zero lattice values count as inside, as if nudged by -1e-30. This
// keeps the case lookup consistent with vertices pinned to lattice points
// and avoids zero-area triangles from sign flips on exact zeros.
inline bool is_inside(double value, double iso) { return value - iso < 1e-30; }

// Interpolation parameter where the linear interpolant between values p and
// q (relative to iso) hits zero.
inline double crossing_t(double p, double q) {
    if (p == q) return 0.0;
    const double t = p / (p - q);
    return t < 0.0 ? 0.0 : (t > 1.0 ? 1.0 : t);
}

}  // namespace

TriangleMesh marching_cubes(const SampledMdfGrid& grid, std::size_t k, double iso,
                            McDebugInfo* debug) {
    using namespace detail;
    if (k >= grid.channels()) {
        throw ValidationError("marching_cubes: channel " + std::to_string(k) + " out of range");
    }
    const GridSpec& spec = grid.spec();
    const int nx = spec.dims[0], ny = spec.dims[1], nz = spec.dims[2];
    const double* field = grid.channel_data(k);

    TriangleMesh mesh;
    mesh.object_index = k;
    if (debug) debug->vertex_origins.clear();

    // Canonical edge key: lattice index of the lower corner plus the axis.
    const auto edge_key = [&](int x, int y, int z, int axis) -> std::uint64_t {
        return (static_cast<std::uint64_t>((static_cast<std::int64_t>(z) * ny + y) * nx + x) * 3u) +
               static_cast<std::uint64_t>(axis);
    };
    std::unordered_map<std::uint64_t, std::uint32_t> edge_vertex;

    const auto value_at = [&](int x, int y, int z) {
        return field[(static_cast<std::int64_t>(z) * ny + y) * nx + x];
    };

    double corner_vals[8];
    std::uint32_t cell_vert[12];

    for (int z = 0; z + 1 < nz; ++z) {
        for (int y = 0; y + 1 < ny; ++y) {
            for (int x = 0; x + 1 < nx; ++x) {
                int case_index = 0;
                for (int c = 0; c < 8; ++c) {
                    corner_vals[c] = value_at(x + kMcCornerOffset[c][0], y + kMcCornerOffset[c][1],
                                              z + kMcCornerOffset[c][2]);
                    if (is_inside(corner_vals[c], iso)) case_index |= 1 << c;
                }
                const int edges = kMcEdgeTable[case_index];
                if (edges == 0) continue;

                for (int e = 0; e < 12; ++e) {
                    if (!(edges & (1 << e))) continue;
                    const int ca = kMcEdgeCorners[e][0];
                    const int cb = kMcEdgeCorners[e][1];
                    // Lower corner of the lattice edge and its axis.
                    int bx = x + std::min(kMcCornerOffset[ca][0], kMcCornerOffset[cb][0]);
                    int by = y + std::min(kMcCornerOffset[ca][1], kMcCornerOffset[cb][1]);
                    int bz = z + std::min(kMcCornerOffset[ca][2], kMcCornerOffset[cb][2]);
                    int axis = 0;
                    for (int d = 0; d < 3; ++d) {
                        if (kMcCornerOffset[ca][d] != kMcCornerOffset[cb][d]) axis = d;
                    }
                    const std::uint64_t key = edge_key(bx, by, bz, axis);
                    auto it = edge_vertex.find(key);
                    if (it != edge_vertex.end()) {
                        cell_vert[e] = it->second;
                        continue;
                    }
                    // Interpolate from the lower lattice corner toward +axis,
                    // independent of which cell visits the edge first.
                    double p = value_at(bx, by, bz) - iso;
                    int ex = bx + (axis == 0), ey = by + (axis == 1), ez = bz + (axis == 2);
                    double q = value_at(ex, ey, ez) - iso;
                    const double t = crossing_t(p, q);
                    const Vec3 a = spec.lattice_point(bx, by, bz);
                    const Vec3 b = spec.lattice_point(ex, ey, ez);
                    const std::uint32_t idx = static_cast<std::uint32_t>(mesh.vertices.size());
                    mesh.vertices.push_back(a + t * (b - a));
                    if (debug) debug->vertex_origins.push_back({{bx, by, bz}, axis, t});
                    edge_vertex.emplace(key, idx);
                    cell_vert[e] = idx;
                }

                for (const int* tri = kMcTriTable[case_index]; *tri != -1; tri += 3) {
                    // Table winding yields inward normals for negative-inside
                    // fields under this corner layout; swap to point outward.
                    mesh.triangles.push_back(
                        {cell_vert[tri[0]], cell_vert[tri[2]], cell_vert[tri[1]]});
                }
            }
        }
    }
    return mesh;
}

std::vector<TriangleMesh> extract_all(const SampledMdfGrid& grid, double iso) {
    std::vector<TriangleMesh> meshes(grid.channels());
    for (std::size_t k = 0; k < grid.channels(); ++k) {
        meshes[k] = marching_cubes(grid, k, iso);
    }
    return meshes;
}

std::vector<EdgeCrossing> edge_crossings(const SdfVector& u1, const SdfVector& u2) {
    if (u1.size() != u2.size()) {
        throw ValidationError("edge_crossings: endpoint arity mismatch (" +
                              std::to_string(u1.size()) + " vs " + std::to_string(u2.size()) + ")");
    }
    std::vector<EdgeCrossing> crossings;
    for (std::size_t k = 0; k < u1.size(); ++k) {
        const double p = u1[k];
        const double q = u2[k];
        const bool crosses = (p <= 0.0 && q >= 0.0) || (p >= 0.0 && q <= 0.0);
        if (!crosses) continue;
        EdgeCrossing c;
        c.object_index = k;
        c.alpha = (p == 0.0) ? 0.0 : -p / (q - p);
        // Interior lies after the crossing when the interpolant decreases.
        c.sign = p > q ? EdgeCrossing::Sign::Entering : EdgeCrossing::Sign::Exiting;
        crossings.push_back(c);
    }
    return crossings;
}

}  // namespace mdf
