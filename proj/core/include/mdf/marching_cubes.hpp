#pragma once

#include <optional>

#include "mdf/grid.hpp"
#include "mdf/mesh.hpp"

namespace mdf {

// Lattice edge that generated an extracted vertex: the lower lattice corner,
// the axis (0 = x, 1 = y, 2 = z) and the interpolation parameter along it.
struct McVertexOrigin {
    std::array<int, 3> base{0, 0, 0};
    int axis = 0;
    double t = 0.0;
};

struct McDebugInfo {
    std::vector<McVertexOrigin> vertex_origins;  // one per mesh vertex
};

// Standard 256-case marching cubes over channel k of the grid, vertices
// placed by exact linear interpolation along lattice edges and deduplicated
// by canonical edge key. Lattice values equal to iso are treated as inside
// (an infinitesimal nudge toward the object) so the case lookup never
// produces degenerate zero-area cells. An all-positive channel yields an
// empty mesh. Deterministic vertex ordering.
TriangleMesh marching_cubes(const SampledMdfGrid& grid, std::size_t k, double iso = 0.0,
                            McDebugInfo* debug = nullptr);

// marching_cubes over every channel, in channel order.
std::vector<TriangleMesh> extract_all(const SampledMdfGrid& grid, double iso = 0.0);

// Surface crossing of one channel along a linearly interpolated segment.
// alpha = -p / (q - p) for endpoint values p at alpha=0 and q at alpha=1.
struct EdgeCrossing {
    std::size_t object_index = 0;
    double alpha = 0.0;
    enum class Sign { Entering, Exiting } sign = Sign::Exiting;
};

// All channel crossings between two endpoint vectors of equal arity,
// in channel order. Exact zeros at an endpoint report a crossing pinned to
// that endpoint (alpha 0 or 1); a channel that is zero at both ends reports
// a single crossing at alpha = 0. When both endpoints satisfy the
// min1+min2 >= 0 constraint, at most one channel is negative at each end and
// the crossing of the object entered last comes no earlier than the crossing
// of the object exited first.
std::vector<EdgeCrossing> edge_crossings(const SdfVector& u1, const SdfVector& u2);

}  // namespace mdf
