#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "mdf/scene.hpp"

namespace mdf {

// Indexed triangle surface for one object. Triangles are wound so that
// normals point out of the enclosed volume.
struct TriangleMesh {
    std::vector<Vec3> vertices;
    std::vector<std::array<std::uint32_t, 3>> triangles;
    std::size_t object_index = 0;

    bool empty() const { return triangles.empty(); }

    Aabb bounding_box() const;

    // Divergence-theorem volume; positive for outward-wound closed meshes.
    double signed_volume() const;

    // Area-weighted vertex normals, normalized. Zero-area faces contribute
    // nothing.
    std::vector<Vec3> vertex_normals() const;

    double area() const;
};

// True when every directed edge appears exactly once and its reverse exactly
// once: a closed, consistently oriented 2-manifold.
bool is_closed(const TriangleMesh& mesh);

// Range-checks triangle indices and rejects triangles that repeat a vertex
// index. Throws ValidationError on violation.
void validate_mesh(const TriangleMesh& mesh);

// Content hash over vertices, triangles and the object index (FNV-1a).
std::uint64_t mesh_content_hash(const TriangleMesh& mesh);

// Wavefront OBJ: v/f records, 1-based indices.
void save_obj(const TriangleMesh& mesh, const std::string& path);
TriangleMesh load_obj(const std::string& path);

// Binary little-endian PLY with float vertices.
void save_ply(const TriangleMesh& mesh, const std::string& path);

}  // namespace mdf
