#include "mdf/mesh.hpp"

#include <cstring>
#include <unordered_map>

namespace mdf {

Aabb TriangleMesh::bounding_box() const {
    Aabb box;
    if (vertices.empty()) return box;
    box.min = box.max = vertices.front();
    for (const Vec3& v : vertices) {
        box.min = box.min.cwiseMin(v);
        box.max = box.max.cwiseMax(v);
    }
    return box;
}

double TriangleMesh::signed_volume() const {
    double six_v = 0.0;
    for (const auto& t : triangles) {
        const Vec3& a = vertices[t[0]];
        const Vec3& b = vertices[t[1]];
        const Vec3& c = vertices[t[2]];
        six_v += a.dot(b.cross(c));
    }
    return six_v / 6.0;
}

std::vector<Vec3> TriangleMesh::vertex_normals() const {
    std::vector<Vec3> normals(vertices.size(), Vec3::Zero());
    for (const auto& t : triangles) {
        const Vec3& a = vertices[t[0]];
        const Vec3 n = (vertices[t[1]] - a).cross(vertices[t[2]] - a);  // 2*area weighted
        normals[t[0]] += n;
        normals[t[1]] += n;
        normals[t[2]] += n;
    }
    for (Vec3& n : normals) {
        const double len = n.norm();
        if (len > 0.0) n /= len;
    }
    return normals;
}

double TriangleMesh::area() const {
    double a2 = 0.0;
    for (const auto& t : triangles) {
        a2 += (vertices[t[1]] - vertices[t[0]]).cross(vertices[t[2]] - vertices[t[0]]).norm();
    }
    return 0.5 * a2;
}

bool is_closed(const TriangleMesh& mesh) {
    if (mesh.triangles.empty()) return false;
    // Each directed edge must occur exactly once, and its opposite as well.
    std::unordered_map<std::uint64_t, int> directed;
    directed.reserve(mesh.triangles.size() * 3);
    const auto key = [](std::uint32_t a, std::uint32_t b) {
        return (static_cast<std::uint64_t>(a) << 32) | b;
    };
    for (const auto& t : mesh.triangles) {
        for (int e = 0; e < 3; ++e) {
            if (++directed[key(t[e], t[(e + 1) % 3])] > 1) return false;
        }
    }
    for (const auto& [k, count] : directed) {
        const std::uint64_t rev = (k << 32) | (k >> 32);
        auto it = directed.find(rev);
        if (it == directed.end() || it->second != 1) return false;
    }
    return true;
}

void validate_mesh(const TriangleMesh& mesh) {
    const std::uint32_t n = static_cast<std::uint32_t>(mesh.vertices.size());
    for (std::size_t i = 0; i < mesh.triangles.size(); ++i) {
        const auto& t = mesh.triangles[i];
        if (t[0] >= n || t[1] >= n || t[2] >= n) {
            throw ValidationError("mesh: triangle " + std::to_string(i) + " indexes out of range");
        }
        if (t[0] == t[1] || t[1] == t[2] || t[0] == t[2]) {
            throw ValidationError("mesh: triangle " + std::to_string(i) + " repeats a vertex index");
        }
    }
}

std::uint64_t mesh_content_hash(const TriangleMesh& mesh) {
    std::uint64_t h = 1469598103934665603ull;  // FNV-1a 64
    const auto mix = [&h](const void* data, std::size_t len) {
        const unsigned char* p = static_cast<const unsigned char*>(data);
        for (std::size_t i = 0; i < len; ++i) {
            h ^= p[i];
            h *= 1099511628211ull;
        }
    };
    for (const Vec3& v : mesh.vertices) {
        const double xyz[3] = {v.x(), v.y(), v.z()};
        mix(xyz, sizeof(xyz));
    }
    for (const auto& t : mesh.triangles) mix(t.data(), sizeof(std::uint32_t) * 3);
    const std::uint64_t k = mesh.object_index;
    mix(&k, sizeof(k));
    return h;
}

}  // namespace mdf
