#include <cstdint>
#include <fstream>
#include <sstream>

#include "mdf/mesh.hpp"

namespace mdf {

void save_obj(const TriangleMesh& mesh, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw IoError("cannot write mesh file: " + path);
    out << "# mdfkit object " << mesh.object_index << "\n";
    out.precision(17);
    for (const Vec3& v : mesh.vertices) {
        out << "v " << v.x() << ' ' << v.y() << ' ' << v.z() << '\n';
    }
    for (const auto& t : mesh.triangles) {
        out << "f " << t[0] + 1 << ' ' << t[1] + 1 << ' ' << t[2] + 1 << '\n';
    }
    if (!out) throw IoError("short write on mesh file: " + path);
}

TriangleMesh load_obj(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open mesh file: " + path);
    TriangleMesh mesh;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty() || line[0] == '#') continue;
        std::istringstream ls(line);
        std::string tag;
        ls >> tag;
        if (tag == "v") {
            Vec3 v;
            if (!(ls >> v.x() >> v.y() >> v.z())) {
                throw IoError(path + ":" + std::to_string(lineno) + ": malformed vertex");
            }
            mesh.vertices.push_back(v);
        } else if (tag == "f") {
            std::array<std::uint32_t, 3> tri{};
            for (int i = 0; i < 3; ++i) {
                std::string tok;
                if (!(ls >> tok)) {
                    throw IoError(path + ":" + std::to_string(lineno) + ": malformed face");
                }
                // accept v, v/vt, v/vt/vn, v//vn
                const long long idx = std::strtoll(tok.c_str(), nullptr, 10);
                if (idx <= 0 || static_cast<std::size_t>(idx) > mesh.vertices.size()) {
                    throw IoError(path + ":" + std::to_string(lineno) + ": face index out of range");
                }
                tri[i] = static_cast<std::uint32_t>(idx - 1);
            }
            std::string extra;
            if (ls >> extra) {
                throw IoError(path + ":" + std::to_string(lineno) +
                              ": only triangle faces are supported");
            }
            mesh.triangles.push_back(tri);
        }
    }
    validate_mesh(mesh);
    return mesh;
}

void save_ply(const TriangleMesh& mesh, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot write mesh file: " + path);
    out << "ply\nformat binary_little_endian 1.0\n"
        << "comment mdfkit object " << mesh.object_index << "\n"
        << "element vertex " << mesh.vertices.size() << "\n"
        << "property float x\nproperty float y\nproperty float z\n"
        << "element face " << mesh.triangles.size() << "\n"
        << "property list uchar int vertex_indices\nend_header\n";
    for (const Vec3& v : mesh.vertices) {
        const float xyz[3] = {static_cast<float>(v.x()), static_cast<float>(v.y()),
                              static_cast<float>(v.z())};
        out.write(reinterpret_cast<const char*>(xyz), sizeof(xyz));
    }
    for (const auto& t : mesh.triangles) {
        const unsigned char n = 3;
        const std::int32_t idx[3] = {static_cast<std::int32_t>(t[0]),
                                     static_cast<std::int32_t>(t[1]),
                                     static_cast<std::int32_t>(t[2])};
        out.write(reinterpret_cast<const char*>(&n), 1);
        out.write(reinterpret_cast<const char*>(idx), sizeof(idx));
    }
    if (!out) throw IoError("short write on mesh file: " + path);
}

}  // namespace mdf
