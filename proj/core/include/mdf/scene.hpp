#pragma once

#include <Eigen/Core>
#include <string>
#include <variant>
#include <vector>

#include "mdf/field.hpp"

namespace mdf {

using Vec3 = Eigen::Vector3d;

struct Aabb {
    Vec3 min = Vec3::Zero();
    Vec3 max = Vec3::Zero();

    void expand(const Aabb& other) {
        min = min.cwiseMin(other.min);
        max = max.cwiseMax(other.max);
    }
    Vec3 extent() const { return max - min; }
    double volume() const { return extent().prod(); }
};

struct Sphere {
    Vec3 center = Vec3::Zero();
    double radius = 1.0;
};

// Axis-aligned box. The SDF is the exact Euclidean distance on both sides:
// outside it is the distance to the nearest surface point, inside the
// negated distance to the nearest face. Both are 1-Lipschitz.
struct Box {
    Vec3 center = Vec3::Zero();
    Vec3 half_extents = Vec3::Ones();
};

using Primitive = std::variant<Sphere, Box>;

double signed_distance(const Sphere& s, const Vec3& p);
double signed_distance(const Box& b, const Vec3& p);
double signed_distance(const Primitive& prim, const Vec3& p);
Aabb bounding_box(const Primitive& prim);

// One object: a union (pointwise min) of primitives.
struct SceneObject {
    std::string name;
    std::vector<Primitive> primitives;

    double signed_distance(const Vec3& p) const;
    Aabb bounding_box() const;
};

// A collection of objects with exact signed distances. Objects may overlap;
// detecting and removing that overlap is the point of the toolkit.
class AnalyticScene {
public:
    AnalyticScene() = default;
    explicit AnalyticScene(std::vector<SceneObject> objects);

    std::size_t object_count() const { return objects_.size(); }
    const std::vector<SceneObject>& objects() const { return objects_; }

    // Tight union of the primitive bounds.
    Aabb bounding_box() const;

    // Per-channel evaluation that works for any K >= 1.
    double signed_distance(std::size_t object, const Vec3& p) const;

private:
    std::vector<SceneObject> objects_;
};

// Exact signed distance from p to every object. Requires K >= 2 (the
// composite vector feeds the constraint operations).
SdfVector eval_scene(const AnalyticScene& scene, const Vec3& p);

// JSON scene format:
// {"objects": [{"name": "...", "primitives": [
//    {"type": "sphere", "center": [x,y,z], "radius": r},
//    {"type": "box", "center": [x,y,z], "half_extents": [hx,hy,hz]}]}]}
AnalyticScene load_scene_json(const std::string& path);
AnalyticScene parse_scene_json(const std::string& text);
std::string scene_to_json(const AnalyticScene& scene);
void save_scene_json(const AnalyticScene& scene, const std::string& path);

}  // namespace mdf
