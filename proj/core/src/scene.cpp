#include "mdf/scene.hpp"

#include <cmath>
#include <fstream>
#include <limits>
#include <sstream>

#include <nlohmann/json.hpp>

namespace mdf {

double signed_distance(const Sphere& s, const Vec3& p) {
    return (p - s.center).norm() - s.radius;
}

double signed_distance(const Box& b, const Vec3& p) {
    const Vec3 q = (p - b.center).cwiseAbs() - b.half_extents;
    const double outside = q.cwiseMax(0.0).norm();
    const double inside = std::min(q.maxCoeff(), 0.0);
    return outside + inside;
}

double signed_distance(const Primitive& prim, const Vec3& p) {
    return std::visit([&p](const auto& g) { return signed_distance(g, p); }, prim);
}

Aabb bounding_box(const Primitive& prim) {
    return std::visit(
        [](const auto& g) -> Aabb {
            using T = std::decay_t<decltype(g)>;
            if constexpr (std::is_same_v<T, Sphere>) {
                return {g.center - Vec3::Constant(g.radius), g.center + Vec3::Constant(g.radius)};
            } else {
                return {g.center - g.half_extents, g.center + g.half_extents};
            }
        },
        prim);
}

double SceneObject::signed_distance(const Vec3& p) const {
    double d = std::numeric_limits<double>::infinity();
    for (const Primitive& prim : primitives) {
        d = std::min(d, mdf::signed_distance(prim, p));
    }
    return d;
}

Aabb SceneObject::bounding_box() const {
    Aabb box = mdf::bounding_box(primitives.front());
    for (std::size_t i = 1; i < primitives.size(); ++i) {
        box.expand(mdf::bounding_box(primitives[i]));
    }
    return box;
}

AnalyticScene::AnalyticScene(std::vector<SceneObject> objects) : objects_(std::move(objects)) {
    if (objects_.empty()) {
        throw ValidationError("scene: needs at least one object");
    }
    for (const SceneObject& obj : objects_) {
        if (obj.primitives.empty()) {
            throw ValidationError("scene: object '" + obj.name + "' has no primitives");
        }
        for (const Primitive& prim : obj.primitives) {
            if (const Sphere* s = std::get_if<Sphere>(&prim)) {
                if (!(s->radius > 0.0) || !s->center.allFinite()) {
                    throw ValidationError("scene: object '" + obj.name + "' has an invalid sphere");
                }
            } else if (const Box* b = std::get_if<Box>(&prim)) {
                if (!(b->half_extents.array() > 0.0).all() || !b->center.allFinite() ||
                    !b->half_extents.allFinite()) {
                    throw ValidationError("scene: object '" + obj.name + "' has an invalid box");
                }
            }
        }
    }
}

Aabb AnalyticScene::bounding_box() const {
    Aabb box = objects_.front().bounding_box();
    for (std::size_t i = 1; i < objects_.size(); ++i) {
        box.expand(objects_[i].bounding_box());
    }
    return box;
}

double AnalyticScene::signed_distance(std::size_t object, const Vec3& p) const {
    return objects_[object].signed_distance(p);
}

SdfVector eval_scene(const AnalyticScene& scene, const Vec3& p) {
    if (!p.allFinite()) {
        throw ValidationError("eval_scene: non-finite query point");
    }
    if (scene.object_count() < 2) {
        throw ValidationError("eval_scene: composite evaluation needs K >= 2 objects");
    }
    std::vector<double> values(scene.object_count());
    for (std::size_t k = 0; k < scene.object_count(); ++k) {
        values[k] = scene.signed_distance(k, p);
    }
    return SdfVector(std::move(values));
}

// ---- JSON I/O ----

namespace {

using nlohmann::json;

Vec3 parse_vec3(const json& j, const std::string& where) {
    if (!j.is_array() || j.size() != 3) {
        throw ValidationError("scene json: " + where + ": expected an array of 3 numbers");
    }
    Vec3 v;
    for (int i = 0; i < 3; ++i) {
        if (!j[i].is_number()) {
            throw ValidationError("scene json: " + where + ": expected an array of 3 numbers");
        }
        v[i] = j[i].get<double>();
    }
    return v;
}

Primitive parse_primitive(const json& j, const std::string& where) {
    if (!j.is_object() || !j.contains("type")) {
        throw ValidationError("scene json: " + where + ".type: missing");
    }
    const std::string type = j["type"].get<std::string>();
    if (type == "sphere") {
        if (!j.contains("center")) throw ValidationError("scene json: " + where + ".center: missing");
        if (!j.contains("radius") || !j["radius"].is_number()) {
            throw ValidationError("scene json: " + where + ".radius: expected a number");
        }
        Sphere s;
        s.center = parse_vec3(j["center"], where + ".center");
        s.radius = j["radius"].get<double>();
        if (!(s.radius > 0.0)) {
            throw ValidationError("scene json: " + where + ".radius: must be positive");
        }
        return s;
    }
    if (type == "box") {
        if (!j.contains("center")) throw ValidationError("scene json: " + where + ".center: missing");
        if (!j.contains("half_extents")) {
            throw ValidationError("scene json: " + where + ".half_extents: missing");
        }
        Box b;
        b.center = parse_vec3(j["center"], where + ".center");
        b.half_extents = parse_vec3(j["half_extents"], where + ".half_extents");
        if (!(b.half_extents.array() > 0.0).all()) {
            throw ValidationError("scene json: " + where + ".half_extents: must be positive");
        }
        return b;
    }
    throw ValidationError("scene json: " + where + ".type: unknown primitive type '" + type + "'");
}

}  // namespace

AnalyticScene parse_scene_json(const std::string& text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ValidationError(std::string("scene json: parse error: ") + e.what());
    }
    if (!doc.is_object() || !doc.contains("objects") || !doc["objects"].is_array()) {
        throw ValidationError("scene json: objects: expected an array");
    }
    std::vector<SceneObject> objects;
    std::size_t oi = 0;
    for (const json& jo : doc["objects"]) {
        const std::string where = "objects[" + std::to_string(oi) + "]";
        SceneObject obj;
        obj.name = jo.value("name", "object" + std::to_string(oi));
        if (!jo.contains("primitives") || !jo["primitives"].is_array() || jo["primitives"].empty()) {
            throw ValidationError("scene json: " + where + ".primitives: expected a nonempty array");
        }
        std::size_t pi = 0;
        for (const json& jp : jo["primitives"]) {
            obj.primitives.push_back(
                parse_primitive(jp, where + ".primitives[" + std::to_string(pi) + "]"));
            ++pi;
        }
        objects.push_back(std::move(obj));
        ++oi;
    }
    return AnalyticScene(std::move(objects));
}

AnalyticScene load_scene_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw IoError("cannot open scene file: " + path);
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_scene_json(buf.str());
}

std::string scene_to_json(const AnalyticScene& scene) {
    json doc;
    doc["objects"] = json::array();
    for (const SceneObject& obj : scene.objects()) {
        json jo;
        jo["name"] = obj.name;
        jo["primitives"] = json::array();
        for (const Primitive& prim : obj.primitives) {
            json jp;
            if (const Sphere* s = std::get_if<Sphere>(&prim)) {
                jp["type"] = "sphere";
                jp["center"] = {s->center.x(), s->center.y(), s->center.z()};
                jp["radius"] = s->radius;
            } else {
                const Box& b = std::get<Box>(prim);
                jp["type"] = "box";
                jp["center"] = {b.center.x(), b.center.y(), b.center.z()};
                jp["half_extents"] = {b.half_extents.x(), b.half_extents.y(), b.half_extents.z()};
            }
            jo["primitives"].push_back(std::move(jp));
        }
        doc["objects"].push_back(std::move(jo));
    }
    return doc.dump(2);
}

void save_scene_json(const AnalyticScene& scene, const std::string& path) {
    std::ofstream out(path);
    if (!out) {
        throw IoError("cannot write scene file: " + path);
    }
    out << scene_to_json(scene) << '\n';
}

}  // namespace mdf
