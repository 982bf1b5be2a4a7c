#include "factray/geom/scene_io.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace factray::geom {

using nlohmann::json;

Scene load_scene_json(const std::string& text) {
    json doc = json::parse(text);
    if (!doc.contains("facets") || !doc["facets"].is_array())
        throw std::invalid_argument("scene json: missing \"facets\" array");
    std::vector<Facet> facets;
    facets.reserve(doc["facets"].size());
    for (const auto& jf : doc["facets"]) {
        Facet f;
        for (const auto& jv : jf.at("vertices"))
            f.vertices.push_back({jv.at(0).get<double>(), jv.at(1).get<double>(), jv.at(2).get<double>()});
        f.material_id = jf.at("material").get<std::string>();
        f.thickness = jf.value("thickness", 0.0);
        f.solid_id = jf.value("solid", -1);
        if (f.vertices.size() >= 3) {
            // normal from winding (Newell), normalized
            Vec3 nw{0, 0, 0};
            const std::size_t n = f.vertices.size();
            for (std::size_t i = 0; i < n; ++i) {
                const Vec3& u = f.vertices[i];
                const Vec3& v = f.vertices[(i + 1) % n];
                nw.x += (u.y - v.y) * (u.z + v.z);
                nw.y += (u.z - v.z) * (u.x + v.x);
                nw.z += (u.x - v.x) * (u.y + v.y);
            }
            if (nw.norm() > 1e-12) f.normal = nw.normalized();
        }
        facets.push_back(std::move(f));
    }
    return build_scene(std::move(facets));
}

Scene load_scene_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open scene file: " + path);
    std::ostringstream os;
    os << in.rdbuf();
    return load_scene_json(os.str());
}

std::string scene_to_json(const Scene& scene) {
    json facets = json::array();
    for (const auto& f : scene.facets()) {
        json jf;
        json verts = json::array();
        for (const auto& v : f.vertices) verts.push_back({v.x, v.y, v.z});
        jf["vertices"] = std::move(verts);
        jf["material"] = f.material_id;
        if (f.thickness > 0.0) jf["thickness"] = f.thickness;
        if (f.solid_id >= 0) jf["solid"] = f.solid_id;
        facets.push_back(std::move(jf));
    }
    json doc;
    doc["facets"] = std::move(facets);
    return doc.dump(2);
}

void save_scene_file(const Scene& scene, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write scene file: " + path);
    out << scene_to_json(scene) << "\n";
}

} // namespace factray::geom
