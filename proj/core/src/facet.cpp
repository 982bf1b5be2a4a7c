#include "factray/geom/facet.hpp"

#include <utility>

namespace factray::geom {

Facet make_rect(const Vec3& origin, const Vec3& edge_u, const Vec3& edge_v,
                std::string material_id, double thickness, std::int32_t solid_id) {
    Facet f;
    f.vertices = {origin, origin + edge_u, origin + edge_u + edge_v, origin + edge_v};
    f.normal = edge_u.cross(edge_v).normalized();
    f.material_id = std::move(material_id);
    f.thickness = thickness;
    f.solid_id = solid_id;
    return f;
}

std::vector<Facet> make_box(const Vec3& lo, const Vec3& hi, const std::string& material_id,
                            double thickness, std::int32_t solid_id) {
    const Vec3 dx{hi.x - lo.x, 0, 0};
    const Vec3 dy{0, hi.y - lo.y, 0};
    const Vec3 dz{0, 0, hi.z - lo.z};
    std::vector<Facet> out;
    out.reserve(6);
    // outward normals
    out.push_back(make_rect(lo, dy, dx, material_id, thickness, solid_id));                    // bottom (-z)
    out.push_back(make_rect({lo.x, lo.y, hi.z}, dx, dy, material_id, thickness, solid_id));    // top (+z)
    out.push_back(make_rect(lo, dx, dz, material_id, thickness, solid_id));                    // front (-y)
    out.push_back(make_rect({lo.x, hi.y, lo.z}, dz, dx, material_id, thickness, solid_id));    // back (+y)
    out.push_back(make_rect(lo, dz, dy, material_id, thickness, solid_id));                    // left (-x)
    out.push_back(make_rect({hi.x, lo.y, lo.z}, dy, dz, material_id, thickness, solid_id));    // right (+x)
    return out;
}

} // namespace factray::geom
