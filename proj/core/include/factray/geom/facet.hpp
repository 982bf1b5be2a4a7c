#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "factray/geom/aabb.hpp"
#include "factray/geom/vec3.hpp"

namespace factray::geom {

/// Planar convex polygon with a material reference.
///
/// `thickness` > 0 marks the facet as a thin slab: a ray crossing it picks up
/// the slab's two interface coefficients plus bulk loss over thickness/cos(theta).
/// `solid_id` >= 0 groups facets bounding one closed volume; entry/exit hits on
/// the same solid are paired so bulk loss runs over the measured interior chord.
struct Facet {
    std::vector<Vec3> vertices;   // ordered, coplanar, convex
    std::string material_id;
    Vec3 normal;                  // unit, right-hand rule over vertex order
    double thickness = 0.0;       // m, 0 = membrane
    std::int32_t solid_id = -1;   // -1 = not part of a tracked solid

    Aabb bounds() const {
        Aabb b;
        for (const auto& v : vertices) b.expand(v);
        return b;
    }
    Vec3 centroid() const {
        Vec3 c{0, 0, 0};
        for (const auto& v : vertices) c += v;
        return c / static_cast<double>(vertices.size());
    }
    /// Signed distance of p from the supporting plane (positive on the normal side).
    double plane_distance(const Vec3& p) const { return normal.dot(p - vertices[0]); }
};

/// Make a rectangle facet from an origin corner and two edge vectors.
Facet make_rect(const Vec3& origin, const Vec3& edge_u, const Vec3& edge_v,
                std::string material_id, double thickness = 0.0, std::int32_t solid_id = -1);

/// Expand an axis-aligned cuboid [lo, hi] into 6 outward-facing quads.
std::vector<Facet> make_box(const Vec3& lo, const Vec3& hi, const std::string& material_id,
                            double thickness = 0.0, std::int32_t solid_id = -1);

} // namespace factray::geom
