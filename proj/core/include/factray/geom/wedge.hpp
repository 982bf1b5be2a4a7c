#pragma once

#include <cstdint>
#include <vector>

#include "factray/geom/vec3.hpp"

namespace factray::geom {

/// Diffracting edge between two facets (or the free boundary of a single facet).
///
/// The exterior (air) region spans angles [0, exterior_angle] measured from
/// `face0_dir` rotating about `edge_dir` through `face0_normal`. For a free
/// boundary edge the exterior angle is 2*pi and face_1 == face_0.
struct Wedge {
    Vec3 edge_a;             // edge endpoints
    Vec3 edge_b;
    std::int32_t face_0 = -1;
    std::int32_t face_1 = -1;
    double exterior_angle = 0.0; // rad, in (pi, 2*pi]
    double n_param = 0.0;        // exterior_angle / pi

    // Orthonormal frame for measuring face angles: x = face0_dir (into the
    // 0-face, perpendicular to the edge), y = air-side normal of the 0-face,
    // e = unit edge direction with x cross y = e.
    Vec3 face0_dir;
    Vec3 face0_normal;
    Vec3 edge_dir;

    double length() const { return distance(edge_a, edge_b); }

    /// Angle of direction v (need not be perpendicular to the edge) measured
    /// from the 0-face through the exterior region, in [0, 2*pi).
    double face_angle(const Vec3& v) const {
        const double px = v.dot(face0_dir);
        const double py = v.dot(face0_normal);
        double a = std::atan2(py, px);
        if (a < 0.0) a += 2.0 * 3.14159265358979323846;
        return a;
    }
};

} // namespace factray::geom
