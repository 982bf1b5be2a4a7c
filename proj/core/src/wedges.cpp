#include <array>
#include <cmath>
#include <cstdint>
#include <map>
#include <sstream>
#include <stdexcept>

#include "factray/geom/scene.hpp"

namespace factray::geom {

namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr double kCoplanarTol = 1e-3; // rad, air angle within this of pi counts as flat

// Vertex key quantized to the weld tolerance.
std::array<std::int64_t, 3> vertex_key(const Vec3& v) {
    return {static_cast<std::int64_t>(std::llround(v.x / kWeldTol)),
            static_cast<std::int64_t>(std::llround(v.y / kWeldTol)),
            static_cast<std::int64_t>(std::llround(v.z / kWeldTol))};
}

struct EdgeRef {
    std::int32_t facet;
    Vec3 a, b;
};

// In-plane unit direction from the edge toward the facet interior.
Vec3 into_face_dir(const Facet& f, const Vec3& ea, const Vec3& eb) {
    const Vec3 e = (eb - ea).normalized();
    const Vec3 toward = f.centroid() - ea;
    const Vec3 perp = toward - e * toward.dot(e);
    return perp.normalized();
}

Wedge make_wedge(std::int32_t f0, std::int32_t f1, const Facet& face0, const Vec3& ea,
                 const Vec3& eb, double exterior_angle) {
    Wedge w;
    w.face_0 = f0;
    w.face_1 = f1;
    w.exterior_angle = exterior_angle;
    w.n_param = exterior_angle / kPi;
    w.face0_dir = into_face_dir(face0, ea, eb);
    w.face0_normal = face0.normal;
    w.edge_dir = w.face0_dir.cross(w.face0_normal);
    if ((eb - ea).dot(w.edge_dir) >= 0.0) {
        w.edge_a = ea;
        w.edge_b = eb;
    } else {
        w.edge_a = eb;
        w.edge_b = ea;
    }
    return w;
}

} // namespace

std::vector<Wedge> extract_wedges(const std::vector<Facet>& facets) {
    using VKey = std::array<std::int64_t, 3>;
    using EKey = std::pair<VKey, VKey>;
    std::map<EKey, std::vector<EdgeRef>> edges;

    for (std::size_t fi = 0; fi < facets.size(); ++fi) {
        const auto& vs = facets[fi].vertices;
        for (std::size_t i = 0; i < vs.size(); ++i) {
            const Vec3& a = vs[i];
            const Vec3& b = vs[(i + 1) % vs.size()];
            VKey ka = vertex_key(a);
            VKey kb = vertex_key(b);
            if (ka == kb) continue; // collapsed edge after welding
            EKey key = ka < kb ? EKey{ka, kb} : EKey{kb, ka};
            edges[key].push_back({static_cast<std::int32_t>(fi), a, b});
        }
    }

    std::vector<Wedge> wedges;
    for (const auto& [key, refs] : edges) {
        if (refs.size() > 2) {
            std::ostringstream os;
            os << "non-manifold edge shared by " << refs.size() << " facets near ("
               << refs[0].a.x << ", " << refs[0].a.y << ", " << refs[0].a.z << ")-("
               << refs[0].b.x << ", " << refs[0].b.y << ", " << refs[0].b.z << ")";
            throw std::invalid_argument(os.str());
        }
        if (refs.size() == 1) {
            // free boundary: half-plane wedge
            const EdgeRef& r = refs[0];
            wedges.push_back(make_wedge(r.facet, r.facet, facets[r.facet], r.a, r.b, 2.0 * kPi));
            continue;
        }
        // shared edge: exterior (air-side) dihedral angle
        const EdgeRef& r0 = refs[0].facet <= refs[1].facet ? refs[0] : refs[1];
        const EdgeRef& r1 = refs[0].facet <= refs[1].facet ? refs[1] : refs[0];
        const Facet& fa = facets[r0.facet];
        const Facet& fb = facets[r1.facet];
        const Vec3 ua = into_face_dir(fa, r0.a, r0.b);
        const Vec3 ub = into_face_dir(fb, r0.a, r0.b);
        double beta = std::atan2(ub.dot(fa.normal), ub.dot(ua));
        const double exterior = beta <= 0.0 ? beta + 2.0 * kPi : beta;
        if (std::abs(exterior - kPi) <= kCoplanarTol) continue; // flat join
        if (exterior < kPi) continue;                           // concave, no diffraction
        wedges.push_back(make_wedge(r0.facet, r1.facet, fa, r0.a, r0.b, exterior));
    }
    return wedges;
}

} // namespace factray::geom
