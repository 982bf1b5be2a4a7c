#pragma once

#include <cstdint>
#include <memory>
#include <vector>

#include "factray/geom/aabb.hpp"
#include "factray/geom/facet.hpp"
#include "factray/geom/wedge.hpp"

namespace factray::geom {

// Tolerances, meters. On-surface endpoint exclusion is deliberately tighter
// than coplanarity/vertex welding.
inline constexpr double kEndpointTol = 1e-9;
inline constexpr double kWeldTol = 1e-6;

/// Segment/facet crossing.
struct Hit {
    std::int32_t facet_id = -1;
    Vec3 point;
    double distance = 0.0; // m along the segment from its start
    bool entering = false; // segment direction runs against the facet normal
};

class Bvh; // spatial index over facets, equivalence with linear scan is contractual

/// Immutable facet soup with extracted wedges and a spatial index.
/// Safe for concurrent reads once built.
class Scene {
  public:
    Scene() = default;
    Scene(Scene&&) noexcept;
    Scene& operator=(Scene&&) noexcept;
    ~Scene();

    const std::vector<Facet>& facets() const { return facets_; }
    const std::vector<Wedge>& wedges() const { return wedges_; }
    const Aabb& bounds() const { return bounds_; }
    bool empty() const { return facets_.empty(); }

    /// All facets whose interior the open segment (a, b) crosses, sorted by
    /// ascending distance from a. Endpoints on a facet (within kEndpointTol)
    /// and segments lying in a facet's plane are excluded.
    std::vector<Hit> intersect_segment(const Vec3& a, const Vec3& b) const;

    /// True if any hit on (a, b) exists; cheaper than building the full list.
    bool segment_blocked(const Vec3& a, const Vec3& b) const;

    /// Reference implementation of intersect_segment without the index.
    std::vector<Hit> intersect_segment_linear(const Vec3& a, const Vec3& b) const;

    friend Scene build_scene(std::vector<Facet> facets);

  private:
    std::vector<Facet> facets_;
    std::vector<Wedge> wedges_;
    Aabb bounds_;
    std::unique_ptr<Bvh> accel_;
};

/// Validate facets, extract wedges, build the index. Facet order is preserved.
/// Throws std::invalid_argument naming the offending facet on degenerate input
/// (collinear vertices, non-planar, non-convex) and on non-manifold edges.
Scene build_scene(std::vector<Facet> facets);

/// One wedge per non-coplanar shared edge plus a half-plane wedge (n = 2) per
/// unshared boundary edge. Concave edges (air angle < pi) yield no wedge.
/// Throws on edges shared by more than two facets.
std::vector<Wedge> extract_wedges(const std::vector<Facet>& facets);

/// Reflection of p across the facet's supporting plane.
Vec3 mirror_point(const Vec3& p, const Facet& facet);
Vec3 mirror_point(const Vec3& p, const Vec3& plane_point, const Vec3& unit_normal);

/// Single segment/facet test used by both the index and the linear scan.
bool segment_facet_hit(const Facet& f, std::int32_t facet_id, const Vec3& a, const Vec3& dir,
                       double seg_len, Hit& out);

/// Point-in-convex-polygon test in the facet plane, edge-inclusive within tol.
bool point_in_facet(const Facet& f, const Vec3& p, double tol = 1e-9);

} // namespace factray::geom
