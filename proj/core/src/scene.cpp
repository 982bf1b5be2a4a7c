#include "factray/geom/scene.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "bvh.hpp"

namespace factray::geom {

Scene::Scene(Scene&&) noexcept = default;
Scene& Scene::operator=(Scene&&) noexcept = default;
Scene::~Scene() = default;

Vec3 mirror_point(const Vec3& p, const Vec3& plane_point, const Vec3& unit_normal) {
    const double d = unit_normal.dot(p - plane_point);
    return p - unit_normal * (2.0 * d);
}

Vec3 mirror_point(const Vec3& p, const Facet& facet) {
    return mirror_point(p, facet.vertices[0], facet.normal);
}

bool point_in_facet(const Facet& f, const Vec3& p, double tol) {
    const auto& vs = f.vertices;
    const std::size_t n = vs.size();
    for (std::size_t i = 0; i < n; ++i) {
        const Vec3 edge = vs[(i + 1) % n] - vs[i];
        // inward side of each edge for CCW order w.r.t. the normal
        const Vec3 inward = f.normal.cross(edge);
        if (inward.dot(p - vs[i]) < -tol * edge.norm()) return false;
    }
    return true;
}

bool segment_facet_hit(const Facet& f, std::int32_t facet_id, const Vec3& a, const Vec3& dir,
                       double seg_len, Hit& out) {
    const double denom = f.normal.dot(dir);
    const double da = f.normal.dot(f.vertices[0] - a);
    if (std::abs(denom) < 1e-300) return false; // parallel (tangent case excluded)
    const double t = da / denom;                // meters along the segment
    if (t <= kEndpointTol || t >= seg_len - kEndpointTol) return false;
    const Vec3 p = a + dir * t;
    if (!point_in_facet(f, p)) return false;
    out.facet_id = facet_id;
    out.point = p;
    out.distance = t;
    out.entering = denom < 0.0;
    return true;
}

namespace {

void validate_facet(const Facet& f, std::size_t index) {
    const auto fail = [index](const std::string& why) {
        throw std::invalid_argument("facet " + std::to_string(index) + ": " + why);
    };
    if (f.vertices.size() < 3) fail("fewer than 3 vertices");
    for (const auto& v : f.vertices)
        if (!v.finite()) fail("non-finite vertex");
    // normal from the vertex loop (Newell), compared against the stored one
    Vec3 nw{0, 0, 0};
    const std::size_t n = f.vertices.size();
    for (std::size_t i = 0; i < n; ++i) {
        const Vec3& u = f.vertices[i];
        const Vec3& v = f.vertices[(i + 1) % n];
        nw.x += (u.y - v.y) * (u.z + v.z);
        nw.y += (u.z - v.z) * (u.x + v.x);
        nw.z += (u.x - v.x) * (u.y + v.y);
    }
    if (nw.norm() < 1e-12) fail("collinear or degenerate vertices");
    if (std::abs(f.normal.norm() - 1.0) > 1e-9) fail("normal is not unit length");
    if (f.normal.dot(nw.normalized()) < 1.0 - 1e-6) fail("normal disagrees with vertex winding");
    for (const auto& v : f.vertices)
        if (std::abs(f.normal.dot(v - f.vertices[0])) > kWeldTol) fail("vertices not coplanar");
    // convexity: every corner must turn the same way
    for (std::size_t i = 0; i < n; ++i) {
        const Vec3 e0 = f.vertices[(i + 1) % n] - f.vertices[i];
        const Vec3 e1 = f.vertices[(i + 2) % n] - f.vertices[(i + 1) % n];
        if (e0.norm() < 1e-12) fail("repeated vertex");
        if (f.normal.dot(e0.cross(e1)) < -1e-9 * e0.norm() * e1.norm()) fail("polygon not convex");
    }
    if (f.thickness < 0.0) fail("negative thickness");
}

} // namespace

Scene build_scene(std::vector<Facet> facets) {
    if (facets.empty()) throw std::invalid_argument("facet list is empty");
    for (std::size_t i = 0; i < facets.size(); ++i) validate_facet(facets[i], i);

    Scene s;
    s.facets_ = std::move(facets);
    for (const auto& f : s.facets_)
        for (const auto& v : f.vertices) s.bounds_.expand(v);
    s.wedges_ = extract_wedges(s.facets_);
    s.accel_ = std::make_unique<Bvh>(s.facets_);
    return s;
}

std::vector<Hit> Scene::intersect_segment(const Vec3& a, const Vec3& b) const {
    std::vector<Hit> hits;
    if (facets_.empty()) return hits;
    const Vec3 d = b - a;
    const double len = d.norm();
    if (len <= 0.0) throw std::invalid_argument("intersect_segment: a == b");
    const Vec3 dir = d / len;

    thread_local std::vector<std::int32_t> candidates;
    candidates.clear();
    accel_->collect_segment_candidates(a, d, candidates);
    std::sort(candidates.begin(), candidates.end()); // index order == linear scan order

    Hit h;
    for (std::int32_t id : candidates)
        if (segment_facet_hit(facets_[id], id, a, dir, len, h)) hits.push_back(h);
    std::stable_sort(hits.begin(), hits.end(),
                     [](const Hit& x, const Hit& y) { return x.distance < y.distance; });
    return hits;
}

bool Scene::segment_blocked(const Vec3& a, const Vec3& b) const {
    if (facets_.empty()) return false;
    const Vec3 d = b - a;
    const double len = d.norm();
    if (len <= 0.0) return false;
    const Vec3 dir = d / len;
    thread_local std::vector<std::int32_t> candidates;
    candidates.clear();
    accel_->collect_segment_candidates(a, d, candidates);
    Hit h;
    for (std::int32_t id : candidates)
        if (segment_facet_hit(facets_[id], id, a, dir, len, h)) return true;
    return false;
}

std::vector<Hit> Scene::intersect_segment_linear(const Vec3& a, const Vec3& b) const {
    std::vector<Hit> hits;
    const Vec3 d = b - a;
    const double len = d.norm();
    if (len <= 0.0) throw std::invalid_argument("intersect_segment: a == b");
    const Vec3 dir = d / len;
    Hit h;
    for (std::size_t id = 0; id < facets_.size(); ++id)
        if (segment_facet_hit(facets_[id], static_cast<std::int32_t>(id), a, dir, len, h))
            hits.push_back(h);
    std::stable_sort(hits.begin(), hits.end(),
                     [](const Hit& x, const Hit& y) { return x.distance < y.distance; });
    return hits;
}

} // namespace factray::geom
