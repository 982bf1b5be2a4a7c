#pragma once

#include <algorithm>
#include <limits>

#include "factray/geom/vec3.hpp"

namespace factray::geom {

/// Axis-aligned bounding box.
struct Aabb {
    Vec3 lo{std::numeric_limits<double>::infinity(),
            std::numeric_limits<double>::infinity(),
            std::numeric_limits<double>::infinity()};
    Vec3 hi{-std::numeric_limits<double>::infinity(),
            -std::numeric_limits<double>::infinity(),
            -std::numeric_limits<double>::infinity()};

    void expand(const Vec3& p) {
        lo.x = std::min(lo.x, p.x); lo.y = std::min(lo.y, p.y); lo.z = std::min(lo.z, p.z);
        hi.x = std::max(hi.x, p.x); hi.y = std::max(hi.y, p.y); hi.z = std::max(hi.z, p.z);
    }
    void expand(const Aabb& b) {
        expand(b.lo);
        expand(b.hi);
    }
    bool valid() const { return lo.x <= hi.x && lo.y <= hi.y && lo.z <= hi.z; }
    bool contains(const Vec3& p, double tol = 0.0) const {
        return p.x >= lo.x - tol && p.x <= hi.x + tol &&
               p.y >= lo.y - tol && p.y <= hi.y + tol &&
               p.z >= lo.z - tol && p.z <= hi.z + tol;
    }
    Vec3 center() const { return (lo + hi) * 0.5; }
    Vec3 extent() const { return hi - lo; }

    /// Slab test against the segment a + t*(b-a), t in [0,1]. Conservative.
    bool intersects_segment(const Vec3& a, const Vec3& d, double tol = 1e-12) const {
        double t0 = 0.0, t1 = 1.0;
        const double* lop = &lo.x;
        const double* hip = &hi.x;
        const double* ap = &a.x;
        const double* dp = &d.x;
        for (int i = 0; i < 3; ++i) {
            if (std::abs(dp[i]) < 1e-300) {
                if (ap[i] < lop[i] - tol || ap[i] > hip[i] + tol) return false;
            } else {
                double inv = 1.0 / dp[i];
                double ta = (lop[i] - tol - ap[i]) * inv;
                double tb = (hip[i] + tol - ap[i]) * inv;
                if (ta > tb) std::swap(ta, tb);
                t0 = std::max(t0, ta);
                t1 = std::min(t1, tb);
                if (t0 > t1) return false;
            }
        }
        return true;
    }
};

} // namespace factray::geom
