#pragma once

#include <cstdint>
#include <vector>

#include "factray/geom/aabb.hpp"
#include "factray/geom/facet.hpp"

namespace factray::geom {

/// Binary hierarchy of axis-aligned bounds over facets, median split on the
/// widest axis. Purely an optimization: query results must match a linear scan.
class Bvh {
  public:
    explicit Bvh(const std::vector<Facet>& facets);

    /// Append indices of facets whose AABB the segment a -> a+d may touch.
    void collect_segment_candidates(const Vec3& a, const Vec3& d,
                                    std::vector<std::int32_t>& out) const;

  private:
    struct Node {
        Aabb box;
        std::int32_t left = -1;   // internal: child index; leaf: first item
        std::int32_t right = -1;  // internal: child index; leaf: -1
        std::int32_t count = 0;   // leaf: number of items, internal: 0
    };

    std::int32_t build(std::int32_t begin, std::int32_t end,
                       std::vector<Aabb>& boxes, std::vector<Vec3>& centers);

    std::vector<Node> nodes_;
    std::vector<std::int32_t> items_;
    std::int32_t root_ = -1;
};

} // namespace factray::geom
