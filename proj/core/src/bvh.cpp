#include "bvh.hpp"

#include <algorithm>
#include <numeric>

namespace factray::geom {

namespace {
constexpr std::int32_t kLeafSize = 4;
constexpr double kBoxSlack = 1e-9; // keeps on-boundary crossings inside candidate sets
} // namespace

Bvh::Bvh(const std::vector<Facet>& facets) {
    const auto n = static_cast<std::int32_t>(facets.size());
    items_.resize(n);
    std::iota(items_.begin(), items_.end(), 0);
    std::vector<Aabb> boxes(n);
    std::vector<Vec3> centers(n);
    for (std::int32_t i = 0; i < n; ++i) {
        boxes[i] = facets[i].bounds();
        centers[i] = boxes[i].center();
    }
    nodes_.reserve(static_cast<std::size_t>(n) * 2 + 1);
    if (n > 0) root_ = build(0, n, boxes, centers);
}

std::int32_t Bvh::build(std::int32_t begin, std::int32_t end,
                        std::vector<Aabb>& boxes, std::vector<Vec3>& centers) {
    Node node;
    for (std::int32_t i = begin; i < end; ++i) node.box.expand(boxes[items_[i]]);
    node.box.lo -= Vec3{kBoxSlack, kBoxSlack, kBoxSlack};
    node.box.hi += Vec3{kBoxSlack, kBoxSlack, kBoxSlack};

    const std::int32_t count = end - begin;
    if (count <= kLeafSize) {
        node.left = begin;
        node.count = count;
        nodes_.push_back(node);
        return static_cast<std::int32_t>(nodes_.size()) - 1;
    }

    const Vec3 ext = node.box.extent();
    int axis = 0;
    if (ext.y > ext.x) axis = 1;
    if (ext.z > (axis == 0 ? ext.x : ext.y)) axis = 2;
    const std::int32_t mid = begin + count / 2;
    std::nth_element(items_.begin() + begin, items_.begin() + mid, items_.begin() + end,
                     [&](std::int32_t a, std::int32_t b) {
                         const double ca = axis == 0 ? centers[a].x : axis == 1 ? centers[a].y : centers[a].z;
                         const double cb = axis == 0 ? centers[b].x : axis == 1 ? centers[b].y : centers[b].z;
                         if (ca != cb) return ca < cb;
                         return a < b; // deterministic order for ties
                     });

    const std::int32_t self = static_cast<std::int32_t>(nodes_.size());
    nodes_.push_back(node);
    const std::int32_t l = build(begin, mid, boxes, centers);
    const std::int32_t r = build(mid, end, boxes, centers);
    nodes_[self].left = l;
    nodes_[self].right = r;
    return self;
}

void Bvh::collect_segment_candidates(const Vec3& a, const Vec3& d,
                                     std::vector<std::int32_t>& out) const {
    if (root_ < 0) return;
    std::int32_t stack[64];
    int top = 0;
    stack[top++] = root_;
    while (top > 0) {
        const Node& node = nodes_[stack[--top]];
        if (!node.box.intersects_segment(a, d)) continue;
        if (node.count > 0) {
            for (std::int32_t i = 0; i < node.count; ++i) out.push_back(items_[node.left + i]);
        } else {
            stack[top++] = node.left;
            stack[top++] = node.right;
        }
    }
}

} // namespace factray::geom
