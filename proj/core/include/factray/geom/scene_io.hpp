#pragma once

#include <string>

#include "factray/geom/scene.hpp"

namespace factray::geom {

/// Scene file schema:
///   {"facets": [{"vertices": [[x,y,z], ...], "material": "<id>",
///                "thickness": <m, optional>, "solid": <int, optional>}]}
/// Units are meters. Facet normals follow the vertex winding (right-hand rule).
/// Loading applies build_scene, so all facet invariants are enforced.
Scene load_scene_json(const std::string& text);
Scene load_scene_file(const std::string& path);

/// Deterministic serialization: identical scenes produce identical bytes.
std::string scene_to_json(const Scene& scene);
void save_scene_file(const Scene& scene, const std::string& path);

} // namespace factray::geom
