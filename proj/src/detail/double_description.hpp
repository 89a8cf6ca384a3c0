#pragma once

#include "blgeo/rational.hpp"

#include <vector>

namespace blgeo::detail {

struct VertexEnumeration {
    std::vector<Vector> vertices;   // lexicographically sorted
    std::size_t recession_rays = 0; // > 0 means the region is unbounded
};

/// Extreme points of {x in R^dim : <normals[i], x> <= offsets[i]} by the double
/// description method on the homogenized cone {(x, t) : <a, x> <= b t, t >= 0}.
/// Throws UnboundedPolytope when the constraint normals do not span R^dim.
VertexEnumeration enumerate_vertices(const std::vector<Vector>& normals, const Vector& offsets, std::size_t dim);

}  // namespace blgeo::detail
