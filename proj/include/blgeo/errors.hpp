#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace blgeo {

class GeometryError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class UnboundedPolytope : public GeometryError {
public:
    UnboundedPolytope() : GeometryError("polytope is unbounded") {}
};

class EmptyPolytope : public GeometryError {
public:
    EmptyPolytope() : GeometryError("polytope is empty") {}
};

class NotFullDimensional : public GeometryError {
public:
    NotFullDimensional(std::size_t affine_dim, std::size_t ambient_dim)
        : GeometryError("point set is not full-dimensional: affine hull has dimension " + std::to_string(affine_dim) +
                        " in R^" + std::to_string(ambient_dim)),
          affine_dim_(affine_dim)
    {
    }
    std::size_t affine_dim() const { return affine_dim_; }

private:
    std::size_t affine_dim_;
};

class OriginNotInterior : public GeometryError {
public:
    OriginNotInterior() : GeometryError("origin is not an interior point of the polytope") {}
};

/// Input exceeds the desk-scale limits (dimension, element counts, tuple products).
class GuardExceeded : public GeometryError {
public:
    using GeometryError::GeometryError;
};

}  // namespace blgeo
