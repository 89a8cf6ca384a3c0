#pragma once

// Seeded random inputs: covers, data, and bodies with the origin inside.

#include "blgeo/cover.hpp"
#include "blgeo/datum.hpp"
#include "blgeo/matrix.hpp"
#include "blgeo/polytope.hpp"
#include "blgeo/random.hpp"

namespace blgeo {

/// An s-uniform cover of [n] with between s+1 and s+4 sets (n >= 2, s >= 1).
UniformCover random_uniform_cover(std::size_t n, std::size_t s, CounterRng& rng);

/// Rational orthogonal matrix by the Cayley transform of a random skew matrix.
Matrix random_orthogonal(std::size_t n, CounterRng& rng);

/// Q E_i with the same weights; the projection identity is preserved.
BLDatum rotated(const BLDatum& d, const Matrix& q);

/// Either a rotated cover datum or a rotated LW datum.
BLDatum random_datum(std::size_t n, CounterRng& rng);

/// conv of `count` random points with coordinates in [-2, 2] together with
/// +-delta e_i, so the origin is interior.
VPolytope random_body(std::size_t n, std::size_t count, CounterRng& rng, const Rational& delta = Rational(1, 4));

/// Full-dimensional simplex with random rational vertices in [-3, 3]^n.
VPolytope random_simplex(std::size_t n, CounterRng& rng);

/// Box with random rational corners; lo < hi coordinatewise.
VPolytope random_box(std::size_t n, CounterRng& rng);

/// Weights in [1/10, 10].
Vector random_lambdas(std::size_t n, CounterRng& rng);

}  // namespace blgeo
