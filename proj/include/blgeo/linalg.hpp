#pragma once

// Exact eliminations over the rationals.
//
// Echelon forms and determinants are computed by fraction-free (Bareiss)
// elimination on integer-scaled rows, so intermediate entries stay bounded
// by minors of the input rather than accumulating denominators.

#include "blgeo/matrix.hpp"

#include <optional>
#include <vector>

namespace blgeo {

struct RrefResult {
    Matrix reduced;
    std::vector<std::size_t> pivots;
    std::size_t rank = 0;
};

RrefResult rref(const Matrix& m);

std::size_t rank(const Matrix& m);

/// Exact basis of {x : m x = 0}; empty iff m has full column rank.
std::vector<Vector> kernel_basis(const Matrix& m);

/// Some exact solution of m x = b, or nullopt when b is outside the column space.
std::optional<Vector> solve(const Matrix& m, const Vector& b);

/// Throws std::invalid_argument for non-square input.
Rational determinant(const Matrix& m);

/// Throws std::domain_error when m is singular.
Matrix inverse(const Matrix& m);

/// Matrix of pairwise inner products of the given vectors.
Matrix gram(const std::vector<Vector>& basis);

/// Indices of a maximal linearly independent subset, chosen greedily in order.
std::vector<std::size_t> independent_subset(const std::vector<Vector>& vectors, std::size_t length);

}  // namespace blgeo
