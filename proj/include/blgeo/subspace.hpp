#pragma once

#include "blgeo/matrix.hpp"

#include <vector>

namespace blgeo {

/// A linear subspace of R^n held by an exact (non-orthonormal) basis.
///
/// The orthogonal projection P = B (B^T B)^{-1} B^T is rational whenever B is,
/// and serves as the canonical form: two subspaces are equal iff their
/// projections are. The trivial subspace {0} has an empty basis and P = 0.
class Subspace {
public:
    /// Span of the given vectors; keeps a maximal independent subset as basis.
    /// Throws std::invalid_argument if some vector has the wrong length.
    static Subspace span(std::size_t ambient_dim, const std::vector<Vector>& spanning);
    static Subspace zero(std::size_t ambient_dim);
    static Subspace whole(std::size_t ambient_dim);

    std::size_t ambient_dim() const { return ambient_dim_; }
    std::size_t dim() const { return basis_.size(); }
    bool is_trivial() const { return basis_.empty(); }
    bool is_whole() const { return basis_.size() == ambient_dim_; }

    const std::vector<Vector>& basis() const { return basis_; }
    const Matrix& projection() const { return projection_; }

    Vector project(const Vector& x) const;
    /// Coordinates t with x = B t for the orthogonal projection of x.
    Vector coordinates(const Vector& x) const;
    /// B t.
    Vector lift(const Vector& t) const;
    /// det(B^T B); 1 for {0}.
    Rational gram_determinant() const { return gram_det_; }

    bool contains(const Vector& x) const;
    bool contains(const Subspace& other) const;

    friend bool operator==(const Subspace& a, const Subspace& b);

private:
    Subspace(std::size_t ambient_dim, std::vector<Vector> basis);

    std::size_t ambient_dim_ = 0;
    std::vector<Vector> basis_;
    Matrix projection_;
    Matrix coordinate_map_;  // (B^T B)^{-1} B^T, dim x n
    Rational gram_det_ = 1;
};

Subspace intersect(const Subspace& a, const Subspace& b);
Subspace orthogonal_complement(const Subspace& a);
Subspace sum(const Subspace& a, const Subspace& b);
bool equals(const Subspace& a, const Subspace& b);

/// True iff a and b are orthogonal (every pair of basis vectors has zero inner product).
bool are_orthogonal(const Subspace& a, const Subspace& b);

/// True iff the dimensions of the parts add up to n and together they span R^n.
bool is_direct_sum_decomposition(const std::vector<Subspace>& parts, std::size_t ambient_dim);

}  // namespace blgeo
