#pragma once

// Exact convex polytopes in R^n for small n.
//
// Vertex enumeration is done once, by the double description method; the
// facet description of a point set is obtained from it by polarity around the
// vertex centroid. Volumes come from a fan triangulation from the centroid
// over recursively pulled boundary faces.

#include "blgeo/execution.hpp"
#include "blgeo/measure.hpp"
#include "blgeo/rational.hpp"
#include "blgeo/subspace.hpp"

#include <utility>
#include <vector>

namespace blgeo {

inline constexpr std::size_t kMaxDimension = 6;
inline constexpr std::size_t kMaxHullInput = 4096;
inline constexpr std::size_t kMaxMinkowskiTuples = 1'000'000;

/// <normal, x> <= offset
struct Halfspace {
    Vector normal;
    Rational offset;

    friend bool operator==(const Halfspace&, const Halfspace&) = default;
};

class HPolytope {
public:
    /// Checks shape, non-emptiness, and boundedness (an LP in every +-e_i
    /// direction). Throws EmptyPolytope, UnboundedPolytope, GuardExceeded or
    /// std::invalid_argument.
    static HPolytope create(std::size_t dim, std::vector<Halfspace> inequalities);

    std::size_t dim() const { return dim_; }
    const std::vector<Halfspace>& inequalities() const { return inequalities_; }

    bool contains(const Vector& x) const;
    /// All offsets strictly positive.
    bool has_origin_in_interior() const;

    friend bool operator==(const HPolytope&, const HPolytope&) = default;

private:
    HPolytope(std::size_t dim, std::vector<Halfspace> inequalities) : dim_(dim), inequalities_(std::move(inequalities)) {}
    friend HPolytope make_hpolytope_unchecked(std::size_t, std::vector<Halfspace>);

    std::size_t dim_ = 0;
    std::vector<Halfspace> inequalities_;
};

class VPolytope {
public:
    /// Convex hull of the points: duplicates and non-extreme points removed,
    /// vertices sorted lexicographically. Works for any affine dimension.
    static VPolytope hull(std::size_t dim, std::vector<Vector> points);

    std::size_t dim() const { return dim_; }
    const std::vector<Vector>& vertices() const { return vertices_; }
    std::size_t affine_dimension() const;
    Vector centroid() const;

    friend bool operator==(const VPolytope&, const VPolytope&) = default;

private:
    VPolytope(std::size_t dim, std::vector<Vector> vertices) : dim_(dim), vertices_(std::move(vertices)) {}

    std::size_t dim_ = 0;
    std::vector<Vector> vertices_;
};

VPolytope vertices_of(const HPolytope& h);

/// Irredundant facets, each scaled to a primitive integer normal, sorted.
/// Throws NotFullDimensional for lower-dimensional input.
HPolytope facets_of(const VPolytope& v);

Rational volume(const VPolytope& p, Execution exec = Execution::parallel);
Rational volume(const HPolytope& p, Execution exec = Execution::parallel);

struct SectionResult {
    HPolytope coords;  // in the basis coordinates of the subspace
    MeasureValue measure;
};

/// K ∩ E with x = B t. Requires the origin in the interior of K and dim E >= 1.
SectionResult section(const HPolytope& p, const Subspace& e);

struct ProjectionResult {
    VPolytope coords;
    MeasureValue measure;
};

ProjectionResult project(const VPolytope& p, const Subspace& e);

/// Minkowski functional max(0, max_i <a_i, x> / b_i). Throws OriginNotInterior.
Rational gauge(const HPolytope& p, const Vector& x);
Rational gauge(const VPolytope& p, const Vector& x);

/// Gauge of x in E computed inside the section K ∩ E. Throws
/// std::invalid_argument when x is not in E.
Rational gauge_restricted(const HPolytope& p, const Subspace& e, const Vector& x);

using MinkowskiTerm = std::pair<Rational, VPolytope>;

/// sum_i c_i P_i for positive c_i. Throws GuardExceeded beyond kMaxMinkowskiTuples.
VPolytope minkowski_combination(const std::vector<MinkowskiTerm>& terms, Execution exec = Execution::parallel);

/// conv of the sections K ∩ F_j for pairwise orthogonal F_j spanning R^n.
VPolytope conv_of_sections(const HPolytope& p, const std::vector<Subspace>& parts);

/// sum_j P_{F_j} K for pairwise orthogonal F_j spanning R^n.
VPolytope direct_sum_of_projections(const VPolytope& p, const std::vector<Subspace>& parts,
                                    Execution exec = Execution::parallel);

VPolytope translated(const VPolytope& p, const Vector& offset);
VPolytope dilated(const VPolytope& p, const Rational& factor);

/// prod_i [lo_i, hi_i]
VPolytope make_box(const Vector& lo, const Vector& hi);
/// conv{±lambda_i e_i}
VPolytope make_cross_polytope(const Vector& lambdas);
/// conv{0, e_1, ..., e_n}
VPolytope make_standard_simplex(std::size_t n);

}  // namespace blgeo
