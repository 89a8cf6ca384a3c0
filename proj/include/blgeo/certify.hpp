#pragma once

// Equality characterizations: Bollobas-Thomason (K is the direct sum of its
// projections onto the induced partition) and the reverse Brascamp-Lieb
// volume inequality (K is the convex hull of its sections by the independent
// subspaces, which must span).

#include "blgeo/cover.hpp"
#include "blgeo/datum.hpp"
#include "blgeo/polytope.hpp"
#include "blgeo/verify.hpp"

#include <optional>
#include <string>
#include <vector>

namespace blgeo {

enum class Verdict { equality, strict };

struct EqualityCertificate {
    Verdict verdict = Verdict::strict;
    std::string reason;
    std::vector<Subspace> independent;
    bool spanning = false;
    std::optional<VPolytope> reconstruction;
    Rational volume_k;
    Rational volume_reconstruction;
    std::vector<std::string> witnesses;
};

/// Throws std::invalid_argument for an invalid cover or a dimension mismatch,
/// NotFullDimensional for a degenerate body, and std::logic_error if the
/// verdict contradicts the verifier's exact equality channel.
EqualityCertificate certify_bt_equality(const VPolytope& k, const UniformCover& cover);

/// Throws OriginNotInterior, std::invalid_argument for an invalid datum, and
/// std::logic_error on disagreement with the verifier's exact channel.
EqualityCertificate certify_liakopoulos_equality(const HPolytope& k, const BLDatum& d);

struct AdditivityFailure {
    Vector point;
    Rational gauge;
    Rational split_sum;
};

struct NormAdditivityReport {
    std::size_t subspace_points = 0;
    std::size_t subspace_failures = 0;
    std::size_t ambient_points = 0;
    std::size_t ambient_failures = 0;
    std::vector<AdditivityFailure> failures;  // first few, in sample order
    bool all_pass() const { return subspace_failures == 0 && ambient_failures == 0; }
};

/// On each E_i (random points plus the section vertices) tests
/// ||x||_K = sum_j ||P_{F_j} x||_K, and on random ambient z tests
/// ||z||_M = sum_j ||P_{F_j} z||_K for M = conv_j (K ∩ F_j).
/// Throws std::invalid_argument when the independent subspaces do not span.
NormAdditivityReport check_norm_additivity(const HPolytope& k, const BLDatum& d, std::size_t samples,
                                           std::uint64_t seed, Execution exec = Execution::parallel);

struct InfDecompositionReport {
    std::vector<Vector> points;
    std::vector<Rational> gaps;  // inf_{z = sum y_i} sum ||y_i||_K - ||z||_K, always >= 0
    Rational max_gap;
    bool all_zero() const { return max_gap == 0; }
};

Rational inf_decomposition_gap(const HPolytope& k, const BLDatum& d, const Vector& z);

InfDecompositionReport check_inf_decomposition_equality(const HPolytope& k, const BLDatum& d, std::size_t samples,
                                                        std::uint64_t seed, Execution exec = Execution::parallel);

/// Random point with coordinates p/q, |p|, q <= 1000.
Vector random_rational_point(std::size_t n, std::uint64_t seed, std::uint64_t index);

const char* to_string(Verdict verdict);

}  // namespace blgeo
