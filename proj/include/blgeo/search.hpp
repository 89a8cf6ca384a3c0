#pragma once

// Random exploration of the reverse Brascamp-Lieb volume ratio |K| / rhs.

#include "blgeo/certify.hpp"
#include "blgeo/datum.hpp"
#include "blgeo/verify.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace blgeo {

struct SearchHit {
    std::size_t trial = 0;
    VPolytope body;
    InequalityReport report;
    std::optional<EqualityCertificate> certificate;  // for exact equalities
};

struct SearchResult {
    std::size_t trials = 0;
    std::vector<SearchHit> best;  // smallest ratios first
    std::size_t exact_equalities = 0;
    std::size_t violations = 0;
};

/// The body of one trial: every eighth trial is an axis body conv{a_i e_i, -b_i e_i},
/// the rest are random_body with 1 to 6 extra points and delta = 1/4.
VPolytope search_body(std::size_t n, std::uint64_t seed, std::size_t trial);

/// Keeps the `keep` smallest ratios, ordered by interval midpoint and then trial.
/// Exact equalities are certified. Throws std::invalid_argument for an invalid datum.
SearchResult liakopoulos_search(const BLDatum& d, std::size_t trials, std::uint64_t seed, std::size_t keep = 10,
                                Execution exec = Execution::parallel);

}  // namespace blgeo
