#pragma once

// s-uniform covers of [n] = {1, ..., n}. Elements are 0-based in memory and
// 1-based in all text and JSON.

#include "blgeo/datum.hpp"
#include "blgeo/subspace.hpp"

#include <string>
#include <vector>

namespace blgeo {

using IndexSet = std::vector<std::size_t>;  // sorted, 0-based

struct UniformCover {
    std::size_t n = 0;
    std::size_t s = 0;
    std::vector<IndexSet> sets;
};

struct CoverValidation {
    bool valid = false;
    std::vector<std::size_t> multiplicity;  // per element of [n]
    std::string reason;                     // empty when valid
};

CoverValidation validate_cover(const UniformCover& c);

/// Blocks of the partition of [n] induced by the cover, by iterative
/// refinement; blocks are sorted by their smallest element.
std::vector<IndexSet> induced_partition(const UniformCover& c);

/// lin{e_i : i in sigma}. Throws std::invalid_argument for an empty or out-of-range sigma.
Subspace coordinate_subspace(std::size_t n, const IndexSet& sigma);

/// E_i = E_{sigma_i}, c_i = 1/s. Throws std::invalid_argument for an invalid cover.
BLDatum datum_from_cover(const UniformCover& c);

/// sigma_i = [n] \ {i}, s = n - 1.
UniformCover loomis_whitney_cover(std::size_t n);

}  // namespace blgeo
