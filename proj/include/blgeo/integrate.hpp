#pragma once

// Monte Carlo checks by rejection sampling from the exact bounding box.
// Sums are accumulated in fixed blocks in index order, so serial and parallel
// runs return identical doubles for the same seed.

#include "blgeo/execution.hpp"
#include "blgeo/polytope.hpp"

#include <cstdint>
#include <vector>

namespace blgeo {

inline constexpr std::size_t kMinSamples = 1000;
inline constexpr std::size_t kSumBlock = 4096;

struct BoundingBox {
    Vector lo;
    Vector hi;
    Rational volume() const;
};

BoundingBox bounding_box(const VPolytope& p);

struct UniformSample {
    std::vector<std::vector<double>> points;  // accepted draws, in draw order
    std::size_t draws = 0;
    double acceptance = 0;
    double acceptance_std_error = 0;
    Rational box_volume;
};

/// Draws `draws` points uniformly from the bounding box and keeps those in K.
UniformSample mc_uniform_in(const HPolytope& k, std::size_t draws, std::uint64_t seed,
                            Execution exec = Execution::parallel);

struct MonteCarloEstimate {
    double estimate = 0;
    double std_error = 0;
    std::size_t samples = 0;
    Rational exact;  // the value being estimated
};

/// Hit rate times box volume.
MonteCarloEstimate mc_volume(const HPolytope& k, std::size_t samples, std::uint64_t seed,
                             Execution exec = Execution::parallel);

struct ExpGaugeEstimate : MonteCarloEstimate {
    double truncation = 0;  // T, samples come from T K
    double tail_bound = 0;  // mass of e^{-p||x||} outside T K
};

/// Estimates the integral of e^{-p ||x||_K} over R^n, whose exact value is n! |K| / p^n.
/// Throws OriginNotInterior, or std::invalid_argument for p <= 0 or fewer than kMinSamples samples.
ExpGaugeEstimate mc_exp_gauge(const HPolytope& k, const Rational& p, std::size_t samples, std::uint64_t seed,
                              Execution exec = Execution::parallel);

}  // namespace blgeo
