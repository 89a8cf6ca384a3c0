#pragma once

// Counter-based random numbers: every draw is a pure function of
// (seed, stream, counter), so parallel loops reproduce serial output bit for bit.

#include "blgeo/rational.hpp"

#include <cstdint>

namespace blgeo {

constexpr std::uint64_t splitmix64(std::uint64_t x)
{
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

class CounterRng {
public:
    CounterRng(std::uint64_t seed, std::uint64_t stream) : key_(splitmix64(seed ^ splitmix64(stream + 0x632be59bd9b4e019ULL))) {}

    /// Independent generator for a sub-stream (e.g. one per trial or sample).
    CounterRng split(std::uint64_t stream) const { return CounterRng(key_, stream); }

    std::uint64_t next() { return splitmix64(key_ + 0x9e3779b97f4a7c15ULL * ++counter_); }

    /// Uniform in [0, 1).
    double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    /// Uniform integer in [lo, hi].
    std::int64_t integer(std::int64_t lo, std::int64_t hi)
    {
        const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
        return lo + static_cast<std::int64_t>(next() % span);
    }

    /// Random rational p/q with |p| <= max_abs, 1 <= q <= max_den.
    Rational rational(std::int64_t max_abs = 1000, std::int64_t max_den = 1000)
    {
        Rational r(static_cast<long>(integer(-max_abs, max_abs)), static_cast<unsigned long>(integer(1, max_den)));
        r.canonicalize();
        return r;
    }

    /// Random rational in [lo, hi] on a grid of step (hi - lo) / resolution.
    Rational rational_between(const Rational& lo, const Rational& hi, std::int64_t resolution = 1000)
    {
        Rational step = (hi - lo) / Rational(static_cast<long>(resolution));
        return lo + step * Rational(static_cast<long>(integer(0, resolution)));
    }

private:
    std::uint64_t key_;
    std::uint64_t counter_ = 0;
};

}  // namespace blgeo
