#include "blgeo/integrate.hpp"

#include "blgeo/errors.hpp"
#include "blgeo/random.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace blgeo {

namespace {

struct DoubleFacets {
    std::vector<std::vector<double>> a;
    std::vector<double> b;
};

DoubleFacets to_double(const HPolytope& k)
{
    DoubleFacets f;
    for (const auto& h : k.inequalities()) {
        std::vector<double> row;
        for (const auto& c : h.normal) row.push_back(c.get_d());
        f.a.push_back(std::move(row));
        f.b.push_back(h.offset.get_d());
    }
    return f;
}

bool inside(const DoubleFacets& f, const std::vector<double>& x)
{
    for (std::size_t m = 0; m < f.a.size(); ++m) {
        double s = 0;
        for (std::size_t j = 0; j < x.size(); ++j) s += f.a[m][j] * x[j];
        if (s > f.b[m]) return false;
    }
    return true;
}

// Requires all offsets positive.
double gauge_of(const DoubleFacets& f, const std::vector<double>& x)
{
    double g = 0;
    for (std::size_t m = 0; m < f.a.size(); ++m) {
        double s = 0;
        for (std::size_t j = 0; j < x.size(); ++j) s += f.a[m][j] * x[j];
        g = std::max(g, s / f.b[m]);
    }
    return g;
}

std::vector<double> draw(const std::vector<double>& lo, const std::vector<double>& hi, std::uint64_t seed,
                         std::size_t index)
{
    CounterRng rng = CounterRng(seed, 0).split(index);
    std::vector<double> x(lo.size());
    for (std::size_t j = 0; j < x.size(); ++j) x[j] = lo[j] + (hi[j] - lo[j]) * rng.uniform();
    return x;
}

struct Moments {
    double sum = 0;
    double sum_sq = 0;
};

// Evaluates f on indices [0, count) and sums per block, then across blocks in order.
template <class F>
Moments blocked_moments(std::size_t count, Execution exec, F f)
{
    const std::size_t blocks = (count + kSumBlock - 1) / kSumBlock;
    std::vector<Moments> partial(blocks);
#pragma omp parallel for schedule(static) if (exec == Execution::parallel)
    for (std::size_t b = 0; b < blocks; ++b) {
        Moments m;
        const std::size_t end = std::min(count, (b + 1) * kSumBlock);
        for (std::size_t i = b * kSumBlock; i < end; ++i) {
            const double v = f(i);
            m.sum += v;
            m.sum_sq += v * v;
        }
        partial[b] = m;
    }
    Moments total;
    for (const auto& m : partial) {
        total.sum += m.sum;
        total.sum_sq += m.sum_sq;
    }
    return total;
}

void mean_and_error(const Moments& m, std::size_t n, double& mean, double& err)
{
    mean = m.sum / static_cast<double>(n);
    const double var = std::max(0.0, m.sum_sq / static_cast<double>(n) - mean * mean);
    err = n > 1 ? std::sqrt(var / static_cast<double>(n - 1)) : 0.0;
}

std::vector<double> as_doubles(const Vector& v)
{
    std::vector<double> out;
    for (const auto& c : v) out.push_back(c.get_d());
    return out;
}

}  // namespace

Rational BoundingBox::volume() const
{
    Rational v = 1;
    for (std::size_t j = 0; j < lo.size(); ++j) v *= hi[j] - lo[j];
    return v;
}

BoundingBox bounding_box(const VPolytope& p)
{
    BoundingBox box{p.vertices().front(), p.vertices().front()};
    for (const auto& v : p.vertices())
        for (std::size_t j = 0; j < p.dim(); ++j) {
            if (v[j] < box.lo[j]) box.lo[j] = v[j];
            if (v[j] > box.hi[j]) box.hi[j] = v[j];
        }
    return box;
}

UniformSample mc_uniform_in(const HPolytope& k, std::size_t draws, std::uint64_t seed, Execution exec)
{
    const BoundingBox box = bounding_box(vertices_of(k));
    const auto lo = as_doubles(box.lo), hi = as_doubles(box.hi);
    const DoubleFacets f = to_double(k);

    std::vector<char> hit(draws);
    std::vector<std::vector<double>> pts(draws);
#pragma omp parallel for schedule(static) if (exec == Execution::parallel)
    for (std::size_t i = 0; i < draws; ++i) {
        pts[i] = draw(lo, hi, seed, i);
        hit[i] = inside(f, pts[i]);
    }
    UniformSample s;
    s.draws = draws;
    s.box_volume = box.volume();
    for (std::size_t i = 0; i < draws; ++i)
        if (hit[i]) s.points.push_back(std::move(pts[i]));
    if (draws > 0) {
        const double rate = static_cast<double>(s.points.size()) / static_cast<double>(draws);
        s.acceptance = rate;
        s.acceptance_std_error = std::sqrt(rate * (1 - rate) / static_cast<double>(draws));
    }
    return s;
}

MonteCarloEstimate mc_volume(const HPolytope& k, std::size_t samples, std::uint64_t seed, Execution exec)
{
    if (samples == 0) throw std::invalid_argument("mc_volume: need at least one sample");
    const BoundingBox box = bounding_box(vertices_of(k));
    const auto lo = as_doubles(box.lo), hi = as_doubles(box.hi);
    const DoubleFacets f = to_double(k);
    const Moments m = blocked_moments(samples, exec, [&](std::size_t i) { return inside(f, draw(lo, hi, seed, i)) ? 1.0 : 0.0; });

    MonteCarloEstimate e;
    double mean = 0, err = 0;
    mean_and_error(m, samples, mean, err);
    const double v = box.volume().get_d();
    e.estimate = v * mean;
    e.std_error = v * err;
    e.samples = samples;
    e.exact = volume(k, exec);
    return e;
}

ExpGaugeEstimate mc_exp_gauge(const HPolytope& k, const Rational& p, std::size_t samples, std::uint64_t seed,
                              Execution exec)
{
    if (!k.has_origin_in_interior()) throw OriginNotInterior();
    if (p <= 0) throw std::invalid_argument("mc_exp_gauge: power must be positive");
    if (samples < kMinSamples) throw std::invalid_argument("mc_exp_gauge: at least 1000 samples are required");

    const std::size_t n = k.dim();
    const double pd = p.get_d();
    const double t = 50.0 / pd;
    const BoundingBox box = bounding_box(vertices_of(k));
    std::vector<double> lo = as_doubles(box.lo), hi = as_doubles(box.hi);
    for (std::size_t j = 0; j < n; ++j) {
        lo[j] *= t;
        hi[j] *= t;
    }
    const DoubleFacets f = to_double(k);
    const Moments m = blocked_moments(samples, exec, [&](std::size_t i) {
        const double g = gauge_of(f, draw(lo, hi, seed, i));
        return g <= t ? std::exp(-pd * g) : 0.0;
    });

    ExpGaugeEstimate e;
    double mean = 0, err = 0;
    mean_and_error(m, samples, mean, err);
    const double box_volume = box.volume().get_d() * std::pow(t, static_cast<double>(n));
    e.estimate = box_volume * mean;
    e.std_error = box_volume * err;
    e.samples = samples;
    e.truncation = t;
    const Rational vol = volume(k, exec);
    e.exact = factorial(static_cast<unsigned>(n)) * vol / power(p, static_cast<long>(n));

    // integral_T^inf n r^{n-1} e^{-pr} dr = n!/p^n e^{-pT} sum_{j<n} (pT)^j / j!
    double partial = 0, term = 1;
    for (std::size_t j = 0; j < n; ++j) {
        partial += term;
        term *= pd * t / static_cast<double>(j + 1);
    }
    e.tail_bound = e.exact.get_d() * std::exp(-pd * t) * partial;
    return e;
}

}  // namespace blgeo
