#include "blgeo/generators.hpp"

#include "blgeo/linalg.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace blgeo {

UniformCover random_uniform_cover(std::size_t n, std::size_t s, CounterRng& rng)
{
    if (n < 2 || s < 1) throw std::invalid_argument("random_uniform_cover: need n >= 2 and s >= 1");
    for (;;) {
        const auto k = static_cast<std::size_t>(rng.integer(static_cast<std::int64_t>(s) + 1, static_cast<std::int64_t>(s) + 4));
        std::vector<IndexSet> sets(k);
        for (std::size_t element = 0; element < n; ++element) {
            std::vector<std::size_t> slots(k);
            std::iota(slots.begin(), slots.end(), 0);
            for (std::size_t j = 0; j < s; ++j) {
                const auto pick = static_cast<std::size_t>(rng.integer(static_cast<std::int64_t>(j), static_cast<std::int64_t>(k) - 1));
                std::swap(slots[j], slots[pick]);
                sets[slots[j]].push_back(element);
            }
        }
        const bool ok = std::all_of(sets.begin(), sets.end(), [&](const IndexSet& set) { return !set.empty() && set.size() < n; });
        if (ok) return UniformCover{n, s, std::move(sets)};
    }
}

Matrix random_orthogonal(std::size_t n, CounterRng& rng)
{
    Matrix a = Matrix::zero(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            a(i, j) = rng.rational(5, 4);
            a(j, i) = -a(i, j);
        }
    const Matrix id = Matrix::identity(n);
    // I + A is invertible for skew A.
    return (id - a) * inverse(id + a);
}

BLDatum rotated(const BLDatum& d, const Matrix& q)
{
    std::vector<DatumEntry> entries;
    for (const auto& e : d.entries()) {
        std::vector<Vector> basis;
        for (const auto& b : e.subspace.basis()) basis.push_back(q * b);
        entries.push_back({Subspace::span(d.ambient_dim(), basis), e.weight});
    }
    return BLDatum::create(d.ambient_dim(), std::move(entries));
}

BLDatum random_datum(std::size_t n, CounterRng& rng)
{
    BLDatum base = rng.integer(0, 2) == 0
                       ? loomis_whitney_datum(n)
                       : datum_from_cover(random_uniform_cover(n, static_cast<std::size_t>(rng.integer(1, 3)), rng));
    if (rng.integer(0, 1) == 0) return base;
    return rotated(base, random_orthogonal(n, rng));
}

VPolytope random_body(std::size_t n, std::size_t count, CounterRng& rng, const Rational& delta)
{
    std::vector<Vector> pts;
    for (std::size_t i = 0; i < n; ++i) {
        pts.push_back(scale(delta, unit_vector(n, i)));
        pts.push_back(scale(-delta, unit_vector(n, i)));
    }
    for (std::size_t j = 0; j < count; ++j) {
        Vector p(n);
        for (auto& c : p) c = rng.rational_between(Rational(-2), Rational(2), 40);
        pts.push_back(std::move(p));
    }
    return VPolytope::hull(n, std::move(pts));
}

VPolytope random_simplex(std::size_t n, CounterRng& rng)
{
    for (;;) {
        std::vector<Vector> pts(n + 1, Vector(n));
        for (auto& p : pts)
            for (auto& c : p) c = rng.rational_between(Rational(-3), Rational(3), 60);
        VPolytope s = VPolytope::hull(n, pts);
        if (s.affine_dimension() == n && s.vertices().size() == n + 1) return s;
    }
}

VPolytope random_box(std::size_t n, CounterRng& rng)
{
    Vector lo(n), hi(n);
    for (std::size_t i = 0; i < n; ++i) {
        lo[i] = rng.rational_between(Rational(-3), Rational(1), 40);
        hi[i] = lo[i] + rng.rational_between(Rational(1, 10), Rational(3), 29);
    }
    return make_box(lo, hi);
}

Vector random_lambdas(std::size_t n, CounterRng& rng)
{
    Vector out(n);
    for (auto& l : out) l = rng.rational_between(Rational(1, 10), Rational(10), 990);
    return out;
}

}  // namespace blgeo
