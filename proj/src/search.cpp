#include "blgeo/search.hpp"

#include "blgeo/generators.hpp"
#include "blgeo/random.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace blgeo {

VPolytope search_body(std::size_t n, std::uint64_t seed, std::size_t trial)
{
    CounterRng rng = CounterRng(seed, 0).split(trial);
    if (trial % 8 == 0) {
        std::vector<Vector> pts;
        for (std::size_t i = 0; i < n; ++i) {
            pts.push_back(scale(rng.rational_between(Rational(1, 4), Rational(3), 44), unit_vector(n, i)));
            pts.push_back(scale(-rng.rational_between(Rational(1, 4), Rational(3), 44), unit_vector(n, i)));
        }
        return VPolytope::hull(n, std::move(pts));
    }
    return random_body(n, static_cast<std::size_t>(rng.integer(1, 6)), rng);
}

SearchResult liakopoulos_search(const BLDatum& d, std::size_t trials, std::uint64_t seed, std::size_t keep, Execution exec)
{
    if (!validate_datum(d).valid) throw std::invalid_argument("liakopoulos_search: datum does not satisfy sum c_i P_i = I_n");
    const std::size_t n = d.ambient_dim();

    std::vector<std::optional<SearchHit>> hits(trials);
#pragma omp parallel for schedule(dynamic) if (exec == Execution::parallel)
    for (std::size_t t = 0; t < trials; ++t) {
        VPolytope body = search_body(n, seed, t);
        InequalityReport report = verify_liakopoulos(facets_of(body), d);
        hits[t] = SearchHit{t, std::move(body), std::move(report), std::nullopt};
    }

    SearchResult result;
    result.trials = trials;
    std::vector<std::size_t> order(trials);
    std::iota(order.begin(), order.end(), 0);
    for (const auto& h : hits) {
        if (!h->report.holds) ++result.violations;
        if (h->report.equality == EqualityChannel::exact_yes) ++result.exact_equalities;
    }
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        return hits[a]->report.ratio.midpoint() < hits[b]->report.ratio.midpoint();
    });
    for (std::size_t i = 0; i < std::min(keep, trials); ++i) {
        SearchHit hit = std::move(*hits[order[i]]);
        if (hit.report.equality == EqualityChannel::exact_yes)
            hit.certificate = certify_liakopoulos_equality(facets_of(hit.body), d);
        result.best.push_back(std::move(hit));
    }
    return result;
}

}  // namespace blgeo
