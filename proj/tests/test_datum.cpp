#include "blgeo/cover.hpp"
#include "blgeo/datum.hpp"
#include "blgeo/generators.hpp"
#include "doctest.h"
#include "support.hpp"

#include <algorithm>

using namespace blgeo;
using namespace blgeo::test;

namespace {

Subspace line(std::initializer_list<long> v) { return Subspace::span(v.size(), {vec(v)}); }

// Every sign pattern, no pruning; distinct non-trivial results.
std::vector<Subspace> all_independent(const BLDatum& d)
{
    std::vector<Subspace> out;
    const std::size_t k = d.size(), n = d.ambient_dim();
    for (unsigned mask = 0; mask < (1u << k); ++mask) {
        Subspace f = Subspace::whole(n);
        for (std::size_t i = 0; i < k; ++i) {
            const Subspace& e = d.entries()[i].subspace;
            f = intersect(f, (mask & (1u << i)) ? orthogonal_complement(e) : e);
        }
        if (f.is_trivial()) continue;
        if (std::none_of(out.begin(), out.end(), [&](const Subspace& g) { return g == f; })) out.push_back(f);
    }
    return out;
}

bool same_set(const std::vector<Subspace>& a, const std::vector<Subspace>& b)
{
    if (a.size() != b.size()) return false;
    for (const auto& x : a)
        if (std::none_of(b.begin(), b.end(), [&](const Subspace& y) { return x == y; })) return false;
    return true;
}

}  // namespace

TEST_CASE("datum validation examples")
{
    CHECK(validate_datum(axes_datum(vec({1, 1}))).valid);
    auto lw = loomis_whitney_datum(3);
    CHECK(validate_datum(lw).valid);
    CHECK(lw.entries()[0].weight == q("1/2"));

    auto bad = BLDatum::create(2, {{line({1, 0}), q("1/2")}, {line({0, 1}), q("1/2")}, {line({1, 1}), Rational(1)}});
    auto v = validate_datum(bad);
    CHECK_FALSE(v.valid);
    CHECK_FALSE(v.residual.is_zero());
    CHECK(v.trace_defect == 0);  // trace alone cannot detect this one

    CHECK(datum_dimension_check(lw) == 0);
    auto doubled = BLDatum::create(3, {{lw.entries()[0].subspace, Rational(1)},
                                       {lw.entries()[1].subspace, Rational(1)},
                                       {lw.entries()[2].subspace, Rational(1)}});
    CHECK(datum_dimension_check(doubled) == 3);
    CHECK(datum_dimension_check(axes_datum(vecq({"1", "1/2"}))) == q("-1/2"));

    CHECK_THROWS_AS(BLDatum::create(2, {{Subspace::zero(2), Rational(1)}}), std::invalid_argument);
    CHECK_THROWS_AS(BLDatum::create(2, {{Subspace::whole(2), Rational(1)}}), std::invalid_argument);
    CHECK_THROWS_AS(BLDatum::create(2, {{line({1, 0}), Rational(0)}}), std::invalid_argument);
    CHECK_THROWS_AS(BLDatum::create(3, {{line({1, 0}), Rational(1)}}), std::invalid_argument);
}

TEST_CASE("gaussian constant")
{
    CHECK(gaussian_bl_constant(loomis_whitney_datum(3)) == 1);
    CHECK(gaussian_bl_constant(axes_datum(vec({2, 1}))) == 2);
    // The determinant alone does not characterize validity.
    auto balanced = axes_datum(vecq({"2", "1/2"}));
    CHECK_FALSE(validate_datum(balanced).valid);
    CHECK(gaussian_bl_constant(balanced) == 1);
    CounterRng rng(1, 9);
    for (int t = 0; t < 20; ++t) CHECK(gaussian_bl_constant(random_datum(static_cast<std::size_t>(rng.integer(2, 4)), rng)) == 1);
}

TEST_CASE("critical subspaces")
{
    auto lw = loomis_whitney_datum(3);
    auto r = is_critical_subspace(lw, line({1, 0, 0}));
    CHECK(r.critical);
    CHECK(r.splits);
    CHECK(r.weighted_dimension == 1);
    r = is_critical_subspace(lw, line({1, 1, 1}));
    CHECK_FALSE(r.critical);
    CHECK_FALSE(r.splits);
    CHECK(r.weighted_dimension == 0);
    CHECK(is_critical_subspace(lw, Subspace::whole(3)).critical);
    CHECK_THROWS_AS(is_critical_subspace(lw, Subspace::zero(3)), std::invalid_argument);
    CHECK_THROWS_AS(is_critical_subspace(lw, Subspace::whole(2)), std::invalid_argument);
}

TEST_CASE("decomposition examples")
{
    auto rep = decompose(datum_from_cover(UniformCover{3, 2, {{0, 1}, {1, 2}, {0, 2}}}));
    CHECK(same_set(rep.independent, {line({1, 0, 0}), line({0, 1, 0}), line({0, 0, 1})}));
    CHECK(rep.dependent.is_trivial());

    rep = decompose(axes_datum(vec({1, 1})));
    REQUIRE(rep.independent.size() == 2);
    CHECK(rep.independent[0] == line({1, 0}));
    CHECK(rep.patterns[0] == 0b10);  // E_1 ∩ E_2^⊥
    CHECK(rep.membership[0] == std::vector<std::size_t>{0});

    auto repeated = BLDatum::create(2, {{line({1, 0}), q("1/2")}, {line({0, 1}), Rational(1)}, {line({1, 0}), q("1/2")}});
    REQUIRE(validate_datum(repeated).valid);
    rep = decompose(repeated);
    CHECK(same_set(rep.independent, {line({1, 0}), line({0, 1})}));
    CHECK(rep.dependent.is_trivial());

    auto frame = BLDatum::create(2, {{line({1, 0}), q("1/2")}, {line({0, 1}), q("1/2")},
                                     {line({1, 1}), q("1/2")}, {line({1, -1}), q("1/2")}});
    rep = decompose(frame);
    CHECK(rep.independent.empty());
    CHECK(rep.dependent.is_whole());

    auto invalid = BLDatum::create(2, {{line({1, 0}), Rational(2)}, {line({0, 1}), Rational(1)}});
    CHECK_THROWS_AS(decompose(invalid), std::invalid_argument);
}

TEST_CASE("decomposition properties on random data")
{
    CounterRng rng(31337, 4);
    for (int trial = 0; trial < 40; ++trial) {
        const auto n = static_cast<std::size_t>(rng.integer(2, 4));
        const BLDatum d = random_datum(n, rng);
        REQUIRE(validate_datum(d).valid);
        const auto rep = decompose(d, Execution::parallel);
        const auto serial = decompose(d, Execution::serial);
        CHECK(rep.patterns == serial.patterns);
        CHECK(rep.dependent == serial.dependent);

        CHECK(same_set(rep.independent, all_independent(d)));
        std::vector<Subspace> parts = rep.independent;
        parts.push_back(rep.dependent);
        CHECK(is_direct_sum_decomposition(parts, n));
        for (std::size_t j = 0; j < rep.independent.size(); ++j) {
            const Subspace& f = rep.independent[j];
            for (std::size_t l = j + 1; l < rep.independent.size(); ++l) CHECK(are_orthogonal(f, rep.independent[l]));
            Rational weight = 0;
            for (std::size_t i = 0; i < d.size(); ++i) {
                const Subspace& e = d.entries()[i].subspace;
                const bool inside = e.contains(f);
                CHECK((inside || orthogonal_complement(e).contains(f)));
                const bool listed = std::find(rep.membership[j].begin(), rep.membership[j].end(), i) != rep.membership[j].end();
                CHECK(inside == listed);
                if (inside) weight += d.entries()[i].weight;
            }
            CHECK(weight == 1);
            CHECK(is_critical_subspace(d, f).critical);
        }
    }
}

TEST_CASE("criticality agrees with splitting")
{
    CounterRng rng(4, 4);
    for (int trial = 0; trial < 60; ++trial) {
        const auto n = static_cast<std::size_t>(rng.integer(2, 4));
        const BLDatum d = random_datum(n, rng);
        std::vector<Vector> vs;
        const auto k = rng.integer(1, static_cast<std::int64_t>(n));
        // Mix of coordinate and generic directions.
        for (std::int64_t j = 0; j < k; ++j) {
            Vector v(n);
            if (rng.integer(0, 1) == 0) v = unit_vector(n, static_cast<std::size_t>(rng.integer(0, static_cast<std::int64_t>(n) - 1)));
            else
                for (auto& c : v) c = rng.rational(3, 2);
            vs.push_back(v);
        }
        const Subspace v = Subspace::span(n, vs);
        if (v.is_trivial()) continue;
        const auto r = is_critical_subspace(d, v);
        CHECK(r.critical == r.splits);
    }
}
