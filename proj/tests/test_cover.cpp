#include "blgeo/cover.hpp"
#include "blgeo/generators.hpp"
#include "doctest.h"
#include "support.hpp"

#include <algorithm>

using namespace blgeo;
using namespace blgeo::test;

TEST_CASE("cover validation")
{
    auto c = UniformCover{3, 2, {{0, 1}, {1, 2}, {0, 2}}};
    auto v = validate_cover(c);
    CHECK(v.valid);
    CHECK(v.multiplicity == std::vector<std::size_t>{2, 2, 2});
    CHECK(validate_cover(loomis_whitney_cover(3)).valid);

    v = validate_cover(UniformCover{2, 1, {{0}, {0}}});
    CHECK_FALSE(v.valid);
    CHECK(v.multiplicity == std::vector<std::size_t>{2, 0});
    CHECK_FALSE(v.reason.empty());

    CHECK_FALSE(validate_cover(UniformCover{2, 1, {{0, 1}}}).valid);
    CHECK_FALSE(validate_cover(UniformCover{2, 1, {{0}, {1}, {}}}).valid);
    CHECK_FALSE(validate_cover(UniformCover{2, 1, {{0}, {5}}}).valid);
    CHECK_FALSE(validate_cover(UniformCover{2, 1, {{0, 0}, {1}}}).valid);
}

TEST_CASE("induced partitions")
{
    using P = std::vector<IndexSet>;
    CHECK(induced_partition(UniformCover{3, 2, {{0, 1}, {1, 2}, {0, 2}}}) == P{{0}, {1}, {2}});
    CHECK(induced_partition(UniformCover{3, 1, {{0, 1}, {2}}}) == P{{0, 1}, {2}});
    CHECK(induced_partition(loomis_whitney_cover(3)) == P{{0}, {1}, {2}});
    CHECK(induced_partition(UniformCover{4, 2, {{0, 2}, {1, 3}, {0, 2}, {1, 3}}}) == P{{0, 2}, {1, 3}});
}

TEST_CASE("coordinate subspaces and cover data")
{
    CHECK(coordinate_subspace(3, {0, 2}) == Subspace::span(3, {vec({1, 0, 0}), vec({0, 0, 1})}));
    CHECK(coordinate_subspace(2, {1}) == Subspace::span(2, {vec({0, 1})}));
    CHECK(coordinate_subspace(4, {0, 1, 2, 3}).is_whole());
    CHECK_THROWS_AS(coordinate_subspace(3, {}), std::invalid_argument);

    auto d = datum_from_cover(loomis_whitney_cover(3));
    CHECK(d.size() == 3);
    CHECK(d.entries()[0].weight == q("1/2"));
    CHECK(d.entries()[0].subspace == Subspace::span(3, {vec({0, 1, 0}), vec({0, 0, 1})}));
    CHECK(validate_datum(d).valid);
    auto axes = datum_from_cover(UniformCover{2, 1, {{0}, {1}}});
    CHECK(axes.entries()[1].weight == 1);
    CHECK_THROWS_AS(datum_from_cover(UniformCover{2, 1, {{0}, {0}}}), std::invalid_argument);
}

TEST_CASE("random cover properties")
{
    CounterRng rng(2718, 6);
    for (int trial = 0; trial < 100; ++trial) {
        const auto n = static_cast<std::size_t>(rng.integer(2, 6));
        const auto s = static_cast<std::size_t>(rng.integer(1, 3));
        const UniformCover c = random_uniform_cover(n, s, rng);
        REQUIRE(validate_cover(c).valid);

        Rational total = 0;
        for (const auto& sigma : c.sets) total += Rational(static_cast<long>(sigma.size())) / Rational(static_cast<long>(s));
        CHECK(total == Rational(static_cast<long>(n)));

        const auto blocks = induced_partition(c);
        std::vector<std::size_t> seen;
        for (const auto& b : blocks) {
            seen.insert(seen.end(), b.begin(), b.end());
            for (const auto& sigma : c.sets) {
                const auto hits = std::count_if(b.begin(), b.end(), [&](std::size_t j) {
                    return std::binary_search(sigma.begin(), sigma.end(), j);
                });
                CHECK((hits == 0 || static_cast<std::size_t>(hits) == b.size()));
            }
        }
        std::sort(seen.begin(), seen.end());
        std::vector<std::size_t> all(n);
        for (std::size_t j = 0; j < n; ++j) all[j] = j;
        CHECK(seen == all);

        const BLDatum d = datum_from_cover(c);
        CHECK(validate_datum(d).valid);
        const auto rep = decompose(d);
        CHECK(rep.dependent.is_trivial());
        REQUIRE(rep.independent.size() == blocks.size());
        for (const auto& b : blocks) {
            const Subspace e = coordinate_subspace(n, b);
            CHECK(std::any_of(rep.independent.begin(), rep.independent.end(), [&](const Subspace& f) { return f == e; }));
        }
    }
}
