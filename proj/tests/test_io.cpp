#include "blgeo/generators.hpp"
#include "blgeo/io.hpp"
#include "doctest.h"
#include "support.hpp"

using namespace blgeo;
using namespace blgeo::test;
using blgeo::io::json;

namespace {

json reparse(const json& j) { return json::parse(j.dump()); }

}  // namespace

TEST_CASE("value round trips")
{
    CounterRng rng(12, 12);
    for (int trial = 0; trial < 30; ++trial) {
        const auto n = static_cast<std::size_t>(rng.integer(2, 4));
        const BLDatum d = random_datum(n, rng);
        const BLDatum d2 = io::datum_from(reparse(io::to_json(d)));
        REQUIRE(d2.size() == d.size());
        for (std::size_t i = 0; i < d.size(); ++i) {
            CHECK(d2.entries()[i].subspace == d.entries()[i].subspace);
            CHECK(d2.entries()[i].weight == d.entries()[i].weight);
        }
        CHECK(io::to_json(d2) == io::to_json(d));

        const UniformCover c = random_uniform_cover(n, 2, rng);
        const UniformCover c2 = io::cover_from(reparse(io::to_json(c)));
        CHECK(c2.sets == c.sets);
        CHECK(c2.s == c.s);

        const VPolytope v = random_body(n, 4, rng);
        CHECK(io::vpolytope_from(reparse(io::to_json(v))) == v);
        const HPolytope h = facets_of(v);
        CHECK(io::hpolytope_from(reparse(io::to_json(h))) == h);
        CHECK(std::get<HPolytope>(io::body_from(io::to_json(h))) == h);
        CHECK(io::as_v(io::body_from(io::to_json(h))) == v);

        const Rational x = rng.rational(50, 7);
        const MeasureValue m(x * x + Rational(1), Rational(static_cast<long>(rng.integer(1, 50))));
        CHECK(io::measure_from(reparse(io::to_json(m))) == m);

        const auto report = verify_liakopoulos(h, d);
        const json rj = io::to_json(report);
        CHECK(reparse(rj) == rj);
    }
}

TEST_CASE("wire formats")
{
    CHECK(io::to_json(q("-3/4")) == "-3/4");
    CHECK(io::rational_from(json(7)) == 7);
    CHECK(io::to_json(UniformCover{3, 2, {{0, 1}, {1, 2}, {0, 2}}}) ==
          json::parse(R"({"n":3,"s":2,"sets":[[1,2],[2,3],[1,3]]})"));
    CHECK(io::to_json(MeasureValue(Rational(2), Rational(8))) == json::parse(R"({"q":"4","g":"2"})"));
    auto r = verify_meyer(h(cross(2)));
    auto j = io::to_json(r);
    CHECK(j["equality"] == "exact-yes");
    CHECK(j["lhs"]["exact"] == "2");
    CHECK(j["ratio"].is_array());
    CHECK(j["ratio"].size() == 2);
}

TEST_CASE("parse errors")
{
    CHECK_THROWS_AS(io::datum_from(json::parse(R"({"entries": []})")), io::ParseError);
    CHECK_THROWS_AS(io::datum_from(json::parse(R"({"ambient_dim": 2, "entries": []})")), io::ParseError);
    CHECK_THROWS_AS(io::cover_from(json::parse(R"({"n":2,"s":1,"sets":[[0],[1]]})")), io::ParseError);
    CHECK_THROWS_AS(io::rational_from(json("1/0")), io::ParseError);
    CHECK_THROWS_AS(io::rational_from(json(0.5)), io::ParseError);
    CHECK_THROWS_AS(io::vpolytope_from(json::parse(R"({"dim":2,"vertices":[[1,2,3]]})")), io::ParseError);
    CHECK_THROWS_AS(io::body_from(json::parse(R"({"dim":2})")), io::ParseError);
    CHECK_THROWS_AS(io::read_file("/nonexistent/file.json"), io::ParseError);
}
