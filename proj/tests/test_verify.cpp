#include "blgeo/cover.hpp"
#include "blgeo/datum.hpp"
#include "blgeo/errors.hpp"
#include "blgeo/verify.hpp"
#include "doctest.h"
#include "support.hpp"

using namespace blgeo;
using namespace blgeo::test;

namespace {

Rational single_value(const ValueExpr& e)
{
    REQUIRE(e.is_single());
    auto r = e.terms[0].as_rational();
    REQUIRE(r);
    return *r;
}

}  // namespace

TEST_CASE("loomis-whitney on boxes and a triangle")
{
    auto r = verify_loomis_whitney(cube(3, 0, 1));
    CHECK(r.holds);
    CHECK(r.equality == EqualityChannel::exact_yes);

    auto tri = VPolytope::hull(2, {vec({0, 0}), vec({1, 0}), vec({0, 1})});
    r = verify_loomis_whitney(tri);
    CHECK(r.holds);
    CHECK(r.equality == EqualityChannel::exact_no);
    CHECK(single_value(r.lhs) == q("1/2"));
    CHECK(single_value(r.rhs) == 1);

    r = verify_loomis_whitney(make_box(vec({0, 0}), vec({2, 3})));
    CHECK(single_value(r.lhs) == 6);
    CHECK(single_value(r.rhs) == 6);
    CHECK(r.equality == EqualityChannel::exact_yes);
}

TEST_CASE("bollobas-thomason")
{
    UniformCover c{3, 2, {{0, 1}, {1, 2}, {0, 2}}};
    auto r = verify_bollobas_thomason(cube(3, 0, 1), c);
    CHECK(r.equality == EqualityChannel::exact_yes);

    auto simplex = make_standard_simplex(3);
    r = verify_bollobas_thomason(simplex, c);
    CHECK(r.holds);
    CHECK(single_value(r.lhs) == q("1/36"));
    CHECK(single_value(r.rhs) == q("1/8"));

    UniformCover c2{2, 1, {{0}, {1}}};
    r = verify_bollobas_thomason(make_box(vec({0, 0}), vec({2, 3})), c2);
    CHECK(single_value(r.lhs) == 6);
    CHECK(r.equality == EqualityChannel::exact_yes);

    CHECK_THROWS_AS(verify_bollobas_thomason(simplex, UniformCover{3, 1, {{0, 1, 2}}}), std::invalid_argument);
}

TEST_CASE("meyer")
{
    auto r = verify_meyer(h(cross(2)));
    CHECK(single_value(r.lhs) == 2);
    CHECK(single_value(r.rhs) == 2);
    CHECK(r.equality == EqualityChannel::exact_yes);

    r = verify_meyer(h(cube(2)));
    CHECK(r.holds);
    CHECK(single_value(r.lhs) == 4);
    CHECK(single_value(r.rhs) == 2);

    r = verify_meyer(h(make_cross_polytope(vec({2, 3}))));
    CHECK(single_value(r.lhs) == 12);
    CHECK(r.equality == EqualityChannel::exact_yes);
}

TEST_CASE("liakopoulos")
{
    auto axes = axes_datum(vec({1, 1}));
    auto r = verify_liakopoulos(h(cross(2)), axes);
    CHECK(single_value(r.lhs) == 2);
    CHECK(single_value(r.rhs) == 2);
    CHECK(r.equality == EqualityChannel::exact_yes);

    r = verify_liakopoulos(h(cube(2)), axes);
    CHECK(r.holds);
    CHECK(r.equality == EqualityChannel::exact_no);

    // Octahedron with the LW datum: |K| = 4/3, every section has area 2,
    // rhs = (2!)^{3/2} / 3! * 2^{3/2} = 8/6.
    r = verify_liakopoulos(h(cross(3)), loomis_whitney_datum(3));
    CHECK(single_value(r.lhs) == q("4/3"));
    CHECK(single_value(r.rhs) == q("4/3"));
    CHECK(r.equality == EqualityChannel::exact_yes);

    CHECK_THROWS_AS(verify_liakopoulos(h(cube(2, 0, 1)), axes), OriginNotInterior);
}

TEST_CASE("ratio is invariant under dilation")
{
    auto d = loomis_whitney_datum(3);
    auto k = VPolytope::hull(3, {vec({2, 0, 0}), vec({-1, 0, 0}), vec({0, 1, 0}), vec({0, -3, 0}), vec({0, 0, 1}),
                                 vec({0, 0, -1}), vec({1, 1, 1})});
    auto base = verify_liakopoulos(h(k), d);
    auto scaled = verify_liakopoulos(h(dilated(k, q("5/2"))), d);
    CHECK(base.holds);
    CHECK(scaled.holds);
    CHECK(base.ratio.midpoint() == doctest::Approx(scaled.ratio.midpoint()).epsilon(1e-12));
    CHECK(base.equality == scaled.equality);
}

TEST_CASE("brunn-minkowski")
{
    auto x = cube(2, 0, 1);
    auto r = verify_brunn_minkowski(x, x, q("1/2"), q("1/2"));
    CHECK(r.holds);
    CHECK(r.equality == EqualityChannel::exact_yes);

    auto tri = VPolytope::hull(2, {vec({0, 0}), vec({1, 0}), vec({0, 1})});
    r = verify_brunn_minkowski(x, tri, q("1/2"), q("1/2"));
    CHECK(r.holds);
    CHECK(r.equality == EqualityChannel::exact_no);

    auto y = translated(dilated(x, Rational(2)), vecq({"1/3", "-5"}));
    r = verify_brunn_minkowski(x, y, q("3"), q("1/7"));
    CHECK(r.holds);
    CHECK(r.equality == EqualityChannel::exact_yes);

    // Homothetic but with an irrational right-hand side: decided by the homothety witness.
    auto t2 = translated(dilated(tri, q("2")), vec({1, 1}));
    r = verify_brunn_minkowski(tri, t2, Rational(1), Rational(1));
    CHECK(r.holds);
    CHECK(r.equality == EqualityChannel::exact_yes);
    CHECK(find_homothety(tri, t2));
    CHECK_FALSE(find_homothety(tri, x));
}

TEST_CASE("rbl indicators")
{
    auto axes = axes_datum(vec({1, 1}));
    auto r = verify_rbl_indicators(h(cube(2)), axes);
    CHECK(single_value(r.lhs) == 4);
    CHECK(single_value(r.rhs) == 4);
    CHECK(r.equality == EqualityChannel::exact_yes);

    r = verify_rbl_indicators(h(cross(2)), axes);
    CHECK(single_value(r.lhs) == 4);
    CHECK(single_value(r.rhs) == 4);

    r = verify_rbl_indicators(h(cube(3)), loomis_whitney_datum(3));
    CHECK(r.holds);
    // sum of three half-squares is [-1,1]^3, volume 8; rhs = 4^{3/2} = 8.
    CHECK(single_value(r.lhs) == 8);
    CHECK(r.equality == EqualityChannel::exact_yes);
}

TEST_CASE("loomis-whitney agrees with bollobas-thomason on the LW cover")
{
    auto k = VPolytope::hull(3, {vec({0, 0, 0}), vec({2, 0, 0}), vec({0, 1, 0}), vec({0, 0, 3}), vec({1, 1, 1})});
    auto a = verify_loomis_whitney(k);
    auto b = verify_bollobas_thomason(k, loomis_whitney_cover(3));
    CHECK(single_value(a.lhs) == single_value(b.lhs));
    CHECK(single_value(a.rhs) == single_value(b.rhs));
    CHECK(a.equality == b.equality);
}

TEST_CASE("meyer and liakopoulos with the axes datum agree on equality")
{
    auto axes = axes_datum(vec({1, 1, 1}));
    for (const auto& k : {h(cross(3)), h(cube(3)), h(make_cross_polytope(vecq({"1/2", "3", "7/5"})))}) {
        auto m = verify_meyer(k);
        auto l = verify_liakopoulos(k, axes);
        CHECK(m.equality == l.equality);
    }
}

TEST_CASE("interval channel for irrational sides")
{
    // Weights 1/2 with non-square section lengths leave sqrt's on the right.
    auto sides = compare_sides("t", Direction::lhs_ge_rhs, ValueExpr::single(PowerProduct::of(Rational(4))),
                               ValueExpr{{PowerProduct::of(Rational(2)).pow(q("1/2")),
                                          PowerProduct::of(Rational(3)).pow(q("1/2"))}});
    CHECK(sides.holds);
    CHECK(sides.equality == EqualityChannel::exact_no);
    auto bad = compare_sides("t", Direction::lhs_ge_rhs, ValueExpr::single(PowerProduct::of(Rational(3))),
                             ValueExpr{{PowerProduct::of(Rational(2)).pow(q("1/2")),
                                        PowerProduct::of(Rational(2)).pow(q("1/2")), PowerProduct::of(Rational(1))}});
    CHECK_FALSE(bad.holds);
    // sqrt 8 = 2 sqrt 2 cannot be separated by intervals.
    auto tie = compare_sides("t", Direction::lhs_ge_rhs, ValueExpr::single(PowerProduct::of(Rational(8)).pow(q("1/2"))),
                             ValueExpr{{PowerProduct::of(Rational(2)).pow(q("1/2")),
                                        PowerProduct::of(Rational(2)).pow(q("1/2"))}});
    CHECK(tie.holds);
    CHECK(tie.equality == EqualityChannel::within_tolerance);
}
