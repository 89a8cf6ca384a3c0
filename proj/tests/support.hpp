#pragma once

#include "blgeo/polytope.hpp"
#include "blgeo/rational.hpp"

#include <initializer_list>
#include <string>

namespace blgeo::test {

inline Rational q(const char* s) { return parse_rational(s); }

inline Vector vec(std::initializer_list<long> xs)
{
    Vector v;
    for (long x : xs) v.emplace_back(x);
    return v;
}

inline Vector vecq(std::initializer_list<const char*> xs)
{
    Vector v;
    for (const char* x : xs) v.push_back(parse_rational(x));
    return v;
}

inline VPolytope cube(std::size_t n, long lo = -1, long hi = 1)
{
    return make_box(Vector(n, Rational(lo)), Vector(n, Rational(hi)));
}

inline VPolytope cross(std::size_t n) { return make_cross_polytope(Vector(n, Rational(1))); }

inline HPolytope h(const VPolytope& v) { return facets_of(v); }

}  // namespace blgeo::test
