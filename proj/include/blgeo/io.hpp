#pragma once

// JSON forms of every value the command line reads or writes. Rationals are
// strings "p/q" (or "p"); cover elements are 1-based; intervals are pairs of
// decimal strings [lo, hi].

#include "blgeo/certify.hpp"
#include "blgeo/cover.hpp"
#include "blgeo/datum.hpp"
#include "blgeo/integrate.hpp"
#include "blgeo/norm_decompose.hpp"
#include "blgeo/polytope.hpp"
#include "blgeo/verify.hpp"

#include "json.hpp"

#include <stdexcept>
#include <string>
#include <variant>

namespace blgeo::io {

using nlohmann::json;

/// Malformed or semantically invalid input.
class ParseError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

json to_json(const Rational& r);
json to_json(const Vector& v);
json to_json(const Matrix& m);
json to_json(const Subspace& s);
json to_json(const BLDatum& d);
json to_json(const UniformCover& c);
json to_json(const HPolytope& p);
json to_json(const VPolytope& p);
json to_json(const MeasureValue& m);
json to_json(const Interval& i);
json to_json(const PowerProduct& p);
json to_json(const ValueExpr& e);
json to_json(const InequalityReport& r);
json to_json(const EqualityCertificate& c);
json to_json(const DatumValidation& v);
json to_json(const DecompositionReport& r);
json to_json(const NormDecomposition& r);
json to_json(const NormAdditivityReport& r);
json to_json(const InfDecompositionReport& r);
json to_json(const MonteCarloEstimate& e);
json to_json(const ExpGaugeEstimate& e);

Rational rational_from(const json& j);
Vector vector_from(const json& j);
Subspace subspace_from(const json& j);
BLDatum datum_from(const json& j);
UniformCover cover_from(const json& j);
HPolytope hpolytope_from(const json& j);
VPolytope vpolytope_from(const json& j);
MeasureValue measure_from(const json& j);

/// Either representation, told apart by the "inequalities" or "vertices" key.
using Body = std::variant<HPolytope, VPolytope>;
Body body_from(const json& j);
HPolytope as_h(const Body& b);
VPolytope as_v(const Body& b);

json read_file(const std::string& path);
void write_text(const std::string& path, const std::string& text);

}  // namespace blgeo::io
