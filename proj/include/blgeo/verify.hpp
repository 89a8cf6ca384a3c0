#pragma once

// Both sides of each volume inequality, compared exactly when the exponents
// allow it and by outward-rounded MPFR intervals otherwise.

#include "blgeo/cover.hpp"
#include "blgeo/datum.hpp"
#include "blgeo/exact_value.hpp"
#include "blgeo/polytope.hpp"

#include <string>
#include <vector>

namespace blgeo {

enum class EqualityChannel { exact_yes, exact_no, within_tolerance, undecided_interval };

/// The inequality asserted by the theorem.
enum class Direction { lhs_le_rhs, lhs_ge_rhs };

struct InequalityReport {
    std::string name;
    Direction direction = Direction::lhs_ge_rhs;
    ValueExpr lhs;
    ValueExpr rhs;
    Interval ratio;  // lhs / rhs
    bool holds = true;
    EqualityChannel equality = EqualityChannel::undecided_interval;
    std::vector<std::string> notes;
};

/// Relative midpoint gap below which an undecided comparison is reported as within_tolerance.
inline constexpr double kEqualityTolerance = 1e-30;

/// Decides holds/equality for lhs (direction) rhs. Exact when both sides are
/// single power products within the bit budget; otherwise intervals at 256,
/// 512 and 1024 bits before giving up.
InequalityReport compare_sides(std::string name, Direction direction, ValueExpr lhs, ValueExpr rhs);

/// |K|^{n-1} <= prod_i |P_{e_i^⊥} K|
InequalityReport verify_loomis_whitney(const VPolytope& k);

/// |K|^s <= prod_i |P_{E_{sigma_i}} K|
InequalityReport verify_bollobas_thomason(const VPolytope& k, const UniformCover& cover);

/// |K|^{n-1} >= n!/n^n prod_i |K ∩ e_i^⊥|
InequalityReport verify_meyer(const HPolytope& k);

/// |K| >= prod_i (d_i!)^{c_i} / n! * prod_i |K ∩ E_i|^{c_i}
InequalityReport verify_liakopoulos(const HPolytope& k, const BLDatum& d);

/// |aX + bY|^{1/n} >= a|X|^{1/n} + b|Y|^{1/n}; equality is certified by exhibiting Y = lambda X + z.
InequalityReport verify_brunn_minkowski(const VPolytope& x, const VPolytope& y, const Rational& alpha,
                                        const Rational& beta);

/// |sum_i c_i (K ∩ E_i)| >= prod_i |K ∩ E_i|^{c_i}
InequalityReport verify_rbl_indicators(const HPolytope& k, const BLDatum& d, Execution exec = Execution::parallel);

/// Some lambda > 0 and z with y = lambda x + z, when they exist.
std::optional<std::pair<Rational, Vector>> find_homothety(const VPolytope& x, const VPolytope& y);

const char* to_string(EqualityChannel channel);
const char* to_string(Direction direction);

}  // namespace blgeo
