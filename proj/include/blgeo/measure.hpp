#pragma once

#include "blgeo/rational.hpp"

namespace blgeo {

/// A Lebesgue measure of the form q * sqrt(g).
///
/// Sections and projections onto a subspace with basis B carry the factor
/// sqrt(det(B^T B)); it is kept symbolic so that measures stay exact.
/// Canonical form: g is a positive integer with all square factors that
/// trial division finds moved into q; q = 0 forces g = 1.
class MeasureValue {
public:
    MeasureValue() = default;
    /// Throws std::invalid_argument if q < 0 or g <= 0.
    MeasureValue(Rational q, Rational g);

    static MeasureValue rational(Rational q) { return MeasureValue(std::move(q), Rational(1)); }

    const Rational& q() const { return q_; }
    const Rational& g() const { return g_; }
    bool is_rational() const { return g_ == 1; }
    bool is_zero() const { return q_ == 0; }
    double approx() const;

    friend bool operator==(const MeasureValue&, const MeasureValue&) = default;

private:
    Rational q_ = 0;
    Rational g_ = 1;
};

}  // namespace blgeo
