#pragma once

// Products of rational powers of rationals, compared exactly where possible and
// enclosed in directed-rounding MPFR intervals otherwise.

#include "blgeo/measure.hpp"
#include "blgeo/rational.hpp"

#include <mpfr.h>

#include <compare>
#include <optional>
#include <string>
#include <vector>

namespace blgeo {

constexpr mpfr_prec_t kDefaultPrecision = 256;

/// Closed interval [lo, hi] with MPFR endpoints rounded outward.
/// Only the operations needed for non-negative quantities are provided.
class Interval {
public:
    explicit Interval(mpfr_prec_t precision = kDefaultPrecision);
    Interval(const Interval& other);
    Interval(Interval&& other) noexcept;
    Interval& operator=(Interval other) noexcept;
    ~Interval();

    static Interval from_rational(const Rational& value, mpfr_prec_t precision = kDefaultPrecision);

    mpfr_prec_t precision() const { return precision_; }
    const __mpfr_struct* lo() const { return lo_; }
    const __mpfr_struct* hi() const { return hi_; }

    /// Integer power of a non-negative interval.
    Interval pow(unsigned long exponent) const;
    /// q-th root of a non-negative interval.
    Interval root(unsigned long q) const;
    Interval reciprocal() const;

    friend Interval operator+(const Interval& a, const Interval& b);
    friend Interval operator*(const Interval& a, const Interval& b);
    friend Interval operator/(const Interval& a, const Interval& b);

    bool certainly_less(const Interval& other) const;
    bool contains_zero() const;
    double midpoint() const;
    double width() const;
    /// Decimal endpoints, lower rounded down and upper rounded up.
    std::string lo_string(int digits = 40) const;
    std::string hi_string(int digits = 40) const;

private:
    mpfr_prec_t precision_;
    mpfr_t lo_;
    mpfr_t hi_;
};

struct PowerFactor {
    Rational base;      // >= 0
    Rational exponent;  // any rational
};

/// prod base_i ^ exponent_i with non-negative bases. The empty product is 1.
class PowerProduct {
public:
    PowerProduct() = default;
    static PowerProduct of(const Rational& value);
    static PowerProduct of(const MeasureValue& measure);

    PowerProduct& operator*=(const PowerProduct& other);
    friend PowerProduct operator*(PowerProduct a, const PowerProduct& b) { return a *= b; }
    PowerProduct pow(const Rational& exponent) const;
    PowerProduct reciprocal() const { return pow(Rational(-1)); }

    const std::vector<PowerFactor>& factors() const { return factors_; }
    bool is_zero() const;
    /// The exact value when every (merged) exponent is an integer.
    std::optional<Rational> as_rational() const;
    Interval enclose(mpfr_prec_t precision = kDefaultPrecision) const;

private:
    void simplify();
    std::vector<PowerFactor> factors_;
};

/// Exact three-way comparison by raising both sides to the lcm of the exponent
/// denominators. Returns nullopt only when that power would exceed the bit budget.
std::optional<std::strong_ordering> compare_exact(const PowerProduct& a, const PowerProduct& b,
                                                  std::size_t bit_budget = 1u << 22);

/// A finite sum of power products with non-negative terms.
struct ValueExpr {
    std::vector<PowerProduct> terms;

    static ValueExpr single(PowerProduct p) { return ValueExpr{{std::move(p)}}; }
    bool is_single() const { return terms.size() == 1; }
    Interval enclose(mpfr_prec_t precision = kDefaultPrecision) const;
};

}  // namespace blgeo
