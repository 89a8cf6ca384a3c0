#include "blgeo/exact_value.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace blgeo {

Interval::Interval(mpfr_prec_t precision) : precision_(precision)
{
    mpfr_init2(lo_, precision_);
    mpfr_init2(hi_, precision_);
    mpfr_set_zero(lo_, 1);
    mpfr_set_zero(hi_, 1);
}

Interval::Interval(const Interval& other) : precision_(other.precision_)
{
    mpfr_init2(lo_, precision_);
    mpfr_init2(hi_, precision_);
    mpfr_set(lo_, other.lo_, MPFR_RNDD);
    mpfr_set(hi_, other.hi_, MPFR_RNDU);
}

Interval::Interval(Interval&& other) noexcept : Interval(other.precision_)
{
    mpfr_swap(lo_, other.lo_);
    mpfr_swap(hi_, other.hi_);
}

Interval& Interval::operator=(Interval other) noexcept
{
    std::swap(precision_, other.precision_);
    mpfr_swap(lo_, other.lo_);
    mpfr_swap(hi_, other.hi_);
    return *this;
}

Interval::~Interval()
{
    mpfr_clear(lo_);
    mpfr_clear(hi_);
}

Interval Interval::from_rational(const Rational& value, mpfr_prec_t precision)
{
    Interval r(precision);
    mpfr_set_q(r.lo_, value.get_mpq_t(), MPFR_RNDD);
    mpfr_set_q(r.hi_, value.get_mpq_t(), MPFR_RNDU);
    return r;
}

Interval Interval::pow(unsigned long exponent) const
{
    Interval r(precision_);
    mpfr_pow_ui(r.lo_, lo_, exponent, MPFR_RNDD);
    mpfr_pow_ui(r.hi_, hi_, exponent, MPFR_RNDU);
    return r;
}

Interval Interval::root(unsigned long q) const
{
    Interval r(precision_);
    mpfr_rootn_ui(r.lo_, lo_, q, MPFR_RNDD);
    mpfr_rootn_ui(r.hi_, hi_, q, MPFR_RNDU);
    return r;
}

Interval Interval::reciprocal() const
{
    if (contains_zero()) throw std::domain_error("Interval::reciprocal: interval contains zero");
    Interval r(precision_);
    mpfr_ui_div(r.lo_, 1, hi_, MPFR_RNDD);
    mpfr_ui_div(r.hi_, 1, lo_, MPFR_RNDU);
    return r;
}

Interval operator+(const Interval& a, const Interval& b)
{
    Interval r(std::max(a.precision_, b.precision_));
    mpfr_add(r.lo_, a.lo_, b.lo_, MPFR_RNDD);
    mpfr_add(r.hi_, a.hi_, b.hi_, MPFR_RNDU);
    return r;
}

Interval operator*(const Interval& a, const Interval& b)
{
    if (mpfr_sgn(a.lo_) < 0 || mpfr_sgn(b.lo_) < 0) throw std::domain_error("Interval product of signed intervals");
    Interval r(std::max(a.precision_, b.precision_));
    mpfr_mul(r.lo_, a.lo_, b.lo_, MPFR_RNDD);
    mpfr_mul(r.hi_, a.hi_, b.hi_, MPFR_RNDU);
    return r;
}

Interval operator/(const Interval& a, const Interval& b) { return a * b.reciprocal(); }

bool Interval::certainly_less(const Interval& other) const { return mpfr_less_p(hi_, other.lo_) != 0; }

bool Interval::contains_zero() const { return mpfr_sgn(lo_) <= 0 && mpfr_sgn(hi_) >= 0; }

double Interval::midpoint() const { return 0.5 * (mpfr_get_d(lo_, MPFR_RNDN) + mpfr_get_d(hi_, MPFR_RNDN)); }

double Interval::width() const
{
    mpfr_t w;
    mpfr_init2(w, precision_);
    mpfr_sub(w, hi_, lo_, MPFR_RNDU);
    const double out = mpfr_get_d(w, MPFR_RNDU);
    mpfr_clear(w);
    return out;
}

namespace {

std::string format(const __mpfr_struct* x, int digits, bool upward)
{
    char* buffer = nullptr;
    if (upward)
        mpfr_asprintf(&buffer, "%.*RUe", digits, x);
    else
        mpfr_asprintf(&buffer, "%.*RDe", digits, x);
    std::string s(buffer);
    mpfr_free_str(buffer);
    return s;
}

}  // namespace

std::string Interval::lo_string(int digits) const { return format(lo_, digits, false); }
std::string Interval::hi_string(int digits) const { return format(hi_, digits, true); }

PowerProduct PowerProduct::of(const Rational& value)
{
    if (value < 0) throw std::domain_error("PowerProduct: negative base");
    PowerProduct p;
    p.factors_.push_back({value, Rational(1)});
    p.simplify();
    return p;
}

PowerProduct PowerProduct::of(const MeasureValue& measure)
{
    PowerProduct p;
    p.factors_.push_back({measure.q(), Rational(1)});
    p.factors_.push_back({measure.g(), Rational(1, 2)});
    p.simplify();
    return p;
}

PowerProduct& PowerProduct::operator*=(const PowerProduct& other)
{
    factors_.insert(factors_.end(), other.factors_.begin(), other.factors_.end());
    simplify();
    return *this;
}

PowerProduct PowerProduct::pow(const Rational& exponent) const
{
    PowerProduct p = *this;
    for (auto& f : p.factors_) f.exponent *= exponent;
    p.simplify();
    return p;
}

bool PowerProduct::is_zero() const
{
    return factors_.size() == 1 && factors_[0].base == 0;
}

void PowerProduct::simplify()
{
    for (const auto& f : factors_)
        if (f.base == 0) {
            if (f.exponent < 0) throw std::domain_error("PowerProduct: zero raised to a negative power");
            if (f.exponent > 0) {
                factors_ = {{Rational(0), Rational(1)}};
                return;
            }
        }
    std::sort(factors_.begin(), factors_.end(), [](const PowerFactor& a, const PowerFactor& b) { return a.base < b.base; });
    std::vector<PowerFactor> merged;
    for (const auto& f : factors_) {
        if (!merged.empty() && merged.back().base == f.base)
            merged.back().exponent += f.exponent;
        else
            merged.push_back(f);
    }
    std::erase_if(merged, [](const PowerFactor& f) { return f.base == 1 || f.exponent == 0; });
    factors_ = std::move(merged);
}

std::optional<Rational> PowerProduct::as_rational() const
{
    Rational value = 1;
    for (const auto& f : factors_) {
        if (f.exponent.get_den() != 1) return std::nullopt;
        if (!f.exponent.get_num().fits_slong_p()) return std::nullopt;
        value *= power(f.base, f.exponent.get_num().get_si());
    }
    return value;
}

Interval PowerProduct::enclose(mpfr_prec_t precision) const
{
    Interval acc = Interval::from_rational(Rational(1), precision);
    for (const auto& f : factors_) {
        if (!f.exponent.get_num().fits_slong_p() || !f.exponent.get_den().fits_ulong_p())
            throw std::domain_error("PowerProduct::enclose: exponent out of range");
        const long p = f.exponent.get_num().get_si();
        const unsigned long q = f.exponent.get_den().get_ui();
        Interval term = Interval::from_rational(f.base, precision).pow(static_cast<unsigned long>(p < 0 ? -p : p));
        if (q != 1) term = term.root(q);
        if (p < 0) term = term.reciprocal();
        acc = acc * term;
    }
    return acc;
}

std::optional<std::strong_ordering> compare_exact(const PowerProduct& a, const PowerProduct& b, std::size_t bit_budget)
{
    if (a.is_zero() || b.is_zero()) {
        if (a.is_zero() && b.is_zero()) return std::strong_ordering::equal;
        return a.is_zero() ? std::strong_ordering::less : std::strong_ordering::greater;
    }
    const PowerProduct ratio = a * b.reciprocal();
    Integer lcm = 1;
    for (const auto& f : ratio.factors())
        mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), f.exponent.get_den_mpz_t());

    double bits = 0;
    for (const auto& f : ratio.factors()) {
        Rational e = f.exponent * Rational(lcm);
        const double size = static_cast<double>(mpz_sizeinbase(f.base.get_num_mpz_t(), 2) +
                                                mpz_sizeinbase(f.base.get_den_mpz_t(), 2));
        bits += std::abs(e.get_d()) * size;
    }
    if (bits > static_cast<double>(bit_budget)) return std::nullopt;

    const PowerProduct raised = ratio.pow(Rational(lcm));
    const std::optional<Rational> value = raised.as_rational();
    if (!value) return std::nullopt;
    const int c = cmp(*value, Rational(1));
    return c < 0 ? std::strong_ordering::less : c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal;
}

Interval ValueExpr::enclose(mpfr_prec_t precision) const
{
    Interval acc = Interval::from_rational(Rational(0), precision);
    for (const auto& t : terms) acc = acc + t.enclose(precision);
    return acc;
}

}  // namespace blgeo
