#include "blgeo/verify.hpp"

#include "blgeo/errors.hpp"

#include <stdexcept>

namespace blgeo {

namespace {

// Collapses a sum of terms that are all rational into a single term.
ValueExpr collapse(ValueExpr e)
{
    if (e.is_single()) return e;
    Rational total = 0;
    for (const auto& t : e.terms) {
        auto r = t.as_rational();
        if (!r) return e;
        total += *r;
    }
    return ValueExpr::single(PowerProduct::of(total));
}

bool satisfies(Direction d, std::strong_ordering ord)
{
    return d == Direction::lhs_ge_rhs ? ord != std::strong_ordering::less : ord != std::strong_ordering::greater;
}

double relative_midpoint_gap(const Interval& a, const Interval& b)
{
    const mpfr_prec_t prec = a.precision();
    mpfr_t ma, mb, diff;
    mpfr_inits2(prec, ma, mb, diff, static_cast<mpfr_ptr>(nullptr));
    mpfr_add(ma, a.lo(), a.hi(), MPFR_RNDN);
    mpfr_div_2ui(ma, ma, 1, MPFR_RNDN);
    mpfr_add(mb, b.lo(), b.hi(), MPFR_RNDN);
    mpfr_div_2ui(mb, mb, 1, MPFR_RNDN);
    mpfr_sub(diff, ma, mb, MPFR_RNDN);
    mpfr_abs(diff, diff, MPFR_RNDN);
    double gap = mpfr_zero_p(mb) ? mpfr_get_d(diff, MPFR_RNDN) : mpfr_get_d(diff, MPFR_RNDN) / mpfr_get_d(mb, MPFR_RNDN);
    mpfr_clears(ma, mb, diff, static_cast<mpfr_ptr>(nullptr));
    return gap;
}

std::vector<Subspace> coordinate_hyperplanes(std::size_t n)
{
    std::vector<Subspace> out;
    for (std::size_t i = 0; i < n; ++i) out.push_back(orthogonal_complement(Subspace::span(n, {unit_vector(n, i)})));
    return out;
}

void require_full_dimensional(const VPolytope& k)
{
    const std::size_t a = k.affine_dimension();
    if (a != k.dim()) throw NotFullDimensional(a, k.dim());
}

}  // namespace

InequalityReport compare_sides(std::string name, Direction direction, ValueExpr lhs, ValueExpr rhs)
{
    InequalityReport r;
    r.name = std::move(name);
    r.direction = direction;
    r.lhs = collapse(std::move(lhs));
    r.rhs = collapse(std::move(rhs));

    const Interval rhs_box = r.rhs.enclose();
    r.ratio = rhs_box.contains_zero() ? r.lhs.enclose() : r.lhs.enclose() / rhs_box;

    if (r.lhs.is_single() && r.rhs.is_single()) {
        if (auto ord = compare_exact(r.lhs.terms[0], r.rhs.terms[0])) {
            r.holds = satisfies(direction, *ord);
            r.equality = *ord == std::strong_ordering::equal ? EqualityChannel::exact_yes : EqualityChannel::exact_no;
            return r;
        }
        r.notes.push_back("exact comparison exceeded the bit budget; using intervals");
    }

    for (mpfr_prec_t prec : {256, 512, 1024}) {
        const Interval a = r.lhs.enclose(prec);
        const Interval b = r.rhs.enclose(prec);
        if (a.certainly_less(b)) {
            r.holds = satisfies(direction, std::strong_ordering::less);
            r.equality = EqualityChannel::exact_no;
            return r;
        }
        if (b.certainly_less(a)) {
            r.holds = satisfies(direction, std::strong_ordering::greater);
            r.equality = EqualityChannel::exact_no;
            return r;
        }
        if (prec == 1024) {
            r.holds = true;
            r.equality = relative_midpoint_gap(a, b) <= kEqualityTolerance ? EqualityChannel::within_tolerance
                                                                            : EqualityChannel::undecided_interval;
        }
    }
    return r;
}

InequalityReport verify_loomis_whitney(const VPolytope& k)
{
    const std::size_t n = k.dim();
    if (n < 2) throw std::invalid_argument("verify_loomis_whitney: dimension must be at least 2");
    require_full_dimensional(k);
    const PowerProduct lhs = PowerProduct::of(power(volume(k), static_cast<long>(n - 1)));
    PowerProduct rhs;
    for (const auto& e : coordinate_hyperplanes(n)) rhs *= PowerProduct::of(project(k, e).measure);
    return compare_sides("loomis-whitney", Direction::lhs_le_rhs, ValueExpr::single(lhs), ValueExpr::single(rhs));
}

InequalityReport verify_bollobas_thomason(const VPolytope& k, const UniformCover& cover)
{
    const CoverValidation v = validate_cover(cover);
    if (!v.valid) throw std::invalid_argument("verify_bollobas_thomason: invalid cover: " + v.reason);
    if (cover.n != k.dim()) throw std::invalid_argument("verify_bollobas_thomason: cover and body dimensions differ");
    require_full_dimensional(k);
    const PowerProduct lhs = PowerProduct::of(power(volume(k), static_cast<long>(cover.s)));
    PowerProduct rhs;
    for (const auto& sigma : cover.sets) rhs *= PowerProduct::of(project(k, coordinate_subspace(cover.n, sigma)).measure);
    return compare_sides("bollobas-thomason", Direction::lhs_le_rhs, ValueExpr::single(lhs), ValueExpr::single(rhs));
}

InequalityReport verify_meyer(const HPolytope& k)
{
    const std::size_t n = k.dim();
    if (n < 2) throw std::invalid_argument("verify_meyer: dimension must be at least 2");
    if (!k.has_origin_in_interior()) throw OriginNotInterior();
    const PowerProduct lhs = PowerProduct::of(power(volume(k), static_cast<long>(n - 1)));
    PowerProduct rhs = PowerProduct::of(factorial(static_cast<unsigned>(n)) / power(Rational(static_cast<long>(n)), static_cast<long>(n)));
    for (const auto& e : coordinate_hyperplanes(n)) rhs *= PowerProduct::of(section(k, e).measure);
    return compare_sides("meyer", Direction::lhs_ge_rhs, ValueExpr::single(lhs), ValueExpr::single(rhs));
}

InequalityReport verify_liakopoulos(const HPolytope& k, const BLDatum& d)
{
    if (d.ambient_dim() != k.dim()) throw std::invalid_argument("verify_liakopoulos: datum and body dimensions differ");
    if (!k.has_origin_in_interior()) throw OriginNotInterior();
    if (!validate_datum(d).valid) throw std::invalid_argument("verify_liakopoulos: datum does not satisfy sum c_i P_i = I_n");
    const std::size_t n = k.dim();
    const PowerProduct lhs = PowerProduct::of(volume(k));
    PowerProduct rhs = PowerProduct::of(Rational(1) / factorial(static_cast<unsigned>(n)));
    for (const auto& entry : d.entries()) {
        const auto di = static_cast<unsigned>(entry.subspace.dim());
        rhs *= PowerProduct::of(factorial(di)).pow(entry.weight);
        rhs *= PowerProduct::of(section(k, entry.subspace).measure).pow(entry.weight);
    }
    return compare_sides("liakopoulos", Direction::lhs_ge_rhs, ValueExpr::single(lhs), ValueExpr::single(rhs));
}

std::optional<std::pair<Rational, Vector>> find_homothety(const VPolytope& x, const VPolytope& y)
{
    if (x.dim() != y.dim() || x.vertices().size() != y.vertices().size()) return std::nullopt;
    const std::size_t n = x.dim();
    // Lexicographic order is preserved by positive dilation and translation,
    // so vertex lists must correspond index by index.
    std::size_t axis = n;
    Rational x_width, y_width;
    for (std::size_t i = 0; i < n && axis == n; ++i) {
        Rational xmin = x.vertices()[0][i], xmax = xmin, ymin = y.vertices()[0][i], ymax = ymin;
        for (const auto& v : x.vertices()) {
            if (v[i] < xmin) xmin = v[i];
            if (v[i] > xmax) xmax = v[i];
        }
        for (const auto& v : y.vertices()) {
            if (v[i] < ymin) ymin = v[i];
            if (v[i] > ymax) ymax = v[i];
        }
        if (xmax > xmin) {
            axis = i;
            x_width = xmax - xmin;
            y_width = ymax - ymin;
        }
    }
    if (axis == n || y_width <= 0) return std::nullopt;
    const Rational lambda = y_width / x_width;
    const Vector z = subtract(y.vertices()[0], scale(lambda, x.vertices()[0]));
    for (std::size_t i = 0; i < x.vertices().size(); ++i)
        if (add(scale(lambda, x.vertices()[i]), z) != y.vertices()[i]) return std::nullopt;
    return std::make_pair(lambda, z);
}

InequalityReport verify_brunn_minkowski(const VPolytope& x, const VPolytope& y, const Rational& alpha,
                                        const Rational& beta)
{
    if (x.dim() != y.dim()) throw std::invalid_argument("verify_brunn_minkowski: dimension mismatch");
    if (alpha <= 0 || beta <= 0) throw std::invalid_argument("verify_brunn_minkowski: alpha and beta must be positive");
    require_full_dimensional(x);
    require_full_dimensional(y);
    const Rational inv_n(1, static_cast<unsigned long>(x.dim()));

    const VPolytope combo = minkowski_combination({{alpha, x}, {beta, y}});
    const ValueExpr lhs = ValueExpr::single(PowerProduct::of(volume(combo)).pow(inv_n));
    ValueExpr rhs;
    rhs.terms.push_back(PowerProduct::of(alpha) * PowerProduct::of(volume(x)).pow(inv_n));
    rhs.terms.push_back(PowerProduct::of(beta) * PowerProduct::of(volume(y)).pow(inv_n));

    InequalityReport r = compare_sides("brunn-minkowski", Direction::lhs_ge_rhs, lhs, rhs);
    if (r.equality != EqualityChannel::exact_yes && r.equality != EqualityChannel::exact_no) {
        if (auto h = find_homothety(x, y)) {
            r.equality = EqualityChannel::exact_yes;
            r.holds = true;
            r.notes.push_back("Y = " + to_string(h->first) + " X + " + to_string(h->second));
        }
    }
    return r;
}

InequalityReport verify_rbl_indicators(const HPolytope& k, const BLDatum& d, Execution exec)
{
    if (d.ambient_dim() != k.dim()) throw std::invalid_argument("verify_rbl_indicators: datum and body dimensions differ");
    if (!k.has_origin_in_interior()) throw OriginNotInterior();
    if (!validate_datum(d).valid) throw std::invalid_argument("verify_rbl_indicators: datum does not satisfy sum c_i P_i = I_n");

    std::vector<MinkowskiTerm> terms;
    PowerProduct rhs;
    for (const auto& entry : d.entries()) {
        const SectionResult s = section(k, entry.subspace);
        std::vector<Vector> lifted;
        const VPolytope v = vertices_of(s.coords);
        for (const auto& t : v.vertices()) lifted.push_back(entry.subspace.lift(t));
        terms.emplace_back(entry.weight, VPolytope::hull(k.dim(), std::move(lifted)));
        rhs *= PowerProduct::of(s.measure).pow(entry.weight);
    }
    const VPolytope combo = minkowski_combination(terms, exec);
    const PowerProduct lhs = PowerProduct::of(volume(combo, exec));
    return compare_sides("rbl-indicators", Direction::lhs_ge_rhs, ValueExpr::single(lhs), ValueExpr::single(rhs));
}

const char* to_string(EqualityChannel channel)
{
    switch (channel) {
        case EqualityChannel::exact_yes: return "exact-yes";
        case EqualityChannel::exact_no: return "exact-no";
        case EqualityChannel::within_tolerance: return "within-tolerance";
        case EqualityChannel::undecided_interval: return "undecided-interval";
    }
    return "unknown";
}

const char* to_string(Direction direction) { return direction == Direction::lhs_ge_rhs ? ">=" : "<="; }

}  // namespace blgeo
