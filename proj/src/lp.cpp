#include "blgeo/lp.hpp"

#include <limits>
#include <stdexcept>

namespace blgeo {

namespace {

constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();

class Tableau {
public:
    Tableau(std::vector<std::vector<Rational>> rows, Vector rhs, std::vector<std::size_t> basis)
        : rows_(std::move(rows)), rhs_(std::move(rhs)), basis_(std::move(basis))
    {
    }

    std::size_t row_count() const { return rows_.size(); }
    std::size_t col_count() const { return rows_.empty() ? 0 : rows_[0].size(); }
    const std::vector<std::size_t>& basis() const { return basis_; }
    const Vector& rhs() const { return rhs_; }
    const Rational& at(std::size_t r, std::size_t c) const { return rows_[r][c]; }

    void set_costs(const Vector& costs)
    {
        reduced_ = costs;
        for (std::size_t i = 0; i < rows_.size(); ++i) {
            const Rational& cb = costs[basis_[i]];
            if (cb == 0) continue;
            for (std::size_t j = 0; j < reduced_.size(); ++j) reduced_[j] -= cb * rows_[i][j];
        }
    }

    void pivot(std::size_t p, std::size_t q)
    {
        const Rational lead = rows_[p][q];
        for (auto& x : rows_[p]) x /= lead;
        rhs_[p] /= lead;
        for (std::size_t i = 0; i < rows_.size(); ++i) {
            if (i == p || rows_[i][q] == 0) continue;
            const Rational f = rows_[i][q];
            for (std::size_t j = 0; j < rows_[i].size(); ++j)
                if (rows_[p][j] != 0) rows_[i][j] -= f * rows_[p][j];
            rhs_[i] -= f * rhs_[p];
        }
        if (!reduced_.empty() && reduced_[q] != 0) {
            const Rational f = reduced_[q];
            for (std::size_t j = 0; j < reduced_.size(); ++j)
                if (rows_[p][j] != 0) reduced_[j] -= f * rows_[p][j];
        }
        basis_[p] = q;
    }

    // Runs Bland-rule iterations over columns [0, allowed). Returns false if unbounded.
    bool optimize(std::size_t allowed)
    {
        for (;;) {
            std::size_t q = kNone;
            for (std::size_t j = 0; j < allowed; ++j)
                if (reduced_[j] < 0) {
                    q = j;
                    break;
                }
            if (q == kNone) return true;

            std::size_t p = kNone;
            Rational best;
            for (std::size_t i = 0; i < rows_.size(); ++i) {
                if (rows_[i][q] <= 0) continue;
                Rational ratio = rhs_[i] / rows_[i][q];
                if (p == kNone || ratio < best || (ratio == best && basis_[i] < basis_[p])) {
                    p = i;
                    best = ratio;
                }
            }
            if (p == kNone) return false;
            pivot(p, q);
        }
    }

    void drop_row(std::size_t r)
    {
        rows_.erase(rows_.begin() + static_cast<std::ptrdiff_t>(r));
        rhs_.erase(rhs_.begin() + static_cast<std::ptrdiff_t>(r));
        basis_.erase(basis_.begin() + static_cast<std::ptrdiff_t>(r));
    }

private:
    std::vector<std::vector<Rational>> rows_;
    Vector rhs_;
    std::vector<std::size_t> basis_;
    Vector reduced_;
};

}  // namespace

LpResult solve_lp(const LinearProgram& lp)
{
    const std::size_t n = lp.variables;
    if (lp.objective.size() != n) throw std::invalid_argument("solve_lp: objective length mismatch");
    for (const auto& c : lp.constraints)
        if (c.coefficients.size() != n) throw std::invalid_argument("solve_lp: constraint length mismatch");

    // Columns: [u (n) | w (n) | slacks | artificials], x = u - w.
    const std::size_t m = lp.constraints.size();
    std::size_t slack_count = 0;
    for (const auto& c : lp.constraints)
        if (c.relation == Relation::less_equal) ++slack_count;

    std::vector<std::vector<Rational>> rows(m);
    Vector rhs(m);
    std::vector<std::size_t> basis(m, kNone);
    std::vector<bool> needs_artificial(m, false);
    std::size_t slack = 2 * n;
    std::size_t artificial_count = 0;
    for (std::size_t i = 0; i < m; ++i) {
        const auto& c = lp.constraints[i];
        const bool flip = c.rhs < 0;
        rows[i].assign(2 * n + slack_count, Rational(0));
        for (std::size_t j = 0; j < n; ++j) {
            rows[i][j] = flip ? Rational(-c.coefficients[j]) : c.coefficients[j];
            rows[i][n + j] = -rows[i][j];
        }
        rhs[i] = flip ? Rational(-c.rhs) : c.rhs;
        if (c.relation == Relation::less_equal) {
            rows[i][slack] = flip ? -1 : 1;
            if (!flip) basis[i] = slack;
            ++slack;
        }
        if (basis[i] == kNone) {
            needs_artificial[i] = true;
            ++artificial_count;
        }
    }
    const std::size_t structural = 2 * n + slack_count;
    std::size_t art = structural;
    for (std::size_t i = 0; i < m; ++i) {
        rows[i].resize(structural + artificial_count, Rational(0));
        if (needs_artificial[i]) {
            rows[i][art] = 1;
            basis[i] = art++;
        }
    }

    Tableau t(std::move(rows), std::move(rhs), std::move(basis));
    const std::size_t total = structural + artificial_count;

    if (artificial_count > 0) {
        Vector phase1(total, Rational(0));
        for (std::size_t j = structural; j < total; ++j) phase1[j] = 1;
        t.set_costs(phase1);
        t.optimize(total);  // bounded below by zero
        Rational infeasibility = 0;
        for (std::size_t i = 0; i < t.row_count(); ++i)
            if (t.basis()[i] >= structural) infeasibility += t.rhs()[i];
        if (infeasibility > 0) return {LpStatus::infeasible, {}, {}};

        // Drive remaining (zero-valued) artificials out of the basis.
        for (std::size_t i = 0; i < t.row_count();) {
            if (t.basis()[i] < structural) {
                ++i;
                continue;
            }
            std::size_t q = kNone;
            for (std::size_t j = 0; j < structural; ++j)
                if (t.at(i, j) != 0) {
                    q = j;
                    break;
                }
            if (q == kNone) {
                t.drop_row(i);  // redundant equality
            } else {
                t.pivot(i, q);
                ++i;
            }
        }
    }

    Vector costs(total, Rational(0));
    for (std::size_t j = 0; j < n; ++j) {
        costs[j] = lp.objective[j];
        costs[n + j] = -lp.objective[j];
    }
    t.set_costs(costs);
    if (!t.optimize(structural)) return {LpStatus::unbounded, {}, {}};

    Vector values(total, Rational(0));
    for (std::size_t i = 0; i < t.row_count(); ++i) values[t.basis()[i]] = t.rhs()[i];
    LpResult res;
    res.status = LpStatus::optimal;
    res.point.resize(n);
    for (std::size_t j = 0; j < n; ++j) res.point[j] = values[j] - values[n + j];
    res.value = dot(lp.objective, res.point);
    return res;
}

const char* to_string(LpStatus status)
{
    switch (status) {
        case LpStatus::optimal: return "optimal";
        case LpStatus::infeasible: return "infeasible";
        case LpStatus::unbounded: return "unbounded";
    }
    return "unknown";
}

}  // namespace blgeo
