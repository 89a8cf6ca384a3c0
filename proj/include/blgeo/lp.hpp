#pragma once

// Exact two-phase simplex over the rationals.

#include "blgeo/rational.hpp"

#include <vector>

namespace blgeo {

enum class Relation { less_equal, equal };

struct LinearConstraint {
    Vector coefficients;
    Relation relation = Relation::less_equal;
    Rational rhs;
};

/// minimize <objective, x> over free variables x subject to the constraints.
struct LinearProgram {
    std::size_t variables = 0;
    Vector objective;
    std::vector<LinearConstraint> constraints;

    void add(Vector coefficients, Relation relation, Rational rhs)
    {
        constraints.push_back({std::move(coefficients), relation, std::move(rhs)});
    }
};

enum class LpStatus { optimal, infeasible, unbounded };

struct LpResult {
    LpStatus status = LpStatus::infeasible;
    Rational value;  // meaningful when optimal
    Vector point;    // a basic optimal solution when optimal
};

/// Bland's rule throughout, so the method terminates without perturbation.
/// Throws std::invalid_argument on inconsistent dimensions.
LpResult solve_lp(const LinearProgram& lp);

const char* to_string(LpStatus status);

}  // namespace blgeo
