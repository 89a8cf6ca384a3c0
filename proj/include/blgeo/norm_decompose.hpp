#pragma once

#include "blgeo/polytope.hpp"
#include "blgeo/subspace.hpp"

#include <vector>

namespace blgeo {

struct NormDecomposition {
    Rational value;
    std::vector<Vector> parts;  // y_i in E_i with sum_i y_i = z
};

/// inf { sum_i ||y_i||_K : z = sum_i y_i, y_i in E_i }, attained, as an exact LP:
/// minimize sum_i lambda_i subject to <a_m, y_i> <= lambda_i b_m for every facet m.
/// Throws OriginNotInterior, or std::invalid_argument when z is outside the span of the E_i.
NormDecomposition norm_decompose(const HPolytope& k, const std::vector<Subspace>& subspaces, const Vector& z);

}  // namespace blgeo
