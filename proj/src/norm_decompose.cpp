#include "blgeo/norm_decompose.hpp"

#include "blgeo/errors.hpp"
#include "blgeo/lp.hpp"

#include <stdexcept>

namespace blgeo {

NormDecomposition norm_decompose(const HPolytope& k, const std::vector<Subspace>& subspaces, const Vector& z)
{
    const std::size_t n = k.dim();
    if (z.size() != n) throw std::invalid_argument("norm_decompose: point length mismatch");
    if (!k.has_origin_in_interior()) throw OriginNotInterior();

    // Variable layout per subspace i: [t_i (dim E_i) | lambda_i].
    std::vector<std::size_t> offset;
    std::size_t vars = 0;
    for (const auto& e : subspaces) {
        if (e.ambient_dim() != n) throw std::invalid_argument("norm_decompose: ambient dimension mismatch");
        offset.push_back(vars);
        vars += e.dim() + 1;
    }

    LinearProgram lp;
    lp.variables = vars;
    lp.objective = zero_vector(vars);
    for (std::size_t i = 0; i < subspaces.size(); ++i) {
        const Subspace& e = subspaces[i];
        const std::size_t lambda = offset[i] + e.dim();
        lp.objective[lambda] = 1;
        for (const auto& h : k.inequalities()) {
            Vector row = zero_vector(vars);
            for (std::size_t j = 0; j < e.dim(); ++j) row[offset[i] + j] = dot(h.normal, e.basis()[j]);
            row[lambda] = -h.offset;
            lp.add(std::move(row), Relation::less_equal, Rational(0));
        }
    }
    for (std::size_t r = 0; r < n; ++r) {
        Vector row = zero_vector(vars);
        for (std::size_t i = 0; i < subspaces.size(); ++i)
            for (std::size_t j = 0; j < subspaces[i].dim(); ++j) row[offset[i] + j] = subspaces[i].basis()[j][r];
        lp.add(std::move(row), Relation::equal, z[r]);
    }

    const LpResult res = solve_lp(lp);
    if (res.status == LpStatus::infeasible)
        throw std::invalid_argument("norm_decompose: point is not in the span of the subspaces");
    if (res.status != LpStatus::optimal) throw std::logic_error("norm_decompose: LP unexpectedly unbounded");

    NormDecomposition out;
    out.value = res.value;
    for (std::size_t i = 0; i < subspaces.size(); ++i) {
        const Subspace& e = subspaces[i];
        Vector t(res.point.begin() + static_cast<std::ptrdiff_t>(offset[i]),
                 res.point.begin() + static_cast<std::ptrdiff_t>(offset[i] + e.dim()));
        out.parts.push_back(e.lift(t));
    }
    return out;
}

}  // namespace blgeo
