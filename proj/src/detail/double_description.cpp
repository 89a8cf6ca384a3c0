#include "detail/double_description.hpp"

#include "blgeo/errors.hpp"
#include "blgeo/linalg.hpp"

#include <boost/dynamic_bitset.hpp>

#include <algorithm>

namespace blgeo::detail {

namespace {

using Incidence = boost::dynamic_bitset<>;

struct Ray {
    Vector direction;
    Incidence zeros;  // processed constraints tight at this ray
};

}  // namespace

VertexEnumeration enumerate_vertices(const std::vector<Vector>& normals, const Vector& offsets, std::size_t dim)
{
    const std::size_t d = dim + 1;
    const std::size_t m = normals.size();

    // Row i < m: (a_i, -b_i); row m: (0, ..., 0, -1).
    std::vector<Vector> rows;
    rows.reserve(m + 1);
    for (std::size_t i = 0; i < m; ++i) {
        Vector r = normals[i];
        r.push_back(-offsets[i]);
        rows.push_back(primitive_direction(r));
    }
    Vector t_row = zero_vector(d);
    t_row[dim] = -1;
    rows.push_back(t_row);

    std::vector<Vector> ordered = {rows[m]};
    for (std::size_t i = 0; i < m; ++i) ordered.push_back(rows[i]);
    std::vector<std::size_t> initial;
    for (auto k : independent_subset(ordered, d)) initial.push_back(k == 0 ? m : k - 1);
    if (initial.size() < d) throw UnboundedPolytope();

    std::vector<Vector> initial_rows;
    for (auto i : initial) initial_rows.push_back(rows[i]);
    const Matrix inv = inverse(Matrix::from_rows(initial_rows, d));

    const std::size_t total = m + 1;
    std::vector<Ray> rays;
    for (std::size_t j = 0; j < d; ++j) {
        Ray r{primitive_direction(scale(Rational(-1), inv.column(j))), Incidence(total)};
        for (std::size_t k = 0; k < d; ++k)
            if (k != j) r.zeros.set(initial[k]);
        rays.push_back(std::move(r));
    }

    std::vector<bool> processed(total, false);
    for (auto i : initial) processed[i] = true;

    for (std::size_t row = 0; row < total; ++row) {
        if (processed[row]) continue;
        processed[row] = true;
        const Vector& a = rows[row];

        std::vector<Rational> value(rays.size());
        std::vector<std::size_t> pos, neg;
        std::vector<Ray> next;
        for (std::size_t k = 0; k < rays.size(); ++k) {
            value[k] = dot(a, rays[k].direction);
            if (value[k] > 0) {
                pos.push_back(k);
            } else {
                if (value[k] == 0) rays[k].zeros.set(row);
                if (value[k] < 0) neg.push_back(k);
            }
        }
        if (pos.empty()) continue;

        for (auto p : pos)
            for (auto q : neg) {
                Incidence common = rays[p].zeros & rays[q].zeros;
                if (common.count() + 2 < d) continue;
                bool adjacent = true;
                for (std::size_t k = 0; k < rays.size() && adjacent; ++k) {
                    if (k == p || k == q) continue;
                    if (common.is_subset_of(rays[k].zeros)) adjacent = false;
                }
                if (!adjacent) continue;
                // value[p] > 0 > value[q]; the combination is tight on `row`.
                Vector dir = add(scale(value[p], rays[q].direction), scale(Rational(-value[q]), rays[p].direction));
                common.set(row);
                next.push_back({primitive_direction(dir), std::move(common)});
            }
        for (std::size_t k = 0; k < rays.size(); ++k)
            if (value[k] <= 0) next.push_back(std::move(rays[k]));
        rays = std::move(next);
    }

    VertexEnumeration out;
    for (const auto& r : rays) {
        const Rational& t = r.direction[dim];
        if (t == 0) {
            ++out.recession_rays;
            continue;
        }
        Vector v(r.direction.begin(), r.direction.begin() + static_cast<std::ptrdiff_t>(dim));
        for (auto& x : v) x /= t;
        out.vertices.push_back(std::move(v));
    }
    std::sort(out.vertices.begin(), out.vertices.end());
    out.vertices.erase(std::unique(out.vertices.begin(), out.vertices.end()), out.vertices.end());
    return out;
}

}  // namespace blgeo::detail
