#include "blgeo/polytope.hpp"

#include "blgeo/errors.hpp"
#include "blgeo/linalg.hpp"
#include "blgeo/lp.hpp"
#include "detail/double_description.hpp"

#include <boost/dynamic_bitset.hpp>

#include <algorithm>
#include <set>
#include <stdexcept>

namespace blgeo {

namespace {

using Incidence = boost::dynamic_bitset<>;

void check_dimension(std::size_t dim)
{
    if (dim == 0) throw std::invalid_argument("polytope dimension must be at least 1");
    if (dim > kMaxDimension)
        throw GuardExceeded("dimension " + std::to_string(dim) + " exceeds the supported maximum " +
                            std::to_string(kMaxDimension));
}

void check_hull_input(std::size_t count)
{
    if (count > kMaxHullInput)
        throw GuardExceeded("representation with " + std::to_string(count) + " elements exceeds the limit " +
                            std::to_string(kMaxHullInput));
}

std::size_t affine_dimension(const std::vector<Vector>& points, std::size_t dim)
{
    if (points.size() <= 1) return 0;
    std::vector<Vector> diffs;
    for (std::size_t i = 1; i < points.size(); ++i) diffs.push_back(subtract(points[i], points[0]));
    return rank(Matrix::from_rows(diffs, dim));
}

Vector centroid_of(const std::vector<Vector>& points, std::size_t dim)
{
    Vector c = zero_vector(dim);
    for (const auto& p : points)
        for (std::size_t i = 0; i < dim; ++i) c[i] += p[i];
    const Rational count(static_cast<long>(points.size()));
    for (auto& x : c) x /= count;
    return c;
}

Halfspace normalized(const Vector& normal, const Rational& offset)
{
    Vector prim = primitive_direction(normal);
    std::size_t k = 0;
    while (normal[k] == 0) ++k;
    const Rational factor = prim[k] / normal[k];
    return {std::move(prim), offset * factor};
}

// Facets of a full-dimensional point set, via the polar around the centroid.
std::vector<Halfspace> facet_inequalities(const std::vector<Vector>& points, std::size_t dim)
{
    const Vector c = centroid_of(points, dim);
    std::vector<Vector> polar_normals;
    polar_normals.reserve(points.size());
    for (const auto& p : points) polar_normals.push_back(subtract(p, c));
    const Vector ones(points.size(), Rational(1));
    const auto polar = detail::enumerate_vertices(polar_normals, ones, dim);
    if (polar.recession_rays > 0) throw NotFullDimensional(affine_dimension(points, dim), dim);

    std::vector<Halfspace> facets;
    for (const auto& y : polar.vertices) facets.push_back(normalized(y, Rational(1) + dot(y, c)));
    std::sort(facets.begin(), facets.end(), [](const Halfspace& a, const Halfspace& b) {
        return a.normal != b.normal ? a.normal < b.normal : a.offset < b.offset;
    });
    return facets;
}

// Points among `points` (full-dimensional set) that are vertices of the hull.
std::vector<Vector> extreme_points_full(const std::vector<Vector>& points, std::size_t dim)
{
    const auto facets = facet_inequalities(points, dim);
    std::vector<Vector> out;
    for (const auto& p : points) {
        std::vector<Vector> tight;
        for (const auto& f : facets)
            if (dot(f.normal, p) == f.offset) tight.push_back(f.normal);
        if (tight.size() >= dim && rank(Matrix::from_rows(tight, dim)) == dim) out.push_back(p);
    }
    return out;
}

std::vector<Vector> extreme_points(std::vector<Vector> points, std::size_t dim)
{
    std::sort(points.begin(), points.end());
    points.erase(std::unique(points.begin(), points.end()), points.end());
    check_hull_input(points.size());
    if (points.size() <= 1) return points;

    std::vector<Vector> diffs;
    for (std::size_t i = 1; i < points.size(); ++i) diffs.push_back(subtract(points[i], points[0]));
    const auto independent = independent_subset(diffs, dim);
    const std::size_t k = independent.size();
    if (k == dim) return extreme_points_full(points, dim);

    // Work in affine coordinates p = p0 + D t of the hull's affine span.
    std::vector<Vector> directions;
    for (auto i : independent) directions.push_back(diffs[i]);
    const Matrix d = Matrix::from_columns(directions, dim);
    std::vector<Vector> local;
    local.reserve(points.size());
    for (const auto& p : points) local.push_back(*solve(d, subtract(p, points[0])));
    std::vector<Vector> local_extreme = extreme_points_full(local, k);

    std::vector<Vector> out;
    for (const auto& t : local_extreme) out.push_back(add(points[0], d * t));
    std::sort(out.begin(), out.end());
    return out;
}

struct FaceContext {
    const std::vector<Vector>& vertices;
    const std::vector<Incidence>& tight;  // per inequality, the vertices on its hyperplane
    std::size_t dim;
};

std::size_t affine_dimension(const FaceContext& ctx, const Incidence& face)
{
    std::vector<Vector> pts;
    for (auto i = face.find_first(); i != Incidence::npos; i = face.find_next(i)) pts.push_back(ctx.vertices[i]);
    return affine_dimension(pts, ctx.dim);
}

// Pulling triangulation of a face of dimension k; each simplex is a list of k+1 vertex indices.
void triangulate_face(const FaceContext& ctx, const Incidence& face, std::size_t k, std::vector<std::size_t>& prefix,
                      std::vector<std::vector<std::size_t>>& out)
{
    const std::size_t apex = face.find_first();
    if (k == 0) {
        prefix.push_back(apex);
        out.push_back(prefix);
        prefix.pop_back();
        return;
    }
    std::set<Incidence> seen;
    for (const auto& t : ctx.tight) {
        Incidence sub = face & t;
        if (sub == face || sub.none() || sub.test(apex) || seen.count(sub)) continue;
        if (affine_dimension(ctx, sub) != k - 1) continue;
        seen.insert(sub);
        prefix.push_back(apex);
        triangulate_face(ctx, sub, k - 1, prefix, out);
        prefix.pop_back();
    }
}

Rational fan_volume(const std::vector<Vector>& vertices, const std::vector<Halfspace>& inequalities, std::size_t dim,
                    Execution exec)
{
    const std::size_t nv = vertices.size();
    std::vector<Incidence> tight;
    tight.reserve(inequalities.size());
    for (const auto& h : inequalities) {
        Incidence s(nv);
        for (std::size_t v = 0; v < nv; ++v)
            if (dot(h.normal, vertices[v]) == h.offset) s.set(v);
        tight.push_back(std::move(s));
    }
    const FaceContext ctx{vertices, tight, dim};

    std::vector<Incidence> facets;
    {
        std::set<Incidence> seen;
        for (const auto& s : tight) {
            if (s.none() || seen.count(s)) continue;
            if (affine_dimension(ctx, s) != dim - 1) continue;
            seen.insert(s);
            facets.push_back(s);
        }
    }

    const Vector c = centroid_of(vertices, dim);
    std::vector<Rational> contribution(facets.size());

    auto facet_volume = [&](std::size_t f) {
        std::vector<std::vector<std::size_t>> simplices;
        std::vector<std::size_t> prefix;
        triangulate_face(ctx, facets[f], dim - 1, prefix, simplices);
        Rational total = 0;
        for (const auto& simplex : simplices) {
            std::vector<Vector> rows;
            for (auto v : simplex) rows.push_back(subtract(vertices[v], c));
            total += abs(determinant(Matrix::from_rows(rows, dim)));
        }
        contribution[f] = total;
    };

    const auto count = static_cast<long>(facets.size());
    if (exec == Execution::parallel) {
#pragma omp parallel for schedule(dynamic)
        for (long f = 0; f < count; ++f) facet_volume(static_cast<std::size_t>(f));
    } else {
        for (long f = 0; f < count; ++f) facet_volume(static_cast<std::size_t>(f));
    }

    Rational sum = 0;
    for (const auto& x : contribution) sum += x;
    return sum / factorial(static_cast<unsigned>(dim));
}

void require_orthogonal_spanning(const std::vector<Subspace>& parts, std::size_t dim, const char* what)
{
    std::vector<Subspace> nontrivial;
    for (const auto& p : parts) {
        if (p.ambient_dim() != dim) throw std::invalid_argument(std::string(what) + ": ambient dimension mismatch");
        if (!p.is_trivial()) nontrivial.push_back(p);
    }
    for (std::size_t i = 0; i < nontrivial.size(); ++i)
        for (std::size_t j = i + 1; j < nontrivial.size(); ++j)
            if (!are_orthogonal(nontrivial[i], nontrivial[j]))
                throw std::invalid_argument(std::string(what) + ": parts are not pairwise orthogonal");
    if (!is_direct_sum_decomposition(nontrivial, dim))
        throw std::invalid_argument(std::string(what) + ": parts do not span the ambient space");
}

}  // namespace

HPolytope make_hpolytope_unchecked(std::size_t dim, std::vector<Halfspace> inequalities)
{
    return HPolytope(dim, std::move(inequalities));
}

HPolytope HPolytope::create(std::size_t dim, std::vector<Halfspace> inequalities)
{
    check_dimension(dim);
    check_hull_input(inequalities.size());
    for (const auto& h : inequalities)
        if (h.normal.size() != dim) throw std::invalid_argument("HPolytope: normal length differs from dimension");

    LinearProgram lp;
    lp.variables = dim;
    for (const auto& h : inequalities) lp.add(h.normal, Relation::less_equal, h.offset);
    for (std::size_t i = 0; i < dim; ++i)
        for (int sign : {1, -1}) {
            lp.objective = zero_vector(dim);
            lp.objective[i] = sign;
            const LpResult r = solve_lp(lp);
            if (r.status == LpStatus::infeasible) throw EmptyPolytope();
            if (r.status == LpStatus::unbounded) throw UnboundedPolytope();
        }
    return HPolytope(dim, std::move(inequalities));
}

bool HPolytope::contains(const Vector& x) const
{
    for (const auto& h : inequalities_)
        if (dot(h.normal, x) > h.offset) return false;
    return true;
}

bool HPolytope::has_origin_in_interior() const
{
    return std::all_of(inequalities_.begin(), inequalities_.end(), [](const Halfspace& h) { return h.offset > 0; });
}

VPolytope VPolytope::hull(std::size_t dim, std::vector<Vector> points)
{
    check_dimension(dim);
    if (points.empty()) throw EmptyPolytope();
    for (const auto& p : points)
        if (p.size() != dim) throw std::invalid_argument("VPolytope: point length differs from dimension");
    return VPolytope(dim, extreme_points(std::move(points), dim));
}

std::size_t VPolytope::affine_dimension() const { return blgeo::affine_dimension(vertices_, dim_); }

Vector VPolytope::centroid() const { return centroid_of(vertices_, dim_); }

VPolytope vertices_of(const HPolytope& h)
{
    std::vector<Vector> normals;
    Vector offsets;
    for (const auto& ineq : h.inequalities()) {
        normals.push_back(ineq.normal);
        offsets.push_back(ineq.offset);
    }
    auto result = detail::enumerate_vertices(normals, offsets, h.dim());
    if (result.recession_rays > 0) throw UnboundedPolytope();
    if (result.vertices.empty()) throw EmptyPolytope();
    return VPolytope::hull(h.dim(), std::move(result.vertices));
}

HPolytope facets_of(const VPolytope& v)
{
    const std::size_t k = v.affine_dimension();
    if (k != v.dim()) throw NotFullDimensional(k, v.dim());
    return make_hpolytope_unchecked(v.dim(), facet_inequalities(v.vertices(), v.dim()));
}

Rational volume(const VPolytope& p, Execution exec)
{
    const HPolytope h = facets_of(p);
    return fan_volume(p.vertices(), h.inequalities(), p.dim(), exec);
}

Rational volume(const HPolytope& p, Execution exec)
{
    const VPolytope v = vertices_of(p);
    const std::size_t k = v.affine_dimension();
    if (k != p.dim()) throw NotFullDimensional(k, p.dim());
    return fan_volume(v.vertices(), p.inequalities(), p.dim(), exec);
}

SectionResult section(const HPolytope& p, const Subspace& e)
{
    if (e.ambient_dim() != p.dim()) throw std::invalid_argument("section: ambient dimension mismatch");
    if (e.is_trivial()) throw std::invalid_argument("section: subspace must be non-trivial");
    if (!p.has_origin_in_interior()) throw OriginNotInterior();

    const std::size_t d = e.dim();
    std::vector<Halfspace> restricted;
    for (const auto& h : p.inequalities()) {
        Vector normal(d);
        for (std::size_t j = 0; j < d; ++j) normal[j] = dot(e.basis()[j], h.normal);
        if (is_zero(normal)) continue;
        restricted.push_back(normalized(normal, h.offset));
    }
    std::sort(restricted.begin(), restricted.end(), [](const Halfspace& a, const Halfspace& b) {
        return a.normal != b.normal ? a.normal < b.normal : a.offset < b.offset;
    });
    restricted.erase(std::unique(restricted.begin(), restricted.end()), restricted.end());
    HPolytope coords = make_hpolytope_unchecked(d, std::move(restricted));
    const Rational vol = volume(coords, Execution::serial);
    return {std::move(coords), MeasureValue(vol, e.gram_determinant())};
}

ProjectionResult project(const VPolytope& p, const Subspace& e)
{
    if (e.ambient_dim() != p.dim()) throw std::invalid_argument("project: ambient dimension mismatch");
    if (e.is_trivial()) throw std::invalid_argument("project: subspace must be non-trivial");
    std::vector<Vector> coords;
    for (const auto& v : p.vertices()) coords.push_back(e.coordinates(v));
    VPolytope image = VPolytope::hull(e.dim(), std::move(coords));
    if (image.affine_dimension() < e.dim()) return {std::move(image), MeasureValue()};
    const Rational vol = volume(image, Execution::serial);
    return {std::move(image), MeasureValue(vol, e.gram_determinant())};
}

Rational gauge(const HPolytope& p, const Vector& x)
{
    if (x.size() != p.dim()) throw std::invalid_argument("gauge: point length mismatch");
    if (!p.has_origin_in_interior()) throw OriginNotInterior();
    Rational best = 0;
    for (const auto& h : p.inequalities()) {
        Rational v = dot(h.normal, x) / h.offset;
        if (v > best) best = v;
    }
    return best;
}

Rational gauge(const VPolytope& p, const Vector& x) { return gauge(facets_of(p), x); }

Rational gauge_restricted(const HPolytope& p, const Subspace& e, const Vector& x)
{
    if (!e.contains(x)) throw std::invalid_argument("gauge_restricted: point is not in the subspace");
    const SectionResult s = section(p, e);
    return gauge(s.coords, e.coordinates(x));
}

VPolytope minkowski_combination(const std::vector<MinkowskiTerm>& terms, Execution exec)
{
    if (terms.empty()) throw std::invalid_argument("minkowski_combination: empty term list");
    const std::size_t dim = terms.front().second.dim();
    double tuples = 1;
    for (const auto& [c, p] : terms) {
        if (c <= 0) throw std::invalid_argument("minkowski_combination: coefficients must be positive");
        if (p.dim() != dim) throw std::invalid_argument("minkowski_combination: ambient dimension mismatch");
        tuples *= static_cast<double>(p.vertices().size());
    }
    if (tuples > static_cast<double>(kMaxMinkowskiTuples))
        throw GuardExceeded("Minkowski combination would enumerate more than 10^6 vertex tuples");

    std::vector<Vector> acc;
    for (const auto& v : terms.front().second.vertices()) acc.push_back(scale(terms.front().first, v));
    acc = VPolytope::hull(dim, std::move(acc)).vertices();

    for (std::size_t t = 1; t < terms.size(); ++t) {
        std::vector<Vector> scaled;
        for (const auto& v : terms[t].second.vertices()) scaled.push_back(scale(terms[t].first, v));
        const std::size_t nb = scaled.size();
        std::vector<Vector> sums(acc.size() * nb);
        const auto total = static_cast<long>(sums.size());
        auto fill = [&](long idx) {
            const auto i = static_cast<std::size_t>(idx) / nb;
            const auto j = static_cast<std::size_t>(idx) % nb;
            sums[static_cast<std::size_t>(idx)] = add(acc[i], scaled[j]);
        };
        if (exec == Execution::parallel) {
#pragma omp parallel for
            for (long idx = 0; idx < total; ++idx) fill(idx);
        } else {
            for (long idx = 0; idx < total; ++idx) fill(idx);
        }
        acc = VPolytope::hull(dim, std::move(sums)).vertices();
    }
    return VPolytope::hull(dim, std::move(acc));
}

VPolytope conv_of_sections(const HPolytope& p, const std::vector<Subspace>& parts)
{
    if (!p.has_origin_in_interior()) throw OriginNotInterior();
    require_orthogonal_spanning(parts, p.dim(), "conv_of_sections");
    std::vector<Vector> points;
    for (const auto& f : parts) {
        if (f.is_trivial()) continue;
        const SectionResult s = section(p, f);
        const VPolytope v = vertices_of(s.coords);
        for (const auto& t : v.vertices()) points.push_back(f.lift(t));
    }
    return VPolytope::hull(p.dim(), std::move(points));
}

VPolytope direct_sum_of_projections(const VPolytope& p, const std::vector<Subspace>& parts, Execution exec)
{
    require_orthogonal_spanning(parts, p.dim(), "direct_sum_of_projections");
    std::vector<MinkowskiTerm> terms;
    for (const auto& f : parts) {
        if (f.is_trivial()) continue;
        std::vector<Vector> projected;
        for (const auto& v : p.vertices()) projected.push_back(f.project(v));
        terms.emplace_back(Rational(1), VPolytope::hull(p.dim(), std::move(projected)));
    }
    return minkowski_combination(terms, exec);
}

VPolytope translated(const VPolytope& p, const Vector& offset)
{
    std::vector<Vector> pts;
    for (const auto& v : p.vertices()) pts.push_back(add(v, offset));
    return VPolytope::hull(p.dim(), std::move(pts));
}

VPolytope dilated(const VPolytope& p, const Rational& factor)
{
    if (factor <= 0) throw std::invalid_argument("dilated: factor must be positive");
    std::vector<Vector> pts;
    for (const auto& v : p.vertices()) pts.push_back(scale(factor, v));
    return VPolytope::hull(p.dim(), std::move(pts));
}

VPolytope make_box(const Vector& lo, const Vector& hi)
{
    if (lo.size() != hi.size()) throw std::invalid_argument("make_box: bound length mismatch");
    const std::size_t n = lo.size();
    check_dimension(n);
    std::vector<Vector> pts;
    for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
        Vector v(n);
        for (std::size_t i = 0; i < n; ++i) v[i] = (mask >> i & 1) ? hi[i] : lo[i];
        pts.push_back(std::move(v));
    }
    return VPolytope::hull(n, std::move(pts));
}

VPolytope make_cross_polytope(const Vector& lambdas)
{
    const std::size_t n = lambdas.size();
    check_dimension(n);
    std::vector<Vector> pts;
    for (std::size_t i = 0; i < n; ++i) {
        if (lambdas[i] <= 0) throw std::invalid_argument("make_cross_polytope: radii must be positive");
        pts.push_back(scale(lambdas[i], unit_vector(n, i)));
        pts.push_back(scale(Rational(-lambdas[i]), unit_vector(n, i)));
    }
    return VPolytope::hull(n, std::move(pts));
}

VPolytope make_standard_simplex(std::size_t n)
{
    std::vector<Vector> pts = {zero_vector(n)};
    for (std::size_t i = 0; i < n; ++i) pts.push_back(unit_vector(n, i));
    return VPolytope::hull(n, std::move(pts));
}

}  // namespace blgeo
