#include "blgeo/subspace.hpp"

#include "blgeo/linalg.hpp"

#include <stdexcept>

namespace blgeo {

namespace {

void require_same_ambient(const Subspace& a, const Subspace& b, const char* what)
{
    if (a.ambient_dim() != b.ambient_dim())
        throw std::invalid_argument(std::string(what) + ": ambient dimension mismatch");
}

}  // namespace

Subspace::Subspace(std::size_t ambient_dim, std::vector<Vector> basis)
    : ambient_dim_(ambient_dim), basis_(std::move(basis)), projection_(ambient_dim, ambient_dim)
{
    const std::size_t d = basis_.size();
    coordinate_map_ = Matrix(d, ambient_dim_);
    if (d == 0) return;
    const Matrix b = Matrix::from_columns(basis_, ambient_dim_);
    const Matrix g = gram(basis_);
    gram_det_ = determinant(g);
    coordinate_map_ = inverse(g) * b.transpose();
    projection_ = b * coordinate_map_;
}

Subspace Subspace::span(std::size_t ambient_dim, const std::vector<Vector>& spanning)
{
    for (const auto& v : spanning)
        if (v.size() != ambient_dim) throw std::invalid_argument("Subspace::span: vector length differs from ambient dimension");
    std::vector<Vector> basis;
    for (auto i : independent_subset(spanning, ambient_dim)) basis.push_back(spanning[i]);
    return Subspace(ambient_dim, std::move(basis));
}

Subspace Subspace::zero(std::size_t ambient_dim) { return Subspace(ambient_dim, {}); }

Subspace Subspace::whole(std::size_t ambient_dim)
{
    std::vector<Vector> basis;
    for (std::size_t i = 0; i < ambient_dim; ++i) basis.push_back(unit_vector(ambient_dim, i));
    return Subspace(ambient_dim, std::move(basis));
}

Vector Subspace::project(const Vector& x) const { return projection_ * x; }

Vector Subspace::coordinates(const Vector& x) const { return coordinate_map_ * x; }

Vector Subspace::lift(const Vector& t) const
{
    if (t.size() != dim()) throw std::invalid_argument("Subspace::lift: coordinate length mismatch");
    Vector x = zero_vector(ambient_dim_);
    for (std::size_t j = 0; j < t.size(); ++j)
        for (std::size_t i = 0; i < ambient_dim_; ++i) x[i] += t[j] * basis_[j][i];
    return x;
}

bool Subspace::contains(const Vector& x) const { return project(x) == x; }

bool Subspace::contains(const Subspace& other) const
{
    require_same_ambient(*this, other, "Subspace::contains");
    for (const auto& b : other.basis())
        if (!contains(b)) return false;
    return true;
}

bool operator==(const Subspace& a, const Subspace& b)
{
    return a.ambient_dim() == b.ambient_dim() && a.projection() == b.projection();
}

Subspace orthogonal_complement(const Subspace& a)
{
    if (a.is_trivial()) return Subspace::whole(a.ambient_dim());
    return Subspace::span(a.ambient_dim(), kernel_basis(Matrix::from_rows(a.basis(), a.ambient_dim())));
}

Subspace intersect(const Subspace& a, const Subspace& b)
{
    require_same_ambient(a, b, "intersect");
    const std::size_t n = a.ambient_dim();
    // x lies in a ∩ b iff it is orthogonal to both complements.
    std::vector<Vector> constraints = orthogonal_complement(a).basis();
    const Subspace b_perp = orthogonal_complement(b);
    for (const auto& v : b_perp.basis()) constraints.push_back(v);
    if (constraints.empty()) return Subspace::whole(n);
    return Subspace::span(n, kernel_basis(Matrix::from_rows(constraints, n)));
}

Subspace sum(const Subspace& a, const Subspace& b)
{
    require_same_ambient(a, b, "sum");
    std::vector<Vector> all = a.basis();
    all.insert(all.end(), b.basis().begin(), b.basis().end());
    return Subspace::span(a.ambient_dim(), all);
}

bool equals(const Subspace& a, const Subspace& b)
{
    require_same_ambient(a, b, "equals");
    return a == b;
}

bool are_orthogonal(const Subspace& a, const Subspace& b)
{
    require_same_ambient(a, b, "are_orthogonal");
    for (const auto& u : a.basis())
        for (const auto& v : b.basis())
            if (dot(u, v) != 0) return false;
    return true;
}

bool is_direct_sum_decomposition(const std::vector<Subspace>& parts, std::size_t ambient_dim)
{
    std::size_t total = 0;
    std::vector<Vector> all;
    for (const auto& p : parts) {
        if (p.ambient_dim() != ambient_dim) throw std::invalid_argument("is_direct_sum_decomposition: ambient mismatch");
        total += p.dim();
        all.insert(all.end(), p.basis().begin(), p.basis().end());
    }
    if (total != ambient_dim) return false;
    if (ambient_dim == 0) return true;
    return rank(Matrix::from_rows(all, ambient_dim)) == ambient_dim;
}

}  // namespace blgeo
