#include "blgeo/linalg.hpp"

#include <stdexcept>
#include <utility>

namespace blgeo {

namespace {

using IntegerRows = std::vector<std::vector<Integer>>;

// Scales every row by the lcm of its denominators. Returns the scale factors.
std::vector<Integer> to_integer_rows(const Matrix& m, IntegerRows& out)
{
    out.assign(m.rows(), std::vector<Integer>(m.cols()));
    std::vector<Integer> scales(m.rows(), Integer(1));
    for (std::size_t r = 0; r < m.rows(); ++r) {
        Integer& l = scales[r];
        for (std::size_t c = 0; c < m.cols(); ++c)
            mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m(r, c).get_den_mpz_t());
        for (std::size_t c = 0; c < m.cols(); ++c) {
            Rational scaled = m(r, c) * l;
            out[r][c] = scaled.get_num();
        }
    }
    return scales;
}

struct BareissResult {
    std::vector<std::size_t> pivots;
    int sign = 1;
};

// In-place fraction-free forward elimination to row echelon form.
BareissResult bareiss_echelon(IntegerRows& a, std::size_t cols)
{
    BareissResult res;
    const std::size_t rows = a.size();
    Integer prev = 1;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t p = r;
        while (p < rows && a[p][c] == 0) ++p;
        if (p == rows) continue;
        if (p != r) {
            std::swap(a[p], a[r]);
            res.sign = -res.sign;
        }
        for (std::size_t i = r + 1; i < rows; ++i) {
            for (std::size_t j = c + 1; j < cols; ++j) {
                Integer t = a[r][c] * a[i][j] - a[i][c] * a[r][j];
                mpz_divexact(a[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
            }
            a[i][c] = 0;
        }
        prev = a[r][c];
        res.pivots.push_back(c);
        ++r;
    }
    return res;
}

}  // namespace

RrefResult rref(const Matrix& m)
{
    IntegerRows a;
    to_integer_rows(m, a);
    BareissResult echelon = bareiss_echelon(a, m.cols());

    RrefResult res;
    res.pivots = echelon.pivots;
    res.rank = echelon.pivots.size();
    res.reduced = Matrix(m.rows(), m.cols());
    for (std::size_t r = 0; r < res.rank; ++r) {
        const Integer& lead = a[r][res.pivots[r]];
        for (std::size_t c = 0; c < m.cols(); ++c) {
            Rational v(a[r][c], lead);
            v.canonicalize();
            res.reduced(r, c) = v;
        }
    }
    // Back substitution clears entries above each pivot.
    for (std::size_t r = res.rank; r-- > 0;) {
        const std::size_t pc = res.pivots[r];
        for (std::size_t i = 0; i < r; ++i) {
            Rational f = res.reduced(i, pc);
            if (f == 0) continue;
            for (std::size_t c = pc; c < m.cols(); ++c) res.reduced(i, c) -= f * res.reduced(r, c);
        }
    }
    return res;
}

std::size_t rank(const Matrix& m)
{
    IntegerRows a;
    to_integer_rows(m, a);
    return bareiss_echelon(a, m.cols()).pivots.size();
}

std::vector<Vector> kernel_basis(const Matrix& m)
{
    const RrefResult red = rref(m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (auto p : red.pivots) is_pivot[p] = true;

    std::vector<Vector> basis;
    for (std::size_t f = 0; f < m.cols(); ++f) {
        if (is_pivot[f]) continue;
        Vector v = zero_vector(m.cols());
        v[f] = 1;
        for (std::size_t r = 0; r < red.rank; ++r) v[red.pivots[r]] = -red.reduced(r, f);
        basis.push_back(std::move(v));
    }
    return basis;
}

std::optional<Vector> solve(const Matrix& m, const Vector& b)
{
    if (b.size() != m.rows()) throw std::invalid_argument("solve: right-hand side length mismatch");
    Matrix aug(m.rows(), m.cols() + 1);
    for (std::size_t r = 0; r < m.rows(); ++r) {
        for (std::size_t c = 0; c < m.cols(); ++c) aug(r, c) = m(r, c);
        aug(r, m.cols()) = b[r];
    }
    const RrefResult red = rref(aug);
    if (!red.pivots.empty() && red.pivots.back() == m.cols()) return std::nullopt;
    Vector x = zero_vector(m.cols());
    for (std::size_t r = 0; r < red.rank; ++r) x[red.pivots[r]] = red.reduced(r, m.cols());
    return x;
}

Rational determinant(const Matrix& m)
{
    if (!m.is_square()) throw std::invalid_argument("determinant of a non-square matrix");
    const std::size_t n = m.rows();
    if (n == 0) return Rational(1);
    IntegerRows a;
    std::vector<Integer> scales = to_integer_rows(m, a);
    BareissResult echelon = bareiss_echelon(a, n);
    if (echelon.pivots.size() < n) return Rational(0);
    Integer denom = 1;
    for (const auto& s : scales) denom *= s;
    Rational det(a[n - 1][n - 1] * echelon.sign, denom);
    det.canonicalize();
    return det;
}

Matrix inverse(const Matrix& m)
{
    if (!m.is_square()) throw std::invalid_argument("inverse of a non-square matrix");
    const std::size_t n = m.rows();
    Matrix aug(n, 2 * n);
    for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t c = 0; c < n; ++c) aug(r, c) = m(r, c);
        aug(r, n + r) = 1;
    }
    const RrefResult red = rref(aug);
    if (red.rank < n || (n > 0 && red.pivots[n - 1] != n - 1)) throw std::domain_error("inverse of a singular matrix");
    Matrix inv(n, n);
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c) inv(r, c) = red.reduced(r, n + c);
    return inv;
}

Matrix gram(const std::vector<Vector>& basis)
{
    const std::size_t k = basis.size();
    Matrix g(k, k);
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = i; j < k; ++j) {
            g(i, j) = dot(basis[i], basis[j]);
            g(j, i) = g(i, j);
        }
    return g;
}

std::vector<std::size_t> independent_subset(const std::vector<Vector>& vectors, std::size_t length)
{
    std::vector<std::size_t> chosen;
    std::vector<Vector> rows;
    std::size_t current_rank = 0;
    for (std::size_t i = 0; i < vectors.size(); ++i) {
        if (vectors[i].size() != length) throw std::invalid_argument("independent_subset: length mismatch");
        if (current_rank == length) break;
        rows.push_back(vectors[i]);
        std::size_t r = rank(Matrix::from_rows(rows, length));
        if (r > current_rank) {
            chosen.push_back(i);
            current_rank = r;
        } else {
            rows.pop_back();
        }
    }
    return chosen;
}

}  // namespace blgeo
