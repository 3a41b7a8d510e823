#include "splitpoly/linalg.hpp"

#include <algorithm>
#include <utility>

namespace splitpoly {

RatMatrix::RatMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, Rational(0)) {}

RatMatrix::RatMatrix(std::initializer_list<std::initializer_list<long>> rows) {
    rows_ = rows.size();
    cols_ = rows_ == 0 ? 0 : rows.begin()->size();
    data_.reserve(rows_ * cols_);
    for (const auto& row : rows) {
        if (row.size() != cols_) throw std::invalid_argument("RatMatrix: ragged initializer");
        for (long v : row) data_.emplace_back(v);
    }
}

RatMatrix RatMatrix::identity(std::size_t n) {
    RatMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

RatMatrix RatMatrix::transpose() const {
    RatMatrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
    return t;
}

std::vector<Rational> RatMatrix::column(std::size_t c) const {
    std::vector<Rational> out(rows_);
    for (std::size_t r = 0; r < rows_; ++r) out[r] = (*this)(r, c);
    return out;
}

bool RatMatrix::is_zero() const {
    return std::all_of(data_.begin(), data_.end(), [](const Rational& q) { return q == 0; });
}

RatMatrix operator*(const RatMatrix& a, const RatMatrix& b) {
    if (a.cols_ != b.rows_) throw std::invalid_argument("RatMatrix: shape mismatch in product");
    RatMatrix out(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
        for (std::size_t k = 0; k < a.cols_; ++k) {
            const Rational& aik = a(i, k);
            if (aik == 0) continue;
            for (std::size_t j = 0; j < b.cols_; ++j) out(i, j) += aik * b(k, j);
        }
    return out;
}

RatMatrix operator+(const RatMatrix& a, const RatMatrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw std::invalid_argument("RatMatrix: shape mismatch in sum");
    RatMatrix out = a;
    for (std::size_t i = 0; i < out.data_.size(); ++i) out.data_[i] += b.data_[i];
    return out;
}

RatMatrix operator-(const RatMatrix& a, const RatMatrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw std::invalid_argument("RatMatrix: shape mismatch in difference");
    RatMatrix out = a;
    for (std::size_t i = 0; i < out.data_.size(); ++i) out.data_[i] -= b.data_[i];
    return out;
}

RatMatrix operator*(const Rational& s, const RatMatrix& a) {
    RatMatrix out = a;
    for (auto& x : out.data_) x *= s;
    return out;
}

std::vector<Rational> apply(const RatMatrix& a, std::span<const Rational> v) {
    if (v.size() != a.cols()) throw std::invalid_argument("apply: length mismatch");
    std::vector<Rational> out(a.rows(), Rational(0));
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) out[i] += a(i, j) * v[j];
    return out;
}

std::vector<AffineExpr> apply(const RatMatrix& a, std::span<const AffineExpr> x) {
    if (x.size() != a.cols()) throw std::invalid_argument("apply: length mismatch");
    std::vector<AffineExpr> out(a.rows());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) out[i] += a(i, j) * x[j];
    return out;
}

std::vector<AffineExpr> solve_linear(const RatMatrix& a, std::span<const AffineExpr> b) {
    const std::size_t n = a.rows();
    if (a.cols() != n) throw std::invalid_argument("solve_linear: matrix is not square");
    if (b.size() != n) throw std::invalid_argument("solve_linear: right-hand side length mismatch");
    constexpr std::size_t rhs_cols = 3;
    const std::size_t width = n + rhs_cols;

    // Scale every row by the lcm of its denominators so elimination runs over Z.
    std::vector<std::vector<Integer>> m(n, std::vector<Integer>(width));
    for (std::size_t i = 0; i < n; ++i) {
        std::vector<Rational> row(width);
        for (std::size_t j = 0; j < n; ++j) row[j] = a(i, j);
        row[n] = b[i].gx;
        row[n + 1] = b[i].gy;
        row[n + 2] = b[i].c;
        Integer scale(1);
        for (const auto& q : row) scale = lcm(scale, q.get_den());
        for (std::size_t j = 0; j < width; ++j) m[i][j] = row[j].get_num() * (scale / row[j].get_den());
    }

    Integer prev(1);
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t pivot = k;
        while (pivot < n && m[pivot][k] == 0) ++pivot;
        if (pivot == n) throw SingularSystemError();
        if (pivot != k) std::swap(m[pivot], m[k]);
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < width; ++j) {
                Integer t = m[k][k] * m[i][j] - m[i][k] * m[k][j];
                mpz_divexact(m[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
            }
            m[i][k] = 0;
        }
        prev = m[k][k];
    }

    std::vector<AffineExpr> x(n);
    for (std::size_t ii = n; ii-- > 0;) {
        AffineExpr acc{Rational(m[ii][n]), Rational(m[ii][n + 1]), Rational(m[ii][n + 2])};
        for (std::size_t j = ii + 1; j < n; ++j) acc -= Rational(m[ii][j]) * x[j];
        x[ii] = acc * make_rational(Integer(1), m[ii][ii]);
    }
    return x;
}

namespace {

// In-place reduced row echelon form; returns the pivot columns.
std::vector<std::size_t> rref(RatMatrix& m, std::size_t col_limit) {
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t col = 0; col < col_limit && row < m.rows(); ++col) {
        std::size_t p = row;
        while (p < m.rows() && m(p, col) == 0) ++p;
        if (p == m.rows()) continue;
        if (p != row)
            for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(p, j), m(row, j));
        const Rational inv = 1 / m(row, col);
        for (std::size_t j = 0; j < m.cols(); ++j) m(row, j) *= inv;
        for (std::size_t i = 0; i < m.rows(); ++i) {
            if (i == row || m(i, col) == 0) continue;
            const Rational f = m(i, col);
            for (std::size_t j = 0; j < m.cols(); ++j) m(i, j) -= f * m(row, j);
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

}  // namespace

std::size_t rank(const RatMatrix& a) {
    RatMatrix m = a;
    return rref(m, m.cols()).size();
}

Rational determinant(const RatMatrix& a) {
    if (a.rows() != a.cols()) throw std::invalid_argument("determinant: matrix is not square");
    RatMatrix m = a;
    const std::size_t n = m.rows();
    Rational det(1);
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t p = k;
        while (p < n && m(p, k) == 0) ++p;
        if (p == n) return Rational(0);
        if (p != k) {
            for (std::size_t j = 0; j < n; ++j) std::swap(m(p, j), m(k, j));
            det = -det;
        }
        det *= m(k, k);
        for (std::size_t i = k + 1; i < n; ++i) {
            if (m(i, k) == 0) continue;
            const Rational f = m(i, k) / m(k, k);
            for (std::size_t j = k; j < n; ++j) m(i, j) -= f * m(k, j);
        }
    }
    return det;
}

IntPoly integer_charpoly(const RatMatrix& a) {
    if (a.rows() != a.cols()) throw std::invalid_argument("integer_charpoly: matrix is not square");
    const std::size_t d = a.rows();
    // det(xI - A) sampled at x = 0..d, then Lagrange interpolation.
    std::vector<Rational> coeffs(d + 1, Rational(0));
    for (std::size_t i = 0; i <= d; ++i) {
        RatMatrix shifted = Rational(static_cast<long>(i)) * RatMatrix::identity(d) - a;
        const Rational yi = determinant(shifted);
        if (yi == 0) continue;
        std::vector<Rational> basis{Rational(1)};
        Rational denom(1);
        for (std::size_t j = 0; j <= d; ++j) {
            if (j == i) continue;
            std::vector<Rational> next(basis.size() + 1, Rational(0));
            for (std::size_t t = 0; t < basis.size(); ++t) {
                next[t + 1] += basis[t];
                next[t] -= basis[t] * static_cast<long>(j);
            }
            basis = std::move(next);
            denom *= static_cast<long>(i) - static_cast<long>(j);
        }
        for (std::size_t t = 0; t < basis.size(); ++t) coeffs[t] += yi * basis[t] / denom;
    }
    std::vector<Integer> out;
    out.reserve(coeffs.size());
    for (auto& q : coeffs) {
        if (!is_integral(q)) throw std::domain_error("integer_charpoly: non-integral coefficient");
        out.push_back(q.get_num());
    }
    return IntPoly(std::move(out));
}

RatMatrix evaluate(const IntPoly& p, const RatMatrix& a) {
    if (a.rows() != a.cols()) throw std::invalid_argument("evaluate: matrix is not square");
    RatMatrix acc(a.rows(), a.cols());
    for (int d = p.degree(); d >= 0; --d) {
        acc = acc * a + Rational(p.coeff(static_cast<std::size_t>(d))) * RatMatrix::identity(a.rows());
    }
    return acc;
}

RatMatrix restrict_to_subspace(const RatMatrix& a, const RatMatrix& basis) {
    if (a.rows() != a.cols() || basis.rows() != a.rows())
        throw std::invalid_argument("restrict_to_subspace: shape mismatch");
    const std::size_t n = basis.rows();
    const std::size_t d = basis.cols();
    const RatMatrix image = a * basis;
    RatMatrix aug(n, 2 * d);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < d; ++j) {
            aug(i, j) = basis(i, j);
            aug(i, d + j) = image(i, j);
        }
    const auto pivots = rref(aug, d);
    if (pivots.size() != d) throw std::invalid_argument("restrict_to_subspace: basis columns are dependent");
    for (std::size_t i = d; i < n; ++i)
        for (std::size_t j = d; j < 2 * d; ++j)
            if (aug(i, j) != 0) throw std::invalid_argument("restrict_to_subspace: subspace is not invariant");
    RatMatrix r(d, d);
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) r(i, j) = aug(i, d + j);
    return r;
}

RatMatrix column_basis(const RatMatrix& a) {
    RatMatrix m = a;
    const auto pivots = rref(m, m.cols());
    RatMatrix out(a.rows(), pivots.size());
    for (std::size_t j = 0; j < pivots.size(); ++j)
        for (std::size_t i = 0; i < a.rows(); ++i) out(i, j) = a(i, pivots[j]);
    return out;
}

bool is_minimal_polynomial(const IntPoly& p, const RatMatrix& a) {
    if (!p.is_monic() || !is_squarefree(p) || !splits_over_integers(p)) return false;
    if (!evaluate(p, a).is_zero()) return false;
    const std::size_t d = a.rows();
    for (const auto& r : integer_roots(p)) {
        if (rank(a - Rational(r) * RatMatrix::identity(d)) >= d) return false;
    }
    return true;
}

}  // namespace splitpoly
