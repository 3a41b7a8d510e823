#ifndef SPLITPOLY_LINALG_HPP
#define SPLITPOLY_LINALG_HPP

#include <cstddef>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <vector>

#include "splitpoly/affine.hpp"
#include "splitpoly/exact.hpp"
#include "splitpoly/intpoly.hpp"

namespace splitpoly {

/// Raised when a square system has no unique solution.
class SingularSystemError : public std::runtime_error {
public:
    SingularSystemError() : std::runtime_error("singular system") {}
};

/// Dense row-major matrix of exact rationals.
class RatMatrix {
public:
    RatMatrix() = default;
    RatMatrix(std::size_t rows, std::size_t cols);
    RatMatrix(std::initializer_list<std::initializer_list<long>> rows);

    static RatMatrix identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    RatMatrix transpose() const;
    std::vector<Rational> column(std::size_t c) const;

    friend RatMatrix operator*(const RatMatrix& a, const RatMatrix& b);
    friend RatMatrix operator+(const RatMatrix& a, const RatMatrix& b);
    friend RatMatrix operator-(const RatMatrix& a, const RatMatrix& b);
    friend RatMatrix operator*(const Rational& s, const RatMatrix& a);
    friend bool operator==(const RatMatrix& a, const RatMatrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }

    bool is_zero() const;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Rational> data_;
};

/// Column vector product A*v.
std::vector<Rational> apply(const RatMatrix& a, std::span<const Rational> v);

/// Exact solution of A x = b where each right-hand side is affine in
/// (g_X - 1), (g_Y - 1) and 1. Fraction-free (Bareiss) elimination; the pivot
/// is the first nonzero entry of the column, so output is deterministic.
/// Throws SingularSystemError when A is singular.
std::vector<AffineExpr> solve_linear(const RatMatrix& a, std::span<const AffineExpr> b);

/// A*x for an affine vector x (used to check solutions exactly).
std::vector<AffineExpr> apply(const RatMatrix& a, std::span<const AffineExpr> x);

std::size_t rank(const RatMatrix& a);
Rational determinant(const RatMatrix& a);

/// Characteristic polynomial det(X*I - A). Throws std::domain_error when it
/// does not have integer coefficients.
IntPoly integer_charpoly(const RatMatrix& a);

/// p(A) for a square matrix.
RatMatrix evaluate(const IntPoly& p, const RatMatrix& a);

/// Matrix R with A*B = B*R, for B whose columns span an A-invariant
/// subspace. Throws std::invalid_argument if the columns are dependent or
/// the span is not invariant.
RatMatrix restrict_to_subspace(const RatMatrix& a, const RatMatrix& basis);

/// The pivot columns of A, as a matrix whose columns are a basis of its image.
RatMatrix column_basis(const RatMatrix& a);

/// True iff p is the minimal polynomial of A, for p monic, squarefree and
/// split over Z: p(A) = 0 and every root of p is an eigenvalue of A.
bool is_minimal_polynomial(const IntPoly& p, const RatMatrix& a);

}  // namespace splitpoly

#endif
