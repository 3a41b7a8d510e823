#ifndef SPLITPOLY_TRIDIAG_HPP
#define SPLITPOLY_TRIDIAG_HPP

#include <vector>

#include "splitpoly/exact.hpp"
#include "splitpoly/intpoly.hpp"

namespace splitpoly::tridiag {

/// Off-diagonal entries a_1, a_2, ... (above) and b_1, b_2, ... (below) of a
/// tridiagonal matrix with X on the diagonal. Stored 0-based: a[0] is a_1.
struct TridiagSpec {
    std::vector<Integer> a;
    std::vector<Integer> b;
};

/// Determinant of the (m+1)x(m+1) matrix M^(m) built from a_1..a_m and
/// b_1..b_m, via det M^(m) = X det M^(m-1) - a_m b_m det M^(m-2).
IntPoly det_tridiag(const TridiagSpec& spec, int m);

/// Sum over index sets 1 <= i_1 < ... < i_j <= m with gaps of at least two
/// of the products a_i b_i, by enumeration. Requires 0 <= 2j <= m + 1.
Integer matchings_coeff(const TridiagSpec& spec, int m, int j);

/// Determinant of a general tridiagonal matrix of polynomials: diagonal
/// entries diag[i], superdiagonal super[i] between rows i and i+1,
/// subdiagonal sub[i] between rows i+1 and i.
IntPoly continuant(const std::vector<IntPoly>& diag, const std::vector<Integer>& super,
                   const std::vector<Integer>& sub);

/// Determinant of the m x m matrix with diagonal X, ..., X, X - m,
/// superdiagonal -1, ..., -(m-1) and subdiagonal -n, ..., -(m+1), where
/// m = (n+1)/2. n odd >= 3.
IntPoly cnplus(int n);

/// prod_{l=1}^m (X - (-1)^(l+m) (2l - 1)).
IntPoly cnplus_product(int n);

}  // namespace splitpoly::tridiag

#endif
