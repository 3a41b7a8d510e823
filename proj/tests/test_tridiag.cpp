#include <doctest.h>

#include <bit>

#include "splitpoly/hamming.hpp"
#include "splitpoly/linalg.hpp"
#include "splitpoly/tridiag.hpp"

using namespace splitpoly;
using namespace splitpoly::tridiag;

namespace {

// det(t I - offdiag part) with X = t, computed by elimination.
Rational det_at(const TridiagSpec& s, int m, long t) {
    const std::size_t size = static_cast<std::size_t>(m + 1);
    RatMatrix a(size, size);
    for (std::size_t i = 0; i < size; ++i) a(i, i) = t;
    for (std::size_t i = 0; i + 1 < size; ++i) {
        a(i, i + 1) = s.a[i];
        a(i + 1, i) = s.b[i];
    }
    return determinant(a);
}

// Gap-two index sets by bitmask.
Integer matchings_by_mask(const TridiagSpec& s, int m, int j) {
    Integer total(0);
    for (std::uint32_t mask = 0; mask < (1U << m); ++mask) {
        if (std::popcount(mask) != j || (mask & (mask >> 1)) != 0) continue;
        Integer prod(1);
        for (int i = 0; i < m; ++i)
            if (mask & (1U << i)) prod *= s.a[static_cast<std::size_t>(i)] * s.b[static_cast<std::size_t>(i)];
        total += prod;
    }
    return total;
}

TridiagSpec sample_spec(int m) {
    TridiagSpec s;
    for (int i = 1; i <= m; ++i) {
        s.a.emplace_back(i % 3 == 0 ? -i : i + 2);
        s.b.emplace_back(3 - 2 * i);
    }
    return s;
}

}  // namespace

TEST_CASE("small tridiagonal determinants") {
    const TridiagSpec s{{Integer(1), Integer(2)}, {Integer(3), Integer(4)}};
    CHECK(det_tridiag(s, 2) == IntPoly{0, -11, 0, 1});
    CHECK(det_tridiag(s, 0) == IntPoly{0, 1});
    CHECK(det_tridiag(s, 1) == IntPoly{-3, 0, 1});
    CHECK_THROWS(det_tridiag(s, 3));
}

TEST_CASE("recurrence against elimination") {
    for (int m = 0; m <= 9; ++m) {
        const auto s = sample_spec(m);
        const IntPoly d = det_tridiag(s, m);
        for (long t = -4; t <= 4; ++t) CHECK(Rational(d.eval(Integer(t))) == det_at(s, m, t));
    }
}

TEST_CASE("matchings coefficients") {
    for (int m = 0; m <= 12; ++m) {
        const auto s = sample_spec(m);
        const IntPoly d = det_tridiag(s, m);
        for (int j = 0; 2 * j <= m + 1; ++j) {
            const Integer c = matchings_coeff(s, m, j);
            CHECK(c == matchings_by_mask(s, m, j));
            CHECK(d.coeff(static_cast<std::size_t>(m + 1 - 2 * j)) == (j % 2 == 0 ? c : Integer(-c)));
        }
    }
    CHECK(matchings_coeff(sample_spec(3), 3, 0) == 1);
    CHECK_THROWS(matchings_coeff(sample_spec(3), 3, 3));
}

TEST_CASE("continuant with polynomial diagonal") {
    const IntPoly x = IntPoly::monomial(1);
    const std::vector<IntPoly> diag{x, x + IntPoly{2}, x};
    const std::vector<Integer> sup{Integer(1), Integer(5)};
    const std::vector<Integer> sub{Integer(-2), Integer(1)};
    const IntPoly c = continuant(diag, sup, sub);
    for (long t = -3; t <= 3; ++t) {
        const RatMatrix a{{t, 1, 0}, {-2, t + 2, 5}, {0, 1, t}};
        CHECK(Rational(c.eval(Integer(t))) == determinant(a));
    }
    CHECK(continuant({}, {}, {}) == IntPoly{1});
}

TEST_CASE("symmetric-part determinant") {
    CHECK(cnplus(3) == IntPoly{-3, -2, 1});
    for (int n = 3; n <= 21; n += 2) {
        const int m = (n + 1) / 2;
        const IntPoly d = cnplus(n);
        CHECK(d == cnplus_product(n));
        // the displayed m x m matrix, evaluated at a few points
        for (long t = -2; t <= 2; ++t) {
            RatMatrix a(static_cast<std::size_t>(m), static_cast<std::size_t>(m));
            for (int i = 0; i < m; ++i) a(static_cast<std::size_t>(i), static_cast<std::size_t>(i)) = t;
            a(static_cast<std::size_t>(m - 1), static_cast<std::size_t>(m - 1)) = t - m;
            for (int i = 1; i < m; ++i) {
                a(static_cast<std::size_t>(i - 1), static_cast<std::size_t>(i)) = -i;
                a(static_cast<std::size_t>(i), static_cast<std::size_t>(i - 1)) = -(n - i + 1);
            }
            CHECK(Rational(d.eval(Integer(t))) == determinant(a));
        }
        if (n <= 15)
            CHECK(d == integer_charpoly(hamming::restricted_operator(n, n - 1, hamming::Subspace::plus)));
    }
    CHECK_THROWS(cnplus(4));
}
