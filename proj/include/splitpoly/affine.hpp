#ifndef SPLITPOLY_AFFINE_HPP
#define SPLITPOLY_AFFINE_HPP

#include <iosfwd>
#include <string>

#include "splitpoly/exact.hpp"

namespace splitpoly {

/// a*(g_X - 1) + b*(g_Y - 1) + c with exact rational a, b, c.
struct AffineExpr {
    Rational gx{0};
    Rational gy{0};
    Rational c{0};

    static AffineExpr constant(const Rational& value) { return {Rational(0), Rational(0), value}; }
    /// The expression g_X - 1.
    static AffineExpr gx_shift() { return {Rational(1), Rational(0), Rational(0)}; }
    /// The expression g_Y - 1.
    static AffineExpr gy_shift() { return {Rational(0), Rational(1), Rational(0)}; }
    /// The expression g_Y = (g_Y - 1) + 1.
    static AffineExpr genus_y() { return {Rational(0), Rational(1), Rational(1)}; }

    AffineExpr& operator+=(const AffineExpr& rhs);
    AffineExpr& operator-=(const AffineExpr& rhs);
    AffineExpr& operator*=(const Rational& s);

    friend AffineExpr operator+(AffineExpr a, const AffineExpr& b) { return a += b; }
    friend AffineExpr operator-(AffineExpr a, const AffineExpr& b) { return a -= b; }
    friend AffineExpr operator*(AffineExpr a, const Rational& s) { return a *= s; }
    friend AffineExpr operator*(const Rational& s, AffineExpr a) { return a *= s; }
    AffineExpr operator-() const { return {-gx, -gy, -c}; }

    friend bool operator==(const AffineExpr& a, const AffineExpr& b) {
        return a.gx == b.gx && a.gy == b.gy && a.c == b.c;
    }

    bool is_zero() const { return gx == 0 && gy == 0 && c == 0; }

    /// Value at concrete genera.
    Rational evaluate(const Integer& g_x, const Integer& g_y) const;

    /// e.g. "15(g_X-1) - 64(g_Y-1)"; terms with zero coefficient are omitted.
    std::string to_string() const;
};

std::ostream& operator<<(std::ostream& os, const AffineExpr& e);

}  // namespace splitpoly

#endif
