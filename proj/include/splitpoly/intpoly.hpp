#ifndef SPLITPOLY_INTPOLY_HPP
#define SPLITPOLY_INTPOLY_HPP

#include <iosfwd>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "splitpoly/exact.hpp"

namespace splitpoly {

/// Dense univariate polynomial over the integers, lowest degree first.
///
/// The coefficient vector never carries trailing zeros, so the zero
/// polynomial is the empty vector and degree() == coeffs().size() - 1.
class IntPoly {
public:
    IntPoly() = default;
    explicit IntPoly(std::vector<Integer> coeffs);
    IntPoly(std::initializer_list<long> coeffs);

    static IntPoly constant(const Integer& c);
    static IntPoly monomial(unsigned degree, const Integer& c = Integer(1));
    /// X - root
    static IntPoly linear_factor(const Integer& root);
    /// Monic polynomial whose roots are exactly the given multiset.
    static IntPoly from_roots(std::span<const Integer> roots);

    /// -1 for the zero polynomial.
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }
    bool is_monic() const { return !is_zero() && coeffs_.back() == 1; }
    const std::vector<Integer>& coeffs() const { return coeffs_; }
    /// Zero beyond the stored range.
    Integer coeff(std::size_t i) const;
    const Integer& leading() const;

    Integer eval(const Integer& x) const;
    Rational eval(const Rational& x) const;
    IntPoly derivative() const;
    /// Gcd of the coefficients, zero for the zero polynomial.
    Integer content() const;

    IntPoly& operator+=(const IntPoly& rhs);
    IntPoly& operator-=(const IntPoly& rhs);
    IntPoly& operator*=(const IntPoly& rhs);
    IntPoly& operator*=(const Integer& c);

    friend IntPoly operator+(IntPoly lhs, const IntPoly& rhs) { return lhs += rhs; }
    friend IntPoly operator-(IntPoly lhs, const IntPoly& rhs) { return lhs -= rhs; }
    friend IntPoly operator*(IntPoly lhs, const IntPoly& rhs) { return lhs *= rhs; }
    friend IntPoly operator*(IntPoly lhs, const Integer& c) { return lhs *= c; }
    friend IntPoly operator*(const Integer& c, IntPoly rhs) { return rhs *= c; }
    IntPoly operator-() const;

    friend bool operator==(const IntPoly& lhs, const IntPoly& rhs) { return lhs.coeffs_ == rhs.coeffs_; }

    /// Human-readable form, e.g. "X^3 - 3*X^2 - 13*X + 15".
    std::string to_string() const;

private:
    void trim();
    std::vector<Integer> coeffs_;
};

std::ostream& operator<<(std::ostream& os, const IntPoly& p);

/// Quotient and remainder of division by a monic divisor (exact over Z).
std::pair<IntPoly, IntPoly> divmod_monic(const IntPoly& dividend, const IntPoly& monic_divisor);

/// Primitive gcd over Z[X] with positive leading coefficient. gcd(0, 0) = 0.
IntPoly gcd(const IntPoly& a, const IntPoly& b);

/// True iff gcd(p, p') is a constant. The zero polynomial is not squarefree.
bool is_squarefree(const IntPoly& p);

/// All integer roots, each listed with its multiplicity, in increasing order.
std::vector<Integer> integer_roots(const IntPoly& p);

/// True iff p is monic and splits into linear factors over Z.
bool splits_over_integers(const IntPoly& p);

}  // namespace splitpoly

#endif
