#ifndef SPLITPOLY_EXACT_HPP
#define SPLITPOLY_EXACT_HPP

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace splitpoly {

// Arbitrary-precision scalars. Rational values are kept canonical
// (positive denominator, reduced) after every arithmetic operation.
using Integer = mpz_class;
using Rational = mpq_class;

Integer binomial(long n, long k);
Integer factorial(long n);
Integer pow_int(const Integer& base, unsigned long exponent);

inline Rational make_rational(const Integer& num, const Integer& den = Integer(1)) {
    Rational q(num, den);
    q.canonicalize();
    return q;
}

inline bool is_integral(const Rational& q) { return q.get_den() == 1; }

// "p/q", or "p" when the denominator is one.
std::string to_string(const Integer& value);
std::string to_string(const Rational& value);

}  // namespace splitpoly

#endif
