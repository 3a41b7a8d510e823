#include "splitpoly/intpoly.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace splitpoly {

IntPoly::IntPoly(std::vector<Integer> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

IntPoly::IntPoly(std::initializer_list<long> coeffs) {
    coeffs_.reserve(coeffs.size());
    for (long c : coeffs) coeffs_.emplace_back(c);
    trim();
}

IntPoly IntPoly::constant(const Integer& c) { return IntPoly(std::vector<Integer>{c}); }

IntPoly IntPoly::monomial(unsigned degree, const Integer& c) {
    std::vector<Integer> coeffs(degree + 1, Integer(0));
    coeffs[degree] = c;
    return IntPoly(std::move(coeffs));
}

IntPoly IntPoly::linear_factor(const Integer& root) { return IntPoly(std::vector<Integer>{-root, Integer(1)}); }

IntPoly IntPoly::from_roots(std::span<const Integer> roots) {
    IntPoly result = constant(Integer(1));
    for (const auto& r : roots) result *= linear_factor(r);
    return result;
}

void IntPoly::trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Integer IntPoly::coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : Integer(0); }

const Integer& IntPoly::leading() const {
    if (is_zero()) throw std::domain_error("leading coefficient of the zero polynomial");
    return coeffs_.back();
}

Integer IntPoly::eval(const Integer& x) const {
    Integer acc(0);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

Rational IntPoly::eval(const Rational& x) const {
    Rational acc(0);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + Rational(*it);
    return acc;
}

IntPoly IntPoly::derivative() const {
    if (coeffs_.size() <= 1) return {};
    std::vector<Integer> d(coeffs_.size() - 1);
    for (std::size_t i = 1; i < coeffs_.size(); ++i) d[i - 1] = coeffs_[i] * static_cast<unsigned long>(i);
    return IntPoly(std::move(d));
}

Integer IntPoly::content() const {
    Integer g(0);
    for (const auto& c : coeffs_) g = ::gcd(g, c);
    return g;
}

IntPoly& IntPoly::operator+=(const IntPoly& rhs) {
    if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size(), Integer(0));
    for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
    trim();
    return *this;
}

IntPoly& IntPoly::operator-=(const IntPoly& rhs) {
    if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size(), Integer(0));
    for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
    trim();
    return *this;
}

IntPoly& IntPoly::operator*=(const IntPoly& rhs) {
    if (is_zero() || rhs.is_zero()) {
        coeffs_.clear();
        return *this;
    }
    std::vector<Integer> out(coeffs_.size() + rhs.coeffs_.size() - 1, Integer(0));
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i] == 0) continue;
        for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j) out[i + j] += coeffs_[i] * rhs.coeffs_[j];
    }
    coeffs_ = std::move(out);
    trim();
    return *this;
}

IntPoly& IntPoly::operator*=(const Integer& c) {
    for (auto& x : coeffs_) x *= c;
    trim();
    return *this;
}

IntPoly IntPoly::operator-() const {
    IntPoly r = *this;
    for (auto& x : r.coeffs_) x = -x;
    return r;
}

std::string IntPoly::to_string() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int d = degree(); d >= 0; --d) {
        const Integer& c = coeffs_[static_cast<std::size_t>(d)];
        if (c == 0) continue;
        Integer mag = abs(c);
        if (first) {
            if (c < 0) os << "-";
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        first = false;
        const bool show_mag = d == 0 || mag != 1;
        if (show_mag) os << mag.get_str();
        if (d > 0) {
            if (show_mag) os << "*";
            os << "X";
            if (d > 1) os << "^" << d;
        }
    }
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const IntPoly& p) { return os << p.to_string(); }

std::pair<IntPoly, IntPoly> divmod_monic(const IntPoly& dividend, const IntPoly& monic_divisor) {
    if (!monic_divisor.is_monic()) throw std::invalid_argument("divmod_monic: divisor must be monic");
    const int dd = monic_divisor.degree();
    std::vector<Integer> rem = dividend.coeffs();
    if (dividend.degree() < dd) return {IntPoly{}, dividend};
    std::vector<Integer> quot(static_cast<std::size_t>(dividend.degree() - dd + 1), Integer(0));
    for (int i = dividend.degree(); i >= dd; --i) {
        Integer q = rem[static_cast<std::size_t>(i)];
        if (q == 0) continue;
        quot[static_cast<std::size_t>(i - dd)] = q;
        for (int j = 0; j <= dd; ++j) rem[static_cast<std::size_t>(i - dd + j)] -= q * monic_divisor.coeffs()[static_cast<std::size_t>(j)];
    }
    return {IntPoly(std::move(quot)), IntPoly(std::move(rem))};
}

namespace {

IntPoly primitive_part(const IntPoly& p) {
    if (p.is_zero()) return p;
    Integer c = p.content();
    if (p.leading() < 0) c = -c;
    std::vector<Integer> out = p.coeffs();
    for (auto& x : out) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), c.get_mpz_t());
    return IntPoly(std::move(out));
}

// Pseudo-remainder of a by b: lc(b)^(deg a - deg b + 1) * a mod b.
IntPoly pseudo_remainder(IntPoly a, const IntPoly& b) {
    const Integer& lb = b.leading();
    const int db = b.degree();
    while (!a.is_zero() && a.degree() >= db) {
        const int shift = a.degree() - db;
        Integer la = a.leading();
        a *= lb;
        a -= IntPoly::monomial(static_cast<unsigned>(shift), la) * b;
    }
    return a;
}

}  // namespace

IntPoly gcd(const IntPoly& a, const IntPoly& b) {
    IntPoly x = primitive_part(a);
    IntPoly y = primitive_part(b);
    if (x.is_zero()) return y;
    if (y.is_zero()) return x;
    if (x.degree() < y.degree()) std::swap(x, y);
    while (!y.is_zero()) {
        IntPoly r = primitive_part(pseudo_remainder(x, y));
        x = std::move(y);
        y = std::move(r);
    }
    return x;
}

bool is_squarefree(const IntPoly& p) {
    if (p.is_zero()) return false;
    if (p.degree() == 0) return true;
    return gcd(p, p.derivative()).degree() == 0;
}

std::vector<Integer> integer_roots(const IntPoly& p) {
    if (p.is_zero()) throw std::invalid_argument("integer_roots: zero polynomial");
    std::vector<Integer> roots;
    std::vector<Integer> c = p.coeffs();
    std::size_t zeros = 0;
    while (zeros < c.size() && c[zeros] == 0) ++zeros;
    for (std::size_t i = 0; i < zeros; ++i) roots.emplace_back(0);
    IntPoly q(std::vector<Integer>(c.begin() + static_cast<long>(zeros), c.end()));
    if (q.degree() <= 0) return roots;

    // Fujiwara bound: every complex root has |r| <= 2 max_i |a_{d-i}/a_d|^{1/i}.
    const int d = q.degree();
    const Integer lead = abs(q.leading());
    Integer bound(1);
    for (int i = 1; i <= d; ++i) {
        Integer a = abs(q.coeff(static_cast<std::size_t>(d - i)));
        if (a == 0) continue;
        Integer ratio = (a + lead - 1) / lead;
        Integer r;
        mpz_root(r.get_mpz_t(), ratio.get_mpz_t(), static_cast<unsigned long>(i));
        r += 1;
        if (r > bound) bound = r;
    }
    bound *= 2;

    const Integer& a0 = q.coeff(0);
    for (Integer r = -bound; r <= bound; ++r) {
        if (r == 0) continue;
        if (a0 % r != 0) continue;
        while (q.degree() > 0 && q.eval(r) == 0) {
            roots.push_back(r);
            // synthetic division by (X - r)
            const auto& qc = q.coeffs();
            std::vector<Integer> out(qc.size() - 1);
            Integer carry(0);
            for (std::size_t k = qc.size() - 1; k-- > 0;) {
                carry = qc[k + 1] + carry * r;
                out[k] = carry;
            }
            q = IntPoly(std::move(out));
        }
        if (q.degree() <= 0) break;
    }
    std::sort(roots.begin(), roots.end());
    return roots;
}

bool splits_over_integers(const IntPoly& p) {
    if (!p.is_monic()) return false;
    return static_cast<int>(integer_roots(p).size()) == p.degree();
}

}  // namespace splitpoly
