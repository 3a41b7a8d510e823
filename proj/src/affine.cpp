#include "splitpoly/affine.hpp"

#include <ostream>
#include <sstream>

namespace splitpoly {

AffineExpr& AffineExpr::operator+=(const AffineExpr& rhs) {
    gx += rhs.gx;
    gy += rhs.gy;
    c += rhs.c;
    return *this;
}

AffineExpr& AffineExpr::operator-=(const AffineExpr& rhs) {
    gx -= rhs.gx;
    gy -= rhs.gy;
    c -= rhs.c;
    return *this;
}

AffineExpr& AffineExpr::operator*=(const Rational& s) {
    gx *= s;
    gy *= s;
    c *= s;
    return *this;
}

Rational AffineExpr::evaluate(const Integer& g_x, const Integer& g_y) const {
    return gx * Rational(g_x - 1) + gy * Rational(g_y - 1) + c;
}

std::string AffineExpr::to_string() const {
    std::ostringstream os;
    bool first = true;
    auto term = [&](const Rational& coeff, const char* symbol) {
        if (coeff == 0) return;
        Rational mag = abs(coeff);
        if (first) {
            if (coeff < 0) os << "-";
        } else {
            os << (coeff < 0 ? " - " : " + ");
        }
        first = false;
        if (symbol == nullptr) {
            os << mag.get_str();
        } else {
            if (mag != 1) os << mag.get_str();
            os << symbol;
        }
    };
    term(gx, "(g_X-1)");
    term(gy, "(g_Y-1)");
    term(c, nullptr);
    return first ? std::string("0") : os.str();
}

std::ostream& operator<<(std::ostream& os, const AffineExpr& e) { return os << e.to_string(); }

}  // namespace splitpoly
