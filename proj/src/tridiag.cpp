#include "splitpoly/tridiag.hpp"

#include <stdexcept>

namespace splitpoly::tridiag {

namespace {

void require_size(const TridiagSpec& spec, int m) {
    if (m < 0) throw std::invalid_argument("tridiag: m must be nonnegative");
    if (spec.a.size() < static_cast<std::size_t>(m) || spec.b.size() < static_cast<std::size_t>(m))
        throw std::invalid_argument("tridiag: fewer than m off-diagonal entries");
}

void require_odd(int n) {
    if (n < 3 || n % 2 == 0) throw std::invalid_argument("cnplus: n must be odd and >= 3");
}

Integer pair_product(const TridiagSpec& spec, int i) {
    return spec.a[static_cast<std::size_t>(i - 1)] * spec.b[static_cast<std::size_t>(i - 1)];
}

Integer enumerate(const TridiagSpec& spec, int m, int remaining, int first) {
    if (remaining == 0) return Integer(1);
    Integer sum(0);
    for (int i = first; i <= m; ++i) sum += pair_product(spec, i) * enumerate(spec, m, remaining - 1, i + 2);
    return sum;
}

}  // namespace

IntPoly det_tridiag(const TridiagSpec& spec, int m) {
    require_size(spec, m);
    const IntPoly x = IntPoly::monomial(1);
    IntPoly before = IntPoly::constant(Integer(1));  // M^(-1), empty matrix
    IntPoly current = x;                             // M^(0)
    for (int step = 1; step <= m; ++step) {
        IntPoly next = x * current - pair_product(spec, step) * before;
        before = std::move(current);
        current = std::move(next);
    }
    return current;
}

Integer matchings_coeff(const TridiagSpec& spec, int m, int j) {
    require_size(spec, m);
    if (j < 0 || 2 * j > m + 1) throw std::invalid_argument("matchings_coeff: j out of range");
    return enumerate(spec, m, j, 1);
}

IntPoly continuant(const std::vector<IntPoly>& diag, const std::vector<Integer>& super,
                   const std::vector<Integer>& sub) {
    const std::size_t size = diag.size();
    if (size > 0 && (super.size() + 1 < size || sub.size() + 1 < size))
        throw std::invalid_argument("continuant: off-diagonal too short");
    IntPoly before = IntPoly::constant(Integer(1));
    if (size == 0) return before;
    IntPoly current = diag[0];
    for (std::size_t i = 1; i < size; ++i) {
        IntPoly next = diag[i] * current - (super[i - 1] * sub[i - 1]) * before;
        before = std::move(current);
        current = std::move(next);
    }
    return current;
}

IntPoly cnplus(int n) {
    require_odd(n);
    const int m = (n + 1) / 2;
    const IntPoly x = IntPoly::monomial(1);
    std::vector<IntPoly> diag(static_cast<std::size_t>(m), x);
    diag.back() = x - IntPoly::constant(Integer(m));
    std::vector<Integer> super;
    std::vector<Integer> sub;
    for (int i = 1; i < m; ++i) {
        super.emplace_back(-i);
        sub.emplace_back(-(n - i + 1));
    }
    return continuant(diag, super, sub);
}

IntPoly cnplus_product(int n) {
    require_odd(n);
    const int m = (n + 1) / 2;
    std::vector<Integer> roots;
    for (int l = 1; l <= m; ++l) roots.emplace_back(((l + m) % 2 == 0 ? 1 : -1) * (2 * l - 1));
    return IntPoly::from_roots(roots);
}

}  // namespace splitpoly::tridiag
