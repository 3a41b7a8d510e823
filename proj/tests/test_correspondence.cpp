#include <doctest.h>

#include <set>

#include "splitpoly/correspondence.hpp"
#include "splitpoly/hamming.hpp"

using namespace splitpoly;
using namespace splitpoly::correspondence;

namespace {

IntPoly from_root_set(const std::set<Integer>& roots) {
    return IntPoly::from_roots(std::vector<Integer>(roots.begin(), roots.end()));
}

// Eigenvalues of delta_{n-1} on the Y-even part, odd n: the vectors v^e_l
// for l < n/2 span it.
IntPoly odd_oracle(int n) {
    std::set<Integer> roots;
    for (int l = 0; 2 * l < n; ++l) roots.insert(hamming::krawtchouk(n, n - 1, l));
    return from_root_set(roots);
}

// Even n: v^e_l = v^e_{n-l} is symmetric for even l, antisymmetric for odd l,
// and never zero, so l runs over 0..n/2.
std::pair<IntPoly, IntPoly> even_oracle(int n) {
    std::set<Integer> plus, minus;
    for (int l = 0; 2 * l <= n; ++l) {
        const Integer lambda = hamming::krawtchouk(n, n - 2, l);
        if (l % 2 == 0) plus.insert(lambda);
        else minus.insert(lambda);
    }
    return {from_root_set(plus), from_root_set(minus)};
}

}  // namespace

TEST_CASE("odd relation for n = 5") {
    const IntPoly want = IntPoly{-1, 1} * IntPoly{3, 1} * IntPoly{-5, 1};
    CHECK(odd_equation(5) == want);
    CHECK(odd_equation(5) == IntPoly{15, -13, -3, 1});
    CHECK(odd_split_product(3) == IntPoly{-3, -2, 1});
}

TEST_CASE("odd relations equal the eigenvalue products") {
    for (int n = 3; n <= 21; n += 2) {
        CHECK(odd_equation(n) == odd_oracle(n));
        CHECK(odd_split_product(n) == odd_oracle(n));
    }
    CHECK_THROWS(odd_equation(6));
}

TEST_CASE("odd coefficient table") {
    const auto t = a_table(7);
    CHECK(t.top() == 4);
    CHECK(t.at(0, 0) == -1);
    CHECK(t.at(1, 1) == -1);
    CHECK(t.at(2, 0) == 7);
    CHECK(t.at(2, 1) == 0);
    CHECK(t.at(3, 5) == 0);  // outside 0..k
    // a^3_1 = a^2_0 - 2(n-1) a^1_1 = n + 2(n-1)
    CHECK(t.at(3, 1) == 7 + 2 * 6);
    CHECK_THROWS(t.at(5, 0));
    for (int n = 3; n <= 25; n += 2) {
        const auto tab = a_table(n);
        for (int k = 0; k <= tab.top(); ++k)
            for (int i = 0; 2 * i <= k; ++i) CHECK(a_closed_form(n, k, i) == tab.at(k, k - 2 * i));
    }
}

TEST_CASE("even coefficient table") {
    for (int n = 6; n <= 20; n += 2) {
        const auto t = b_table(n);
        CHECK(t.at(2, 0) == binomial(n, 2));
        CHECK(t.at(2, 1) == 2 * (n - 2));
        CHECK(t.at(3, 0) == -4 * (n - 4) * binomial(n, 2));
        CHECK(t.at(3, 1) == binomial(n, 2) + 6 * binomial(n - 2, 2) - 8 * (n - 4) * (n - 2));
        CHECK(t.at(3, 2) == 2 * (n - 2) + 4 * (n - 4));
        for (int k = 0; k <= t.top(); ++k) CHECK(t.at(k, k) == -1);
    }
}

TEST_CASE("even relations") {
    CHECK(complement_equation(8) == IntPoly{448, -16, -28, 1});
    CHECK(prym_equation(8) == IntPoly{-28, 12, 1});
    CHECK(even_sigma_equation(6).substitute(-1) == IntPoly{-15, 2, 1});

    for (int n = 4; n <= 20; n += 2) {
        const auto [plus, minus] = even_oracle(n);
        const auto prods = even_split_products(n);
        CHECK(prods.complement == plus);
        CHECK(prods.prym == minus);
        if (n >= 6) {
            CHECK(complement_equation(n) == plus);
            CHECK(prym_equation(n) == minus);
            CHECK(prym_equation(n).degree() == (n + 2) / 4);
            const auto sig = even_sigma_equation(n);
            CHECK(sig.substitute(1) == plus);
            CHECK(divmod_monic(sig.substitute(-1), minus).second.is_zero());
        }
    }
    const auto four = even_split_products(4);
    CHECK(integer_roots(four.complement) == std::vector<Integer>{Integer(-2), Integer(6)});
    CHECK(integer_roots(four.prym) == std::vector<Integer>{Integer(0)});
}

TEST_CASE("sigma polynomials") {
    SigmaPoly p({{}, {}});
    p.add(1, Integer(1), 0);
    p.add(0, Integer(3), 1);
    p.add(0, Integer(2), 2);  // sigma^2 = 1
    CHECK(p.substitute(1) == IntPoly{5, 1});
    CHECK(p.substitute(-1) == IntPoly{-1, 1});
}

TEST_CASE("split verification records") {
    for (int n = 3; n <= 12; ++n) {
        const auto records = verify_split(n);
        CHECK_FALSE(records.empty());
        CHECK(all_pass(records));
    }
}
