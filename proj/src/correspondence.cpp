#include "splitpoly/correspondence.hpp"

#include <stdexcept>
#include <string>

#include "splitpoly/hamming.hpp"
#include "splitpoly/linalg.hpp"

namespace splitpoly::correspondence {

namespace {

void require_odd(int n, const char* what) {
    if (n < 3 || n % 2 == 0) throw std::invalid_argument(std::string(what) + ": n must be odd and >= 3");
}

void require_even(int n, int min, const char* what) {
    if (n < min || n % 2 != 0)
        throw std::invalid_argument(std::string(what) + ": n must be even and >= " + std::to_string(min));
}

Integer table_at(const std::vector<std::vector<Integer>>& rows, int k, int j) {
    if (k < 0 || k >= static_cast<int>(rows.size())) throw std::out_of_range("coefficient row not stored");
    if (j < 0 || j > k) return Integer(0);
    return rows[static_cast<std::size_t>(k)][static_cast<std::size_t>(j)];
}

// Nested sums of the closed form; t is the 1-based position of the index.
Integer nested(int n, int k, int i, int t, int lower) {
    if (t > i) return Integer(1);
    const int upper = k - 2 * i + 1 + 2 * (t - 1);
    Integer sum(0);
    for (int j = lower; j <= upper; ++j) sum += Integer(j) * (n - j + 1) * nested(n, k, i, t + 1, j + 2);
    return sum;
}

}  // namespace

Integer ACoeffTable::at(int k, int j) const { return table_at(rows_, k, j); }
Integer BCoeffTable::at(int k, int j) const { return table_at(rows_, k, j); }

ACoeffTable a_table(int n) {
    require_odd(n, "a_table");
    const int top = (n + 1) / 2;
    std::vector<std::vector<Integer>> rows;
    rows.push_back({Integer(-1)});
    rows.push_back({Integer(0), Integer(-1)});
    for (int k = 1; k < top; ++k) {
        std::vector<Integer> next(static_cast<std::size_t>(k) + 2);
        const Integer step = Integer(k) * (n - k + 1);
        for (int i = 0; i <= k + 1; ++i)
            next[static_cast<std::size_t>(i)] = table_at(rows, k, i - 1) - step * table_at(rows, k - 1, i);
        rows.push_back(std::move(next));
    }
    return ACoeffTable(n, std::move(rows));
}

Integer a_closed_form(int n, int k, int i) {
    require_odd(n, "a_closed_form");
    if (i < 0 || k < 2 * i || k > (n + 1) / 2) throw std::invalid_argument("a_closed_form: index out of range");
    const Integer s = nested(n, k, i, 1, 1);
    return i % 2 == 0 ? Integer(-s) : s;
}

IntPoly odd_equation(int n) {
    require_odd(n, "odd_equation");
    const int k = (n - 1) / 2;
    const ACoeffTable a = a_table(n);
    std::vector<Integer> c(static_cast<std::size_t>(k) + 2);
    for (int i = 0; i <= k + 1; ++i) c[static_cast<std::size_t>(i)] = (k + 1) * a.at(k, i) - a.at(k + 1, i);
    return IntPoly(std::move(c));
}

IntPoly odd_split_product(int n) {
    require_odd(n, "odd_split_product");
    const int k = (n - 1) / 2;
    std::vector<Integer> roots;
    for (int i = 0; i <= k; ++i) roots.emplace_back(((i + k) % 2 == 0 ? 1 : -1) * (2 * i + 1));
    return IntPoly::from_roots(roots);
}

BCoeffTable b_table(int n) {
    require_even(n, 4, "b_table");
    const int top = n / 2;
    std::vector<std::vector<Integer>> rows;
    rows.push_back({Integer(-1)});
    rows.push_back({Integer(0), Integer(-1)});
    for (int k = 1; k < top; ++k) {
        std::vector<Integer> next(static_cast<std::size_t>(k) + 2);
        const Integer back = binomial(2 * k, 2) * binomial(n - 2 * k + 2, 2);
        const Integer diag = Integer(2 * k) * (n - 2 * k);
        for (int j = 0; j <= k + 1; ++j)
            next[static_cast<std::size_t>(j)] =
                table_at(rows, k, j - 1) - back * table_at(rows, k - 1, j) - diag * table_at(rows, k, j);
        rows.push_back(std::move(next));
    }
    return BCoeffTable(n, std::move(rows));
}

void SigmaPoly::add(int j, const Integer& c, int power) {
    if (j < 0) throw std::invalid_argument("SigmaPoly: negative degree");
    if (j >= static_cast<int>(coeffs_.size())) coeffs_.resize(static_cast<std::size_t>(j) + 1);
    auto& slot = coeffs_[static_cast<std::size_t>(j)];
    if (power % 2 == 0)
        slot.id_part += c;
    else
        slot.sigma_part += c;
}

IntPoly SigmaPoly::substitute(int sigma) const {
    if (sigma != 1 && sigma != -1) throw std::invalid_argument("SigmaPoly: sigma must be +1 or -1");
    std::vector<Integer> c;
    c.reserve(coeffs_.size());
    for (const auto& t : coeffs_) c.push_back(t.id_part + sigma * t.sigma_part);
    return IntPoly(std::move(c));
}

SigmaPoly even_sigma_equation(int n) {
    require_even(n, 6, "even_sigma_equation");
    const BCoeffTable b = b_table(n);
    if (n % 4 == 2) {
        const int k = (n + 2) / 4;
        const Integer c2k = binomial(2 * k, 2);
        SigmaPoly p(std::vector<SigmaPoly::Coeff>(static_cast<std::size_t>(k) + 1));
        p.add(k, Integer(1), 0);
        for (int j = 0; j < k; ++j) {
            p.add(j, -b.at(k, j), k + j);
            p.add(j, c2k * b.at(k - 1, j), k + j - 1);
        }
        return p;
    }
    const int k = n / 4;
    const Integer cc = binomial(2 * k, 2) * binomial(2 * k + 2, 2);
    const Integer four_k2 = Integer(4) * k * k;
    SigmaPoly p(std::vector<SigmaPoly::Coeff>(static_cast<std::size_t>(k) + 2));
    p.add(k + 1, Integer(1), 0);
    for (int j = 0; j <= k; ++j) {
        p.add(j, cc * b.at(k - 1, j) - b.at(k, j - 1), k + j - 1);
        p.add(j, cc * b.at(k - 1, j) + four_k2 * b.at(k, j), k + j);
    }
    return p;
}

IntPoly complement_equation(int n) { return even_sigma_equation(n).substitute(1); }

IntPoly prym_equation(int n) {
    require_even(n, 6, "prym_equation");
    if (n % 4 == 2) return even_sigma_equation(n).substitute(-1);
    // Degree-k relation from subtracting the sigma-image of the top power
    // relation: X^k - sum_j (-1)^(k+j) b^k_j X^j.
    const int k = n / 4;
    const BCoeffTable b = b_table(n);
    std::vector<Integer> c(static_cast<std::size_t>(k) + 1);
    c[static_cast<std::size_t>(k)] = 1;
    for (int j = 0; j < k; ++j) c[static_cast<std::size_t>(j)] = ((k + j) % 2 == 0 ? -1 : 1) * b.at(k, j);
    return IntPoly(std::move(c));
}

EvenProducts even_split_products(int n) {
    require_even(n, 4, "even_split_products");
    std::vector<Integer> comp;
    std::vector<Integer> prym;
    if (n % 4 == 0) {
        const long k = n / 4;
        for (long j = 0; j <= k; ++j) comp.emplace_back(8 * (k - j) * (k - j) - 2 * k);
        for (long j = 0; j < k; ++j) prym.emplace_back(-8 * (k - j) * (k - j) + 10 * k - 8 * j - 2);
    } else {
        const long k = (n + 2) / 4;
        for (long j = 0; j < k; ++j) comp.emplace_back(8 * (k - j) * (k - j) - 10 * k + 8 * j + 3);
        for (long j = 0; j < k; ++j) prym.emplace_back(-8 * (k - j) * (k - j) + 18 * k - 16 * j - 9);
    }
    return {IntPoly::from_roots(comp), IntPoly::from_roots(prym)};
}

namespace {

std::string show(const IntPoly& p) { return p.to_string(); }

std::string mismatch(const IntPoly& got, const IntPoly& want) { return show(got) + " vs " + show(want); }

void verify_odd(int n, std::vector<CheckRecord>& out) {
    const IntPoly eq = odd_equation(n);
    const IntPoly prod = odd_split_product(n);
    out.push_back(make_check(n, "odd.equation_equals_product", "odd-split/assembled", eq == prod, mismatch(eq, prod)));

    const auto table_min = hamming::char_and_min_poly(n, n - 1, hamming::Subspace::even).minimal;
    out.push_back(make_check(n, "odd.product_equals_table_minpoly", "odd-split/spectral", prod == table_min,
                             mismatch(prod, table_min)));

    const RatMatrix restricted = hamming::restricted_operator(n, n - 1, hamming::Subspace::even);
    out.push_back(make_check(n, "odd.product_is_operator_minpoly", "odd-split/spectral",
                             is_minimal_polynomial(prod, restricted), show(prod)));

    out.push_back(make_check(n, "odd.product_squarefree", "odd-split/simple-roots", is_squarefree(prod), show(prod)));
}

void verify_even(int n, std::vector<CheckRecord>& out) {
    const EvenProducts prod = even_split_products(n);
    using hamming::Subspace;
    const int k = n - 2;

    const auto plus_min = hamming::char_and_min_poly(n, k, Subspace::plus_even).minimal;
    const auto minus_min = hamming::char_and_min_poly(n, k, Subspace::minus_even).minimal;
    out.push_back(make_check(n, "even.complement_product_equals_table_minpoly", "even-split/spectral",
                             prod.complement == plus_min, mismatch(prod.complement, plus_min)));
    out.push_back(make_check(n, "even.prym_product_equals_table_minpoly", "even-split/spectral",
                             prod.prym == minus_min, mismatch(prod.prym, minus_min)));

    out.push_back(make_check(n, "even.complement_product_is_operator_minpoly", "even-split/spectral",
                             is_minimal_polynomial(prod.complement, hamming::restricted_operator(n, k, Subspace::plus_even)),
                             show(prod.complement)));
    out.push_back(make_check(n, "even.prym_product_is_operator_minpoly", "even-split/spectral",
                             is_minimal_polynomial(prod.prym, hamming::restricted_operator(n, k, Subspace::minus_even)),
                             show(prod.prym)));
    out.push_back(make_check(n, "even.products_squarefree", "even-split/simple-roots",
                             is_squarefree(prod.complement) && is_squarefree(prod.prym),
                             show(prod.complement) + " ; " + show(prod.prym)));

    if (n < 6) {
        out.push_back({n, "even.assembled_equations", "even-split/assembled", CheckStatus::skipped,
                       "relations need n >= 6"});
        return;
    }

    const IntPoly comp = complement_equation(n);
    const IntPoly prym = prym_equation(n);
    out.push_back(make_check(n, "even.complement_equation_equals_product", "even-split/assembled",
                             comp == prod.complement, mismatch(comp, prod.complement)));
    out.push_back(make_check(n, "even.prym_equation_equals_product", "even-split/assembled", prym == prod.prym,
                             mismatch(prym, prod.prym)));

    const IntPoly minus_image = even_sigma_equation(n).substitute(-1);
    const auto [quotient, remainder] = divmod_monic(minus_image, prym);
    bool ok = remainder.is_zero();
    std::string detail = "sigma=-1 image " + show(minus_image);
    if (ok && quotient.degree() == 1) {
        detail += "; dropped root " + to_string(Integer(-quotient.coeff(0)));
        // n = 4k: the extra factor is X - 4k^2
        ok = n % 4 == 0 && quotient.coeff(0) == -Integer(n / 4) * (n / 4) * 4;
    } else if (ok) {
        ok = quotient.degree() == 0 && n % 4 == 2;
    }
    out.push_back(make_check(n, "even.sigma_minus_divisible_by_prym", "even-split/sigma-form", ok, detail));
}

}  // namespace

std::vector<CheckRecord> verify_split(int n) {
    if (n < 3) throw std::invalid_argument("verify_split: n must be >= 3");
    std::vector<CheckRecord> out;
    if (n % 2 == 1)
        verify_odd(n, out);
    else
        verify_even(n, out);
    return out;
}

}  // namespace splitpoly::correspondence
