#ifndef SPLITPOLY_CORRESPONDENCE_HPP
#define SPLITPOLY_CORRESPONDENCE_HPP

#include <utility>
#include <vector>

#include "splitpoly/exact.hpp"
#include "splitpoly/intpoly.hpp"
#include "splitpoly/report.hpp"

namespace splitpoly::correspondence {

/// Coefficients a^k_j of the power relations for odd n. Row k is stored for
/// 0 <= k <= (n+1)/2 (one step past the relations themselves, because the
/// final equation consumes the next row). Entries with j of the wrong parity
/// are zero; a^k_k = -1.
class ACoeffTable {
public:
    ACoeffTable(int n, std::vector<std::vector<Integer>> rows) : n_(n), rows_(std::move(rows)) {}
    int n() const { return n_; }
    int top() const { return static_cast<int>(rows_.size()) - 1; }
    /// Zero outside 0 <= j <= k; throws if k is not stored.
    Integer at(int k, int j) const;
    const std::vector<Integer>& row(int k) const { return rows_.at(static_cast<std::size_t>(k)); }

private:
    int n_;
    std::vector<std::vector<Integer>> rows_;
};

/// a^{k+1}_i = a^k_{i-1} - k(n-k+1) a^{k-1}_i with a^0_0 = a^1_1 = -1.
ACoeffTable a_table(int n);

/// Nested-sum closed form: (-1)^(i+1) times a sum over i indices
/// 1 <= j_1, j_{t+1} >= j_t + 2, j_t <= k - 2i + 1 + 2(t-1), of the
/// product of j_t (n - j_t + 1). Returns a^k_{k-2i}. Valid for
/// 0 <= 2i <= k <= (n+1)/2.
Integer a_closed_form(int n, int k, int i);

/// The monic degree-(k+1) relation for n = 2k+1, built from the table as
/// sum_i ((k+1) a^k_i - a^{k+1}_i) X^i.
IntPoly odd_equation(int n);

/// prod_{i=0}^k (X + (-1)^(i+k+1) (2i+1)) for n = 2k+1.
IntPoly odd_split_product(int n);

/// Coefficients b^k_j for even n, rows 0 <= k <= n/2:
/// b^{k+1}_j = b^k_{j-1} - C(2k,2) C(n-2k+2,2) b^{k-1}_j - 2k(n-2k) b^k_j,
/// starting from b^0_0 = -1, b^1 = (0, -1).
class BCoeffTable {
public:
    BCoeffTable(int n, std::vector<std::vector<Integer>> rows) : n_(n), rows_(std::move(rows)) {}
    int n() const { return n_; }
    int top() const { return static_cast<int>(rows_.size()) - 1; }
    Integer at(int k, int j) const;
    const std::vector<Integer>& row(int k) const { return rows_.at(static_cast<std::size_t>(k)); }

private:
    int n_;
    std::vector<std::vector<Integer>> rows_;
};

BCoeffTable b_table(int n);

/// Polynomial in X whose coefficients live in Z[sigma]/(sigma^2 - 1):
/// coefficient j is id_part + sigma_part * sigma.
class SigmaPoly {
public:
    struct Coeff {
        Integer id_part{0};
        Integer sigma_part{0};
    };

    explicit SigmaPoly(std::vector<Coeff> coeffs) : coeffs_(std::move(coeffs)) {}

    const std::vector<Coeff>& coeffs() const { return coeffs_; }
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    /// Adds c * sigma^power * X^j.
    void add(int j, const Integer& c, int power);
    /// Image under sigma -> +1 or sigma -> -1.
    IntPoly substitute(int sigma) const;

private:
    std::vector<Coeff> coeffs_;
};

/// The relation in Z[sigma][X] for n = 4k-2 (degree k) or n = 4k
/// (degree k+1), n >= 6.
SigmaPoly even_sigma_equation(int n);

/// Relation on the complement (sigma = +1), n >= 6 even.
IntPoly complement_equation(int n);

/// Relation on the Prym part (sigma = -1), degree floor((n+2)/4), n >= 6 even.
IntPoly prym_equation(int n);

struct EvenProducts {
    IntPoly complement;
    IntPoly prym;
};

/// Closed linear factorisations of the two relations, n >= 4 even.
EvenProducts even_split_products(int n);

/// Checks that the assembled relations equal the products, that the
/// products are the minimal polynomials of the spectral model, and that
/// they are squarefree. n >= 3.
std::vector<CheckRecord> verify_split(int n);

}  // namespace splitpoly::correspondence

#endif
