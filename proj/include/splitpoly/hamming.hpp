#ifndef SPLITPOLY_HAMMING_HPP
#define SPLITPOLY_HAMMING_HPP

#include <bit>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "splitpoly/exact.hpp"
#include "splitpoly/intpoly.hpp"
#include "splitpoly/linalg.hpp"

namespace splitpoly::hamming {

/// Bit vector of length n <= 32; bit i is coordinate i (0-based).
class BitVector {
public:
    static constexpr int max_length = 32;

    BitVector() = default;
    BitVector(int n, std::uint32_t bits);
    static BitVector from_bits(const std::vector<int>& bits);
    static BitVector zeros(int n) { return BitVector(n, 0); }
    static BitVector ones(int n);

    int size() const { return n_; }
    std::uint32_t bits() const { return bits_; }
    bool operator[](int i) const { return (bits_ >> i) & 1U; }
    BitVector with(int i, bool value) const;

    int weight() const { return std::popcount(bits_); }
    /// Parity of the standard inner product.
    bool dot(const BitVector& other) const { return std::popcount(bits_ & other.bits_) & 1; }
    BitVector complement() const;

    friend BitVector operator^(const BitVector& a, const BitVector& b);
    friend bool operator==(const BitVector&, const BitVector&) = default;

    std::vector<int> to_bits() const;
    std::string to_string() const;

private:
    int n_ = 0;
    std::uint32_t bits_ = 0;
};

inline int distance(const BitVector& a, const BitVector& b) { return (a ^ b).weight(); }

/// Element of the group algebra over all 2^n bit vectors, stored densely and
/// indexed by BitVector::bits(). Lengths above max_length are refused.
class FiberVector {
public:
    static constexpr int max_length = 24;

    explicit FiberVector(int n);
    static FiberVector basis(const BitVector& x);

    int size() const { return n_; }
    std::size_t dimension() const { return coeffs_.size(); }
    const Rational& operator[](const BitVector& x) const { return coeffs_.at(x.bits()); }
    Rational& operator[](const BitVector& x) { return coeffs_.at(x.bits()); }
    const std::vector<Rational>& coeffs() const { return coeffs_; }

    FiberVector& operator+=(const FiberVector& rhs);
    FiberVector& operator*=(const Rational& s);
    friend FiberVector operator+(FiberVector a, const FiberVector& b) { return a += b; }
    friend FiberVector operator*(const Rational& s, FiberVector a) { return a *= s; }
    friend bool operator==(const FiberVector&, const FiberVector&) = default;

private:
    int n_;
    std::vector<Rational> coeffs_;
};

/// Homogeneous polynomial of degree n in X, Y; coefficient at index l is
/// the coefficient of X^l Y^(n-l).
class HomPoly {
public:
    explicit HomPoly(int n);
    HomPoly(int n, std::vector<Rational> coeffs);

    int degree() const { return n_; }
    const std::vector<Rational>& coeffs() const { return coeffs_; }
    const Rational& operator[](int l) const { return coeffs_.at(static_cast<std::size_t>(l)); }
    Rational& operator[](int l) { return coeffs_.at(static_cast<std::size_t>(l)); }
    bool is_zero() const;

    HomPoly& operator+=(const HomPoly& rhs);
    HomPoly& operator-=(const HomPoly& rhs);
    HomPoly& operator*=(const Rational& s);
    friend HomPoly operator+(HomPoly a, const HomPoly& b) { return a += b; }
    friend HomPoly operator-(HomPoly a, const HomPoly& b) { return a -= b; }
    friend HomPoly operator*(const Rational& s, HomPoly a) { return a *= s; }
    friend bool operator==(const HomPoly&, const HomPoly&) = default;

    /// p(Y, X)
    HomPoly swapped() const;
    /// p(X, -Y)
    HomPoly negate_y() const;

private:
    int n_;
    std::vector<Rational> coeffs_;
};

/// Eigenvalue of the distance-k transform on the Hadamard vector of a
/// weight-l word: sum_i (-1)^i C(l,i) C(n-l,k-i), the Krawtchouk value P_k(l; n).
Integer krawtchouk(int n, int k, int l);

/// Distance-k transform: each basis word x goes to the sum of all words at
/// Hamming distance k from x.
FiberVector gamma_apply(int n, int k, const FiberVector& v);

/// Character sum of x: sum over y of (-1)^(x.y) y.
FiberVector hadamard(int n, const BitVector& x);

/// Quotient of the distance-k transform on weight classes. Row l holds the
/// image of the class of weight l: entry (l, i) = C(l,j) C(n-l,k-j) where
/// i = k + l - 2j. Acting on a HomPoly coefficient vector c is the row-vector
/// product c * G (see apply_quotient).
RatMatrix quotient_matrix(int n, int k);

/// c * G for the coefficient vector c of h.
HomPoly apply_quotient(const RatMatrix& g, const HomPoly& h);

/// The differential operator (1/k!) sum_j C(k,j) X^j Y^(k-j) D_X^(k-j) D_Y^j
/// applied to h.
HomPoly delta_apply(int n, int k, const HomPoly& h);

/// Column-vector operator matrix of delta_apply (the transpose of quotient_matrix).
RatMatrix delta_matrix(int n, int k);

enum class EigenVariant { plain, even, odd };

/// plain: v_l = (Y - X)^l (X + Y)^(n - l), whose coefficient at index k is
/// krawtchouk(n, k, l). even/odd: the Y-even and Y-odd parts of v_l.
HomPoly eigen_vector(int n, int l, EigenVariant variant);

/// Invariant subspaces of the weight-class model: symmetric (+) and
/// antisymmetric (-) under X <-> Y, Y-even (e) and Y-odd (o), and the four
/// intersections.
enum class Subspace { plus, minus, even, odd, plus_even, plus_odd, minus_even, minus_odd };

std::string_view to_string(Subspace s);
/// Accepts "+", "-", "e", "o", "+e", "+o", "-e", "-o".
Subspace parse_subspace(std::string_view name);

struct EigenPair {
    int index;             // subscript l of the eigenvector v_l / v_l^e / v_l^o
    EigenVariant variant;  // which vector family carries it
    Integer eigenvalue;    // krawtchouk(n, k, l)
};

struct SubspaceSpec {
    int n;
    int k;
    Subspace name;
    int dimension;
    std::vector<EigenPair> eigen_list;
};

/// Eigen-decomposition of delta_k on an invariant subspace. Supported:
/// + and - for every k; e and o for even k; the four intersections for even
/// k and even n. Throws std::invalid_argument otherwise.
SubspaceSpec subspace_spectrum(int n, int k, Subspace name);

/// The eigenvector carrying a listed eigenpair.
HomPoly eigen_vector(int n, const EigenPair& pair);

struct CharMinPoly {
    IntPoly characteristic;
    IntPoly minimal;
};

CharMinPoly char_and_min_poly(int n, int k, Subspace name);

/// Coefficient-space projector onto the subspace (column-vector convention).
RatMatrix subspace_projector(int n, Subspace name);

/// delta_k restricted to the image of the subspace projector, in the basis
/// given by column_basis of the projector. Independent of the tables.
RatMatrix restricted_operator(int n, int k, Subspace name);

}  // namespace splitpoly::hamming

#endif
