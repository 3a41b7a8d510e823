#include "splitpoly/hamming.hpp"

#include <algorithm>
#include <stdexcept>

namespace splitpoly::hamming {

namespace {

void check_length(int n, int limit, const char* what) {
    if (n < 0 || n > limit) throw std::invalid_argument(std::string(what) + ": length out of range");
}

void check_index(int n, int k, const char* what) {
    if (n < 0 || k < 0 || k > n) throw std::invalid_argument(std::string(what) + ": index out of range");
}

std::uint32_t full_mask(int n) { return n == 32 ? 0xFFFFFFFFU : ((1U << n) - 1U); }

// All masks of weight k among n bits, increasing.
std::vector<std::uint32_t> weight_class(int n, int k) {
    std::vector<std::uint32_t> out;
    const std::uint32_t limit = 1U << n;
    for (std::uint32_t y = 0; y < limit; ++y)
        if (std::popcount(y) == k) out.push_back(y);
    return out;
}

// Product of two polynomials in one variable with rational coefficients.
std::vector<Rational> convolve(const std::vector<Rational>& a, const std::vector<Rational>& b) {
    std::vector<Rational> out(a.size() + b.size() - 1, Rational(0));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
    return out;
}

Integer falling(long x, long k) {
    Integer r(1);
    for (long i = 0; i < k; ++i) r *= x - i;
    return r;
}

}  // namespace

// ---- BitVector ----

BitVector::BitVector(int n, std::uint32_t bits) : n_(n), bits_(bits) {
    check_length(n, max_length, "BitVector");
    if ((bits & ~full_mask(n)) != 0) throw std::invalid_argument("BitVector: bits beyond length");
}

BitVector BitVector::from_bits(const std::vector<int>& bits) {
    check_length(static_cast<int>(bits.size()), max_length, "BitVector");
    std::uint32_t mask = 0;
    for (std::size_t i = 0; i < bits.size(); ++i) {
        if (bits[i] != 0 && bits[i] != 1) throw std::invalid_argument("BitVector: entries must be 0 or 1");
        if (bits[i] == 1) mask |= 1U << i;
    }
    return BitVector(static_cast<int>(bits.size()), mask);
}

BitVector BitVector::ones(int n) { return BitVector(n, full_mask(n)); }

BitVector BitVector::with(int i, bool value) const {
    if (i < 0 || i >= n_) throw std::out_of_range("BitVector: coordinate out of range");
    std::uint32_t b = value ? (bits_ | (1U << i)) : (bits_ & ~(1U << i));
    return BitVector(n_, b);
}

BitVector BitVector::complement() const { return BitVector(n_, ~bits_ & full_mask(n_)); }

BitVector operator^(const BitVector& a, const BitVector& b) {
    if (a.n_ != b.n_) throw std::invalid_argument("BitVector: length mismatch");
    return BitVector(a.n_, a.bits_ ^ b.bits_);
}

std::vector<int> BitVector::to_bits() const {
    std::vector<int> out(static_cast<std::size_t>(n_));
    for (int i = 0; i < n_; ++i) out[static_cast<std::size_t>(i)] = (*this)[i] ? 1 : 0;
    return out;
}

std::string BitVector::to_string() const {
    std::string s;
    for (int i = 0; i < n_; ++i) s.push_back((*this)[i] ? '1' : '0');
    return s;
}

// ---- FiberVector ----

FiberVector::FiberVector(int n) : n_(n) {
    check_length(n, max_length, "FiberVector");
    coeffs_.assign(std::size_t{1} << n, Rational(0));
}

FiberVector FiberVector::basis(const BitVector& x) {
    FiberVector v(x.size());
    v[x] = 1;
    return v;
}

FiberVector& FiberVector::operator+=(const FiberVector& rhs) {
    if (rhs.n_ != n_) throw std::invalid_argument("FiberVector: length mismatch");
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
    return *this;
}

FiberVector& FiberVector::operator*=(const Rational& s) {
    for (auto& c : coeffs_) c *= s;
    return *this;
}

// ---- HomPoly ----

HomPoly::HomPoly(int n) : n_(n) {
    if (n < 0) throw std::invalid_argument("HomPoly: negative degree");
    coeffs_.assign(static_cast<std::size_t>(n) + 1, Rational(0));
}

HomPoly::HomPoly(int n, std::vector<Rational> coeffs) : n_(n), coeffs_(std::move(coeffs)) {
    if (n < 0 || coeffs_.size() != static_cast<std::size_t>(n) + 1)
        throw std::invalid_argument("HomPoly: coefficient count must be degree + 1");
}

bool HomPoly::is_zero() const {
    return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Rational& q) { return q == 0; });
}

HomPoly& HomPoly::operator+=(const HomPoly& rhs) {
    if (rhs.n_ != n_) throw std::invalid_argument("HomPoly: degree mismatch");
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
    return *this;
}

HomPoly& HomPoly::operator-=(const HomPoly& rhs) {
    if (rhs.n_ != n_) throw std::invalid_argument("HomPoly: degree mismatch");
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
    return *this;
}

HomPoly& HomPoly::operator*=(const Rational& s) {
    for (auto& c : coeffs_) c *= s;
    return *this;
}

HomPoly HomPoly::swapped() const {
    std::vector<Rational> c(coeffs_.rbegin(), coeffs_.rend());
    return HomPoly(n_, std::move(c));
}

HomPoly HomPoly::negate_y() const {
    HomPoly out = *this;
    for (int l = 0; l <= n_; ++l)
        if ((n_ - l) % 2 != 0) out[l] = -out[l];
    return out;
}

// ---- transforms ----

Integer krawtchouk(int n, int k, int l) {
    if (n < 0 || k < 0 || l < 0 || k > n || l > n) throw std::invalid_argument("krawtchouk: index out of range");
    Integer sum(0);
    for (int i = 0; i <= std::min(k, l); ++i) {
        Integer term = binomial(l, i) * binomial(n - l, k - i);
        if (i % 2 == 0)
            sum += term;
        else
            sum -= term;
    }
    return sum;
}

FiberVector gamma_apply(int n, int k, const FiberVector& v) {
    check_index(n, k, "gamma_apply");
    if (v.size() != n) throw std::invalid_argument("gamma_apply: length mismatch");
    const auto shell = weight_class(n, k);
    FiberVector out(n);
    const std::uint32_t limit = 1U << n;
    for (std::uint32_t x = 0; x < limit; ++x) {
        const Rational& c = v.coeffs()[x];
        if (c == 0) continue;
        for (std::uint32_t y : shell) out[BitVector(n, x ^ y)] += c;
    }
    return out;
}

FiberVector hadamard(int n, const BitVector& x) {
    if (x.size() != n) throw std::invalid_argument("hadamard: length mismatch");
    FiberVector out(n);
    const std::uint32_t limit = 1U << n;
    for (std::uint32_t y = 0; y < limit; ++y) {
        BitVector by(n, y);
        out[by] = x.dot(by) ? -1 : 1;
    }
    return out;
}

RatMatrix quotient_matrix(int n, int k) {
    check_index(n, k, "quotient_matrix");
    const auto size = static_cast<std::size_t>(n) + 1;
    RatMatrix g(size, size);
    for (int l = 0; l <= n; ++l)
        for (int j = 0; j <= k; ++j) {
            const int i = k + l - 2 * j;
            if (i < 0 || i > n) continue;
            g(static_cast<std::size_t>(l), static_cast<std::size_t>(i)) += Rational(binomial(l, j) * binomial(n - l, k - j));
        }
    return g;
}

HomPoly apply_quotient(const RatMatrix& g, const HomPoly& h) {
    const auto size = static_cast<std::size_t>(h.degree()) + 1;
    if (g.rows() != size || g.cols() != size) throw std::invalid_argument("apply_quotient: shape mismatch");
    HomPoly out(h.degree());
    for (std::size_t l = 0; l < size; ++l) {
        const Rational& c = h.coeffs()[l];
        if (c == 0) continue;
        for (std::size_t i = 0; i < size; ++i) out[static_cast<int>(i)] += c * g(l, i);
    }
    return out;
}

HomPoly delta_apply(int n, int k, const HomPoly& h) {
    check_index(n, k, "delta_apply");
    if (h.degree() != n) throw std::invalid_argument("delta_apply: degree mismatch");
    HomPoly out(n);
    const Integer kf = factorial(k);
    for (int l = 0; l <= n; ++l) {
        const Rational& c = h[l];
        if (c == 0) continue;
        // X^j Y^(k-j) D_X^(k-j) D_Y^j applied to X^l Y^(n-l)
        for (int j = 0; j <= k; ++j) {
            const Integer coef = binomial(k, j) * falling(l, k - j) * falling(n - l, j);
            if (coef == 0) continue;
            out[l - k + 2 * j] += c * make_rational(coef, kf);
        }
    }
    return out;
}

RatMatrix delta_matrix(int n, int k) {
    const auto size = static_cast<std::size_t>(n) + 1;
    RatMatrix m(size, size);
    for (int l = 0; l <= n; ++l) {
        HomPoly e(n);
        e[l] = 1;
        const HomPoly img = delta_apply(n, k, e);
        for (int i = 0; i <= n; ++i) m(static_cast<std::size_t>(i), static_cast<std::size_t>(l)) = img[i];
    }
    return m;
}

HomPoly eigen_vector(int n, int l, EigenVariant variant) {
    check_index(n, l, "eigen_vector");
    // Dehomogenise with Y = 1, X = t.
    std::vector<Rational> p{Rational(1)};
    const std::vector<Rational> minus{Rational(1), Rational(-1)};
    const std::vector<Rational> plus{Rational(1), Rational(1)};
    for (int i = 0; i < l; ++i) p = convolve(p, minus);
    for (int i = 0; i < n - l; ++i) p = convolve(p, plus);
    HomPoly v(n, std::move(p));
    if (variant == EigenVariant::plain) return v;
    const HomPoly twisted = v.negate_y();
    HomPoly part = variant == EigenVariant::even ? v + twisted : v - twisted;
    part *= Rational(1, 2);
    return part;
}

HomPoly eigen_vector(int n, const EigenPair& pair) { return eigen_vector(n, pair.index, pair.variant); }

// ---- invariant subspaces ----

std::string_view to_string(Subspace s) {
    switch (s) {
        case Subspace::plus: return "+";
        case Subspace::minus: return "-";
        case Subspace::even: return "e";
        case Subspace::odd: return "o";
        case Subspace::plus_even: return "+e";
        case Subspace::plus_odd: return "+o";
        case Subspace::minus_even: return "-e";
        case Subspace::minus_odd: return "-o";
    }
    return "?";
}

Subspace parse_subspace(std::string_view name) {
    for (Subspace s : {Subspace::plus, Subspace::minus, Subspace::even, Subspace::odd, Subspace::plus_even,
                       Subspace::plus_odd, Subspace::minus_even, Subspace::minus_odd})
        if (to_string(s) == name) return s;
    throw std::invalid_argument("unknown subspace name: " + std::string(name));
}

namespace {

bool is_composite(Subspace s) {
    return s == Subspace::plus_even || s == Subspace::plus_odd || s == Subspace::minus_even ||
           s == Subspace::minus_odd;
}

// Number of l values in the composite tables; l runs 0..count-1 and the
// eigenvector subscript is 2l (+e, +o) or 2l+1 (-e, -o).
int composite_count(int n, Subspace s) {
    const bool zero_mod4 = n % 4 == 0;
    // ceil(x / 4) for the strict bounds l < x/4, floor(n/4)+1 for l <= n/4
    auto below = [](int x) { return x <= 0 ? 0 : (x + 3) / 4; };
    switch (s) {
        case Subspace::plus_even: return zero_mod4 ? n / 4 + 1 : below(n);
        case Subspace::plus_odd: return below(n);
        case Subspace::minus_even: return below(n);
        case Subspace::minus_odd: return zero_mod4 ? below(n) : below(n - 2);
        default: break;
    }
    return 0;
}

}  // namespace

SubspaceSpec subspace_spectrum(int n, int k, Subspace name) {
    if (n < 1) throw std::invalid_argument("subspace_spectrum: n must be positive");
    check_index(n, k, "subspace_spectrum");
    SubspaceSpec spec{n, k, name, 0, {}};
    auto push = [&](int index, EigenVariant variant) {
        spec.eigen_list.push_back({index, variant, krawtchouk(n, k, index)});
    };

    if (name == Subspace::plus || name == Subspace::minus) {
        const int parity = name == Subspace::plus ? 0 : 1;
        for (int l = parity; l <= n; l += 2) push(l, EigenVariant::plain);
    } else if (name == Subspace::even || name == Subspace::odd) {
        if (k % 2 != 0) throw std::invalid_argument("subspace_spectrum: e/o spectra need even k");
        const EigenVariant variant = name == Subspace::even ? EigenVariant::even : EigenVariant::odd;
        for (int l = 0; 2 * l < n; ++l) push(l, variant);
        if (n % 2 == 0 && name == Subspace::even) push(n / 2, EigenVariant::even);
    } else {
        if (n % 2 != 0) throw std::invalid_argument("subspace_spectrum: composite subspaces need even n");
        if (k % 2 != 0) throw std::invalid_argument("subspace_spectrum: composite subspaces need even k");
        const bool plus = name == Subspace::plus_even || name == Subspace::plus_odd;
        const bool even = name == Subspace::plus_even || name == Subspace::minus_even;
        const int count = composite_count(n, name);
        for (int l = 0; l < count; ++l) {
            const int index = plus ? 2 * l : 2 * l + 1;
            push(index, even ? EigenVariant::even : EigenVariant::odd);
        }
    }
    spec.dimension = static_cast<int>(spec.eigen_list.size());
    return spec;
}

CharMinPoly char_and_min_poly(int n, int k, Subspace name) {
    const SubspaceSpec spec = subspace_spectrum(n, k, name);
    std::vector<Integer> all;
    for (const auto& e : spec.eigen_list) all.push_back(e.eigenvalue);
    std::vector<Integer> distinct = all;
    std::sort(distinct.begin(), distinct.end());
    distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
    return {IntPoly::from_roots(all), IntPoly::from_roots(distinct)};
}

RatMatrix subspace_projector(int n, Subspace name) {
    if (n < 0) throw std::invalid_argument("subspace_projector: negative degree");
    const auto size = static_cast<std::size_t>(n) + 1;
    const RatMatrix id = RatMatrix::identity(size);
    RatMatrix swap(size, size);
    RatMatrix twist(size, size);
    for (std::size_t l = 0; l < size; ++l) {
        swap(size - 1 - l, l) = 1;
        twist(l, l) = (static_cast<std::size_t>(n) - l) % 2 == 0 ? 1 : -1;
    }
    const Rational half(1, 2);
    const RatMatrix p_plus = half * (id + swap);
    const RatMatrix p_minus = half * (id - swap);
    const RatMatrix p_even = half * (id + twist);
    const RatMatrix p_odd = half * (id - twist);
    if (is_composite(name) && n % 2 != 0) throw std::invalid_argument("subspace_projector: composite subspaces need even n");
    switch (name) {
        case Subspace::plus: return p_plus;
        case Subspace::minus: return p_minus;
        case Subspace::even: return p_even;
        case Subspace::odd: return p_odd;
        case Subspace::plus_even: return p_plus * p_even;
        case Subspace::plus_odd: return p_plus * p_odd;
        case Subspace::minus_even: return p_minus * p_even;
        case Subspace::minus_odd: return p_minus * p_odd;
    }
    return id;
}

RatMatrix restricted_operator(int n, int k, Subspace name) {
    const RatMatrix basis = column_basis(subspace_projector(n, name));
    return restrict_to_subspace(delta_matrix(n, k), basis);
}

}  // namespace splitpoly::hamming
