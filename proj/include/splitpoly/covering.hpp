#ifndef SPLITPOLY_COVERING_HPP
#define SPLITPOLY_COVERING_HPP

#include <cstdint>
#include <stdexcept>
#include <vector>

#include <json.hpp>

#include "splitpoly/exact.hpp"
#include "splitpoly/hamming.hpp"

namespace splitpoly::covering {

using hamming::BitVector;

/// Signed permutation of n strands with an even number of sign flips.
/// Acts on bit vectors by act(g, x)[perm[i]] = x[i] xor signs[i]; products
/// compose as maps, (g*h) applies h first.
class SignedPerm {
public:
    SignedPerm() = default;
    /// perm holds 0-based images; throws unless it is a permutation and the
    /// sign weight is even.
    SignedPerm(std::vector<int> perm, BitVector signs);

    static SignedPerm identity(int n);
    /// Swap of strands i and j, optionally flipping both.
    static SignedPerm transposition(int n, int i, int j, bool flip_both);

    int size() const { return static_cast<int>(perm_.size()); }
    const std::vector<int>& perm() const { return perm_; }
    const BitVector& signs() const { return signs_; }

    SignedPerm inverse() const;
    friend SignedPerm operator*(const SignedPerm& g, const SignedPerm& h);
    friend bool operator==(const SignedPerm&, const SignedPerm&) = default;

    bool is_identity() const;
    /// A transposition (i j) whose sign flips are none or exactly {i, j}.
    bool is_simple_type() const;

private:
    std::vector<int> perm_;
    BitVector signs_;
};

BitVector act(const SignedPerm& g, const BitVector& x);

class ValidationError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class NoInstanceError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Monodromy of the tower over a genus-g_Y base: handles are stored flat as
/// a_1, b_1, a_2, b_2, ...; the relation is
/// [a_1,b_1] ... [a_g,b_g] * c_1 * ... * c_B = 1.
struct MonodromyData {
    int n = 0;
    int genus_y = 0;
    std::vector<SignedPerm> handles;
    std::vector<SignedPerm> branches;
};

/// Throws ValidationError on a size mismatch, a wrong handle count, a
/// broken relation or a branch element that is not simple-type.
void validate(const MonodromyData& m);

struct ComponentCounts {
    int orbits_on_strands = 0;
    int orbits_on_liftings = 0;
    int orbits_even = 0;
    int orbits_odd = 0;

    /// Connected lifting curve split into exactly two parity components.
    bool two_components() const { return orbits_on_liftings == 2 && orbits_even == 1 && orbits_odd == 1; }
};

/// Orbits of the generated group on strands and on all 2^n bit vectors
/// (n <= 20). Validates first.
ComponentCounts component_counts(const MonodromyData& m);

struct LiftingComponent {
    std::uint64_t degree = 0;  // orbit size
    Integer ramification;      // 2-cycles of all branch elements inside the orbit
    Integer genus;
};

struct RamificationReport {
    Integer g_x;
    int branch_count = 0;
    std::vector<Integer> two_cycles_per_branch;
    std::vector<LiftingComponent> components;
    /// 2^(n-3)((g_X-1) - (n-4)(g_Y-1)) + 1
    Rational closed_genus;
    bool base_cover_connected = false;
};

/// Riemann-Hurwitz below (g_X) and above (per lifting component). Throws
/// ValidationError when there are no branch points.
RamificationReport ramification_and_genus(const MonodromyData& m);

/// For the complement involution x -> x with every bit flipped: commutes
/// with all generators, has no fixed points, and for even n preserves each
/// lifting component while halving its size.
struct ComplementReport {
    bool commutes = false;
    bool fixed_point_free = false;
    bool halves_components = false;
};

ComplementReport complement_checks(const MonodromyData& m);

/// Rejection sampler: random handles and branch_count - 1 random simple-type
/// branches, the last branch closing the relation; accepted when it is
/// simple-type, the strand action is transitive and the liftings split
/// into exactly two parity components. Deterministic in seed.
MonodromyData random_simple_monodromy(int n, int branch_count, int genus_y, std::uint64_t seed,
                                      std::uint64_t max_attempts = 4'000'000);

nlohmann::json to_json(const SignedPerm& g);
SignedPerm signed_perm_from_json(const nlohmann::json& j);
nlohmann::json to_json(const MonodromyData& m);
MonodromyData monodromy_from_json(const nlohmann::json& j);

}  // namespace splitpoly::covering

#endif
