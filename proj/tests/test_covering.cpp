#include <doctest.h>

#include <deque>
#include <set>

#include "splitpoly/covering.hpp"
#include "splitpoly/dimensions.hpp"

using namespace splitpoly;
using namespace splitpoly::covering;

namespace {

std::vector<SignedPerm> generators(const MonodromyData& m) {
    std::vector<SignedPerm> g = m.handles;
    g.insert(g.end(), m.branches.begin(), m.branches.end());
    return g;
}

// Orbits of all bit vectors by breadth-first search.
std::vector<std::vector<std::uint32_t>> orbits(const MonodromyData& m) {
    const auto gens = generators(m);
    std::vector<int> seen(1U << m.n, -1);
    std::vector<std::vector<std::uint32_t>> out;
    for (std::uint32_t start = 0; start < (1U << m.n); ++start) {
        if (seen[start] >= 0) continue;
        const int id = static_cast<int>(out.size());
        auto& orbit = out.emplace_back();
        std::deque<std::uint32_t> queue{start};
        seen[start] = id;
        while (!queue.empty()) {
            const auto x = queue.front();
            queue.pop_front();
            orbit.push_back(x);
            for (const auto& g : gens) {
                const auto y = act(g, BitVector(m.n, x)).bits();
                if (seen[y] < 0) {
                    seen[y] = id;
                    queue.push_back(y);
                }
            }
        }
    }
    return out;
}

}  // namespace

TEST_CASE("signed permutations") {
    const SignedPerm t = SignedPerm::transposition(4, 0, 2, true);
    CHECK(t.is_simple_type());
    CHECK((t * t).is_identity());
    CHECK(t.inverse() == t);
    CHECK_FALSE(SignedPerm::identity(4).is_simple_type());
    CHECK_THROWS(SignedPerm({0, 1, 2}, BitVector(3, 0b001)));  // odd sign weight
    CHECK_THROWS(SignedPerm({0, 0, 2}, BitVector(3, 0)));
    const SignedPerm flip_one_pair({0, 1, 2}, BitVector(3, 0b011));
    CHECK_FALSE(flip_one_pair.is_simple_type());
    const SignedPerm swap_wrong_flip({1, 0, 2}, BitVector(3, 0b101));
    CHECK_FALSE(swap_wrong_flip.is_simple_type());

    // strands 0 and 2 both set: swapped and flipped, both clear
    CHECK(act(t, BitVector(4, 0b0111)) == BitVector(4, 0b0010));
    // one set, one clear: the swap and the flips cancel
    CHECK(act(t, BitVector(4, 0b0011)) == BitVector(4, 0b0011));
    CHECK(act(SignedPerm::transposition(4, 0, 2, false), BitVector(4, 0b0011)) == BitVector(4, 0b0110));
}

TEST_CASE("composition is the composition of actions") {
    const SignedPerm g({1, 2, 0, 3}, BitVector(4, 0b1001));
    const SignedPerm h({3, 0, 1, 2}, BitVector(4, 0b0110));
    for (std::uint32_t b = 0; b < 16; ++b) {
        const BitVector x(4, b);
        CHECK(act(g * h, x) == act(g, act(h, x)));
        CHECK(act(g.inverse(), act(g, x)) == x);
    }
}

TEST_CASE("validation") {
    MonodromyData m;
    m.n = 3;
    m.genus_y = 0;
    m.branches = {SignedPerm::transposition(3, 0, 1, false), SignedPerm::transposition(3, 0, 1, false)};
    CHECK_NOTHROW(validate(m));
    m.branches[1] = SignedPerm::transposition(3, 1, 2, false);
    CHECK_THROWS_AS(validate(m), ValidationError);  // product is not the identity
    m.branches[1] = SignedPerm::transposition(3, 0, 1, false);
    m.genus_y = 1;
    CHECK_THROWS_AS(validate(m), ValidationError);  // handles missing
}

TEST_CASE("sampled instances against brute-force orbits") {
    for (int n = 3; n <= 6; ++n)
        for (std::uint64_t seed = 1; seed <= 4; ++seed) {
            const int gy = seed == 4 ? 1 : 0;
            const int branches = 2 * n + 2;
            const auto m = random_simple_monodromy(n, branches, gy, seed);
            CHECK_NOTHROW(validate(m));
            for (const auto& c : m.branches) CHECK(c.is_simple_type());
            CHECK(m.handles.size() == static_cast<std::size_t>(2 * gy));

            const auto orbs = orbits(m);
            const auto counts = component_counts(m);
            CHECK(counts.orbits_on_liftings == static_cast<int>(orbs.size()));
            CHECK(counts.two_components());

            const auto rep = ramification_and_genus(m);
            CHECK(rep.g_x == Integer(n) * (gy - 1) + branches / 2 + 1);
            for (const auto& c : m.branches) {
                int moved = 0;
                for (std::uint32_t b = 0; b < (1U << n); ++b) moved += act(c, BitVector(n, b)).bits() != b;
                CHECK(Integer(moved / 2) == pow_int(Integer(2), static_cast<unsigned long>(n - 2)));
            }
            // Riemann-Hurwitz on each orbit, straight from the cycle structure
            std::set<Integer> genera;
            for (const auto& orbit : orbs) {
                long r = 0;
                for (const auto& c : m.branches)
                    for (auto x : orbit) r += act(c, BitVector(n, x)).bits() != x;
                // r counts moved points, two per 2-cycle
                const Integer g = Integer(static_cast<long>(orbit.size())) * (gy - 1) + r / 4 + 1;
                genera.insert(g);
            }
            REQUIRE(rep.components.size() == orbs.size());
            for (const auto& comp : rep.components) {
                CHECK(genera.count(comp.genus) == 1);
                CHECK(Rational(comp.genus) == rep.closed_genus);
            }
            const auto gen = dimensions::genus(n, dimensions::Curve::lifting).evaluate(rep.g_x, Integer(gy));
            CHECK(gen == rep.closed_genus);

            const auto cr = complement_checks(m);
            CHECK(cr.commutes);
            CHECK(cr.fixed_point_free);
            if (n % 2 == 0) CHECK(cr.halves_components);
        }
}

TEST_CASE("sampler is deterministic and honours its budget") {
    const auto a = random_simple_monodromy(5, 12, 0, 42);
    const auto b = random_simple_monodromy(5, 12, 0, 42);
    CHECK(to_json(a) == to_json(b));
    CHECK_THROWS_AS(random_simple_monodromy(6, 2, 0, 1, 50), NoInstanceError);
    CHECK_THROWS(random_simple_monodromy(5, 3, 0, 1));
    // a connected degree-5 cover of the line needs at least 8 branch points
    CHECK_THROWS_AS(random_simple_monodromy(5, 6, 0, 1, 20000), NoInstanceError);
}

TEST_CASE("json round trip") {
    const auto m = random_simple_monodromy(4, 6, 1, 9);
    const auto j = to_json(m);
    CHECK(j.at("n") == 4);
    CHECK(j.at("handles").size() == 2);
    const auto back = monodromy_from_json(j);
    CHECK(to_json(back) == j);
    auto broken = j;
    broken["branches"][0][0][0] = 99;
    CHECK_THROWS_AS(monodromy_from_json(broken), ValidationError);
}
