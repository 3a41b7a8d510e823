#include "splitpoly/covering.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <random>
#include <string>

namespace splitpoly::covering {

namespace {

constexpr int kMaxOrbitLength = 20;

class UnionFind {
public:
    explicit UnionFind(std::size_t size) : parent_(size) { std::iota(parent_.begin(), parent_.end(), 0U); }
    std::uint32_t find(std::uint32_t x) {
        while (parent_[x] != x) {
            parent_[x] = parent_[parent_[x]];
            x = parent_[x];
        }
        return x;
    }
    void unite(std::uint32_t a, std::uint32_t b) {
        a = find(a);
        b = find(b);
        if (a != b) parent_[std::max(a, b)] = std::min(a, b);
    }

private:
    std::vector<std::uint32_t> parent_;
};

// Uniform integer in [0, bound) from raw 64-bit draws, so the stream is
// the same on every platform.
std::uint64_t draw(std::mt19937_64& rng, std::uint64_t bound) {
    const std::uint64_t threshold = (0 - bound) % bound;
    for (;;) {
        const std::uint64_t r = rng();
        if (r >= threshold) return r % bound;
    }
}

// Allocation-free copy of a signed permutation for the sampler's inner loop.
struct Packed {
    int n = 0;
    std::array<std::uint8_t, 32> perm{};
    std::uint32_t signs = 0;

    Packed() = default;
    explicit Packed(const SignedPerm& g) : n(g.size()), signs(g.signs().bits()) {
        for (int i = 0; i < n; ++i) perm[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>(g.perm()[static_cast<std::size_t>(i)]);
    }
    static Packed identity(int n) {
        Packed p;
        p.n = n;
        for (int i = 0; i < n; ++i) p.perm[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>(i);
        return p;
    }
    friend Packed operator*(const Packed& g, const Packed& h) {
        Packed out;
        out.n = g.n;
        for (int i = 0; i < g.n; ++i) {
            const auto hi = h.perm[static_cast<std::size_t>(i)];
            out.perm[static_cast<std::size_t>(i)] = g.perm[hi];
            if (((h.signs >> i) ^ (g.signs >> hi)) & 1U) out.signs |= 1U << i;
        }
        return out;
    }
    Packed inverse() const {
        Packed out;
        out.n = n;
        for (int i = 0; i < n; ++i) {
            const auto p = perm[static_cast<std::size_t>(i)];
            out.perm[p] = static_cast<std::uint8_t>(i);
            if ((signs >> i) & 1U) out.signs |= 1U << p;
        }
        return out;
    }
    bool is_simple_type() const {
        int moved[2];
        int count = 0;
        for (int i = 0; i < n; ++i)
            if (perm[static_cast<std::size_t>(i)] != i) {
                if (count == 2) return false;
                moved[count++] = i;
            }
        if (count != 2) return false;
        return signs == 0 || signs == ((1U << moved[0]) | (1U << moved[1]));
    }
    SignedPerm unpack() const {
        std::vector<int> p(perm.begin(), perm.begin() + n);
        return SignedPerm(std::move(p), BitVector(n, signs));
    }
};

// Uniform pair i < j, then a fair coin for flipping both strands.
Packed random_simple_packed(std::mt19937_64& rng, int n) {
    std::uint64_t left = draw(rng, static_cast<std::uint64_t>(n) * (n - 1) / 2);
    int i = 0;
    while (left >= static_cast<std::uint64_t>(n - 1 - i)) {
        left -= static_cast<std::uint64_t>(n - 1 - i);
        ++i;
    }
    const int j = i + 1 + static_cast<int>(left);
    Packed p = Packed::identity(n);
    std::swap(p.perm[static_cast<std::size_t>(i)], p.perm[static_cast<std::size_t>(j)]);
    if (draw(rng, 2) == 1) p.signs = (1U << i) | (1U << j);
    return p;
}

SignedPerm random_element(std::mt19937_64& rng, int n) {
    std::vector<int> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), 0);
    for (int i = n - 1; i > 0; --i) std::swap(perm[static_cast<std::size_t>(i)], perm[draw(rng, static_cast<std::uint64_t>(i) + 1)]);
    std::uint32_t signs = 0;
    int weight = 0;
    for (int i = 0; i + 1 < n; ++i)
        if (draw(rng, 2) == 1) {
            signs |= 1U << i;
            ++weight;
        }
    if (n > 0 && weight % 2 == 1) signs |= 1U << (n - 1);
    return SignedPerm(std::move(perm), BitVector(n, signs));
}

SignedPerm commutator(const SignedPerm& a, const SignedPerm& b) { return a * b * a.inverse() * b.inverse(); }

SignedPerm relation_product(const MonodromyData& m) {
    SignedPerm acc = SignedPerm::identity(m.n);
    for (std::size_t i = 0; i + 1 < m.handles.size(); i += 2) acc = acc * commutator(m.handles[i], m.handles[i + 1]);
    for (const auto& c : m.branches) acc = acc * c;
    return acc;
}

std::vector<const SignedPerm*> generators(const MonodromyData& m) {
    std::vector<const SignedPerm*> gens;
    for (const auto& h : m.handles) gens.push_back(&h);
    for (const auto& c : m.branches) gens.push_back(&c);
    return gens;
}

// Orbit representative of every bit vector.
std::vector<std::uint32_t> lifting_orbits(const MonodromyData& m) {
    if (m.n > kMaxOrbitLength) throw std::invalid_argument("orbit computation is capped at n = 20");
    const std::uint32_t size = 1U << m.n;
    UnionFind uf(size);
    for (const SignedPerm* g : generators(m))
        for (std::uint32_t x = 0; x < size; ++x) uf.unite(x, act(*g, BitVector(m.n, x)).bits());
    std::vector<std::uint32_t> rep(size);
    for (std::uint32_t x = 0; x < size; ++x) rep[x] = uf.find(x);
    return rep;
}

int strand_orbits(const MonodromyData& m) {
    UnionFind uf(static_cast<std::size_t>(m.n));
    for (const SignedPerm* g : generators(m))
        for (int i = 0; i < m.n; ++i) uf.unite(static_cast<std::uint32_t>(i), static_cast<std::uint32_t>(g->perm()[static_cast<std::size_t>(i)]));
    int count = 0;
    for (int i = 0; i < m.n; ++i)
        if (uf.find(static_cast<std::uint32_t>(i)) == static_cast<std::uint32_t>(i)) ++count;
    return count;
}

}  // namespace

// ---- SignedPerm ----

SignedPerm::SignedPerm(std::vector<int> perm, BitVector signs) : perm_(std::move(perm)), signs_(signs) {
    const int n = static_cast<int>(perm_.size());
    if (signs_.size() != n) throw std::invalid_argument("SignedPerm: sign vector length mismatch");
    std::vector<bool> seen(perm_.size(), false);
    for (int p : perm_) {
        if (p < 0 || p >= n || seen[static_cast<std::size_t>(p)]) throw std::invalid_argument("SignedPerm: not a permutation");
        seen[static_cast<std::size_t>(p)] = true;
    }
    if (signs_.weight() % 2 != 0) throw std::invalid_argument("SignedPerm: odd number of sign flips");
}

SignedPerm SignedPerm::identity(int n) {
    std::vector<int> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), 0);
    return SignedPerm(std::move(perm), BitVector::zeros(n));
}

SignedPerm SignedPerm::transposition(int n, int i, int j, bool flip_both) {
    if (i < 0 || j < 0 || i >= n || j >= n || i == j) throw std::invalid_argument("transposition: bad strands");
    std::vector<int> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), 0);
    std::swap(perm[static_cast<std::size_t>(i)], perm[static_cast<std::size_t>(j)]);
    std::uint32_t signs = flip_both ? ((1U << i) | (1U << j)) : 0U;
    return SignedPerm(std::move(perm), BitVector(n, signs));
}

SignedPerm SignedPerm::inverse() const {
    const int n = size();
    std::vector<int> perm(perm_.size());
    std::uint32_t signs = 0;
    for (int i = 0; i < n; ++i) {
        const int p = perm_[static_cast<std::size_t>(i)];
        perm[static_cast<std::size_t>(p)] = i;
        if (signs_[i]) signs |= 1U << p;
    }
    return SignedPerm(std::move(perm), BitVector(n, signs));
}

SignedPerm operator*(const SignedPerm& g, const SignedPerm& h) {
    const int n = g.size();
    if (h.size() != n) throw std::invalid_argument("SignedPerm: size mismatch");
    std::vector<int> perm(static_cast<std::size_t>(n));
    std::uint32_t signs = 0;
    for (int i = 0; i < n; ++i) {
        const int hi = h.perm_[static_cast<std::size_t>(i)];
        perm[static_cast<std::size_t>(i)] = g.perm_[static_cast<std::size_t>(hi)];
        if (h.signs_[i] != g.signs_[hi]) signs |= 1U << i;
    }
    return SignedPerm(std::move(perm), BitVector(n, signs));
}

bool SignedPerm::is_identity() const {
    if (signs_.bits() != 0) return false;
    for (int i = 0; i < size(); ++i)
        if (perm_[static_cast<std::size_t>(i)] != i) return false;
    return true;
}

bool SignedPerm::is_simple_type() const {
    std::vector<int> moved;
    for (int i = 0; i < size(); ++i)
        if (perm_[static_cast<std::size_t>(i)] != i) moved.push_back(i);
    if (moved.size() != 2) return false;
    const std::uint32_t pair = (1U << moved[0]) | (1U << moved[1]);
    return signs_.bits() == 0 || signs_.bits() == pair;
}

BitVector act(const SignedPerm& g, const BitVector& x) {
    if (x.size() != g.size()) throw std::invalid_argument("act: length mismatch");
    std::uint32_t out = 0;
    const std::uint32_t flipped = x.bits() ^ g.signs().bits();
    for (int i = 0; i < g.size(); ++i)
        if ((flipped >> i) & 1U) out |= 1U << g.perm()[static_cast<std::size_t>(i)];
    return BitVector(x.size(), out);
}

// ---- monodromy ----

void validate(const MonodromyData& m) {
    if (m.n < 1 || m.n > BitVector::max_length) throw ValidationError("monodromy: n out of range");
    if (m.genus_y < 0) throw ValidationError("monodromy: negative base genus");
    if (m.handles.size() != 2 * static_cast<std::size_t>(m.genus_y))
        throw ValidationError("monodromy: expected 2*genus_Y handle elements");
    for (const SignedPerm* g : generators(m))
        if (g->size() != m.n) throw ValidationError("monodromy: element of the wrong size");
    for (const auto& c : m.branches)
        if (!c.is_simple_type()) throw ValidationError("monodromy: branch element is not simple-type");
    if (!relation_product(m).is_identity()) throw ValidationError("monodromy: surface relation does not hold");
}

ComponentCounts component_counts(const MonodromyData& m) {
    validate(m);
    ComponentCounts c;
    c.orbits_on_strands = strand_orbits(m);
    const auto rep = lifting_orbits(m);
    for (std::uint32_t x = 0; x < rep.size(); ++x) {
        if (rep[x] != x) continue;
        ++c.orbits_on_liftings;
        if (std::popcount(x) % 2 == 0)
            ++c.orbits_even;
        else
            ++c.orbits_odd;
    }
    return c;
}

RamificationReport ramification_and_genus(const MonodromyData& m) {
    validate(m);
    if (m.branches.empty()) throw ValidationError("ramification: the cover must have branch points");
    RamificationReport r;
    const int n = m.n;
    r.branch_count = static_cast<int>(m.branches.size());
    r.base_cover_connected = strand_orbits(m) == 1;
    // Each simple branch point contributes one to deg R downstairs.
    r.g_x = Integer(n) * (m.genus_y - 1) + r.branch_count / 2 + 1;

    const auto rep = lifting_orbits(m);
    const std::uint32_t size = 1U << n;
    std::vector<std::uint32_t> roots;
    for (std::uint32_t x = 0; x < size; ++x)
        if (rep[x] == x) roots.push_back(x);
    std::vector<std::uint64_t> degree(roots.size(), 0);
    std::vector<Integer> ram(roots.size(), Integer(0));
    auto slot = [&](std::uint32_t x) {
        return static_cast<std::size_t>(std::lower_bound(roots.begin(), roots.end(), rep[x]) - roots.begin());
    };
    for (std::uint32_t x = 0; x < size; ++x) ++degree[slot(x)];
    for (const auto& c : m.branches) {
        Integer moved(0);
        for (std::uint32_t x = 0; x < size; ++x) {
            if (act(c, BitVector(n, x)).bits() == x) continue;
            moved += 1;
            // count each 2-cycle once, at its smaller point
            const std::uint32_t y = act(c, BitVector(n, x)).bits();
            if (x < y) ram[slot(x)] += 1;
        }
        r.two_cycles_per_branch.push_back(moved / 2);
    }
    for (std::size_t i = 0; i < roots.size(); ++i) {
        const Integer twice = Integer(static_cast<unsigned long>(degree[i])) * (2 * m.genus_y - 2) + ram[i];
        LiftingComponent comp;
        comp.degree = degree[i];
        comp.ramification = ram[i];
        comp.genus = twice / 2 + 1;
        if (twice % 2 != 0) throw std::logic_error("ramification: odd Riemann-Hurwitz total");
        r.components.push_back(comp);
    }
    const Rational gx1(r.g_x - 1);
    const Rational gy1(m.genus_y - 1);
    const Rational scale = n >= 3 ? Rational(pow_int(Integer(2), static_cast<unsigned long>(n - 3)))
                                  : Rational(1, static_cast<long>(1UL << (3 - n)));
    r.closed_genus = scale * (gx1 - Rational(n - 4) * gy1) + 1;
    return r;
}

ComplementReport complement_checks(const MonodromyData& m) {
    validate(m);
    ComplementReport out;
    const int n = m.n;
    if (n > kMaxOrbitLength) throw std::invalid_argument("complement checks are capped at n = 20");
    const std::uint32_t size = 1U << n;
    out.commutes = true;
    for (const SignedPerm* g : generators(m))
        for (std::uint32_t x = 0; x < size && out.commutes; ++x) {
            const BitVector bx(n, x);
            if (act(*g, bx.complement()) != act(*g, bx).complement()) out.commutes = false;
        }
    out.fixed_point_free = n >= 1;  // complementing flips every bit
    for (std::uint32_t x = 0; x < size; ++x)
        if (BitVector(n, x).complement().bits() == x) out.fixed_point_free = false;

    if (n % 2 == 0) {
        const auto rep = lifting_orbits(m);
        out.halves_components = true;
        std::vector<std::uint64_t> orbit_size(size, 0);
        std::vector<std::uint64_t> pair_count(size, 0);
        for (std::uint32_t x = 0; x < size; ++x) {
            const std::uint32_t cx = BitVector(n, x).complement().bits();
            if (rep[cx] != rep[x]) out.halves_components = false;
            ++orbit_size[rep[x]];
            if (x < cx) ++pair_count[rep[x]];
        }
        for (std::uint32_t x = 0; x < size; ++x)
            if (orbit_size[x] != 0 && pair_count[x] * 2 != orbit_size[x]) out.halves_components = false;
    }
    return out;
}

MonodromyData random_simple_monodromy(int n, int branch_count, int genus_y, std::uint64_t seed,
                                      std::uint64_t max_attempts) {
    if (n < 2 || n > kMaxOrbitLength) throw std::invalid_argument("random_simple_monodromy: n must be in 2..20");
    if (branch_count < 1) throw std::invalid_argument("random_simple_monodromy: need at least one branch point");
    if (branch_count % 2 != 0) throw std::invalid_argument("random_simple_monodromy: branch count must be even");
    if (genus_y < 0) throw std::invalid_argument("random_simple_monodromy: negative base genus");

    std::mt19937_64 rng(seed);
    std::vector<Packed> drawn;
    drawn.reserve(static_cast<std::size_t>(branch_count));
    for (std::uint64_t attempt = 0; attempt < max_attempts; ++attempt) {
        MonodromyData m;
        m.n = n;
        m.genus_y = genus_y;
        Packed acc = Packed::identity(n);
        for (int h = 0; h < genus_y; ++h) {
            SignedPerm a = random_element(rng, n);
            SignedPerm b = random_element(rng, n);
            acc = acc * Packed(commutator(a, b));
            m.handles.push_back(std::move(a));
            m.handles.push_back(std::move(b));
        }
        drawn.clear();
        for (int i = 0; i + 1 < branch_count; ++i) {
            Packed c = random_simple_packed(rng, n);
            acc = acc * c;
            drawn.push_back(c);
        }
        const Packed last = acc.inverse();
        if (!last.is_simple_type()) continue;
        for (const auto& c : drawn) m.branches.push_back(c.unpack());
        m.branches.push_back(last.unpack());
        if (strand_orbits(m) != 1) continue;
        if (!component_counts(m).two_components()) continue;
        return m;
    }
    throw NoInstanceError("random_simple_monodromy: no instance found within the retry limit");
}

// ---- JSON ----

nlohmann::json to_json(const SignedPerm& g) {
    std::vector<int> images;
    for (int p : g.perm()) images.push_back(p + 1);
    return nlohmann::json::array({images, g.signs().to_bits()});
}

SignedPerm signed_perm_from_json(const nlohmann::json& j) {
    if (!j.is_array() || j.size() != 2) throw ValidationError("signed permutation must be [perm, signs]");
    std::vector<int> perm;
    for (const auto& v : j[0]) perm.push_back(v.get<int>() - 1);
    const auto bits = j[1].get<std::vector<int>>();
    try {
        return SignedPerm(std::move(perm), BitVector::from_bits(bits));
    } catch (const std::invalid_argument& e) {
        throw ValidationError(e.what());
    }
}

nlohmann::json to_json(const MonodromyData& m) {
    nlohmann::json handles = nlohmann::json::array();
    for (const auto& h : m.handles) handles.push_back(to_json(h));
    nlohmann::json branches = nlohmann::json::array();
    for (const auto& c : m.branches) branches.push_back(to_json(c));
    return {{"n", m.n}, {"genus_Y", m.genus_y}, {"handles", handles}, {"branches", branches}};
}

MonodromyData monodromy_from_json(const nlohmann::json& j) {
    MonodromyData m;
    try {
        m.n = j.at("n").get<int>();
        m.genus_y = j.at("genus_Y").get<int>();
        for (const auto& h : j.at("handles")) m.handles.push_back(signed_perm_from_json(h));
        for (const auto& c : j.at("branches")) m.branches.push_back(signed_perm_from_json(c));
    } catch (const nlohmann::json::exception& e) {
        throw ValidationError(std::string("monodromy JSON: ") + e.what());
    }
    validate(m);
    return m;
}

}  // namespace splitpoly::covering
