#include "splitpoly/verify.hpp"

#include <algorithm>
#include <future>
#include <random>
#include <stdexcept>

#include "splitpoly/correspondence.hpp"
#include "splitpoly/covering.hpp"
#include "splitpoly/dimensions.hpp"
#include "splitpoly/hamming.hpp"
#include "splitpoly/linalg.hpp"
#include "splitpoly/tridiag.hpp"

namespace splitpoly::verify {

namespace {

using hamming::BitVector;
using hamming::EigenVariant;
using hamming::HomPoly;
using hamming::Subspace;
using splitpoly::to_string;

constexpr int krawtchouk_brute_max = 12;
constexpr int hadamard_brute_max = 8;
constexpr int commute_max = 7;
constexpr int model_max = 16;
constexpr int charpoly_max = 12;
constexpr int reduction_max = 13;
constexpr int cnplus_max = 21;
constexpr int matchings_max = 12;
constexpr int covering_min = 3;
constexpr int covering_max = 8;
constexpr int covering_instances = 20;
constexpr int dims_min = 3;
constexpr int dims_max = 10;

CheckRecord skipped(int n, std::string name, std::string detail) {
    return {n, std::move(name), "n/a", CheckStatus::skipped, std::move(detail)};
}

// First failure wins; detail names it.
struct Tally {
    bool ok = true;
    std::string first;
    int checked = 0;

    void expect(bool cond, const std::string& what) {
        ++checked;
        if (!cond && ok) {
            ok = false;
            first = what;
        }
    }
    std::string detail() const { return ok ? std::to_string(checked) + " cases" : "first failure: " + first; }
};

HomPoly random_hom(int n, std::mt19937_64& rng) {
    std::uniform_int_distribution<int> coeff(-5, 5);
    HomPoly h(n);
    for (int l = 0; l <= n; ++l) h[l] = coeff(rng);
    return h;
}

HomPoly to_hom(int n, const std::vector<Rational>& v) { return HomPoly(n, v); }

std::vector<Rational> apply_to(const RatMatrix& m, const HomPoly& h) {
    return apply(m, std::span<const Rational>(h.coeffs()));
}

// ---------- odd ----------

std::vector<CheckRecord> odd_suite(int n) {
    if (n % 2 == 0) return {};
    if (n < 3) return {skipped(n, "odd.not_applicable", "needs odd n >= 3")};
    auto out = correspondence::verify_split(n);

    const auto table = correspondence::a_table(n);
    Tally closed;
    for (int k = 0; k <= table.top(); ++k)
        for (int i = 0; 2 * i <= k; ++i)
            closed.expect(correspondence::a_closed_form(n, k, i) == table.at(k, k - 2 * i),
                          "k=" + std::to_string(k) + " i=" + std::to_string(i));
    out.push_back(make_check(n, "odd.closed_form_matches_table", "odd-coeffs/closed-form", closed.ok, closed.detail()));

    const bool start = table.at(2, 0) == n && table.at(2, 2) == -1 && table.at(1, 1) == -1;
    out.push_back(make_check(n, "odd.table_initial_values", "odd-coeffs/start", start,
                             "a^2_0=" + to_string(table.at(2, 0))));

    Tally top;
    for (int l = 0; l <= n; ++l) {
        const Integer want = (l % 2 == 0 ? 1 : -1) * (n - 2 * l);
        top.expect(hamming::krawtchouk(n, n - 1, l) == want, "l=" + std::to_string(l));
    }
    out.push_back(make_check(n, "odd.top_operator_eigenvalues", "odd-split/eigenvalues", top.ok, top.detail()));

    // Each even-distance operator on the Y-even part is a polynomial in the
    // top operator there; interpolate on the eigenvalues and compare matrices.
    if (n >= 5 && n <= reduction_max) {
        const RatMatrix top_op = hamming::restricted_operator(n, n - 1, Subspace::even);
        const int m = static_cast<int>(top_op.rows());
        std::vector<Rational> nodes;
        for (int l = 0; l < m; ++l) nodes.emplace_back(hamming::krawtchouk(n, n - 1, l));
        Tally red;
        for (int j = 2; j <= n - 3; j += 2) {
            const RatMatrix target = hamming::restricted_operator(n, j, Subspace::even);
            RatMatrix f(static_cast<std::size_t>(m), static_cast<std::size_t>(m));
            for (int l = 0; l < m; ++l) {
                // Lagrange basis polynomial at node l, evaluated at top_op.
                RatMatrix basis = RatMatrix::identity(static_cast<std::size_t>(m));
                for (int t = 0; t < m; ++t) {
                    if (t == l) continue;
                    const Rational scale = Rational(1) / (nodes[l] - nodes[t]);
                    basis = scale * (basis * (top_op - nodes[t] * RatMatrix::identity(static_cast<std::size_t>(m))));
                }
                f = f + Rational(hamming::krawtchouk(n, j, l)) * basis;
            }
            red.expect(f == target, "j=" + std::to_string(j));
        }
        out.push_back(make_check(n, "odd.even_operators_reduce_to_top", "odd-split/reduction", red.ok, red.detail()));
    }
    return out;
}

// ---------- even ----------

std::vector<CheckRecord> even_suite(int n) {
    if (n % 2 != 0) return {};
    if (n < 4) return {skipped(n, "even.not_applicable", "needs even n >= 4")};
    auto out = correspondence::verify_split(n);

    const auto table = correspondence::b_table(n);
    const bool start = table.at(2, 0) == binomial(n, 2) && table.at(2, 1) == 2 * (n - 2) && table.at(2, 2) == -1;
    out.push_back(make_check(n, "even.table_initial_values", "even-coeffs/start", start,
                             "b^2_0=" + to_string(table.at(2, 0)) + " b^2_1=" + to_string(table.at(2, 1))));
    if (table.top() >= 3) {
        const Integer c0 = -4 * (n - 4) * binomial(n, 2);
        const Integer c1 = binomial(n, 2) + 6 * binomial(n - 2, 2) - Integer(8) * (n - 4) * (n - 2);
        const Integer c2 = 2 * (n - 2) + 4 * (n - 4);
        const bool ok = table.at(3, 0) == c0 && table.at(3, 1) == c1 && table.at(3, 2) == c2 && table.at(3, 3) == -1;
        out.push_back(make_check(n, "even.table_third_row", "even-coeffs/third-row", ok,
                                 to_string(table.at(3, 0)) + ", " + to_string(table.at(3, 1)) + ", " +
                                     to_string(table.at(3, 2))));
    }

    Tally ev;
    for (int l = 0; l <= n; ++l) {
        const Integer want = (l % 2 == 0 ? 1 : -1) * (Integer((n - 2 * l) * (n - 2 * l)) - n) / 2;
        ev.expect(hamming::krawtchouk(n, n - 2, l) == want, "l=" + std::to_string(l));
    }
    out.push_back(make_check(n, "even.second_operator_eigenvalues", "even-split/eigenvalues", ev.ok, ev.detail()));
    return out;
}

// ---------- hamming ----------

Integer brute_krawtchouk(int n, int k, int l) {
    const std::uint32_t x = l == 0 ? 0U : ((1U << l) - 1U);
    long sum = 0;
    for (std::uint32_t z = 0; z < (1U << n); ++z) {
        if (std::popcount(z) != k) continue;
        sum += (std::popcount(x & z) % 2 == 0) ? 1 : -1;
    }
    return Integer(sum);
}

std::vector<Subspace> supported(int n, int k) {
    std::vector<Subspace> names{Subspace::plus, Subspace::minus};
    if (k % 2 == 0) {
        names.push_back(Subspace::even);
        names.push_back(Subspace::odd);
        if (n % 2 == 0)
            for (auto s : {Subspace::plus_even, Subspace::plus_odd, Subspace::minus_even, Subspace::minus_odd})
                names.push_back(s);
    }
    return names;
}

std::string case_name(int k, Subspace s) {
    return "k=" + std::to_string(k) + " " + std::string(hamming::to_string(s));
}

std::vector<CheckRecord> hamming_suite(int n) {
    std::vector<CheckRecord> out;
    if (n < 1) return {skipped(n, "hamming.not_applicable", "needs n >= 1")};

    if (n <= krawtchouk_brute_max) {
        Tally t;
        for (int k = 0; k <= n; ++k)
            for (int l = 0; l <= n; ++l)
                t.expect(hamming::krawtchouk(n, k, l) == brute_krawtchouk(n, k, l),
                         "k=" + std::to_string(k) + " l=" + std::to_string(l));
        out.push_back(make_check(n, "hamming.krawtchouk_brute_force", "eigenvalues/character-sum", t.ok, t.detail()));
    }

    Tally sym;
    for (int k = 0; k <= n; ++k)
        for (int l = 0; l <= n; ++l) {
            const Integer v = hamming::krawtchouk(n, k, l);
            const std::string at = "k=" + std::to_string(k) + " l=" + std::to_string(l);
            sym.expect(v == (k % 2 == 0 ? 1 : -1) * hamming::krawtchouk(n, k, n - l), "reflect " + at);
            sym.expect(v == (l % 2 == 0 ? 1 : -1) * hamming::krawtchouk(n, n - k, l), "complement " + at);
            sym.expect(binomial(n, l) * v == binomial(n, k) * hamming::krawtchouk(n, l, k), "swap " + at);
        }
    out.push_back(make_check(n, "hamming.krawtchouk_symmetries", "eigenvalues/symmetry", sym.ok, sym.detail()));

    Tally orth;
    for (int k = 0; k <= n; ++k)
        for (int j = 0; j <= n; ++j) {
            Integer sum(0);
            for (int l = 0; l <= n; ++l)
                sum += binomial(n, l) * hamming::krawtchouk(n, k, l) * hamming::krawtchouk(n, j, l);
            const Integer want = k == j ? pow_int(Integer(2), static_cast<unsigned long>(n)) * binomial(n, k) : Integer(0);
            orth.expect(sum == want, "k=" + std::to_string(k) + " j=" + std::to_string(j));
        }
    out.push_back(make_check(n, "hamming.krawtchouk_orthogonality", "eigenvalues/orthogonality", orth.ok, orth.detail()));

    if (n <= hadamard_brute_max) {
        Tally t;
        for (int l = 0; l <= n; ++l) {
            const BitVector x(n, l == 0 ? 0U : ((1U << l) - 1U));
            const auto h = hamming::hadamard(n, x);
            for (int k = 0; k <= n; ++k)
                t.expect(hamming::gamma_apply(n, k, h) == Rational(hamming::krawtchouk(n, k, l)) * h,
                         "k=" + std::to_string(k) + " l=" + std::to_string(l));
        }
        out.push_back(make_check(n, "hamming.hadamard_eigenvectors", "fiber/eigenvectors", t.ok, t.detail()));
    }

    if (n <= commute_max) {
        std::mt19937_64 rng(static_cast<std::uint64_t>(n));
        std::uniform_int_distribution<int> coeff(-3, 3);
        hamming::FiberVector v(n);
        for (std::uint32_t b = 0; b < (1U << n); ++b) v[BitVector(n, b)] = coeff(rng);
        Tally t;
        for (int k = 0; k <= n; ++k)
            for (int j = k + 1; j <= n; ++j)
                t.expect(hamming::gamma_apply(n, k, hamming::gamma_apply(n, j, v)) ==
                             hamming::gamma_apply(n, j, hamming::gamma_apply(n, k, v)),
                         "k=" + std::to_string(k) + " j=" + std::to_string(j));
        out.push_back(make_check(n, "hamming.transforms_commute", "fiber/commuting", t.ok, t.detail()));
    }

    if (n > model_max) return out;

    std::mt19937_64 rng(0x5eedULL + static_cast<std::uint64_t>(n));
    Tally model;
    for (int k = 0; k <= n; ++k) {
        const RatMatrix g = hamming::quotient_matrix(n, k);
        const RatMatrix d = hamming::delta_matrix(n, k);
        model.expect(g.transpose() == d, "transpose k=" + std::to_string(k));
        for (int rep = 0; rep < 3; ++rep) {
            const HomPoly h = random_hom(n, rng);
            model.expect(hamming::apply_quotient(g, h) == hamming::delta_apply(n, k, h),
                         "apply k=" + std::to_string(k));
        }
    }
    out.push_back(make_check(n, "hamming.quotient_matches_differential", "model/operator", model.ok, model.detail()));

    Tally eig;
    for (int k = 0; k <= n; ++k)
        for (int l = 0; l <= n; ++l) {
            const HomPoly v = hamming::eigen_vector(n, l, EigenVariant::plain);
            eig.expect(hamming::delta_apply(n, k, v) == Rational(hamming::krawtchouk(n, k, l)) * v,
                       "k=" + std::to_string(k) + " l=" + std::to_string(l));
        }
    out.push_back(make_check(n, "hamming.model_eigenvectors", "model/eigenvectors", eig.ok, eig.detail()));

    Tally swap;
    for (int k = 1; k <= n; k += 2)
        for (int l = 0; l <= n; ++l) {
            const Rational lambda(hamming::krawtchouk(n, k, l));
            const HomPoly ve = hamming::eigen_vector(n, l, EigenVariant::even);
            const HomPoly vo = hamming::eigen_vector(n, l, EigenVariant::odd);
            swap.expect(hamming::delta_apply(n, k, ve) == lambda * vo && hamming::delta_apply(n, k, vo) == lambda * ve,
                        "k=" + std::to_string(k) + " l=" + std::to_string(l));
        }
    out.push_back(make_check(n, "hamming.odd_operator_swaps_parity", "model/parity", swap.ok, swap.detail()));

    // Tables against exact ranks: projector rank equals the listed dimension,
    // listed vectors lie in the subspace, are eigenvectors and independent.
    Tally tables;
    for (int k = 0; k <= n; ++k) {
        const RatMatrix d = hamming::delta_matrix(n, k);
        for (Subspace s : supported(n, k)) {
            const auto spec = hamming::subspace_spectrum(n, k, s);
            const RatMatrix proj = hamming::subspace_projector(n, s);
            const std::string at = case_name(k, s);
            tables.expect(static_cast<int>(rank(proj)) == spec.dimension, "rank " + at);
            tables.expect(static_cast<int>(spec.eigen_list.size()) == spec.dimension, "list size " + at);
            RatMatrix vectors(static_cast<std::size_t>(n + 1), spec.eigen_list.size());
            for (std::size_t c = 0; c < spec.eigen_list.size(); ++c) {
                const auto& pair = spec.eigen_list[c];
                const HomPoly v = hamming::eigen_vector(n, pair);
                tables.expect(!v.is_zero(), "zero vector " + at);
                tables.expect(to_hom(n, apply_to(proj, v)) == v, "membership " + at);
                tables.expect(to_hom(n, apply_to(d, v)) == Rational(pair.eigenvalue) * v, "eigenpair " + at);
                tables.expect(pair.eigenvalue == hamming::krawtchouk(n, k, pair.index), "eigenvalue " + at);
                for (int r = 0; r <= n; ++r) vectors(static_cast<std::size_t>(r), c) = v[r];
            }
            tables.expect(static_cast<int>(rank(vectors)) == spec.dimension, "independence " + at);
        }
    }
    out.push_back(make_check(n, "hamming.subspace_tables_match_ranks", "model/subspace-tables", tables.ok,
                             tables.detail()));

    if (n <= charpoly_max) {
        Tally cp;
        for (int k = 0; k <= n; ++k)
            for (Subspace s : supported(n, k)) {
                const auto polys = hamming::char_and_min_poly(n, k, s);
                const RatMatrix op = hamming::restricted_operator(n, k, s);
                const std::string at = case_name(k, s);
                cp.expect(integer_charpoly(op) == polys.characteristic, "charpoly " + at);
                cp.expect(is_minimal_polynomial(polys.minimal, op), "minpoly " + at);
            }
        out.push_back(make_check(n, "hamming.table_polys_match_operator", "model/subspace-tables", cp.ok, cp.detail()));
    }
    return out;
}

// ---------- dims ----------

std::vector<CheckRecord> dims_suite(int n) {
    if (n < dims_min || n > dims_max) return {skipped(n, "dims.not_applicable", "explicit systems exist for n = 3..10")};
    std::vector<CheckRecord> out;
    dimensions::DimTable table;
    try {
        table = dimensions::dim_table(n);
    } catch (const std::exception& e) {
        out.push_back(make_check(n, "dims.system_solves", "dims/system", false, e.what()));
        return out;
    }
    out.push_back(make_check(n, "dims.system_solves", "dims/system", true,
                             std::to_string(table.entries.size()) + " unknowns"));
    for (auto& r : dimensions::dim_consistency(n, table)) out.push_back(std::move(r));

    if (n % 2 == 1) {
        const auto derived = dimensions::derive_odd_dims(n);
        bool same = derived.entries.size() == table.entries.size();
        std::string bad;
        for (const auto& e : table.entries) {
            const auto got = derived.find(e.component, e.eigenvalue);
            if (!got || !(*got == e.dimension)) {
                same = false;
                if (bad.empty()) bad = dimensions::label(e);
            }
        }
        out.push_back(make_check(n, "dims.trace_rederivation_matches", "dims/trace", same,
                                 same ? "" : "differs at " + bad));
    }
    return out;
}

// ---------- tridiag ----------

std::vector<CheckRecord> tridiag_suite(int n) {
    std::vector<CheckRecord> out;
    if (n % 2 == 1 && n >= 3 && n <= cnplus_max) {
        const IntPoly det = tridiag::cnplus(n);
        const IntPoly prod = tridiag::cnplus_product(n);
        out.push_back(make_check(n, "tridiag.determinant_equals_product", "tridiag/product", det == prod,
                                 det.to_string()));
        const IntPoly cp = integer_charpoly(hamming::restricted_operator(n, n - 1, Subspace::plus));
        out.push_back(make_check(n, "tridiag.determinant_equals_operator_charpoly", "tridiag/operator", det == cp,
                                 cp.to_string()));
    }
    if (n >= 0 && n <= matchings_max) {
        // Arbitrary nonzero entries; the identity is formal in them.
        tridiag::TridiagSpec spec;
        for (int i = 1; i <= n; ++i) {
            spec.a.emplace_back(i + 1);
            spec.b.emplace_back(-(2 * i + n));
        }
        const IntPoly det = tridiag::det_tridiag(spec, n);
        Tally t;
        for (int j = 0; 2 * j <= n + 1; ++j) {
            const Integer c = tridiag::matchings_coeff(spec, n, j);
            t.expect(det.coeff(static_cast<std::size_t>(n + 1 - 2 * j)) == (j % 2 == 0 ? c : Integer(-c)),
                     "j=" + std::to_string(j));
        }
        for (int p = 0; p <= n + 1; ++p)
            if ((n + 1 - p) % 2 != 0) t.expect(det.coeff(static_cast<std::size_t>(p)) == 0, "gap p=" + std::to_string(p));
        out.push_back(make_check(n, "tridiag.matchings_match_determinant", "tridiag/matchings", t.ok, t.detail()));
    }
    if (out.empty()) out.push_back(skipped(n, "tridiag.not_applicable", "odd n <= 21 or m <= 12"));
    return out;
}

// ---------- covering ----------

std::vector<CheckRecord> covering_suite(int n) {
    if (n < covering_min || n > covering_max)
        return {skipped(n, "covering.not_applicable", "sampled for n = 3..8")};
    using namespace covering;
    const int branches = 2 * n + 2;
    Tally valid, cycles, genus, compl_ok, round_trip, base_rh;
    const Integer expected_cycles = pow_int(Integer(2), static_cast<unsigned long>(n - 2));
    for (int seed = 1; seed <= covering_instances; ++seed) {
        const int gy = seed % 3 == 0 ? 1 : 0;
        const std::string at = "seed=" + std::to_string(seed);
        MonodromyData m;
        try {
            m = random_simple_monodromy(n, branches, gy, static_cast<std::uint64_t>(seed));
        } catch (const std::exception& e) {
            valid.expect(false, at + ": " + e.what());
            continue;
        }
        const auto counts = component_counts(m);
        valid.expect(counts.orbits_on_strands == 1 && counts.two_components(), at);
        const auto rep = ramification_and_genus(m);
        base_rh.expect(rep.base_cover_connected && rep.g_x == Integer(n) * (gy - 1) + branches / 2 + 1, at);
        for (const auto& c : rep.two_cycles_per_branch) cycles.expect(c == expected_cycles, at);
        if (counts.two_components()) {
            for (const auto& comp : rep.components)
                genus.expect(Rational(comp.genus) == rep.closed_genus, at + " genus " + to_string(comp.genus));
        }
        const auto cr = complement_checks(m);
        compl_ok.expect(cr.commutes && cr.fixed_point_free && (n % 2 == 1 || cr.halves_components), at);
        round_trip.expect(to_json(monodromy_from_json(to_json(m))) == to_json(m), at);
    }
    return {
        make_check(n, "covering.instances_have_two_components", "covering/components", valid.ok, valid.detail()),
        make_check(n, "covering.base_genus_riemann_hurwitz", "covering/base-genus", base_rh.ok, base_rh.detail()),
        make_check(n, "covering.two_cycles_per_branch", "covering/branch-count", cycles.ok, cycles.detail()),
        make_check(n, "covering.component_genus_matches_closed_form", "covering/genus", genus.ok, genus.detail()),
        make_check(n, "covering.complement_involution", "covering/complement", compl_ok.ok, compl_ok.detail()),
        make_check(n, "covering.json_round_trip", "covering/serialization", round_trip.ok, round_trip.detail()),
    };
}

}  // namespace

std::string_view to_string(Suite s) {
    switch (s) {
        case Suite::odd: return "odd";
        case Suite::even: return "even";
        case Suite::hamming: return "hamming";
        case Suite::dims: return "dims";
        case Suite::tridiag: return "tridiag";
        case Suite::covering: return "covering";
    }
    return "?";
}

std::vector<Suite> parse_suites(std::string_view name) {
    const std::vector<Suite> all{Suite::odd, Suite::even, Suite::hamming, Suite::dims, Suite::tridiag, Suite::covering};
    if (name == "all") return all;
    for (Suite s : all)
        if (to_string(s) == name) return {s};
    throw std::invalid_argument("unknown suite: " + std::string(name));
}

std::vector<CheckRecord> run_suite(Suite suite, int n) {
    try {
        switch (suite) {
            case Suite::odd: return odd_suite(n);
            case Suite::even: return even_suite(n);
            case Suite::hamming: return hamming_suite(n);
            case Suite::dims: return dims_suite(n);
            case Suite::tridiag: return tridiag_suite(n);
            case Suite::covering: return covering_suite(n);
        }
    } catch (const std::exception& e) {
        return {make_check(n, std::string(to_string(suite)) + ".raised", "exception", false, e.what())};
    }
    return {};
}

std::vector<CheckRecord> verify_range(int n_from, int n_to, const std::vector<Suite>& suites) {
    if (n_from > n_to) throw std::invalid_argument("verify: n_from exceeds n_to");
    if (n_from < 1 || n_to > 64) throw std::invalid_argument("verify: n must lie in 1..64");
    std::vector<std::future<std::vector<CheckRecord>>> tasks;
    for (int n = n_from; n <= n_to; ++n)
        for (Suite s : suites) tasks.push_back(std::async(std::launch::async, [s, n] { return run_suite(s, n); }));
    std::vector<CheckRecord> out;
    for (auto& t : tasks)
        for (auto& r : t.get()) out.push_back(std::move(r));
    std::stable_sort(out.begin(), out.end(), [](const CheckRecord& a, const CheckRecord& b) {
        return a.n != b.n ? a.n < b.n : a.name < b.name;
    });
    return out;
}

}  // namespace splitpoly::verify
