#include "splitpoly/dimensions.hpp"

#include <algorithm>
#include <stdexcept>

#include "splitpoly/correspondence.hpp"

namespace splitpoly::dimensions {

namespace {

AffineExpr affine(long gx, long gy, long c) { return {Rational(gx), Rational(gy), Rational(c)}; }

Integer two_pow(int e) { return pow_int(Integer(2), static_cast<unsigned long>(e)); }

// Rows of a system over a fixed list of unknowns.
class SystemBuilder {
public:
    void unknown(Component c, long eigenvalue) { unknowns_.push_back({c, Integer(eigenvalue), AffineExpr{}}); }
    void row(std::vector<long> coeffs, const AffineExpr& rhs) {
        if (coeffs.size() != unknowns_.size()) throw std::logic_error("system row has the wrong width");
        rows_.push_back(std::move(coeffs));
        rhs_.push_back(rhs);
    }
    LinearSystem build() const {
        LinearSystem s;
        s.unknowns = unknowns_;
        s.matrix = RatMatrix(rows_.size(), unknowns_.size());
        for (std::size_t i = 0; i < rows_.size(); ++i)
            for (std::size_t j = 0; j < unknowns_.size(); ++j) s.matrix(i, j) = rows_[i][j];
        s.rhs = rhs_;
        return s;
    }

private:
    std::vector<DimEntry> unknowns_;
    std::vector<std::vector<long>> rows_;
    std::vector<AffineExpr> rhs_;
};

const AffineExpr kPrymOfCover = affine(1, 0, 0);  // g_X - 1
const AffineExpr kBase = affine(0, 1, 1);         // g_Y

DimTable solve_to_table(int n, const LinearSystem& s) {
    const auto x = solve_linear(s.matrix, s.rhs);
    DimTable t;
    t.n = n;
    for (std::size_t i = 0; i < x.size(); ++i) t.entries.push_back({s.unknowns[i].component, s.unknowns[i].eigenvalue, x[i]});
    return t;
}

void sort_entries(DimTable& t) {
    std::stable_sort(t.entries.begin(), t.entries.end(), [](const DimEntry& a, const DimEntry& b) {
        if (a.component != b.component) return a.component < b.component;
        return a.eigenvalue < b.eigenvalue;
    });
}

}  // namespace

AffineExpr genus(int n, Curve which) {
    if (n < 3) throw std::invalid_argument("genus: n must be >= 3");
    int shift = n - 3;
    if (which == Curve::quotient) {
        if (n % 2 != 0 || n < 4) throw std::invalid_argument("genus: quotient curve needs even n >= 4");
        shift = n - 4;
    }
    const Rational scale(two_pow(shift));
    return {scale, scale * -(n - 4), Rational(1)};
}

TraceLedger trace_ledger(int n, int max_power) {
    if (n < 3 || n % 2 == 0) throw std::invalid_argument("trace_ledger: n must be odd and >= 3");
    const int k = (n - 1) / 2;
    if (max_power < 0 || max_power > k || (max_power > 0 && max_power >= n - 2))
        throw std::invalid_argument("trace_ledger: power out of range");
    const auto a = correspondence::a_table(n);

    // Diagonal against the identity: 2 - 2g. Against the swap-two-strands
    // locus: 2^(n-3) times the ramification degree 2g_X - 2 - n(2g_Y - 2).
    const AffineExpr g = genus(n, Curve::lifting);
    const AffineExpr diag0 = Rational(-2) * (g - AffineExpr::constant(Rational(1)));
    const AffineExpr swap_locus = Rational(two_pow(n - 2)) * affine(1, -n, 0);

    TraceLedger ledger;
    ledger.n = n;
    for (int l = 0; l <= max_power; ++l) {
        AffineExpr d;
        if (l == 0) {
            d = diag0;
        } else {
            for (int j = 0; j < l; ++j) {
                const Integer c = a.at(l, j);
                if (c != 0) d += Rational(c) * ledger.diagonal[static_cast<std::size_t>(j)];
            }
            if (l == 2) d += Rational(factorial(2)) * swap_locus;
        }
        ledger.diagonal.push_back(d);
        ledger.trace.push_back(AffineExpr::constant(Rational(pow_int(Integer(n), static_cast<unsigned long>(l)))) -
                               Rational(1, 2) * d);
    }
    return ledger;
}

std::string_view to_string(Component c) {
    switch (c) {
        case Component::whole: return "whole";
        case Component::prym: return "P";
        case Component::complement: return "B";
    }
    return "?";
}

std::optional<AffineExpr> DimTable::find(Component c, const Integer& eigenvalue) const {
    for (const auto& e : entries)
        if (e.component == c && e.eigenvalue == eigenvalue) return e.dimension;
    return std::nullopt;
}

std::string label(const DimEntry& e) {
    return (e.component == Component::complement ? "e_" : "d_") + splitpoly::to_string(e.eigenvalue);
}

LinearSystem explicit_system(int n) {
    SystemBuilder s;
    const auto W = Component::whole;
    const auto P = Component::prym;
    const auto B = Component::complement;
    switch (n) {
        case 3:
            s.unknown(W, -1);
            s.unknown(W, 3);
            s.row({1, 0}, kPrymOfCover);
            s.row({0, 1}, kBase);
            break;
        case 4:
            s.unknown(P, 0);
            s.unknown(B, -2);
            s.unknown(B, 6);
            s.row({1, 0, 0}, kPrymOfCover);
            s.row({0, 0, 1}, kBase);
            s.row({0, 1, 1}, affine(1, 0, 1));  // g_C = g_X
            break;
        case 5:
            s.unknown(W, -3);
            s.unknown(W, 1);
            s.unknown(W, 5);
            s.row({1, 0, 0}, kPrymOfCover);
            s.row({0, 0, 1}, kBase);
            s.row({1, 1, 1}, affine(4, -4, 1));
            break;
        case 6:
            s.unknown(P, -5);
            s.unknown(P, 3);
            s.unknown(B, -1);
            s.unknown(B, 15);
            s.row({1, 0, 0, 0}, kPrymOfCover);
            s.row({0, 0, 0, 1}, kBase);
            s.row({1, 1, 0, 0}, affine(4, -8, 0));
            s.row({0, 0, 1, 1}, affine(4, -8, 1));
            break;
        case 7:
            s.unknown(W, -5);
            s.unknown(W, -1);
            s.unknown(W, 3);
            s.unknown(W, 7);
            s.row({1, 0, 0, 0}, kPrymOfCover);
            s.row({0, 0, 0, 1}, kBase);
            s.row({1, 1, 1, 1}, affine(16, -48, 1));
            s.row({-5, -1, 3, 7}, affine(0, 0, 7));
            break;
        case 8:
            s.unknown(P, -16);
            s.unknown(P, -14);
            s.unknown(P, 2);
            s.unknown(B, -4);
            s.unknown(B, 4);
            s.unknown(B, 28);
            s.row({0, 1, 0, 0, 0, 0}, kPrymOfCover);
            s.row({0, 0, 0, 0, 0, 1}, kBase);
            s.row({1, 1, 1, 1, 1, 1}, affine(32, -128, 1));
            s.row({0, 0, 0, 1, 1, 1}, affine(16, -64, 1));
            s.row({-16, -14, 2, -4, 4, 28}, affine(0, 0, 28));
            // The Prym-part sum d_-14 + d_2 = g_C - 1 makes the system square.
            s.row({0, 1, 1, 0, 0, 0}, affine(16, -64, 0));
            break;
        case 9:
            s.unknown(W, -7);
            s.unknown(W, -3);
            s.unknown(W, 1);
            s.unknown(W, 5);
            s.unknown(W, 9);
            s.row({1, 0, 0, 0, 0}, kPrymOfCover);
            s.row({0, 0, 0, 0, 1}, kBase);
            s.row({1, 1, 1, 1, 1}, affine(64, -5 * 64, 1));
            s.row({-7, -3, 1, 5, 9}, affine(0, 0, 9));
            s.row({49, 9, 1, 25, 81}, affine(7 * 64, -3 * 9 * 64, 81));
            break;
        case 10:
            s.unknown(P, -27);
            s.unknown(P, -3);
            s.unknown(P, 5);
            s.unknown(B, -3);
            s.unknown(B, 13);
            s.unknown(B, 45);
            s.row({1, 0, 0, 0, 0, 0}, kPrymOfCover);
            s.row({0, 0, 0, 0, 0, 1}, kBase);
            s.row({1, 1, 1, 1, 1, 1}, affine(128, -6 * 128, 1));
            s.row({0, 0, 0, 1, 1, 1}, affine(64, -6 * 64, 1));
            s.row({-27, -3, 5, -3, 13, 45}, affine(0, 0, 45));
            s.row({0, 0, 0, -3, 13, 45}, affine(-64, 640, 45));
            break;
        default:
            throw std::invalid_argument("explicit_system: n must be in 3..10");
    }
    return s.build();
}

DimTable dim_table(int n) {
    DimTable t = solve_to_table(n, explicit_system(n));
    if (n == 8) {
        const auto it = std::find_if(t.entries.begin(), t.entries.end(), [](const DimEntry& e) {
            return e.component == Component::prym && e.eigenvalue == -16;
        });
        if (it == t.entries.end() || !it->dimension.is_zero())
            throw std::runtime_error("dim_table: the n = 8 extra unknown did not solve to zero");
        t.entries.erase(it);
    }
    sort_entries(t);
    return t;
}

DimTable derive_odd_dims(int n) {
    if (n < 3 || n % 2 == 0) throw std::invalid_argument("derive_odd_dims: n must be odd and >= 3");
    const int k = (n - 1) / 2;
    const auto roots = integer_roots(correspondence::odd_split_product(n));
    const std::size_t size = roots.size();
    const int powers = k - 2;  // trace identities for l = 0..k-2
    const TraceLedger ledger = trace_ledger(n, std::max(powers, 0));

    RatMatrix a(size, size);
    std::vector<AffineExpr> rhs;
    std::size_t row = 0;
    auto place_known = [&](long eigenvalue, const AffineExpr& value) {
        const auto it = std::find(roots.begin(), roots.end(), Integer(eigenvalue));
        if (it == roots.end()) throw std::logic_error("derive_odd_dims: known eigenvalue is not a root");
        a(row, static_cast<std::size_t>(it - roots.begin())) = 1;
        rhs.push_back(value);
        ++row;
    };
    place_known(n, kBase);
    place_known(-n + 2, kPrymOfCover);
    for (int l = 0; l <= powers; ++l) {
        for (std::size_t j = 0; j < size; ++j) a(row, j) = Rational(pow_int(roots[j], static_cast<unsigned long>(l)));
        rhs.push_back(ledger.trace[static_cast<std::size_t>(l)]);
        ++row;
    }
    if (row != size) throw std::logic_error("derive_odd_dims: system is not square");

    const auto x = solve_linear(a, rhs);
    DimTable t;
    t.n = n;
    for (std::size_t j = 0; j < size; ++j) t.entries.push_back({Component::whole, roots[j], x[j]});
    sort_entries(t);
    return t;
}

std::vector<std::pair<Integer, Integer>> sample_genera(int n) {
    // g_X from downstairs Riemann-Hurwitz with B branch points; over a
    // rational base we need B >= 2n so that g_X >= 1.
    std::vector<std::pair<Integer, Integer>> out;
    for (long gy = 0; gy <= 3; ++gy) {
        const long b_min = gy == 0 ? 2L * n : 2;
        for (long b = b_min; b <= b_min + 8; b += 2) out.emplace_back(Integer(n * (gy - 1) + b / 2 + 1), Integer(gy));
    }
    return out;
}

std::vector<CheckRecord> dim_consistency(int n, const DimTable& table) {
    std::vector<CheckRecord> out;
    auto sum_over = [&](Component c, int power) {
        AffineExpr s;
        for (const auto& e : table.entries)
            if (e.component == c)
                s += Rational(pow_int(e.eigenvalue, static_cast<unsigned long>(power))) * e.dimension;
        return s;
    };
    auto keys_of = [&](Component c) {
        std::vector<Integer> keys;
        for (const auto& e : table.entries)
            if (e.component == c) keys.push_back(e.eigenvalue);
        std::sort(keys.begin(), keys.end());
        return keys;
    };
    auto expect = [&](const std::string& name, const std::string& anchor, const AffineExpr& got,
                      const AffineExpr& want) {
        out.push_back(make_check(n, name, anchor, got == want, got.to_string() + " vs " + want.to_string()));
    };

    if (n % 2 == 1) {
        expect("dims.sum_equals_lifting_genus", "dims/genus-sum", sum_over(Component::whole, 0),
               genus(n, Curve::lifting));
        const int k = (n - 1) / 2;
        const int top = n == 3 ? 0 : k;
        const TraceLedger ledger = trace_ledger(n, top);
        bool ok = true;
        std::string detail;
        for (int l = 1; l <= top; ++l) {
            const AffineExpr got = sum_over(Component::whole, l);
            if (got != ledger.trace[static_cast<std::size_t>(l)]) {
                ok = false;
                detail += "power " + std::to_string(l) + ": " + got.to_string() + " vs " +
                          ledger.trace[static_cast<std::size_t>(l)].to_string() + "; ";
            }
        }
        out.push_back(make_check(n, "dims.power_traces_match_ledger", "dims/trace", ok,
                                 ok ? "powers 1.." + std::to_string(top) : detail));
        const auto want = integer_roots(correspondence::odd_split_product(n));
        out.push_back(make_check(n, "dims.keys_equal_split_roots", "dims/keys", keys_of(Component::whole) == want));
    } else {
        const AffineExpr gc = genus(n, Curve::quotient);
        expect("dims.complement_sum_equals_quotient_genus", "dims/genus-sum", sum_over(Component::complement, 0), gc);
        expect("dims.prym_sum_equals_quotient_genus_minus_one", "dims/genus-sum", sum_over(Component::prym, 0),
               gc - AffineExpr::constant(Rational(1)));
        const auto prod = correspondence::even_split_products(n);
        out.push_back(make_check(n, "dims.keys_equal_split_roots", "dims/keys",
                                 keys_of(Component::complement) == integer_roots(prod.complement) &&
                                     keys_of(Component::prym) == integer_roots(prod.prym)));
        if (n >= 6) {
            const Rational deg(binomial(n, 2));
            expect("dims.first_trace_equals_degree", "dims/trace",
                   sum_over(Component::prym, 1) + sum_over(Component::complement, 1), AffineExpr::constant(deg));
            // Derived: on the quotient curve the trace is C(n,2) - 2^(n-4)((g_X-1) - n(g_Y-1)).
            const AffineExpr quotient_trace =
                AffineExpr::constant(deg) - Rational(two_pow(n - 4)) * affine(1, -n, 0);
            expect("dims.complement_trace_matches_quotient", "dims/trace", sum_over(Component::complement, 1),
                   quotient_trace);
        }
        if (n == 4) {
            const auto d0 = table.find(Component::prym, Integer(0));
            out.push_back(make_check(n, "dims.prym_parts_isogenous_dimension", "dims/isogeny",
                                     d0.has_value() && *d0 == kPrymOfCover,
                                     d0 ? d0->to_string() : std::string("missing")));
        }
    }

    bool nonneg = !table.entries.empty();
    std::string bad;
    for (const auto& [gx, gy] : sample_genera(n))
        for (const auto& e : table.entries) {
            const Rational v = e.dimension.evaluate(gx, gy);
            if (!is_integral(v) || v < 0) {
                nonneg = false;
                bad = label(e) + " at (" + splitpoly::to_string(gx) + "," + splitpoly::to_string(gy) + ")";
            }
        }
    out.push_back(make_check(n, "dims.nonnegative_integral_at_samples", "dims/sanity", nonneg, bad));
    return out;
}

}  // namespace splitpoly::dimensions
