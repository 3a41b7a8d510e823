#include "splitpoly/cli.hpp"

#include <algorithm>
#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include <CLI11.hpp>
#include <json.hpp>

#include "splitpoly/correspondence.hpp"
#include "splitpoly/covering.hpp"
#include "splitpoly/dimensions.hpp"
#include "splitpoly/hamming.hpp"
#include "splitpoly/linalg.hpp"
#include "splitpoly/tridiag.hpp"
#include "splitpoly/verify.hpp"

namespace splitpoly::cli {

namespace {

using nlohmann::json;

// Bad flag values that CLI11 cannot see (parity, ranges, combinations).
class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

enum class Format { json, csv, text };

Format parse_format(const std::string& s, bool csv_allowed) {
    if (s == "json") return Format::json;
    if (s == "text") return Format::text;
    if (s == "csv") {
        if (!csv_allowed) throw UsageError("csv output is only available for krawtchouk, dims and verify");
        return Format::csv;
    }
    throw UsageError("unknown format: " + s);
}

json poly_json(const IntPoly& p) {
    json arr = json::array();
    for (const auto& c : p.coeffs()) arr.push_back(to_string(c));
    return arr;
}

json affine_json(const AffineExpr& e) {
    return {{"gx", to_string(e.gx)}, {"gy", to_string(e.gy)}, {"c", to_string(e.c)}};
}

json ints_json(const std::vector<Integer>& v) {
    json arr = json::array();
    for (const auto& x : v) arr.push_back(to_string(x));
    return arr;
}

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string q = "\"";
    for (char c : s) {
        if (c == '"') q += '"';
        q += c;
    }
    return q + "\"";
}

std::string join(const std::vector<std::string>& parts, const std::string& sep) {
    std::string s;
    for (std::size_t i = 0; i < parts.size(); ++i) s += (i ? sep : "") + parts[i];
    return s;
}

std::string roots_text(const IntPoly& p) {
    std::vector<std::string> r;
    for (const auto& x : integer_roots(p)) r.push_back(to_string(x));
    return "{" + join(r, ", ") + "}";
}

void require(bool cond, const std::string& message) {
    if (!cond) throw UsageError(message);
}

struct Context {
    std::string command;  // echoed argv
    Format format = Format::json;
    std::ostream& out;
};

void emit(const Context& ctx, json j) {
    j["command"] = ctx.command;
    ctx.out << j.dump(2) << "\n";
}

json records_json(const std::vector<CheckRecord>& records) {
    json arr = json::array();
    for (const auto& r : records)
        arr.push_back({{"n", r.n},
                       {"name", r.name},
                       {"anchor", r.anchor},
                       {"status", std::string(to_string(r.status))},
                       {"detail", r.detail}});
    return arr;
}

std::string overall(const std::vector<CheckRecord>& records) { return all_pass(records) ? "pass" : "fail"; }

void records_text(std::ostream& out, const std::vector<CheckRecord>& records) {
    std::size_t width = 4;
    for (const auto& r : records) width = std::max(width, r.name.size());
    for (const auto& r : records) {
        out << std::setw(3) << r.n << "  " << std::left << std::setw(static_cast<int>(width)) << r.name << "  "
            << std::setw(7) << to_string(r.status) << std::right;
        if (!r.detail.empty()) out << "  " << r.detail;
        out << "\n";
    }
}

// ---------- krawtchouk ----------

struct KrawtchoukArgs {
    int n = 0;
    std::optional<int> k;
    std::optional<int> ell;
};

int cmd_krawtchouk(const Context& ctx, const KrawtchoukArgs& a) {
    require(a.n >= 0, "--n must be nonnegative");
    if (a.k) require(*a.k >= 0 && *a.k <= a.n, "--k must lie in 0..n");
    if (a.ell) require(*a.ell >= 0 && *a.ell <= a.n, "--ell must lie in 0..n");

    if (a.k && a.ell) {
        const Integer v = hamming::krawtchouk(a.n, *a.k, *a.ell);
        switch (ctx.format) {
            case Format::json: emit(ctx, {{"n", a.n}, {"k", *a.k}, {"ell", *a.ell}, {"value", to_string(v)}}); break;
            case Format::csv: ctx.out << "n,k,ell,value\n" << a.n << "," << *a.k << "," << *a.ell << "," << v << "\n"; break;
            case Format::text: ctx.out << to_string(v) << "\n"; break;
        }
        return exit_ok;
    }

    std::vector<int> ks, ells;
    for (int i = 0; i <= a.n; ++i) {
        if (!a.k || *a.k == i) ks.push_back(i);
        if (!a.ell || *a.ell == i) ells.push_back(i);
    }
    switch (ctx.format) {
        case Format::json: {
            json rows = json::array();
            for (int k : ks)
                for (int l : ells)
                    rows.push_back({{"k", k}, {"ell", l}, {"value", to_string(hamming::krawtchouk(a.n, k, l))}});
            emit(ctx, {{"n", a.n}, {"table", rows}});
            break;
        }
        case Format::csv:
            ctx.out << "n,k,ell,value\n";
            for (int k : ks)
                for (int l : ells) ctx.out << a.n << "," << k << "," << l << "," << hamming::krawtchouk(a.n, k, l) << "\n";
            break;
        case Format::text: {
            std::vector<std::vector<std::string>> cells;
            std::size_t width = 3;
            for (int k : ks) {
                auto& row = cells.emplace_back();
                for (int l : ells) {
                    row.push_back(to_string(hamming::krawtchouk(a.n, k, l)));
                    width = std::max(width, row.back().size());
                }
            }
            const int w = static_cast<int>(width) + 1;
            ctx.out << "k\\l";
            for (int l : ells) ctx.out << std::setw(w) << l;
            ctx.out << "\n";
            for (std::size_t r = 0; r < ks.size(); ++r) {
                ctx.out << std::setw(3) << ks[r];
                for (const auto& c : cells[r]) ctx.out << std::setw(w) << c;
                ctx.out << "\n";
            }
            break;
        }
    }
    return exit_ok;
}

// ---------- equation ----------

struct EquationArgs {
    int n = 0;
    std::string component;
    bool sigma = false;
};

int cmd_equation(const Context& ctx, const EquationArgs& a) {
    require(a.n >= 3, "--n must be at least 3");
    const bool odd = a.n % 2 == 1;

    if (a.sigma) {
        require(!odd && a.n >= 6, "--sigma needs even n >= 6");
        require(a.component.empty(), "--sigma prints the full relation; drop --component");
        const auto eq = correspondence::even_sigma_equation(a.n);
        const auto prods = correspondence::even_split_products(a.n);
        const IntPoly plus = eq.substitute(1);
        const IntPoly minus = eq.substitute(-1);
        const auto [quot, rem] = divmod_monic(minus, prods.prym);
        const bool ok = plus == prods.complement && rem.is_zero();
        if (ctx.format == Format::json) {
            json coeffs = json::array();
            for (const auto& c : eq.coeffs()) coeffs.push_back({{"id", to_string(c.id_part)}, {"sigma", to_string(c.sigma_part)}});
            emit(ctx, {{"n", a.n},
                       {"degree", eq.degree()},
                       {"sigma_coefficients", coeffs},
                       {"at_sigma_plus", poly_json(plus)},
                       {"at_sigma_minus", poly_json(minus)},
                       {"sigma_minus_over_prym", poly_json(quot)},
                       {"consistent", ok}});
        } else {
            for (int j = eq.degree(); j >= 0; --j) {
                const auto& c = eq.coeffs()[static_cast<std::size_t>(j)];
                ctx.out << "X^" << j << ": " << c.id_part << " + " << c.sigma_part << "*sigma\n";
            }
            ctx.out << "sigma=+1: " << plus << "\n" << "sigma=-1: " << minus << "\n";
        }
        return ok ? exit_ok : exit_failure;
    }

    std::string comp = a.component.empty() ? (odd ? "odd" : "B") : a.component;
    if (odd) require(comp == "odd", "odd n only has the component 'odd'");
    else require(comp == "B" || comp == "P", "even n has components B and P");

    IntPoly eq, prod;
    std::string source = "relation";
    if (odd) {
        eq = correspondence::odd_equation(a.n);
        prod = correspondence::odd_split_product(a.n);
    } else {
        const auto prods = correspondence::even_split_products(a.n);
        prod = comp == "B" ? prods.complement : prods.prym;
        if (a.n >= 6) {
            eq = comp == "B" ? correspondence::complement_equation(a.n) : correspondence::prym_equation(a.n);
        } else {
            eq = prod;  // no assembled relation below 6
            source = "product";
        }
    }
    const bool ok = eq == prod;
    switch (ctx.format) {
        case Format::json:
            emit(ctx, {{"n", a.n},
                       {"component", comp},
                       {"source", source},
                       {"coefficients", poly_json(eq)},
                       {"text", eq.to_string()},
                       {"product", poly_json(prod)},
                       {"roots", ints_json(integer_roots(prod))},
                       {"matches_product", ok}});
            break;
        case Format::text:
            ctx.out << "n = " << a.n << ", component " << comp << "\n"
                    << "relation: " << eq << "\n"
                    << "product:  " << prod << "\n"
                    << "roots:    " << roots_text(prod) << "\n"
                    << (ok ? "match" : "MISMATCH") << "\n";
            break;
        case Format::csv: break;
    }
    return ok ? exit_ok : exit_failure;
}

// ---------- spectrum ----------

struct SpectrumArgs {
    int n = 0;
    int k = 0;
    std::string subspace;
};

std::string_view variant_name(hamming::EigenVariant v) {
    switch (v) {
        case hamming::EigenVariant::plain: return "plain";
        case hamming::EigenVariant::even: return "even";
        case hamming::EigenVariant::odd: return "odd";
    }
    return "?";
}

int cmd_spectrum(const Context& ctx, const SpectrumArgs& a) {
    require(a.n >= 1 && a.k >= 0 && a.k <= a.n, "need n >= 1 and 0 <= k <= n");
    hamming::Subspace s;
    try {
        s = hamming::parse_subspace(a.subspace);
    } catch (const std::exception& e) {
        throw UsageError(e.what());
    }
    hamming::SubspaceSpec spec;
    try {
        spec = hamming::subspace_spectrum(a.n, a.k, s);
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
    const auto polys = hamming::char_and_min_poly(a.n, a.k, s);
    if (ctx.format == Format::json) {
        json eig = json::array();
        for (const auto& p : spec.eigen_list)
            eig.push_back({{"index", p.index},
                           {"variant", std::string(variant_name(p.variant))},
                           {"eigenvalue", to_string(p.eigenvalue)}});
        emit(ctx, {{"n", a.n},
                   {"k", a.k},
                   {"subspace", std::string(hamming::to_string(s))},
                   {"dimension", spec.dimension},
                   {"eigenpairs", eig},
                   {"characteristic", poly_json(polys.characteristic)},
                   {"minimal", poly_json(polys.minimal)}});
    } else {
        ctx.out << "delta_" << a.k << " on " << hamming::to_string(s) << " (n = " << a.n << "), dimension "
                << spec.dimension << "\n";
        for (const auto& p : spec.eigen_list) {
            std::string vec = "v_" + std::to_string(p.index);
            if (p.variant == hamming::EigenVariant::even) vec += "^e";
            if (p.variant == hamming::EigenVariant::odd) vec += "^o";
            ctx.out << "  " << std::left << std::setw(8) << vec << std::right << " " << p.eigenvalue << "\n";
        }
        ctx.out << "characteristic: " << polys.characteristic << "\n" << "minimal:        " << polys.minimal << "\n";
    }
    return exit_ok;
}

// ---------- dims ----------

struct DimsArgs {
    int n = 0;
    std::optional<long> gx;
    std::optional<long> gy;
    bool symbolic = false;
};

int cmd_dims(const Context& ctx, const DimsArgs& a) {
    require(a.n >= 3 && a.n <= 10, "dimension tables exist for n = 3..10");
    require(a.gx.has_value() == a.gy.has_value(), "--gx and --gy go together");
    require(!(a.symbolic && a.gx), "--symbolic excludes --gx/--gy");
    const bool numeric = a.gx.has_value();
    const Integer gx = numeric ? Integer(*a.gx) : Integer(0);
    const Integer gy = numeric ? Integer(*a.gy) : Integer(0);
    if (numeric) require(*a.gy >= 0 && *a.gx >= 0, "genera must be nonnegative");

    const auto table = dimensions::dim_table(a.n);
    const auto checks = dimensions::dim_consistency(a.n, table);
    const auto lifting = dimensions::genus(a.n, dimensions::Curve::lifting);

    switch (ctx.format) {
        case Format::json: {
            json dims = json::object();
            json entries = json::array();
            json values = json::object();
            for (const auto& e : table.entries) {
                const std::string lbl = dimensions::label(e);
                dims[lbl] = affine_json(e.dimension);
                json entry = {{"label", lbl},
                              {"component", std::string(dimensions::to_string(e.component))},
                              {"eigenvalue", to_string(e.eigenvalue)},
                              {"dimension", affine_json(e.dimension)}};
                if (numeric) {
                    const std::string v = to_string(e.dimension.evaluate(gx, gy));
                    entry["value"] = v;
                    values[lbl] = v;
                }
                entries.push_back(entry);
            }
            json j = {{"n", a.n},
                      {"dims", dims},
                      {"entries", entries},
                      {"lifting_genus", affine_json(lifting)},
                      {"checks", records_json(checks)},
                      {"status", overall(checks)}};
            if (numeric) {
                j["gx"] = to_string(gx);
                j["gy"] = to_string(gy);
                j["values"] = values;
                j["lifting_genus_value"] = to_string(lifting.evaluate(gx, gy));
            }
            emit(ctx, j);
            break;
        }
        case Format::csv:
            ctx.out << "label,component,eigenvalue,gx,gy,c" << (numeric ? ",value" : "") << "\n";
            for (const auto& e : table.entries) {
                ctx.out << dimensions::label(e) << "," << dimensions::to_string(e.component) << "," << e.eigenvalue
                        << "," << to_string(e.dimension.gx) << "," << to_string(e.dimension.gy) << ","
                        << to_string(e.dimension.c);
                if (numeric) ctx.out << "," << to_string(e.dimension.evaluate(gx, gy));
                ctx.out << "\n";
            }
            break;
        case Format::text: {
            ctx.out << "n = " << a.n << ", lifting genus " << lifting;
            if (numeric) ctx.out << " = " << to_string(lifting.evaluate(gx, gy)) << " at g_X=" << gx << ", g_Y=" << gy;
            ctx.out << "\n";
            for (const auto& e : table.entries) {
                ctx.out << "  " << std::left << std::setw(7) << dimensions::label(e) << std::setw(6)
                        << dimensions::to_string(e.component) << std::right << e.dimension;
                if (numeric) ctx.out << " = " << to_string(e.dimension.evaluate(gx, gy));
                ctx.out << "\n";
            }
            ctx.out << "checks: " << overall(checks) << "\n";
            break;
        }
    }
    return all_pass(checks) ? exit_ok : exit_failure;
}

// ---------- covering ----------

struct CoveringArgs {
    int n = 0;
    int branches = 0;
    int genus_y = 0;
    std::uint64_t seed = 0;
    std::uint64_t max_attempts = 4'000'000;
};

int cmd_covering(const Context& ctx, const CoveringArgs& a, std::ostream& err) {
    require(a.n >= 2 && a.n <= 20, "--n must lie in 2..20");
    require(a.branches >= 1 && a.branches % 2 == 0, "--branches must be positive and even");
    require(a.genus_y >= 0, "--genus-y must be nonnegative");

    covering::MonodromyData m;
    try {
        m = covering::random_simple_monodromy(a.n, a.branches, a.genus_y, a.seed, a.max_attempts);
    } catch (const covering::NoInstanceError& e) {
        err << "covering: " << e.what() << "\n";
        return exit_failure;
    }
    const auto counts = covering::component_counts(m);
    const auto rep = covering::ramification_and_genus(m);
    const auto comp = covering::complement_checks(m);
    const Integer expected_cycles = pow_int(Integer(2), static_cast<unsigned long>(a.n - 2));
    bool cycles_ok = true;
    for (const auto& c : rep.two_cycles_per_branch) cycles_ok = cycles_ok && c == expected_cycles;
    bool genus_ok = true;
    for (const auto& c : rep.components) genus_ok = genus_ok && Rational(c.genus) == rep.closed_genus;
    const bool ok = cycles_ok && genus_ok && comp.commutes && comp.fixed_point_free;

    if (ctx.format == Format::json) {
        json comps = json::array();
        for (const auto& c : rep.components)
            comps.push_back({{"degree", c.degree}, {"ramification", to_string(c.ramification)}, {"genus", to_string(c.genus)}});
        emit(ctx, {{"n", a.n},
                   {"branches", a.branches},
                   {"genus_y", a.genus_y},
                   {"seed", a.seed},
                   {"monodromy", covering::to_json(m)},
                   {"orbits", {{"strands", counts.orbits_on_strands},
                               {"liftings", counts.orbits_on_liftings},
                               {"even", counts.orbits_even},
                               {"odd", counts.orbits_odd}}},
                   {"g_x", to_string(rep.g_x)},
                   {"two_cycles_per_branch", ints_json(rep.two_cycles_per_branch)},
                   {"components", comps},
                   {"closed_genus", to_string(rep.closed_genus)},
                   {"complement", {{"commutes", comp.commutes},
                                   {"fixed_point_free", comp.fixed_point_free},
                                   {"halves_components", comp.halves_components}}},
                   {"status", ok ? "pass" : "fail"}});
    } else {
        ctx.out << "n = " << a.n << ", " << a.branches << " branch points over genus " << a.genus_y << ", seed "
                << a.seed << "\n"
                << "g_X = " << rep.g_x << "\n"
                << "lifting orbits: " << counts.orbits_on_liftings << " (even " << counts.orbits_even << ", odd "
                << counts.orbits_odd << ")\n"
                << "2-cycles per branch: " << (cycles_ok ? "all " + to_string(expected_cycles) : std::string("MISMATCH"))
                << "\n";
        for (const auto& c : rep.components)
            ctx.out << "component: degree " << c.degree << ", ramification " << c.ramification << ", genus " << c.genus
                    << "\n";
        ctx.out << "closed formula: " << to_string(rep.closed_genus) << "\n" << (ok ? "pass" : "fail") << "\n";
    }
    return ok ? exit_ok : exit_failure;
}

// ---------- tridiag ----------

int cmd_tridiag(const Context& ctx, int n) {
    require(n >= 3 && n % 2 == 1, "--n must be odd and >= 3");
    require(n <= 61, "--n above 61 is not supported");
    const IntPoly det = tridiag::cnplus(n);
    const IntPoly prod = tridiag::cnplus_product(n);
    const IntPoly cp = integer_charpoly(hamming::restricted_operator(n, n - 1, hamming::Subspace::plus));
    const bool ok = det == prod && det == cp;
    if (ctx.format == Format::json) {
        emit(ctx, {{"n", n},
                   {"m", (n + 1) / 2},
                   {"determinant", poly_json(det)},
                   {"product", poly_json(prod)},
                   {"operator_charpoly", poly_json(cp)},
                   {"roots", ints_json(integer_roots(prod))},
                   {"status", ok ? "pass" : "fail"}});
    } else {
        ctx.out << "determinant: " << det << "\n"
                << "product:     " << prod << "\n"
                << "charpoly:    " << cp << "\n"
                << (ok ? "pass" : "fail") << "\n";
    }
    return ok ? exit_ok : exit_failure;
}

// ---------- verify ----------

struct VerifyArgs {
    int n_from = 3;
    int n_to = 12;
    std::string suite = "all";
};

int cmd_verify(const Context& ctx, const VerifyArgs& a) {
    require(a.n_from >= 1 && a.n_to <= 64 && a.n_from <= a.n_to, "need 1 <= n-from <= n-to <= 64");
    std::vector<verify::Suite> suites;
    try {
        suites = verify::parse_suites(a.suite);
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
    const auto records = verify::verify_range(a.n_from, a.n_to, suites);
    int passed = 0, failed = 0, skipped = 0;
    for (const auto& r : records) {
        if (r.status == CheckStatus::pass) ++passed;
        else if (r.status == CheckStatus::fail) ++failed;
        else ++skipped;
    }
    switch (ctx.format) {
        case Format::json: {
            json names = json::array();
            for (auto s : suites) names.push_back(std::string(verify::to_string(s)));
            emit(ctx, {{"n_from", a.n_from},
                       {"n_to", a.n_to},
                       {"suites", names},
                       {"status", overall(records)},
                       {"counts", {{"pass", passed}, {"fail", failed}, {"skipped", skipped}}},
                       {"records", records_json(records)}});
            break;
        }
        case Format::csv:
            ctx.out << "n,name,anchor,status,detail\n";
            for (const auto& r : records)
                ctx.out << r.n << "," << csv_field(r.name) << "," << csv_field(r.anchor) << "," << to_string(r.status)
                        << "," << csv_field(r.detail) << "\n";
            break;
        case Format::text:
            records_text(ctx.out, records);
            ctx.out << passed << " passed, " << failed << " failed, " << skipped << " skipped: " << overall(records)
                    << "\n";
            break;
    }
    return failed == 0 ? exit_ok : exit_failure;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact eigenvalue, splitting and dimension computations for Hamming-scheme correspondences"};
    app.name("splitpoly");
    app.require_subcommand(1);

    std::string format = "json";
    auto add_format = [&](CLI::App* sub, bool csv) {
        sub->add_option("--format", format, csv ? "json, csv or text" : "json or text")
            ->check(CLI::IsMember(csv ? std::vector<std::string>{"json", "csv", "text"}
                                      : std::vector<std::string>{"json", "text"}));
    };

    KrawtchoukArgs ka;
    auto* kraw = app.add_subcommand("krawtchouk", "Eigenvalue of the distance-k transform on weight-l words");
    kraw->add_option("--n", ka.n, "word length")->required();
    kraw->add_option("--k", ka.k, "distance (omit for every k)");
    kraw->add_option("--ell", ka.ell, "weight (omit for every weight)");
    add_format(kraw, true);

    EquationArgs ea;
    auto* equation = app.add_subcommand("equation", "Polynomial relation of the correspondence and its factorisation");
    equation->add_option("--n", ea.n, "fiber size")->required();
    equation->add_option("--component", ea.component, "odd, B or P")->check(CLI::IsMember({"odd", "B", "P"}));
    equation->add_flag("--sigma", ea.sigma, "relation over Z[sigma] (even n >= 6)");
    add_format(equation, false);

    SpectrumArgs sa;
    auto* spectrum = app.add_subcommand("spectrum", "Eigenvalues of delta_k on an invariant subspace");
    spectrum->add_option("--n", sa.n, "degree")->required();
    spectrum->add_option("--k", sa.k, "distance")->required();
    spectrum->add_option("--subspace", sa.subspace, "+, -, e, o, +e, +o, -e or -o")->required();
    add_format(spectrum, false);

    DimsArgs da;
    auto* dims = app.add_subcommand("dims", "Dimensions of the eigen-abelian subvarieties");
    dims->add_option("--n", da.n, "fiber size, 3..10")->required();
    auto* gx_opt = dims->add_option("--gx", da.gx, "genus of X");
    auto* gy_opt = dims->add_option("--gy", da.gy, "genus of Y");
    auto* sym_flag = dims->add_flag("--symbolic", da.symbolic, "affine expressions only (default)");
    sym_flag->excludes(gx_opt)->excludes(gy_opt);
    gx_opt->needs(gy_opt);
    gy_opt->needs(gx_opt);
    add_format(dims, true);

    CoveringArgs ca;
    auto* cover = app.add_subcommand("covering", "Sample a simple-type monodromy and check the genus formulas");
    cover->add_option("--n", ca.n, "degree of X -> Y")->required();
    cover->add_option("--branches", ca.branches, "number of branch points (even)")->required();
    cover->add_option("--genus-y", ca.genus_y, "genus of the base");
    cover->add_option("--seed", ca.seed, "random seed")->required();
    cover->add_option("--max-attempts", ca.max_attempts, "rejection sampling budget");
    add_format(cover, false);

    int tn = 0;
    auto* tri = app.add_subcommand("tridiag", "Tridiagonal determinant for the symmetric part");
    tri->add_option("--n", tn, "odd degree")->required();
    add_format(tri, false);

    VerifyArgs va;
    auto* ver = app.add_subcommand("verify", "Run the verification suites");
    ver->add_option("--n-from", va.n_from, "first n")->required();
    ver->add_option("--n-to", va.n_to, "last n")->required();
    ver->add_option("--suite", va.suite, "odd, even, hamming, dims, tridiag, covering or all")
        ->check(CLI::IsMember({"odd", "even", "hamming", "dims", "tridiag", "covering", "all"}));
    add_format(ver, true);

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? exit_ok : exit_usage;
    }

    try {
        const bool csv_ok = kraw->parsed() || dims->parsed() || ver->parsed();
        Context ctx{join(args, " "), parse_format(format, csv_ok), out};
        if (kraw->parsed()) return cmd_krawtchouk(ctx, ka);
        if (equation->parsed()) return cmd_equation(ctx, ea);
        if (spectrum->parsed()) return cmd_spectrum(ctx, sa);
        if (dims->parsed()) return cmd_dims(ctx, da);
        if (cover->parsed()) return cmd_covering(ctx, ca, err);
        if (tri->parsed()) return cmd_tridiag(ctx, tn);
        if (ver->parsed()) return cmd_verify(ctx, va);
    } catch (const UsageError& e) {
        err << "error: " << e.what() << "\n";
        return exit_usage;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return exit_failure;
    }
    return exit_usage;
}

}  // namespace splitpoly::cli
