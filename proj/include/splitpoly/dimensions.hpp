#ifndef SPLITPOLY_DIMENSIONS_HPP
#define SPLITPOLY_DIMENSIONS_HPP

#include <optional>
#include <string>
#include <vector>

#include "splitpoly/affine.hpp"
#include "splitpoly/exact.hpp"
#include "splitpoly/linalg.hpp"
#include "splitpoly/report.hpp"

namespace splitpoly::dimensions {

/// The lifting curve (one component of the 2^(n-1)-sheeted cover) or, for
/// even n, its quotient by the complement involution.
enum class Curve { lifting, quotient };

/// lifting: 2^(n-3)((g_X-1) - (n-4)(g_Y-1)) + 1, n >= 3.
/// quotient: 2^(n-4)((g_X-1) - (n-4)(g_Y-1)) + 1, n even >= 4.
AffineExpr genus(int n, Curve which);

/// Self-intersection bookkeeping for odd n: entry l of `diagonal` is the
/// intersection of the diagonal with D^l, entry l of `trace` the analytic
/// trace n^l - diagonal[l] / 2.
struct TraceLedger {
    int n = 0;
    std::vector<AffineExpr> diagonal;
    std::vector<AffineExpr> trace;
};

/// Powers 0..max_power. Needs odd n, max_power <= (n-1)/2 and, apart from
/// max_power = 0, max_power < n - 2.
TraceLedger trace_ledger(int n, int max_power);

/// Which part of the Jacobian an eigenvalue lives on. Odd n has a single
/// part; for even n the Prym part (sigma = -1) and its complement.
enum class Component { whole, prym, complement };

std::string_view to_string(Component c);

struct DimEntry {
    Component component;
    Integer eigenvalue;
    AffineExpr dimension;
};

/// Dimensions keyed by (component, eigenvalue); the same eigenvalue may
/// occur on both parts (n = 10 has -3 twice).
struct DimTable {
    int n = 0;
    std::vector<DimEntry> entries;

    std::optional<AffineExpr> find(Component c, const Integer& eigenvalue) const;
};

/// "d_5" for whole/prym entries, "e_5" for complement entries.
std::string label(const DimEntry& e);

/// One hand-written linear system per n in 3..10, as printed: unknowns,
/// coefficient rows and affine right-hand sides, including the known
/// dimensions as single-variable rows.
struct LinearSystem {
    std::vector<DimEntry> unknowns;  // dimension fields unused
    RatMatrix matrix;
    std::vector<AffineExpr> rhs;
};

LinearSystem explicit_system(int n);

/// Solves explicit_system(n). For n = 8 the system carries one unknown on an
/// eigenvalue with no eigenvectors; it must solve to zero and is then
/// dropped (std::runtime_error otherwise).
DimTable dim_table(int n);

/// Odd n: rebuilds the table from the split-product roots, the two known
/// dimensions and the trace identities for powers 0..k-2.
DimTable derive_odd_dims(int n);

/// Sum, trace and key checks of a table against the genus formulas and
/// the split products; also tests nonnegativity at sample genera.
std::vector<CheckRecord> dim_consistency(int n, const DimTable& table);

/// Sample (g_X, g_Y) pairs used by the nonnegativity check.
std::vector<std::pair<Integer, Integer>> sample_genera(int n);

}  // namespace splitpoly::dimensions

#endif
