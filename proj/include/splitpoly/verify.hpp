#ifndef SPLITPOLY_VERIFY_HPP
#define SPLITPOLY_VERIFY_HPP

#include <string>
#include <string_view>
#include <vector>

#include "splitpoly/report.hpp"

namespace splitpoly::verify {

enum class Suite { odd, even, hamming, dims, tridiag, covering };

std::string_view to_string(Suite s);
/// "odd", "even", ..., or "all".
std::vector<Suite> parse_suites(std::string_view name);

/// Checks of one suite at one n. Suites that have nothing to say about n
/// return a single skipped record.
std::vector<CheckRecord> run_suite(Suite suite, int n);

/// All suites over n_from..n_to; each n runs as its own task. Records are
/// sorted by n, then by name.
std::vector<CheckRecord> verify_range(int n_from, int n_to, const std::vector<Suite>& suites);

}  // namespace splitpoly::verify

#endif
