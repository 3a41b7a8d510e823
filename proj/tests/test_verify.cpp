#include <doctest.h>

#include <algorithm>

#include "splitpoly/verify.hpp"

using namespace splitpoly;
using namespace splitpoly::verify;

TEST_CASE("suite names") {
    CHECK(parse_suites("all").size() == 6);
    CHECK(parse_suites("dims") == std::vector<Suite>{Suite::dims});
    for (auto s : parse_suites("all")) CHECK(parse_suites(to_string(s)) == std::vector<Suite>{s});
    CHECK_THROWS_AS(parse_suites("nope"), std::invalid_argument);
}

TEST_CASE("records are sorted and pass") {
    const auto records = verify_range(3, 8, parse_suites("all"));
    CHECK(all_pass(records));
    CHECK(std::is_sorted(records.begin(), records.end(), [](const CheckRecord& a, const CheckRecord& b) {
        return a.n != b.n ? a.n < b.n : a.name < b.name;
    }));
    int passed = 0;
    for (const auto& r : records) passed += r.status == CheckStatus::pass;
    CHECK(passed > 100);
}

TEST_CASE("out-of-range suites are skipped, not passed") {
    const auto dims = run_suite(Suite::dims, 11);
    REQUIRE(dims.size() == 1);
    CHECK(dims[0].status == CheckStatus::skipped);
    const auto cover = run_suite(Suite::covering, 9);
    REQUIRE(cover.size() == 1);
    CHECK(cover[0].status == CheckStatus::skipped);
    CHECK(run_suite(Suite::odd, 6).empty());
    CHECK(run_suite(Suite::even, 7).empty());
}

TEST_CASE("repeat runs are identical") {
    const auto a = verify_range(4, 6, {Suite::covering, Suite::even});
    const auto b = verify_range(4, 6, {Suite::covering, Suite::even});
    REQUIRE(a.size() == b.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        CHECK(a[i].name == b[i].name);
        CHECK(a[i].detail == b[i].detail);
    }
}

TEST_CASE("bad ranges") {
    CHECK_THROWS(verify_range(5, 4, {Suite::odd}));
    CHECK_THROWS(verify_range(0, 4, {Suite::odd}));
}
