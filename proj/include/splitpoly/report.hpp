#ifndef SPLITPOLY_REPORT_HPP
#define SPLITPOLY_REPORT_HPP

#include <string>
#include <string_view>
#include <vector>

namespace splitpoly {

enum class CheckStatus { pass, fail, skipped };

inline std::string_view to_string(CheckStatus s) {
    switch (s) {
        case CheckStatus::pass: return "pass";
        case CheckStatus::fail: return "fail";
        case CheckStatus::skipped: return "skipped";
    }
    return "?";
}

struct CheckRecord {
    int n = 0;
    std::string name;
    std::string anchor;  // short tag naming the identity being checked
    CheckStatus status = CheckStatus::skipped;
    std::string detail;
};

inline CheckRecord make_check(int n, std::string name, std::string anchor, bool ok, std::string detail = {}) {
    return {n, std::move(name), std::move(anchor), ok ? CheckStatus::pass : CheckStatus::fail, std::move(detail)};
}

inline bool all_pass(const std::vector<CheckRecord>& records) {
    for (const auto& r : records)
        if (r.status == CheckStatus::fail) return false;
    return true;
}

}  // namespace splitpoly

#endif
