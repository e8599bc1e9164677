#ifndef CMG_VERIFY_SERIES_SUITE_HPP
#define CMG_VERIFY_SERIES_SUITE_HPP

#include <optional>
#include <string>
#include <vector>

namespace cmg::verify
{

enum class CheckStatus { Pass, Fail, Truncated };
const char *status_name(CheckStatus s);

// One reference coefficient compared against the computed expansion.
struct CoefCheck {
    std::string series; // e.g. "x(z)", "f[case2]", "dlogf[case1].ds"
    int power = 0;
    std::string expected;
    std::string got; // empty when the coefficient is past the truncation
    CheckStatus status = CheckStatus::Pass;
};

struct SuiteOptions {
    int order = 30;
    // Test fixture: add 1 to the computed coefficient at (series, power).
    std::optional<std::pair<std::string, int>> corrupt;
};

struct SuiteResult {
    std::vector<CoefCheck> checks;
    bool product_identity = false; // f[case1] f[case2] = 2b on the known range
    int product_order = 0;         // truncation of that product
    bool ok() const;
    const CoefCheck *first_failure() const;
};

// All exact coefficient checks for the Weierstrass expansions and the branch
// data of x1 + x2 = 0, computed at the given truncation order.
SuiteResult series_suite(const SuiteOptions &opt = {});

} // namespace cmg::verify

#endif
