#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "nsymkit/json_io.hpp"

namespace nsymkit {

struct VerifyOptions {
    int max_size = 6;          ///< largest |alpha| in the exhaustive sweep
    int max_n = 5;             ///< largest n in the exhaustive sweep
    std::uint64_t seed = 1;    ///< seed for the randomized commutation trials
    int trials = 10000;        ///< trials per randomized identity
    unsigned threads = 0;      ///< 0 = hardware concurrency
};

/// One identity checked by the suite.
struct CheckResult {
    std::string name;
    std::int64_t cases = 0;
    std::int64_t failures = 0;
    /// First failing case in canonical order (smallest |alpha|, then n, then alpha).
    std::optional<std::string> counterexample;

    bool passed() const noexcept { return failures == 0; }
};

struct VerifyReport {
    VerifyOptions options;
    std::vector<CheckResult> checks;

    bool passed() const noexcept;
    std::string render_text() const;
    Json to_json() const;
};

/// Runs every identity over all compositions of size <= max_size and
/// 1 <= n <= max_n, plus the seeded randomized commutation trials. The report
/// order is fixed regardless of how cells are scheduled.
VerifyReport run_verification(const VerifyOptions& options);

}  // namespace nsymkit
