#pragma once

#include "fatpoints/degeneration.hpp"
#include "fatpoints/oracle.hpp"

#include <cstdint>
#include <vector>

namespace fatpoints {

struct OracleCheck {
    QuasiHomSystem system;
    Int conjectured = 0;
    Int oracle = 0;
    bool ok = false; // oracle == conjectured
};

/// Full result of one verification run: the degeneration sweep, the row
/// comparison against the exceptional-case fixture, and the independent
/// oracle confirmation of everything that needs one.
struct VerifyOutcome {
    SweepReport sweep;
    long long table4_in_range = 0;
    long long matched = 0;
    std::vector<QuasiHomSystem> missing_from_ours; // fixture rows we verified anyway
    std::vector<QuasiHomSystem> extra_in_ours;     // exceptional rows not in the fixture
    std::vector<OracleCheck> oracle_checks;
    bool oracle_ran = false;
    int exit_code = 2;
};

struct VerifyConfig {
    Int d_min = 8;
    Int d_max = 33;
    int threads = 1;
    bool oracle_exceptional = true;
    std::uint64_t prime = kDefaultPrime;
    int trials = 3;
    std::uint64_t seed = 0;
};

/// Runs the sweep and settles the exit code: 0 when every exceptional
/// system and every fixture mismatch is oracle-confirmed consistent with
/// its conjectured dimension (or when there is nothing to confirm), 1 on a
/// genuine conjecture violation or an unresolved mismatch.
VerifyOutcome verify_run(const VerifyConfig& cfg);

} // namespace fatpoints
