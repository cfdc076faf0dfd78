#include "fatpoints/verify.hpp"

#include "fatpoints/tables.hpp"

#include <algorithm>
#include <set>

namespace fatpoints {

VerifyOutcome verify_run(const VerifyConfig& cfg) {
    VerifyOutcome out;
    out.sweep = sweep(cfg.d_min, cfg.d_max, cfg.threads);

    std::set<QuasiHomSystem> ours;
    for (const auto& ex : out.sweep.exceptional) ours.insert(ex.system);

    std::set<QuasiHomSystem> fixture;
    for (const auto& sys : table4_exceptional())
        if (sys.d >= cfg.d_min && sys.d <= cfg.d_max) fixture.insert(sys);
    out.table4_in_range = static_cast<long long>(fixture.size());

    for (const auto& sys : fixture) {
        if (ours.count(sys))
            ++out.matched;
        else
            out.missing_from_ours.push_back(sys);
    }
    for (const auto& sys : ours)
        if (!fixture.count(sys)) out.extra_in_ours.push_back(sys);

    // Everything the degeneration could not settle, plus every fixture
    // disagreement, goes to the rank oracle.
    std::vector<QuasiHomSystem> to_check;
    for (const auto& ex : out.sweep.exceptional) to_check.push_back(ex.system);
    for (const auto& sys : out.missing_from_ours) to_check.push_back(sys);

    bool violation = false;
    if (cfg.oracle_exceptional) {
        out.oracle_ran = true;
        for (const auto& sys : to_check) {
            OracleCheck chk;
            chk.system = sys;
            chk.conjectured = conjectured_value_qh(sys.d, sys.m0, sys.m, sys.r);
            chk.oracle = oracle_dim(sys.to_divisor(), cfg.prime, cfg.trials, cfg.seed);
            chk.ok = chk.oracle == chk.conjectured;
            if (!chk.ok) violation = true;
            out.oracle_checks.push_back(chk);
        }
        out.exit_code = violation ? 1 : 0;
    } else {
        // Without the oracle, fixture mismatches stay unresolved.
        out.exit_code =
            (out.missing_from_ours.empty() && out.extra_in_ours.empty()) ? 0 : 1;
    }
    return out;
}

} // namespace fatpoints
