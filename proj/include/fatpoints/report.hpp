#pragma once

#include "fatpoints/conjecture.hpp"
#include "fatpoints/curves.hpp"
#include "fatpoints/degeneration.hpp"
#include "fatpoints/verify.hpp"

#include <json.hpp>

#include <string>
#include <vector>

namespace fatpoints {

// Stable JSON forms of the report types.  nlohmann::json objects keep
// their keys sorted, so identical inputs serialize to identical bytes.

nlohmann::json json_system(const QuasiHomSystem& sys);
nlohmann::json json_dimension_report(const std::string& system, const DimensionReport& rep);
nlohmann::json json_scan(Int m, Int d_max, Int r_max,
                         const std::vector<SpecialSystemRecord>& records);
nlohmann::json json_curves(Int m, const std::vector<QuasiHomSystem>& enumerated);
nlohmann::json json_split(const DegenerationSplit& s, const Certificate& cert);
nlohmann::json json_verify(const VerifyConfig& cfg, const VerifyOutcome& out);

/// Canonical serialization: 2-space indentation plus trailing newline.
std::string dump_report(const nlohmann::json& j);

/// CSV rows for scan output; column order is frozen:
/// d,m0,m,r,virtual,expected,conjectured,family
std::string scan_csv(const std::vector<SpecialSystemRecord>& records);

} // namespace fatpoints
