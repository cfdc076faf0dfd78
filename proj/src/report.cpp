#include "fatpoints/report.hpp"

#include <sstream>

namespace fatpoints {

using nlohmann::json;

json json_system(const QuasiHomSystem& sys) {
    return json{{"d", sys.d}, {"m0", sys.m0}, {"m", sys.m}, {"r", sys.r}};
}

json json_dimension_report(const std::string& system, const DimensionReport& rep) {
    json j{{"system", system},
           {"virtual", rep.virt},
           {"expected", rep.expected},
           {"conjectured", rep.conjectured},
           {"special", rep.special}};
    if (rep.oracle) j["oracle"] = *rep.oracle;
    return j;
}

json json_scan(Int m, Int d_max, Int r_max,
               const std::vector<SpecialSystemRecord>& records) {
    json rows = json::array();
    for (const auto& rec : records) {
        json row = json_system(rec.system);
        row["virtual"] = rec.virt;
        row["expected"] = std::max(rec.virt, Int{-1});
        row["conjectured"] = rec.conjectured;
        row["family"] = rec.family;
        rows.push_back(std::move(row));
    }
    return json{{"mult", m}, {"dmax", d_max}, {"rmax", r_max},
                {"count", records.size()}, {"rows", std::move(rows)}};
}

json json_curves(Int m, const std::vector<QuasiHomSystem>& enumerated) {
    json cat = json::array();
    for (const auto& row : table1_catalog()) {
        json r{{"base", row.base.label},
               {"compound", row.compound ? json(row.compound->label) : json(nullptr)}};
        cat.push_back(std::move(r));
    }
    json rows = json::array();
    for (const auto& sys : enumerated) rows.push_back(json_system(sys));
    return json{{"catalog", std::move(cat)}, {"mult", m}, {"curves", std::move(rows)}};
}

json json_split(const DegenerationSplit& s, const Certificate& cert) {
    const char* kind = "Inconclusive";
    if (cert.kind == Certificate::Kind::Empty5Cose) kind = "Empty5Cose";
    if (cert.kind == Certificate::Kind::NonspecialClaim) kind = "NonspecialClaim";
    json witness = json::array();
    for (const auto& [name, ok] : cert.witness)
        witness.push_back(json{{"condition", name}, {"holds", ok}});
    return json{{"parent", json_system(s.parent)},
                {"k", s.k},
                {"b", s.b},
                {"LP", s.LP.str()},
                {"LF", s.LF.str()},
                {"LPhat", s.LPhat.str()},
                {"LFhat", s.LFhat.str()},
                {"dims",
                 json{{"lP", s.dims.lP},
                      {"lF", s.dims.lF},
                      {"lhatP", s.dims.lhatP},
                      {"lhatF", s.dims.lhatF},
                      {"vP", s.dims.vP},
                      {"vF", s.dims.vF},
                      {"vhatP", s.dims.vhatP},
                      {"vhatF", s.dims.vhatF},
                      {"rP", s.dims.rP},
                      {"rF", s.dims.rF}}},
                {"l0", s.dims.l0},
                {"certificate", kind},
                {"witness", std::move(witness)}};
}

json json_verify(const VerifyConfig& cfg, const VerifyOutcome& out) {
    json exceptional = json::array();
    for (const auto& ex : out.sweep.exceptional) {
        json e = json_system(ex.system);
        e["virtual"] = ex.virt;
        e["expected"] = ex.expected;
        e["conjectured"] = ex.conjectured;
        json log = json::array();
        for (const auto& entry : ex.log)
            log.push_back(json{{"k", entry.k}, {"b", entry.b}, {"l0", entry.l0}});
        e["log"] = std::move(log);
        exceptional.push_back(std::move(e));
    }
    json missing = json::array();
    for (const auto& sys : out.missing_from_ours) missing.push_back(json_system(sys));
    json extra = json::array();
    for (const auto& sys : out.extra_in_ours) extra.push_back(json_system(sys));
    json checks = json::array();
    for (const auto& chk : out.oracle_checks) {
        json c = json_system(chk.system);
        c["conjectured"] = chk.conjectured;
        c["oracle"] = chk.oracle;
        c["ok"] = chk.ok;
        checks.push_back(std::move(c));
    }
    return json{
        {"range", json{{"dmin", out.sweep.d_min}, {"dmax", out.sweep.d_max}}},
        {"rules", json{{"m0", "0 <= m0 <= d-8"}, {"r", out.sweep.r_rule}}},
        {"systems_tested", out.sweep.tested},
        {"verified", out.sweep.verified},
        {"exceptional", std::move(exceptional)},
        {"table4",
         json{{"in_range", out.table4_in_range},
              {"matched", out.matched},
              {"missing_from_ours", std::move(missing)},
              {"extra_in_ours", std::move(extra)}}},
        {"oracle",
         json{{"ran", out.oracle_ran},
              {"prime", cfg.prime},
              {"trials", cfg.trials},
              {"seed", cfg.seed},
              {"checks", std::move(checks)}}},
        {"exit", out.exit_code}};
}

std::string dump_report(const json& j) { return j.dump(2) + "\n"; }

std::string scan_csv(const std::vector<SpecialSystemRecord>& records) {
    std::ostringstream os;
    os << "d,m0,m,r,virtual,expected,conjectured,family\n";
    for (const auto& rec : records) {
        os << rec.system.d << "," << rec.system.m0 << "," << rec.system.m << ","
           << rec.system.r << "," << rec.virt << "," << std::max(rec.virt, Int{-1})
           << "," << rec.conjectured << "," << rec.family << "\n";
    }
    return os.str();
}

} // namespace fatpoints
