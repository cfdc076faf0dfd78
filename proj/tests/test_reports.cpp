#include "fatpoints/report.hpp"

#include "fatpoints/tables.hpp"

#include <doctest.h>

#include <fstream>

using namespace fatpoints;
using nlohmann::json;

namespace {

json load_fixture(const std::string& name) {
    std::ifstream in(std::string(FATPOINTS_DATA_DIR) + "/" + name);
    REQUIRE(in.good());
    json j;
    in >> j;
    return j;
}

json family_json(const CurveFamily& f) {
    return json{{"label", f.label},
                {"kind", f.kind == CurveFamily::Kind::Fixed ? "fixed" : "e"},
                {"degree", json::array({f.degree.a, f.degree.b})},
                {"m0", json::array({f.m0.a, f.m0.b})},
                {"mult", json::array({f.mult.a, f.mult.b})},
                {"count", json::array({f.count.a, f.count.b})}};
}

json form_json(const FamilyRow::Form& f) { return json::array({f.a, f.b, f.c}); }

json row_json(const FamilyRow& row, bool with_mult) {
    json j{{"label", row.label},
           {"params", row.nparams},
           {"degree", form_json(row.degree)},
           {"m0", form_json(row.m0)},
           {"count", form_json(row.count)},
           {"virtual", form_json(row.virt)},
           {"effective", form_json(row.eff)},
           {"pmin", row.pmin},
           {"pmax", row.pmax}};
    if (with_mult) j["mult"] = row.mult;
    json ex = json::array();
    for (const auto& e : row.exclusions)
        ex.push_back(json{{"degree", json::array({e.degree.a, e.degree.b})},
                          {"count", json::array({e.count.a, e.count.b})}});
    j["exclusions"] = std::move(ex);
    return j;
}

} // namespace

TEST_CASE("table1 fixture matches the embedded catalog") {
    json fixture = load_fixture("table1.json");
    auto rows = table1_catalog();
    REQUIRE(fixture["rows"].size() == rows.size());
    for (size_t i = 0; i < rows.size(); ++i) {
        CHECK(fixture["rows"][i]["base"] == family_json(rows[i].base));
        if (rows[i].compound)
            CHECK(fixture["rows"][i]["compound"] == family_json(*rows[i].compound));
        else
            CHECK(fixture["rows"][i]["compound"].is_null());
    }
}

TEST_CASE("table2 fixture matches the embedded rows") {
    json fixture = load_fixture("table2.json");
    const auto& rows = table_rows(5);
    REQUIRE(fixture["rows"].size() == rows.size());
    for (size_t i = 0; i < rows.size(); ++i) CHECK(fixture["rows"][i] == row_json(rows[i], false));
}

TEST_CASE("table3 fixture matches the embedded rows") {
    json fixture = load_fixture("table3.json");
    std::vector<FamilyRow> rows = table_rows(2);
    for (const auto& r : table_rows(3)) rows.push_back(r);
    REQUIRE(fixture["rows"].size() == rows.size());
    for (size_t i = 0; i < rows.size(); ++i) CHECK(fixture["rows"][i] == row_json(rows[i], true));
}

TEST_CASE("table4 fixture matches the embedded exceptional list") {
    json fixture = load_fixture("table4.json");
    const auto& rows = table4_exceptional();
    REQUIRE(fixture["rows"].size() == rows.size());
    for (size_t i = 0; i < rows.size(); ++i) CHECK(fixture["rows"][i] == json_system(rows[i]));
}

TEST_CASE("report serialization is byte-stable") {
    auto recs = scan_special(5, 11, 5);
    const std::string a = dump_report(json_scan(5, 11, 5, recs));
    const std::string b = dump_report(json_scan(5, 11, 5, scan_special(5, 11, 5)));
    CHECK(a == b);
    CHECK(a.find("\"conjectured\"") != std::string::npos);

    const std::string csv = scan_csv(recs);
    CHECK(csv.rfind("d,m0,m,r,virtual,expected,conjectured,family\n", 0) == 0);
}

TEST_CASE("verify_run on a fixture-free range exits 0") {
    VerifyConfig cfg;
    cfg.d_min = 34;
    cfg.d_max = 36;
    cfg.oracle_exceptional = false;
    auto out = verify_run(cfg);
    CHECK(out.exit_code == 0);
    CHECK(out.sweep.exceptional.empty());
    CHECK(out.table4_in_range == 0);
}

TEST_CASE("verify_run confirms the degree-12 exceptional block") {
    VerifyConfig cfg;
    cfg.d_min = 8;
    cfg.d_max = 12;
    cfg.threads = 2;
    cfg.seed = 5;
    auto out = verify_run(cfg);
    CHECK(out.exit_code == 0);
    CHECK(out.oracle_ran);
    CHECK(out.matched == 9); // the nine degree-12 fixture rows
    CHECK(out.missing_from_ours.empty());
    CHECK(out.extra_in_ours.empty());
    for (const auto& chk : out.oracle_checks) CHECK(chk.ok);

    // Byte equality between thread counts.
    VerifyConfig serial = cfg;
    serial.threads = 1;
    CHECK(dump_report(json_verify(cfg, out)) ==
          dump_report(json_verify(serial, verify_run(serial))));
}
