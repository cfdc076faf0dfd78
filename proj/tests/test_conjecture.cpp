#include "fatpoints/conjecture.hpp"

#include "test_util.hpp"

#include <doctest.h>

#include <algorithm>
#include <map>
#include <set>

using namespace fatpoints;

TEST_CASE("conjectured_dim on the table systems") {
    {
        auto tr = conjectured_dim({8, {0, 5, 5}});
        CHECK(tr.conjectured == 15);
        REQUIRE(tr.steps.size() == 1);
        CHECK(tr.steps[0].c == -2);
        CHECK(tr.terminal == ReductionTrace::Terminal::Standard);
        CHECK(tr.standard.degree == 6);
        CHECK(virtual_dim(tr.standard) == 15);
    }
    CHECK(conjectured_dim({10, {2, 5, 5, 5, 5}}).conjectured == 3);
    CHECK(conjectured_dim({5, {0, 5, 5}}).conjectured == 0);
    {
        auto tr = conjectured_dim({3, {4}});
        CHECK(tr.terminal == ReductionTrace::Terminal::EmptyNegativeDegree);
        CHECK(tr.conjectured == -1);
    }
}

TEST_CASE("trace invariants") {
    testutil::Rng rng(23);
    for (int i = 0; i < 3000; ++i) {
        auto L = testutil::random_class(rng, 25, 9, 8, false);
        auto tr = conjectured_dim(L);
        // Degrees strictly decrease along the steps.
        for (size_t s = 1; s < tr.steps.size(); ++s)
            CHECK(tr.steps[s].input.degree < tr.steps[s - 1].input.degree);
        if (tr.terminal == ReductionTrace::Terminal::Standard) {
            const auto& S = tr.standard;
            CHECK(std::is_sorted(S.mults.begin(), S.mults.end(), std::greater<Int>()));
            CHECK(std::all_of(S.mults.begin(), S.mults.end(), [](Int m) { return m >= 0; }));
            Int top = 0;
            for (size_t j = 0; j < 3 && j < S.mults.size(); ++j) top += S.mults[j];
            CHECK(S.degree >= top);
            CHECK(tr.conjectured == std::max(virtual_dim(S), Int{-1}));
        } else {
            CHECK(tr.conjectured == -1);
        }
    }
}

TEST_CASE("conjectured_value agrees with the trace reduction") {
    testutil::Rng rng(29);
    for (int i = 0; i < 5000; ++i) {
        auto L = testutil::random_class(rng, 30, 11, 9, false);
        CHECK(conjectured_value(L) == conjectured_dim(L).conjectured);
    }
    // Quasi-homogeneous fast path.
    for (int i = 0; i < 5000; ++i) {
        const Int d = rng.in(0, 40), m0 = rng.in(0, 40), m = rng.in(0, 6), r = rng.in(0, 20);
        QuasiHomSystem sys{d, m0, m, r};
        CHECK(conjectured_value_qh(d, m0, m, r) ==
              conjectured_dim(sys.to_divisor()).conjectured);
    }
}

TEST_CASE("conjectured_dim rejects negative input multiplicities") {
    CHECK_THROWS(conjectured_dim({4, {2, -1}}));
}

TEST_CASE("is_special") {
    CHECK(is_special({4, {0, 2, 2, 2, 2, 2}}));
    CHECK(is_special({6, {2, 3, 3, 3, 3}}));
    CHECK_FALSE(is_special({3, {1, 1, 1}}));
}

TEST_CASE("conjectured dimension dominates the expected dimension") {
    testutil::Rng rng(31);
    for (int i = 0; i < 5000; ++i) {
        auto L = testutil::random_class(rng, 30, 10, 9, false);
        CHECK(conjectured_value(L) >= expected_dim(L));
    }
}

TEST_CASE("permutation invariance and zero-point monotonicity") {
    testutil::Rng rng(37);
    for (int i = 0; i < 2000; ++i) {
        auto L = testutil::random_class(rng, 25, 9, 8, false);
        const Int base = conjectured_value(L);
        auto shuffled = L;
        for (size_t j = shuffled.mults.size(); j > 1; --j)
            std::swap(shuffled.mults[j - 1],
                      shuffled.mults[static_cast<size_t>(rng.below(static_cast<Int>(j)))]);
        CHECK(conjectured_value(shuffled) == base);
        auto padded = L;
        padded.mults.push_back(0);
        CHECK(conjectured_value(padded) == base);
    }
}

TEST_CASE("subtracting a catalog (-1)-curve preserves the conjectured dimension") {
    auto catalog = table1_catalog();
    std::vector<DivisorClass> curves;
    for (const auto& row : catalog) {
        if (row.base.kind == CurveFamily::Kind::Fixed) {
            curves.push_back(row.base.at(1).to_divisor());
        } else {
            for (Int e = 1; e <= 4; ++e) curves.push_back(row.base.at(e).to_divisor());
        }
    }
    testutil::Rng rng(41);
    int used = 0;
    for (int i = 0; i < 20000 && used < 2500; ++i) {
        auto L = testutil::random_class(rng, 18, 7, 9, false);
        for (const auto& E : curves) {
            const Int t = -intersect(L, E);
            if (t < 1) continue;
            DivisorClass M = residual(L, E, t);
            for (auto& m : M.mults) m = std::max(m, Int{0});
            if (M.degree < 0) continue;
            CHECK(conjectured_value(L) == conjectured_value(M));
            ++used;
        }
    }
    CHECK(used >= 2500);
}

TEST_CASE("scan_special examples") {
    {
        // Degree-11, five 5-points: exactly m0 = 0, 1, 2.
        auto recs = scan_special(5, 11, 5);
        std::vector<QuasiHomSystem> deg11;
        for (const auto& r : recs)
            if (r.system.d == 11 && r.system.r == 5) deg11.push_back(r.system);
        CHECK(deg11 == std::vector<QuasiHomSystem>{{11, 0, 5, 5}, {11, 1, 5, 5}, {11, 2, 5, 5}});
    }
    {
        auto recs = scan_special(3, 6, 5);
        auto it = std::find_if(recs.begin(), recs.end(), [](const SpecialSystemRecord& r) {
            return r.system == QuasiHomSystem{6, 0, 3, 5};
        });
        REQUIRE(it != recs.end());
        CHECK(it->virt == -3);
        CHECK(it->conjectured == 0);
    }
    {
        auto recs = scan_special(5, 8, 3);
        auto find = [&](QuasiHomSystem s) {
            return std::find_if(recs.begin(), recs.end(),
                                [&](const SpecialSystemRecord& r) { return r.system == s; });
        };
        auto a = find({8, 0, 5, 3});
        REQUIRE(a != recs.end());
        CHECK(a->virt == -1);
        CHECK(a->conjectured == 2);
        auto b = find({8, 1, 5, 3});
        REQUIRE(b != recs.end());
        CHECK(b->virt == -2);
        CHECK(b->conjectured == 1);
    }
}

TEST_CASE("scan results merge independently of partitioning") {
    auto whole = scan_special(5, 16, 8);
    // Rebuild from two degree ranges scanned separately.
    std::vector<SpecialSystemRecord> parts;
    for (const auto& r : scan_special(5, 9, 8)) parts.push_back(r);
    for (const auto& r : scan_special(5, 16, 8))
        if (r.system.d > 9) parts.push_back(r);
    std::sort(parts.begin(), parts.end(),
              [](const SpecialSystemRecord& a, const SpecialSystemRecord& b) {
                  return a.system < b.system;
              });
    CHECK(parts == whole);
}

TEST_CASE("table_families spot values") {
    auto fams = table_families(5, 40, 16);
    auto find = [&](QuasiHomSystem s) {
        return std::find_if(fams.begin(), fams.end(),
                            [&](const FamilyInstance& f) { return f.system == s; });
    };
    {
        auto it = find({8, 6, 5, 2}); // L(8e,8e-2,5^2e) at e=1
        REQUIRE(it != fams.end());
        CHECK(it->virt == -7);
        CHECK(it->eff == 0);
        CHECK(it->family == "L(8e,8e-2,5^{2e})");
    }
    {
        auto it = find({32, 26, 5, 14}); // L(4e+4,4e-2,5^2e) at e=7
        REQUIRE(it != fams.end());
        CHECK(it->virt == -1);
        CHECK(it->eff == 0);
    }
    auto fams2 = table_families(2, 20, 10);
    auto it = std::find_if(fams2.begin(), fams2.end(), [](const FamilyInstance& f) {
        return f.system == QuasiHomSystem{4, 2, 2, 4};
    });
    REQUIRE(it != fams2.end()); // L(2e,2e-2,2^2e) at e=2
    CHECK(it->virt == -1);
    CHECK(it->eff == 0);
}

TEST_CASE("embedded rows agree with the virtual-dimension formula") {
    CHECK(validate_families(5, 60, 24).empty());
    CHECK(validate_families(2, 40, 20).empty());
    CHECK(validate_families(3, 40, 20).empty());
}

TEST_CASE("scan equals the instantiated tables") {
    auto check_equal = [](Int m, Int dmax, Int rmax) {
        auto scan = scan_special(m, dmax, rmax);
        auto fams = table_families(m, dmax, rmax);
        std::set<QuasiHomSystem> scan_set, fam_set;
        for (const auto& r : scan) scan_set.insert(r.system);
        for (const auto& f : fams)
            if (f.special) fam_set.insert(f.system);
        CHECK(scan_set == fam_set);
        // Matching rows carry matching dimension pairs.
        std::map<QuasiHomSystem, std::pair<Int, Int>> fam_dims;
        for (const auto& f : fams)
            if (f.special) fam_dims[f.system] = {f.virt, f.eff};
        for (const auto& r : scan) {
            auto it = fam_dims.find(r.system);
            if (it == fam_dims.end()) continue;
            CHECK(it->second.first == r.virt);
            CHECK(it->second.second == r.conjectured);
        }
    };
    check_equal(5, 30, 12);
    check_equal(2, 20, 10);
    check_equal(3, 20, 10);
}
