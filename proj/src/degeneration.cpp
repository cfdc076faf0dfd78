#include "fatpoints/degeneration.hpp"

#include <algorithm>
#include <atomic>
#include <cassert>
#include <stdexcept>
#include <thread>

namespace fatpoints {

namespace {

Int virtual_qh(Int d, Int m0, Int m, Int r) {
    Int v = d * (d + 3) / 2;
    if (m0 > 0) v -= m0 * (m0 + 1) / 2;
    if (m > 0) v -= r * (m * (m + 1) / 2);
    return v;
}

std::uint64_t pack_key(Int d, Int m0, Int m, Int r) {
    return (static_cast<std::uint64_t>(d) << 44) | (static_cast<std::uint64_t>(m0) << 28) |
           (static_cast<std::uint64_t>(m) << 20) | static_cast<std::uint64_t>(r);
}

} // namespace

Int QhDimCache::conjectured(Int d, Int m0, Int m, Int r) {
    const std::uint64_t key = pack_key(d, m0, m, r);
    auto it = map_.find(key);
    if (it != map_.end()) return it->second;
    const Int value = conjectured_value_qh(d, m0, m, r);
    map_.emplace(key, value);
    return value;
}

Int l0_from(Int lP, Int lF, Int lhatP, Int lhatF, Int d, Int k) {
    const Int rP = lP - lhatP - 1;
    const Int rF = lF - lhatF - 1;
    if (rP + rF <= d - k - 1) return lhatP + lhatF + 1;
    return lP + lF - d + k;
}

namespace {

DegenerationSplit make_split(const QuasiHomSystem& L, Int k, Int b, QhDimCache& cache) {
    if (k < 1 || k > L.d) throw std::invalid_argument("split: need 1 <= k <= d");
    if (b < 0 || b > L.r) throw std::invalid_argument("split: need 0 <= b <= r");

    DegenerationSplit s;
    s.parent = L;
    s.k = k;
    s.b = b;
    const QuasiHomSystem lp{L.d - k, L.m0, L.m, L.r - b};
    const QuasiHomSystem lf{L.d, L.d - k, L.m, b};
    const QuasiHomSystem lphat{L.d - k - 1, L.m0, L.m, L.r - b};
    const QuasiHomSystem lfhat{L.d, L.d - k + 1, L.m, b};
    s.LP = lp.to_divisor();
    s.LF = lf.to_divisor();
    s.LPhat = lphat.to_divisor();
    s.LFhat = lfhat.to_divisor();

    auto& D = s.dims;
    D.vP = virtual_qh(lp.d, lp.m0, lp.m, lp.r);
    D.vF = virtual_qh(lf.d, lf.m0, lf.m, lf.r);
    D.vhatP = virtual_qh(lphat.d, lphat.m0, lphat.m, lphat.r);
    D.vhatF = virtual_qh(lfhat.d, lfhat.m0, lfhat.m, lfhat.r);
    D.lP = cache.conjectured(lp.d, lp.m0, lp.m, lp.r);
    D.lF = cache.conjectured(lf.d, lf.m0, lf.m, lf.r);
    D.lhatP = cache.conjectured(lphat.d, lphat.m0, lphat.m, lphat.r);
    D.lhatF = cache.conjectured(lfhat.d, lfhat.m0, lfhat.m, lfhat.r);
    D.rP = D.lP - D.lhatP - 1;
    D.rF = D.lF - D.lhatF - 1;
    D.l0 = l0_from(D.lP, D.lF, D.lhatP, D.lhatF, L.d, k);
    return s;
}

} // namespace

DegenerationSplit split(const QuasiHomSystem& L, Int k, Int b) {
    QhDimCache cache;
    return make_split(L, k, b, cache);
}

Int l0_of(const DegenerationSplit& s) {
    return l0_from(s.dims.lP, s.dims.lF, s.dims.lhatP, s.dims.lhatF, s.parent.d, s.k);
}

Certificate certify(const DegenerationSplit& s) {
    const auto& D = s.dims;
    const Int v = virtual_qh(s.parent.d, s.parent.m0, s.parent.m, s.parent.r);

    Certificate cert;
    if (v <= -1) {
        // Emptiness conditions of the first step.  "lhatP = vhatP" is the
        // statement that LPhat is non-special; together with vhatP <= v <= -1
        // it forces lhatP = -1, so it is evaluated as lhatP = max(vhatP, -1).
        const std::vector<std::pair<std::string, bool>> conds = {
            {"lhatF = -1", D.lhatF == -1},
            {"vhatP <= v", D.vhatP <= v},
            {"lhatP = max(vhatP,-1)", D.lhatP == std::max(D.vhatP, Int{-1})},
            {"vF = lF", D.vF == D.lF},
            {"vP = lP", D.vP == D.lP},
        };
        cert.witness = conds;
        cert.kind = Certificate::Kind::Inconclusive;
        if (std::all_of(conds.begin(), conds.end(), [](const auto& c) { return c.second; }))
            cert.kind = Certificate::Kind::Empty5Cose;
        return cert;
    }

    // Second step: LP and LF non-special and v - 1 >= lhatP + lhatF.
    const std::vector<std::pair<std::string, bool>> conds = {
        {"LP non-special", D.lP == std::max(D.vP, Int{-1})},
        {"LF non-special", D.lF == std::max(D.vF, Int{-1})},
        {"v-1 >= lhatP+lhatF", v - 1 >= D.lhatP + D.lhatF},
    };
    cert.witness = conds;
    cert.kind = Certificate::Kind::Inconclusive;
    if (std::all_of(conds.begin(), conds.end(), [](const auto& c) { return c.second; }))
        cert.kind = Certificate::Kind::NonspecialClaim;
    return cert;
}

namespace {

// One (k,b) scan.  Dimensions come from the cache; the split structs are
// not materialized in the hot path.
TestOutcome run_scan(const QuasiHomSystem& L, QhDimCache& cache, bool keep_log) {
    TestOutcome out;
    const Int v = virtual_qh(L.d, L.m0, L.m, L.r);
    const Int e = std::max(v, Int{-1});
    const Int conj = cache.conjectured(L.d, L.m0, L.m, L.r);
    out.target = conj == e ? e : conj;

    for (Int k = 1; k <= L.d - L.m0; ++k) {
        for (Int b = 0; b <= L.r; ++b) {
            const Int lP = cache.conjectured(L.d - k, L.m0, L.m, L.r - b);
            const Int lF = cache.conjectured(L.d, L.d - k, L.m, b);
            const Int lhatP = cache.conjectured(L.d - k - 1, L.m0, L.m, L.r - b);
            const Int lhatF = cache.conjectured(L.d, L.d - k + 1, L.m, b);
            const Int l0 = l0_from(lP, lF, lhatP, lhatF, L.d, k);
            if (keep_log) out.log.push_back({k, b, l0});
            if (l0 == out.target) {
                out.verified = true;
                out.k = k;
                out.b = b;
                out.log.clear();
                return out;
            }
        }
    }
    out.verified = false;
    return out;
}

} // namespace

TestOutcome test_system(const QuasiHomSystem& L, QhDimCache& cache) {
    TestOutcome out = run_scan(L, cache, false);
    if (!out.verified) out = run_scan(L, cache, true);
    return out;
}

TestOutcome test_system(const QuasiHomSystem& L) {
    QhDimCache cache;
    return test_system(L, cache);
}

Int sweep_r_max(Int d) {
    const Int params = d * (d + 3);
    return (params + 29) / 30 + 1; // ceil(d(d+3)/30) + 1
}

namespace {

struct DegreeResult {
    long long tested = 0;
    long long verified = 0;
    std::vector<ExceptionalSystem> exceptional;
};

DegreeResult sweep_degree(Int d, QhDimCache& cache) {
    DegreeResult res;
    const Int rmax = sweep_r_max(d);
    for (Int m0 = 0; m0 <= d - 8; ++m0) {
        for (Int r = 1; r <= rmax; ++r) {
            const QuasiHomSystem sys{d, m0, 5, r};
            ++res.tested;
            TestOutcome t = test_system(sys, cache);
            if (t.verified) {
                ++res.verified;
            } else {
                ExceptionalSystem ex;
                ex.system = sys;
                ex.virt = virtual_qh(d, m0, 5, r);
                ex.expected = std::max(ex.virt, Int{-1});
                ex.conjectured = cache.conjectured(d, m0, 5, r);
                ex.log = std::move(t.log);
                res.exceptional.push_back(std::move(ex));
            }
        }
    }
    return res;
}

} // namespace

SweepReport sweep(Int d_min, Int d_max, int threads) {
    if (d_min < 8 || d_min > d_max)
        throw std::invalid_argument("sweep: need 8 <= d_min <= d_max");

    const Int n = d_max - d_min + 1;
    std::vector<DegreeResult> results(static_cast<size_t>(n));

    if (threads < 1) threads = 1;
    threads = static_cast<int>(std::min<Int>(threads, n));
    if (threads == 1) {
        QhDimCache cache;
        for (Int i = 0; i < n; ++i) {
            results[static_cast<size_t>(i)] = sweep_degree(d_min + i, cache);
            cache.clear();
        }
    } else {
        std::atomic<Int> next{0};
        auto worker = [&]() {
            QhDimCache cache;
            while (true) {
                const Int i = next.fetch_add(1);
                if (i >= n) break;
                results[static_cast<size_t>(i)] = sweep_degree(d_min + i, cache);
                cache.clear();
            }
        };
        std::vector<std::thread> pool;
        for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
        for (auto& t : pool) t.join();
    }

    SweepReport rep;
    rep.d_min = d_min;
    rep.d_max = d_max;
    rep.r_rule = "1 <= r <= ceil(d*(d+3)/30)+1";
    for (auto& r : results) {
        rep.tested += r.tested;
        rep.verified += r.verified;
        for (auto& ex : r.exceptional) rep.exceptional.push_back(std::move(ex));
    }
    // Results are produced per degree in ascending order; within one degree
    // the (m0, r) loops already run in sorted order.
    return rep;
}

} // namespace fatpoints
