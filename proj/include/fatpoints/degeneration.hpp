#pragma once

#include "fatpoints/conjecture.hpp"
#include "fatpoints/divisor.hpp"

#include <cstdint>
#include <string>
#include <unordered_map>
#include <vector>

namespace fatpoints {

/// Dimensions attached to a (k,b)-degeneration.  lP/lF/lhatP/lhatF are
/// conjectured dimensions, vP/vF/vhatP/vhatF virtual ones, rP/rF the
/// restricted-system dimensions l - lhat - 1, and l0 the dimension of the
/// limit system.
struct SplitDims {
    Int lP = 0, lF = 0, lhatP = 0, lhatF = 0;
    Int vP = 0, vF = 0, vhatP = 0, vhatF = 0;
    Int rP = 0, rF = 0;
    Int l0 = 0;
};

/// The four subsystems of a (k,b)-degeneration of L(d,m0,m^r):
///   LP    = L(d-k,   m0,    m^{r-b})     on the plane part
///   LF    = L(d,     d-k,   m^b)         on the Hirzebruch part
///   LPhat = L(d-k-1, m0,    m^{r-b})     (containing the double curve)
///   LFhat = L(d,     d-k+1, m^b)
struct DegenerationSplit {
    QuasiHomSystem parent;
    Int k = 0, b = 0;
    DivisorClass LP, LF, LPhat, LFhat;
    SplitDims dims;
};

/// Outcome of the emptiness / non-speciality certificates of the main
/// theorem's two steps, with the individual conditions as a witness.
struct Certificate {
    enum class Kind { Empty5Cose, NonspecialClaim, Inconclusive };
    Kind kind = Kind::Inconclusive;
    std::vector<std::pair<std::string, bool>> witness;
};

struct ScanLogEntry {
    Int k = 0, b = 0, l0 = 0;
};

/// Result of scanning all (k,b)-degenerations of one system.
struct TestOutcome {
    bool verified = false;
    Int k = 0, b = 0;                // first pair that worked
    Int target = 0;                  // the dimension l0 had to reach
    std::vector<ScanLogEntry> log;   // full log when not verified
};

struct ExceptionalSystem {
    QuasiHomSystem system;
    Int virt = 0;
    Int expected = 0;
    Int conjectured = 0;
    std::vector<ScanLogEntry> log;
};

struct SweepReport {
    Int d_min = 0, d_max = 0;
    long long tested = 0;
    long long verified = 0;
    std::string r_rule; // upper bound used for r, for reproducibility
    std::vector<ExceptionalSystem> exceptional;
};

/// Memo cache for conjectured dimensions of quasi-homogeneous systems;
/// one instance per worker, not shared.
class QhDimCache {
public:
    Int conjectured(Int d, Int m0, Int m, Int r);
    void clear() { map_.clear(); }
    size_t size() const { return map_.size(); }

private:
    std::unordered_map<std::uint64_t, Int> map_;
};

/// Builds the four subsystems and all dimensions of a (k,b)-degeneration.
/// Requires 1 <= k <= d, 0 <= b <= r (throws std::invalid_argument).
DegenerationSplit split(const QuasiHomSystem& L, Int k, Int b);

/// l0 by the two-case transversality formula:
///   rP + rF <= d-k-1  ->  l0 = lhatP + lhatF + 1
///   rP + rF >= d-k-1  ->  l0 = lP + lF - d + k
/// (both agree at the boundary).
Int l0_of(const DegenerationSplit& s);
Int l0_from(Int lP, Int lF, Int lhatP, Int lhatF, Int d, Int k);

/// Emptiness / non-speciality certificate for one split.
Certificate certify(const DegenerationSplit& s);

/// Scans (k,b) pairs, k = 1..d-m0 then b = 0..r, for the first split whose
/// l0 equals the expected dimension (conjectured-non-special parent) or
/// the conjectured dimension (special parent).
TestOutcome test_system(const QuasiHomSystem& L);
TestOutcome test_system(const QuasiHomSystem& L, QhDimCache& cache);

/// r upper bound used by the sweep for degree d: beyond it every system in
/// range is empty and handled by monotonicity in r.
Int sweep_r_max(Int d);

/// Degeneration sweep over all L(d,m0,5^r) with d_min <= d <= d_max,
/// 0 <= m0 <= d-8, 1 <= r <= sweep_r_max(d).  The exceptional list is
/// sorted by (d, m0, r) and independent of the thread count.
SweepReport sweep(Int d_min, Int d_max, int threads = 1);

} // namespace fatpoints
