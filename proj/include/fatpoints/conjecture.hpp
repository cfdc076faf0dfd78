#pragma once

#include "fatpoints/curves.hpp"
#include "fatpoints/divisor.hpp"

#include <string>
#include <vector>

namespace fatpoints {

/// One Cremona application inside a reduction.  `input` is the class the
/// iteration started from, `clamped` lists the indices (into `input`)
/// whose negative multiplicities were reset to zero before sorting, and
/// `c` is the degree shift that was applied.
struct ReductionStep {
    DivisorClass input;
    Int c = 0;
    std::vector<size_t> clamped;
};

/// Full record of a reduction to Cremona standard form.
struct ReductionTrace {
    enum class Terminal { Standard, EmptyNegativeDegree };
    std::vector<ReductionStep> steps;
    Terminal terminal = Terminal::Standard;
    DivisorClass standard; // meaningful only when terminal == Standard
    Int conjectured = -1;
};

/// A special system found by a scan, tagged with the table family it
/// instantiates ("unmatched" if none).
struct SpecialSystemRecord {
    QuasiHomSystem system;
    Int virt = 0;
    Int conjectured = 0;
    std::string family;

    bool operator==(const SpecialSystemRecord&) const = default;
};

/// One parametrized row of the special-system tables.  Fields are
/// affine-linear in one parameter (e) or two (d and r); the exclusions
/// cut out sub-families whose dimension follows a different row.
struct FamilyRow {
    std::string label;
    Int mult = 0;
    int nparams = 1; // 1: forms in e; 2: forms in (d, r)
    // Coefficient triples a*p1 + b*p2 + c.
    struct Form {
        Int a = 0, b = 0, c = 0;
        Int at(Int p1, Int p2) const { return a * p1 + b * p2 + c; }
        bool operator==(const Form&) const = default;
    };
    Form degree, m0, count, virt, eff;
    Int pmin = 1;  // lower bound for the first parameter
    Int pmax = -1; // upper bound, -1 = unbounded (cut by the scan range)
    // Excluded one-parameter sub-families, as (degree(e), count(e)) pairs.
    struct Exclusion {
        LinExpr degree, count;
        bool operator==(const Exclusion&) const = default;
    };
    std::vector<Exclusion> exclusions;

    bool excludes(Int d, Int r) const;
    bool operator==(const FamilyRow&) const = default;
};

/// One instantiated table row.
struct FamilyInstance {
    QuasiHomSystem system;
    Int virt = 0;
    Int eff = 0;
    std::string family;
    bool special = false; // eff > max(virt, -1)
};

/// Conjectured effective dimension by reduction to standard form:
/// repeatedly clamp negative multiplicities, sort, and apply Cremona
/// steps while the degree exceeds the top three multiplicities; empty
/// systems run the degree negative.  Throws std::invalid_argument on
/// negative input multiplicities.
ReductionTrace conjectured_dim(const DivisorClass& L);

/// Fast path: same value as conjectured_dim(...).conjectured without
/// building the trace (multiset reduction).
Int conjectured_value(const DivisorClass& L);
Int conjectured_value_qh(Int d, Int m0, Int m, Int r);

bool is_special(const DivisorClass& L);

/// Exhaustive scan of L(d, m0, m^r), 0 <= m0 <= d <= d_max, 0 <= r <= r_max,
/// keeping the special systems, sorted by (d, m0, r).  m in {2,3,4,5}.
std::vector<SpecialSystemRecord> scan_special(Int m, Int d_max, Int r_max);

/// The embedded table rows for multiplicity m (2, 3 or 5).
const std::vector<FamilyRow>& table_rows(Int m);

/// All table-row instances within 0 <= d <= d_max, count <= r_max,
/// sorted by (d, m0, r) then label.  Instances violating basic validity
/// (m0 < 0 or effective dimension < 0) are skipped.
std::vector<FamilyInstance> table_families(Int m, Int d_max, Int r_max);

/// Re-derives each instantiated row's virtual dimension from the formula
/// and returns a description of every mismatch (expected: none).
std::vector<std::string> validate_families(Int m, Int d_max, Int r_max);

} // namespace fatpoints
