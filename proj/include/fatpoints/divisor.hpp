#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace fatpoints {

using Int = long long;

/// A divisor class on a blowup of the plane: a degree plus a list of
/// multiplicities (m0, m1, ..., mr).  Entries may go negative inside
/// reduction pipelines; dimension queries expect non-negative input.
struct DivisorClass {
    Int degree = 0;
    std::vector<Int> mults;

    DivisorClass() = default;
    DivisorClass(Int d, std::vector<Int> m) : degree(d), mults(std::move(m)) {}

    bool operator==(const DivisorClass&) const = default;

    /// "L(d,m0,5^3)"-style display form.
    std::string str() const;
};

/// The quasi-homogeneous view L(d, m0, m^r): one special point of
/// multiplicity m0, plus r points of multiplicity m.
struct QuasiHomSystem {
    Int d = 0;
    Int m0 = 0;
    Int m = 0;
    Int r = 0;

    bool operator==(const QuasiHomSystem&) const = default;
    auto operator<=>(const QuasiHomSystem&) const = default;

    DivisorClass to_divisor() const;
    std::string str() const;
};

/// Dimension summary for one system.
struct DimensionReport {
    Int virt = 0;        // v = d(d+3)/2 - sum mi(mi+1)/2
    Int expected = 0;    // e = max(v, -1)
    Int conjectured = 0; // l predicted by (-1)-curve reduction
    std::optional<Int> oracle;
    bool special = false; // conjectured > expected
};

/// Virtual dimension d(d+3)/2 - sum mi(mi+1)/2.  Negative multiplicities
/// impose no conditions (they stand for exceptional curves already split
/// off) and are skipped.
Int virtual_dim(const DivisorClass& L);

/// max(virtual_dim, -1).
Int expected_dim(const DivisorClass& L);

/// Intersection pairing d1*d2 - sum mi*ni.  The shorter multiplicity list
/// is padded with zeros.
Int intersect(const DivisorClass& L1, const DivisorClass& L2);

/// Pairing with the canonical class: -3d + sum mi.
Int k_pairing(const DivisorClass& L);

/// Componentwise L - t*E (lists aligned by zero-padding).
DivisorClass residual(const DivisorClass& L, const DivisorClass& E, Int t);

/// One quadratic (Cremona) transformation based at the three largest
/// multiplicities.  The input is padded to length >= 3 and sorted
/// descending (stable on the original index); with c = d - m1 - m2 - m3
/// the class becomes (d+c; m1+c, m2+c, m3+c, rest).  Returns the
/// transformed class and c.
std::pair<DivisorClass, Int> cremona_step(const DivisorClass& L);

} // namespace fatpoints
