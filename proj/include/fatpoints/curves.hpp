#pragma once

#include "fatpoints/divisor.hpp"

#include <optional>
#include <utility>

namespace fatpoints {

/// A class E with E^2 = E.K = -1.
struct MinusOneCurve {
    DivisorClass cls;
};

/// Union of the r permuted placements of an almost-homogeneous (-1)-curve.
/// For a base L(d,m0,m-1,m^{r-1}) the total is L(rd, rm0, (rm-1)^r); these
/// totals are quasi-homogeneous but not themselves (-1)-classes.
struct CompoundCurve {
    MinusOneCurve base;
    Int copies = 0; // r >= 2
    DivisorClass total;
};

/// Affine-linear expression a*e + b in the family parameter e.
struct LinExpr {
    Int a = 0;
    Int b = 0;
    Int at(Int e) const { return a * e + b; }
    bool operator==(const LinExpr&) const = default;
};

/// A quasi-homogeneous family of curve classes, either a single class or
/// parametrized by an integer e >= 1 (e.g. L(e,e-1,1^{2e})).
struct CurveFamily {
    enum class Kind { Fixed, ParametrizedByE };
    Kind kind = Kind::Fixed;
    LinExpr degree, m0, mult, count;
    std::string label;

    QuasiHomSystem at(Int e) const {
        return {degree.at(e), m0.at(e), mult.at(e), count.at(e)};
    }
};

struct Table1Row {
    CurveFamily base;
    std::optional<CurveFamily> compound;
};

/// true iff E^2 = -1 and E.K = -1.
bool is_minus_one(const DivisorClass& E);

/// All quasi-homogeneous (-1)-curves L(d,m0,m^r) of multiplicity m >= 2,
/// found by factoring x^2 - y^2 = 4(2m^2 - m - 1) with x = 2d - 3m,
/// y = 2m0 - m and recovering r from -3d + m0 + rm = -1.  Sorted by
/// (d, m0).  Throws std::invalid_argument for m <= 1 (those families are
/// infinite; see table1_catalog).
std::vector<QuasiHomSystem> enumerate_qh_curves(Int m);

/// The five catalog rows of (-1)-curves of multiplicity <= 2, with their
/// compound families where one exists.
std::vector<Table1Row> table1_catalog();

/// Concrete compound curve: `copies` permuted placements of the base over
/// `copies` points, summed.  Base rows: L(1,1,1) -> L(e,e,1^e) and
/// L(1,0,1^2) -> L(3,0,2^3).
CompoundCurve compound_of(const MinusOneCurve& base, Int copies);

/// All pairs (i,j), i < j, with intersect(Ei, Ej) != 0.  For curves that
/// genuinely lie in the base locus of one system the result is empty.
std::vector<std::pair<size_t, size_t>>
orthogonality_violations(const std::vector<MinusOneCurve>& curves,
                         const DivisorClass& L);

} // namespace fatpoints
