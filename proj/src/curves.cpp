#include "fatpoints/curves.hpp"

#include <algorithm>
#include <stdexcept>

namespace fatpoints {

bool is_minus_one(const DivisorClass& E) {
    return intersect(E, E) == -1 && k_pairing(E) == -1;
}

std::vector<QuasiHomSystem> enumerate_qh_curves(Int m) {
    if (m <= 1)
        throw std::invalid_argument(
            "enumerate_qh_curves: m <= 1 gives infinite families, use table1_catalog");

    // x^2 - y^2 = N with x = 2d - 3m, y = 2m0 - m; x-y and x+y run over
    // the (signed) factorizations of N.
    const Int N = 4 * (2 * m * m - m - 1);
    std::vector<Int> divisors;
    for (Int i = 1; i * i <= N; ++i) {
        if (N % i != 0) continue;
        divisors.push_back(i);
        divisors.push_back(-i);
        if (i != N / i) {
            divisors.push_back(N / i);
            divisors.push_back(-N / i);
        }
    }

    std::vector<QuasiHomSystem> out;
    for (Int s : divisors) { // s = x - y, t = x + y
        const Int t = N / s;
        if (((s % 2) + 2) % 2 != ((t % 2) + 2) % 2) continue; // x,y integral
        const Int x = (s + t) / 2;
        const Int y = (t - s) / 2;
        if ((x + 3 * m) % 2 != 0 || (y + m) % 2 != 0) continue; // d,m0 integral
        const Int d = (x + 3 * m) / 2;
        const Int m0 = (y + m) / 2;
        if (d < 1 || m0 < 0) continue;
        const Int num = 3 * d - m0 - 1; // r*m from the canonical pairing
        if (num < 0 || num % m != 0) continue;
        const QuasiHomSystem sys{d, m0, m, num / m};
        if (!is_minus_one(sys.to_divisor())) continue;
        out.push_back(sys);
    }

    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

namespace {

CurveFamily fixed_family(Int d, Int m0, Int m, Int r, std::string label) {
    CurveFamily f;
    f.kind = CurveFamily::Kind::Fixed;
    f.degree = {0, d};
    f.m0 = {0, m0};
    f.mult = {0, m};
    f.count = {0, r};
    f.label = std::move(label);
    return f;
}

} // namespace

std::vector<Table1Row> table1_catalog() {
    std::vector<Table1Row> rows;

    rows.push_back({fixed_family(2, 0, 1, 5, "L(2,0,1^5)"), std::nullopt});

    CurveFamily pencil; // L(e,e-1,1^{2e})
    pencil.kind = CurveFamily::Kind::ParametrizedByE;
    pencil.degree = {1, 0};
    pencil.m0 = {1, -1};
    pencil.mult = {0, 1};
    pencil.count = {2, 0};
    pencil.label = "L(e,e-1,1^{2e})";
    rows.push_back({pencil, std::nullopt});

    rows.push_back({fixed_family(6, 3, 2, 7, "L(6,3,2^7)"), std::nullopt});

    CurveFamily cone_compound; // L(e,e,1^e), compound of the line L(1,1,1)
    cone_compound.kind = CurveFamily::Kind::ParametrizedByE;
    cone_compound.degree = {1, 0};
    cone_compound.m0 = {1, 0};
    cone_compound.mult = {0, 1};
    cone_compound.count = {1, 0};
    cone_compound.label = "L(e,e,1^e)";
    rows.push_back({fixed_family(1, 1, 1, 1, "L(1,1,1)"), cone_compound});

    rows.push_back({fixed_family(1, 0, 1, 2, "L(1,0,1^2)"),
                    fixed_family(3, 0, 2, 3, "L(3,0,2^3)")});

    return rows;
}

CompoundCurve compound_of(const MinusOneCurve& base, Int copies) {
    if (copies < 2)
        throw std::invalid_argument("compound_of: need copies >= 2");
    std::vector<Int> tail(base.cls.mults.begin() + (base.cls.mults.empty() ? 0 : 1),
                          base.cls.mults.end());
    if (static_cast<Int>(tail.size()) > copies)
        throw std::invalid_argument("compound_of: base has more points than copies");
    tail.resize(static_cast<size_t>(copies), 0);

    // The tail must look like one distinguished entry m+-1 among copies-1
    // entries equal to m.
    std::vector<Int> sorted = tail;
    std::sort(sorted.begin(), sorted.end());
    const Int lo = sorted.front(), hi = sorted.back();
    const bool one_low = hi - lo == 1 && std::count(sorted.begin(), sorted.end(), lo) == 1;
    const bool one_high = hi - lo == 1 && std::count(sorted.begin(), sorted.end(), hi) == 1;
    if (!(one_low || one_high))
        throw std::invalid_argument("compound_of: base is not almost-homogeneous");

    Int per_point = 0;
    for (Int v : tail) per_point += v;

    CompoundCurve cc;
    cc.base = base;
    cc.copies = copies;
    cc.total.degree = copies * base.cls.degree;
    cc.total.mults.assign(static_cast<size_t>(copies) + 1, per_point);
    cc.total.mults[0] = copies * (base.cls.mults.empty() ? 0 : base.cls.mults[0]);
    return cc;
}

std::vector<std::pair<size_t, size_t>>
orthogonality_violations(const std::vector<MinusOneCurve>& curves,
                         const DivisorClass& /*L*/) {
    std::vector<std::pair<size_t, size_t>> bad;
    for (size_t i = 0; i < curves.size(); ++i)
        for (size_t j = i + 1; j < curves.size(); ++j)
            if (intersect(curves[i].cls, curves[j].cls) != 0) bad.emplace_back(i, j);
    return bad;
}

} // namespace fatpoints
