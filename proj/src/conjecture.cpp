#include "fatpoints/conjecture.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace fatpoints {

namespace {

void require_nonnegative(const DivisorClass& L, const char* who) {
    for (Int m : L.mults)
        if (m < 0) throw std::invalid_argument(std::string(who) + ": negative multiplicity");
}

} // namespace

ReductionTrace conjectured_dim(const DivisorClass& L) {
    require_nonnegative(L, "conjectured_dim");
    ReductionTrace tr;
    DivisorClass cur = L;
    while (true) {
        std::vector<size_t> clamped;
        DivisorClass work = cur;
        for (size_t i = 0; i < work.mults.size(); ++i) {
            if (work.mults[i] < 0) {
                clamped.push_back(i);
                work.mults[i] = 0;
            }
        }
        std::stable_sort(work.mults.begin(), work.mults.end(),
                         [](Int a, Int b) { return a > b; });
        if (work.degree < 0) {
            tr.terminal = ReductionTrace::Terminal::EmptyNegativeDegree;
            tr.conjectured = -1;
            return tr;
        }
        Int top = 0;
        for (size_t i = 0; i < 3 && i < work.mults.size(); ++i) top += work.mults[i];
        const Int c = work.degree - top;
        if (c >= 0) {
            tr.terminal = ReductionTrace::Terminal::Standard;
            tr.standard = work;
            tr.conjectured = std::max(virtual_dim(work), Int{-1});
            return tr;
        }
        auto [next, step_c] = cremona_step(work);
        tr.steps.push_back({std::move(cur), step_c, std::move(clamped)});
        cur = std::move(next);
    }
}

namespace {

struct ValCount {
    Int v;
    Int n;
};

void insert_val(std::vector<ValCount>& ps, Int v, Int n) {
    if (v <= 0 || n <= 0) return;
    auto it = ps.begin();
    while (it != ps.end() && it->v > v) ++it;
    if (it != ps.end() && it->v == v)
        it->n += n;
    else
        ps.insert(it, {v, n});
}

Int reduce_multiset(Int deg, std::vector<ValCount> ps) {
    while (true) {
        if (deg < 0) return -1;
        Int t[3] = {0, 0, 0};
        int filled = 0;
        for (const auto& p : ps) {
            for (Int i = 0; i < p.n && filled < 3; ++i) t[filled++] = p.v;
            if (filled == 3) break;
        }
        const Int c = deg - t[0] - t[1] - t[2];
        if (c >= 0) {
            Int v = deg * (deg + 3) / 2;
            for (const auto& p : ps) v -= p.n * (p.v * (p.v + 1) / 2);
            return std::max(v, Int{-1});
        }
        Int used = filled;
        while (used > 0) {
            auto& f = ps.front();
            const Int take = std::min(f.n, used);
            f.n -= take;
            used -= take;
            if (f.n == 0) ps.erase(ps.begin());
        }
        deg += c;
        for (int i = 0; i < 3; ++i) insert_val(ps, t[i] + c, 1);
    }
}

} // namespace

Int conjectured_value(const DivisorClass& L) {
    require_nonnegative(L, "conjectured_value");
    std::vector<ValCount> ps;
    std::vector<Int> sorted = L.mults;
    std::sort(sorted.begin(), sorted.end(), [](Int a, Int b) { return a > b; });
    for (Int m : sorted) {
        if (m <= 0) break;
        if (!ps.empty() && ps.back().v == m)
            ++ps.back().n;
        else
            ps.push_back({m, 1});
    }
    return reduce_multiset(L.degree, std::move(ps));
}

Int conjectured_value_qh(Int d, Int m0, Int m, Int r) {
    if (m0 < 0 || m < 0 || r < 0)
        throw std::invalid_argument("conjectured_value_qh: negative input");
    std::vector<ValCount> ps;
    if (m0 > m) {
        ps.push_back({m0, 1});
        if (m > 0 && r > 0) ps.push_back({m, r});
    } else if (m0 == m && m0 > 0) {
        ps.push_back({m0, r + 1});
    } else {
        if (m > 0 && r > 0) ps.push_back({m, r});
        if (m0 > 0) insert_val(ps, m0, 1);
    }
    return reduce_multiset(d, std::move(ps));
}

bool is_special(const DivisorClass& L) {
    return conjectured_value(L) > expected_dim(L);
}

// ---------------------------------------------------------------------------
// Embedded special-system tables.

bool FamilyRow::excludes(Int d, Int r) const {
    for (const auto& ex : exclusions) {
        for (Int e = 1;; ++e) {
            const Int cr = ex.count.at(e);
            if (cr > r) break;
            if (cr == r && ex.degree.at(e) == d) return true;
            if (ex.count.a <= 0) break;
        }
    }
    return false;
}

namespace {

using Form = FamilyRow::Form;

FamilyRow fixed_row(std::string label, Int m, Int d, Int m0, Int r, Int v, Int l) {
    FamilyRow row;
    row.label = std::move(label);
    row.mult = m;
    row.nparams = 1;
    row.degree = {0, 0, d};
    row.m0 = {0, 0, m0};
    row.count = {0, 0, r};
    row.virt = {0, 0, v};
    row.eff = {0, 0, l};
    row.pmin = 1;
    row.pmax = 1;
    return row;
}

// Row parametrized by e with forms a*e + c.
FamilyRow e_row(std::string label, Int m, Form d, Form m0, Form r, Form v, Form l,
                Int emin = 1, Int emax = -1) {
    FamilyRow row;
    row.label = std::move(label);
    row.mult = m;
    row.nparams = 1;
    row.degree = d;
    row.m0 = m0;
    row.count = r;
    row.virt = v;
    row.eff = l;
    row.pmin = emin;
    row.pmax = emax;
    return row;
}

// Row with free degree d and free point count r; forms a*d + b*r + c.
FamilyRow dr_row(std::string label, Int m, Int m0_offset, Form v, Form l,
                 std::vector<FamilyRow::Exclusion> excl = {}, Int rmin = 0) {
    FamilyRow row;
    row.label = std::move(label);
    row.mult = m;
    row.nparams = 2;
    row.degree = {1, 0, 0};
    row.m0 = {1, 0, -m0_offset};
    row.count = {0, 1, 0};
    row.virt = v;
    row.eff = l;
    row.exclusions = std::move(excl);
    row.pmin = rmin;
    return row;
}

std::vector<FamilyRow> make_table2() {
    std::vector<FamilyRow> t;
    t.push_back(dr_row("L(d,d,5^r)", 5, 0, {1, -15, 0}, {1, -5, 0}));
    t.push_back(dr_row("L(d,d-1,5^r)", 5, 1, {2, -15, 0}, {2, -9, 0}));
    t.push_back(dr_row("L(d,d-2,5^r)", 5, 2, {3, -15, -1}, {3, -12, -1},
                       {{{8, 0}, {2, 0}}}));
    t.push_back(e_row("L(8e,8e-2,5^{2e})", 5, {8, 0, 0}, {8, 0, -2}, {2, 0, 0},
                      {-6, 0, -1}, {0, 0, 0}));
    t.push_back(dr_row("L(d,d-3,5^r)", 5, 3, {4, -15, -3}, {4, -14, -3},
                       {{{7, 0}, {2, 0}}, {{7, 1}, {2, 0}}}));
    t.push_back(e_row("L(7e,7e-3,5^{2e})", 5, {7, 0, 0}, {7, 0, -3}, {2, 0, 0},
                      {-2, 0, -3}, {0, 0, 0}));
    t.push_back(e_row("L(7e+1,7e-2,5^{2e})", 5, {7, 0, 1}, {7, 0, -2}, {2, 0, 0},
                      {-2, 0, 1}, {0, 0, 2}));
    t.push_back(fixed_row("L(8,0,5^2)", 5, 8, 0, 2, 14, 15));
    t.push_back(fixed_row("L(10,2,5^4)", 5, 10, 2, 4, 2, 3));
    t.push_back(e_row("L(3e+5,3e-2,5^{2e})", 5, {3, 0, 5}, {3, 0, -2}, {2, 0, 0},
                      {-6, 0, 19}, {-6, 0, 20}, 1, 3));
    t.push_back(e_row("L(3e+4,3e-3,5^{2e})", 5, {3, 0, 4}, {3, 0, -3}, {2, 0, 0},
                      {-6, 0, 11}, {-6, 0, 14}, 1, 2));
    t.push_back(e_row("L(4e+4,4e-2,5^{2e})", 5, {4, 0, 4}, {4, 0, -2}, {2, 0, 0},
                      {-2, 0, 13}, {-2, 0, 14}, 1, 7));
    t.push_back(e_row("L(4e+3,4e-3,5^{2e})", 5, {4, 0, 3}, {4, 0, -3}, {2, 0, 0},
                      {-2, 0, 6}, {-2, 0, 9}, 1, 4));
    t.push_back(e_row("L(4e+2,4e-4,5^{2e})", 5, {4, 0, 2}, {4, 0, -4}, {2, 0, 0},
                      {-2, 0, -1}, {-2, 0, 5}, 1, 2));
    t.push_back(e_row("L(5e+3,5e-2,5^{2e})", 5, {5, 0, 3}, {5, 0, -2}, {2, 0, 0},
                      {0, 0, 8}, {0, 0, 9}));
    t.push_back(e_row("L(5e+2,5e-3,5^{2e})", 5, {5, 0, 2}, {5, 0, -3}, {2, 0, 0},
                      {0, 0, 2}, {0, 0, 5}));
    t.push_back(e_row("L(5e+1,5e-4,5^{2e})", 5, {5, 0, 1}, {5, 0, -4}, {2, 0, 0},
                      {0, 0, -4}, {0, 0, 2}));
    t.push_back(e_row("L(5e,5e-5,5^{2e})", 5, {5, 0, 0}, {5, 0, -5}, {2, 0, 0},
                      {0, 0, -10}, {0, 0, 0}));
    t.push_back(e_row("L(6e+2,6e-2,5^{2e})", 5, {6, 0, 2}, {6, 0, -2}, {2, 0, 0},
                      {0, 0, 4}, {0, 0, 5}));
    t.push_back(e_row("L(6e+1,6e-3,5^{2e})", 5, {6, 0, 1}, {6, 0, -3}, {2, 0, 0},
                      {0, 0, -1}, {0, 0, 2}));
    t.push_back(e_row("L(6e,6e-4,5^{2e})", 5, {6, 0, 0}, {6, 0, -4}, {2, 0, 0},
                      {0, 0, -6}, {0, 0, 0}));
    t.push_back(fixed_row("L(8,0,5^3)", 5, 8, 0, 3, -1, 2));
    t.push_back(fixed_row("L(8,1,5^3)", 5, 8, 1, 3, -2, 1));
    t.push_back(fixed_row("L(11,0,5^5)", 5, 11, 0, 5, 2, 5));
    t.push_back(fixed_row("L(11,1,5^5)", 5, 11, 1, 5, 1, 4));
    t.push_back(fixed_row("L(11,2,5^5)", 5, 11, 2, 5, -1, 2));
    return t;
}

std::vector<FamilyRow> make_table3_m2() {
    std::vector<FamilyRow> t;
    t.push_back(fixed_row("L(4,0,2^5)", 2, 4, 0, 5, -1, 0));
    t.push_back(e_row("L(2e,2e-2,2^{2e})", 2, {2, 0, 0}, {2, 0, -2}, {2, 0, 0},
                      {0, 0, -1}, {0, 0, 0}));
    t.push_back(dr_row("L(d,d,2^e)", 2, 0, {1, -3, 0}, {1, -2, 0}, {}, 1));
    return t;
}

std::vector<FamilyRow> make_table3_m3() {
    std::vector<FamilyRow> t;
    t.push_back(fixed_row("L(4,0,3^2)", 3, 4, 0, 2, 2, 3));
    t.push_back(fixed_row("L(6,0,3^5)", 3, 6, 0, 5, -3, 0));
    t.push_back(fixed_row("L(6,2,3^4)", 3, 6, 2, 4, 0, 1));
    t.push_back(e_row("L(3e,3e-3,3^{2e})", 3, {3, 0, 0}, {3, 0, -3}, {2, 0, 0},
                      {0, 0, -3}, {0, 0, 0}));
    t.push_back(e_row("L(3e+1,3e-2,3^{2e})", 3, {3, 0, 1}, {3, 0, -2}, {2, 0, 0},
                      {0, 0, 1}, {0, 0, 2}));
    t.push_back(e_row("L(4e,4e-2,3^{2e})", 3, {4, 0, 0}, {4, 0, -2}, {2, 0, 0},
                      {0, 0, -1}, {0, 0, 0}));
    t.push_back(dr_row("L(d,d-1,3^e)", 3, 1, {2, -6, 0}, {2, -5, 0}, {}, 1));
    t.push_back(dr_row("L(d,d,3^e)", 3, 0, {1, -6, 0}, {1, -3, 0}, {}, 1));
    return t;
}

} // namespace

const std::vector<FamilyRow>& table_rows(Int m) {
    static const std::vector<FamilyRow> t2 = make_table3_m2();
    static const std::vector<FamilyRow> t3 = make_table3_m3();
    static const std::vector<FamilyRow> t5 = make_table2();
    switch (m) {
    case 2: return t2;
    case 3: return t3;
    case 5: return t5;
    default: throw std::invalid_argument("table_rows: no table for this multiplicity");
    }
}

std::vector<FamilyInstance> table_families(Int m, Int d_max, Int r_max) {
    std::vector<FamilyInstance> out;
    auto emit = [&](const FamilyRow& row, Int d, Int m0, Int r, Int v, Int l) {
        if (m0 < 0 || l < 0 || d < 0 || d > d_max || r < 0 || r > r_max) return;
        FamilyInstance fi;
        fi.system = {d, m0, row.mult, r};
        fi.virt = v;
        fi.eff = l;
        fi.family = row.label;
        fi.special = l > std::max(v, Int{-1});
        out.push_back(std::move(fi));
    };
    for (const auto& row : table_rows(m)) {
        if (row.nparams == 1) {
            for (Int e = row.pmin;; ++e) {
                if (row.pmax >= 0 && e > row.pmax) break;
                const Int d = row.degree.at(e, 0);
                const Int r = row.count.at(e, 0);
                if (d > d_max || r > r_max) break;
                emit(row, d, row.m0.at(e, 0), r, row.virt.at(e, 0), row.eff.at(e, 0));
            }
        } else {
            for (Int d = 0; d <= d_max; ++d) {
                for (Int r = row.pmin; r <= r_max; ++r) {
                    if (row.excludes(d, r)) continue;
                    emit(row, d, row.m0.at(d, r), r, row.virt.at(d, r), row.eff.at(d, r));
                }
            }
        }
    }
    std::sort(out.begin(), out.end(), [](const FamilyInstance& a, const FamilyInstance& b) {
        return std::tie(a.system, a.family) < std::tie(b.system, b.family);
    });
    out.erase(std::unique(out.begin(), out.end(),
                          [](const FamilyInstance& a, const FamilyInstance& b) {
                              return a.system == b.system;
                          }),
              out.end());
    return out;
}

std::vector<std::string> validate_families(Int m, Int d_max, Int r_max) {
    std::vector<std::string> bad;
    for (const auto& fi : table_families(m, d_max, r_max)) {
        const Int v = virtual_dim(fi.system.to_divisor());
        if (v != fi.virt)
            bad.push_back(fi.system.str() + " [" + fi.family + "]: formula v=" +
                          std::to_string(fi.virt) + " vs computed " + std::to_string(v));
    }
    return bad;
}

std::vector<SpecialSystemRecord> scan_special(Int m, Int d_max, Int r_max) {
    if (m < 2 || m > 5) throw std::invalid_argument("scan_special: m must be in {2,3,4,5}");
    std::map<QuasiHomSystem, std::string> labels;
    if (m != 4)
        for (const auto& fi : table_families(m, d_max, r_max))
            if (labels.find(fi.system) == labels.end()) labels.emplace(fi.system, fi.family);

    std::vector<SpecialSystemRecord> out;
    for (Int d = 0; d <= d_max; ++d) {
        for (Int m0 = 0; m0 <= d; ++m0) {
            for (Int r = 0; r <= r_max; ++r) {
                const QuasiHomSystem sys{d, m0, m, r};
                const Int v = d * (d + 3) / 2 - m0 * (m0 + 1) / 2 - r * (m * (m + 1) / 2);
                const Int conj = conjectured_value_qh(d, m0, m, r);
                if (conj <= std::max(v, Int{-1})) continue;
                SpecialSystemRecord rec;
                rec.system = sys;
                rec.virt = v;
                rec.conjectured = conj;
                auto it = labels.find(sys);
                rec.family = it == labels.end() ? "unmatched" : it->second;
                out.push_back(std::move(rec));
            }
        }
    }
    return out; // already in (d, m0, r) order
}

} // namespace fatpoints
