#include "fatpoints/divisor.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace fatpoints {

std::string DivisorClass::str() const {
    // Compress runs of equal multiplicities: L(8,0,5^3).
    std::ostringstream os;
    os << "L(" << degree;
    size_t i = 0;
    while (i < mults.size()) {
        size_t j = i;
        while (j < mults.size() && mults[j] == mults[i]) ++j;
        os << "," << mults[i];
        if (j - i > 1) os << "^" << (j - i);
        i = j;
    }
    os << ")";
    return os.str();
}

DivisorClass QuasiHomSystem::to_divisor() const {
    std::vector<Int> ms;
    ms.reserve(static_cast<size_t>(r) + 1);
    ms.push_back(m0);
    for (Int i = 0; i < r; ++i) ms.push_back(m);
    return {d, std::move(ms)};
}

std::string QuasiHomSystem::str() const {
    std::ostringstream os;
    os << "L(" << d << "," << m0 << "," << m << "^" << r << ")";
    return os.str();
}

Int virtual_dim(const DivisorClass& L) {
    Int v = L.degree * (L.degree + 3) / 2;
    for (Int m : L.mults)
        if (m > 0) v -= m * (m + 1) / 2;
    return v;
}

Int expected_dim(const DivisorClass& L) {
    return std::max(virtual_dim(L), Int{-1});
}

Int intersect(const DivisorClass& L1, const DivisorClass& L2) {
    Int s = L1.degree * L2.degree;
    const size_t n = std::min(L1.mults.size(), L2.mults.size());
    for (size_t i = 0; i < n; ++i) s -= L1.mults[i] * L2.mults[i];
    return s;
}

Int k_pairing(const DivisorClass& L) {
    return -3 * L.degree + std::accumulate(L.mults.begin(), L.mults.end(), Int{0});
}

DivisorClass residual(const DivisorClass& L, const DivisorClass& E, Int t) {
    DivisorClass M;
    M.degree = L.degree - t * E.degree;
    const size_t n = std::max(L.mults.size(), E.mults.size());
    M.mults.resize(n, 0);
    for (size_t i = 0; i < n; ++i) {
        Int a = i < L.mults.size() ? L.mults[i] : 0;
        Int b = i < E.mults.size() ? E.mults[i] : 0;
        M.mults[i] = a - t * b;
    }
    return M;
}

std::pair<DivisorClass, Int> cremona_step(const DivisorClass& L) {
    DivisorClass out = L;
    if (out.mults.size() < 3) out.mults.resize(3, 0);
    // Stable descending sort so equal multiplicities keep original order.
    std::stable_sort(out.mults.begin(), out.mults.end(),
                     [](Int a, Int b) { return a > b; });
    const Int c = out.degree - (out.mults[0] + out.mults[1] + out.mults[2]);
    out.degree += c;
    out.mults[0] += c;
    out.mults[1] += c;
    out.mults[2] += c;
    return {std::move(out), c};
}

} // namespace fatpoints
