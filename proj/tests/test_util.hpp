#pragma once

#include "fatpoints/divisor.hpp"

#include <cstdint>

namespace testutil {

// Small deterministic generator for the property tests.
struct Rng {
    std::uint64_t s;
    explicit Rng(std::uint64_t seed) : s(seed) {}
    std::uint64_t next() {
        std::uint64_t z = (s += 0x9E3779B97F4A7C15ULL);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }
    long long below(long long n) { return static_cast<long long>(next() % static_cast<std::uint64_t>(n)); }
    long long in(long long lo, long long hi) { return lo + below(hi - lo + 1); }
};

inline fatpoints::DivisorClass random_class(Rng& rng, long long dmax, long long mmax,
                                            long long rmax, bool allow_negative = false) {
    fatpoints::DivisorClass L;
    L.degree = rng.in(allow_negative ? -dmax : 0, dmax);
    const long long n = rng.in(0, rmax);
    for (long long i = 0; i < n; ++i)
        L.mults.push_back(rng.in(allow_negative ? -mmax : 0, mmax));
    return L;
}

// Unclamped virtual dimension: the Riemann-Roch value (L^2 - L.K)/2 written
// out directly.  Kept independent of the library formula on purpose.
inline long long raw_virtual(const fatpoints::DivisorClass& L) {
    long long v = L.degree * (L.degree + 3) / 2;
    for (long long m : L.mults) v -= m * (m + 1) / 2;
    return v;
}

} // namespace testutil
