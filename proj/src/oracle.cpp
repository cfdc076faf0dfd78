#include "fatpoints/oracle.hpp"

#include <algorithm>
#include <limits>
#include <set>
#include <stdexcept>

namespace fatpoints {

namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

u64 mulmod(u64 a, u64 b, u64 p) { return static_cast<u64>(u128(a) * b % p); }

u64 powmod(u64 a, u64 e, u64 p) {
    u64 r = 1 % p;
    a %= p;
    while (e) {
        if (e & 1) r = mulmod(r, a, p);
        a = mulmod(a, a, p);
        e >>= 1;
    }
    return r;
}

u64 inv_mod(u64 a, u64 p) { return powmod(a, p - 2, p); }

struct SplitMix64 {
    u64 s;
    u64 next() {
        u64 z = (s += 0x9E3779B97F4A7C15ULL);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }
};

// Reduction mod 2^31-1 for x < 2^63.
inline u64 red_mersenne31(u64 x) {
    constexpr u64 m = 0x7FFFFFFFULL;
    x = (x >> 31) + (x & m);
    x = (x >> 31) + (x & m);
    if (x >= m) x -= m;
    return x;
}

} // namespace

bool is_prime(u64 n) {
    if (n < 2) return false;
    for (u64 q : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
        if (n % q == 0) return n == q;
    }
    u64 d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    for (u64 a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
        u64 x = powmod(a % n, d, n);
        if (x == 0 || x == 1 || x == n - 1) continue;
        bool witness = true;
        for (int i = 1; i < s; ++i) {
            x = mulmod(x, x, n);
            if (x == n - 1) {
                witness = false;
                break;
            }
        }
        if (witness) return false;
    }
    return true;
}

PointConfig random_points(size_t n, const std::vector<Int>& mults, u64 p, u64 seed,
                          u64 trial) {
    if (p < 3) throw std::invalid_argument("random_points: prime too small");
    PointConfig cfg;
    cfg.mode = PointConfig::Mode::Random;
    cfg.seed = seed;
    cfg.mults = mults;

    SplitMix64 rng{seed ^ (0xD2B74407B1CE6E93ULL * (trial + 1))};
    rng.next();

    std::set<std::pair<u64, u64>> seen;
    cfg.points.reserve(n);
    while (cfg.points.size() < n) {
        const u64 u = 1 + rng.next() % (p - 1);
        const u64 v = 1 + rng.next() % (p - 1);
        if (!seen.insert({u, v}).second) continue; // coincident: redraw
        cfg.points.emplace_back(u, v);
    }
    return cfg;
}

ConditionMatrix build_condition_matrix(Int degree, const PointConfig& pts, u64 p) {
    if (degree < 0) throw std::invalid_argument("build_condition_matrix: negative degree");
    const size_t d = static_cast<size_t>(degree);

    ConditionMatrix M;
    M.p = p;
    M.cols = (d + 1) * (d + 2) / 2;
    M.rows = 0;
    for (Int m : pts.mults)
        if (m > 0) M.rows += static_cast<size_t>(m) * (m + 1) / 2;
    M.a.assign(M.rows * M.cols, 0);

    // Pascal triangle mod p.
    std::vector<std::vector<u64>> binom(d + 1);
    for (size_t i = 0; i <= d; ++i) {
        binom[i].assign(i + 1, 1);
        for (size_t j = 1; j < i; ++j)
            binom[i][j] = (binom[i - 1][j - 1] + binom[i - 1][j]) % p;
    }

    size_t row = 0;
    for (size_t i = 0; i < pts.points.size(); ++i) {
        const Int m = i < pts.mults.size() ? pts.mults[i] : 0;
        if (m <= 0) continue;
        const u64 u = pts.points[i].first % p;
        const u64 v = pts.points[i].second % p;
        std::vector<u64> pu(d + 1), pv(d + 1);
        pu[0] = pv[0] = 1;
        for (size_t j = 1; j <= d; ++j) {
            pu[j] = mulmod(pu[j - 1], u, p);
            pv[j] = mulmod(pv[j - 1], v, p);
        }
        for (Int alpha = 0; alpha < m; ++alpha) {
            for (Int beta = 0; alpha + beta < m; ++beta) {
                size_t col = 0;
                for (size_t a = 0; a <= d; ++a) {
                    for (size_t b = 0; a + b <= d; ++b, ++col) {
                        if (static_cast<Int>(a) < alpha || static_cast<Int>(b) < beta)
                            continue;
                        u64 e = mulmod(binom[a][static_cast<size_t>(alpha)],
                                       binom[b][static_cast<size_t>(beta)], p);
                        e = mulmod(e, pu[a - static_cast<size_t>(alpha)], p);
                        e = mulmod(e, pv[b - static_cast<size_t>(beta)], p);
                        M.at(row, col) = e;
                    }
                }
                ++row;
            }
        }
    }
    return M;
}

size_t rank_mod_p(ConditionMatrix& M) {
    const size_t R = M.rows, C = M.cols;
    const u64 p = M.p;
    size_t rank = 0;
    const bool mersenne = p == kDefaultPrime;
    const bool narrow = p < (1ULL << 32);
    for (size_t col = 0; col < C && rank < R; ++col) {
        size_t piv = rank;
        while (piv < R && M.at(piv, col) == 0) ++piv;
        if (piv == R) continue;
        if (piv != rank)
            std::swap_ranges(M.a.begin() + static_cast<long>(piv * C),
                             M.a.begin() + static_cast<long>((piv + 1) * C),
                             M.a.begin() + static_cast<long>(rank * C));
        u64* prow = &M.a[rank * C];
        const u64 inv = inv_mod(prow[col], p);
        for (size_t j = col; j < C; ++j) prow[j] = mulmod(prow[j], inv, p);
        for (size_t i = rank + 1; i < R; ++i) {
            u64* irow = &M.a[i * C];
            const u64 f = irow[col];
            if (f == 0) continue;
            const u64 fneg = p - f;
            if (mersenne) {
                for (size_t j = col; j < C; ++j)
                    irow[j] = red_mersenne31(irow[j] + fneg * prow[j]);
            } else if (narrow) {
                for (size_t j = col; j < C; ++j)
                    irow[j] = (irow[j] + fneg * prow[j]) % p;
            } else {
                for (size_t j = col; j < C; ++j)
                    irow[j] = static_cast<u64>((u128(fneg) * prow[j] + irow[j]) % p);
            }
        }
        ++rank;
    }
    return rank;
}

Int oracle_dim(const DivisorClass& L, u64 p, int trials, u64 seed) {
    if (trials < 1) throw std::invalid_argument("oracle_dim: trials >= 1 required");
    for (Int m : L.mults)
        if (m < 0) throw std::invalid_argument("oracle_dim: negative multiplicity");
    if (!is_prime(p)) throw std::invalid_argument("oracle_dim: modulus is not prime");
    const size_t n = L.mults.size();
    if (p < 1000 && (p - 1) * (p - 1) < n)
        throw std::invalid_argument("oracle_dim: field too small for distinct points");
    if (L.degree < 0) return -1;

    const Int cols = (L.degree + 1) * (L.degree + 2) / 2;
    Int best = std::numeric_limits<Int>::max();
    for (int t = 0; t < trials; ++t) {
        PointConfig pts = random_points(n, L.mults, p, seed, static_cast<u64>(t));
        ConditionMatrix M = build_condition_matrix(L.degree, pts, p);
        const size_t rank = rank_mod_p(M);
        best = std::min(best, cols - 1 - static_cast<Int>(rank));
    }
    return best;
}

bool certify_nonspecial(const DivisorClass& L, u64 p, int trials, u64 seed) {
    return oracle_dim(L, p, trials, seed) == expected_dim(L);
}

Int monomial_count_dim(const DivisorClass& L) {
    if (L.mults.size() > 3)
        throw std::invalid_argument("monomial_count_dim: more than three points");
    if (L.degree < 0) return -1;
    Int m[3] = {0, 0, 0};
    for (size_t i = 0; i < L.mults.size(); ++i) m[i] = std::max(L.mults[i], Int{0});

    Int count = 0;
    for (Int a0 = 0; a0 <= L.degree; ++a0) {
        for (Int a1 = 0; a0 + a1 <= L.degree; ++a1) {
            const Int a2 = L.degree - a0 - a1;
            if (a1 + a2 >= m[0] && a0 + a2 >= m[1] && a0 + a1 >= m[2]) ++count;
        }
    }
    return count - 1;
}

} // namespace fatpoints
