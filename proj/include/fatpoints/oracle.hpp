#pragma once

#include "fatpoints/divisor.hpp"

#include <cstdint>
#include <vector>

namespace fatpoints {

inline constexpr std::uint64_t kDefaultPrime = 2147483647ULL; // 2^31 - 1

/// Prime modulus for the exact rank computation.
struct PrimeField {
    std::uint64_t p = kDefaultPrime;
};

bool is_prime(std::uint64_t n);

/// Base points for one rank trial.
struct PointConfig {
    enum class Mode { Random, Coordinate };
    std::vector<std::pair<std::uint64_t, std::uint64_t>> points; // affine (u,v)
    std::vector<Int> mults;
    std::uint64_t seed = 0;
    Mode mode = Mode::Random;
};

/// Dense matrix of fat-point vanishing conditions mod p.  Row (point i,
/// derivative order (alpha,beta), alpha+beta < m_i); column (monomial
/// x^a y^b, a+b <= d); entry C(a,alpha) C(b,beta) u^{a-alpha} v^{b-beta}.
struct ConditionMatrix {
    size_t rows = 0;
    size_t cols = 0;
    std::uint64_t p = kDefaultPrime;
    std::vector<std::uint64_t> a; // row-major

    std::uint64_t& at(size_t r, size_t c) { return a[r * cols + c]; }
    std::uint64_t at(size_t r, size_t c) const { return a[r * cols + c]; }
};

/// Distinct random points in the affine chart with nonzero coordinates,
/// drawn from a stream derived from (seed, trial).
PointConfig random_points(size_t n, const std::vector<Int>& mults, std::uint64_t p,
                          std::uint64_t seed, std::uint64_t trial);

ConditionMatrix build_condition_matrix(Int degree, const PointConfig& pts, std::uint64_t p);

/// In-place Gaussian elimination mod p; returns the rank.
size_t rank_mod_p(ConditionMatrix& M);

/// Dimension of the system at random points: min over trials of
/// cols - 1 - rank.  Deterministic in (L, p, trials, seed).  The minimum
/// is reported because the rank is maximal at generic points.
Int oracle_dim(const DivisorClass& L, std::uint64_t p = kDefaultPrime, int trials = 3,
               std::uint64_t seed = 0);

/// true iff oracle_dim equals the expected dimension; a true answer is a
/// proof of non-speciality (the random-point rank never exceeds the
/// generic rank).
bool certify_nonspecial(const DivisorClass& L, std::uint64_t p = kDefaultPrime,
                        int trials = 3, std::uint64_t seed = 0);

/// Exact dimension for at most three points placed at the coordinate
/// triangle (1:0:0), (0:1:0), (0:0:1): the conditions are monomial-
/// diagonal, so surviving monomials can be counted directly.  Throws
/// std::invalid_argument when the system has more than three points.
Int monomial_count_dim(const DivisorClass& L);

} // namespace fatpoints
