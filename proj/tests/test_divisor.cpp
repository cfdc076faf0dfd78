#include "fatpoints/divisor.hpp"

#include "test_util.hpp"

#include <doctest.h>

using namespace fatpoints;

TEST_CASE("virtual dimension") {
    CHECK(virtual_dim({8, {0, 5, 5}}) == 14);
    CHECK(virtual_dim({5, {}}) == 20);
    CHECK(virtual_dim({4, {0, 2, 2, 2, 2, 2}}) == -1);
    // Negative multiplicities impose no conditions.
    CHECK(virtual_dim({6, {3, 3, -2}}) == 15);
    CHECK(virtual_dim({0, {}}) == 0);
}

TEST_CASE("expected dimension") {
    CHECK(expected_dim({4, {0, 2, 2, 2, 2, 2}}) == -1);
    CHECK(expected_dim({0, {}}) == 0);
    CHECK(expected_dim({10, {2, 5, 5, 5, 5}}) == 2);
    testutil::Rng rng(7);
    for (int i = 0; i < 2000; ++i) {
        auto L = testutil::random_class(rng, 30, 12, 8, true);
        CHECK(expected_dim(L) == std::max(virtual_dim(L), Int{-1}));
    }
}

TEST_CASE("intersection pairing") {
    CHECK(intersect({7, {7, 5}}, {1, {1, 1}}) == -5);
    CHECK(intersect({1, {1, 1}}, {1, {1, 1}}) == -1);
    // Shorter list padded with zeros.
    CHECK(intersect({8, {0, 5, 5, 5}}, {1, {0, 1, 1}}) == -2);
}

TEST_CASE("canonical pairing") {
    CHECK(k_pairing({1, {1, 1}}) == -1);
    CHECK(k_pairing({6, {3, 2, 2, 2, 2, 2, 2, 2}}) == -1);
    CHECK(k_pairing({0, {}}) == 0);
}

TEST_CASE("residual system") {
    CHECK(residual({7, {7, 5, 5}}, {1, {1, 1, 0}}, 5) == DivisorClass{2, {2, 0, 5}});

    // Removing the three pair-lines through the 5-points twice each leaves
    // the shape L(2,m0,1^3).
    DivisorClass L{8, {0, 5, 5, 5}};
    DivisorClass M = residual(L, {1, {0, 1, 1, 0}}, 2);
    M = residual(M, {1, {0, 1, 0, 1}}, 2);
    M = residual(M, {1, {0, 0, 1, 1}}, 2);
    CHECK(M == DivisorClass{2, {0, 1, 1, 1}});
}

TEST_CASE("cremona step") {
    {
        auto [out, c] = cremona_step({8, {5, 5, 0}});
        CHECK(c == -2);
        CHECK(out == DivisorClass{6, {3, 3, -2}});
    }
    {
        auto [out, c] = cremona_step({10, {5, 5, 5, 5, 2}});
        CHECK(c == -5);
        CHECK(out == DivisorClass{5, {0, 0, 0, 5, 2}});
    }
    {
        // Input shorter than three points gets zero-padded.
        auto [out, c] = cremona_step({3, {4}});
        CHECK(c == -1);
        CHECK(out == DivisorClass{2, {3, -1, -1}});
    }
}

TEST_CASE("iterated cremona reproduces the L(d,d-7,5^2k) reduction pattern") {
    // k steps on L(d,d-7,5^{2k}) yield L(d-3k, d-3k-7, 2^{2k}) as multisets.
    for (Int k : {1, 2}) {
        const Int d = 25;
        DivisorClass L{d, {d - 7}};
        for (Int i = 0; i < 2 * k; ++i) L.mults.push_back(5);
        for (Int i = 0; i < k; ++i) L = cremona_step(L).first;
        std::vector<Int> got = L.mults;
        std::sort(got.begin(), got.end());
        std::vector<Int> want(static_cast<size_t>(2 * k), 2);
        want.push_back(d - 3 * k - 7);
        std::sort(want.begin(), want.end());
        CHECK(L.degree == d - 3 * k);
        CHECK(got == want);
    }
}

TEST_CASE("cremona invariance of the lattice data") {
    testutil::Rng rng(11);
    for (int i = 0; i < 5000; ++i) {
        auto L = testutil::random_class(rng, 25, 10, 7, true);
        auto [out, c] = cremona_step(L);
        (void)c;
        CHECK(testutil::raw_virtual(out) == testutil::raw_virtual(L));
        CHECK(intersect(out, out) == intersect(L, L));
        CHECK(k_pairing(out) == k_pairing(L));
    }
}

TEST_CASE("intersection symmetry") {
    testutil::Rng rng(13);
    for (int i = 0; i < 5000; ++i) {
        auto L1 = testutil::random_class(rng, 30, 12, 8, true);
        auto L2 = testutil::random_class(rng, 30, 12, 8, true);
        CHECK(intersect(L1, L2) == intersect(L2, L1));
    }
}

TEST_CASE("riemann-roch form of the virtual dimension") {
    testutil::Rng rng(17);
    for (int i = 0; i < 5000; ++i) {
        auto L = testutil::random_class(rng, 30, 12, 8, false);
        CHECK(virtual_dim(L) == (intersect(L, L) - k_pairing(L)) / 2);
    }
}

TEST_CASE("display form") {
    CHECK(DivisorClass{8, {0, 5, 5, 5}}.str() == "L(8,0,5^3)");
    CHECK(QuasiHomSystem{11, 2, 5, 5}.to_divisor().str() == "L(11,2,5^5)");
    CHECK(DivisorClass{5, {}}.str() == "L(5)");
}
