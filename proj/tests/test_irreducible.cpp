#include "doctest.h"
#include "oracles.hpp"

#include "noncyclic/irreducible.hpp"
#include "noncyclic/weil.hpp"

using namespace noncyclic;

TEST_CASE("irreducibility examples")
{
    CHECK(is_irreducible_q(IntPoly{-18, 0, 1}));
    CHECK_FALSE(is_irreducible_q(IntPoly{9, 0, -6, 0, 1}));
    CHECK(is_irreducible_q(IntPoly{-5, 1}));
    CHECK(is_irreducible_q(IntPoly{-10, 2})); // content removed
    CHECK_FALSE(is_irreducible_q(IntPoly{0, 0, 1}));
    CHECK_FALSE(is_irreducible_q(IntPoly{-1, 0, 0, 0, 1}));
}

TEST_CASE("reducible modulo every prime but irreducible over Q")
{
    // x^4 - 10x^2 + 1, the minimal polynomial of sqrt2 + sqrt3
    IntPoly sd{1, 0, -10, 0, 1};
    CHECK(irreducibility_witness_prime(sd) == 0);
    CHECK(is_irreducible_q(sd));
    // x^4 + 1 as well
    CHECK(irreducibility_witness_prime(IntPoly{1, 0, 0, 0, 1}) == 0);
    CHECK(is_irreducible_q(IntPoly{1, 0, 0, 0, 1}));
    // minimal polynomial of sqrt2 + sqrt3 + sqrt5 (degree 8)
    IntPoly s8{576, 0, -960, 0, 352, 0, -40, 0, 1};
    CHECK(is_irreducible_q(s8));
    CHECK_FALSE(is_irreducible_q(sd * IntPoly{1, 0, 0, 0, 1}));
    CHECK_FALSE(is_irreducible_q(sd * sd));
}

TEST_CASE("non-monic and large-degree inputs")
{
    CHECK(is_irreducible_q(IntPoly{1, 0, 0, 2}));  // 2x^3 + 1
    CHECK_FALSE(is_irreducible_q(IntPoly{-1, 0, 4})); // (2x - 1)(2x + 1)
    CHECK_FALSE(is_irreducible_q(IntPoly{3, 5, 2}));  // (2x + 3)(x + 1)
    IntPoly a{-1, 3, 0, 0, 0, 1};           // x^5 + 3x - 1
    IntPoly b{7, 0, -2, 0, 0, 0, 0, 0, 0, 1}; // x^9 - 2x^2 + 7
    CHECK(is_irreducible_q(a));
    CHECK(is_irreducible_q(b));
    CHECK_FALSE(is_irreducible_q(a * b));
    CHECK_FALSE(is_irreducible_q(a * b * IntPoly{1, 1, 1}));
    // degree 26 Weil polynomial from a degree 13 table row stays irreducible
    IntPoly h = IntPoly::from_strings({"9", "852", "-7", "-2922", "1", "2913", "0", "-1248", "0", "260", "0", "-26", "0", "1"});
    CHECK(is_irreducible_q(h));
    CHECK(is_irreducible_q(expand_h_to_f_unchecked(h, 2)));
    CHECK_FALSE(is_irreducible_q(expand_h_to_f_unchecked(h * IntPoly{-1, 1}, 5)));
}

TEST_CASE("irreducibility agrees with a brute-force factor search (1e4 samples)")
{
    std::mt19937_64 rng(41);
    int compared = 0, reducible = 0;
    for (int it = 0; it < 10000; ++it) {
        int deg = 1 + it % 6;
        IntPoly p = oracle::random_poly(rng, deg, 9, false);
        // bias towards reducible inputs a third of the time
        if (it % 3 == 0 && deg >= 2) {
            int d1 = 1 + static_cast<int>(rng() % static_cast<unsigned>(deg - 1));
            p = oracle::random_poly(rng, d1, 4, false) * oracle::random_poly(rng, deg - d1, 4, false);
        }
        if (p.content() == 0)
            continue;
        auto ref = oracle::irreducible_by_search(p);
        if (!ref)
            continue;
        ++compared;
        reducible += !*ref;
        bool got = is_irreducible_q(p);
        if (got != *ref)
            FAIL("mismatch for ", p.to_string(), ": got ", got);
    }
    CHECK(compared >= 9900);
    CHECK(reducible > 2000);
}
