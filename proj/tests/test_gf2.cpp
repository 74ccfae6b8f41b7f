#include "doctest.h"

#include "noncyclic/gf2poly.hpp"

using namespace noncyclic;

namespace {

bool brute_irreducible(std::uint64_t w)
{
    Gf2Poly p = Gf2Poly::from_word(w);
    int d = p.degree();
    for (std::uint64_t f = 2; f < (std::uint64_t{1} << (d / 2 + 1)); ++f) {
        Gf2Poly fp = Gf2Poly::from_word(f);
        if (fp.degree() >= 1 && fp.degree() <= d / 2 && p.mod(fp).is_zero())
            return false;
    }
    return d >= 1;
}

} // namespace

TEST_CASE("gf2 examples")
{
    CHECK(is_irreducible_gf2(Gf2Poly::from_word(0b111)));
    CHECK_FALSE(is_irreducible_gf2(Gf2Poly::from_word(0b101)));
    CHECK(is_irreducible_gf2(Gf2Poly::from_word(0b10011)));
    CHECK(is_irreducible_gf2(Gf2Poly::from_word(0b10)));
    CHECK(is_irreducible_gf2(Gf2Poly::from_word(0b11)));
    CHECK(is_irreducible_gf2(Gf2Poly::from_word(0b11111)));        // (x^5 - 1)/(x - 1), 2 has order 4 mod 5
    CHECK_FALSE(is_irreducible_gf2(Gf2Poly::from_word(0b10101))); // (x^2 + x + 1)^2
}

TEST_CASE("gf2 arithmetic")
{
    Gf2Poly a = Gf2Poly::from_word(0b111), b = Gf2Poly::from_word(0b11);
    CHECK(a * b == Gf2Poly::from_word(0b1001));
    CHECK((a ^ a).is_zero());
    CHECK(Gf2Poly::from_word(0b1001).mod(b).is_zero());
    CHECK(gcd(Gf2Poly::from_word(0b1001), Gf2Poly::from_word(0b101)) == b);
    CHECK(Gf2Poly::from_exponents({0, 1, 4}) == Gf2Poly::from_word(0b10011));
    CHECK(Gf2Poly::reduce(IntPoly{3, -2, 5, 1}) == Gf2Poly::from_word(0b1101));
    CHECK(Gf2Poly::from_word(0b10011).to_string() == "x^4 + x + 1");
    // large degree across word boundaries
    Gf2Poly big = Gf2Poly::from_exponents({0, 1, 3, 4, 127});
    CHECK(big.degree() == 127);
    CHECK(mulmod(big, Gf2Poly::from_word(1), Gf2Poly::from_exponents({0, 200})) == big);
}

TEST_CASE("gf2 Rabin test agrees with trial division up to degree 12")
{
    int irreducible = 0;
    for (std::uint64_t w = 2; w < (1u << 13); ++w) {
        bool a = is_irreducible_gf2(Gf2Poly::from_word(w));
        bool b = brute_irreducible(w);
        if (a != b)
            FAIL("mismatch at ", Gf2Poly::from_word(w).to_string());
        irreducible += a;
    }
    // number of irreducibles of degree 1..12 over GF(2)
    CHECK(irreducible == 2 + 1 + 2 + 3 + 6 + 9 + 18 + 30 + 56 + 99 + 186 + 335);
}

TEST_CASE("known large irreducibles")
{
    CHECK(is_irreducible_gf2(Gf2Poly::from_exponents({0, 1, 3, 4, 64})));
    CHECK(is_irreducible_gf2(Gf2Poly::from_exponents({0, 1, 2, 7, 128})));
    CHECK_FALSE(is_irreducible_gf2(Gf2Poly::from_exponents({0, 64})));
}
