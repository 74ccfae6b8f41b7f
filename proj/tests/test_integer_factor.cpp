#include "doctest.h"

#include "noncyclic/integer_factor.hpp"

#include <random>

using namespace noncyclic;

TEST_CASE("radical_and_quotient examples")
{
    auto a = radical_and_quotient(4);
    CHECK(a.radical == 2);
    CHECK(a.quotient == 2);
    auto b = radical_and_quotient(18);
    CHECK(b.radical == 6);
    CHECK(b.quotient == 3);
    auto c = radical_and_quotient(1);
    CHECK(c.radical == 1);
    CHECK(c.quotient == 1);
    CHECK(c.factors.empty());
    auto d = radical_and_quotient(-72);
    CHECK(d.radical == 6);
    CHECK(d.quotient == 12);
}

TEST_CASE("rad * quotient = |n| and rad is squarefree")
{
    std::mt19937_64 rng(31);
    std::uniform_int_distribution<long> dist(-2'000'000, 2'000'000);
    for (int it = 0; it < 2000; ++it) {
        long n = dist(rng);
        if (n == 0)
            continue;
        auto s = radical_and_quotient(n);
        CHECK(s.radical * s.quotient == std::labs(n));
        mpz_class prod = 1;
        for (auto const& pp : s.factors) {
            CHECK(is_prime(pp.prime));
            CHECK(pp.exponent >= 1);
            mpz_class pw;
            mpz_pow_ui(pw.get_mpz_t(), pp.prime.get_mpz_t(), pp.exponent);
            prod *= pw;
        }
        CHECK(prod == std::labs(n));
        auto r = radical_and_quotient(s.radical);
        CHECK(r.quotient == 1);
    }
}

TEST_CASE("large cofactors go through rho")
{
    mpz_class p("1000000000039"), q("999999999989");
    auto f = factorize(p * q * 8);
    REQUIRE(f.size() == 3);
    CHECK(f[0].prime == 2);
    CHECK(f[0].exponent == 3);
    CHECK(f[1].prime == q);
    CHECK(f[2].prime == p);
    auto sq = factorize(p * p);
    REQUIRE(sq.size() == 1);
    CHECK(sq[0].exponent == 2);
    CHECK_THROWS(factorize(0));
}

TEST_CASE("prime power decomposition")
{
    CHECK(prime_power_decomposition(2) == std::make_pair(2L, 1u));
    CHECK(prime_power_decomposition(121) == std::make_pair(11L, 2u));
    CHECK(prime_power_decomposition(243) == std::make_pair(3L, 5u));
    CHECK_FALSE(prime_power_decomposition(1));
    CHECK_FALSE(prime_power_decomposition(6));
    CHECK_FALSE(prime_power_decomposition(0));
    CHECK_FALSE(prime_power_decomposition(-4));
    int count = 0;
    for (long q = 2; q <= 200; ++q)
        count += prime_power_decomposition(q).has_value();
    CHECK(count == 46 + 14); // 46 primes and 14 higher prime powers up to 200
}
