#ifndef NONCYCLIC_INTEGER_FACTOR_HPP
#define NONCYCLIC_INTEGER_FACTOR_HPP

#include <gmpxx.h>

#include <optional>
#include <vector>

namespace noncyclic {

struct PrimePower {
    mpz_class prime;
    unsigned exponent = 0;
};

/// Complete factorization of |n|, primes ascending. n = 0 is rejected.
std::vector<PrimePower> factorize(mpz_class const& n);

struct RadicalSplit {
    std::vector<PrimePower> factors;
    mpz_class radical;  ///< product of the distinct primes
    mpz_class quotient; ///< |n| / radical
};

RadicalSplit radical_and_quotient(mpz_class const& n);

/// (p, r) with q = p^r, or nullopt if q is not a prime power.
std::optional<std::pair<long, unsigned>> prime_power_decomposition(long q);

bool is_prime(mpz_class const& n);

} // namespace noncyclic

#endif
