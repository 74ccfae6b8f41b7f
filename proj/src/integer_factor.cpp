#include "noncyclic/integer_factor.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace noncyclic {

namespace {

constexpr unsigned long trial_limit = 1000000;

std::vector<unsigned long> const& small_primes()
{
    static std::vector<unsigned long> const primes = [] {
        std::vector<bool> sieve(trial_limit + 1, true);
        std::vector<unsigned long> r;
        for (unsigned long i = 2; i <= trial_limit; ++i) {
            if (!sieve[i])
                continue;
            r.push_back(i);
            for (unsigned long j = i * i; j <= trial_limit; j += i)
                sieve[j] = false;
        }
        return r;
    }();
    return primes;
}

/* Brent's variant of Pollard rho with batched gcds. Returns a nontrivial
 * factor of the odd composite n, trying successive polynomial constants.
 */
mpz_class rho(mpz_class const& n)
{
    for (unsigned long c = 1;; ++c) {
        mpz_class y = 2, x, ys, q = 1, g = 1, t;
        unsigned long r = 1;
        constexpr unsigned long m = 128;
        do {
            x = y;
            for (unsigned long i = 0; i < r; ++i) {
                y = (y * y + c) % n;
            }
            unsigned long k = 0;
            do {
                ys = y;
                for (unsigned long i = 0; i < std::min(m, r - k); ++i) {
                    y = (y * y + c) % n;
                    t = abs(x - y);
                    q = (q * t) % n;
                }
                mpz_gcd(g.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
                k += m;
            } while (k < r && g == 1);
            r *= 2;
        } while (g == 1);
        if (g == n) {
            // Batched gcd overshot; step back one at a time.
            do {
                ys = (ys * ys + c) % n;
                t = abs(x - ys);
                mpz_gcd(g.get_mpz_t(), t.get_mpz_t(), n.get_mpz_t());
            } while (g == 1);
        }
        if (g != n)
            return g;
    }
}

void split(mpz_class const& n, std::map<mpz_class, unsigned>& out)
{
    if (n == 1)
        return;
    if (is_prime(n)) {
        ++out[n];
        return;
    }
    mpz_class root;
    if (mpz_perfect_square_p(n.get_mpz_t())) {
        mpz_sqrt(root.get_mpz_t(), n.get_mpz_t());
        split(root, out);
        split(root, out);
        return;
    }
    mpz_class d = rho(n);
    split(d, out);
    split(n / d, out);
}

} // namespace

bool is_prime(mpz_class const& n)
{
    if (n < 2)
        return false;
    return mpz_probab_prime_p(n.get_mpz_t(), 40) != 0;
}

std::vector<PrimePower> factorize(mpz_class const& n)
{
    if (n == 0)
        throw std::invalid_argument("factorize: zero has no factorization");
    mpz_class m = abs(n);
    std::map<mpz_class, unsigned> found;
    for (unsigned long p : small_primes()) {
        if (m == 1)
            break;
        if (m < mpz_class(p) * p) {
            // m has no factor below sqrt(m); it is prime.
            break;
        }
        while (mpz_divisible_ui_p(m.get_mpz_t(), p)) {
            mpz_divexact_ui(m.get_mpz_t(), m.get_mpz_t(), p);
            ++found[mpz_class(p)];
        }
    }
    split(m, found);
    std::vector<PrimePower> r;
    for (auto& [p, e] : found)
        r.push_back({p, e});
    return r;
}

RadicalSplit radical_and_quotient(mpz_class const& n)
{
    RadicalSplit s;
    s.factors = factorize(n);
    s.radical = 1;
    for (auto const& f : s.factors)
        s.radical *= f.prime;
    s.quotient = abs(n) / s.radical;
    return s;
}

std::optional<std::pair<long, unsigned>> prime_power_decomposition(long q)
{
    if (q < 2)
        return std::nullopt;
    auto f = factorize(mpz_class(q));
    if (f.size() != 1)
        return std::nullopt;
    return std::make_pair(f[0].prime.get_si(), f[0].exponent);
}

} // namespace noncyclic
