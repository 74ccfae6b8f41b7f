// Independent reference implementations used only by the tests.
#ifndef NONCYCLIC_TESTS_ORACLES_HPP
#define NONCYCLIC_TESTS_ORACLES_HPP

#include "noncyclic/intpoly.hpp"
#include "noncyclic/realroots.hpp"

#include <cmath>
#include <complex>
#include <optional>
#include <random>
#include <vector>

namespace oracle {

using noncyclic::IntPoly;
using cld = std::complex<long double>;

/// Durand-Kerner on p / lc(p). nullopt if it did not settle.
inline std::optional<std::vector<cld>> complex_roots(IntPoly const& p)
{
    int n = p.degree();
    std::vector<long double> a(static_cast<size_t>(n) + 1);
    long double lc = p.leading().get_d();
    for (int i = 0; i <= n; ++i)
        a[static_cast<size_t>(i)] = p.coeff(i).get_d() / lc;
    auto eval = [&](cld z) {
        cld r = 0;
        for (int i = n; i >= 0; --i)
            r = r * z + a[static_cast<size_t>(i)];
        return r;
    };
    long double radius = 1;
    for (int i = 0; i < n; ++i)
        radius = std::max(radius, 1 + std::fabs(a[static_cast<size_t>(i)]));
    std::vector<cld> z(static_cast<size_t>(n));
    cld seed(0.4L, 0.9L);
    for (int i = 0; i < n; ++i)
        z[static_cast<size_t>(i)] = std::pow(seed, i) * (radius / 2);
    for (int it = 0; it < 5000; ++it) {
        long double moved = 0;
        for (int i = 0; i < n; ++i) {
            cld den = 1;
            for (int j = 0; j < n; ++j)
                if (j != i)
                    den *= z[static_cast<size_t>(i)] - z[static_cast<size_t>(j)];
            if (std::abs(den) == 0)
                den = 1e-30L;
            cld step = eval(z[static_cast<size_t>(i)]) / den;
            z[static_cast<size_t>(i)] -= step;
            moved = std::max(moved, std::abs(step));
        }
        if (moved < 1e-16L * radius)
            return z;
    }
    // Multiple roots converge slowly; accept if residuals are tiny.
    for (auto const& r : z)
        if (std::abs(eval(r)) > 1e-9L)
            return std::nullopt;
    return z;
}

/// Divisors d > 0 of |n| (n != 0, small).
inline std::vector<long> divisors(long n)
{
    n = std::labs(n);
    std::vector<long> d;
    for (long i = 1; i <= n; ++i)
        if (n % i == 0)
            d.push_back(i);
    return d;
}

/* Brute-force factor search: a primitive p of degree n is reducible iff some
 * subset S of its complex roots with 1 <= |S| <= n/2 and some d | lc(p) make
 * d * prod_{S} (x - r) an integer polynomial dividing p. Candidates are rounded
 * and then confirmed by exact division. nullopt if root finding failed.
 */
inline std::optional<bool> irreducible_by_search(IntPoly const& p_in)
{
    IntPoly p = p_in.primitive_part();
    int n = p.degree();
    if (n <= 1)
        return true;
    auto roots = complex_roots(p);
    if (!roots)
        return std::nullopt;
    auto lcs = divisors(p.leading().get_si());
    std::vector<int> pick;
    bool found = false;
    // Enumerate subsets by bitmask (n <= 12 here).
    for (unsigned mask = 1; mask < (1u << n) && !found; ++mask) {
        int k = __builtin_popcount(mask);
        if (k > n / 2)
            continue;
        std::vector<cld> prod{1};
        for (int i = 0; i < n; ++i) {
            if (!(mask >> i & 1u))
                continue;
            std::vector<cld> next(prod.size() + 1, 0);
            for (size_t j = 0; j < prod.size(); ++j) {
                next[j + 1] += prod[j];
                next[j] -= prod[j] * (*roots)[static_cast<size_t>(i)];
            }
            prod = std::move(next);
        }
        for (long d : lcs) {
            std::vector<mpz_class> c;
            bool integral = true;
            for (auto const& v : prod) {
                long double re = v.real() * d;
                long double r = std::round(re);
                if (std::fabs(re - r) > 1e-4L || std::fabs(v.imag() * d) > 1e-4L) {
                    integral = false;
                    break;
                }
                c.emplace_back(static_cast<double>(r));
            }
            if (!integral)
                continue;
            if (noncyclic::divides_exactly(IntPoly(c), p)) {
                found = true;
                break;
            }
        }
    }
    return !found;
}

/// Random monic-or-not integer polynomial with coefficients in [-c, c] and exact degree.
template <typename Rng>
IntPoly random_poly(Rng& rng, int degree, long c, bool monic)
{
    std::uniform_int_distribution<long> coef(-c, c);
    std::vector<mpz_class> v(static_cast<size_t>(degree) + 1);
    for (auto& x : v)
        x = coef(rng);
    if (monic)
        v.back() = 1;
    while (v.back() == 0)
        v.back() = coef(rng);
    return IntPoly(std::move(v));
}

/* Random monic h of degree g with all roots real and alpha^2 < 4q strictly
 * (no boundary roots): round the coefficients of a product of random real
 * linear factors and keep the result if it is still in range.
 */
template <typename Rng>
IntPoly random_real_weil(Rng& rng, int g, long q)
{
    long double r = 2 * std::sqrt(static_cast<long double>(q));
    std::uniform_real_distribution<long double> root(-r, r);
    mpq_class bound = 4 * mpq_class(q);
    for (;;) {
        std::vector<long double> c{1};
        for (int i = 0; i < g; ++i) {
            long double a = root(rng);
            std::vector<long double> next(c.size() + 1, 0);
            for (size_t j = 0; j < c.size(); ++j) {
                next[j + 1] += c[j];
                next[j] -= a * c[j];
            }
            c = std::move(next);
        }
        std::vector<mpz_class> v;
        for (auto x : c)
            v.emplace_back(static_cast<double>(std::round(x)));
        v.back() = 1;
        IntPoly h(std::move(v));
        if (!noncyclic::is_totally_real_within_sq(h, bound))
            continue;
        // strict: the y-polynomial of squared roots must not vanish at 4q
        if (noncyclic::square_roots_poly(h).sign_at(bound) == 0)
            continue;
        return h;
    }
}

} // namespace oracle

#endif
