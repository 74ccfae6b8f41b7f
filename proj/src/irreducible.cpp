#include "noncyclic/irreducible.hpp"

#include "modpoly.hpp"

#include <algorithm>
#include <stdexcept>

namespace noncyclic {

using detail::ModPoly;
using detail::u64;
using detail::Zp;

namespace {

constexpr unsigned long fast_primes[] = {2, 3, 5, 7, 11, 13};
constexpr int zassenhaus_prime_trials = 6;

bool is_small_prime(unsigned long n)
{
    if (n < 2)
        return false;
    for (unsigned long d = 2; d * d <= n; ++d)
        if (n % d == 0)
            return false;
    return true;
}

/// a^(n-1) f(x/a) for a = lc(f): monic, irreducible iff f is.
IntPoly make_monic(IntPoly const& f)
{
    if (f.leading() == 1)
        return f;
    int n = f.degree();
    mpz_class const& a = f.leading();
    std::vector<mpz_class> v(static_cast<size_t>(n) + 1);
    mpz_class apow = 1;
    for (int i = n - 1; i >= 0; --i) {
        v[static_cast<size_t>(i)] = f.coeff(i) * apow;
        apow *= a;
    }
    v[static_cast<size_t>(n)] = 1;
    return IntPoly(std::move(v));
}

/* Lifts F = G * H (mod p), G and H monic and coprime mod p, to a
 * factorization modulo p^k. Linear lifting; each step gains one power of p.
 */
std::pair<IntPoly, IntPoly> hensel_two(Zp const& zp, IntPoly const& F, ModPoly const& g, ModPoly const& h, unsigned k)
{
    ModPoly s, t;
    ModPoly one = zp.xgcd(g, h, s, t);
    if (one != ModPoly{1})
        throw std::logic_error("hensel: factors not coprime");
    IntPoly G = zp.lift(g), H = zp.lift(h);
    mpz_class m = static_cast<unsigned long>(zp.modulus());
    for (unsigned step = 1; step < k; ++step) {
        IntPoly E = F - G * H;
        std::vector<mpz_class> ev = E.coeffs();
        for (auto& c : ev) {
            if (!mpz_divisible_p(c.get_mpz_t(), m.get_mpz_t()))
                throw std::logic_error("hensel: residue not divisible");
            mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), m.get_mpz_t());
        }
        ModPoly e = zp.reduce(IntPoly(std::move(ev)));
        auto [quo, dh] = zp.divrem(zp.mul(e, s), h);
        ModPoly dg = zp.add(zp.mul(e, t), zp.mul(quo, g));
        G += zp.lift(dg) * m;
        H += zp.lift(dh) * m;
        m *= static_cast<unsigned long>(zp.modulus());
    }
    return {G, H};
}

ModPoly product(Zp const& zp, std::vector<ModPoly> const& fs, size_t lo, size_t hi)
{
    ModPoly r{1};
    for (size_t i = lo; i < hi; ++i)
        r = zp.mul(r, fs[i]);
    return r;
}

/// Lifts the full factorization of F mod p to mod p^k; F is an integer representative.
void hensel_multi(Zp const& zp, IntPoly const& F, std::vector<ModPoly> const& fs, size_t lo, size_t hi,
                  unsigned k, mpz_class const& M, std::vector<IntPoly>& out)
{
    if (hi - lo == 1) {
        out.push_back(F.mod_symmetric(M));
        return;
    }
    size_t mid = lo + (hi - lo) / 2;
    auto [G, H] = hensel_two(zp, F, product(zp, fs, lo, mid), product(zp, fs, mid, hi), k);
    hensel_multi(zp, G.mod_symmetric(M), fs, lo, mid, k, M, out);
    hensel_multi(zp, H.mod_symmetric(M), fs, mid, hi, k, M, out);
}

/// Degrees achievable as subset sums of a factor-degree pattern.
std::vector<bool> subset_degrees(std::vector<int> const& degs, int n)
{
    std::vector<bool> ok(static_cast<size_t>(n) + 1, false);
    ok[0] = true;
    for (int d : degs)
        for (int s = n; s >= d; --s)
            if (ok[static_cast<size_t>(s - d)])
                ok[static_cast<size_t>(s)] = true;
    return ok;
}

bool zassenhaus_irreducible(IntPoly const& F)
{
    int n = F.degree();
    IntPoly dF = F.derivative();

    struct Choice {
        unsigned long p;
        std::vector<int> degs;
    };
    std::vector<Choice> choices;
    std::vector<bool> allowed(static_cast<size_t>(n) + 1, true);
    for (unsigned long p = 3; choices.size() < zassenhaus_prime_trials; p += 2) {
        if (!is_small_prime(p))
            continue;
        Zp zp(p);
        ModPoly f = zp.reduce(F);
        if (Zp::degree(zp.gcd(f, zp.reduce(dF))) != 0)
            continue;
        auto degs = zp.factor_degrees(f);
        if (degs.size() == 1)
            return true;
        auto sums = subset_degrees(degs, n);
        for (int d = 0; d <= n; ++d)
            allowed[static_cast<size_t>(d)] = allowed[static_cast<size_t>(d)] && sums[static_cast<size_t>(d)];
        choices.push_back({p, std::move(degs)});
    }
    bool any_proper = false;
    for (int d = 1; d < n; ++d)
        any_proper = any_proper || allowed[static_cast<size_t>(d)];
    if (!any_proper)
        return true;

    auto best = std::min_element(choices.begin(), choices.end(),
                                 [](auto const& a, auto const& b) { return a.degs.size() < b.degs.size(); });
    Zp zp(best->p);
    std::mt19937_64 rng(0x5eedu + best->p);
    std::vector<ModPoly> fs = zp.factor_squarefree(zp.reduce(F), rng);
    std::sort(fs.begin(), fs.end(), [](auto const& a, auto const& b) { return a.size() < b.size(); });

    // Coefficients of any monic factor are bounded by 2^n * ||F||_2.
    mpz_class norm2 = 0;
    for (auto const& c : F.coeffs())
        norm2 += c * c;
    mpz_class bound;
    mpz_sqrt(bound.get_mpz_t(), norm2.get_mpz_t());
    bound += 1;
    bound <<= static_cast<mp_bitcnt_t>(n);
    mpz_class M = best->p;
    unsigned k = 1;
    while (M <= 2 * bound) {
        M *= best->p;
        ++k;
    }

    std::vector<IntPoly> lifted;
    hensel_multi(zp, F, fs, 0, fs.size(), k, M, lifted);

    size_t r = lifted.size();
    mpz_class const f0 = F.coeff(0);
    std::vector<size_t> idx;
    for (size_t size = 1; 2 * size <= r; ++size) {
        idx.resize(size);
        for (size_t i = 0; i < size; ++i)
            idx[i] = i;
        for (;;) {
            int deg = 0;
            for (size_t i : idx)
                deg += lifted[i].degree();
            if (allowed[static_cast<size_t>(deg)]) {
                IntPoly g = IntPoly::constant(1);
                for (size_t i : idx)
                    g = (g * lifted[i]).mod_symmetric(M);
                mpz_class g0 = g.coeff(0);
                if (g0 != 0 && mpz_divisible_p(f0.get_mpz_t(), g0.get_mpz_t()) && divides_exactly(g, F))
                    return false;
            }
            // next combination
            size_t i = size;
            while (i > 0 && idx[i - 1] == r - size + i - 1)
                --i;
            if (i == 0)
                break;
            ++idx[i - 1];
            for (size_t j = i; j < size; ++j)
                idx[j] = idx[j - 1] + 1;
        }
    }
    return true;
}

} // namespace

unsigned long irreducibility_witness_prime(IntPoly const& p)
{
    if (p.degree() < 1)
        return 0;
    IntPoly pp = p.primitive_part();
    for (unsigned long l : fast_primes) {
        if (mpz_divisible_ui_p(pp.leading().get_mpz_t(), l))
            continue;
        Zp zp(l);
        if (zp.is_irreducible(zp.reduce(pp)))
            return l;
    }
    return 0;
}

bool is_irreducible_q(IntPoly const& p)
{
    if (p.degree() < 1)
        throw std::invalid_argument("is_irreducible_q: degree must be >= 1");
    IntPoly pp = p.primitive_part();
    if (pp.degree() == 1)
        return true;
    if (pp.coeff(0) == 0)
        return false;
    if (gcd(pp, pp.derivative()).degree() > 0)
        return false;
    if (irreducibility_witness_prime(pp) != 0)
        return true;
    return zassenhaus_irreducible(make_monic(pp));
}

} // namespace noncyclic
