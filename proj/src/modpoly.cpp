#include "modpoly.hpp"

#include <stdexcept>

namespace noncyclic::detail {

u64 Zp::pow(u64 a, u64 e) const
{
    u64 r = 1 % p_;
    a %= p_;
    while (e) {
        if (e & 1)
            r = mul(r, a);
        a = mul(a, a);
        e >>= 1;
    }
    return r;
}

u64 Zp::inv(u64 a) const
{
    if (a % p_ == 0)
        throw std::domain_error("Zp::inv of zero");
    return pow(a, p_ - 2);
}

void Zp::trim(ModPoly& a)
{
    while (!a.empty() && a.back() == 0)
        a.pop_back();
}

ModPoly Zp::reduce(IntPoly const& f) const
{
    ModPoly r(f.coeffs().size());
    mpz_class t;
    for (size_t i = 0; i < r.size(); ++i)
        r[i] = mpz_fdiv_ui(f.coeffs()[i].get_mpz_t(), p_);
    trim(r);
    return r;
}

IntPoly Zp::lift(ModPoly const& f) const
{
    std::vector<mpz_class> v(f.size());
    for (size_t i = 0; i < f.size(); ++i)
        v[i] = static_cast<unsigned long>(f[i]);
    return IntPoly(std::move(v));
}

ModPoly Zp::add(ModPoly const& a, ModPoly const& b) const
{
    ModPoly r(std::max(a.size(), b.size()), 0);
    for (size_t i = 0; i < a.size(); ++i)
        r[i] = a[i];
    for (size_t i = 0; i < b.size(); ++i)
        r[i] = add(r[i], b[i]);
    trim(r);
    return r;
}

ModPoly Zp::sub(ModPoly const& a, ModPoly const& b) const
{
    ModPoly r(std::max(a.size(), b.size()), 0);
    for (size_t i = 0; i < a.size(); ++i)
        r[i] = a[i];
    for (size_t i = 0; i < b.size(); ++i)
        r[i] = sub(r[i], b[i]);
    trim(r);
    return r;
}

ModPoly Zp::mul(ModPoly const& a, ModPoly const& b) const
{
    if (a.empty() || b.empty())
        return {};
    ModPoly r(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i) {
        if (!a[i])
            continue;
        for (size_t j = 0; j < b.size(); ++j)
            r[i + j] = add(r[i + j], mul(a[i], b[j]));
    }
    trim(r);
    return r;
}

ModPoly Zp::scale(ModPoly const& a, u64 s) const
{
    ModPoly r(a.size());
    for (size_t i = 0; i < a.size(); ++i)
        r[i] = mul(a[i], s);
    trim(r);
    return r;
}

std::pair<ModPoly, ModPoly> Zp::divrem(ModPoly const& a, ModPoly const& b) const
{
    if (b.empty())
        throw std::domain_error("Zp::divrem by zero");
    ModPoly r = a;
    int db = degree(b);
    if (degree(a) < db)
        return {{}, r};
    ModPoly q(static_cast<size_t>(degree(a) - db) + 1, 0);
    u64 li = inv(b.back());
    for (int i = degree(a); i >= db; --i) {
        u64 t = mul(r[static_cast<size_t>(i)], li);
        q[static_cast<size_t>(i - db)] = t;
        if (!t)
            continue;
        for (int j = 0; j <= db; ++j) {
            auto k = static_cast<size_t>(i - db + j);
            r[k] = sub(r[k], mul(t, b[static_cast<size_t>(j)]));
        }
    }
    trim(q);
    trim(r);
    return {q, r};
}

ModPoly Zp::monic(ModPoly const& a) const
{
    if (a.empty())
        return a;
    return scale(a, inv(a.back()));
}

ModPoly Zp::gcd(ModPoly a, ModPoly b) const
{
    while (!b.empty()) {
        ModPoly r = rem(a, b);
        a = std::move(b);
        b = std::move(r);
    }
    return monic(a);
}

ModPoly Zp::xgcd(ModPoly const& a, ModPoly const& b, ModPoly& s, ModPoly& t) const
{
    ModPoly r0 = a, r1 = b;
    ModPoly s0{1}, s1{}, t0{}, t1{1};
    while (!r1.empty()) {
        auto [q, r] = divrem(r0, r1);
        ModPoly s2 = sub(s0, mul(q, s1));
        ModPoly t2 = sub(t0, mul(q, t1));
        r0 = std::move(r1);
        r1 = std::move(r);
        s0 = std::move(s1);
        s1 = std::move(s2);
        t0 = std::move(t1);
        t1 = std::move(t2);
    }
    u64 li = inv(r0.back());
    s = scale(s0, li);
    t = scale(t0, li);
    return scale(r0, li);
}

ModPoly Zp::derivative(ModPoly const& a) const
{
    if (a.size() <= 1)
        return {};
    ModPoly d(a.size() - 1);
    for (size_t i = 1; i < a.size(); ++i)
        d[i - 1] = mul(a[i], i % p_);
    trim(d);
    return d;
}

ModPoly Zp::powmod(ModPoly base, mpz_class e, ModPoly const& m) const
{
    ModPoly r{1};
    r = rem(r, m);
    base = rem(base, m);
    size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
    for (size_t i = bits; i-- > 0;) {
        r = rem(mul(r, r), m);
        if (mpz_tstbit(e.get_mpz_t(), i))
            r = rem(mul(r, base), m);
    }
    return r;
}

bool Zp::is_irreducible(ModPoly const& f) const
{
    int n = degree(f);
    if (n < 1)
        throw std::invalid_argument("Zp::is_irreducible: degree must be >= 1");
    if (n == 1)
        return true;
    ModPoly fm = monic(f);
    ModPoly x{0, 1};
    // frob[k] = x^(p^k) mod f
    std::vector<ModPoly> frob{rem(x, fm)};
    for (int k = 1; k <= n; ++k)
        frob.push_back(powmod(frob.back(), mpz_class(static_cast<unsigned long>(p_)), fm));
    if (frob[static_cast<size_t>(n)] != rem(x, fm))
        return false;
    int m = n;
    for (int t = 2; t <= m; ++t) {
        if (m % t)
            continue;
        while (m % t == 0)
            m /= t;
        ModPoly h = sub(frob[static_cast<size_t>(n / t)], x);
        if (degree(gcd(fm, h)) != 0)
            return false;
    }
    return true;
}

std::vector<std::pair<ModPoly, int>> Zp::distinct_degree(ModPoly f) const
{
    std::vector<std::pair<ModPoly, int>> out;
    ModPoly x{0, 1};
    ModPoly h = rem(x, f);
    mpz_class pz(static_cast<unsigned long>(p_));
    for (int i = 1; 2 * i <= degree(f); ++i) {
        h = powmod(h, pz, f);
        ModPoly g = gcd(f, sub(h, x));
        if (degree(g) > 0) {
            out.emplace_back(g, i);
            f = divrem(f, g).first;
            h = rem(h, f);
        }
    }
    if (degree(f) > 0)
        out.emplace_back(f, degree(f));
    return out;
}

std::vector<int> Zp::factor_degrees(ModPoly const& f) const
{
    std::vector<int> r;
    for (auto const& [g, d] : distinct_degree(monic(f)))
        for (int k = 0; k < degree(g) / d; ++k)
            r.push_back(d);
    return r;
}

void Zp::equal_degree(ModPoly const& f, int d, std::mt19937_64& rng, std::vector<ModPoly>& out) const
{
    int n = degree(f);
    if (n == d) {
        out.push_back(f);
        return;
    }
    mpz_class e;
    mpz_ui_pow_ui(e.get_mpz_t(), p_, static_cast<unsigned long>(d));
    e = (e - 1) / 2;
    std::uniform_int_distribution<u64> coin(0, p_ - 1);
    for (;;) {
        ModPoly a(static_cast<size_t>(n));
        for (auto& c : a)
            c = coin(rng);
        trim(a);
        if (degree(a) < 1)
            continue;
        ModPoly g = gcd(f, a);
        if (degree(g) > 0 && degree(g) < n) {
            equal_degree(g, d, rng, out);
            equal_degree(divrem(f, g).first, d, rng, out);
            return;
        }
        ModPoly b = sub(powmod(a, e, f), ModPoly{1});
        g = gcd(f, b);
        if (degree(g) > 0 && degree(g) < n) {
            equal_degree(g, d, rng, out);
            equal_degree(divrem(f, g).first, d, rng, out);
            return;
        }
    }
}

std::vector<ModPoly> Zp::factor_squarefree(ModPoly const& f, std::mt19937_64& rng) const
{
    if (p_ == 2)
        throw std::invalid_argument("factor_squarefree: odd characteristic required");
    std::vector<ModPoly> out;
    for (auto const& [g, d] : distinct_degree(monic(f)))
        equal_degree(g, d, rng, out);
    return out;
}

} // namespace noncyclic::detail
