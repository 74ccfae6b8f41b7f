#include "noncyclic/gf2poly.hpp"

#include <bit>
#include <stdexcept>

namespace noncyclic {

Gf2Poly Gf2Poly::from_word(std::uint64_t w)
{
    Gf2Poly p;
    p.words_.push_back(w);
    p.trim();
    return p;
}

Gf2Poly Gf2Poly::from_exponents(std::vector<int> const& exps)
{
    Gf2Poly p;
    for (int e : exps)
        p.set_bit(e, !p.bit(e));
    return p;
}

Gf2Poly Gf2Poly::reduce(IntPoly const& p)
{
    Gf2Poly r;
    for (int i = 0; i <= p.degree(); ++i)
        if (mpz_odd_p(p.coeffs()[static_cast<size_t>(i)].get_mpz_t()))
            r.set_bit(i);
    return r;
}

void Gf2Poly::trim()
{
    while (!words_.empty() && words_.back() == 0)
        words_.pop_back();
}

int Gf2Poly::degree() const
{
    if (words_.empty())
        return -1;
    return static_cast<int>(64 * (words_.size() - 1)) + 63 - std::countl_zero(words_.back());
}

bool Gf2Poly::bit(int i) const
{
    auto w = static_cast<size_t>(i / 64);
    if (i < 0 || w >= words_.size())
        return false;
    return (words_[w] >> (i % 64)) & 1u;
}

void Gf2Poly::set_bit(int i, bool v)
{
    auto w = static_cast<size_t>(i / 64);
    if (w >= words_.size()) {
        if (!v)
            return;
        words_.resize(w + 1, 0);
    }
    std::uint64_t mask = std::uint64_t{1} << (i % 64);
    if (v)
        words_[w] |= mask;
    else
        words_[w] &= ~mask;
    trim();
}

Gf2Poly& Gf2Poly::operator^=(Gf2Poly const& o)
{
    if (o.words_.size() > words_.size())
        words_.resize(o.words_.size(), 0);
    for (size_t i = 0; i < o.words_.size(); ++i)
        words_[i] ^= o.words_[i];
    trim();
    return *this;
}

Gf2Poly operator*(Gf2Poly const& a, Gf2Poly const& b)
{
    Gf2Poly r;
    int db = b.degree();
    for (int i = 0; i <= db; ++i) {
        if (!b.bit(i))
            continue;
        // r ^= a << i
        Gf2Poly s;
        s.words_.assign(a.words_.size() + static_cast<size_t>(i / 64) + 1, 0);
        int off = i % 64;
        for (size_t k = 0; k < a.words_.size(); ++k) {
            size_t dst = k + static_cast<size_t>(i / 64);
            s.words_[dst] |= a.words_[k] << off;
            if (off)
                s.words_[dst + 1] |= a.words_[k] >> (64 - off);
        }
        s.trim();
        r ^= s;
    }
    return r;
}

Gf2Poly Gf2Poly::mod(Gf2Poly const& m) const
{
    int dm = m.degree();
    if (dm < 0)
        throw std::invalid_argument("Gf2Poly::mod by zero");
    Gf2Poly r = *this;
    for (int d = r.degree(); d >= dm; d = r.degree()) {
        int sh = d - dm;
        for (int i = 0; i <= dm; ++i)
            if (m.bit(i))
                r.set_bit(i + sh, !r.bit(i + sh));
    }
    return r;
}

std::string Gf2Poly::to_string() const
{
    if (is_zero())
        return "0";
    std::string s;
    for (int i = degree(); i >= 0; --i) {
        if (!bit(i))
            continue;
        if (!s.empty())
            s += " + ";
        if (i == 0)
            s += "1";
        else if (i == 1)
            s += "x";
        else
            s += "x^" + std::to_string(i);
    }
    return s;
}

Gf2Poly gcd(Gf2Poly a, Gf2Poly b)
{
    while (!b.is_zero()) {
        Gf2Poly r = a.mod(b);
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

Gf2Poly mulmod(Gf2Poly const& a, Gf2Poly const& b, Gf2Poly const& m)
{
    return (a * b).mod(m);
}

namespace {

std::vector<int> prime_divisors(int n)
{
    std::vector<int> r;
    for (int t = 2; t * t <= n; ++t) {
        if (n % t)
            continue;
        r.push_back(t);
        while (n % t == 0)
            n /= t;
    }
    if (n > 1)
        r.push_back(n);
    return r;
}

/// x^(2^k) mod m
Gf2Poly frobenius_power(Gf2Poly const& m, int k)
{
    Gf2Poly x = Gf2Poly::from_word(2).mod(m);
    for (int i = 0; i < k; ++i)
        x = mulmod(x, x, m);
    return x;
}

} // namespace

bool is_irreducible_gf2(Gf2Poly const& p)
{
    int d = p.degree();
    if (d < 1)
        throw std::invalid_argument("is_irreducible_gf2: degree must be >= 1");
    if (d == 1)
        return true;
    Gf2Poly x = Gf2Poly::from_word(2);
    if (!(frobenius_power(p, d) == x.mod(p)))
        return false;
    for (int t : prime_divisors(d)) {
        Gf2Poly h = frobenius_power(p, d / t) ^ x;
        if (gcd(p, h).degree() != 0)
            return false;
    }
    return true;
}

} // namespace noncyclic
