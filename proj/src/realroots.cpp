#include "noncyclic/realroots.hpp"

#include <algorithm>

namespace noncyclic {

namespace {

IntPoly divide_positive_content(IntPoly const& p)
{
    mpz_class g = p.content();
    if (g <= 1)
        return p;
    std::vector<mpz_class> v = p.coeffs();
    for (auto& c : v)
        mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
    return IntPoly(std::move(v));
}

int count_variations(std::vector<int> const& signs)
{
    int v = 0, last = 0;
    for (int s : signs) {
        if (s == 0)
            continue;
        if (last != 0 && s != last)
            ++v;
        last = s;
    }
    return v;
}

} // namespace

SturmChain::SturmChain(IntPoly const& p)
{
    if (p.is_zero())
        throw std::invalid_argument("Sturm chain of the zero polynomial");
    chain_.push_back(divide_positive_content(p));
    if (p.degree() == 0)
        return;
    chain_.push_back(divide_positive_content(p.derivative()));
    while (chain_.back().degree() > 0) {
        IntPoly const& a = chain_[chain_.size() - 2];
        IntPoly const& b = chain_.back();
        IntPoly r = pseudo_remainder(a, b);
        int e = a.degree() - b.degree() + 1;
        bool flip = (b.leading() < 0 && (e % 2) == 1);
        // next = -rem(a, b); prem = lc^e * rem
        if (!flip)
            r = -r;
        if (r.is_zero())
            break;
        chain_.push_back(divide_positive_content(r));
    }
}

int SturmChain::variations(mpq_class const& x) const
{
    std::vector<int> s;
    s.reserve(chain_.size());
    for (auto const& p : chain_)
        s.push_back(p.sign_at(x));
    return count_variations(s);
}

int SturmChain::variations_at_infinity(bool positive) const
{
    std::vector<int> s;
    s.reserve(chain_.size());
    for (auto const& p : chain_)
        s.push_back(p.sign_at_infinity(positive));
    return count_variations(s);
}

int SturmChain::variations(Endpoint const& e, bool is_hi) const
{
    if (!e)
        return variations_at_infinity(is_hi);
    return variations(*e);
}

int SturmChain::count(Endpoint const& lo, Endpoint const& hi) const
{
    if (lo && hi && *hi <= *lo)
        return 0;
    return variations(lo, false) - variations(hi, true);
}

RootCount count_real_roots(IntPoly const& p, Endpoint lo, Endpoint hi)
{
    if (p.is_zero())
        throw std::invalid_argument("count_real_roots: zero polynomial");
    SturmChain chain(squarefree_part(p));
    int n = chain.count(lo, hi);
    return RootCount{std::move(lo), std::move(hi), n};
}

IntPoly square_roots_poly(IntPoly const& p)
{
    IntPoly even = p * p.reflect();
    std::vector<mpz_class> y(static_cast<size_t>(even.degree() / 2) + 1);
    for (int i = 0; i <= even.degree(); i += 2)
        y[static_cast<size_t>(i / 2)] = even.coeff(i);
    return IntPoly(std::move(y));
}

bool is_totally_real_within_sq(IntPoly const& p, mpq_class const& bound_sq)
{
    if (p.is_zero())
        throw std::invalid_argument("is_totally_real_within_sq: zero polynomial");
    if (bound_sq < 0)
        throw std::invalid_argument("is_totally_real_within_sq: negative bound");
    IntPoly sf = squarefree_part(p);
    if (sf.degree() == 0)
        return true;
    SturmChain chain(sf);
    if (chain.count(std::nullopt, std::nullopt) != sf.degree())
        return false;
    // Closed bound: a root with square exactly bound_sq is inside.
    IntPoly ysf = squarefree_part(square_roots_poly(sf));
    SturmChain ychain(ysf);
    return ychain.count(bound_sq, std::nullopt) == 0;
}

mpq_class cauchy_bound(IntPoly const& p)
{
    mpq_class m = 0;
    mpz_class lc = abs(p.leading());
    for (int i = 0; i < p.degree(); ++i) {
        mpq_class r(abs(p.coeff(i)), lc);
        r.canonicalize();
        if (r > m)
            m = r;
    }
    return m + 1;
}

mpq_class max_real_root_approx(IntPoly const& p, mpq_class const& eps)
{
    if (p.is_zero())
        throw std::invalid_argument("max_real_root_approx: zero polynomial");
    if (eps <= 0)
        throw std::invalid_argument("max_real_root_approx: eps must be positive");
    IntPoly sf = squarefree_part(p);
    SturmChain chain(sf);
    if (sf.degree() == 0 || chain.count(std::nullopt, std::nullopt) == 0)
        throw NoRealRoot("polynomial has no real root");
    mpq_class hi = cauchy_bound(sf);
    mpq_class lo = -hi;
    // Invariant: the largest root lies in (lo, hi].
    while (hi - lo >= eps) {
        mpq_class mid = (lo + hi) / 2;
        if (chain.count(mid, hi) > 0)
            lo = mid;
        else
            hi = mid;
    }
    return (lo + hi) / 2;
}

mpq_class max_abs_real_root_approx(IntPoly const& p, mpq_class const& eps)
{
    mpq_class top = max_real_root_approx(p, eps);
    mpq_class bottom = max_real_root_approx(p.reflect(), eps);
    return std::max(top, bottom);
}

std::vector<std::pair<mpq_class, mpq_class>> isolate_real_roots(IntPoly const& p, mpq_class const& width)
{
    IntPoly sf = squarefree_part(p);
    std::vector<std::pair<mpq_class, mpq_class>> out;
    if (sf.degree() <= 0)
        return out;
    SturmChain chain(sf);
    mpq_class b = cauchy_bound(sf);
    std::vector<std::pair<mpq_class, mpq_class>> work{{-b, b}};
    while (!work.empty()) {
        auto [lo, hi] = work.back();
        work.pop_back();
        int n = chain.count(lo, hi);
        if (n == 0)
            continue;
        if (n == 1 && hi - lo < width) {
            out.emplace_back(lo, hi);
            continue;
        }
        mpq_class mid = (lo + hi) / 2;
        work.emplace_back(lo, mid);
        work.emplace_back(mid, hi);
    }
    std::sort(out.begin(), out.end(), [](auto const& x, auto const& y) { return x.first < y.first; });
    return out;
}

} // namespace noncyclic
