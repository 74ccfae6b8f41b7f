#include "noncyclic/intpoly.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace noncyclic {

IntPoly::IntPoly(std::initializer_list<long> ascending)
{
    c_.reserve(ascending.size());
    for (long v : ascending)
        c_.emplace_back(v);
    normalize();
}

IntPoly::IntPoly(std::vector<mpz_class> ascending) : c_(std::move(ascending))
{
    normalize();
}

IntPoly IntPoly::constant(mpz_class c)
{
    return IntPoly(std::vector<mpz_class>{std::move(c)});
}

IntPoly IntPoly::monomial(mpz_class c, int degree)
{
    std::vector<mpz_class> v(static_cast<size_t>(degree) + 1);
    v.back() = std::move(c);
    return IntPoly(std::move(v));
}

void IntPoly::normalize()
{
    while (!c_.empty() && c_.back() == 0)
        c_.pop_back();
}

mpz_class IntPoly::coeff(int i) const
{
    if (i < 0 || i > degree())
        return 0;
    return c_[static_cast<size_t>(i)];
}

mpz_class IntPoly::eval(mpz_class const& n) const
{
    mpz_class r = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
        r *= n;
        r += *it;
    }
    return r;
}

int IntPoly::sign_at(mpq_class const& r) const
{
    if (c_.empty())
        return 0;
    // den^deg * p(num/den), den > 0 for a canonical mpq.
    mpz_class const& num = r.get_num();
    mpz_class const& den = r.get_den();
    mpz_class acc = 0, dpow = 1;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
        acc *= num;
        acc += *it * dpow;
        dpow *= den;
    }
    return sgn(acc);
}

int IntPoly::sign_at_infinity(bool positive) const
{
    if (c_.empty())
        return 0;
    int s = sgn(c_.back());
    if (!positive && degree() % 2 == 1)
        s = -s;
    return s;
}

IntPoly IntPoly::derivative() const
{
    if (c_.size() <= 1)
        return {};
    std::vector<mpz_class> d(c_.size() - 1);
    for (size_t i = 1; i < c_.size(); ++i)
        d[i - 1] = c_[i] * static_cast<unsigned long>(i);
    return IntPoly(std::move(d));
}

mpz_class IntPoly::content() const
{
    mpz_class g = 0;
    for (auto const& v : c_) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
        if (g == 1)
            break;
    }
    return g;
}

IntPoly IntPoly::primitive_part() const
{
    if (c_.empty())
        return {};
    mpz_class g = content();
    if (c_.back() < 0)
        g = -g;
    IntPoly r = *this;
    if (g != 1)
        for (auto& v : r.c_)
            mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), g.get_mpz_t());
    return r;
}

IntPoly IntPoly::reflect() const
{
    IntPoly r = *this;
    for (size_t i = 1; i < r.c_.size(); i += 2)
        r.c_[i] = -r.c_[i];
    return r;
}

IntPoly IntPoly::shift(int k) const
{
    if (c_.empty() || k == 0)
        return *this;
    std::vector<mpz_class> v(c_.size() + static_cast<size_t>(k));
    std::copy(c_.begin(), c_.end(), v.begin() + k);
    return IntPoly(std::move(v));
}

IntPoly& IntPoly::operator+=(IntPoly const& o)
{
    if (o.c_.size() > c_.size())
        c_.resize(o.c_.size());
    for (size_t i = 0; i < o.c_.size(); ++i)
        c_[i] += o.c_[i];
    normalize();
    return *this;
}

IntPoly& IntPoly::operator-=(IntPoly const& o)
{
    if (o.c_.size() > c_.size())
        c_.resize(o.c_.size());
    for (size_t i = 0; i < o.c_.size(); ++i)
        c_[i] -= o.c_[i];
    normalize();
    return *this;
}

IntPoly& IntPoly::operator*=(mpz_class const& s)
{
    if (s == 0) {
        c_.clear();
        return *this;
    }
    for (auto& v : c_)
        v *= s;
    return *this;
}

IntPoly IntPoly::operator-() const
{
    IntPoly r = *this;
    for (auto& v : r.c_)
        v = -v;
    return r;
}

IntPoly operator*(IntPoly const& a, IntPoly const& b)
{
    if (a.is_zero() || b.is_zero())
        return {};
    std::vector<mpz_class> r(a.c_.size() + b.c_.size() - 1);
    for (size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i] == 0)
            continue;
        for (size_t j = 0; j < b.c_.size(); ++j)
            mpz_addmul(r[i + j].get_mpz_t(), a.c_[i].get_mpz_t(), b.c_[j].get_mpz_t());
    }
    return IntPoly(std::move(r));
}

IntPoly IntPoly::mod_symmetric(mpz_class const& m) const
{
    mpz_class half = m / 2;
    std::vector<mpz_class> v(c_.size());
    for (size_t i = 0; i < c_.size(); ++i) {
        mpz_fdiv_r(v[i].get_mpz_t(), c_[i].get_mpz_t(), m.get_mpz_t());
        if (v[i] > half)
            v[i] -= m;
    }
    return IntPoly(std::move(v));
}

bool operator<(IntPoly const& a, IntPoly const& b)
{
    if (a.degree() != b.degree())
        return a.degree() < b.degree();
    for (int i = a.degree(); i >= 0; --i) {
        auto const& x = a.c_[static_cast<size_t>(i)];
        auto const& y = b.c_[static_cast<size_t>(i)];
        if (x != y)
            return x < y;
    }
    return false;
}

std::string IntPoly::to_string(char var) const
{
    if (c_.empty())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (int i = degree(); i >= 0; --i) {
        mpz_class const& v = c_[static_cast<size_t>(i)];
        if (v == 0)
            continue;
        mpz_class a = abs(v);
        if (first)
            os << (v < 0 ? "-" : "");
        else
            os << (v < 0 ? " - " : " + ");
        first = false;
        if (i == 0 || a != 1)
            os << a;
        if (i >= 1)
            os << var;
        if (i >= 2)
            os << '^' << i;
    }
    return os.str();
}

std::vector<std::string> IntPoly::to_strings() const
{
    std::vector<std::string> r;
    r.reserve(c_.size());
    for (auto const& v : c_)
        r.push_back(v.get_str());
    if (r.empty())
        r.push_back("0");
    return r;
}

IntPoly IntPoly::from_strings(std::vector<std::string> const& ascending)
{
    std::vector<mpz_class> v;
    v.reserve(ascending.size());
    for (auto const& s : ascending) {
        mpz_class z;
        if (s.empty() || z.set_str(s, 10) != 0)
            throw std::invalid_argument("not an integer coefficient: '" + s + "'");
        v.push_back(std::move(z));
    }
    return IntPoly(std::move(v));
}

std::ostream& operator<<(std::ostream& os, IntPoly const& p)
{
    return os << p.to_string();
}

IntPoly pow(IntPoly const& base, unsigned e)
{
    IntPoly r = IntPoly::constant(1), b = base;
    while (e) {
        if (e & 1)
            r = r * b;
        e >>= 1;
        if (e)
            b = b * b;
    }
    return r;
}

std::pair<IntPoly, IntPoly> divrem_monic(IntPoly const& a, IntPoly const& b)
{
    if (b.is_zero() || abs(b.leading()) != 1)
        throw std::invalid_argument("divrem_monic: divisor must have unit leading coefficient");
    std::vector<mpz_class> r = a.coeffs();
    int db = b.degree();
    int da = a.degree();
    if (da < db)
        return {IntPoly{}, a};
    std::vector<mpz_class> q(static_cast<size_t>(da - db) + 1);
    bool neg = b.leading() < 0;
    for (int i = da; i >= db; --i) {
        mpz_class t = r[static_cast<size_t>(i)];
        if (neg)
            t = -t;
        q[static_cast<size_t>(i - db)] = t;
        if (t == 0)
            continue;
        for (int j = 0; j <= db; ++j)
            mpz_submul(r[static_cast<size_t>(i - db + j)].get_mpz_t(), t.get_mpz_t(),
                       b.coeffs()[static_cast<size_t>(j)].get_mpz_t());
    }
    return {IntPoly(std::move(q)), IntPoly(std::move(r))};
}

IntPoly pseudo_remainder(IntPoly const& a, IntPoly const& b)
{
    if (b.is_zero())
        throw std::invalid_argument("pseudo_remainder by zero");
    int db = b.degree();
    std::vector<mpz_class> r = a.coeffs();
    mpz_class const& lc = b.leading();
    int da = a.degree();
    if (da < db)
        return a;
    for (int i = da; i >= db; --i) {
        mpz_class t = r[static_cast<size_t>(i)];
        for (auto& v : r)
            v *= lc;
        if (t == 0)
            continue;
        for (int j = 0; j <= db; ++j)
            mpz_submul(r[static_cast<size_t>(i - db + j)].get_mpz_t(), t.get_mpz_t(),
                       b.coeffs()[static_cast<size_t>(j)].get_mpz_t());
    }
    r.resize(static_cast<size_t>(db));
    return IntPoly(std::move(r));
}

bool divides_exactly(IntPoly const& b, IntPoly const& a, IntPoly* quotient)
{
    if (b.is_zero())
        throw std::invalid_argument("division by zero polynomial");
    if (a.is_zero()) {
        if (quotient)
            *quotient = {};
        return true;
    }
    int db = b.degree(), da = a.degree();
    if (da < db)
        return false;
    std::vector<mpz_class> r = a.coeffs();
    std::vector<mpz_class> q(static_cast<size_t>(da - db) + 1);
    mpz_class const& lc = b.leading();
    for (int i = da; i >= db; --i) {
        mpz_class& top = r[static_cast<size_t>(i)];
        if (top == 0)
            continue;
        if (!mpz_divisible_p(top.get_mpz_t(), lc.get_mpz_t()))
            return false;
        mpz_class t;
        mpz_divexact(t.get_mpz_t(), top.get_mpz_t(), lc.get_mpz_t());
        q[static_cast<size_t>(i - db)] = t;
        for (int j = 0; j <= db; ++j)
            mpz_submul(r[static_cast<size_t>(i - db + j)].get_mpz_t(), t.get_mpz_t(),
                       b.coeffs()[static_cast<size_t>(j)].get_mpz_t());
    }
    for (int i = 0; i < db; ++i)
        if (r[static_cast<size_t>(i)] != 0)
            return false;
    if (quotient)
        *quotient = IntPoly(std::move(q));
    return true;
}

IntPoly gcd(IntPoly const& a, IntPoly const& b)
{
    IntPoly x = a.primitive_part(), y = b.primitive_part();
    if (x.degree() < y.degree())
        std::swap(x, y);
    while (!y.is_zero()) {
        IntPoly r = pseudo_remainder(x, y).primitive_part();
        x = std::move(y);
        y = std::move(r);
    }
    return x;
}

IntPoly squarefree_part(IntPoly const& p)
{
    if (p.degree() <= 0)
        return p.primitive_part();
    IntPoly g = gcd(p, p.derivative());
    IntPoly pp = p.primitive_part();
    if (g.degree() == 0)
        return pp;
    IntPoly q;
    if (!divides_exactly(g, pp, &q))
        throw std::logic_error("squarefree_part: gcd does not divide");
    return q.primitive_part();
}

IntPoly compose(IntPoly const& p, IntPoly const& r)
{
    IntPoly acc;
    for (int i = p.degree(); i >= 0; --i) {
        acc = acc * r;
        acc += IntPoly::constant(p.coeff(i));
    }
    return acc;
}

} // namespace noncyclic
