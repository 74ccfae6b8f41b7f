#include "noncyclic/weil.hpp"

#include "noncyclic/integer_factor.hpp"
#include "noncyclic/irreducible.hpp"
#include "noncyclic/realroots.hpp"

namespace noncyclic {

FieldSize::FieldSize(long q) : q_(q), p_(0), r_(0)
{
    auto pr = prime_power_decomposition(q);
    if (!pr)
        throw InvalidQ("q = " + std::to_string(q) + " is not a prime power");
    p_ = pr->first;
    r_ = pr->second;
}

CaseClass case_of(FieldSize const& q)
{
    if (q.q() % 3 == 0)
        return CaseClass::QThree;
    return q.q() % 3 == 1 ? CaseClass::QMinus : CaseClass::QPlus;
}

int case_point(CaseClass c)
{
    switch (c) {
    case CaseClass::QPlus:
        return 0;
    case CaseClass::QMinus:
        return 2;
    case CaseClass::QThree:
        return 1;
    }
    return 0;
}

long case_min_q(CaseClass c)
{
    switch (c) {
    case CaseClass::QPlus:
        return 2;
    case CaseClass::QMinus:
        return 4;
    case CaseClass::QThree:
        return 3;
    }
    return 0;
}

std::string to_string(CaseClass c)
{
    switch (c) {
    case CaseClass::QPlus:
        return "3|q+1";
    case CaseClass::QMinus:
        return "3|q-1";
    case CaseClass::QThree:
        return "q=3^r";
    }
    return "?";
}

CaseClass case_from_string(std::string const& s)
{
    if (s == "3|q+1" || s == "QPlus")
        return CaseClass::QPlus;
    if (s == "3|q-1" || s == "QMinus")
        return CaseClass::QMinus;
    if (s == "q=3^r" || s == "QThree")
        return CaseClass::QThree;
    throw std::invalid_argument("unknown case class '" + s + "'");
}

IntPoly expand_h_to_f_unchecked(IntPoly const& h, mpz_class const& q)
{
    int g = h.degree();
    IntPoly quad(std::vector<mpz_class>{q, 0, 1});
    IntPoly f;
    IntPoly qpow = IntPoly::constant(1);
    for (int j = 0; j <= g; ++j) {
        f += (qpow * h.coeff(j)).shift(g - j);
        qpow = qpow * quad;
    }
    return f;
}

WeilPoly expand_h_to_f(IntPoly const& h, FieldSize const& q)
{
    if (h.degree() < 1 || !h.is_monic())
        throw std::invalid_argument("expand_h_to_f: h must be monic of degree >= 1");
    if (!is_totally_real_within_sq(h, mpq_class(4 * q.z())))
        throw RootBoundViolation("h = " + h.to_string() + " has a root outside [-2 sqrt(q), 2 sqrt(q)] for q = " +
                                 std::to_string(q.q()));
    return WeilPoly{expand_h_to_f_unchecked(h, q.z()), q, h.degree()};
}

IntPoly trace_poly(IntPoly const& f, mpz_class const& q)
{
    if (f.degree() < 2 || f.degree() % 2 != 0 || !f.is_monic())
        throw NotWeilShape("f must be monic of even positive degree");
    int g = f.degree() / 2;
    IntPoly quad(std::vector<mpz_class>{q, 0, 1});
    std::vector<IntPoly> basis; // basis[j] = (x^2 + q)^j x^(g - j), degree g + j
    IntPoly qpow = IntPoly::constant(1);
    for (int j = 0; j <= g; ++j) {
        basis.push_back(qpow.shift(g - j));
        qpow = qpow * quad;
    }
    IntPoly r = f;
    std::vector<mpz_class> c(static_cast<size_t>(g) + 1);
    for (int j = g; j >= 0; --j) {
        c[static_cast<size_t>(j)] = r.coeff(g + j);
        r -= basis[static_cast<size_t>(j)] * c[static_cast<size_t>(j)];
    }
    if (!r.is_zero())
        throw NotWeilShape("f = " + f.to_string() + " does not satisfy the functional equation for q = " + q.get_str());
    return IntPoly(std::move(c));
}

bool is_weil(IntPoly const& f, FieldSize const& q)
{
    if (!f.is_monic() || f.degree() < 2 || f.degree() % 2 != 0)
        return false;
    try {
        IntPoly h = trace_poly(f, q.z());
        return is_totally_real_within_sq(h, mpq_class(4 * q.z()));
    } catch (NotWeilShape const&) {
        return false;
    }
}

bool is_ordinary(IntPoly const& h, FieldSize const& q)
{
    mpz_class h0 = h.coeff(0), g;
    mpz_class qz = q.z();
    mpz_gcd(g.get_mpz_t(), h0.get_mpz_t(), qz.get_mpz_t());
    return g == 1;
}

bool is_simple_ordinary_class(IntPoly const& f, FieldSize const& q)
{
    if (!is_weil(f, q))
        return false;
    return is_irreducible_q(f) && is_ordinary(trace_poly(f, q.z()), q);
}

bool satisfies_functional_equation(IntPoly const& f, mpz_class const& q)
{
    if (f.degree() % 2 != 0)
        return false;
    int g = f.degree() / 2;
    mpz_class qp = 1;
    for (int i = g; i >= 0; --i) {
        // here qp = q^(g - i)
        if (f.coeff(2 * g - i) * qp != f.coeff(i))
            return false;
        qp *= q;
    }
    return true;
}

} // namespace noncyclic
