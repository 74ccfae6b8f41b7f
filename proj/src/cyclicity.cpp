#include "noncyclic/cyclicity.hpp"

namespace noncyclic {

bool CyclicityReport::has_witness(long l) const
{
    for (auto const& w : witnesses)
        if (w == l)
            return true;
    return false;
}

bool coprime_with_radical_quotient(mpz_class const& fp1, std::vector<PrimePower> const& f1_factors)
{
    mpz_class hat = 1, g;
    for (auto const& [l, e] : f1_factors)
        for (unsigned i = 1; i < e; ++i)
            hat *= l;
    mpz_gcd(g.get_mpz_t(), fp1.get_mpz_t(), hat.get_mpz_t());
    return g == 1;
}

std::vector<mpz_class> witness_primes(mpz_class const& fp1, std::vector<PrimePower> const& f1_factors)
{
    std::vector<mpz_class> w;
    for (auto const& [l, e] : f1_factors)
        if (e >= 2 && mpz_divisible_p(fp1.get_mpz_t(), l.get_mpz_t()))
            w.push_back(l);
    return w;
}

CyclicityReport cyclicity_report(IntPoly const& f)
{
    CyclicityReport r;
    r.f1 = f.eval(1);
    r.fp1 = f.derivative().eval(1);
    if (r.f1 == 0)
        throw DegenerateValue("f(1) = 0; f = " + f.to_string() + " is not a Weil polynomial");
    auto split = radical_and_quotient(r.f1);
    r.f1_factors = std::move(split.factors);
    r.rad_f1 = std::move(split.radical);
    r.hat_f1 = std::move(split.quotient);

    r.witnesses = witness_primes(r.fp1, r.f1_factors);
    mpz_class g;
    mpz_gcd(g.get_mpz_t(), r.fp1.get_mpz_t(), r.hat_f1.get_mpz_t());
    r.is_cyclic = (g == 1);
    // Both formulations of the criterion must agree.
    if (r.is_cyclic != r.witnesses.empty())
        throw std::logic_error("cyclicity formulations disagree for f = " + f.to_string());
    return r;
}

CyclicityReport cyclicity_report(WeilPoly const& w)
{
    CyclicityReport r = cyclicity_report(w.f);
    if (r.f1 <= 0)
        throw std::logic_error("f(1) <= 0 for a Weil polynomial: " + w.f.to_string());
    return r;
}

bool h_case_conditions(IntPoly const& h, CaseClass c)
{
    mpz_class n = case_point(c);
    mpz_class hv = h.eval(n);
    mpz_class dv = h.derivative().eval(n);
    return mpz_divisible_ui_p(dv.get_mpz_t(), 3) && mpz_divisible_ui_p(hv.get_mpz_t(), 9);
}

} // namespace noncyclic
