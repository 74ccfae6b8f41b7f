#ifndef NONCYCLIC_CYCLICITY_HPP
#define NONCYCLIC_CYCLICITY_HPP

#include "noncyclic/integer_factor.hpp"
#include "noncyclic/weil.hpp"

#include <stdexcept>
#include <vector>

namespace noncyclic {

struct DegenerateValue : std::domain_error {
    using std::domain_error::domain_error;
};

/* Cyclicity of an isogeny class from its Weil polynomial: the class is
 * cyclic iff f'(1) is coprime to f(1)/rad(f(1)). A prime l with l | f'(1)
 * and l^2 | f(1) witnesses a non-cyclic l-primary component.
 *
 * Some statements of the criterion evaluate at 0 instead of 1; every
 * derivation of it evaluates at 1, and so does this code.
 */
struct CyclicityReport {
    mpz_class f1;
    mpz_class fp1;
    std::vector<PrimePower> f1_factors;
    mpz_class rad_f1;
    mpz_class hat_f1;
    std::vector<mpz_class> witnesses;
    bool is_cyclic = true;

    bool has_witness(long l) const;
};

/// gcd(f'(1), f(1)/rad(f(1))) = 1, from a factorization of f(1).
bool coprime_with_radical_quotient(mpz_class const& fp1, std::vector<PrimePower> const& f1_factors);

/// Primes l with l | f'(1) and l^2 | f(1), ascending.
std::vector<mpz_class> witness_primes(mpz_class const& fp1, std::vector<PrimePower> const& f1_factors);

/// Report for an arbitrary polynomial with f(1) != 0.
CyclicityReport cyclicity_report(IntPoly const& f);
CyclicityReport cyclicity_report(WeilPoly const& w);

/// 3 | h'(n) and 9 | h(n) at the case's point n.
bool h_case_conditions(IntPoly const& h, CaseClass c);

} // namespace noncyclic

#endif
