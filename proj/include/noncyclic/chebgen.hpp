#ifndef NONCYCLIC_CHEBGEN_HPP
#define NONCYCLIC_CHEBGEN_HPP

#include "noncyclic/certificate.hpp"
#include "noncyclic/gf2poly.hpp"
#include "noncyclic/intpoly.hpp"
#include "noncyclic/weil.hpp"

#include <array>
#include <stdexcept>
#include <string>
#include <vector>

namespace noncyclic {

struct SeedNotFound : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ConstructionFailed : std::runtime_error {
    ConstructionFailed(std::string check, std::string detail)
        : std::runtime_error("construction failed at check '" + check + "': " + detail), check(std::move(check))
    {
    }
    std::string check;
};

/* Scaled Chebyshev polynomials 2^(1+i/2) C_i(x / 2^(3/2)) for i >= 1, with
 * T_1 = x and T_{i+1} = x T_i - 2 T_{i-1}. The recurrence is seeded with 2
 * at index 0 (the value of the scaled formula), while cheb(0) returns the
 * basis element 1 used when assembling h.
 */
IntPoly cheb(int i);

/* h = T_g + a_s T_{g-s} + ... + a_{g-1} T_1 + a_g T_0 with a_1 = ... = a_{s-1} = 0.
 * coeffs[i] is a_i for i in [s, g]; entries below s are zero.
 */
struct CandidateForm {
    int g = 0;
    int s = 4;
    std::vector<long> coeffs;

    long a(int i) const { return coeffs[static_cast<size_t>(i)]; }
    long& a(int i) { return coeffs[static_cast<size_t>(i)]; }
    /// (a_s, ..., a_g)
    std::vector<long> tail() const;
};

IntPoly assemble(CandidateForm const& cand);

/// x^g + a_s x^(g-s) + ... + a_g over GF(2).
Gf2Poly reduce_mod2(CandidateForm const& cand);

/// First (a_s, ..., a_g) in {0,1}^(g-s+1), lexicographic, with an irreducible GF(2) image.
CandidateForm find_f2_seed(int g, int s = 4, unsigned jobs = 1);

/// Residue -> delta maps for the derivative (mod 3) and value (mod 9) conditions.
extern std::array<long, 3> const derivative_deltas;
extern std::array<long, 9> const value_deltas;

struct DeltaPair {
    long a_g;
    long a_g_minus_2;
};
/// Adjustment of (a_g, a_{g-2}) for q = 3^r, indexed by h(0) mod 3 and h(1) mod 9.
DeltaPair q3_table_delta(int h0_mod3, int h1_mod9);

struct Adjustment {
    long delta_g_minus_1 = 0;
    long delta_g = 0;
    long delta_g_minus_2 = 0;
    long coprimality_shift = 0;
    /// "table" (the residue tables alone sufficed) or "solved" (q = 3^r
    /// fallback where the table's a_{g-2} step broke 3 | h'(1)).
    std::string route = "table";
};

struct AdjustedCandidate {
    CandidateForm cand;
    Adjustment adj;
};

AdjustedCandidate adjust_for_case(CandidateForm const& seed, CaseClass c);

/// Adds +-18 to a_g if gcd(h(0), q) > 1, keeping |a_g| <= 17.
void fix_coprimality(AdjustedCandidate& ac, FieldSize const& q);

/* Upper-bound sum  sum_{i=s}^{g-1} |a_i| / 2^(i/2) + |a_g| / 2^(g/2 + 1),
 * held exactly as rational + sqrt_half * (1/sqrt 2).
 */
struct HoweBound {
    mpq_class rational;
    mpq_class sqrt_half;
    bool below_one = false;
    double approx() const;
};

HoweBound howe_bound(CandidateForm const& cand);

/// g >= 14: seed search, adjustment, independent verification, certificate.
Certificate construct_large_g(int g, FieldSize const& q, unsigned jobs = 1);

} // namespace noncyclic

#endif
