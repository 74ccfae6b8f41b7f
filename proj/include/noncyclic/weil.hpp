#ifndef NONCYCLIC_WEIL_HPP
#define NONCYCLIC_WEIL_HPP

#include "noncyclic/intpoly.hpp"

#include <stdexcept>
#include <string>

namespace noncyclic {

struct InvalidQ : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
struct RootBoundViolation : std::domain_error {
    using std::domain_error::domain_error;
};
struct NotWeilShape : std::domain_error {
    using std::domain_error::domain_error;
};

/// Size q = p^r of a finite field. Construction validates the prime power.
class FieldSize {
  public:
    explicit FieldSize(long q);
    long q() const { return q_; }
    long p() const { return p_; }
    unsigned r() const { return r_; }
    mpz_class z() const { return mpz_class(q_); }
    friend bool operator==(FieldSize const&, FieldSize const&) = default;

  private:
    long q_;
    long p_;
    unsigned r_;
};

/// Residue class of q that selects the divisibility conditions at l = 3.
enum class CaseClass {
    QPlus,  ///< 3 | q + 1, evaluate at 0
    QMinus, ///< 3 | q - 1, evaluate at 2
    QThree, ///< q = 3^r, evaluate at 1
};

CaseClass case_of(FieldSize const& q);
/// The evaluation point n in {0, 2, 1} for the case.
int case_point(CaseClass c);
/// Smallest prime power in the case: 2, 4, 3.
long case_min_q(CaseClass c);
std::string to_string(CaseClass c);
CaseClass case_from_string(std::string const& s);

/// A q-Weil polynomial of degree 2g.
struct WeilPoly {
    IntPoly f;
    FieldSize q;
    int g;
};

/// A totally real h with its case and the root-square bound it satisfies.
struct RealWeil {
    IntPoly h;
    CaseClass case_class;
    long min_q;
    mpq_class max_root_sq_bound;
};

/// f(x) = x^g h((x^2 + q)/x) = prod (x^2 - a_i x + q) over the roots a_i of h.
IntPoly expand_h_to_f_unchecked(IntPoly const& h, mpz_class const& q);

/// As above, after checking that h is monic and its roots satisfy a^2 <= 4q.
WeilPoly expand_h_to_f(IntPoly const& h, FieldSize const& q);

/// Inverse of the expansion; throws NotWeilShape if f is not in its image.
IntPoly trace_poly(IntPoly const& f, mpz_class const& q);

bool is_weil(IntPoly const& f, FieldSize const& q);

/// gcd(h(0), q) = 1.
bool is_ordinary(IntPoly const& h, FieldSize const& q);

/// is_weil, irreducible over Q, and ordinary.
bool is_simple_ordinary_class(IntPoly const& f, FieldSize const& q);

/// a_(2g-i) = q^(g-i) a_i for the coefficients of f.
bool satisfies_functional_equation(IntPoly const& f, mpz_class const& q);

} // namespace noncyclic

#endif
