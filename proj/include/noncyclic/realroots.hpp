#ifndef NONCYCLIC_REALROOTS_HPP
#define NONCYCLIC_REALROOTS_HPP

#include "noncyclic/intpoly.hpp"

#include <optional>
#include <stdexcept>
#include <vector>

namespace noncyclic {

/// An endpoint of a half-open interval (lo, hi]; nullopt stands for -inf / +inf.
using Endpoint = std::optional<mpq_class>;

struct RootCount {
    Endpoint lo;
    Endpoint hi;
    int count = 0;
};

struct NoRealRoot : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/* Sturm chain of a squarefree polynomial. Remainders are scaled by
 * positive factors only, so sign sequences are those of the classical
 * chain.
 */
class SturmChain {
  public:
    explicit SturmChain(IntPoly const& squarefree);

    /// Sign variations at a finite point.
    int variations(mpq_class const& x) const;
    int variations_at_infinity(bool positive) const;
    int variations(Endpoint const& e, bool is_hi) const;

    /// Distinct roots in (lo, hi].
    int count(Endpoint const& lo, Endpoint const& hi) const;

    int degree() const { return chain_.front().degree(); }

  private:
    std::vector<IntPoly> chain_;
};

/// Distinct real roots of p in (lo, hi]. p must be nonzero.
RootCount count_real_roots(IntPoly const& p, Endpoint lo = std::nullopt, Endpoint hi = std::nullopt);

/// True iff every complex root of p is real with square <= bound_sq.
bool is_totally_real_within_sq(IntPoly const& p, mpq_class const& bound_sq);

/// Largest real root within eps.
mpq_class max_real_root_approx(IntPoly const& p, mpq_class const& eps);

/// Largest |root| over the real roots of p within eps.
mpq_class max_abs_real_root_approx(IntPoly const& p, mpq_class const& eps);

/// Cauchy bound: every root has |root| < bound.
mpq_class cauchy_bound(IntPoly const& p);

/* Isolating intervals (lo, hi] for the distinct real roots, refined until
 * hi - lo < width. Sorted ascending.
 */
std::vector<std::pair<mpq_class, mpq_class>> isolate_real_roots(IntPoly const& p, mpq_class const& width);

/// Even polynomial p(x)p(-x) rewritten in y = x^2 (roots are the squares of the roots of p).
IntPoly square_roots_poly(IntPoly const& p);

} // namespace noncyclic

#endif
