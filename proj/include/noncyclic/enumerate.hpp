#ifndef NONCYCLIC_ENUMERATE_HPP
#define NONCYCLIC_ENUMERATE_HPP

#include "noncyclic/cyclicity.hpp"
#include "noncyclic/weil.hpp"

#include <functional>
#include <map>
#include <optional>
#include <stdexcept>
#include <vector>

namespace noncyclic {

struct ScaleGuard : std::out_of_range {
    using std::out_of_range::out_of_range;
};

struct TotallyRealSearch {
    int degree = 1;
    mpq_class bound_sq;                  ///< roots satisfy a^2 <= bound_sq
    std::optional<long> coeff_bound;     ///< |c_i| <= coeff_bound for i < degree
    std::optional<unsigned long> node_budget; ///< abort after this many exact checks
};

/* Visits every monic integer polynomial of the given degree whose roots are
 * all real with square <= bound_sq, in lexicographic order of
 * (c_{g-1}, c_{g-2}, ..., c_0). Coefficients are fixed from the top; after
 * each choice the corresponding derivative must itself be totally real in
 * range (Rolle), and the admissible range of the next coefficient is read
 * off the values at the critical points. Returns false if the node budget
 * ran out before the space was exhausted.
 */
bool for_each_totally_real(TotallyRealSearch const& search, std::function<void(IntPoly const&)> const& visit);

/// Desk-scale limits for the public enumerators.
constexpr int enumerate_max_g = 4;
constexpr long enumerate_max_q = 9;

/// All real Weil polynomials h of degree g for q (roots a with a^2 <= 4q).
std::vector<IntPoly> enumerate_real_weil(int g, FieldSize const& q, bool allow_large = false);

/// All q-Weil polynomials of degree 2g.
std::vector<WeilPoly> enumerate_weil(int g, FieldSize const& q, bool allow_large = false);

struct NoncyclicEntry {
    WeilPoly w;
    IntPoly h;
    CyclicityReport report;
    bool irreducible = false;
    bool ordinary = false;
    /// Irreducible and ordinary polynomials are realized by a simple
    /// ordinary isogeny class; other rows are not re-derived here.
    bool realizability_verified() const { return irreducible && ordinary; }
};

struct EnumerationResult {
    int g = 0;
    long q = 0;
    std::size_t total_weil = 0;
    std::vector<NoncyclicEntry> noncyclic;
    std::map<long, std::size_t> witness_prime_profile;
};

EnumerationResult classify_noncyclic(int g, FieldSize const& q, bool allow_large = false, unsigned jobs = 1);

} // namespace noncyclic

#endif
