#ifndef NONCYCLIC_HSEARCH_HPP
#define NONCYCLIC_HSEARCH_HPP

#include "noncyclic/certificate.hpp"
#include "noncyclic/intpoly.hpp"
#include "noncyclic/weil.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace noncyclic {

struct NotFound : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct ExceptionalCase : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
struct NoValidEntry : std::logic_error {
    using std::logic_error::logic_error;
};

/// One row of the small-dimension table of h polynomials.
struct TableEntry {
    int g = 0;
    IntPoly h;
    CaseClass case_class = CaseClass::QPlus;
    std::string claimed_max_root; ///< three decimals, as printed
    long valid_from_q = 0;
    std::vector<long> h0_primes;
};

/// Parses {"rows": [...]}; throws std::invalid_argument on malformed data.
std::vector<TableEntry> parse_table(Json const& j);

/// The embedded table (parsed once).
std::vector<TableEntry> const& table_entries();

struct TableCheck {
    std::string name;
    bool ok = false;
    std::string detail;
};

struct TableVerification {
    TableEntry entry;
    mpq_class max_abs_root; ///< to within 1e-6
    std::vector<TableCheck> checks;
    bool ok() const;
};

/* Checks a row against its own case: irreducible, totally real, the printed
 * max |root| within 5e-4, max_root^2 <= 4 valid_from_q, the case
 * congruences, and the primes dividing h(0).
 */
TableVerification verify_table_entry(TableEntry const& e);

struct HSearch {
    int g = 2;
    CaseClass case_class = CaseClass::QPlus;
    long coeff_bound = 20;
    long q_floor = 2;
    unsigned long node_budget = 2'000'000;
};

/* Smallest max |root| (ties: IntPoly order) among monic h of degree g that
 * are irreducible, totally real with roots^2 <= 4 q_floor, satisfy the case
 * congruences and have gcd(h(0), q_floor) = 1, with |coefficients| <=
 * coeff_bound. Throws NotFound if the space (or node budget) is exhausted
 * without a hit.
 */
IntPoly find_h(HSearch const& s);

bool is_exceptional_pair(int g, long q);

/// 2 <= g <= 13 outside the exceptional pairs.
Certificate certify_small_g(int g, FieldSize const& q);

/// The listed non-2-cyclic classes for (2,2), (2,3), (3,2).
std::vector<Certificate> certify_exceptional(int g, FieldSize const& q);

/// Dispatch: exceptional pairs, 2 <= g <= 13, g >= 14.
std::vector<Certificate> certify(int g, FieldSize const& q, unsigned jobs = 1);

} // namespace noncyclic

#endif
