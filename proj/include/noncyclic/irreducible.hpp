#ifndef NONCYCLIC_IRREDUCIBLE_HPP
#define NONCYCLIC_IRREDUCIBLE_HPP

#include "noncyclic/intpoly.hpp"

namespace noncyclic {

/* Irreducibility over Q of a nonconstant integer polynomial (the content
 * is removed first). Tries p mod l for l in {2,3,5,7,11,13}; if none of
 * those reductions is irreducible, runs a complete Zassenhaus search:
 * factorization modulo a good prime, Hensel lifting past a Mignotte-type
 * bound, and recombination of the lifted factors.
 */
bool is_irreducible_q(IntPoly const& p);

/// First l in {2,3,5,7,11,13} with p mod l irreducible of full degree, or 0.
unsigned long irreducibility_witness_prime(IntPoly const& p);

} // namespace noncyclic

#endif
