#ifndef NONCYCLIC_SRC_MODPOLY_HPP
#define NONCYCLIC_SRC_MODPOLY_HPP

// Internal: dense polynomials over GF(p) for word-sized p.

#include "noncyclic/intpoly.hpp"

#include <cstdint>
#include <random>
#include <vector>

namespace noncyclic::detail {

using u64 = std::uint64_t;

/// Ascending coefficients in [0, p), trimmed.
using ModPoly = std::vector<u64>;

class Zp {
  public:
    explicit Zp(u64 p) : p_(p) {}
    u64 modulus() const { return p_; }

    u64 add(u64 a, u64 b) const { return (a + b) % p_; }
    u64 sub(u64 a, u64 b) const { return (a + p_ - b) % p_; }
    u64 mul(u64 a, u64 b) const { return static_cast<u64>((static_cast<unsigned __int128>(a) * b) % p_); }
    u64 inv(u64 a) const;
    u64 pow(u64 a, u64 e) const;

    ModPoly reduce(IntPoly const& f) const;
    IntPoly lift(ModPoly const& f) const;

    static void trim(ModPoly& a);
    ModPoly add(ModPoly const& a, ModPoly const& b) const;
    ModPoly sub(ModPoly const& a, ModPoly const& b) const;
    ModPoly mul(ModPoly const& a, ModPoly const& b) const;
    ModPoly scale(ModPoly const& a, u64 s) const;
    /// {quotient, remainder}
    std::pair<ModPoly, ModPoly> divrem(ModPoly const& a, ModPoly const& b) const;
    ModPoly rem(ModPoly const& a, ModPoly const& b) const { return divrem(a, b).second; }
    ModPoly monic(ModPoly const& a) const;
    ModPoly gcd(ModPoly a, ModPoly b) const;
    /// Returns g = gcd(a, b) monic and s, t with s a + t b = g.
    ModPoly xgcd(ModPoly const& a, ModPoly const& b, ModPoly& s, ModPoly& t) const;
    ModPoly derivative(ModPoly const& a) const;
    ModPoly powmod(ModPoly base, mpz_class e, ModPoly const& m) const;

    static int degree(ModPoly const& a) { return static_cast<int>(a.size()) - 1; }

    /// Rabin irreducibility test for a polynomial of degree >= 1.
    bool is_irreducible(ModPoly const& f) const;

    /// Degrees of the irreducible factors of a squarefree monic f (distinct-degree factorization).
    std::vector<int> factor_degrees(ModPoly const& f) const;

    /// Complete factorization of a squarefree monic f into monic irreducibles (p odd).
    std::vector<ModPoly> factor_squarefree(ModPoly const& f, std::mt19937_64& rng) const;

  private:
    std::vector<std::pair<ModPoly, int>> distinct_degree(ModPoly f) const;
    void equal_degree(ModPoly const& f, int d, std::mt19937_64& rng, std::vector<ModPoly>& out) const;

    u64 p_;
};

} // namespace noncyclic::detail

#endif
