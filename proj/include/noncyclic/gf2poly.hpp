#ifndef NONCYCLIC_GF2POLY_HPP
#define NONCYCLIC_GF2POLY_HPP

#include "noncyclic/intpoly.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace noncyclic {

/// Polynomial over GF(2); bit i is the coefficient of x^i.
class Gf2Poly {
  public:
    Gf2Poly() = default;
    /// Low bits of a single word, for small literals: 0b10011 = x^4 + x + 1.
    static Gf2Poly from_word(std::uint64_t w);
    static Gf2Poly from_exponents(std::vector<int> const& exps);
    static Gf2Poly reduce(IntPoly const& p);

    int degree() const;
    bool is_zero() const { return words_.empty(); }
    bool bit(int i) const;
    void set_bit(int i, bool v = true);

    Gf2Poly& operator^=(Gf2Poly const& o);
    friend Gf2Poly operator^(Gf2Poly a, Gf2Poly const& b) { return a ^= b; }
    friend Gf2Poly operator*(Gf2Poly const& a, Gf2Poly const& b);
    friend bool operator==(Gf2Poly const& a, Gf2Poly const& b) { return a.words_ == b.words_; }

    Gf2Poly mod(Gf2Poly const& m) const;
    std::string to_string() const;

  private:
    void trim();
    std::vector<std::uint64_t> words_;
};

Gf2Poly gcd(Gf2Poly a, Gf2Poly b);
Gf2Poly mulmod(Gf2Poly const& a, Gf2Poly const& b, Gf2Poly const& m);

/// Rabin test: x^(2^d) = x mod p and gcd(x^(2^(d/t)) - x, p) = 1 for primes t | d.
bool is_irreducible_gf2(Gf2Poly const& p);

} // namespace noncyclic

#endif
