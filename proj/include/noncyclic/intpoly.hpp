#ifndef NONCYCLIC_INTPOLY_HPP
#define NONCYCLIC_INTPOLY_HPP

#include <gmpxx.h>

#include <initializer_list>
#include <ostream>
#include <string>
#include <vector>

namespace noncyclic {

/* Dense univariate polynomial with unbounded integer coefficients.
 * coeff(i) is the coefficient of x^i. The representation is kept
 * canonical: no zero coefficient is stored above the degree, and the
 * zero polynomial has an empty coefficient vector (degree -1).
 */
class IntPoly {
  public:
    IntPoly() = default;
    IntPoly(std::initializer_list<long> ascending);
    explicit IntPoly(std::vector<mpz_class> ascending);

    static IntPoly constant(mpz_class c);
    static IntPoly monomial(mpz_class c, int degree);
    static IntPoly x() { return monomial(1, 1); }

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    bool is_monic() const { return !c_.empty() && c_.back() == 1; }

    /// Zero above the degree.
    mpz_class coeff(int i) const;
    mpz_class const& leading() const { return c_.back(); }
    std::vector<mpz_class> const& coeffs() const { return c_; }

    mpz_class eval(mpz_class const& n) const;
    /// Sign of p(r) for a rational r, computed without division.
    int sign_at(mpq_class const& r) const;
    /// Sign of p(x) as x -> +inf (positive = true) or -inf.
    int sign_at_infinity(bool positive) const;

    IntPoly derivative() const;
    mpz_class content() const;
    /// Divides out the content and makes the leading coefficient positive.
    IntPoly primitive_part() const;
    /// p(-x)
    IntPoly reflect() const;
    /// Multiplies by x^k.
    IntPoly shift(int k) const;

    IntPoly& operator+=(IntPoly const& o);
    IntPoly& operator-=(IntPoly const& o);
    IntPoly& operator*=(mpz_class const& s);
    IntPoly operator-() const;

    friend IntPoly operator+(IntPoly a, IntPoly const& b) { return a += b; }
    friend IntPoly operator-(IntPoly a, IntPoly const& b) { return a -= b; }
    friend IntPoly operator*(IntPoly a, mpz_class const& s) { return a *= s; }
    friend IntPoly operator*(mpz_class const& s, IntPoly a) { return a *= s; }
    friend IntPoly operator*(IntPoly const& a, IntPoly const& b);
    friend bool operator==(IntPoly const& a, IntPoly const& b) { return a.c_ == b.c_; }

    /// Coefficients reduced into the symmetric range (-m/2, m/2].
    IntPoly mod_symmetric(mpz_class const& m) const;

    /// Lexicographic order on (degree, coefficients from the top).
    friend bool operator<(IntPoly const& a, IntPoly const& b);

    std::string to_string(char var = 'x') const;
    /// Ascending-degree decimal strings, the serialized form.
    std::vector<std::string> to_strings() const;
    static IntPoly from_strings(std::vector<std::string> const& ascending);

  private:
    void normalize();
    std::vector<mpz_class> c_;
};

std::ostream& operator<<(std::ostream& os, IntPoly const& p);

IntPoly pow(IntPoly const& base, unsigned e);

/// Division by a divisor whose leading coefficient is +-1.
/// Returns {quotient, remainder}.
std::pair<IntPoly, IntPoly> divrem_monic(IntPoly const& a, IntPoly const& b);

/// Pseudo-remainder: lc(b)^(deg a - deg b + 1) * a mod b.
IntPoly pseudo_remainder(IntPoly const& a, IntPoly const& b);

/// Exact division over Z. Returns false if b does not divide a.
bool divides_exactly(IntPoly const& b, IntPoly const& a, IntPoly* quotient = nullptr);

/// Primitive gcd over Z[x], positive leading coefficient.
IntPoly gcd(IntPoly const& a, IntPoly const& b);

/// p / gcd(p, p'), primitive.
IntPoly squarefree_part(IntPoly const& p);

/// Composition p(r(x)).
IntPoly compose(IntPoly const& p, IntPoly const& r);

} // namespace noncyclic

#endif
