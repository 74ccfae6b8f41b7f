#include "noncyclic/chebgen.hpp"

#include "noncyclic/cyclicity.hpp"
#include "noncyclic/irreducible.hpp"
#include "noncyclic/parallel.hpp"
#include "noncyclic/realroots.hpp"

#include <cmath>
#include <cstdint>
#include <optional>

namespace noncyclic {

std::array<long, 3> const derivative_deltas{0, 2, -2};
std::array<long, 9> const value_deltas{0, 8, -2, 6, -4, 4, -6, 2, -8};

namespace {

// [h(0) mod 3][h(1) mod 9] -> (delta a_g, delta a_{g-2})
constexpr DeltaPair q3_table[3][9] = {
    {{6, 2}, {8, 0}, {-2, 0}, {-6, 2}, {-4, 0}, {4, 0}, {0, 2}, {2, 0}, {-8, 0}},
    {{0, 0}, {-4, 2}, {-2, 0}, {6, 0}, {2, 2}, {4, 0}, {-6, 0}, {8, 2}, {-8, 0}},
    {{0, 0}, {8, 0}, {4, 2}, {6, 0}, {-4, 0}, {-8, 2}, {-6, 0}, {2, 0}, {-2, 2}},
};

int residue(mpz_class const& v, unsigned long m)
{
    return static_cast<int>(mpz_fdiv_ui(v.get_mpz_t(), m));
}

bool q3_conditions(IntPoly const& h)
{
    return residue(h.derivative().eval(1), 3) == 0 && residue(h.eval(1), 9) == 0 && residue(h.eval(0), 3) != 0;
}

/// Bit pattern -> (a_s, ..., a_g), a_s taken from the most significant bit.
CandidateForm from_index(int g, int s, std::uint64_t k)
{
    CandidateForm c{g, s, std::vector<long>(static_cast<size_t>(g) + 1, 0)};
    int w = g - s + 1;
    for (int i = 0; i < w; ++i)
        c.a(s + i) = static_cast<long>((k >> (w - 1 - i)) & 1u);
    return c;
}

} // namespace

IntPoly cheb(int i)
{
    if (i < 0)
        throw std::invalid_argument("cheb: negative index");
    if (i == 0)
        return IntPoly{1};
    IntPoly prev{2}, cur = IntPoly::x();
    IntPoly const x = IntPoly::x();
    for (int k = 1; k < i; ++k) {
        IntPoly next = x * cur - prev * mpz_class(2);
        prev = std::move(cur);
        cur = std::move(next);
    }
    return cur;
}

std::vector<long> CandidateForm::tail() const
{
    return {coeffs.begin() + s, coeffs.end()};
}

IntPoly assemble(CandidateForm const& cand)
{
    // T_0..T_g in one pass.
    std::vector<IntPoly> t{IntPoly{1}};
    if (cand.g >= 1) {
        IntPoly prev{2}, cur = IntPoly::x();
        t.push_back(cur);
        for (int k = 1; k < cand.g; ++k) {
            IntPoly next = IntPoly::x() * cur - prev * mpz_class(2);
            prev = std::move(cur);
            cur = std::move(next);
            t.push_back(cur);
        }
    }
    IntPoly h = t[static_cast<size_t>(cand.g)];
    for (int i = 1; i <= cand.g; ++i)
        if (cand.a(i) != 0)
            h += t[static_cast<size_t>(cand.g - i)] * mpz_class(cand.a(i));
    return h;
}

Gf2Poly reduce_mod2(CandidateForm const& cand)
{
    Gf2Poly p;
    p.set_bit(cand.g);
    for (int i = 1; i <= cand.g; ++i)
        if (cand.a(i) % 2 != 0)
            p.set_bit(cand.g - i);
    return p;
}

CandidateForm find_f2_seed(int g, int s, unsigned jobs)
{
    if (s < 1 || g < s + 2)
        throw std::invalid_argument("find_f2_seed: need 1 <= s <= g - 2");
    int w = g - s + 1;
    if (w > 62)
        throw std::invalid_argument("find_f2_seed: seed space too large");
    std::uint64_t const total = std::uint64_t{1} << w;
    std::uint64_t const block = 1024;
    jobs = std::max(1u, jobs);
    // Rounds of `jobs` consecutive blocks; the lowest hit of the first round with any hit wins.
    for (std::uint64_t start = 0; start < total; start += block * jobs) {
        std::vector<std::optional<std::uint64_t>> hits(jobs);
        parallel_for(jobs, jobs, [&](std::size_t b) {
            std::uint64_t lo = start + b * block;
            std::uint64_t hi = std::min(total, lo + block);
            for (std::uint64_t k = lo; k < hi; ++k) {
                if ((k & 1u) == 0) // a_g = 0 gives x | h
                    continue;
                if (is_irreducible_gf2(reduce_mod2(from_index(g, s, k)))) {
                    hits[b] = k;
                    return;
                }
            }
        });
        for (auto const& h : hits)
            if (h)
                return from_index(g, s, *h);
    }
    throw SeedNotFound("no irreducible GF(2) seed for g = " + std::to_string(g) + ", s = " + std::to_string(s));
}

DeltaPair q3_table_delta(int h0_mod3, int h1_mod9)
{
    if (h0_mod3 < 0 || h0_mod3 > 2 || h1_mod9 < 0 || h1_mod9 > 8)
        throw std::out_of_range("q3_table_delta: residue out of range");
    return q3_table[h0_mod3][h1_mod9];
}

AdjustedCandidate adjust_for_case(CandidateForm const& seed, CaseClass c)
{
    int g = seed.g;
    if (g < seed.s + 2)
        throw std::invalid_argument("adjust_for_case: need g >= s + 2");
    AdjustedCandidate ac{seed, {}};
    int n = case_point(c);

    long d1 = derivative_deltas[static_cast<size_t>(residue(assemble(ac.cand).derivative().eval(n), 3))];
    ac.cand.a(g - 1) += d1;
    ac.adj.delta_g_minus_1 = d1;

    if (c != CaseClass::QThree) {
        long d0 = value_deltas[static_cast<size_t>(residue(assemble(ac.cand).eval(n), 9))];
        ac.cand.a(g) += d0;
        ac.adj.delta_g = d0;
        return ac;
    }

    IntPoly h = assemble(ac.cand);
    DeltaPair dp = q3_table_delta(residue(h.eval(0), 3), residue(h.eval(1), 9));
    ac.cand.a(g) += dp.a_g;
    ac.cand.a(g - 2) += dp.a_g_minus_2;
    ac.adj.delta_g = dp.a_g;
    ac.adj.delta_g_minus_2 = dp.a_g_minus_2;
    if (q3_conditions(assemble(ac.cand)))
        return ac;

    // The a_{g-2} step moved h'(1) by 2 * delta; solve the three conditions jointly.
    static constexpr long small_steps[] = {0, 2, -2};
    static constexpr long value_steps[] = {0, 2, -2, 4, -4, 6, -6, 8, -8};
    for (long d2 : {0L, 2L})
        for (long dd1 : small_steps)
            for (long dg : value_steps) {
                CandidateForm t = seed;
                t.a(g - 2) += d2;
                t.a(g - 1) += dd1;
                t.a(g) += dg;
                if (q3_conditions(assemble(t))) {
                    ac.cand = t;
                    ac.adj = Adjustment{dd1, dg, d2, 0, "solved"};
                    return ac;
                }
            }
    throw ConstructionFailed("case_adjustment", "no adjustment satisfies the q = 3^r conditions");
}

void fix_coprimality(AdjustedCandidate& ac, FieldSize const& q)
{
    mpz_class h0 = assemble(ac.cand).eval(0);
    mpz_class g;
    mpz_gcd(g.get_mpz_t(), h0.get_mpz_t(), q.z().get_mpz_t());
    if (g == 1)
        return;
    long& ag = ac.cand.a(ac.cand.g);
    long shift = std::labs(ag + 18) <= 17 ? 18 : -18;
    ag += shift;
    ac.adj.coprimality_shift = shift;
}

double HoweBound::approx() const
{
    return rational.get_d() + sqrt_half.get_d() / std::sqrt(2.0);
}

HoweBound howe_bound(CandidateForm const& cand)
{
    HoweBound b;
    auto add = [&](long num, int twice_exp) {
        // num / 2^(twice_exp / 2)
        mpz_class den = 1;
        mpz_mul_2exp(den.get_mpz_t(), den.get_mpz_t(), static_cast<unsigned long>(twice_exp / 2));
        mpq_class term(std::labs(num), den);
        term.canonicalize();
        if (twice_exp % 2 == 0)
            b.rational += term;
        else
            b.sqrt_half += term;
    };
    for (int i = cand.s; i < cand.g; ++i)
        add(cand.a(i), i);
    add(cand.a(cand.g), cand.g + 2);
    mpq_class slack = 1 - b.rational;
    b.below_one = slack > 0 && b.sqrt_half * b.sqrt_half < 2 * slack * slack;
    return b;
}

Certificate construct_large_g(int g, FieldSize const& q, unsigned jobs)
{
    if (g < 14)
        throw std::invalid_argument("construct_large_g: requires g >= 14");
    int const s = 4;
    CaseClass cc = case_of(q);
    CandidateForm seed = find_f2_seed(g, s, jobs);
    AdjustedCandidate ac = adjust_for_case(seed, cc);
    fix_coprimality(ac, q);
    CandidateForm const& fin = ac.cand;

    for (int i = s; i <= g; ++i)
        if ((fin.a(i) - seed.a(i)) % 2 != 0)
            throw ConstructionFailed("parity", "a_" + std::to_string(i) + " changed by an odd amount");
    if (std::labs(fin.a(g - 1)) > 3 || std::labs(fin.a(g - 2)) > 3 || std::labs(fin.a(g)) > 17)
        throw ConstructionFailed("coefficient_extremes", "an adjusted coefficient is out of range");
    HoweBound hb = howe_bound(fin);
    if (!hb.below_one)
        throw ConstructionFailed("howe_bound", "bound " + std::to_string(hb.approx()) + " is not below 1");

    IntPoly h = assemble(fin);
    if (!(Gf2Poly::reduce(h) == reduce_mod2(seed)))
        throw ConstructionFailed("mod2_reduction", "h does not reduce to the seed");
    if (irreducibility_witness_prime(h) != 2)
        throw ConstructionFailed("irreducible_h", "h mod 2 is not irreducible");
    if (!is_totally_real_within_sq(h, mpq_class(8)))
        throw ConstructionFailed("totally_real", "h has a root with square > 8");
    if (!h_case_conditions(h, cc))
        throw ConstructionFailed("case_conditions", "3 | h'(n), 9 | h(n) fails for case " + to_string(cc));
    if (!is_ordinary(h, q))
        throw ConstructionFailed("ordinary", "gcd(h(0), q) > 1");

    Certificate c;
    c.g = g;
    c.q = q;
    c.case_class = cc;
    c.h = h;
    c.f = expand_h_to_f(h, q).f;
    c.provenance = Provenance::Chebyshev;
    c.reports = compute_reports(c.h, c.f, q);
    if (!c.reports.cyclicity.has_witness(3))
        throw ConstructionFailed("witness_3", "3 is not a witness prime");
    if (!certifies_claim(c))
        throw ConstructionFailed("reports", "a report is false");

    ChebyshevReplay r;
    r.s = s;
    r.seed = seed.tail();
    r.final = fin.tail();
    r.delta_g_minus_1 = ac.adj.delta_g_minus_1;
    r.delta_g = ac.adj.delta_g;
    r.delta_g_minus_2 = ac.adj.delta_g_minus_2;
    r.coprimality_shift = ac.adj.coprimality_shift;
    r.route = ac.adj.route;
    r.bound_rational = hb.rational;
    r.bound_sqrt_half = hb.sqrt_half;
    r.bound_below_one = hb.below_one;
    c.chebyshev = std::move(r);
    return c;
}

} // namespace noncyclic
