#include "doctest.h"
#include "oracles.hpp"

#include "noncyclic/cyclicity.hpp"
#include "noncyclic/hsearch.hpp"

using namespace noncyclic;

namespace {

long mod(mpz_class const& v, long m)
{
    return static_cast<long>(mpz_fdiv_ui(v.get_mpz_t(), static_cast<unsigned long>(m)));
}

std::vector<long> prime_powers_upto(long n)
{
    std::vector<long> out;
    for (long q = 2; q <= n; ++q)
        if (prime_power_decomposition(q))
            out.push_back(q);
    return out;
}

} // namespace

TEST_CASE("cyclicity_report examples")
{
    auto a = cyclicity_report(WeilPoly{IntPoly{4, 0, -1, 0, 1}, FieldSize(2), 2});
    CHECK(a.f1 == 4);
    CHECK(a.fp1 == 2);
    CHECK(a.witnesses == std::vector<mpz_class>{2});
    CHECK_FALSE(a.is_cyclic);

    auto b = cyclicity_report(WeilPoly{IntPoly{2, -1, 1}, FieldSize(2), 1});
    CHECK(b.f1 == 2);
    CHECK(b.fp1 == 1);
    CHECK(b.witnesses.empty());
    CHECK(b.is_cyclic);

    auto c = cyclicity_report(WeilPoly{IntPoly{25, 0, -8, 0, 1}, FieldSize(5), 2});
    CHECK(c.f1 == 18);
    CHECK(c.fp1 == -12);
    CHECK(c.hat_f1 == 3);
    CHECK(c.rad_f1 == 6);
    CHECK(c.witnesses == std::vector<mpz_class>{3});
    CHECK_FALSE(c.is_cyclic);
    CHECK(c.has_witness(3));
    CHECK_FALSE(c.has_witness(2));

    CHECK_THROWS_AS(cyclicity_report(IntPoly{-1, 1}), DegenerateValue);
}

TEST_CASE("two formulations agree and report invariants hold")
{
    std::mt19937_64 rng(61);
    for (int it = 0; it < 3000; ++it) {
        IntPoly f = oracle::random_poly(rng, 1 + it % 8, 40, true);
        if (f.eval(1) == 0)
            continue;
        auto r = cyclicity_report(f);
        CHECK(r.is_cyclic == r.witnesses.empty());
        CHECK(r.is_cyclic == coprime_with_radical_quotient(r.fp1, r.f1_factors));
        CHECK(r.rad_f1 * r.hat_f1 == abs(r.f1));
        for (auto const& l : r.witnesses) {
            CHECK(mpz_divisible_p(r.fp1.get_mpz_t(), l.get_mpz_t()));
            CHECK(mpz_divisible_p(r.hat_f1.get_mpz_t(), l.get_mpz_t()));
        }
    }
}

TEST_CASE("h_case_conditions")
{
    CHECK(h_case_conditions(IntPoly{-18, 0, 1}, CaseClass::QPlus));
    CHECK_FALSE(h_case_conditions(IntPoly{-18, 0, 1}, CaseClass::QMinus)); // h(2) = -14
    CHECK(h_case_conditions(IntPoly{-11, -1, 1}, CaseClass::QMinus));
    CHECK(h_case_conditions(IntPoly{17, -6, -3, 1}, CaseClass::QThree));
}

TEST_CASE("congruence identities per case")
{
    std::mt19937_64 rng(62);
    auto qs = prime_powers_upto(400);
    for (int it = 0; it < 4000; ++it) {
        long q = qs[static_cast<size_t>(it) % qs.size()];
        int g = 1 + it % 9;
        IntPoly h = oracle::random_poly(rng, g, 50, true);
        IntPoly f = expand_h_to_f_unchecked(h, q);
        mpz_class f1 = f.eval(1), fp1 = f.derivative().eval(1);
        IntPoly dh = h.derivative();
        switch (case_of(FieldSize(q))) {
        case CaseClass::QPlus:
            CHECK(mod(f1 - ((1 + q) * dh.eval(0) + h.eval(0)), 9) == 0);
            CHECK(mod(fp1 - ((1 - q) * dh.eval(0) + g * h.eval(0)), 3) == 0);
            break;
        case CaseClass::QMinus:
            CHECK(mod(f1 - ((q - 1) * dh.eval(2) + h.eval(2)), 9) == 0);
            CHECK(mod(fp1 - g * h.eval(2), 3) == 0);
            break;
        case CaseClass::QThree:
            // q h'(1), which is 3 h'(1) only for q = 3
            CHECK(mod(f1 - (q * dh.eval(1) + h.eval(1)), 9) == 0);
            if (q == 3)
                CHECK(mod(f1 - (3 * dh.eval(1) + h.eval(1)), 9) == 0);
            CHECK(mod(fp1 - ((1 + q) * dh.eval(1) + g * h.eval(1)), 3) == 0);
            break;
        }
    }
}

TEST_CASE("sufficiency: table rows give witness 3 for every valid q <= 200")
{
    int pairs = 0;
    for (auto const& e : table_entries()) {
        for (long qv : prime_powers_upto(200)) {
            FieldSize q(qv);
            if (case_of(q) != e.case_class || qv < e.valid_from_q)
                continue;
            REQUIRE(is_totally_real_within_sq(e.h, mpq_class(4 * qv)));
            auto r = cyclicity_report(expand_h_to_f(e.h, q));
            CHECK(r.has_witness(3));
            ++pairs;
        }
    }
    CHECK(pairs > 500);
}

TEST_CASE("sufficiency on random h meeting the case conditions")
{
    std::mt19937_64 rng(63);
    auto qs = prime_powers_upto(60);
    int hits = 0;
    for (int it = 0; it < 20000 && hits < 300; ++it) {
        long qv = qs[static_cast<size_t>(it) % qs.size()];
        FieldSize q(qv);
        IntPoly h = oracle::random_real_weil(rng, 2 + it % 4, qv);
        if (!h_case_conditions(h, case_of(q)))
            continue;
        ++hits;
        CHECK(cyclicity_report(expand_h_to_f(h, q)).has_witness(3));
    }
    CHECK(hits >= 300);
}
