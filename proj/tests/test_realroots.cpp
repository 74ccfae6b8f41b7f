#include "doctest.h"
#include "oracles.hpp"

#include "noncyclic/realroots.hpp"

using namespace noncyclic;

TEST_CASE("count_real_roots examples")
{
    CHECK(count_real_roots(IntPoly{-18, 0, 1}).count == 2);
    CHECK(count_real_roots(IntPoly{1, 0, 1}).count == 0);
    CHECK(count_real_roots(IntPoly{1, -9, 0, 1}).count == 3);
    // multiplicities collapse
    CHECK(count_real_roots(IntPoly{9, 0, -6, 0, 1}).count == 2);
    // half-open (lo, hi]
    IntPoly p{-2, 1}; // root 2
    CHECK(count_real_roots(p, mpq_class(1), mpq_class(2)).count == 1);
    CHECK(count_real_roots(p, mpq_class(2), mpq_class(3)).count == 0);
    CHECK(count_real_roots(IntPoly{0, -1, 0, 1}, mpq_class(-1), std::nullopt).count == 2);
}

TEST_CASE("is_totally_real_within_sq examples")
{
    IntPoly h{-18, 0, 1};
    CHECK_FALSE(is_totally_real_within_sq(h, mpq_class(8)));
    CHECK(is_totally_real_within_sq(h, mpq_class(20)));
    CHECK(is_totally_real_within_sq(h, mpq_class(18))); // closed
    CHECK_FALSE(is_totally_real_within_sq(h, mpq_class(17)));
    for (long q : {2, 3, 5, 7}) {
        CHECK(is_totally_real_within_sq(IntPoly{-4 * q, 0, 1}, mpq_class(4 * q)));
        CHECK_FALSE(is_totally_real_within_sq(IntPoly{-4 * q - 1, 0, 1}, mpq_class(4 * q)));
    }
    CHECK_FALSE(is_totally_real_within_sq(IntPoly{1, 0, 1}, mpq_class(100)));
    // repeated roots are still totally real
    CHECK(is_totally_real_within_sq(IntPoly{9, 0, -6, 0, 1}, mpq_class(12)));
    CHECK(is_totally_real_within_sq(IntPoly{4, 4, 1}, mpq_class(4)));
    CHECK_FALSE(is_totally_real_within_sq(IntPoly{4, 4, 1}, mpq_class(3)));
}

TEST_CASE("is_totally_real_within_sq is monotone in the bound")
{
    std::mt19937_64 rng(21);
    for (int it = 0; it < 300; ++it) {
        IntPoly p = oracle::random_real_weil(rng, 1 + it % 6, 2 + it % 9);
        bool prev = false;
        for (long b = 0; b <= 60; b += 3) {
            bool now = is_totally_real_within_sq(p, mpq_class(b));
            CHECK((!prev || now));
            prev = now;
        }
        CHECK(prev == true);
    }
}

TEST_CASE("max_real_root_approx examples")
{
    mpq_class eps(1, 10000);
    auto close = [&](IntPoly const& p, double v) { return std::fabs(max_real_root_approx(p, eps).get_d() - v) < 1e-4; };
    CHECK(close(IntPoly{-11, -1, 1}, 3.8541));
    CHECK(close(IntPoly{9, -3, -4, 1}, 4.2043));
    CHECK(close(IntPoly{-18, 0, 1}, 4.2426));
    CHECK(close(IntPoly{-2, 1}, 2.0));
    CHECK_THROWS_AS(max_real_root_approx(IntPoly{1, 0, 1}, eps), NoRealRoot);
    // largest |root| of x^2 + 2x - 17 is 1 + sqrt 18
    CHECK(std::fabs(max_abs_real_root_approx(IntPoly{-17, 2, 1}, eps).get_d() - 5.2426) < 1e-4);
}

TEST_CASE("cauchy bound encloses roots")
{
    std::mt19937_64 rng(22);
    for (int it = 0; it < 200; ++it) {
        IntPoly p = oracle::random_poly(rng, 1 + it % 8, 50, false);
        mpq_class b = cauchy_bound(p);
        CHECK(count_real_roots(p, std::nullopt, -b).count == 0);
        CHECK(count_real_roots(p, b, std::nullopt).count == 0);
    }
}

TEST_CASE("isolation intervals are disjoint and each holds one root")
{
    IntPoly p = IntPoly{-1, 1} * IntPoly{-2, 1} * IntPoly{-3, 0, 1} * IntPoly{1, 1, 1};
    auto iv = isolate_real_roots(p, mpq_class(1, 100));
    REQUIRE(iv.size() == 4);
    for (size_t i = 0; i < iv.size(); ++i) {
        CHECK(iv[i].second - iv[i].first < mpq_class(1, 100));
        CHECK(count_real_roots(p, iv[i].first, iv[i].second).count == 1);
        if (i)
            CHECK(iv[i - 1].second <= iv[i].first);
    }
}

TEST_CASE("real-root count agrees with a numeric oracle on squarefree inputs")
{
    std::mt19937_64 rng(23);
    int compared = 0;
    for (int it = 0; it < 1500; ++it) {
        IntPoly p = oracle::random_poly(rng, 1 + it % 10, 9, false);
        if (squarefree_part(p).degree() != p.degree())
            continue;
        auto roots = oracle::complex_roots(p);
        if (!roots)
            continue;
        std::vector<long double> reals;
        bool ambiguous = false;
        for (auto const& z : *roots) {
            long double tol = 1e-7L * (1 + std::abs(z));
            if (std::fabs(z.imag()) < tol)
                reals.push_back(z.real());
            else if (std::fabs(z.imag()) < 1e-3L)
                ambiguous = true;
        }
        if (ambiguous)
            continue;
        ++compared;
        CHECK(count_real_roots(p).count == static_cast<int>(reals.size()));
        // each numeric real root is confirmed by an exact sign change around it
        for (long double r : reals) {
            mpq_class lo(static_cast<double>(r - 1e-6L)), hi(static_cast<double>(r + 1e-6L));
            CHECK(count_real_roots(p, lo, hi).count >= 1);
        }
    }
    CHECK(compared > 1000);
}

TEST_CASE("square_roots_poly")
{
    // roots of x^2 - x - 11 have squares that are roots of y^2 - 23 y + 121
    IntPoly y = square_roots_poly(IntPoly{-11, -1, 1});
    CHECK(y.degree() == 2);
    CHECK(y.primitive_part() == IntPoly{121, -23, 1});
}
