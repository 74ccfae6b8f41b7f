#include "noncyclic/enumerate.hpp"

#include "noncyclic/irreducible.hpp"
#include "noncyclic/parallel.hpp"
#include "noncyclic/realroots.hpp"

#include <cmath>

namespace noncyclic {

namespace {

using ld = long double;

ld to_ld(mpz_class const& z)
{
    return static_cast<ld>(z.get_d());
}

ld eval_ld(IntPoly const& p, ld x)
{
    ld r = 0;
    for (int i = p.degree(); i >= 0; --i)
        r = r * x + to_ld(p.coeffs()[static_cast<size_t>(i)]);
    return r;
}

/// Real roots of a squarefree polynomial, as long doubles.
std::vector<ld> numeric_roots(IntPoly const& sf)
{
    std::vector<ld> out;
    for (auto const& [lo, hi] : isolate_real_roots(sf, mpq_class(1, 64))) {
        ld a = static_cast<ld>(lo.get_d()), b = static_cast<ld>(hi.get_d());
        int shi = sf.sign_at(hi);
        if (shi == 0) {
            out.push_back(b);
            continue;
        }
        for (int it = 0; it < 80; ++it) {
            ld mid = (a + b) / 2;
            ld v = eval_ld(sf, mid);
            if (v == 0) {
                a = b = mid;
                break;
            }
            if ((v > 0) == (shi > 0))
                b = mid;
            else
                a = mid;
        }
        out.push_back((a + b) / 2);
    }
    return out;
}

class Walker {
  public:
    Walker(TotallyRealSearch const& s, std::function<void(IntPoly const&)> const& visit)
        : s_(s), visit_(visit), c_(static_cast<size_t>(s.degree) + 1), fact_(static_cast<size_t>(s.degree) + 1)
    {
        c_.back() = 1;
        fact_[0] = 1;
        for (int i = 1; i <= s.degree; ++i)
            fact_[static_cast<size_t>(i)] = fact_[static_cast<size_t>(i - 1)] * i;
        radius_ = std::sqrt(static_cast<ld>(s.bound_sq.get_d()));
    }

    bool run()
    {
        descend(s_.degree);
        return !exhausted_budget_;
    }

  private:
    /// m-th derivative of the current h (depends on c_[m..g] only).
    IntPoly derivative(int m) const
    {
        int g = s_.degree;
        std::vector<mpz_class> v(static_cast<size_t>(g - m) + 1);
        for (int j = 0; j <= g - m; ++j)
            v[static_cast<size_t>(j)] =
                c_[static_cast<size_t>(j + m)] * fact_[static_cast<size_t>(j + m)] / fact_[static_cast<size_t>(j)];
        return IntPoly(std::move(v));
    }

    std::pair<mpz_class, mpz_class> coefficient_range(int m)
    {
        int g = s_.degree;
        int k = m - 1; // coefficient being chosen
        IntPoly D = derivative(m);
        c_[static_cast<size_t>(k)] = 0;
        IntPoly P = derivative(k);
        mpz_class const& fac = fact_[static_cast<size_t>(k)];
        mpz_class lo, hi;

        IntPoly sf = D.degree() > 0 ? squarefree_part(D) : D;
        if (sf.degree() == D.degree()) {
            std::vector<ld> xi{-radius_};
            for (ld r : numeric_roots(D))
                xi.push_back(r);
            xi.push_back(radius_);
            int d = g - k;
            ld tlo = -INFINITY, thi = INFINITY, scale = 1;
            for (size_t i = 0; i < xi.size(); ++i) {
                ld v = -eval_ld(P, xi[i]);
                scale = std::max(scale, std::fabs(v));
                if ((d - static_cast<int>(i)) % 2 == 0)
                    tlo = std::max(tlo, v);
                else
                    thi = std::min(thi, v);
            }
            ld margin = 1e-6L * scale + 1e-3L;
            ld f = to_ld(fac);
            lo = mpz_class(static_cast<double>(std::ceil((tlo - margin) / f)));
            hi = mpz_class(static_cast<double>(std::floor((thi + margin) / f)));
        } else {
            // |e_j| <= C(g, j) R^j for the elementary symmetric function e_j = +-c_k.
            int j = g - k;
            mpz_class binom;
            mpz_bin_uiui(binom.get_mpz_t(), static_cast<unsigned long>(g), static_cast<unsigned long>(j));
            ld b = to_ld(binom) * std::pow(radius_, static_cast<ld>(j));
            hi = mpz_class(static_cast<double>(std::floor(b + 1e-6L)));
            lo = -hi;
        }
        if (s_.coeff_bound) {
            mpz_class cb = *s_.coeff_bound;
            if (hi > cb)
                hi = cb;
            if (lo < -cb)
                lo = -cb;
        }
        return {lo, hi};
    }

    void descend(int m)
    {
        if (exhausted_budget_)
            return;
        if (m == 0) {
            visit_(IntPoly(c_));
            return;
        }
        int k = m - 1;
        auto [lo, hi] = coefficient_range(m);
        for (mpz_class v = lo; v <= hi; ++v) {
            if (s_.node_budget && ++nodes_ > *s_.node_budget) {
                exhausted_budget_ = true;
                return;
            }
            c_[static_cast<size_t>(k)] = v;
            if (is_totally_real_within_sq(derivative(k), s_.bound_sq))
                descend(k);
            if (exhausted_budget_)
                return;
        }
        c_[static_cast<size_t>(k)] = 0;
    }

    TotallyRealSearch const& s_;
    std::function<void(IntPoly const&)> const& visit_;
    std::vector<mpz_class> c_;
    std::vector<mpz_class> fact_;
    ld radius_ = 0;
    unsigned long nodes_ = 0;
    bool exhausted_budget_ = false;
};

void check_scale(int g, FieldSize const& q, bool allow_large)
{
    if (g < 1)
        throw std::invalid_argument("dimension must be >= 1");
    if (!allow_large && (g > enumerate_max_g || q.q() > enumerate_max_q))
        throw ScaleGuard("enumeration of (g, q) = (" + std::to_string(g) + ", " + std::to_string(q.q()) +
                         ") exceeds the desk-scale guard g <= " + std::to_string(enumerate_max_g) +
                         ", q <= " + std::to_string(enumerate_max_q));
}

} // namespace

bool for_each_totally_real(TotallyRealSearch const& search, std::function<void(IntPoly const&)> const& visit)
{
    if (search.degree < 1)
        throw std::invalid_argument("for_each_totally_real: degree must be >= 1");
    if (search.bound_sq < 0)
        throw std::invalid_argument("for_each_totally_real: negative bound");
    Walker w(search, visit);
    return w.run();
}

std::vector<IntPoly> enumerate_real_weil(int g, FieldSize const& q, bool allow_large)
{
    check_scale(g, q, allow_large);
    std::vector<IntPoly> out;
    TotallyRealSearch s;
    s.degree = g;
    s.bound_sq = 4 * q.z();
    for_each_totally_real(s, [&](IntPoly const& h) { out.push_back(h); });
    return out;
}

std::vector<WeilPoly> enumerate_weil(int g, FieldSize const& q, bool allow_large)
{
    std::vector<WeilPoly> out;
    for (auto const& h : enumerate_real_weil(g, q, allow_large))
        out.push_back(WeilPoly{expand_h_to_f_unchecked(h, q.z()), q, g});
    return out;
}

EnumerationResult classify_noncyclic(int g, FieldSize const& q, bool allow_large, unsigned jobs)
{
    auto hs = enumerate_real_weil(g, q, allow_large);
    std::vector<std::optional<NoncyclicEntry>> slots(hs.size());
    parallel_for(hs.size(), jobs, [&](std::size_t i) {
        WeilPoly w{expand_h_to_f_unchecked(hs[i], q.z()), q, g};
        CyclicityReport rep = cyclicity_report(w);
        if (rep.is_cyclic)
            return;
        NoncyclicEntry e{w, hs[i], std::move(rep)};
        e.irreducible = is_irreducible_q(w.f);
        e.ordinary = is_ordinary(hs[i], q);
        slots[i] = std::move(e);
    });
    EnumerationResult r;
    r.g = g;
    r.q = q.q();
    r.total_weil = hs.size();
    for (auto& s : slots) {
        if (!s)
            continue;
        for (auto const& l : s->report.witnesses)
            ++r.witness_prime_profile[l.get_si()];
        r.noncyclic.push_back(std::move(*s));
    }
    return r;
}

} // namespace noncyclic
