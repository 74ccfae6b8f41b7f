#include "noncyclic/hsearch.hpp"

#include "noncyclic/chebgen.hpp"
#include "noncyclic/cyclicity.hpp"
#include "noncyclic/enumerate.hpp"
#include "noncyclic/integer_factor.hpp"
#include "noncyclic/irreducible.hpp"
#include "noncyclic/realroots.hpp"
#include "table_data.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

namespace noncyclic {

namespace {

/// "3.854" -> 3854/1000
mpq_class decimal_to_q(std::string const& s)
{
    auto dot = s.find('.');
    std::string digits = s;
    unsigned long scale = 0;
    if (dot != std::string::npos) {
        digits = s.substr(0, dot) + s.substr(dot + 1);
        scale = s.size() - dot - 1;
    }
    mpz_class num;
    if (digits.empty() || num.set_str(digits, 10) != 0)
        throw std::invalid_argument("not a decimal: '" + s + "'");
    mpz_class den;
    mpz_ui_pow_ui(den.get_mpz_t(), 10, scale);
    mpq_class r(num, den);
    r.canonicalize();
    return r;
}

std::string decimal_string(mpq_class const& x, int places)
{
    std::ostringstream os;
    os.setf(std::ios::fixed);
    os.precision(places);
    os << x.get_d();
    return os.str();
}

std::vector<long> h0_prime_set(IntPoly const& h)
{
    std::vector<long> out;
    mpz_class h0 = h.eval(0);
    if (h0 == 0)
        return out;
    for (auto const& pp : factorize(h0))
        out.push_back(pp.prime.get_si());
    return out;
}

bool coprime(mpz_class const& a, long b)
{
    mpz_class g;
    mpz_gcd_ui(g.get_mpz_t(), a.get_mpz_t(), static_cast<unsigned long>(b));
    return g == 1;
}

Certificate build_certificate(int g, FieldSize const& q, IntPoly const& h, Provenance prov)
{
    Certificate c;
    c.g = g;
    c.q = q;
    c.case_class = case_of(q);
    c.h = h;
    c.f = expand_h_to_f(h, q).f;
    c.provenance = prov;
    c.reports = compute_reports(c.h, c.f, q);
    return c;
}

struct ExceptionalList {
    int g;
    long q;
    std::vector<std::vector<long>> fs; // ascending
};

// Non-2-cyclic classes for the three small pairs; x^4 - 6x^2 + 9 is listed once.
std::vector<ExceptionalList> const& exceptional_lists()
{
    static std::vector<ExceptionalList> const lists{
        {2, 2, {{4, 0, -1, 0, 1}}},
        {2,
         3,
         {{9, -6, 2, -2, 1},
          {9, -3, -2, -1, 1},
          {9, -3, 2, -1, 1},
          {9, 0, -6, 0, 1},
          {9, 0, -2, 0, 1},
          {9, 3, -2, 1, 1},
          {9, 3, 2, 1, 1},
          {9, 6, 2, 2, 1}}},
        {3,
         2,
         {{8, -4, 2, -3, 1, -1, 1}, {8, 0, -2, -2, -1, 0, 1}, {8, 0, -2, 2, -1, 0, 1}, {8, 4, 2, 3, 1, 1, 1}}},
    };
    return lists;
}

} // namespace

std::vector<TableEntry> parse_table(Json const& j)
{
    std::vector<TableEntry> out;
    try {
        for (auto const& row : j.at("rows")) {
            TableEntry e;
            e.g = row.at("g").get<int>();
            e.h = IntPoly::from_strings(row.at("h").get<std::vector<std::string>>());
            e.case_class = case_from_string(row.at("case").get<std::string>());
            e.claimed_max_root = row.at("max_root").get<std::string>();
            decimal_to_q(e.claimed_max_root);
            e.valid_from_q = row.at("valid_from_q").get<long>();
            e.h0_primes = row.at("h0_primes").get<std::vector<long>>();
            if (e.h.degree() != e.g || !e.h.is_monic())
                throw std::invalid_argument("row h is not monic of degree g");
            out.push_back(std::move(e));
        }
    } catch (nlohmann::json::exception const& ex) {
        throw std::invalid_argument(std::string("table: ") + ex.what());
    }
    return out;
}

std::vector<TableEntry> const& table_entries()
{
    static std::vector<TableEntry> const rows = parse_table(Json::parse(detail::small_g_table_json));
    return rows;
}

bool TableVerification::ok() const
{
    return std::all_of(checks.begin(), checks.end(), [](TableCheck const& c) { return c.ok; });
}

TableVerification verify_table_entry(TableEntry const& e)
{
    TableVerification v{e, 0, {}};
    IntPoly const& h = e.h;
    auto add = [&](std::string name, bool ok, std::string detail) { v.checks.push_back({std::move(name), ok, std::move(detail)}); };

    add("degree", h.degree() == e.g && h.is_monic(), "deg h = " + std::to_string(h.degree()));
    add("irreducible", h.degree() >= 1 && is_irreducible_q(h), "over Q");

    bool real = h.degree() >= 1 && count_real_roots(h).count == squarefree_part(h).degree() &&
                squarefree_part(h).degree() == h.degree();
    add("totally_real", real, "distinct real roots = degree");

    mpq_class claimed = decimal_to_q(e.claimed_max_root);
    if (real) {
        v.max_abs_root = max_abs_real_root_approx(h, mpq_class(1, 1000000));
        mpq_class diff = abs(v.max_abs_root - claimed);
        add("max_root", diff < mpq_class(5, 10000),
            "computed " + decimal_string(v.max_abs_root, 6) + ", printed " + e.claimed_max_root);
    } else {
        add("max_root", false, "no real-root bound for a non-totally-real h");
    }
    mpq_class bound = 4 * mpq_class(e.valid_from_q);
    add("bound_vs_valid_q", claimed * claimed <= bound && real && is_totally_real_within_sq(h, bound),
        "max_root^2 <= 4 * " + std::to_string(e.valid_from_q));
    add("case_conditions", h_case_conditions(h, e.case_class), "case " + to_string(e.case_class));
    add("case_min_q", e.valid_from_q >= case_min_q(e.case_class), "valid_from_q >= case minimum");

    auto primes = h0_prime_set(h);
    std::ostringstream os;
    os << "h(0) = " << h.eval(0) << ", primes {";
    for (size_t i = 0; i < primes.size(); ++i)
        os << (i ? "," : "") << primes[i];
    os << "}";
    add("h0_primes", primes == e.h0_primes, os.str());
    return v;
}

IntPoly find_h(HSearch const& s)
{
    if (s.g < 1 || s.coeff_bound < 1 || s.q_floor < 2)
        throw std::invalid_argument("find_h: bad search parameters");
    TotallyRealSearch t;
    t.degree = s.g;
    t.bound_sq = 4 * mpq_class(s.q_floor);
    t.coeff_bound = s.coeff_bound;
    t.node_budget = s.node_budget;

    std::optional<IntPoly> best;
    mpq_class best_root;
    mpq_class const eps(1, 1000000000);
    for_each_totally_real(t, [&](IntPoly const& h) {
        if (!h_case_conditions(h, s.case_class) || !coprime(h.eval(0), s.q_floor))
            return;
        if (!is_irreducible_q(h))
            return;
        mpq_class r = max_abs_real_root_approx(h, eps);
        if (!best || r < best_root || (r == best_root && h < *best)) {
            best = h;
            best_root = r;
        }
    });
    if (!best)
        throw NotFound("no h of degree " + std::to_string(s.g) + " for case " + to_string(s.case_class) +
                       " with |coeff| <= " + std::to_string(s.coeff_bound) + " and q >= " + std::to_string(s.q_floor));
    return *best;
}

bool is_exceptional_pair(int g, long q)
{
    return (g == 2 && (q == 2 || q == 3)) || (g == 3 && q == 2);
}

Certificate certify_small_g(int g, FieldSize const& q)
{
    if (g < 2 || g > 13)
        throw std::invalid_argument("certify_small_g: requires 2 <= g <= 13");
    if (is_exceptional_pair(g, q.q()))
        throw ExceptionalCase("(g, q) = (" + std::to_string(g) + ", " + std::to_string(q.q()) +
                              ") is exceptional; use certify_exceptional");
    CaseClass cc = case_of(q);
    std::vector<TableEntry const*> rows;
    for (auto const& e : table_entries())
        if (e.g == g && e.case_class == cc && e.valid_from_q <= q.q() && coprime(e.h.eval(0), q.q()))
            rows.push_back(&e);
    std::stable_sort(rows.begin(), rows.end(), [](TableEntry const* a, TableEntry const* b) {
        if (a->valid_from_q != b->valid_from_q)
            return a->valid_from_q < b->valid_from_q;
        return decimal_to_q(a->claimed_max_root) < decimal_to_q(b->claimed_max_root);
    });
    for (auto const* e : rows) {
        Certificate c = build_certificate(g, q, e->h, Provenance::Table);
        if (certifies_claim(c))
            return c;
    }
    // No printed row fits (x^2 - 18 for q = 8, 32, 128): search directly.
    HSearch s;
    s.g = g;
    s.case_class = cc;
    s.q_floor = q.q();
    s.coeff_bound = 4 * q.q() * (1L << g);
    Certificate c = build_certificate(g, q, find_h(s), Provenance::Search);
    if (!certifies_claim(c))
        throw NoValidEntry("search result fails its own certificate for g = " + std::to_string(g) +
                           ", q = " + std::to_string(q.q()));
    return c;
}

std::vector<Certificate> certify_exceptional(int g, FieldSize const& q)
{
    for (auto const& l : exceptional_lists()) {
        if (l.g != g || l.q != q.q())
            continue;
        std::vector<Certificate> out;
        for (auto const& coeffs : l.fs) {
            Certificate c;
            c.g = g;
            c.q = q;
            c.case_class = case_of(q);
            std::vector<mpz_class> v(coeffs.begin(), coeffs.end());
            c.f = IntPoly(std::move(v));
            c.h = trace_poly(c.f, q.z());
            c.provenance = Provenance::Exceptional;
            c.reports = compute_reports(c.h, c.f, q);
            if (!is_weil(c.f, q) || !certifies_claim(c))
                throw std::logic_error("listed exceptional polynomial fails: " + c.f.to_string());
            out.push_back(std::move(c));
        }
        return out;
    }
    throw std::invalid_argument("(g, q) = (" + std::to_string(g) + ", " + std::to_string(q.q()) +
                                ") is not an exceptional pair");
}

std::vector<Certificate> certify(int g, FieldSize const& q, unsigned jobs)
{
    if (g < 2)
        throw std::invalid_argument("certify: dimension g > 1 is required (g = " + std::to_string(g) + ")");
    if (is_exceptional_pair(g, q.q()))
        return certify_exceptional(g, q);
    if (g <= 13)
        return {certify_small_g(g, q)};
    return {construct_large_g(g, q, jobs)};
}

} // namespace noncyclic
