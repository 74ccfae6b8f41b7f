#include "noncyclic/certificate.hpp"

#include "noncyclic/chebgen.hpp"
#include "noncyclic/irreducible.hpp"
#include "noncyclic/realroots.hpp"

#include <sstream>

namespace noncyclic {

namespace {

constexpr char const* realizability_verified = "ordinary Honda-Tate";
constexpr char const* realizability_unverified = "listed, unverified";

/// Integers that fit in 64 bits are emitted as numbers, larger ones as strings.
Json integer_json(mpz_class const& z)
{
    if (mpz_fits_slong_p(z.get_mpz_t()))
        return Json(z.get_si());
    return Json(z.get_str());
}

mpz_class integer_from_json(Json const& j)
{
    if (j.is_number_integer())
        return mpz_class(j.get<long>());
    if (j.is_string()) {
        mpz_class z;
        if (z.set_str(j.get<std::string>(), 10) == 0)
            return z;
    }
    throw CorruptCertificate("expected an integer, got " + j.dump());
}

Json poly_json(IntPoly const& p)
{
    return Json(p.to_strings());
}

IntPoly poly_from_json(Json const& j)
{
    if (!j.is_array())
        throw CorruptCertificate("expected a coefficient array, got " + j.dump());
    std::vector<mpz_class> v;
    for (auto const& c : j)
        v.push_back(integer_from_json(c));
    return IntPoly(std::move(v));
}

Json long_vector_json(std::vector<long> const& v)
{
    Json a = Json::array();
    for (long x : v)
        a.push_back(x);
    return a;
}

template <typename T>
T field(Json const& j, char const* key)
{
    if (!j.is_object() || !j.contains(key))
        throw CorruptCertificate(std::string("missing field '") + key + "'");
    try {
        return j.at(key).get<T>();
    } catch (nlohmann::json::exception const& e) {
        throw CorruptCertificate(std::string("field '") + key + "': " + e.what());
    }
}

Json const& sub(Json const& j, char const* key)
{
    if (!j.is_object() || !j.contains(key))
        throw CorruptCertificate(std::string("missing field '") + key + "'");
    return j.at(key);
}

std::vector<mpz_class> prime_list(Json const& j)
{
    if (!j.is_array())
        throw CorruptCertificate("expected a prime list, got " + j.dump());
    std::vector<mpz_class> v;
    for (auto const& x : j)
        v.push_back(integer_from_json(x));
    return v;
}

} // namespace

std::string to_string(Provenance p)
{
    switch (p) {
    case Provenance::Table:
        return "table";
    case Provenance::Search:
        return "search";
    case Provenance::Chebyshev:
        return "chebyshev";
    case Provenance::Exceptional:
        return "exceptional";
    }
    return "?";
}

Provenance provenance_from_string(std::string const& s)
{
    if (s == "table")
        return Provenance::Table;
    if (s == "search")
        return Provenance::Search;
    if (s == "chebyshev")
        return Provenance::Chebyshev;
    if (s == "exceptional")
        return Provenance::Exceptional;
    throw CorruptCertificate("unknown provenance '" + s + "'");
}

std::string Certificate::realizability() const
{
    return reports.irreducible && reports.ordinary ? realizability_verified : realizability_unverified;
}

Reports compute_reports(IntPoly const& h, IntPoly const& f, FieldSize const& q)
{
    Reports r;
    r.totally_real = h.degree() >= 1 && is_totally_real_within_sq(h, mpq_class(4 * q.z()));
    r.irreducible = f.degree() >= 1 && is_irreducible_q(f);
    r.ordinary = is_ordinary(h, q);
    r.case_conditions = h_case_conditions(h, case_of(q));
    // Independent route through the trace polynomial of f.
    bool weil = is_weil(f, q);
    r.simple_ordinary = weil && r.irreducible && is_ordinary(trace_poly(f, q.z()), q);
    r.cyclicity = cyclicity_report(f);
    return r;
}

bool certifies_claim(Certificate const& c)
{
    auto const& r = c.reports;
    if (c.provenance == Provenance::Exceptional) {
        return r.totally_real && !r.cyclicity.is_cyclic && r.cyclicity.witnesses.size() == 1 &&
               r.cyclicity.witnesses[0] == 2;
    }
    return r.irreducible && r.totally_real && r.ordinary && r.case_conditions && r.simple_ordinary &&
           !r.cyclicity.is_cyclic && r.cyclicity.has_witness(3) && c.f == expand_h_to_f_unchecked(c.h, c.q.z());
}

Json cyclicity_to_json(CyclicityReport const& r)
{
    Json j;
    j["f1"] = r.f1.get_str();
    j["fprime1"] = r.fp1.get_str();
    Json primes = Json::array();
    for (auto const& pp : r.f1_factors)
        primes.push_back(integer_json(pp.prime));
    j["radical_primes"] = primes;
    j["hat_f1"] = r.hat_f1.get_str();
    Json w = Json::array();
    for (auto const& l : r.witnesses)
        w.push_back(integer_json(l));
    j["witnesses"] = w;
    j["cyclic"] = r.is_cyclic;
    return j;
}

Json to_json(Certificate const& c)
{
    Json j;
    j["v"] = certificate_version;
    j["g"] = c.g;
    j["q"] = c.q.q();
    j["p"] = c.q.p();
    j["r"] = c.q.r();
    j["provenance"] = to_string(c.provenance);
    j["case"] = to_string(c.case_class);
    j["h"] = poly_json(c.h);
    j["f"] = poly_json(c.f);
    Json rep;
    rep["irreducible"] = c.reports.irreducible;
    rep["totally_real"] = c.reports.totally_real;
    rep["ordinary"] = c.reports.ordinary;
    rep["case_conditions"] = c.reports.case_conditions;
    rep["simple_ordinary"] = c.reports.simple_ordinary;
    rep["cyclicity"] = cyclicity_to_json(c.reports.cyclicity);
    j["reports"] = rep;
    j["realizability"] = c.realizability();
    if (c.chebyshev) {
        auto const& cb = *c.chebyshev;
        Json k;
        k["s"] = cb.s;
        k["seed"] = long_vector_json(cb.seed);
        k["a"] = long_vector_json(cb.final);
        k["deltas"] = Json{{"a_g-1", cb.delta_g_minus_1},
                           {"a_g", cb.delta_g},
                           {"a_g-2", cb.delta_g_minus_2},
                           {"coprimality", cb.coprimality_shift}};
        k["route"] = cb.route;
        k["bound"] = Json{{"rational", cb.bound_rational.get_str()},
                          {"sqrt_half", cb.bound_sqrt_half.get_str()},
                          {"below_one", cb.bound_below_one}};
        j["construction"] = k;
    }
    return j;
}

Certificate certificate_from_json(Json const& j)
{
    if (!j.is_object())
        throw CorruptCertificate("certificate must be a JSON object");
    if (field<int>(j, "v") != certificate_version)
        throw CorruptCertificate("unsupported certificate version");
    Certificate c;
    c.g = field<int>(j, "g");
    try {
        c.q = FieldSize(field<long>(j, "q"));
        c.case_class = case_from_string(field<std::string>(j, "case"));
    } catch (std::invalid_argument const& e) {
        throw CorruptCertificate(e.what());
    }
    c.provenance = provenance_from_string(field<std::string>(j, "provenance"));
    c.h = poly_from_json(sub(j, "h"));
    c.f = poly_from_json(sub(j, "f"));
    Json const& rep = sub(j, "reports");
    c.reports.irreducible = field<bool>(rep, "irreducible");
    c.reports.totally_real = field<bool>(rep, "totally_real");
    c.reports.ordinary = field<bool>(rep, "ordinary");
    c.reports.case_conditions = field<bool>(rep, "case_conditions");
    c.reports.simple_ordinary = field<bool>(rep, "simple_ordinary");
    Json const& cy = sub(rep, "cyclicity");
    auto& cr = c.reports.cyclicity;
    cr.f1 = integer_from_json(sub(cy, "f1"));
    cr.fp1 = integer_from_json(sub(cy, "fprime1"));
    cr.hat_f1 = integer_from_json(sub(cy, "hat_f1"));
    cr.rad_f1 = 1;
    for (auto const& p : prime_list(sub(cy, "radical_primes"))) {
        cr.f1_factors.push_back({p, 0});
        cr.rad_f1 *= p;
    }
    cr.witnesses = prime_list(sub(cy, "witnesses"));
    cr.is_cyclic = field<bool>(cy, "cyclic");
    if (j.contains("construction")) {
        Json const& k = j.at("construction");
        ChebyshevReplay cb;
        cb.s = field<int>(k, "s");
        cb.seed = field<std::vector<long>>(k, "seed");
        cb.final = field<std::vector<long>>(k, "a");
        Json const& d = sub(k, "deltas");
        cb.delta_g_minus_1 = field<long>(d, "a_g-1");
        cb.delta_g = field<long>(d, "a_g");
        cb.delta_g_minus_2 = field<long>(d, "a_g-2");
        cb.coprimality_shift = field<long>(d, "coprimality");
        cb.route = field<std::string>(k, "route");
        Json const& b = sub(k, "bound");
        try {
            cb.bound_rational = mpq_class(field<std::string>(b, "rational"));
            cb.bound_sqrt_half = mpq_class(field<std::string>(b, "sqrt_half"));
        } catch (std::invalid_argument const& e) {
            throw CorruptCertificate(std::string("bound: ") + e.what());
        }
        cb.bound_below_one = field<bool>(b, "below_one");
        c.chebyshev = std::move(cb);
    }
    return c;
}

namespace {

void replay_chebyshev(Certificate const& c, ReverifyResult& out)
{
    if (!c.chebyshev) {
        out.fail("chebyshev provenance without construction data");
        return;
    }
    auto const& cb = *c.chebyshev;
    int g = c.g, s = cb.s;
    auto width = static_cast<size_t>(g - s + 1);
    if (s < 1 || s > g || cb.seed.size() != width || cb.final.size() != width) {
        out.fail("construction vectors have the wrong length");
        return;
    }
    CandidateForm seed{g, s, std::vector<long>(static_cast<size_t>(g) + 1, 0)};
    CandidateForm fin = seed;
    seed.a(0) = fin.a(0) = 1;
    for (size_t i = 0; i < width; ++i) {
        long sv = cb.seed[i];
        if (sv != 0 && sv != 1)
            out.fail("seed entries must be 0 or 1");
        seed.a(s + static_cast<int>(i)) = sv;
        fin.a(s + static_cast<int>(i)) = cb.final[i];
        if (((cb.final[i] - sv) % 2) != 0)
            out.fail("final coefficient a_" + std::to_string(s + static_cast<int>(i)) + " differs from the seed by an odd amount");
    }
    if (!is_irreducible_gf2(reduce_mod2(seed)))
        out.fail("seed is not irreducible over GF(2)");
    if (!(Gf2Poly::reduce(c.h) == reduce_mod2(seed)))
        out.fail("h does not reduce mod 2 to the seed");
    if (!(assemble(fin) == c.h))
        out.fail("h is not the Chebyshev assembly of the recorded coefficients");
    if (cb.delta_g_minus_1 % 2 || cb.delta_g % 2 || cb.delta_g_minus_2 % 2 || cb.coprimality_shift % 2)
        out.fail("a recorded delta is odd");
    if (fin.a(g - 1) - seed.a(g - 1) != cb.delta_g_minus_1 ||
        fin.a(g) - seed.a(g) != cb.delta_g + cb.coprimality_shift ||
        fin.a(g - 2) - seed.a(g - 2) != cb.delta_g_minus_2)
        out.fail("recorded deltas do not match seed -> final");
    HoweBound hb = howe_bound(fin);
    if (hb.rational != cb.bound_rational || hb.sqrt_half != cb.bound_sqrt_half)
        out.fail("stored bound differs from the recomputed bound");
    if (!hb.below_one)
        out.fail("bound is not below one");
    if (hb.below_one != cb.bound_below_one)
        out.fail("stored bound verdict differs");
    if (!is_totally_real_within_sq(c.h, mpq_class(8)))
        out.fail("h has a root with square > 8");
}

} // namespace

ReverifyResult reverify(Json const& j)
{
    Certificate c = certificate_from_json(j);
    ReverifyResult out;
    if (field<long>(j, "p") != c.q.p() || field<unsigned>(j, "r") != c.q.r())
        out.fail("(p, r) does not decompose q");
    if (c.g < 2)
        out.fail("dimension must be >= 2");
    if (c.h.degree() != c.g || !c.h.is_monic())
        out.fail("h must be monic of degree g");
    if (c.f.degree() != 2 * c.g || !c.f.is_monic())
        out.fail("f must be monic of degree 2g");
    if (!out.ok)
        return out;
    if (c.case_class != case_of(c.q))
        out.fail("case does not match q");
    if (c.provenance == Provenance::Exceptional) {
        try {
            if (!(trace_poly(c.f, c.q.z()) == c.h))
                out.fail("h is not the trace polynomial of f");
        } catch (NotWeilShape const& e) {
            out.fail(e.what());
        }
    } else if (!(expand_h_to_f_unchecked(c.h, c.q.z()) == c.f)) {
        out.fail("f is not the expansion of h");
    }
    if (!out.ok)
        return out;

    Reports r = compute_reports(c.h, c.f, c.q);
    auto cmp = [&](bool stored, bool fresh, char const* name) {
        if (stored != fresh)
            out.fail(std::string("report '") + name + "' does not reproduce");
    };
    cmp(c.reports.irreducible, r.irreducible, "irreducible");
    cmp(c.reports.totally_real, r.totally_real, "totally_real");
    cmp(c.reports.ordinary, r.ordinary, "ordinary");
    cmp(c.reports.case_conditions, r.case_conditions, "case_conditions");
    cmp(c.reports.simple_ordinary, r.simple_ordinary, "simple_ordinary");
    auto const& sc = c.reports.cyclicity;
    auto const& fc = r.cyclicity;
    if (sc.f1 != fc.f1)
        out.fail("f1 does not reproduce");
    if (sc.fp1 != fc.fp1)
        out.fail("fprime1 does not reproduce");
    if (sc.hat_f1 != fc.hat_f1)
        out.fail("hat_f1 does not reproduce");
    std::vector<mpz_class> primes;
    for (auto const& pp : fc.f1_factors)
        primes.push_back(pp.prime);
    std::vector<mpz_class> stored_primes;
    for (auto const& pp : sc.f1_factors)
        stored_primes.push_back(pp.prime);
    if (stored_primes != primes)
        out.fail("radical_primes do not reproduce");
    if (sc.witnesses != fc.witnesses)
        out.fail("witnesses do not reproduce");
    if (sc.is_cyclic != fc.is_cyclic)
        out.fail("cyclic verdict does not reproduce");

    Certificate fresh = c;
    fresh.reports = r;
    if (!certifies_claim(fresh))
        out.fail("recomputed reports do not establish the certificate's claim");
    if (j.contains("realizability") && j.at("realizability") != fresh.realizability())
        out.fail("realizability label does not match");
    if (c.provenance == Provenance::Chebyshev)
        replay_chebyshev(c, out);
    return out;
}

std::string render_text(Certificate const& c)
{
    std::ostringstream os;
    auto const& r = c.reports;
    auto const& cy = r.cyclicity;
    auto yes = [](bool b) { return b ? "yes" : "NO"; };
    os << "g = " << c.g << ", q = " << c.q.q() << " = " << c.q.p() << "^" << c.q.r() << "  (case " << to_string(c.case_class)
       << ", provenance " << to_string(c.provenance) << ")\n";
    os << "  h(x) = " << c.h << "\n";
    os << "  f(x) = " << c.f << "\n";
    os << "  h totally real, roots^2 <= 4q ........ " << yes(r.totally_real) << "\n";
    os << "  f irreducible over Q .................. " << yes(r.irreducible) << "\n";
    os << "  ordinary, gcd(h(0), q) = 1 ............ " << yes(r.ordinary) << "\n";
    os << "  3 | h'(n) and 9 | h(n), n = " << case_point(c.case_class) << " ......... " << yes(r.case_conditions) << "\n";
    os << "  simple ordinary isogeny class ......... " << yes(r.simple_ordinary) << "\n";
    os << "  f(1) = " << cy.f1 << ", f'(1) = " << cy.fp1 << ", f(1)/rad = " << cy.hat_f1 << "\n";
    os << "  witnesses (l | f'(1), l^2 | f(1)): ";
    if (cy.witnesses.empty())
        os << "none";
    for (size_t i = 0; i < cy.witnesses.size(); ++i)
        os << (i ? ", " : "") << cy.witnesses[i];
    os << "\n";
    if (!cy.is_cyclic) {
        os << "  => non-cyclic: for l = " << cy.witnesses.front() << ", l divides f'(1) and l^2 divides f(1)\n";
    } else {
        os << "  => cyclic\n";
    }
    os << "  realizability: " << c.realizability() << "\n";
    if (c.chebyshev) {
        auto const& cb = *c.chebyshev;
        os << "  construction: s = " << cb.s << ", route " << cb.route << ", bound = " << cb.bound_rational << " + "
           << cb.bound_sqrt_half << "/sqrt(2) " << (cb.bound_below_one ? "< 1" : ">= 1") << "\n";
    }
    return os.str();
}

} // namespace noncyclic
