#ifndef NONCYCLIC_CERTIFICATE_HPP
#define NONCYCLIC_CERTIFICATE_HPP

#include "noncyclic/cyclicity.hpp"
#include "noncyclic/weil.hpp"

#include "json.hpp"

#include <optional>
#include <string>
#include <vector>

namespace noncyclic {

using Json = nlohmann::ordered_json;

constexpr int certificate_version = 1;

enum class Provenance { Table, Search, Chebyshev, Exceptional };

std::string to_string(Provenance p);
Provenance provenance_from_string(std::string const& s);

struct Reports {
    bool irreducible = false;
    bool totally_real = false;
    bool ordinary = false;
    bool case_conditions = false;
    bool simple_ordinary = false;
    CyclicityReport cyclicity;
};

/// Replay data for the g >= 14 construction.
struct ChebyshevReplay {
    int s = 4;
    std::vector<long> seed;  ///< (a_s, ..., a_g) in {0,1}
    std::vector<long> final; ///< after all adjustments
    long delta_g_minus_1 = 0;
    long delta_g = 0;
    long delta_g_minus_2 = 0;
    long coprimality_shift = 0;
    std::string route;
    mpq_class bound_rational;
    mpq_class bound_sqrt_half;
    bool bound_below_one = false;
};

struct Certificate {
    int g = 0;
    FieldSize q{2};
    CaseClass case_class = CaseClass::QPlus;
    IntPoly h;
    IntPoly f;
    Reports reports;
    Provenance provenance = Provenance::Table;
    std::optional<ChebyshevReplay> chebyshev;

    /// "ordinary Honda-Tate" when irreducible and ordinary, else "listed, unverified".
    std::string realizability() const;
};

/// Computes every report from (h, f, q).
Reports compute_reports(IntPoly const& h, IntPoly const& f, FieldSize const& q);

/// The claim a certificate of this provenance makes, evaluated on its reports.
bool certifies_claim(Certificate const& c);

Json cyclicity_to_json(CyclicityReport const& r);
Json to_json(Certificate const& c);
/// Throws CorruptCertificate on malformed input.
Certificate certificate_from_json(Json const& j);

struct CorruptCertificate : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ReverifyResult {
    bool ok = true;
    std::vector<std::string> failures;
    void fail(std::string msg)
    {
        ok = false;
        failures.push_back(std::move(msg));
    }
};

/* Recomputes every predicate from the raw coefficients in j, ignoring the
 * stored booleans except to compare them against the recomputation.
 */
ReverifyResult reverify(Json const& j);

std::string render_text(Certificate const& c);

} // namespace noncyclic

#endif
