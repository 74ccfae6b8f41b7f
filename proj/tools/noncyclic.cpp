// noncyclic: certify, verify the table, check a polynomial, enumerate, reverify.

#include "noncyclic/certificate.hpp"
#include "noncyclic/chebgen.hpp"
#include "noncyclic/enumerate.hpp"
#include "noncyclic/hsearch.hpp"
#include "noncyclic/irreducible.hpp"
#include "noncyclic/parallel.hpp"
#include "noncyclic/realroots.hpp"

#include "CLI11.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

using namespace noncyclic;

namespace {

// Exit codes.
constexpr int ok_exit = 0;
constexpr int failed_exit = 1;
constexpr int usage_exit = 2;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Options {
    int g = 0;
    long q = 0;
    std::string poly;
    bool as_h = false;
    std::string format = "json";
    std::string output;
    unsigned jobs = 1;
    bool allow_large = false;
    bool summary = false;
    std::string path;
};

class Sink {
  public:
    explicit Sink(std::string const& path)
    {
        if (!path.empty()) {
            file_.open(path);
            if (!file_)
                throw UsageError("cannot open output file '" + path + "'");
        }
    }
    std::ostream& out() { return file_.is_open() ? static_cast<std::ostream&>(file_) : std::cout; }

  private:
    std::ofstream file_;
};

FieldSize field_size(long q)
{
    try {
        return FieldSize(q);
    } catch (InvalidQ const& e) {
        throw UsageError(e.what());
    }
}

IntPoly parse_poly(std::string const& list)
{
    std::vector<std::string> parts;
    std::stringstream ss(list);
    std::string item;
    while (std::getline(ss, item, ','))
        parts.push_back(item);
    if (parts.empty())
        throw UsageError("--poly needs an ascending comma-separated coefficient list");
    try {
        return IntPoly::from_strings(parts);
    } catch (std::invalid_argument const& e) {
        throw UsageError(std::string("invalid polynomial: ") + e.what());
    }
}

int run_certify(Options const& o)
{
    if (o.g < 2)
        throw UsageError("certify covers dimension g > 1 only (got g = " + std::to_string(o.g) + ")");
    FieldSize q = field_size(o.q);
    auto certs = certify(o.g, q, o.jobs);
    Sink sink(o.output);
    if (o.format == "text") {
        for (auto const& c : certs)
            sink.out() << render_text(c);
    } else if (certs.size() == 1) {
        sink.out() << to_json(certs.front()).dump(2) << "\n";
    } else {
        Json a = Json::array();
        for (auto const& c : certs)
            a.push_back(to_json(c));
        sink.out() << a.dump(2) << "\n";
    }
    return ok_exit;
}

int run_verify_tables(Options const& o)
{
    auto const& rows = table_entries();
    std::vector<TableVerification> results(rows.size());
    parallel_for(rows.size(), o.jobs, [&](std::size_t i) { results[i] = verify_table_entry(rows[i]); });
    Sink sink(o.output);
    bool all = true;
    Json a = Json::array();
    for (auto const& v : results) {
        all = all && v.ok();
        if (o.format == "text") {
            sink.out() << (v.ok() ? "ok   " : "FAIL ") << "g=" << v.entry.g << " " << to_string(v.entry.case_class)
                       << "  " << v.entry.h << "\n";
            for (auto const& c : v.checks)
                if (!c.ok)
                    sink.out() << "       " << c.name << ": " << c.detail << "\n";
        } else {
            Json j;
            j["g"] = v.entry.g;
            j["case"] = to_string(v.entry.case_class);
            j["h"] = v.entry.h.to_strings();
            j["ok"] = v.ok();
            Json checks = Json::object();
            for (auto const& c : v.checks)
                checks[c.name] = Json{{"ok", c.ok}, {"detail", c.detail}};
            j["checks"] = checks;
            a.push_back(j);
        }
    }
    if (o.format == "text")
        sink.out() << results.size() << " rows, " << (all ? "all pass" : "FAILURES") << "\n";
    else
        sink.out() << a.dump(2) << "\n";
    return all ? ok_exit : failed_exit;
}

Json witnesses_json(CyclicityReport const& r)
{
    return cyclicity_to_json(r)["witnesses"];
}

int run_check(Options const& o)
{
    FieldSize q = field_size(o.q);
    IntPoly p = parse_poly(o.poly);
    if (!p.is_monic() || p.degree() < 1)
        throw UsageError("polynomial must be monic of positive degree");
    IntPoly f, h;
    bool shaped = true;
    if (o.as_h) {
        h = p;
        if (!is_totally_real_within_sq(h, mpq_class(4 * q.z())))
            throw UsageError("h has a root with square > 4q; it is not a real Weil polynomial");
        f = expand_h_to_f(h, q).f;
    } else {
        f = p;
        if (f.degree() % 2 != 0)
            throw UsageError("f must have even degree 2g");
        try {
            h = trace_poly(f, q.z());
        } catch (NotWeilShape const&) {
            shaped = false;
        }
    }
    int g = f.degree() / 2;
    bool weil = shaped && is_weil(f, q);

    Json j;
    j["q"] = q.q();
    j["p"] = q.p();
    j["r"] = q.r();
    j["g"] = g;
    j["f"] = f.to_strings();
    j["h"] = shaped ? Json(h.to_strings()) : Json(nullptr);
    j["weil"] = weil;
    j["irreducible"] = is_irreducible_q(f);
    j["ordinary"] = shaped && is_ordinary(h, q);
    j["simple_ordinary"] = weil && is_simple_ordinary_class(f, q);
    if (shaped)
        j["case_conditions"] = h_case_conditions(h, case_of(q));
    std::optional<CyclicityReport> rep;
    if (f.eval(1) != 0) {
        rep = cyclicity_report(f);
        j["cyclicity"] = cyclicity_to_json(*rep);
    } else {
        j["cyclicity"] = nullptr;
    }

    Sink sink(o.output);
    if (o.format == "text") {
        auto& os = sink.out();
        os << "f(x) = " << f << "  over F_" << q.q() << "\n";
        if (shaped)
            os << "h(x) = " << h << "\n";
        os << "q-Weil polynomial: " << (weil ? "yes" : "no") << "\n";
        os << "irreducible: " << (j["irreducible"].get<bool>() ? "yes" : "no")
           << ", ordinary: " << (j["ordinary"].get<bool>() ? "yes" : "no") << "\n";
        if (rep) {
            os << "f(1) = " << rep->f1 << ", f'(1) = " << rep->fp1 << "\n";
            if (rep->is_cyclic) {
                os << "cyclic\n";
            } else {
                os << "non-cyclic; witnesses:";
                for (auto const& l : rep->witnesses)
                    os << " " << l;
                os << "  (non-" << rep->witnesses.front() << "-cyclic)\n";
            }
        }
    } else {
        sink.out() << j.dump(2) << "\n";
    }
    return ok_exit;
}

int run_enumerate(Options const& o)
{
    FieldSize q = field_size(o.q);
    if (o.g < 1)
        throw UsageError("enumerate needs g >= 1");
    Sink sink(o.output);
    if (o.summary) {
        EnumerationResult r = classify_noncyclic(o.g, q, o.allow_large, o.jobs);
        Json j;
        j["g"] = r.g;
        j["q"] = r.q;
        j["total_weil"] = r.total_weil;
        Json list = Json::array();
        for (auto const& e : r.noncyclic) {
            list.push_back(Json{{"f", e.w.f.to_strings()},
                                {"h", e.h.to_strings()},
                                {"witnesses", witnesses_json(e.report)},
                                {"irreducible", e.irreducible},
                                {"ordinary", e.ordinary},
                                {"realizability", e.realizability_verified() ? "ordinary Honda-Tate" : "unverified"}});
        }
        j["noncyclic"] = list;
        Json prof = Json::object();
        for (auto const& [l, n] : r.witness_prime_profile)
            prof[std::to_string(l)] = n;
        j["witness_prime_profile"] = prof;
        sink.out() << j.dump(2) << "\n";
        return ok_exit;
    }
    auto hs = enumerate_real_weil(o.g, q, o.allow_large);
    std::vector<std::string> lines(hs.size());
    parallel_for(hs.size(), o.jobs, [&](std::size_t i) {
        IntPoly f = expand_h_to_f_unchecked(hs[i], q.z());
        CyclicityReport rep = cyclicity_report(WeilPoly{f, q, o.g});
        Json j;
        j["h"] = hs[i].to_strings();
        j["f"] = f.to_strings();
        j["cyclicity"] = cyclicity_to_json(rep);
        if (!rep.is_cyclic) {
            bool irr = is_irreducible_q(f), ord = is_ordinary(hs[i], q);
            j["irreducible"] = irr;
            j["ordinary"] = ord;
            j["realizability"] = irr && ord ? "ordinary Honda-Tate" : "unverified";
        }
        lines[i] = j.dump();
    });
    for (auto const& l : lines)
        sink.out() << l << "\n";
    return ok_exit;
}

int run_reverify(Options const& o)
{
    std::ifstream in(o.path);
    if (!in)
        throw UsageError("cannot read '" + o.path + "'");
    Json doc;
    try {
        doc = Json::parse(in);
    } catch (nlohmann::json::parse_error const& e) {
        throw UsageError(std::string("not JSON: ") + e.what());
    }
    std::vector<Json> items;
    if (doc.is_array())
        items.assign(doc.begin(), doc.end());
    else
        items.push_back(doc);
    if (items.empty())
        throw UsageError("no certificate in '" + o.path + "'");
    bool all = true;
    for (size_t i = 0; i < items.size(); ++i) {
        ReverifyResult r;
        try {
            r = reverify(items[i]);
        } catch (CorruptCertificate const& e) {
            throw UsageError(std::string("corrupt certificate: ") + e.what());
        }
        std::string tag = items.size() > 1 ? "certificate " + std::to_string(i) + ": " : "";
        if (r.ok) {
            std::cout << tag << "ok\n";
        } else {
            all = false;
            for (auto const& f : r.failures)
                std::cout << tag << "FAIL " << f << "\n";
        }
    }
    return all ? ok_exit : failed_exit;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Non-cyclic simple isogeny classes over finite fields: construction and certificates"};
    app.require_subcommand(1);
    Options o;

    auto add_format = [&](CLI::App* sub) {
        sub->add_option("--format", o.format, "json or text")->check(CLI::IsMember({"json", "text"}));
        sub->add_option("--output", o.output, "write to PATH instead of stdout");
    };
    auto add_jobs = [&](CLI::App* sub) { sub->add_option("--jobs", o.jobs, "worker threads")->check(CLI::Range(1u, 1024u)); };

    auto* cert = app.add_subcommand("certify", "construct and certify a non-cyclic class for (g, q)");
    cert->add_option("--g", o.g, "dimension (g > 1)")->required();
    cert->add_option("--q", o.q, "field size, a prime power")->required();
    add_format(cert);
    add_jobs(cert);

    auto* tables = app.add_subcommand("verify-tables", "re-verify every row of the embedded h table");
    add_format(tables);
    add_jobs(tables);

    auto* check = app.add_subcommand("check", "report on a user-supplied f (or h with --as-h)");
    check->add_option("--q", o.q, "field size, a prime power")->required();
    check->add_option("--poly", o.poly, "ascending coefficients, comma separated")->required();
    check->add_flag("--as-h", o.as_h, "the polynomial is h, not f");
    add_format(check);

    auto* en = app.add_subcommand("enumerate", "all q-Weil polynomials of degree 2g (JSON lines)");
    en->add_option("--g", o.g, "dimension")->required();
    en->add_option("--q", o.q, "field size")->required();
    en->add_flag("--summary", o.summary, "only the classification summary");
    en->add_flag("--allow-large-enumeration", o.allow_large, "lift the g <= 4, q <= 9 guard");
    en->add_option("--output", o.output, "write to PATH instead of stdout");
    add_jobs(en);

    auto* rv = app.add_subcommand("reverify", "recheck a certificate file from its raw coefficients");
    rv->add_option("path", o.path, "certificate JSON")->required();

    try {
        app.parse(argc, argv);
    } catch (CLI::ParseError const& e) {
        int code = app.exit(e);
        return code == 0 ? ok_exit : usage_exit;
    }

    try {
        if (*cert)
            return run_certify(o);
        if (*tables)
            return run_verify_tables(o);
        if (*check)
            return run_check(o);
        if (*en)
            return run_enumerate(o);
        return run_reverify(o);
    } catch (UsageError const& e) {
        std::cerr << "error: " << e.what() << "\n";
        return usage_exit;
    } catch (ScaleGuard const& e) {
        std::cerr << "error: " << e.what() << " (pass --allow-large-enumeration to override)\n";
        return usage_exit;
    } catch (std::invalid_argument const& e) {
        std::cerr << "error: " << e.what() << "\n";
        return usage_exit;
    } catch (ConstructionFailed const& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return failed_exit;
    } catch (std::exception const& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return failed_exit;
    }
}
