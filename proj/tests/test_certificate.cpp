#include "doctest.h"

#include "noncyclic/certificate.hpp"
#include "noncyclic/hsearch.hpp"

using namespace noncyclic;

namespace {

bool reverifies(Json const& j)
{
    return reverify(j).ok;
}

} // namespace

TEST_CASE("json round trip")
{
    for (auto [g, q] : {std::pair{2, 5L}, {7, 27L}, {14, 2L}, {2, 3L}}) {
        for (auto const& c : certify(g, FieldSize(q))) {
            Json j = to_json(c);
            Certificate back = certificate_from_json(j);
            CHECK(back.h == c.h);
            CHECK(back.f == c.f);
            CHECK(back.provenance == c.provenance);
            CHECK(to_json(back) == j);
            CHECK(reverifies(j));
            CHECK(j["v"] == 1);
            CHECK(j["p"].get<long>() == FieldSize(q).p());
        }
    }
}

TEST_CASE("schema order and field types")
{
    Json j = to_json(certify(2, FieldSize(5)).front());
    std::vector<std::string> keys;
    for (auto it = j.begin(); it != j.end(); ++it)
        keys.push_back(it.key());
    CHECK(keys == std::vector<std::string>{"v", "g", "q", "p", "r", "provenance", "case", "h", "f", "reports", "realizability"});
    CHECK(j["h"][0].is_string());
    auto const& cy = j["reports"]["cyclicity"];
    CHECK(cy["f1"] == "18");
    CHECK(cy["fprime1"] == "-12");
    CHECK(cy["radical_primes"] == Json::array({2, 3}));
    CHECK(cy["witnesses"] == Json::array({3}));
    CHECK(cy["cyclic"] == false);
}

TEST_CASE("tampering is detected")
{
    Json good = to_json(certify(14, FieldSize(2)).front());
    REQUIRE(reverifies(good));

    Json t = good;
    t["reports"]["cyclicity"]["f1"] = "1";
    CHECK_FALSE(reverifies(t));

    t = good;
    t["h"][0] = mpz_class(mpz_class(t["h"][0].get<std::string>()) + 2).get_str();
    CHECK_FALSE(reverifies(t));

    t = good;
    t["reports"]["irreducible"] = false;
    CHECK_FALSE(reverifies(t));

    t = good;
    t["construction"]["seed"][0] = 1 - t["construction"]["seed"][0].get<long>();
    CHECK_FALSE(reverifies(t));

    t = good;
    t["construction"]["bound"]["rational"] = "1/2";
    CHECK_FALSE(reverifies(t));

    t = good;
    t["case"] = "3|q-1";
    CHECK_FALSE(reverifies(t));

    t = good;
    t["q"] = 4;
    CHECK_FALSE(reverifies(t));

    t = good;
    t["realizability"] = "listed, unverified";
    CHECK_FALSE(reverifies(t));
}

TEST_CASE("consistent edits to f and h still fail the claim")
{
    // a cyclic but otherwise valid class
    Certificate c = certify(2, FieldSize(5)).front();
    c.h = IntPoly{-1, 0, 1}; // x^2 - 1, reducible
    c.f = expand_h_to_f_unchecked(c.h, 5);
    c.reports = compute_reports(c.h, c.f, c.q);
    CHECK_FALSE(certifies_claim(c));
    CHECK_FALSE(reverifies(to_json(c)));
}

TEST_CASE("corrupt certificates throw")
{
    Json good = to_json(certify(2, FieldSize(5)).front());
    Json t = good;
    t.erase("f");
    CHECK_THROWS_AS(reverify(t), CorruptCertificate);
    t = good;
    t["h"] = "x^2";
    CHECK_THROWS_AS(reverify(t), CorruptCertificate);
    t = good;
    t["q"] = 6;
    CHECK_THROWS_AS(reverify(t), CorruptCertificate);
    t = good;
    t["provenance"] = "magic";
    CHECK_THROWS_AS(reverify(t), CorruptCertificate);
    t = good;
    t["v"] = 2;
    CHECK_THROWS_AS(reverify(t), CorruptCertificate);
    CHECK_THROWS_AS(reverify(Json::array()), CorruptCertificate);
}

TEST_CASE("certification is deterministic")
{
    for (auto [g, q] : {std::pair{3, 7L}, {16, 9L}, {2, 32L}})
        CHECK(to_json(certify(g, FieldSize(q)).front()).dump() == to_json(certify(g, FieldSize(q)).front()).dump());
}

TEST_CASE("text rendering names the witness")
{
    std::string s = render_text(certify(2, FieldSize(5)).front());
    CHECK(s.find("x^2 - 18") != std::string::npos);
    CHECK(s.find("l = 3") != std::string::npos);
    CHECK(s.find("non-cyclic") != std::string::npos);
}
