#include <doctest.h>

#include <sstream>

#include "pgmod/cli.hpp"
#include "pgmod/json_io.hpp"

using namespace pgmod;

namespace {

struct CliRun {
    int code;
    std::string out;
    std::string err;
};

CliRun run(std::vector<std::string> args) {
    std::ostringstream out, err;
    int code = run_cli(args, out, err);
    return {code, out.str(), err.str()};
}

} // namespace

TEST_CASE("reduce subcommand") {
    auto r = run({"reduce", "--p", "5", "--k", "4", "--ap", "5"});
    REQUIRE(r.code == 0);
    json j = json::parse(r.out);
    CHECK(j["case"] == "1");
    CHECK(j["galois"]["kind"] == "irred");
    CHECK(j["galois"]["r"] == 2);
    CHECK(j["gl2"]["atoms"][0]["kind"] == "supersingular");

    r = run({"reduce", "--p", "5", "--k", "7", "--ap", "25"});
    REQUIRE(r.code == 0);
    j = json::parse(r.out);
    CHECK(j["case"] == "2b");
    CHECK(j["galois"]["kind"] == "split");

    // out of the table's range: exit 2
    r = run({"reduce", "--p", "5", "--k", "12", "--ap", "5"});
    CHECK(r.code == 2);

    // undetermined symbolic branch: exit 3
    r = run({"reduce", "--p", "5", "--k", "9", "--val-only", "--val", "1"});
    CHECK(r.code == 3);

    // decidable symbolic branch
    r = run({"reduce", "--p", "5", "--k", "7", "--val-only", "--val", "2"});
    REQUIRE(r.code == 0);
    CHECK(json::parse(r.out)["case"] == "2b");

    // eisenstein digits: a_p = 2 pi with pi^2 = 5, to enough precision to
    // certify val(a_p^2 + p)
    r = run({"reduce", "--p", "5", "--k", "11", "--e", "2", "--ap", "pi:1:2,0,0,0,0,0,0,0"});
    REQUIRE(r.code == 0);
    CHECK(json::parse(r.out)["case"] == "4b");
    // a single known digit cannot separate the two branches: exit 3
    r = run({"reduce", "--p", "5", "--k", "11", "--e", "2", "--ap", "pi:1:2"});
    CHECK(r.code == 3);
}

TEST_CASE("correspond subcommand") {
    GaloisRep v = canonical_rho(5, 1, MulCharacter::trivial(5));
    auto r = run({"correspond", "--dir", "g2p", "--input", galois_to_json(v).dump()});
    REQUIRE(r.code == 0);
    json pi = json::parse(r.out);
    CHECK(pi["atoms"].size() == 1);
    CHECK(pi["atoms"][0]["kind"] == "supersingular");
    // round trip through the other direction
    auto r2 = run({"correspond", "--dir", "p2g", "--input", r.out});
    REQUIRE(r2.code == 0);
    CHECK(galois_from_json(json::parse(r2.out)) == v);
    // a lone character is not in the image: exit 2
    json lone = gss_to_json(5, {GAtom::one_dim(MulCharacter::trivial(5))});
    auto r3 = run({"correspond", "--dir", "p2g", "--input", lone.dump()});
    CHECK(r3.code == 2);
}

TEST_CASE("canonicalize subcommand") {
    auto r = run({"canonicalize", "--kind", "rho", "--p", "5", "--r", "3", "--chi", "w^1"});
    REQUIRE(r.code == 0);
    json j = json::parse(r.out);
    CHECK(j["canonical"]["r"] == 1);
    CHECK(j["orbit"].size() <= 4);
    bool has_trivial = false;
    for (const auto& t : j["orbit"])
        if (t[0] == 1 && t[1] == "1") has_trivial = true;
    CHECK(has_trivial);

    r = run({"canonicalize", "--kind", "pi", "--p", "5", "--r", "0", "--lambda", "1"});
    REQUIRE(r.code == 0);
    j = json::parse(r.out);
    REQUIRE(j["canonical"]["atoms"].size() == 2);
    CHECK(j["canonical"]["atoms"][0]["kind"] == "one-dim");
    CHECK(j["canonical"]["atoms"][1]["kind"] == "special-twist");

    r = run({"canonicalize", "--kind", "ind-omega2", "--p", "5", "--h", "6"});
    CHECK(r.code == 2);
}

TEST_CASE("check subcommand and determinism") {
    auto r1 = run({"check", "--suite", "corresp", "--p", "3", "--samples", "16", "--seed", "9"});
    REQUIRE(r1.code == 0);
    auto r2 = run({"check", "--suite", "corresp", "--p", "3", "--samples", "16", "--seed", "9"});
    CHECK(r1.out == r2.out);
    json j = json::parse(r1.out);
    REQUIRE(j.is_array());
    CHECK(j[0]["suite"] == "corresp");
    CHECK(j[0]["ok"] == true);
    for (const auto& prop : j[0]["properties"]) CHECK(prop["violations"] == 0);
}

TEST_CASE("json schema round trips") {
    // tower
    CharModel model =
        CharModel::make(5, 2, 1, FieldElement::from_int(5, 2, 2), CharModel::Flavor::sharp);
    Tower t = standard_tower(model, MulCharacter::trivial(5), 3, 12);
    Tower t2 = tower_from_json(tower_to_json(t));
    REQUIRE(t2.depth() == t.depth());
    for (int i = 0; i < t.depth(); ++i)
        CHECK(t2.entries[i].equals_on_overlap(t.entries[i]));
    CHECK(t2.model.r == t.model.r);
    CHECK(t2.model.y == t.model.y);
    // borel element
    BorelElement g;
    g.x = QpElement::from_rational(5, 10, 3, 12);
    g.j = -1;
    g.a = ZpDigits::from_int(5, 7, 12);
    g.z = QpElement::from_rational(5, 1, 5, 12);
    BorelElement g2 = borel_from_json(5, borel_to_json(g));
    CHECK(g2.j == g.j);
    CHECK(g2.x.val == g.x.val);
    CHECK(g2.z.val == g.z.val);
    CHECK(g2.a.value_mod(12) == g.a.value_mod(12));
    // p-adic scalar
    PadicScalar s = PadicScalar::from_rational(5, 2, 30, 7, 16);
    PadicScalar s2 = scalar_from_json(scalar_to_json(s));
    CHECK(s2.valuation() == s.valuation());
    CHECK(scalar_to_json(s2).dump() == scalar_to_json(s).dump());
    // measures and step functions serialize as coset-indexed tables
    MeasureZp nu = MeasureZp::dirac(5, 2, 1, 3);
    json mj = measure_to_json(nu);
    CHECK(mj["level"] == 1);
    CHECK(mj["values"]["3"] == "1");
    CHECK(mj["values"].size() == 1);
    StepFunction ind = StepFunction::indicator_zp(5, 2, 1);
    json sj = step_to_json(ind);
    CHECK(sj["shift"] == 0);
    CHECK(sj["values"].size() == 5);
    // galois / gss / bss byte-stable canonical serialization
    GaloisRep split = GaloisRep::split(MulCharacter::omega(5, 1),
                                       MulCharacter::mu(FieldElement::from_int(5, 2, 2)));
    CHECK(galois_from_json(galois_to_json(split)) == split);
    GSS pi = galois_to_gl2(split);
    CHECK(gss_from_json(gss_to_json(5, pi)) == pi);
    BSS prof = restrict_to_borel(pi);
    CHECK(bss_from_json(bss_to_json(5, prof)) == prof);
    CHECK(gss_to_json(5, pi).dump() == gss_to_json(5, gss_from_json(gss_to_json(5, pi))).dump());
}
