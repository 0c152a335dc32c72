#include "quatunit/json_io.hpp"

#include <doctest.h>

#include <functional>

using namespace quatunit;

namespace {

ErrorKind kind_of(const std::function<void()>& fn) {
    try {
        fn();
    } catch (const Error& e) {
        return e.kind();
    }
    return ErrorKind::Internal;
}

} // namespace

TEST_CASE("rationals round trip as strings") {
    for (const Rat& q : {Rat(0), Rat(7), make_rat(Int(-3), Int(4)), make_rat(Int(22), Int(7))}) {
        Json j = rat_to_json(q);
        CHECK(j.is_string());
        CHECK(rat_from_json(j) == q);
    }
    CHECK(rat_from_json(Json("-3/4")) == make_rat(Int(-3), Int(4)));
    CHECK(rat_from_json(Json(5)) == Rat(5));
    CHECK(kind_of([] { rat_from_json(Json("1/0")); }) != ErrorKind::Internal);
    CHECK(kind_of([] { rat_from_json(Json("abc")); }) == ErrorKind::InvalidInput);
}

TEST_CASE("algebraic numbers round trip") {
    AlgebraicReal third(make_rat(Int(1), Int(3)));
    Json j1 = algebraic_to_json(third);
    CHECK(j1.is_string());
    CHECK(algebraic_from_json(j1) == third);

    AlgebraicReal s2 = ar_sqrt(AlgebraicReal(2L));
    Json j2 = algebraic_to_json(s2);
    CHECK(j2.is_object());
    CHECK(j2.contains("minpoly"));
    CHECK(j2.contains("interval"));
    AlgebraicReal back = algebraic_from_json(j2);
    CHECK(back == s2);

    AlgebraicReal golden = ar_sqrt(AlgebraicReal(5L));
    CHECK(algebraic_from_json(algebraic_to_json(golden)) == golden);

    CHECK(kind_of([] { algebraic_from_json(Json::object()); }) == ErrorKind::InvalidInput);
    // Interval isolating no root of the given polynomial.
    Json bad;
    bad["minpoly"] = Json::array({"-2", "0", "1"});
    bad["interval"] = Json::array({"2", "3"});
    CHECK(kind_of([bad] { algebraic_from_json(bad); }) != ErrorKind::Internal);
}

TEST_CASE("quaternions and semigroups round trip") {
    Quaternion q = Quaternion::from_rat(Rat(1), make_rat(Int(-1), Int(2)), Rat(0), Rat(3));
    Json j = quaternion_to_json(q);
    CHECK(j.is_array());
    CHECK(j.size() == 4);
    CHECK(q_equal(quaternion_from_json(j), q));

    SemigroupSpec spec;
    spec.generators = {Quaternion::from_rat(Rat(1), Rat(1), Rat(0), Rat(0)),
                       Quaternion::from_rat(Rat(2), Rat(0), Rat(0), Rat(0))};
    spec.labels = {"p", "two"};
    Json js = semigroup_to_json(spec);
    SemigroupSpec back = semigroup_from_json(js);
    REQUIRE(back.generators.size() == 2);
    CHECK(q_equal(back.generators[0], spec.generators[0]));
    CHECK(back.labels == spec.labels);

    // Labels are optional on input.
    Json unlabeled;
    unlabeled["generators"] = Json::array({quaternion_to_json(spec.generators[1])});
    SemigroupSpec anon = semigroup_from_json(unlabeled);
    CHECK(anon.generators.size() == 1);
    CHECK(anon.labels.empty());
}

TEST_CASE("instances round trip and report missing fields") {
    UnitEquationInstance inst;
    inst.a = Quaternion::from_rat(Rat(1), Rat(0), Rat(0), Rat(0));
    inst.a_prime = inst.a;
    inst.b = Quaternion::from_rat(Rat(-1), Rat(0), Rat(0), Rat(0));
    inst.b_prime = inst.a;
    inst.gamma1.generators = {Quaternion::from_rat(Rat(3), Rat(0), Rat(0), Rat(0))};
    inst.gamma2.generators = {Quaternion::from_rat(Rat(2), Rat(0), Rat(0), Rat(0))};
    Json j = instance_to_json(inst);
    UnitEquationInstance back = instance_from_json(j);
    CHECK(q_equal(back.b, inst.b));
    CHECK(q_equal(back.gamma1.generators[0], inst.gamma1.generators[0]));

    j.erase("b_prime");
    try {
        instance_from_json(j);
        CHECK(false);
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::InvalidInput);
        CHECK(std::string(e.what()).find("b_prime") != std::string::npos);
    }
}

TEST_CASE("certificate constants round trip without materializing") {
    BakerCertificate cert;
    cert.k = ScaledRat(make_rat(Int(3), Int(4)), Int(-1000000));
    cert.C = make_rat(Int(12345), Int(7));
    cert.r = 3;
    cert.degree = 8;
    Json j = baker_to_json(cert);
    CHECK(j["k"].is_string());
    BakerCertificate back = baker_from_json(j);
    CHECK(back.k.compare(cert.k) == 0);
    CHECK(back.C == cert.C);
    CHECK(back.r == 3);
    CHECK(back.degree == 8);
}

TEST_CASE("scaled rational strings parse back") {
    ScaledRat tiny(make_rat(Int(5), Int(9)), Int("-123456789012345678901234567890"));
    ScaledRat back = ScaledRat::parse(tiny.to_string());
    CHECK(back.compare(tiny) == 0);
    ScaledRat unit = ScaledRat::one();
    CHECK(ScaledRat::parse(unit.to_string()).compare(unit) == 0);
}

TEST_CASE("caps serialize with overflow classification") {
    CapValue small{Int(42), false};
    Json js = cap_to_json(small);
    CHECK(js["status"] == "FINITE");
    CHECK(js["value"] == "42");

    CapValue big;
    big.value = Int(1) << 70;
    big.overflow = true;
    Json jb = cap_to_json(big);
    CHECK(jb["status"] == "OVERFLOW");
    CHECK(jb["approx"] == "1.18e+21");
    CHECK(!jb.contains("value"));
}

TEST_CASE("words serialize as label sequences") {
    SemigroupSpec spec;
    spec.generators = {Quaternion::from_rat(Rat(2), Rat(0), Rat(0), Rat(0)),
                       Quaternion::from_rat(Rat(3), Rat(0), Rat(0), Rat(0))};
    spec.labels = {"two", "three"};
    Word w{std::vector<int>{0, 1, 0}};
    Json j = word_to_json(w, spec);
    CHECK(j == Json::array({"two", "three", "two"}));

    SemigroupSpec bare;
    bare.generators = spec.generators;
    CHECK(word_to_json(w, bare) == Json::array({"g1", "g2", "g1"}));
}

TEST_CASE("run config omits the thread count") {
    RunConfig cfg;
    cfg.threads = 8;
    Json j = run_config_to_json(cfg);
    CHECK(j.contains("oracle_len"));
    CHECK(j.contains("precision_bits"));
    CHECK(j.contains("element_cap"));
    CHECK(j.dump().find("thread") == std::string::npos);
}

TEST_CASE("completeness labels") {
    CHECK(completeness_to_string(Completeness::OracleCompleteBelowCap) ==
          "ORACLE_COMPLETE_BELOW_CAP");
    CHECK(completeness_to_string(Completeness::OracleWindowOnly) == "ORACLE_WINDOW_ONLY");
}

TEST_CASE("malformed documents raise invalid input") {
    CHECK(kind_of([] { quaternion_from_json(Json::array({"1", "2"})); }) ==
          ErrorKind::InvalidInput);
    CHECK(kind_of([] { semigroup_from_json(Json{{"generators", "nope"}}); }) ==
          ErrorKind::InvalidInput);
    CHECK(kind_of([] { instance_from_json(Json(3)); }) == ErrorKind::InvalidInput);
    CHECK(kind_of([] { load_json_file("/nonexistent/file.json"); }) == ErrorKind::InvalidInput);
}

TEST_CASE("endo instances parse from json") {
    Json j;
    j["discriminant"] = "-4";
    j["f"] = Json::array({"2", "0"});
    j["h"] = Json::array({"1", "1"});
    j["m0"] = 2;
    j["n0"] = 4;
    EndoInstance inst = endo_from_json(j);
    CHECK(inst.order.D == -4);
    CHECK(inst.f == QuadElem{Int(2), Int(0)});
    CHECK(inst.m0 == 2);
    CHECK(inst.n0 == 4);

    Json defaults;
    defaults["discriminant"] = "-4";
    defaults["f"] = Json::array({"2", "0"});
    defaults["h"] = Json::array({"1", "1"});
    EndoInstance d = endo_from_json(defaults);
    CHECK(d.m0 == 1);
    CHECK(d.n0 == 1);
}

TEST_CASE("solution sets serialize completely") {
    UnitEquationInstance inst;
    inst.a = Quaternion::from_rat(Rat(1), Rat(0), Rat(0), Rat(0));
    inst.a_prime = inst.a;
    inst.b = Quaternion::from_rat(Rat(-1), Rat(0), Rat(0), Rat(0));
    inst.b_prime = inst.a;
    inst.gamma1.generators = {Quaternion::from_rat(Rat(3), Rat(0), Rat(0), Rat(0))};
    inst.gamma2.generators = {Quaternion::from_rat(Rat(2), Rat(0), Rat(0), Rat(0))};
    RunConfig cfg;
    cfg.oracle_len = 8;
    SolutionSet sols = solve_main(inst, cfg);
    Json j = solution_set_to_json(sols, inst);
    CHECK(j.contains("status"));
    CHECK(j.contains("solutions"));
    CHECK(j["oracle_window"] == 8);
    REQUIRE(j["solutions"].size() == 2);
    CHECK(j["solutions"][0]["f_word"] == Json::array({"g1"}));
    CHECK(j["certificate"].contains("reduction"));
    CHECK(j["certificate"]["reduction"]["h_cap"]["status"] == "FINITE");
}
