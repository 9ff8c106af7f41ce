#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <json.hpp>

#include "secregen/builders.hpp"
#include "secregen/descriptor.hpp"

using namespace secregen;

TEST_CASE("descriptor round-trip is the identity on every field") {
    std::vector<LinearDssCode> codes;
    codes.push_back(build_322_type1(FiniteField::prime(5)));
    codes.push_back(build_322_type1(FiniteField::extension(2, 2))); // extension modulus
    codes.push_back(build_423_l1(FiniteField::prime(5)));
    codes.push_back(build_433_l1_minimal());
    codes.push_back(build_433_l1_interior_default());
    codes.push_back(build_433_keyless(FiniteField::prime(2)));
    codes.push_back(build_mbr_rbt(4, 2, 3, 1, FiniteField::prime(7)));
    codes.push_back(build_n_minus_2(5, FiniteField::prime(7)));
    for (const LinearDssCode& code : codes) {
        CAPTURE(code.builder());
        std::string text = code_to_json(code);
        LinearDssCode parsed = code_from_json(text);
        CHECK(parsed == code);
        // serialization is byte-stable
        CHECK(code_to_json(parsed) == text);
    }
}

TEST_CASE("parsing re-runs the verification gate") {
    LinearDssCode code = build_433_l1_minimal();
    std::string text = code_to_json(code);

    // tamper: claim the single-key code resists a repair-data wiretap
    std::string tampered = text;
    auto pos = tampered.find("\"attack\": \"type1\"");
    REQUIRE(pos != std::string::npos);
    tampered.replace(pos, 17, "\"attack\": \"type2\"");
    CHECK_THROWS_AS(code_from_json(tampered), std::runtime_error);
    // without the gate the tampered descriptor still parses structurally
    CHECK(code_from_json_unverified(tampered).params().attack == Attack::type2);

    // tamper: zero a generator entry so reconstruction breaks
    nlohmann::json doc = nlohmann::json::parse(text);
    doc["generator"]["data"][0] = 0;
    CHECK_THROWS_AS(code_from_json(doc.dump()), std::runtime_error);

    CHECK_THROWS(code_from_json("{\"schema_version\": 99}"));
    CHECK_THROWS(code_from_json("not json"));
}

TEST_CASE("verification report structure") {
    LinearDssCode fig1 = build_322_type1(FiniteField::prime(5));
    std::string pass_report =
        verification_report_json(fig1, Attack::type1, 1, /*exhaustive=*/true, 1ull << 20);
    CHECK(pass_report.find("\"pass\": true") != std::string::npos);
    CHECK(pass_report.find("\"exhaustive\"") != std::string::npos);
    CHECK(pass_report.find("\"agrees_with_rank\": true") != std::string::npos);

    std::string fail_report =
        verification_report_json(fig1, Attack::type2, 1, /*exhaustive=*/false, 0);
    CHECK(fail_report.find("\"pass\": false") != std::string::npos);
    CHECK(fail_report.find("\"leakage\": 1") != std::string::npos);

    // byte stability
    CHECK(pass_report ==
          verification_report_json(fig1, Attack::type1, 1, true, 1ull << 20));
}
