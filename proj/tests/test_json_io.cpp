#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <complex>
#include <string>

#include "entkit/entangler.hpp"
#include "entkit/json_io.hpp"
#include "entkit/random.hpp"

using namespace entkit;

TEST_CASE("double formatting") {
    CHECK(fmt_double(0.0) == "0");
    CHECK(fmt_double(-0.0) == "0");
    CHECK(fmt_double(0.25) == "0.25");
    CHECK(fmt_double(1.0) == "1");
    CHECK(fmt_double(-1.5) == "-1.5");
    CHECK(fmt_double(1.0 / 3.0) == "0.333333333333");
    CHECK(fmt_double(1e-15) == "1e-15");
    CHECK(fmt_double(0.7071067811865475) == "0.707106781187");
}

TEST_CASE("deterministic dump layout") {
    const std::string dumped = dump_deterministic(state_to_json(ghz_state(2)));
    CHECK(dumped ==
          "{\n"
          "  \"m\": 2,\n"
          "  \"amplitudes\": [\n"
          "    [0.707106781187, 0],\n"
          "    [0, 0],\n"
          "    [0, 0],\n"
          "    [0.707106781187, 0]\n"
          "  ]\n"
          "}\n");
    CHECK(dumped == dump_deterministic(state_to_json(ghz_state(2))));
}

TEST_CASE("dump of scalars, strings, and nesting") {
    ordered_json j;
    j["name"] = "line\nbreak \"quoted\"";
    j["flag"] = true;
    j["empty_list"] = ordered_json::array();
    j["empty_map"] = ordered_json::object();
    j["counts"] = std::vector<int>{1, 2, 3};
    CHECK(dump_deterministic(j) ==
          "{\n"
          "  \"name\": \"line\\nbreak \\\"quoted\\\"\",\n"
          "  \"flag\": true,\n"
          "  \"empty_list\": [],\n"
          "  \"empty_map\": {},\n"
          "  \"counts\": [1, 2, 3]\n"
          "}\n");
}

TEST_CASE("state parsing accepts what the writer emits") {
    rng64 rng(61);
    for (int m = 1; m <= 4; ++m) {
        const pure_state s = random_state(m, rng);
        const pure_state back =
            parse_state_json(dump_deterministic(state_to_json(s)));
        REQUIRE(back.num_qubits() == m);
        for (int x = 0; x < pow2(m); ++x)
            CHECK(std::abs(back.amplitude(x) - s.amplitude(x)) < 1e-12);
    }

    // dyadic amplitudes survive the text round trip bit for bit
    const pure_state h = hadamard_input(2);
    const pure_state back = parse_state_json(dump_deterministic(state_to_json(h)));
    for (int x = 0; x < 4; ++x) CHECK(back.amplitude(x) == h.amplitude(x));
}

TEST_CASE("state parsing rejections") {
    CHECK_THROWS_AS(parse_state_json("not json"), schema_error);
    CHECK_THROWS_AS(parse_state_json("[1, 2]"), schema_error);
    CHECK_THROWS_AS(parse_state_json(R"({"amplitudes": [[1, 0], [0, 0]]})"),
                    schema_error);
    CHECK_THROWS_AS(parse_state_json(R"({"m": 1.5, "amplitudes": []})"),
                    schema_error);
    CHECK_THROWS_AS(parse_state_json(R"({"m": 0, "amplitudes": [[1, 0]]})"),
                    schema_error);
    CHECK_THROWS_AS(parse_state_json(R"({"m": 25, "amplitudes": []})"),
                    schema_error);
    CHECK_THROWS_AS(
        parse_state_json(R"({"m": 2, "amplitudes": [[1, 0], [0, 0], [0, 0]]})"),
        schema_error);
    CHECK_THROWS_AS(
        parse_state_json(
            R"({"m": 1, "amplitudes": [[1, 0], ["x", 0]]})"),
        schema_error);
    CHECK_THROWS_AS(
        parse_state_json(R"({"m": 1, "amplitudes": [[1], [0, 0]]})"),
        schema_error);
    CHECK_THROWS_AS(
        parse_state_json(R"({"m": 1, "amplitudes": [[0, 0], [0, 0]]})"),
        degenerate_error);
}

TEST_CASE("state parsing normalization switch") {
    const std::string text = R"({"m": 1, "amplitudes": [[3, 0], [0, 4]]})";
    const pure_state scaled = parse_state_json(text);
    CHECK(scaled.normalized());
    CHECK(std::abs(scaled.amplitude(0) - cplx(0.6, 0.0)) < 1e-12);
    CHECK(std::abs(scaled.amplitude(1) - cplx(0.0, 0.8)) < 1e-12);

    const pure_state raw = parse_state_json(text, false);
    CHECK_FALSE(raw.normalized());
    CHECK(raw.amplitude(0) == cplx(3.0, 0.0));
    CHECK(raw.amplitude(1) == cplx(0.0, 4.0));
}

TEST_CASE("entangler input parsing") {
    const entangler_input plain = parse_entangler_json(
        R"({"m": 1, "alphas": [[1, 0], [0, 1]]})");
    CHECK(plain.m == 1);
    CHECK(plain.branch == entangler_branch::diagonal_blocks);
    CHECK(plain.alphas == std::vector<cplx>{cplx(1.0, 0.0), cplx(0.0, 1.0)});

    const entangler_input anti = parse_entangler_json(
        R"({"m": 1, "alphas": [[1, 0], [1, 0]], "branch": "antidiag"})");
    CHECK(anti.branch == entangler_branch::anti_diagonal_blocks);

    CHECK_THROWS_AS(parse_entangler_json(
                        R"({"m": 1, "alphas": [[1, 0], [1, 0]], "branch": "x"})"),
                    schema_error);
    CHECK_THROWS_AS(parse_entangler_json(
                        R"({"m": 1, "alphas": [[1, 0], [1, 0]], "branch": 3})"),
                    schema_error);
    CHECK_THROWS_AS(parse_entangler_json(R"({"m": 2, "alphas": [[1, 0]]})"),
                    schema_error);
    CHECK_THROWS_AS(parse_entangler_json(R"({"alphas": [[1, 0], [1, 0]]})"),
                    schema_error);
}

TEST_CASE("report serialization shape") {
    const concurrence_report rep = classify(ghz_state(3));
    const ordered_json j = report_to_json(rep);

    CHECK(j.at("state").at("m") == 3);
    CHECK(j.at("tolerance") == 1e-10);
    CHECK(j.at("normalization") == "canonical");
    CHECK(j.at("ghzm1") == "paper");
    REQUIRE(j.at("classes").size() == 3);
    CHECK(j.at("classes")[0].at("tag") == "W3");
    CHECK(j.at("classes")[1].at("tag") == "GHZ3");
    CHECK(j.at("classes")[2].at("tag") == "GHZ2");
    CHECK(j.at("classes")[0].at("terms").size() == 3);
    CHECK(j.at("classes")[0].at("terms")[0].at("label") == "W3 Q_{1,2}");
    CHECK(j.at("classes")[0].at("terms")[0].at("idx") ==
          nlohmann::ordered_json::array({1, 2}));
    CHECK(j.at("classes")[1].at("nonzero") == true);
    CHECK(j.at("oracle_separable") == false);
    CHECK(j.at("consistent") == false);
    CHECK_FALSE(j.contains("note"));

    const ordered_json j2 = report_to_json(classify(ghz_state(2)));
    CHECK(j2.at("note") == "W2 and GHZ2 families coincide at two qubits");

    // the dump is reproducible byte for byte
    CHECK(dump_deterministic(j) == dump_deterministic(report_to_json(rep)));
}

TEST_CASE("entangler summary serialization") {
    const entangler_matrix z = build_entangler(
        2, {1.0, 1.0, 1.0, -1.0}, entangler_branch::anti_diagonal_blocks);
    const ordered_json j = entangler_summary_json(z);
    CHECK(j.at("m") == 2);
    CHECK(j.at("branch") == "antidiag");
    CHECK(j.at("dimension") == 4);
    CHECK(j.at("unitary") == true);
    REQUIRE(j.at("alphas").size() == 4);
    CHECK(j.at("alphas")[3] == nlohmann::ordered_json::array({-1.0, 0.0}));
}

TEST_CASE("mode strings") {
    CHECK(std::string(normalization_string(normalization_mode::raw)) == "raw");
    CHECK(std::string(normalization_string(normalization_mode::canonical_unit)) ==
          "canonical");
    CHECK(std::string(enumeration_string(ghz_m1_enumeration::paper)) == "paper");
    CHECK(std::string(enumeration_string(ghz_m1_enumeration::full)) == "full");
    CHECK(std::string(branch_string(entangler_branch::diagonal_blocks)) == "diag");
}
