#include "doctest.h"
#include "gen.hpp"
#include "nlbell/json_io.hpp"
#include "nlbell/machine.hpp"
#include "nlbell/polytope.hpp"
#include "nlbell/quantum.hpp"
#include "nlbell/table_format.hpp"

using namespace nlbell;
using nlbell::io::Json;

TEST_CASE("behavior documents") {
    const auto pr = machine_behavior(pr_box());
    const auto doc = io::to_json(pr);
    CHECK(doc["backend"] == "exact");
    CHECK(doc["n"] == 2);
    CHECK(doc["alice"][0] == "1/2");
    CHECK(doc["joint"][1][1] == "0");
    CHECK(io::exact_behavior_from_json(doc) == pr);
    CHECK(io::behavior_backend(doc) == "exact");

    FloatBehavior fp{Scenario(2)};
    fp.alice = {0.5, 0.25};
    const auto fdoc = io::to_json(fp);
    CHECK(fdoc["backend"] == "float");
    CHECK(io::float_behavior_from_json(fdoc).alice == fp.alice);
    CHECK_THROWS_AS(io::exact_behavior_from_json(fdoc), io::FormatError);
}

TEST_CASE("malformed documents") {
    CHECK_THROWS_AS(io::exact_behavior_from_json(Json::parse(R"({"backend":"exact","n":2,"alice":["1/2"]})")),
                    io::FormatError);
    CHECK_THROWS_AS(io::functional_from_json(Json::parse(R"({"n":2,"alice":[1,0],"bob":[1,0],"joint":[[1,1]]})")),
                    io::FormatError);
    CHECK_THROWS_AS(io::machine_from_json(Json::parse(R"({"n_inputs":2,"anticorrelated":[[3,0]]})")),
                    std::exception);
    CHECK_THROWS_AS(io::strategy_from_json(Json::parse(R"({"machine":null,"alice":["zz"],"bob":["0d"]})")),
                    std::exception);
}

TEST_CASE("round trips") {
    gen::Rng rng(71);
    for (int k = 0; k < 50; ++k) {
        const int n = gen::uniform(rng, 2, 4);
        const auto f = gen::functional(rng, n);
        CHECK(io::functional_from_json(io::to_json(f)) == f);
        const auto p = gen::local_mixture(rng, n);
        CHECK(io::exact_behavior_from_json(Json::parse(io::to_json(p).dump())) == p);
    }
    CHECK(io::machine_from_json(io::to_json(pr_n(4))) == pr_n(4));
    CHECK(io::to_json(pr_box()).dump() == R"({"n_inputs":2,"anticorrelated":[[1,1]]})");
    const auto w = make_prn_wiring(4);
    CHECK(io::wiring_from_json(io::to_json(w)) == w);
    const WiringStrategy s{pr_box(), {SettingChoice::machine(1, true), SettingChoice::deterministic(0)},
                           {SettingChoice::deterministic(1), SettingChoice::machine(0)}};
    const auto sdoc = io::to_json(s);
    CHECK(sdoc["alice"][0] == "1mf");
    CHECK(io::strategy_from_json(sdoc) == s);
    const WiringStrategy local{std::nullopt, {SettingChoice::deterministic(0)}, {SettingChoice::deterministic(1)}};
    CHECK(io::to_json(local)["machine"].is_null());
}

TEST_CASE("census document") {
    const auto facets = local_facets_n3();
    const auto doc = io::census_to_json(violation_census(enumerate_ns_vertices_n3(facets), facets));
    CHECK(doc["total"] == 1344);
    CHECK(doc["classes"]["S1"]["count"] == 192);
    CHECK(doc["classes"]["S1"]["chsh"] == 6);
    CHECK(doc["classes"]["S1"]["i3322"] == 18);
    CHECK(doc["classes"]["S4"]["i3322"] == 24);
}

TEST_CASE("float formatting") {
    CHECK(io::format_double(1 / std::sqrt(2.0) - 0.5) == "0.207106781");
    CHECK(io::format_double(0.5) == "0.5");
}

TEST_CASE("tables print Alice across and Bob down") {
    const std::string expected =
        "   | -1  0  0\n"
        "---+---------\n"
        "-2 |  1  1  1\n"
        "-1 |  1  1 -1\n"
        " 0 |  1 -1  0\n";
    CHECK(io::render_table(make_inn22(3)) == expected);
    auto shifted = make_chsh(2);
    shifted.constant = -1;
    CHECK(io::render_table(shifted).find("constant: -1") != std::string::npos);
    CHECK(io::render_table(machine_behavior(pr_box())).find("1/2") != std::string::npos);
}
