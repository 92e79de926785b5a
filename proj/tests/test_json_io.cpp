#include <corona/json_io.hpp>

#include <corona/corona.hpp>
#include <corona/digraph.hpp>
#include <corona/roots.hpp>
#include <corona/verify.hpp>

#include <nlohmann/json.hpp>

#include "doctest.h"
#include "test_util.hpp"

using namespace corona;
using nlohmann::json;
using testutil::P;
using testutil::RF;

TEST_CASE("polynomial serialization: ascending exact coefficients plus rendering") {
    const json j = to_json(P({-1, 1}));
    CHECK(j.dump() == R"({"coeffs":["-1","1"],"degree":1,"pretty":"λ - 1","var":"lambda"})");
}

TEST_CASE("fractional coefficients serialize as exact fraction strings") {
    const json j = to_json(Polynomial({make_rational(1, 2), Rational(1)}));
    CHECK(j["coeffs"][0] == "1/2");
    CHECK(j["degree"] == 1);
}

TEST_CASE("the zero polynomial serializes with degree -1") {
    const json j = to_json(Polynomial());
    CHECK(j["degree"] == -1);
    CHECK(j["coeffs"].empty());
    CHECK(j["pretty"] == "0");
}

TEST_CASE("rational function serialization nests two polynomials") {
    const json j = to_json(RF({1, 2}, {0, 0, 1}));
    CHECK(j.dump() ==
          R"({"den":{"coeffs":["0","0","1"],"degree":2,"pretty":"λ^2","var":"lambda"},)"
          R"("num":{"coeffs":["1","2"],"degree":1,"pretty":"2 λ + 1","var":"lambda"}})");
}

TEST_CASE("matrix serialization uses nested row arrays of strings") {
    ExactMatrix m(2, 2);
    m(0, 1) = make_rational(1, 3);
    const json j = to_json(m);
    REQUIRE(j.is_array());
    REQUIRE(j.size() == 2);
    CHECK(j[0][0] == "0");
    CHECK(j[0][1] == "1/3");
}

TEST_CASE("spectrum description serialization") {
    const SpectrumDescription sd = vertex_corona_spectrum_outregular(
        make_family(Family::path, 1), make_family(Family::cycle, 2), MatrixKind::adjacency);
    const json j = to_json(sd);
    REQUIRE(j["inherited"].size() == 1);
    CHECK(j["inherited"][0]["multiplicity"] == 1);
    CHECK(j["inherited"][0]["factor"]["pretty"] == "λ + 1");
    REQUIRE(j["paired"].size() == 1);
    CHECK(j["paired"][0]["pretty"] == "λ^2 - λ - 2");
}

TEST_CASE("root clusters serialize location and multiplicity") {
    const json j = to_json(numeric_roots(P({-2, 1})));
    CHECK(j.dump() == R"([{"im":0.0,"multiplicity":1,"re":2.0}])");
}

TEST_CASE("sweep reports and summaries serialize for machine consumption") {
    verify::SweepConfig cfg;
    cfg.trials = 1;
    cfg.max_vertices = 3;
    cfg.threads = 1;
    cfg.suites = {"connectivity"};
    const verify::SweepSummary s = verify::run_sweep(cfg);
    const json j = to_json(s);
    CHECK(j["ok"] == true);
    CHECK(j["mismatches"] == 0);
    CHECK(j["matches"] == s.matches);
    REQUIRE(j["reports"].is_array());
    REQUIRE(!j["reports"].empty());
    const json& first = j["reports"][0];
    CHECK(first.contains("suite"));
    CHECK(first.contains("instance"));
    CHECK(first.contains("expected"));
    CHECK(first.contains("actual"));
    CHECK(first["verdict"] == "match");
    CHECK(first.contains("seconds"));
}
