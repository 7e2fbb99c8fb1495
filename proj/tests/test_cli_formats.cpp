#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <string>
#include <vector>

#include <json.hpp>

#include "jdiag/hopf.hpp"
#include "jdiag/lie.hpp"
#include "jdiag/spaces.hpp"
#include "jdiag/verify.hpp"

using namespace jdiag;
using nlohmann::json;

TEST_CASE("check registry") {
    auto& names = check_names();
    CHECK(names.size() == 10);
    CHECK(names.front() == "stu2-eq-squares");
    CHECK(names.back() == "homology-squares-hexagons");
    CheckConfig cfg;
    CHECK_THROWS_AS(run_check("no-such-check", cfg), StructError);
}

TEST_CASE("sampled checks log their seed and reproduce") {
    CheckConfig cfg;
    cfg.strands = 1;
    cfg.degree = 2;
    cfg.seed = 7;
    CheckResult a = run_check("path-independence", cfg);
    CHECK(a.pass);
    CHECK(a.summary.find("seed=7") != std::string::npos);
    CheckResult b = run_check("path-independence", cfg);
    CHECK(a.summary == b.summary);
    CheckResult h = run_check("hopf-axioms", cfg);
    CHECK(h.summary.find("seed=7") != std::string::npos);
}

TEST_CASE("vacuous scopes pass and say so") {
    CheckConfig cfg;
    cfg.strands = 1;
    cfg.degree = 1;
    CheckResult r = run_check("stu2-eq-squares", cfg);
    CHECK(r.pass);
    CHECK(r.summary.find("vacuous") != std::string::npos);
    CheckResult h = run_check("hexagon-from-stu2-ihx", cfg);
    CHECK(h.pass);
    CHECK(h.summary.find("vacuous") != std::string::npos);
}

TEST_CASE("filtration report serializes with verdicts") {
    json j = json::parse(filtration_report_json(compare_filtrations(2, 2)));
    CHECK(j["strands"] == 2);
    CHECK(j["degree"] == 2);
    CHECK(j["mode"] == "fi");
    CHECK(j["dim_size_filtration"] == json::array({3, 4}));
    CHECK(j["dim_product_filtration"] == json::array({3, 4}));
    CHECK(j["dim_graded_presentation"] == json::array({3, 4}));
    CHECK(j["size_eq_product"] == true);
    CHECK(j["graded_matches"] == true);
    CHECK(j["ladder_commutes"] == true);
    CHECK(j["top_full"] == true);
}

TEST_CASE("bracket table serializes keyed by encodings") {
    json j = json::parse(bracket_table_json(2, 2));
    CHECK(j["strands"] == 2);
    CHECK(j["max_degree"] == 2);
    REQUIRE(j["brackets"].size() == 1);
    auto& e = j["brackets"][0];
    CHECK(e["left"] == "m=2;l=1,1;c=0-1;n=");
    CHECK(e["right"] == "m=2;l=1,1;c=0-1;n=");
    CHECK(e["degree"] == 2);
    CHECK(e["value"].empty());
}

TEST_CASE("diagram json round trip") {
    for (const char* enc : {"m=1;l=3;c=;n=(0,1,2)", "m=2;l=2,2;c=0-2,1-3;n=",
                            "m=1;l=6;c=0-4,1-3,2-5;n="}) {
        Diagram d = decode(enc);
        CHECK(from_json(to_json(d)) == d);
    }
}

TEST_CASE("quotient space json round trip") {
    QuotientSpace q;
    q.add_relation(unit_vec(3) + unit_vec(5));
    RatVec v = unit_vec(2);
    v.axpy(Rat(-1, 3), unit_vec(5));
    q.add_relation(v);
    q.finalize();
    QuotientSpace back = QuotientSpace::from_json(q.to_json());
    CHECK(back.rank() == q.rank());
    RatVec probe = unit_vec(3) + unit_vec(2);
    CHECK(back.reduce(probe) == q.reduce(probe));
    CHECK(back.to_json() == q.to_json());
}

TEST_CASE("space guards reject degree zero") {
    CheckConfig cfg;
    cfg.strands = 1;
    cfg.degree = 0;
    CHECK_THROWS_AS(run_check("prim-eq-size", cfg), StructError);
}
