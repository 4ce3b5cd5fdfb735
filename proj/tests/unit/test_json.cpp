#include <doctest.h>

#include "mgdiv/json_io.hpp"
#include "support/fixtures.hpp"

using namespace mgdiv;
using namespace mgtest;

TEST_CASE("graph JSON round-trips") {
    GraphPtr g = dumbbell();
    Json j = graph_to_json(*g);
    GraphPtr back = graph_from_json(j);
    CHECK(graph_to_json(*back) == j);
    CHECK(back->genus() == g->genus());
    CHECK(back->branch_ids() == g->branch_ids());
}

TEST_CASE("graph JSON uses p/q strings and validates them") {
    Json j = Json::parse(R"({
      "vertices": ["u", "v"],
      "edges": [
        {"id": "e1", "ends": ["u", "v"], "length": "1/1"},
        {"id": "e2", "ends": ["u", "v"], "length": "2/4"},
        {"id": "e3", "ends": ["u", "v"], "length": "1"}
      ]})");
    GraphPtr g = graph_from_json(j);
    CHECK(g->edge_recs()[1].length == Rat(1, 2));
    CHECK(graph_to_json(*g)["edges"][2]["length"] == "1/1");

    Json bad = j;
    bad["edges"][0]["length"] = "0.25";
    CHECK_THROWS_AS(graph_from_json(bad), mgdiv::error);
}

TEST_CASE("point JSON normalizes boundary offsets") {
    GraphPtr g = theta();
    CHECK(point_from_json(*g, Json::parse(R"({"vertex":"u"})")) == PointRef::vertex("u"));
    CHECK(point_from_json(*g, Json::parse(R"({"edge":"e1","offset":"0/1"})")) ==
          PointRef::vertex("u"));
    CHECK(point_from_json(*g, Json::parse(R"({"edge":"e1","offset":"1/1"})")) ==
          PointRef::vertex("v"));
    PointRef p = point_from_json(*g, Json::parse(R"({"edge":"e1","offset":"1/2"})"));
    CHECK(p == pt(g, "e1", 1, 2));
    CHECK(point_to_json(p) == Json::parse(R"({"edge":"e1","offset":"1/2"})"));
}

TEST_CASE("divisor JSON round-trips and accumulates duplicates") {
    GraphPtr g = theta();
    Json j = Json::parse(R"([
      {"vertex": "u", "coeff": 1},
      {"edge": "e1", "offset": "1/2", "coeff": 2},
      {"vertex": "u", "coeff": 1}
    ])");
    Divisor D = divisor_from_json(*g, j);
    CHECK(D.coeff(PointRef::vertex("u")) == 2);
    CHECK(D.degree() == 4);
    Divisor back = divisor_from_json(*g, divisor_to_json(D));
    CHECK(back == D);
}

TEST_CASE("set JSON round-trips with model points, I, J and spset") {
    GraphPtr g = dumbbell();
    PointRef w = pt(g, "br", 1, 2);
    ModelPtr m = make_model(g, {w});
    AdmissibleSet S = set_of(m, {PointRef::vertex("u"), w}, {"A#0", "br#0"});
    Json j = set_to_json(S);
    CHECK(j["J"] == Json::array({"A#0", "br#0"}));
    CHECK(j["spset"].size() == 2); // u and w span the set
    AdmissibleSet back = set_from_json(g, j);
    CHECK(back == S);
    CHECK(set_to_json(back) == j);
}

TEST_CASE("certificate and reduction JSON round-trip on an engine run") {
    GraphPtr g = dumbbell();
    Divisor D = div_at({{pt(g, "br", 1, 2), 1}});
    ReductionResult res = semibreak_reduce(g, D);
    Json jc = certificate_to_json(res.certificate);
    FiringCertificate cert = certificate_from_json(g, jc);
    REQUIRE(cert.steps.size() == res.certificate.steps.size());
    CHECK(cert.steps[0].eps == res.certificate.steps[0].eps);
    CHECK(cert.steps[0].set == res.certificate.steps[0].set);
    CHECK(apply_certificate(D, cert) == res.semibreak);
    CHECK(certificate_to_json(cert) == jc);

    Json jr = reduction_to_json(res, false);
    CHECK(divisor_from_json(*g, jr["semibreak"]) == res.semibreak);
    CHECK(divisor_from_json(*g, jr["break_divisor"]) == res.break_divisor);
    CHECK(jr["iterations"] == 2);
}

TEST_CASE("profile JSON emits null minmax exactly when ME = 0") {
    GraphPtr g = theta();
    auto prof = max_error_profile(
        g, div_at({{PointRef::vertex("u"), 1}, {PointRef::vertex("v"), 1}}));
    Json j = profile_to_json(prof);
    CHECK(j["max_error"] == 0);
    CHECK(j["minmax"].is_null());
    CHECK(j["is_break"] == true);

    auto prof2 = max_error_profile(g, div_at({{pt(g, "e1", 1, 2), 2}}));
    Json j2 = profile_to_json(prof2);
    CHECK(j2["max_error"] == 1);
    CHECK(!j2["minmax"].is_null());
}

TEST_CASE("random structures survive a JSON round-trip") {
    Rng rng(2029);
    for (int trial = 0; trial < 40; ++trial) {
        GraphPtr g = random_graph(rng);
        CHECK(graph_to_json(*graph_from_json(graph_to_json(*g))) == graph_to_json(*g));
        Divisor D = random_effective_divisor(rng, g, rng.range(0, 4));
        CHECK(divisor_from_json(*g, divisor_to_json(D)) == D);
        ModelPtr m = random_model(rng, g);
        AdmissibleSet S = random_set(rng, g, m);
        CHECK(set_from_json(g, set_to_json(S)) == S);
    }
}
