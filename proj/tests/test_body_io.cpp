#include <doctest.h>

#include <cmath>
#include <cstdio>
#include <fstream>

#include "steiner/body_io.hpp"

using namespace steiner;
using nlohmann::json;

TEST_CASE("parse a ball") {
    const json doc = {{"dimension", 3}, {"type", "ball"}, {"radius", 2.5}};
    const ConvexBody b = parse_body(doc);
    CHECK(b.dimension() == 3);
    Vec u(3);
    u << 0.0, 1.0, 0.0;
    CHECK(b.support(u) == doctest::Approx(2.5).epsilon(1e-15));
}

TEST_CASE("parse an ellipsoid and round-trip the axes verbatim") {
    const json doc = {{"dimension", 3}, {"type", "ellipsoid"}, {"semi_axes", {3.0, 2.0, 1.0}}};
    const ConvexBody b = parse_body(doc);
    Vec e1 = Vec::Zero(3);
    e1(0) = 1.0;
    CHECK(b.support(e1) == doctest::Approx(3.0).epsilon(1e-15));

    const json back = body_to_json(b);
    CHECK(back.at("type") == "ellipsoid");
    CHECK(back.at("dimension") == 3);
    REQUIRE(back.at("semi_axes").size() == 3);
    CHECK(back.at("semi_axes")[0].get<double>() == 3.0);
    CHECK(back.at("semi_axes")[1].get<double>() == 2.0);
    CHECK(back.at("semi_axes")[2].get<double>() == 1.0);
}

TEST_CASE("parse a sum with nested terms") {
    const json doc = {{"dimension", 2},
                      {"type", "sum"},
                      {"terms",
                       {{{"type", "ellipsoid"}, {"semi_axes", {2.0, 1.0}}},
                        {{"type", "ball"}, {"radius", 0.5}}}}};
    const ConvexBody b = parse_body(doc);
    Vec u(2);
    u << 1.0, 0.0;
    CHECK(b.support(u) == doctest::Approx(2.5).epsilon(1e-14));

    const json back = body_to_json(b);
    CHECK(back.at("type") == "sum");
    REQUIRE(back.at("terms").size() == 2);
    CHECK(back.at("terms")[0].at("type") == "ellipsoid");
    CHECK(back.at("terms")[1].at("type") == "ball");
}

TEST_CASE("offsets: outer always parses, inner is certified at parse time") {
    const json outer = {{"dimension", 2},
                        {"type", "offset"},
                        {"inner", {{"type", "ball"}, {"radius", 1.0}}},
                        {"shift", 0.75}};
    Vec u(2);
    u << 0.0, 1.0;
    CHECK(parse_body(outer).support(u) == doctest::Approx(1.75).epsilon(1e-14));

    // Inner offset within the minimal curvature radius: accepted.
    const json inner_ok = {{"dimension", 2},
                           {"type", "offset"},
                           {"inner", {{"type", "ellipsoid"}, {"semi_axes", {2.0, 1.0}}}},
                           {"shift", -0.25}};
    CHECK(parse_body(inner_ok).support(u) == doctest::Approx(0.75).epsilon(1e-12));

    // Shrinking past it: refused with the dedicated error.
    const json inner_bad = {{"dimension", 2},
                            {"type", "offset"},
                            {"inner", {{"type", "ellipsoid"}, {"semi_axes", {2.0, 1.0}}}},
                            {"shift", -0.75}};
    CHECK_THROWS_AS(parse_body(inner_bad), SummandViolationError);
}

TEST_CASE("complements are certified at parse time") {
    const json ok = {{"dimension", 2},
                     {"type", "complement"},
                     {"inner", {{"type", "ellipsoid"}, {"semi_axes", {2.0, 1.0}}}},
                     {"c", 5.0}};
    Vec u(2);
    u << 1.0, 0.0;
    CHECK(parse_body(ok).support(u) == doctest::Approx(3.0).epsilon(1e-12));

    const json bad = {{"dimension", 2},
                      {"type", "complement"},
                      {"inner", {{"type", "ellipsoid"}, {"semi_axes", {2.0, 1.0}}}},
                      {"c", 3.0}}; // below rho_max = 4
    CHECK_THROWS_AS(parse_body(bad), SummandViolationError);
}

TEST_CASE("schema violations raise ParseError") {
    CHECK_THROWS_AS(parse_body(json::array()), ParseError);
    CHECK_THROWS_AS(parse_body(json{{"type", "ball"}, {"radius", 1.0}}), ParseError); // no dimension
    CHECK_THROWS_AS(parse_body(json{{"dimension", 3}, {"type", "cube"}}), ParseError);
    CHECK_THROWS_AS(parse_body(json{{"dimension", 3}, {"type", "ball"}}), ParseError); // no radius
    CHECK_THROWS_AS(parse_body(json{{"dimension", 3},
                                    {"type", "ellipsoid"},
                                    {"semi_axes", {1.0, 2.0}}}),
                    ParseError); // axis count != dimension
    CHECK_THROWS_AS(parse_body(json{{"dimension", 2},
                                    {"type", "sum"},
                                    {"terms", json::array()}}),
                    ParseError);
    // A nested dimension that contradicts the parent is an error, not a guess.
    CHECK_THROWS_AS(parse_body(json{{"dimension", 2},
                                    {"type", "sum"},
                                    {"terms",
                                     {{{"dimension", 3}, {"type", "ball"}, {"radius", 1.0}}}}}),
                    ParseError);
}

TEST_CASE("invalid geometry raises InvalidBodyError") {
    CHECK_THROWS_AS(parse_body(json{{"dimension", 3}, {"type", "ball"}, {"radius", -1.0}}),
                    InvalidBodyError);
    CHECK_THROWS_AS(parse_body(json{{"dimension", 7}, {"type", "ball"}, {"radius", 1.0}}),
                    InvalidBodyError);
    CHECK_THROWS_AS(parse_body(json{{"dimension", 2},
                                    {"type", "ellipsoid"},
                                    {"semi_axes", {1.0, 0.0}}}),
                    InvalidBodyError);
}

TEST_CASE("file loading and a full round trip") {
    const std::string path = "io_roundtrip_test.json";
    {
        std::ofstream out(path);
        out << R"({"dimension": 2, "type": "sum", "terms": [)"
            << R"({"type": "ellipsoid", "semi_axes": [1.5, 1.0]},)"
            << R"({"type": "ball", "radius": 0.25}]})";
    }
    const ConvexBody b = load_body_file(path);
    CHECK(b.dimension() == 2);
    Vec u(2);
    u << 0.0, 1.0;
    CHECK(b.support(u) == doctest::Approx(1.25).epsilon(1e-14));

    // Serialize, reparse, and compare support values on a few directions.
    const json round = body_to_json(b);
    const ConvexBody b2 = parse_body(round);
    for (const double t : {0.0, 0.5, 1.1, 2.7, 4.0}) {
        Vec w(2);
        w << std::cos(t), std::sin(t);
        CHECK(b.support(w) == b2.support(w)); // identical parameters -> identical values
    }
    std::remove(path.c_str());
    CHECK_THROWS_AS(load_body_file("definitely_missing_file.json"), ParseError);
}

TEST_CASE("certified descriptors survive a round trip") {
    const json doc = {{"dimension", 2},
                      {"type", "offset"},
                      {"inner", {{"type", "ellipsoid"}, {"semi_axes", {2.0, 1.0}}}},
                      {"shift", -0.3}};
    const ConvexBody b = parse_body(doc);
    const json back = body_to_json(b);
    CHECK(back.at("type") == "offset");
    CHECK(back.at("shift").get<double>() == -0.3);
    const ConvexBody b2 = parse_body(back); // re-certifies on the way in
    Vec u(2);
    u << 1.0, 0.0;
    CHECK(b.support(u) == b2.support(u));
}

TEST_CASE("translated bodies are not serializable") {
    Vec v(2);
    v << 1.0, 2.0;
    const ConvexBody moved = ConvexBody::translated(ConvexBody::ball(2, 1.0), v);
    CHECK_THROWS_AS(body_to_json(moved), PreconditionError);
}
