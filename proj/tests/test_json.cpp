#include <doctest.h>

#include "fixtures.hpp"
#include "flatcomp/json_io.hpp"

using namespace flatcomp;

TEST_CASE("space documents round trip") {
    const auto sp = fixtures::a2();
    const auto back = space_from_json(to_json(*sp));
    CHECK(back->objects == sp->objects);
    CHECK(back->dist == sp->dist);
    CHECK_THROWS_AS(space_from_json(Json::parse(R"({"objects":["a"]})")), parse_error);
    CHECK_THROWS_AS(
        space_from_json(Json::parse(R"({"objects":["a"],"dist":[["1"]]})")), parse_error);
}

TEST_CASE("filter, module and sequence documents round trip") {
    const auto sp = fixtures::z2();
    const auto filter = make_filter(sp, std::vector<int>{0, 1});
    const auto filter_back = filter_from_json(to_json(filter));
    CHECK(filter_back.base == filter.base);
    CHECK(same_space(filter_back.space, sp));

    const auto m = m_minus(filter);
    const auto module_back = left_module_from_json(to_json(m));
    CHECK(module_back.values == m.values);

    const auto seq = make_seq(sp, {0}, {1});
    const auto seq_back = seq_from_json(to_json(seq));
    CHECK(seq_back.prefix == seq.prefix);
    CHECK(seq_back.cycle == seq.cycle);
}

TEST_CASE("preorder documents round trip through generating pairs") {
    const auto p = fixtures::p3();
    const auto back = preorder_from_json(to_json(*p));
    CHECK(back->objects == p->objects);
    CHECK(back->le == p->le);
}

TEST_CASE("map documents are validated while parsing") {
    const Json good = Json::parse(
        R"({"source":{"objects":["a","b"],"dist":[["0","1"],["2","0"]]},
            "target":{"objects":["u","v"],"dist":[["0","0"],["3","0"]]},
            "map":{"a":"u","b":"u"}})");
    CHECK(map_from_json(good).assignment == std::vector<int>{0, 0});
    const Json expanding = Json::parse(
        R"({"source":{"objects":["a","b"],"dist":[["0","1"],["2","0"]]},
            "target":{"objects":["u","v"],"dist":[["0","0"],["3","0"]]},
            "map":{"a":"u","b":"v"}})");
    CHECK_THROWS_AS(map_from_json(expanding), parse_error);
}

TEST_CASE("completion reports carry points and the matrix as strings") {
    const auto report = to_json(complete(fixtures::a2(), CompletionMode::P1));
    CHECK(report.at("mode") == "p1");
    CHECK(report.at("points").size() == 3);
    CHECK(report.at("dist")[2][0] == "2");
}
