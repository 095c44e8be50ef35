#include <doctest.h>

#include "fixtures.hpp"

using namespace flatcomp;
using fixtures::antichain2;
using fixtures::chain2;
using fixtures::p3;

TEST_CASE("validation closes the generating pairs") {
    const auto p = p3();
    CHECK(p->leq(0, 0));
    CHECK(p->leq(0, 2));
    CHECK(p->leq(1, 2));
    CHECK_FALSE(p->leq(2, 0));
    CHECK_FALSE(p->leq(0, 1));
    const auto cyclic = validate_preorder({"a", "b"}, {{"a", "b"}, {"b", "a"}});
    CHECK(cyclic->leq(0, 1));
    CHECK(cyclic->leq(1, 0));
    const auto empty = validate_preorder({}, {});
    CHECK(empty->size() == 0);
    CHECK_THROWS_AS(validate_preorder({"a"}, {{"a", "zz"}}), unknown_object);
}

TEST_CASE("transitivity is closed, not assumed") {
    const auto p = validate_preorder({"x", "y", "z"}, {{"x", "y"}, {"y", "z"}});
    CHECK(p->leq(0, 2));
}

TEST_CASE("underlying preorder of a space") {
    const auto p = underlying_preorder(fixtures::z2());
    CHECK(p->leq(0, 1));
    CHECK_FALSE(p->leq(1, 0));
    const auto q = underlying_preorder(fixtures::a2());
    CHECK_FALSE(q->leq(0, 1));
    CHECK_FALSE(q->leq(1, 0));
}

TEST_CASE("boolean flatness flags") {
    const auto p = p3();
    const auto r1 = bool_flat_check(*p, {0, 1});
    CHECK(r1.module_ok);
    CHECK(r1.p1);
    CHECK_FALSE(r1.p2);
    const auto r2 = bool_flat_check(*p, {0, 1, 2});
    CHECK(r2.p2);
    const auto r3 = bool_flat_check(*p, {});
    CHECK(r3.module_ok);
    CHECK_FALSE(r3.p1);
    const auto r4 = bool_flat_check(*p, {2});  // not downward closed
    CHECK_FALSE(r4.module_ok);
    CHECK_FALSE(r4.p1);
}

TEST_CASE("downward completion of the vee preorder") {
    const auto comp = complete_preorder(p3(), PreorderCompletionMode::Down);
    CHECK(comp.points == std::vector<std::vector<int>>{{}, {0}, {1}, {0, 1}, {0, 1, 2}});
}

TEST_CASE("ideal completion of the vee preorder is the preorder itself") {
    const auto comp = complete_preorder(p3(), PreorderCompletionMode::Ideal);
    CHECK(comp.points == std::vector<std::vector<int>>{{0}, {1}, {0, 1, 2}});
    CHECK(comp.preorder->leq(0, 2));
    CHECK(comp.preorder->leq(1, 2));
    CHECK_FALSE(comp.preorder->leq(0, 1));
}

TEST_CASE("cut completion of the two-point antichain is the four-point lattice") {
    const auto comp = complete_preorder(antichain2(), PreorderCompletionMode::Dm);
    REQUIRE(comp.points.size() == 4);
    CHECK(comp.points == std::vector<std::vector<int>>{{}, {0}, {1}, {0, 1}});
    CHECK(comp.cuts[0].upper == std::vector<int>{0, 1});
    CHECK(comp.cuts[1].upper == std::vector<int>{0});
    CHECK(comp.cuts[3].upper == std::vector<int>{});
    // bottom, two incomparable middles, top
    CHECK(comp.preorder->leq(0, 1));
    CHECK(comp.preorder->leq(0, 2));
    CHECK(comp.preorder->leq(1, 3));
    CHECK_FALSE(comp.preorder->leq(1, 2));
}

TEST_CASE("module route to the cut completion agrees with the cut route") {
    for (const auto& p : {antichain2(), chain2(), p3(), validate_preorder({}, {})}) {
        const auto cuts = complete_preorder(p, PreorderCompletionMode::Dm);
        const auto modules = dm_via_modules(p);
        CHECK(cuts.points == modules.points);
        CHECK(cuts.preorder->le == modules.preorder->le);
    }
    CHECK(complete_preorder(chain2(), PreorderCompletionMode::Dm).points.size() == 2);
    CHECK(dm_via_modules(validate_preorder({}, {})).points.size() == 1);
}

TEST_CASE("monotone extension into a lattice") {
    // target: four-point lattice bottom < m1, m2 < top
    const auto lattice = validate_preorder(
        {"bot", "m1", "m2", "top"},
        {{"bot", "m1"}, {"bot", "m2"}, {"m1", "top"}, {"m2", "top"}});
    const auto f = make_monotone(p3(), lattice, {1, 2, 3});  // x -> m1, y -> m2, z -> top
    const auto ext = extend_monotone(f, BoolExtendMode::P1);
    // the point {x,y} goes to the join of m1 and m2
    REQUIRE(ext.completion.points == std::vector<std::vector<int>>{{0}, {1}, {0, 1}, {0, 1, 2}});
    CHECK(ext.values == std::vector<int>{1, 2, 3, 3});
}

TEST_CASE("monotone extension along the ideal embedding is an isomorphism") {
    const auto p = p3();
    const auto ideals = complete_preorder(p, PreorderCompletionMode::Ideal);
    // embed objects as their principal ideals
    std::vector<int> assignment(p->size());
    for (int x = 0; x < p->size(); ++x) {
        std::vector<int> down;
        for (int y = 0; y < p->size(); ++y)
            if (p->leq(y, x)) down.push_back(y);
        for (std::size_t i = 0; i < ideals.points.size(); ++i)
            if (ideals.points[i] == down) assignment[x] = static_cast<int>(i);
    }
    const auto f = make_monotone(p, ideals.preorder, assignment);
    const auto ext = extend_monotone(f, BoolExtendMode::Ideal);
    CHECK(ext.values == std::vector<int>{0, 1, 2});  // identity on principal ideals
}

TEST_CASE("extension into a target without the needed joins is rejected") {
    const auto f = make_monotone(antichain2(), antichain2(), {0, 1});
    CHECK_THROWS_AS(extend_monotone(f, BoolExtendMode::P1), target_lacks_lub);
    try {
        extend_monotone(f, BoolExtendMode::P1);
    } catch (const target_lacks_lub& e) {
        CHECK(e.witness == std::vector<std::string>{"x", "y"});
    }
    // every finite preorder has lubs of directed subsets
    CHECK_NOTHROW(extend_monotone(f, BoolExtendMode::Ideal));
}

TEST_CASE("iso quotient merges mutually comparable objects") {
    const auto cyclic = validate_preorder({"a", "b", "c"}, {{"a", "b"}, {"b", "a"}, {"a", "c"}});
    std::vector<int> cls;
    const auto q = iso_quotient(cyclic, &cls);
    CHECK(q->size() == 2);
    CHECK(cls == std::vector<int>{0, 0, 1});
    CHECK(q->leq(0, 1));
    CHECK_FALSE(q->leq(1, 0));
}
