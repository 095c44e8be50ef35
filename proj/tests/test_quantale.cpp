#include <doctest.h>

#include "flatcomp/cost.hpp"

using namespace flatcomp;

TEST_CASE("tensor: exact rational addition with absorbing infinity") {
    CHECK(cost_tensor(Cost::fin(1, 2), Cost::fin(1, 3)) == Cost::fin(5, 6));
    CHECK(cost_tensor(Cost::zero(), Cost::fin(7, 3)) == Cost::fin(7, 3));
    CHECK(cost_tensor(Cost::zero(), Cost::inf()) == Cost::inf());
    CHECK(cost_tensor(Cost::inf(), Cost::zero()) == Cost::inf());
    CHECK(cost_tensor(Cost::fin(3, 4), Cost::fin(1, 4)) == Cost::fin(1));
}

TEST_CASE("hom: truncated subtraction") {
    CHECK(cost_hom(Cost::fin(1), Cost::fin(3)) == Cost::fin(2));
    CHECK(cost_hom(Cost::fin(3), Cost::fin(1)) == Cost::zero());
    CHECK(cost_hom(Cost::fin(5, 2), Cost::fin(5, 2)) == Cost::zero());
    CHECK(cost_hom(Cost::inf(), Cost::fin(5)) == Cost::zero());
    CHECK(cost_hom(Cost::inf(), Cost::inf()) == Cost::zero());
    CHECK(cost_hom(Cost::fin(5), Cost::inf()) == Cost::inf());
    CHECK(cost_hom(Cost::fin(1, 3), Cost::fin(1, 2)) == Cost::fin(1, 6));
}

TEST_CASE("meet and join with empty-list conventions") {
    const Cost values[] = {Cost::fin(3), Cost::fin(1, 2), Cost::inf()};
    CHECK(cost_meet(values) == Cost::fin(1, 2));
    CHECK(cost_join(values) == Cost::inf());
    CHECK(cost_meet({}) == Cost::inf());
    CHECK(cost_join({}) == Cost::zero());
}

TEST_CASE("numeric order") {
    CHECK(Cost::fin(1, 2) < Cost::fin(2, 3));
    CHECK(Cost::fin(2) < Cost::inf());
    CHECK(Cost::inf() <= Cost::inf());
    CHECK(Cost::fin(2, 4) == Cost::fin(1, 2));
}

TEST_CASE("adjunction holds for every grid triple, including infinity") {
    const Cost grid[] = {Cost::zero(), Cost::fin(1, 3), Cost::fin(1, 2), Cost::fin(1),
                         Cost::fin(2), Cost::inf()};
    for (const Cost& x : grid)
        for (const Cost& y : grid)
            for (const Cost& z : grid)
                CHECK((cost_tensor(x, z) >= y) == (z >= cost_hom(x, y)));
}

TEST_CASE("truth table of the boolean quantale") {
    CHECK(truth_ops(true, true).tensor);
    CHECK_FALSE(truth_ops(true, false).tensor);
    CHECK_FALSE(truth_ops(true, false).hom);
    CHECK(truth_ops(false, true).hom);
    CHECK(truth_ops(false, false).hom);
}

TEST_CASE("textual form round trip") {
    CHECK(to_string(Cost::fin(5, 6)) == "5/6");
    CHECK(to_string(Cost::fin(4)) == "4");
    CHECK(to_string(Cost::inf()) == "inf");
    CHECK(parse_cost("5/6") == Cost::fin(5, 6));
    CHECK(parse_cost("2/4") == Cost::fin(1, 2));
    CHECK(parse_cost("7") == Cost::fin(7));
    CHECK(parse_cost("inf") == Cost::inf());
    CHECK_THROWS_AS(parse_cost("-1"), parse_error);
    CHECK_THROWS_AS(parse_cost("1/0"), parse_error);
    CHECK_THROWS_AS(parse_cost("1/-2"), parse_error);
    CHECK_THROWS_AS(parse_cost(""), parse_error);
    CHECK_THROWS_AS(parse_cost("1.5"), parse_error);
}

TEST_CASE("arithmetic overflow is an error, not a wrong answer") {
    const Cost big_int = Cost::fin(std::int64_t{1} << 62);
    CHECK_THROWS_AS(cost_tensor(big_int, big_int), std::overflow_error);
    // coprime denominators whose product exceeds the 64-bit range
    const Cost a = Cost::fin(1, 3100000001);
    const Cost b = Cost::fin(1, 3100000003);
    CHECK_THROWS_AS(cost_tensor(a, b), std::overflow_error);
    CHECK_NOTHROW(cost_tensor(big_int, Cost::zero()));
    // reducible intermediates that land back in range are fine
    const Cost huge = parse_cost("999999999999999989/999999999999999988");
    CHECK_NOTHROW(cost_tensor(huge, huge));
}
