#include <doctest.h>

#include "fixtures.hpp"

using namespace flatcomp;

TEST_CASE("validation accepts a lawful matrix") {
    auto v = validate_space({"a", "b"},
                            {{Cost::zero(), Cost::fin(1)}, {Cost::fin(2), Cost::zero()}});
    REQUIRE(v.ok());
    CHECK(v.space->d(0, 1) == Cost::fin(1));
    CHECK(v.space->d(1, 0) == Cost::fin(2));
}

TEST_CASE("validation reports a nonzero diagonal with its object") {
    auto v = validate_space({"a", "b"},
                            {{Cost::zero(), Cost::fin(1)}, {Cost::fin(2), Cost::fin(1)}});
    REQUIRE_FALSE(v.ok());
    REQUIRE(v.violations.size() == 1);
    CHECK(v.violations[0].kind == AxiomViolation::Kind::ZeroDiagonal);
    CHECK(v.violations[0].x == 1);
}

TEST_CASE("validation reports the witnessing triangle") {
    // d(p,r) = 5 but d(p,q) + d(q,r) = 2
    auto v = validate_space(
        {"p", "q", "r"},
        {{Cost::zero(), Cost::fin(1), Cost::fin(5)},
         {Cost::fin(9), Cost::zero(), Cost::fin(1)},
         {Cost::fin(9), Cost::fin(9), Cost::zero()}});
    REQUIRE_FALSE(v.ok());
    bool found = false;
    for (const auto& viol : v.violations)
        if (viol.kind == AxiomViolation::Kind::Triangle && viol.x == 0 && viol.y == 1 &&
            viol.z == 2) {
            found = true;
            CHECK(viol.d_xz == Cost::fin(5));
            CHECK(viol.d_xy == Cost::fin(1));
            CHECK(viol.d_yz == Cost::fin(1));
        }
    CHECK(found);
}

TEST_CASE("empty and one-point spaces are legal") {
    CHECK(fixtures::empty_space()->size() == 0);
    CHECK(fixtures::one_point()->size() == 1);
}

TEST_CASE("nonexpansive maps are validated") {
    auto a2 = fixtures::a2();
    auto z2 = fixtures::z2();
    CHECK_NOTHROW(make_nonexpansive(a2, z2, {0, 0}));  // constant u
    CHECK_NOTHROW(make_nonexpansive(a2, z2, {1, 1}));  // constant v
    // a -> u, b -> v expands d(b,a) = 2 to d(v,u) = 3
    CHECK_THROWS_AS(make_nonexpansive(a2, z2, {0, 1}), std::invalid_argument);
}

TEST_CASE("symmetry detection") {
    CHECK_FALSE(is_symmetric(*fixtures::a2()));
    auto sym = make_space({"a", "b"},
                          {{Cost::zero(), Cost::fin(1)}, {Cost::fin(1), Cost::zero()}});
    CHECK(is_symmetric(*sym));
}
