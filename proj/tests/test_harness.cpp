#include <doctest.h>

#include "fixtures.hpp"
#include "flatcomp/suites.hpp"

using namespace flatcomp;

namespace {

long long count_spaces(const InstanceGrid& grid, SpaceClass cls, int exactly = -1) {
    long long n = 0;
    enumerate_spaces(grid, cls, [&](const SpacePtr& sp) {
        if (exactly < 0 || sp->size() == exactly) ++n;
    });
    return n;
}

}  // namespace

TEST_CASE("grid construction enforces the 0-and-inf invariant") {
    CHECK_THROWS_AS(make_grid(2, {Cost::zero(), Cost::fin(1)}), std::invalid_argument);
    CHECK_THROWS_AS(make_grid(2, {Cost::fin(1), Cost::inf()}), std::invalid_argument);
    CHECK_NOTHROW(make_grid(2, {Cost::zero(), Cost::inf()}));
}

TEST_CASE("space enumeration: forced diagonal and the unconstrained two-object case") {
    CHECK(count_spaces(make_grid(1, {Cost::zero(), Cost::fin(1), Cost::inf()}), SpaceClass::All,
                       1) == 1);
    // no triangle constraint exists between two objects
    const InstanceGrid zero_one{2, {Cost::zero(), Cost::fin(1)}};
    CHECK(count_spaces(zero_one, SpaceClass::All, 2) == 4);
    CHECK(count_spaces(make_grid(2, {Cost::zero(), Cost::fin(1), Cost::fin(2), Cost::inf()}),
                       SpaceClass::All, 2) == 16);
}

TEST_CASE("space enumeration: frozen counts on the default grid") {
    const auto values = default_grid().values;
    CHECK(count_spaces(make_grid(3, values), SpaceClass::All) == 2532);
    CHECK(count_spaces(make_grid(3, values), SpaceClass::All, 3) == 2505);
    CHECK(count_spaces(make_grid(5, values), SpaceClass::Symmetric) == 9490);
}

TEST_CASE("every enumerated space satisfies the axioms") {
    enumerate_spaces(make_grid(3, default_grid().values), SpaceClass::All,
                     [](const SpacePtr& sp) {
                         auto v = validate_space(sp->objects, sp->dist);
                         REQUIRE(v.ok());
                     });
}

TEST_CASE("module enumeration: frozen counts and representables present") {
    auto a2 = fixtures::a2();
    const std::vector<Cost> small = {Cost::zero(), Cost::fin(1), Cost::fin(2)};
    int count = 0;
    bool saw_ya = false, saw_yb = false;
    enumerate_left_modules(a2, small, [&](const LeftModule& m) {
        ++count;
        CHECK(is_left_module(*a2, m.values));
        if (m.values == yoneda(a2, 0).values) saw_ya = true;
        if (m.values == yoneda(a2, 1).values) saw_yb = true;
    });
    CHECK(count == 8);
    CHECK(saw_ya);
    CHECK(saw_yb);
    int point_count = 0;
    enumerate_left_modules(fixtures::one_point(), {Cost::zero(), Cost::fin(1), Cost::inf()},
                           [&](const LeftModule&) { ++point_count; });
    CHECK(point_count == 3);
}

TEST_CASE("preorder enumeration matches the labeled counts") {
    const int expected[] = {1, 2, 6, 35, 390};  // cumulative: 1,1,4,29,355 per size
    for (int n = 0; n <= 4; ++n)
        CHECK(static_cast<int>(enumerate_preorders(n).size()) == expected[n]);
}

TEST_CASE("suite registry") {
    CHECK(suite_names().size() == 24);
    CHECK_THROWS_AS(run_suite("no-such-suite"), unknown_suite);
}

TEST_CASE("suite reports are deterministic") {
    const auto grid = make_grid(2, {Cost::zero(), Cost::fin(1), Cost::inf()});
    const auto a = run_suite("eq-3.21", grid);
    const auto b = run_suite("eq-3.21", grid);
    CHECK(to_json(a).dump() == to_json(b).dump());
    CHECK(a.instances > 0);
    CHECK(a.passed());
}

TEST_CASE("a broken flat test is caught by the inclusion chain with a small counterexample") {
    const auto mutant = [](const PrincipalFilter& f) {
        Classification c = classify(f);
        c.flat = c.flat && f.base.size() == 1;  // drops non-singleton flat filters
        return c;
    };
    const auto report = detail::run_inclusion_chain(default_grid(), mutant);
    REQUIRE_FALSE(report.passed());
    const auto& failure = report.failures.front();
    CHECK(failure.claim == "cauchy-implies-flat");
    const auto space = space_from_json(failure.counterexample.at("space"));
    CHECK(space->size() <= 3);
    // re-running the emitted document reproduces the failure
    std::vector<std::string> base;
    for (const auto& name : failure.counterexample.at("base"))
        base.push_back(name.get<std::string>());
    const auto filter = make_filter(space, base);
    const auto c = mutant(filter);
    CHECK(c.cauchy);
    CHECK_FALSE(c.flat);
}

TEST_CASE("a flipped directedness quantifier is caught by the boolean brute force") {
    const auto mutant = [](const Preorder& p, const std::vector<int>& members) {
        BoolFlatResult r = bool_flat_check(p, members);
        if (r.p1 && !r.p2) {
            // claims directedness as soon as one pair is bounded
            bool some_pair = false;
            for (int x : members)
                for (int y : members)
                    for (int z : members)
                        if (p.leq(x, z) && p.leq(y, z)) some_pair = true;
            r.p2 = some_pair;
        }
        return r;
    };
    const auto report = detail::run_bool_flat(3, mutant);
    REQUIRE_FALSE(report.passed());
    const auto& failure = report.failures.front();
    CHECK(failure.claim == "p2-iff-conditions");
    const auto preorder = preorder_from_json(failure.counterexample.at("preorder"));
    CHECK(preorder->size() <= 3);
    std::vector<int> members;
    for (const auto& name : failure.counterexample.at("members"))
        members.push_back(preorder->require(name.get<std::string>()));
    CHECK(mutant(*preorder, members).p2);
    CHECK_FALSE(bool_flat_check(*preorder, members).p2);
}
