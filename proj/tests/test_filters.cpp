#include <doctest.h>

#include "fixtures.hpp"

#include "flatcomp/enumerate.hpp"

using namespace flatcomp;
using fixtures::a2;
using fixtures::z2;

namespace {

PrincipalFilter f(const SpacePtr& sp, std::initializer_list<const char*> names) {
    std::vector<std::string> list;
    for (const char* n : names) list.push_back(n);
    return make_filter(sp, list);
}

}  // namespace

TEST_CASE("filter construction canonicalizes and rejects empties") {
    auto sp = a2();
    CHECK(make_filter(sp, std::vector<int>{1, 0, 1}).base == std::vector<int>{0, 1});
    CHECK_THROWS_AS(make_filter(sp, std::vector<int>{}), std::invalid_argument);
    CHECK_THROWS_AS(f(sp, {"nope"}), unknown_object);
}

TEST_CASE("filter moduli: row and column scans") {
    auto sp = a2();
    const auto both = f(sp, {"a", "b"});
    CHECK(m_minus(both).values == std::vector<Cost>{Cost::zero(), Cost::zero()});
    CHECK(m_plus(both).values == std::vector<Cost>{Cost::fin(1), Cost::fin(2)});
    CHECK(m_r_minus(both).values == std::vector<Cost>{Cost::zero(), Cost::zero()});
    CHECK(m_r_plus(both).values == std::vector<Cost>{Cost::fin(2), Cost::fin(1)});
    const auto single = f(sp, {"a"});
    CHECK(m_minus(single).values == yoneda(sp, 0).values);
    CHECK(m_plus(single).values == yoneda(sp, 0).values);
    CHECK(m_r_minus(single).values == co_yoneda(sp, 0).values);
    CHECK(m_r_plus(single).values == co_yoneda(sp, 0).values);
}

TEST_CASE("gamma recovers the zero set or nothing") {
    auto sp = a2();
    CHECK(gamma(yoneda(sp, 0))->base == std::vector<int>{0});
    CHECK(gamma(make_left_module(sp, {Cost::zero(), Cost::zero()}))->base ==
          std::vector<int>{0, 1});
    CHECK_FALSE(gamma(make_left_module(sp, {Cost::fin(1, 2), Cost::fin(3, 2)})).has_value());
}

TEST_CASE("classification of the worked filters") {
    auto sp = a2();
    const auto c1 = classify(f(sp, {"a", "b"}));
    CHECK_FALSE(c1.cauchy);
    CHECK_FALSE(c1.flat);
    CHECK(c1.weakly_flat);
    auto zs = z2();
    const auto c2 = classify(f(zs, {"u", "v"}));
    CHECK_FALSE(c2.cauchy);
    CHECK(c2.flat);
    CHECK(c2.weakly_flat);
    const auto c3 = classify(f(zs, {"u"}));
    CHECK(c3.cauchy);
    CHECK(c3.flat);
    CHECK(c3.weakly_flat);
}

TEST_CASE("closure pulls in zero-distance approximants and is idempotent") {
    auto zs = z2();
    CHECK(closure(f(zs, {"v"})).base == std::vector<int>{0, 1});
    auto sp = a2();
    CHECK(closure(f(sp, {"a"})).base == std::vector<int>{0});
    const auto once = closure(f(zs, {"v"}));
    CHECK(closure(once).base == once.base);
}

TEST_CASE("filter distance and the morphism relation") {
    auto sp = a2();
    CHECK(filter_distance(f(sp, {"a", "b"}), f(sp, {"a"})) == Cost::fin(2));
    CHECK(filter_distance(f(sp, {"a"}), f(sp, {"a", "b"})) == Cost::zero());
    CHECK(filter_distance(f(sp, {"a"}), f(sp, {"a"})) == Cost::zero());
    CHECK_FALSE(filter_leq(f(sp, {"a"}), f(sp, {"b"})));
    auto zs = z2();
    CHECK(filter_distance(f(zs, {"u", "v"}), f(zs, {"v"})) == Cost::zero());
    CHECK(filter_distance(f(zs, {"v"}), f(zs, {"u", "v"})) == Cost::zero());
    CHECK(filter_leq(f(zs, {"u", "v"}), f(zs, {"v"})));
    CHECK(filter_leq(f(zs, {"v"}), f(zs, {"u", "v"})));
    const auto any = f(zs, {"v"});
    CHECK(filter_leq(any, closure(any)));
    CHECK(filter_leq(closure(any), any));
    CHECK_THROWS_AS(filter_distance(f(sp, {"a"}), f(zs, {"u"})), space_mismatch);
}

TEST_CASE("representatives") {
    auto zs = z2();
    CHECK(representative(f(zs, {"v"})) == 1);
    CHECK(representative(f(zs, {"u"})) == 0);
    auto sp = a2();
    CHECK_FALSE(representative(f(sp, {"a", "b"})).has_value());
    CHECK(representative(f(sp, {"a"})) == 0);
}

TEST_CASE("neighborhood filters and convergence") {
    auto zs = z2();
    CHECK(neighborhood(zs, 1).base == std::vector<int>{0, 1});
    CHECK(neighborhood(zs, 0).base == std::vector<int>{0});
    CHECK(converges(f(zs, {"u"}), 0));
    auto sp = a2();
    CHECK(converges(f(sp, {"a"}), 0));
    CHECK_FALSE(converges(f(sp, {"a", "b"}), 0));
}

TEST_CASE("direct images") {
    auto src = a2();
    auto tgt = z2();
    const auto g = make_nonexpansive(src, tgt, {0, 0});
    const auto image = direct_image(g, f(src, {"a", "b"}));
    CHECK(image.base == std::vector<int>{0});
    CHECK(m_minus(image).values == lan(g, m_minus(f(src, {"a", "b"}))).values);
}

TEST_CASE("eventually periodic sequences") {
    auto zs = z2();
    const auto constant = seq_check(make_seq(zs, {}, {1}));
    CHECK(constant.forward_cauchy);
    CHECK(constant.filter.base == std::vector<int>{1});
    const auto alternating = seq_check(make_seq(zs, {}, {0, 1}));
    CHECK_FALSE(alternating.forward_cauchy);
    CHECK(alternating.filter.base == std::vector<int>{0, 1});
    auto sp = a2();
    CHECK_FALSE(seq_check(make_seq(sp, {}, {0, 1})).forward_cauchy);
    const auto with_prefix = seq_check(make_seq(sp, {0}, {1}));
    CHECK(with_prefix.forward_cauchy);  // the prefix does not matter
    CHECK(with_prefix.filter.base == std::vector<int>{1});
    CHECK_THROWS_AS(make_seq(sp, {}, {}), std::invalid_argument);
}

TEST_CASE("flat witness sequences") {
    auto zs = z2();
    const auto witness = flat_witness_sequence(f(zs, {"u", "v"}));
    REQUIRE(witness.has_value());
    CHECK(witness->cycle == std::vector<int>{1});
    auto sp = a2();
    CHECK_FALSE(flat_witness_sequence(f(sp, {"a", "b"})).has_value());
    const auto self = flat_witness_sequence(f(sp, {"b"}));
    REQUIRE(self.has_value());
    CHECK(self->cycle == std::vector<int>{1});
}

TEST_CASE("lower module is pointwise below the upper module, equal for cauchy filters") {
    enumerate_spaces(make_grid(3, default_grid().values), SpaceClass::All,
                     [](const SpacePtr& sp) {
                         const int n = sp->size();
                         for (std::uint32_t mask = 1; mask < (std::uint32_t{1} << n); ++mask) {
                             std::vector<int> base;
                             for (int x = 0; x < n; ++x)
                                 if (mask & (std::uint32_t{1} << x)) base.push_back(x);
                             const PrincipalFilter filter{sp, base};
                             const auto lower = m_minus(filter).values;
                             const auto upper = m_plus(filter).values;
                             for (int x = 0; x < n; ++x) REQUIRE(lower[x] <= upper[x]);
                             if (classify(filter).cauchy) REQUIRE(lower == upper);
                         }
                     });
}
