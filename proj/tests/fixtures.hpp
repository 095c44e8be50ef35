#pragma once

#include "flatcomp/completion.hpp"
#include "flatcomp/preorder.hpp"

namespace fixtures {

using namespace flatcomp;

// objects [a,b] with d(a,b) = 1, d(b,a) = 2
inline SpacePtr a2() {
    return make_space({"a", "b"}, {{Cost::zero(), Cost::fin(1)}, {Cost::fin(2), Cost::zero()}});
}

// objects [u,v] with d(u,v) = 0, d(v,u) = 3
inline SpacePtr z2() {
    return make_space({"u", "v"}, {{Cost::zero(), Cost::zero()}, {Cost::fin(3), Cost::zero()}});
}

inline SpacePtr one_point() { return make_space({"p"}, {{Cost::zero()}}); }

inline SpacePtr empty_space() { return make_space({}, {}); }

// x <= z, y <= z
inline PreorderPtr p3() { return validate_preorder({"x", "y", "z"}, {{"x", "z"}, {"y", "z"}}); }

inline PreorderPtr antichain2() { return validate_preorder({"x", "y"}, {}); }

inline PreorderPtr chain2() { return validate_preorder({"x", "y"}, {{"x", "y"}}); }

inline std::vector<int> names_to_ids(const SpacePtr& sp, const std::vector<std::string>& names) {
    std::vector<int> ids;
    for (const auto& n : names) ids.push_back(sp->require(n));
    return ids;
}

}  // namespace fixtures
