#include "flatcomp/module.hpp"

namespace flatcomp {

namespace {

void require_same(const SpacePtr& a, const SpacePtr& b) {
    if (!same_space(a, b)) throw space_mismatch();
}

std::vector<int> zero_set(const LeftModule& m) {
    std::vector<int> z;
    for (int x = 0; x < m.space->size(); ++x)
        if (m.values[x].is_zero()) z.push_back(x);
    return z;
}

}  // namespace

bool is_left_module(const QuasiMetricSpace& space, std::span<const Cost> values) {
    const int n = space.size();
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            if (cost_tensor(values[y], space.d(x, y)) < values[x]) return false;
    return true;
}

bool is_right_module(const QuasiMetricSpace& space, std::span<const Cost> values) {
    const int n = space.size();
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            if (cost_tensor(space.d(x, y), values[x]) < values[y]) return false;
    return true;
}

LeftModule make_left_module(SpacePtr space, std::vector<Cost> values) {
    if (static_cast<int>(values.size()) != space->size())
        throw std::invalid_argument("module values do not cover the objects");
    if (!is_left_module(*space, values))
        throw std::invalid_argument("values violate the left module inequality");
    return LeftModule{std::move(space), std::move(values)};
}

RightModule make_right_module(SpacePtr space, std::vector<Cost> values) {
    if (static_cast<int>(values.size()) != space->size())
        throw std::invalid_argument("module values do not cover the objects");
    if (!is_right_module(*space, values))
        throw std::invalid_argument("values violate the right module inequality");
    return RightModule{std::move(space), std::move(values)};
}

Cost hom_presheaf(const LeftModule& m, const LeftModule& n) {
    require_same(m.space, n.space);
    Cost acc = Cost::zero();
    for (int x = 0; x < m.space->size(); ++x)
        acc = cost_max(acc, cost_hom(m.values[x], n.values[x]));
    return acc;
}

Cost compose_modules(const RightModule& n, const LeftModule& m) {
    require_same(n.space, m.space);
    Cost acc = Cost::inf();
    for (int x = 0; x < m.space->size(); ++x)
        acc = cost_min(acc, cost_tensor(m.values[x], n.values[x]));
    return acc;
}

LeftModule yoneda(const SpacePtr& space, int a) {
    if (a < 0 || a >= space->size()) throw unknown_object(std::to_string(a));
    std::vector<Cost> values(space->size());
    for (int x = 0; x < space->size(); ++x) values[x] = space->d(x, a);
    return LeftModule{space, std::move(values)};
}

RightModule co_yoneda(const SpacePtr& space, int a) {
    if (a < 0 || a >= space->size()) throw unknown_object(std::to_string(a));
    std::vector<Cost> values(space->size());
    for (int x = 0; x < space->size(); ++x) values[x] = space->d(a, x);
    return RightModule{space, std::move(values)};
}

std::optional<RightModule> right_adjoint_check(const LeftModule& m) {
    const int n = m.space->size();
    std::vector<Cost> cand(n);
    for (int x = 0; x < n; ++x) cand[x] = hom_presheaf(m, yoneda(m.space, x));
    RightModule candidate{m.space, std::move(cand)};
    if (!compose_modules(candidate, m).is_zero()) return std::nullopt;
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            if (cost_tensor(candidate.values[y], m.values[x]) < m.space->d(x, y))
                return std::nullopt;
    return candidate;
}

LeftModule lan(const NonexpansiveMap& g, const LeftModule& m) {
    require_same(g.source, m.space);
    const auto& b = *g.target;
    std::vector<Cost> values(b.size());
    for (int y = 0; y < b.size(); ++y) {
        Cost acc = Cost::inf();
        for (int x = 0; x < g.source->size(); ++x)
            acc = cost_min(acc, cost_tensor(m.values[x], b.d(y, g(x))));
        values[y] = acc;
    }
    return LeftModule{g.target, std::move(values)};
}

std::optional<int> weighted_colimit(const LeftModule& m, const NonexpansiveMap& g) {
    require_same(g.source, m.space);
    const auto& b = *g.target;
    // required[c] = hom(M, d_B(G -, c)), the distance pattern a colimit must have
    std::vector<Cost> required(b.size());
    for (int c = 0; c < b.size(); ++c) {
        Cost acc = Cost::zero();
        for (int x = 0; x < g.source->size(); ++x)
            acc = cost_max(acc, cost_hom(m.values[x], b.d(g(x), c)));
        required[c] = acc;
    }
    for (int cand = 0; cand < b.size(); ++cand) {
        bool ok = true;
        for (int c = 0; c < b.size() && ok; ++c) ok = b.d(cand, c) == required[c];
        if (ok) return cand;
    }
    return std::nullopt;
}

Truth is_p1_flat(const LeftModule& m) {
    const int n = m.space->size();
    Cost least = Cost::inf();
    for (const Cost& v : m.values) least = cost_min(least, v);
    if (!least.is_zero()) return false;
    const std::vector<int> z = zero_set(m);
    for (int x = 0; x < n; ++x) {
        Cost acc = Cost::inf();
        for (int y : z) acc = cost_min(acc, m.space->d(x, y));
        if (m.values[x] != acc) return false;
    }
    return true;
}

Truth is_p2_flat(const LeftModule& m) {
    if (!is_p1_flat(m)) return false;
    const std::vector<int> z = zero_set(m);
    for (int y : z) {
        bool hits_all = true;
        for (int x : z)
            if (!m.space->d(x, y).is_zero()) {
                hits_all = false;
                break;
            }
        if (hits_all) return true;
    }
    return false;
}

std::optional<FlatCounterexample> falsify_flat_conditions(const LeftModule& m, Cost v,
                                                          std::span<const RightModule> family) {
    const int n = m.space->size();
    for (const RightModule& member : family) require_same(member.space, m.space);

    // Finite conical limits: meet_x (M(x) + join_i N_i(x)) vs
    // join_i meet_x (M(x) + N_i(x)).
    Cost lhs = Cost::inf();
    for (int x = 0; x < n; ++x) {
        Cost sup = Cost::zero();
        for (const RightModule& member : family) sup = cost_max(sup, member.values[x]);
        lhs = cost_min(lhs, cost_tensor(m.values[x], sup));
    }
    Cost rhs = Cost::zero();
    for (const RightModule& member : family) rhs = cost_max(rhs, compose_modules(member, m));
    if (lhs != rhs)
        return FlatCounterexample{FlatCounterexample::Condition::FiniteLimits, -1, v, lhs, rhs};

    // Cotensors: meet_x (M(x) + [v, N(x)]) vs [v, N * M], per member.
    for (int i = 0; i < static_cast<int>(family.size()); ++i) {
        const RightModule& member = family[i];
        Cost clhs = Cost::inf();
        for (int x = 0; x < n; ++x)
            clhs = cost_min(clhs, cost_tensor(m.values[x], cost_hom(v, member.values[x])));
        const Cost crhs = cost_hom(v, compose_modules(member, m));
        if (clhs != crhs)
            return FlatCounterexample{FlatCounterexample::Condition::Cotensor, i, v, clhs, crhs};
    }
    return std::nullopt;
}

}  // namespace flatcomp
