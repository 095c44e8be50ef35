#include "flatcomp/space.hpp"

namespace flatcomp {

std::optional<int> QuasiMetricSpace::index_of(std::string_view name) const {
    for (int i = 0; i < size(); ++i)
        if (objects[i] == name) return i;
    return std::nullopt;
}

int QuasiMetricSpace::require(std::string_view name) const {
    if (auto i = index_of(name)) return *i;
    throw unknown_object(std::string(name));
}

SpaceValidation validate_space(std::vector<std::string> objects,
                               std::vector<std::vector<Cost>> dist) {
    const int n = static_cast<int>(objects.size());
    if (static_cast<int>(dist.size()) != n)
        throw std::invalid_argument("distance matrix is not square over the object list");
    for (const auto& row : dist)
        if (static_cast<int>(row.size()) != n)
            throw std::invalid_argument("distance matrix is not square over the object list");
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (objects[i] == objects[j])
                throw std::invalid_argument("duplicate object \"" + objects[i] + "\"");

    SpaceValidation result;
    for (int x = 0; x < n; ++x)
        if (!dist[x][x].is_zero())
            result.violations.push_back({AxiomViolation::Kind::ZeroDiagonal, x, -1, -1,
                                         dist[x][x], Cost::zero(), Cost::zero()});
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            for (int z = 0; z < n; ++z)
                if (cost_tensor(dist[y][z], dist[x][y]) < dist[x][z])
                    result.violations.push_back({AxiomViolation::Kind::Triangle, x, y, z,
                                                 dist[x][z], dist[x][y], dist[y][z]});
    if (result.violations.empty())
        result.space = std::make_shared<QuasiMetricSpace>(
            QuasiMetricSpace{std::move(objects), std::move(dist)});
    return result;
}

SpacePtr make_space(std::vector<std::string> objects, std::vector<std::vector<Cost>> dist) {
    auto v = validate_space(std::move(objects), std::move(dist));
    if (!v.ok()) throw std::invalid_argument("distance matrix violates the space axioms");
    return v.space;
}

bool same_space(const SpacePtr& a, const SpacePtr& b) {
    if (a == b) return true;
    if (!a || !b) return false;
    return a->objects == b->objects && a->dist == b->dist;
}

bool is_symmetric(const QuasiMetricSpace& a) {
    for (int x = 0; x < a.size(); ++x)
        for (int y = x + 1; y < a.size(); ++y)
            if (a.d(x, y) != a.d(y, x)) return false;
    return true;
}

NonexpansiveMap make_nonexpansive(SpacePtr source, SpacePtr target, std::vector<int> assignment) {
    const int n = source->size();
    if (static_cast<int>(assignment.size()) != n)
        throw std::invalid_argument("map does not cover the source objects");
    for (int i : assignment)
        if (i < 0 || i >= target->size()) throw std::invalid_argument("map value out of range");
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            if (source->d(x, y) < target->d(assignment[x], assignment[y]))
                throw std::invalid_argument(
                    "map expands the distance from \"" + source->objects[x] + "\" to \"" +
                    source->objects[y] + "\"");
    return NonexpansiveMap{std::move(source), std::move(target), std::move(assignment)};
}

NonexpansiveMap identity_map(const SpacePtr& space) {
    std::vector<int> id(space->size());
    for (int i = 0; i < space->size(); ++i) id[i] = i;
    return NonexpansiveMap{space, space, std::move(id)};
}

}  // namespace flatcomp
