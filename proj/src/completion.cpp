#include "flatcomp/completion.hpp"

#include <algorithm>

namespace flatcomp {

namespace {

bool meets_mode(const Classification& c, CompletionMode mode) {
    switch (mode) {
        case CompletionMode::Cauchy: return c.cauchy;
        case CompletionMode::P1: return c.weakly_flat;
        case CompletionMode::P2: return c.flat;
    }
    return false;
}

std::uint64_t base_mask(const PrincipalFilter& f) {
    std::uint64_t m = 0;
    for (int x : f.base) m |= std::uint64_t{1} << x;
    return m;
}

std::string point_name(const QuasiMetricSpace& base, const PrincipalFilter& f) {
    std::string name = "{";
    for (std::size_t i = 0; i < f.base.size(); ++i) {
        if (i) name += ",";
        name += base.objects[f.base[i]];
    }
    return name + "}";
}

}  // namespace

std::string to_string(CompletionMode mode) {
    switch (mode) {
        case CompletionMode::Cauchy: return "cauchy";
        case CompletionMode::P1: return "p1";
        case CompletionMode::P2: return "p2";
    }
    return "?";
}

std::optional<CompletionMode> completion_mode_from_string(std::string_view s) {
    if (s == "cauchy") return CompletionMode::Cauchy;
    if (s == "p1") return CompletionMode::P1;
    if (s == "p2") return CompletionMode::P2;
    return std::nullopt;
}

std::optional<int> CompletedSpace::index_of_point(const PrincipalFilter& f) const {
    for (int i = 0; i < static_cast<int>(points.size()); ++i)
        if (points[i].base == f.base) return i;
    return std::nullopt;
}

CompletedSpace complete(const SpacePtr& space, CompletionMode mode) {
    const int n = space->size();
    if (n > 24) throw std::invalid_argument("completion enumeration supports up to 24 objects");
    std::vector<PrincipalFilter> points;
    std::vector<std::uint64_t> seen;
    for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << n); ++mask) {
        std::vector<int> base;
        for (int x = 0; x < n; ++x)
            if (mask & (std::uint64_t{1} << x)) base.push_back(x);
        PrincipalFilter closed = closure(PrincipalFilter{space, std::move(base)});
        const std::uint64_t key = base_mask(closed);
        if (std::find(seen.begin(), seen.end(), key) != seen.end()) continue;
        seen.push_back(key);
        if (meets_mode(classify(closed), mode)) points.push_back(std::move(closed));
    }
    std::sort(points.begin(), points.end(),
              [](const PrincipalFilter& a, const PrincipalFilter& b) {
                  return base_mask(a) < base_mask(b);
              });

    const int k = static_cast<int>(points.size());
    std::vector<std::string> names(k);
    std::vector<std::vector<Cost>> dist(k, std::vector<Cost>(k));
    for (int i = 0; i < k; ++i) names[i] = point_name(*space, points[i]);
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) dist[i][j] = filter_distance(points[i], points[j]);
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j)
            if (i != j && dist[i][j].is_zero() && dist[j][i].is_zero())
                throw std::logic_error("distinct closed filters at mutual distance 0");
    SpacePtr point_space = make_space(std::move(names), std::move(dist));
    return CompletedSpace{mode, space, std::move(points), std::move(point_space)};
}

NonexpansiveMap embed(const CompletedSpace& completion) {
    const SpacePtr& base = completion.base_space;
    std::vector<int> assignment(base->size());
    for (int a = 0; a < base->size(); ++a) {
        const PrincipalFilter closed = closure(PrincipalFilter{base, {a}});
        const auto idx = completion.index_of_point(closed);
        if (!idx)
            throw std::invalid_argument(
                "no embedding: the closure of \"" + base->objects[a] +
                "\" is not a point of the " + to_string(completion.mode) + " completion");
        assignment[a] = *idx;
    }
    for (int a = 0; a < base->size(); ++a)
        for (int b = 0; b < base->size(); ++b)
            if (completion.space->d(assignment[a], assignment[b]) != base->d(a, b))
                throw std::logic_error("embedding does not preserve distances");
    return NonexpansiveMap{base, completion.space, std::move(assignment)};
}

NonexpansiveMap embed(const SpacePtr& space, CompletionMode mode) {
    return embed(complete(space, mode));
}

namespace {

/// First filter of the mode's class with no representative, if any.
std::optional<PrincipalFilter> incompleteness_witness(const SpacePtr& space, CompletionMode mode) {
    const int n = space->size();
    if (n > 24) throw std::invalid_argument("completion enumeration supports up to 24 objects");
    for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << n); ++mask) {
        std::vector<int> base;
        for (int x = 0; x < n; ++x)
            if (mask & (std::uint64_t{1} << x)) base.push_back(x);
        PrincipalFilter f{space, std::move(base)};
        if (!meets_mode(classify(f), mode)) continue;
        if (!representative(f)) return f;
    }
    return std::nullopt;
}

}  // namespace

Truth is_complete(const SpacePtr& space, CompletionMode mode) {
    return !incompleteness_witness(space, mode).has_value();
}

Extension extend(const NonexpansiveMap& f, CompletionMode mode) {
    if (auto witness = incompleteness_witness(f.target, mode)) {
        std::vector<std::string> names;
        for (int x : witness->base) names.push_back(f.target->objects[x]);
        throw target_not_complete(std::move(names));
    }
    CompletedSpace completion = complete(f.source, mode);
    std::vector<int> values(completion.points.size());
    for (std::size_t i = 0; i < completion.points.size(); ++i) {
        const auto rep = representative(direct_image(f, completion.points[i]));
        if (!rep) throw std::logic_error("direct image of a completion point has no representative");
        values[i] = *rep;
    }
    return Extension{std::move(completion), std::move(values)};
}

}  // namespace flatcomp
