#include "flatcomp/preorder.hpp"

#include <algorithm>

namespace flatcomp {

namespace {

std::vector<int> mask_to_members(std::uint64_t mask, int n) {
    std::vector<int> members;
    for (int i = 0; i < n; ++i)
        if (mask & (std::uint64_t{1} << i)) members.push_back(i);
    return members;
}

std::uint64_t members_to_mask(const std::vector<int>& members) {
    std::uint64_t mask = 0;
    for (int i : members) mask |= std::uint64_t{1} << i;
    return mask;
}

std::string subset_name(const Preorder& base, const std::vector<int>& members) {
    std::string name = "{";
    for (std::size_t i = 0; i < members.size(); ++i) {
        if (i) name += ",";
        name += base.objects[members[i]];
    }
    return name + "}";
}

std::uint64_t lower_bounds_mask(const Preorder& p, std::uint64_t mask) {
    std::uint64_t out = 0;
    for (int x = 0; x < p.size(); ++x) {
        bool all = true;
        for (int y = 0; y < p.size() && all; ++y)
            if (mask & (std::uint64_t{1} << y)) all = p.leq(x, y);
        if (all) out |= std::uint64_t{1} << x;
    }
    return out;
}

std::uint64_t upper_bounds_mask(const Preorder& p, std::uint64_t mask) {
    std::uint64_t out = 0;
    for (int y = 0; y < p.size(); ++y) {
        bool all = true;
        for (int x = 0; x < p.size() && all; ++x)
            if (mask & (std::uint64_t{1} << x)) all = p.leq(x, y);
        if (all) out |= std::uint64_t{1} << y;
    }
    return out;
}

bool is_downset_mask(const Preorder& p, std::uint64_t mask) {
    for (int y = 0; y < p.size(); ++y)
        if (mask & (std::uint64_t{1} << y))
            for (int x = 0; x < p.size(); ++x)
                if (p.leq(x, y) && !(mask & (std::uint64_t{1} << x))) return false;
    return true;
}

bool is_directed_mask(const Preorder& p, std::uint64_t mask) {
    for (int x = 0; x < p.size(); ++x) {
        if (!(mask & (std::uint64_t{1} << x))) continue;
        for (int y = 0; y < p.size(); ++y) {
            if (!(mask & (std::uint64_t{1} << y))) continue;
            bool bounded = false;
            for (int z = 0; z < p.size() && !bounded; ++z)
                if ((mask & (std::uint64_t{1} << z)) && p.leq(x, z) && p.leq(y, z)) bounded = true;
            if (!bounded) return false;
        }
    }
    return true;
}

CompletedPreorder build_completion(PreorderCompletionMode mode, const PreorderPtr& base,
                                   std::vector<std::uint64_t> point_masks,
                                   std::vector<Cut> cuts) {
    const int n = base->size();
    const int k = static_cast<int>(point_masks.size());
    std::vector<std::vector<int>> points(k);
    std::vector<std::string> names(k);
    for (int i = 0; i < k; ++i) {
        points[i] = mask_to_members(point_masks[i], n);
        names[i] = subset_name(*base, points[i]);
    }
    std::vector<std::vector<std::uint8_t>> le(k, std::vector<std::uint8_t>(k, 0));
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j)
            le[i][j] = (point_masks[i] & ~point_masks[j]) == 0 ? 1 : 0;
    auto preorder = std::make_shared<Preorder>(Preorder{std::move(names), std::move(le)});
    return CompletedPreorder{mode, base, std::move(points), std::move(preorder), std::move(cuts)};
}

}  // namespace

std::optional<int> Preorder::index_of(std::string_view name) const {
    for (int i = 0; i < size(); ++i)
        if (objects[i] == name) return i;
    return std::nullopt;
}

int Preorder::require(std::string_view name) const {
    if (auto i = index_of(name)) return *i;
    throw unknown_object(std::string(name));
}

PreorderPtr make_preorder(std::vector<std::string> objects,
                          std::vector<std::vector<std::uint8_t>> relation) {
    const int n = static_cast<int>(objects.size());
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (objects[i] == objects[j])
                throw std::invalid_argument("duplicate object \"" + objects[i] + "\"");
    if (static_cast<int>(relation.size()) != n)
        throw std::invalid_argument("relation matrix is not square over the object list");
    for (auto& row : relation)
        if (static_cast<int>(row.size()) != n)
            throw std::invalid_argument("relation matrix is not square over the object list");
    for (int i = 0; i < n; ++i) relation[i][i] = 1;
    for (int k = 0; k < n; ++k)  // Warshall closure
        for (int i = 0; i < n; ++i)
            if (relation[i][k])
                for (int j = 0; j < n; ++j)
                    if (relation[k][j]) relation[i][j] = 1;
    return std::make_shared<Preorder>(Preorder{std::move(objects), std::move(relation)});
}

PreorderPtr validate_preorder(std::vector<std::string> objects,
                              const std::vector<std::pair<std::string, std::string>>& pairs) {
    const int n = static_cast<int>(objects.size());
    std::vector<std::vector<std::uint8_t>> relation(n, std::vector<std::uint8_t>(n, 0));
    Preorder lookup{objects, {}};
    for (const auto& [from, to] : pairs) {
        const int x = lookup.require(from);
        const int y = lookup.require(to);
        relation[x][y] = 1;
    }
    return make_preorder(std::move(objects), std::move(relation));
}

PreorderPtr underlying_preorder(const SpacePtr& space) {
    const int n = space->size();
    std::vector<std::vector<std::uint8_t>> le(n, std::vector<std::uint8_t>(n, 0));
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) le[x][y] = space->d(x, y).is_zero() ? 1 : 0;
    return std::make_shared<Preorder>(Preorder{space->objects, std::move(le)});
}

bool is_downset(const Preorder& p, const std::vector<int>& members) {
    return is_downset_mask(p, members_to_mask(members));
}

bool is_upset(const Preorder& p, const std::vector<int>& members) {
    const std::uint64_t mask = members_to_mask(members);
    for (int x = 0; x < p.size(); ++x)
        if (mask & (std::uint64_t{1} << x))
            for (int y = 0; y < p.size(); ++y)
                if (p.leq(x, y) && !(mask & (std::uint64_t{1} << y))) return false;
    return true;
}

bool is_directed(const Preorder& p, const std::vector<int>& members) {
    return is_directed_mask(p, members_to_mask(members));
}

std::vector<int> lower_bounds(const Preorder& p, const std::vector<int>& members) {
    return mask_to_members(lower_bounds_mask(p, members_to_mask(members)), p.size());
}

std::vector<int> upper_bounds(const Preorder& p, const std::vector<int>& members) {
    return mask_to_members(upper_bounds_mask(p, members_to_mask(members)), p.size());
}

std::optional<int> least_upper_bound(const Preorder& p, const std::vector<int>& members) {
    const std::uint64_t ub = upper_bounds_mask(p, members_to_mask(members));
    for (int c = 0; c < p.size(); ++c) {
        if (!(ub & (std::uint64_t{1} << c))) continue;
        bool least = true;
        for (int u = 0; u < p.size() && least; ++u)
            if (ub & (std::uint64_t{1} << u)) least = p.leq(c, u);
        if (least) return c;
    }
    return std::nullopt;
}

BoolFlatResult bool_flat_check(const Preorder& p, const std::vector<int>& members) {
    const bool module_ok = is_downset(p, members);
    const bool p1 = module_ok && !members.empty();
    const bool p2 = p1 && is_directed(p, members);
    return BoolFlatResult{module_ok, p1, p2};
}

std::string to_string(PreorderCompletionMode mode) {
    switch (mode) {
        case PreorderCompletionMode::Down: return "down";
        case PreorderCompletionMode::P1: return "p1";
        case PreorderCompletionMode::Ideal: return "ideal";
        case PreorderCompletionMode::Dm: return "dm";
    }
    return "?";
}

std::optional<PreorderCompletionMode> preorder_mode_from_string(std::string_view s) {
    if (s == "down") return PreorderCompletionMode::Down;
    if (s == "p1") return PreorderCompletionMode::P1;
    if (s == "ideal") return PreorderCompletionMode::Ideal;
    if (s == "dm") return PreorderCompletionMode::Dm;
    return std::nullopt;
}

CompletedPreorder complete_preorder(const PreorderPtr& p, PreorderCompletionMode mode) {
    const int n = p->size();
    if (n > 24) throw std::invalid_argument("completion enumeration supports up to 24 objects");
    std::vector<std::uint64_t> masks;
    std::vector<Cut> cuts;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
        switch (mode) {
            case PreorderCompletionMode::Down:
                if (is_downset_mask(*p, mask)) masks.push_back(mask);
                break;
            case PreorderCompletionMode::P1:
                if (mask != 0 && is_downset_mask(*p, mask)) masks.push_back(mask);
                break;
            case PreorderCompletionMode::Ideal:
                if (mask != 0 && is_downset_mask(*p, mask) && is_directed_mask(*p, mask))
                    masks.push_back(mask);
                break;
            case PreorderCompletionMode::Dm: {
                const std::uint64_t upper = upper_bounds_mask(*p, mask);
                if (lower_bounds_mask(*p, upper) == mask) {
                    masks.push_back(mask);
                    cuts.push_back(Cut{mask_to_members(mask, n), mask_to_members(upper, n)});
                }
                break;
            }
        }
    }
    return build_completion(mode, p, std::move(masks), std::move(cuts));
}

CompletedPreorder dm_via_modules(const PreorderPtr& p) {
    const int n = p->size();
    if (n > 24) throw std::invalid_argument("completion enumeration supports up to 24 objects");
    std::vector<std::uint64_t> masks;
    std::vector<Cut> cuts;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
        if (!is_downset_mask(*p, mask)) continue;
        // Conjugate pair: N(y) = meet_x (M(x) => le(x,y)), then recover
        // M'(x) = meet_y (N(y) => le(x,y)); keep M exactly when M' = M.
        std::uint64_t conj = 0;
        for (int y = 0; y < n; ++y) {
            bool value = true;
            for (int x = 0; x < n && value; ++x) {
                const bool mx = (mask >> x) & 1;
                value = truth_ops(mx, p->leq(x, y)).hom;
            }
            if (value) conj |= std::uint64_t{1} << y;
        }
        std::uint64_t recovered = 0;
        for (int x = 0; x < n; ++x) {
            bool value = true;
            for (int y = 0; y < n && value; ++y) {
                const bool ny = (conj >> y) & 1;
                value = truth_ops(ny, p->leq(x, y)).hom;
            }
            if (value) recovered |= std::uint64_t{1} << x;
        }
        if (recovered == mask) {
            masks.push_back(mask);
            cuts.push_back(Cut{mask_to_members(mask, n), mask_to_members(conj, n)});
        }
    }
    return build_completion(PreorderCompletionMode::Dm, p, std::move(masks), std::move(cuts));
}

PreorderPtr iso_quotient(const PreorderPtr& p, std::vector<int>* class_of) {
    const int n = p->size();
    std::vector<int> cls(n, -1);
    std::vector<int> reps;
    for (int x = 0; x < n; ++x) {
        if (cls[x] >= 0) continue;
        cls[x] = static_cast<int>(reps.size());
        for (int y = x + 1; y < n; ++y)
            if (p->leq(x, y) && p->leq(y, x)) cls[y] = cls[x];
        reps.push_back(x);
    }
    const int k = static_cast<int>(reps.size());
    std::vector<std::string> names(k);
    std::vector<std::vector<std::uint8_t>> le(k, std::vector<std::uint8_t>(k, 0));
    for (int i = 0; i < k; ++i) names[i] = "[" + p->objects[reps[i]] + "]";
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) le[i][j] = p->leq(reps[i], reps[j]) ? 1 : 0;
    if (class_of) *class_of = cls;
    return std::make_shared<Preorder>(Preorder{std::move(names), std::move(le)});
}

MonotoneMap make_monotone(PreorderPtr source, PreorderPtr target, std::vector<int> assignment) {
    const int n = source->size();
    if (static_cast<int>(assignment.size()) != n)
        throw std::invalid_argument("map does not cover the source objects");
    for (int i : assignment)
        if (i < 0 || i >= target->size()) throw std::invalid_argument("map value out of range");
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            if (source->leq(x, y) && !target->leq(assignment[x], assignment[y]))
                throw std::invalid_argument("map is not order preserving");
    return MonotoneMap{std::move(source), std::move(target), std::move(assignment)};
}

PreorderExtension extend_monotone(const MonotoneMap& f, BoolExtendMode mode) {
    const Preorder& b = *f.target;
    if (b.size() > 24 || f.source->size() > 24)
        throw std::invalid_argument("completion enumeration supports up to 24 objects");
    for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << b.size()); ++mask) {
        if (mode == BoolExtendMode::Ideal && !is_directed_mask(b, mask)) continue;
        auto members = mask_to_members(mask, b.size());
        if (!least_upper_bound(b, members)) {
            std::vector<std::string> names;
            for (int x : members) names.push_back(b.objects[x]);
            throw target_lacks_lub(std::move(names));
        }
    }
    CompletedPreorder completion = complete_preorder(
        f.source, mode == BoolExtendMode::P1 ? PreorderCompletionMode::P1
                                             : PreorderCompletionMode::Ideal);
    std::vector<int> values(completion.points.size());
    for (std::size_t i = 0; i < completion.points.size(); ++i) {
        std::vector<int> image;
        for (int x : completion.points[i]) image.push_back(f(x));
        const auto lub = least_upper_bound(b, image);
        if (!lub) throw std::logic_error("image of a completion point has no least upper bound");
        values[i] = *lub;
    }
    return PreorderExtension{std::move(completion), std::move(values)};
}

}  // namespace flatcomp
