#include "flatcomp/enumerate.hpp"

#include <algorithm>
#include <set>

namespace flatcomp {

namespace {

const char* const kObjectNames[] = {"a", "b", "c", "d", "e", "f", "g", "h"};
const char* const kPreorderNames[] = {"x", "y", "z", "w", "v"};

struct SpaceSearch {
    const InstanceGrid& grid;
    SpaceClass cls;
    const std::function<void(const SpacePtr&)>& yield;
    int n = 0;
    std::vector<std::vector<Cost>> dist;
    // Cells in fill order: the leading k x k block is completed before any
    // cell touching object k, so each new cell closes only triangles whose
    // other two cells are already set.
    std::vector<std::pair<int, int>> cells;

    bool triangles_ok(int p, int q) const {
        for (int t = 0; t < n; ++t) {
            if (!filled(p, t) || !filled(t, q) || !filled(p, q)) continue;
            if (cost_tensor(dist[t][q], dist[p][t]) < dist[p][q]) return false;
        }
        // (p,q) may also be the "via" cell or the left leg of other triangles
        for (int t = 0; t < n; ++t) {
            if (filled(t, p) && filled(t, q) && cost_tensor(dist[p][q], dist[t][p]) < dist[t][q])
                return false;
            if (filled(q, t) && filled(p, t) && cost_tensor(dist[q][t], dist[p][q]) < dist[p][t])
                return false;
        }
        return true;
    }

    std::vector<std::vector<bool>> is_filled;
    bool filled(int i, int j) const { return is_filled[i][j]; }

    void fill(std::size_t cell_index) {
        if (cell_index == cells.size()) {
            std::vector<std::string> names(n);
            for (int i = 0; i < n; ++i) names[i] = kObjectNames[i];
            yield(std::make_shared<QuasiMetricSpace>(QuasiMetricSpace{std::move(names), dist}));
            return;
        }
        const auto [p, q] = cells[cell_index];
        for (const Cost& v : grid.values) {
            if (cls == SpaceClass::ZeroInf && !v.is_zero() && !v.is_inf()) continue;
            dist[p][q] = v;
            is_filled[p][q] = true;
            bool ok = triangles_ok(p, q);
            if (ok && cls == SpaceClass::Symmetric) {
                dist[q][p] = v;
                is_filled[q][p] = true;
                ok = triangles_ok(q, p);
            }
            if (ok) fill(cell_index + 1);
            is_filled[p][q] = false;
            if (cls == SpaceClass::Symmetric) is_filled[q][p] = false;
        }
    }

    void run(int objects) {
        n = objects;
        dist.assign(n, std::vector<Cost>(n, Cost::zero()));
        is_filled.assign(n, std::vector<bool>(n, false));
        for (int i = 0; i < n; ++i) is_filled[i][i] = true;
        cells.clear();
        for (int k = 1; k < n; ++k) {
            for (int i = 0; i < k; ++i) {
                cells.emplace_back(i, k);
                if (cls != SpaceClass::Symmetric) cells.emplace_back(k, i);
            }
        }
        fill(0);
    }
};

}  // namespace

InstanceGrid make_grid(int max_objects, std::vector<Cost> values) {
    if (max_objects < 0 || max_objects > 8)
        throw std::invalid_argument("grid object cap out of range");
    const bool has_zero = std::find(values.begin(), values.end(), Cost::zero()) != values.end();
    const bool has_inf = std::find(values.begin(), values.end(), Cost::inf()) != values.end();
    if (!has_zero || !has_inf) throw std::invalid_argument("grid must contain 0 and inf");
    return InstanceGrid{max_objects, std::move(values)};
}

InstanceGrid default_grid() {
    return make_grid(4, {Cost::zero(), Cost::fin(1, 2), Cost::fin(1), Cost::fin(2), Cost::inf()});
}

void enumerate_spaces(const InstanceGrid& grid, SpaceClass cls,
                      const std::function<void(const SpacePtr&)>& yield) {
    for (int n = 0; n <= grid.max_objects; ++n) {
        SpaceSearch search{grid, cls, yield, 0, {}, {}, {}};
        search.run(n);
    }
}

namespace {

template <typename Module, typename Check>
void enumerate_modules_impl(const SpacePtr& space, const std::vector<Cost>& values,
                            const Check& partial_ok,
                            const std::function<void(const Module&)>& yield) {
    const int n = space->size();
    std::vector<Cost> assignment(n, Cost::zero());
    auto rec = [&](auto&& self, int next) -> void {
        if (next == n) {
            yield(Module{space, assignment});
            return;
        }
        for (const Cost& v : values) {
            assignment[next] = v;
            if (partial_ok(assignment, next)) self(self, next + 1);
        }
    };
    rec(rec, 0);
}

}  // namespace

void enumerate_left_modules(const SpacePtr& space, const std::vector<Cost>& values,
                            const std::function<void(const LeftModule&)>& yield) {
    const auto& sp = *space;
    auto partial_ok = [&sp](const std::vector<Cost>& m, int last) {
        for (int x = 0; x <= last; ++x) {
            if (cost_tensor(m[last], sp.d(x, last)) < m[x]) return false;
            if (cost_tensor(m[x], sp.d(last, x)) < m[last]) return false;
        }
        return true;
    };
    enumerate_modules_impl<LeftModule>(space, values, partial_ok, yield);
}

void enumerate_right_modules(const SpacePtr& space, const std::vector<Cost>& values,
                             const std::function<void(const RightModule&)>& yield) {
    const auto& sp = *space;
    auto partial_ok = [&sp](const std::vector<Cost>& m, int last) {
        for (int x = 0; x <= last; ++x) {
            if (cost_tensor(sp.d(x, last), m[x]) < m[last]) return false;
            if (cost_tensor(sp.d(last, x), m[last]) < m[x]) return false;
        }
        return true;
    };
    enumerate_modules_impl<RightModule>(space, values, partial_ok, yield);
}

std::vector<PreorderPtr> enumerate_preorders(int max_objects) {
    if (max_objects < 0 || max_objects > 5)
        throw std::invalid_argument("preorder object cap out of range");
    std::vector<PreorderPtr> result;
    for (int n = 0; n <= max_objects; ++n) {
        std::set<std::vector<std::uint64_t>> seen;
        std::vector<std::string> names(n);
        for (int i = 0; i < n; ++i) names[i] = kPreorderNames[i];
        const std::uint64_t cell_count = static_cast<std::uint64_t>(n) * n;
        for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << cell_count); ++bits) {
            std::vector<std::vector<std::uint8_t>> rel(n, std::vector<std::uint8_t>(n, 0));
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j)
                    rel[i][j] = (bits >> (i * n + j)) & 1;
            PreorderPtr p = make_preorder(names, std::move(rel));
            std::vector<std::uint64_t> key(n, 0);
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j)
                    if (p->leq(i, j)) key[i] |= std::uint64_t{1} << j;
            if (seen.insert(key).second) result.push_back(std::move(p));
        }
    }
    return result;
}

}  // namespace flatcomp
