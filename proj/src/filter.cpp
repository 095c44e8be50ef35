#include "flatcomp/filter.hpp"

#include <algorithm>

namespace flatcomp {

namespace {

void require_same(const SpacePtr& a, const SpacePtr& b) {
    if (!same_space(a, b)) throw space_mismatch();
}

}  // namespace

bool operator==(const PrincipalFilter& a, const PrincipalFilter& b) {
    return same_space(a.space, b.space) && a.base == b.base;
}

PrincipalFilter make_filter(SpacePtr space, std::vector<int> base) {
    std::sort(base.begin(), base.end());
    base.erase(std::unique(base.begin(), base.end()), base.end());
    if (base.empty()) throw std::invalid_argument("filter base may not be empty");
    if (base.front() < 0 || base.back() >= space->size())
        throw std::invalid_argument("filter base member out of range");
    return PrincipalFilter{std::move(space), std::move(base)};
}

PrincipalFilter make_filter(const SpacePtr& space, const std::vector<std::string>& names) {
    std::vector<int> base;
    base.reserve(names.size());
    for (const auto& name : names) base.push_back(space->require(name));
    return make_filter(space, std::move(base));
}

LeftModule m_minus(const PrincipalFilter& f) {
    std::vector<Cost> values(f.space->size());
    for (int x = 0; x < f.space->size(); ++x) {
        Cost acc = Cost::inf();
        for (int y : f.base) acc = cost_min(acc, f.space->d(x, y));
        values[x] = acc;
    }
    return LeftModule{f.space, std::move(values)};
}

LeftModule m_plus(const PrincipalFilter& f) {
    std::vector<Cost> values(f.space->size());
    for (int x = 0; x < f.space->size(); ++x) {
        Cost acc = Cost::zero();
        for (int y : f.base) acc = cost_max(acc, f.space->d(x, y));
        values[x] = acc;
    }
    return LeftModule{f.space, std::move(values)};
}

RightModule m_r_minus(const PrincipalFilter& f) {
    std::vector<Cost> values(f.space->size());
    for (int x = 0; x < f.space->size(); ++x) {
        Cost acc = Cost::inf();
        for (int y : f.base) acc = cost_min(acc, f.space->d(y, x));
        values[x] = acc;
    }
    return RightModule{f.space, std::move(values)};
}

RightModule m_r_plus(const PrincipalFilter& f) {
    std::vector<Cost> values(f.space->size());
    for (int x = 0; x < f.space->size(); ++x) {
        Cost acc = Cost::zero();
        for (int y : f.base) acc = cost_max(acc, f.space->d(y, x));
        values[x] = acc;
    }
    return RightModule{f.space, std::move(values)};
}

std::optional<PrincipalFilter> gamma(const LeftModule& m) {
    std::vector<int> zero;
    Cost least = Cost::inf();
    for (int x = 0; x < m.space->size(); ++x) {
        least = cost_min(least, m.values[x]);
        if (m.values[x].is_zero()) zero.push_back(x);
    }
    if (!least.is_zero()) return std::nullopt;
    return PrincipalFilter{m.space, std::move(zero)};
}

Classification classify(const PrincipalFilter& f) {
    const auto& sp = *f.space;
    bool cauchy = true;
    for (int x : f.base)
        for (int y : f.base)
            if (!sp.d(x, y).is_zero()) cauchy = false;
    bool flat = false;
    for (int y : f.base) {
        bool hits_all = true;
        for (int x : f.base)
            if (!sp.d(x, y).is_zero()) {
                hits_all = false;
                break;
            }
        if (hits_all) {
            flat = true;
            break;
        }
    }
    return Classification{cauchy, flat, true};
}

PrincipalFilter closure(const PrincipalFilter& f) {
    const LeftModule m = m_minus(f);
    std::vector<int> zero;
    for (int x = 0; x < f.space->size(); ++x)
        if (m.values[x].is_zero()) zero.push_back(x);
    return PrincipalFilter{f.space, std::move(zero)};
}

Truth filter_leq(const PrincipalFilter& f1, const PrincipalFilter& f2) {
    require_same(f1.space, f2.space);
    const bool by_distance = filter_distance(f1, f2).is_zero();
    const PrincipalFilter cl2 = closure(f2);
    const bool by_closure = std::includes(cl2.base.begin(), cl2.base.end(),
                                          f1.base.begin(), f1.base.end());
    if (by_distance != by_closure)
        throw std::logic_error("filter_leq: the two formulations disagree");
    return by_distance;
}

Cost filter_distance(const PrincipalFilter& f1, const PrincipalFilter& f2) {
    require_same(f1.space, f2.space);
    const auto& sp = *f1.space;
    Cost acc = Cost::zero();
    for (int x : f1.base) {
        Cost inner = Cost::inf();
        for (int y : f2.base) inner = cost_min(inner, sp.d(x, y));
        acc = cost_max(acc, inner);
    }
    if (acc != hom_presheaf(m_minus(f1), m_minus(f2)))
        throw std::logic_error("filter_distance: disagrees with the presheaf hom");
    return acc;
}

std::optional<int> representative(const PrincipalFilter& f) {
    const auto& sp = *f.space;
    for (int cand = 0; cand < sp.size(); ++cand) {
        bool ok = true;
        for (int a = 0; a < sp.size() && ok; ++a) {
            Cost sup = Cost::zero();
            for (int y : f.base) sup = cost_max(sup, sp.d(y, a));
            ok = sp.d(cand, a) == sup;
        }
        if (ok) return cand;
    }
    return std::nullopt;
}

PrincipalFilter neighborhood(const SpacePtr& space, int x) {
    if (x < 0 || x >= space->size()) throw unknown_object(std::to_string(x));
    auto v = gamma(yoneda(space, x));
    return *v;  // yoneda(x) vanishes at x, so the filter always exists
}

Truth converges(const PrincipalFilter& f, int x) {
    const PrincipalFilter v = neighborhood(f.space, x);
    const bool by_containment = std::includes(v.base.begin(), v.base.end(),
                                              f.base.begin(), f.base.end());
    const bool by_hom = hom_presheaf(m_minus(f), yoneda(f.space, x)).is_zero();
    if (by_containment != by_hom)
        throw std::logic_error("converges: the two formulations disagree");
    return by_containment;
}

PrincipalFilter direct_image(const NonexpansiveMap& g, const PrincipalFilter& f) {
    require_same(g.source, f.space);
    std::vector<int> image;
    image.reserve(f.base.size());
    for (int x : f.base) image.push_back(g(x));
    return make_filter(g.target, std::move(image));
}

FwdSeq make_seq(SpacePtr space, std::vector<int> prefix, std::vector<int> cycle) {
    if (cycle.empty()) throw std::invalid_argument("sequence cycle may not be empty");
    for (int x : prefix)
        if (x < 0 || x >= space->size()) throw std::invalid_argument("sequence entry out of range");
    for (int x : cycle)
        if (x < 0 || x >= space->size()) throw std::invalid_argument("sequence entry out of range");
    return FwdSeq{std::move(space), std::move(prefix), std::move(cycle)};
}

SeqCheck seq_check(const FwdSeq& s) {
    bool fwd = true;
    for (int u : s.cycle)
        for (int w : s.cycle)
            if (!s.space->d(u, w).is_zero()) fwd = false;
    return SeqCheck{fwd, make_filter(s.space, s.cycle)};
}

std::optional<FwdSeq> flat_witness_sequence(const PrincipalFilter& f) {
    const auto& sp = *f.space;
    for (int y : f.base) {
        bool hits_all = true;
        for (int x : f.base)
            if (!sp.d(x, y).is_zero()) {
                hits_all = false;
                break;
            }
        if (!hits_all) continue;
        FwdSeq seq{f.space, {}, {y}};
        const PrincipalFilter sf = seq_check(seq).filter;
        if (!filter_leq(f, sf) || !filter_leq(sf, f))
            throw std::logic_error("flat witness sequence is not isomorphic to the filter");
        return seq;
    }
    return std::nullopt;
}

}  // namespace flatcomp
