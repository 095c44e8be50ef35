#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "flatcomp/cost.hpp"

namespace flatcomp {

struct space_mismatch : std::runtime_error {
    space_mismatch() : std::runtime_error("operands live over different spaces") {}
};

struct unknown_object : std::runtime_error {
    explicit unknown_object(const std::string& name)
        : std::runtime_error("unknown object \"" + name + "\"") {}
};

/// A finite generalized metric space: distances need not be symmetric or
/// separated, but every self-distance is 0 and the triangle law
/// d(y,z) + d(x,y) >= d(x,z) holds. May be empty.
struct QuasiMetricSpace {
    std::vector<std::string> objects;
    std::vector<std::vector<Cost>> dist;

    int size() const { return static_cast<int>(objects.size()); }
    const Cost& d(int x, int y) const { return dist[x][y]; }
    std::optional<int> index_of(std::string_view name) const;
    int require(std::string_view name) const;
};

using SpacePtr = std::shared_ptr<const QuasiMetricSpace>;

struct AxiomViolation {
    enum class Kind { ZeroDiagonal, Triangle };
    Kind kind;
    int x = -1, y = -1, z = -1;
    Cost d_xz, d_xy, d_yz;  // for ZeroDiagonal only d_xz (= d(x,x)) is set
};

struct SpaceValidation {
    SpacePtr space;  // null unless valid
    std::vector<AxiomViolation> violations;
    bool ok() const { return space != nullptr; }
};

/// Checks both axioms on every instance and reports each violation with its
/// witnessing objects. The matrix must be square over the object list.
SpaceValidation validate_space(std::vector<std::string> objects,
                               std::vector<std::vector<Cost>> dist);

/// validate_space that throws on the first violation; for matrices known to
/// be lawful by construction.
SpacePtr make_space(std::vector<std::string> objects, std::vector<std::vector<Cost>> dist);

bool same_space(const SpacePtr& a, const SpacePtr& b);
bool is_symmetric(const QuasiMetricSpace& a);

/// A distance-nonincreasing map between spaces; assignment[i] is the target
/// index of source object i.
struct NonexpansiveMap {
    SpacePtr source;
    SpacePtr target;
    std::vector<int> assignment;

    int operator()(int x) const { return assignment[x]; }
};

/// Throws std::invalid_argument if the assignment expands some distance.
NonexpansiveMap make_nonexpansive(SpacePtr source, SpacePtr target, std::vector<int> assignment);

NonexpansiveMap identity_map(const SpacePtr& space);

}  // namespace flatcomp
