#pragma once

#include <functional>

#include "flatcomp/module.hpp"
#include "flatcomp/preorder.hpp"
#include "flatcomp/space.hpp"

namespace flatcomp {

/// Parameters for exhaustive instance generation: a cap on the number of
/// objects and a finite sample of cost values that must contain 0 and inf.
struct InstanceGrid {
    int max_objects = 4;
    std::vector<Cost> values;
};

InstanceGrid make_grid(int max_objects, std::vector<Cost> values);

/// {0, 1/2, 1, 2, inf}, up to 4 objects.
InstanceGrid default_grid();

enum class SpaceClass { All, Symmetric, ZeroInf };

/// Streams every space over the grid, from 0 objects up to the cap, in a
/// fixed order: matrices are filled cell by cell in the grid's value order,
/// growing one object at a time, and a candidate is emitted as soon as it
/// satisfies the axioms. Partial assignments that already break a triangle
/// are pruned. Object names are a, b, c, ...
void enumerate_spaces(const InstanceGrid& grid, SpaceClass cls,
                      const std::function<void(const SpacePtr&)>& yield);

/// Every value assignment over the grid satisfying the one-sided module
/// inequality, in value order.
void enumerate_left_modules(const SpacePtr& space, const std::vector<Cost>& values,
                            const std::function<void(const LeftModule&)>& yield);
void enumerate_right_modules(const SpacePtr& space, const std::vector<Cost>& values,
                             const std::function<void(const RightModule&)>& yield);

/// All distinct preorders with up to max_objects objects: every relation
/// matrix, closed and deduplicated, in matrix order. Object names x, y, z, w, v.
std::vector<PreorderPtr> enumerate_preorders(int max_objects);

}  // namespace flatcomp
