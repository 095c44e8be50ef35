#pragma once

#include <optional>
#include <span>

#include "flatcomp/space.hpp"

namespace flatcomp {

/// A presheaf on a space: a cost per object with
/// values[y] + d(x,y) >= values[x] for all x, y. The categorical arrow
/// M => N is the pointwise numeric relation M(x) >= N(x).
struct LeftModule {
    SpacePtr space;
    std::vector<Cost> values;
};

/// The covariant dual: d(x,y) + values[x] >= values[y].
struct RightModule {
    SpacePtr space;
    std::vector<Cost> values;
};

bool is_left_module(const QuasiMetricSpace& space, std::span<const Cost> values);
bool is_right_module(const QuasiMetricSpace& space, std::span<const Cost> values);

LeftModule make_left_module(SpacePtr space, std::vector<Cost> values);
RightModule make_right_module(SpacePtr space, std::vector<Cost> values);

/// Presheaf hom [A^op, V](M, N) = join_x [M(x), N(x)]; 0 on the empty space.
/// The arrow M => N holds exactly when the result is 0.
Cost hom_presheaf(const LeftModule& m, const LeftModule& n);

/// Composite N * M = meet_x (M(x) + N(x)); inf on the empty space.
Cost compose_modules(const RightModule& n, const LeftModule& m);

/// Representable presheaf x |-> d(x, a).
LeftModule yoneda(const SpacePtr& space, int a);
/// Co-representable x |-> d(a, x).
RightModule co_yoneda(const SpacePtr& space, int a);

/// Decides whether M is a left adjoint module. The only possible right
/// adjoint is N(x) = hom_presheaf(M, yoneda(x)): evaluating the adjunction
/// at representables forces this candidate, so it alone is tested against
/// the unit and counit conditions. Absence is a regular outcome.
std::optional<RightModule> right_adjoint_check(const LeftModule& m);

/// Pointwise left Kan extension along G:
/// lan(b) = meet_x (M(x) + d_B(b, G x)).
LeftModule lan(const NonexpansiveMap& g, const LeftModule& m);

/// An object b of the target with d_B(b, c) = hom(M, d_B(G -, c)) for every
/// c, if one exists. Witnesses are unique up to isomorphism; the first in
/// object order is returned.
std::optional<int> weighted_colimit(const LeftModule& m, const NonexpansiveMap& g);

/// Finite decision procedure: M is flat for the one-point-or-empty index
/// class iff its values meet to 0 and M(x) = meet over the zero set Z(M) of
/// d(x, -) for every x.
Truth is_p1_flat(const LeftModule& m);

/// Finite-index flatness: p1-flat plus a single member of Z(M) at distance 0
/// from every member of Z(M).
Truth is_p2_flat(const LeftModule& m);

/// A failed flatness equation, with both side values.
struct FlatCounterexample {
    enum class Condition { FiniteLimits, Cotensor };
    Condition condition;
    int member = -1;  // index into the family, Cotensor only
    Cost v;           // Cotensor only
    Cost lhs, rhs;
};

/// Evaluates the finite-limit preservation equation on the given family and
/// the cotensor equation on (v, N) for each family member N; returns the
/// first inequality found. Cross-validates the closed-form flatness tests.
std::optional<FlatCounterexample> falsify_flat_conditions(const LeftModule& m, Cost v,
                                                          std::span<const RightModule> family);

}  // namespace flatcomp
