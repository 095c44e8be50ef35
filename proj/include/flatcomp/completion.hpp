#pragma once

#include "flatcomp/filter.hpp"

namespace flatcomp {

enum class CompletionMode { Cauchy, P1, P2 };

std::string to_string(CompletionMode mode);
std::optional<CompletionMode> completion_mode_from_string(std::string_view s);

/// Thrown by extend when the codomain fails the completeness precondition;
/// carries the base of a filter of the required class with no representative.
struct target_not_complete : std::runtime_error {
    std::vector<std::string> witness;
    explicit target_not_complete(std::vector<std::string> base)
        : std::runtime_error("target space is not complete for the requested mode"),
          witness(std::move(base)) {}
};

/// A space of closed filters over a base space. Points are the canonical
/// (closed) representatives of their isomorphism class, listed in subset
/// order of their bases; distances are filter distances. The point space
/// satisfies the metric axioms and distinct points are never mutually at
/// distance 0.
struct CompletedSpace {
    CompletionMode mode;
    SpacePtr base_space;
    std::vector<PrincipalFilter> points;
    SpacePtr space;

    /// Index of the given closed filter among the points, if present.
    std::optional<int> index_of_point(const PrincipalFilter& f) const;
};

/// All closed filters whose classification meets the mode: Cauchy filters,
/// every filter (weakly flat), or flat filters. The empty space yields the
/// empty completion.
CompletedSpace complete(const SpacePtr& space, CompletionMode mode);

/// a |-> closure of the point filter at a, as a map into the completion.
/// Distance-preserving in both directions (asserted). For mode Cauchy this
/// is only defined when each closure is itself Cauchy (always true on
/// symmetric spaces); otherwise throws std::invalid_argument.
NonexpansiveMap embed(const CompletedSpace& completion);
NonexpansiveMap embed(const SpacePtr& space, CompletionMode mode);

/// Whether every filter of the mode's class admits a representative.
Truth is_complete(const SpacePtr& space, CompletionMode mode);

struct Extension {
    CompletedSpace completion;   // of the map's source
    std::vector<int> values;     // per point, an object index of the target
};

/// The universal extension: each point filter goes to the representative of
/// its direct image. Requires the target to be complete for the mode.
Extension extend(const NonexpansiveMap& f, CompletionMode mode);

}  // namespace flatcomp
