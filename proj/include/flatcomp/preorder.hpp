#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "flatcomp/cost.hpp"
#include "flatcomp/space.hpp"

namespace flatcomp {

/// A reflexive transitive relation on a finite object list. Antisymmetry is
/// not required: objects may be mutually below one another.
struct Preorder {
    std::vector<std::string> objects;
    std::vector<std::vector<std::uint8_t>> le;

    int size() const { return static_cast<int>(objects.size()); }
    bool leq(int x, int y) const { return le[x][y] != 0; }
    std::optional<int> index_of(std::string_view name) const;
    int require(std::string_view name) const;
};

using PreorderPtr = std::shared_ptr<const Preorder>;

/// Closes the given generating pairs reflexively and transitively.
PreorderPtr validate_preorder(std::vector<std::string> objects,
                              const std::vector<std::pair<std::string, std::string>>& pairs);

/// Closes an arbitrary relation matrix.
PreorderPtr make_preorder(std::vector<std::string> objects,
                          std::vector<std::vector<std::uint8_t>> relation);

/// x -> y iff d(x, y) = 0; a preorder by the space axioms.
PreorderPtr underlying_preorder(const SpacePtr& space);

bool is_downset(const Preorder& p, const std::vector<int>& members);
bool is_upset(const Preorder& p, const std::vector<int>& members);
/// Every pair of members has an upper bound among the members.
bool is_directed(const Preorder& p, const std::vector<int>& members);

std::vector<int> lower_bounds(const Preorder& p, const std::vector<int>& members);
std::vector<int> upper_bounds(const Preorder& p, const std::vector<int>& members);

/// A least upper bound of the set, first in object order, if one exists.
std::optional<int> least_upper_bound(const Preorder& p, const std::vector<int>& members);

struct BoolFlatResult {
    Truth module_ok;  // the member set is a downset, hence a presheaf
    Truth p1;         // module and non-empty
    Truth p2;         // module, non-empty and directed
};

/// Flatness of a subset read as a boolean presheaf.
BoolFlatResult bool_flat_check(const Preorder& p, const std::vector<int>& members);

enum class PreorderCompletionMode { Down, P1, Ideal, Dm };

std::string to_string(PreorderCompletionMode mode);
std::optional<PreorderCompletionMode> preorder_mode_from_string(std::string_view s);

struct Cut {
    std::vector<int> lower;
    std::vector<int> upper;
};

/// A completion of a preorder, with one point per selected subset; points
/// are listed in subset order and compared by inclusion of their member
/// sets (of their lower sets, for cuts).
struct CompletedPreorder {
    PreorderCompletionMode mode;
    PreorderPtr base;
    std::vector<std::vector<int>> points;
    PreorderPtr preorder;
    std::vector<Cut> cuts;  // Dm mode only
};

/// down: all downsets; p1: non-empty downsets; ideal: non-empty directed
/// downsets; dm: maximal cuts (lower sets closed under lower-bounds of
/// upper-bounds).
CompletedPreorder complete_preorder(const PreorderPtr& p, PreorderCompletionMode mode);

/// The Dedekind-MacNeille points recovered on the module side: downsets
/// whose canonical conjugate pair is mutually tight. Must agree with the
/// cut construction.
CompletedPreorder dm_via_modules(const PreorderPtr& p);

/// The quotient by mutual comparability, with the induced order;
/// class_of[i], when requested, is the class index of base object i.
PreorderPtr iso_quotient(const PreorderPtr& p, std::vector<int>* class_of = nullptr);

struct MonotoneMap {
    PreorderPtr source;
    PreorderPtr target;
    std::vector<int> assignment;

    int operator()(int x) const { return assignment[x]; }
};

MonotoneMap make_monotone(PreorderPtr source, PreorderPtr target, std::vector<int> assignment);

enum class BoolExtendMode { P1, Ideal };

struct target_lacks_lub : std::runtime_error {
    std::vector<std::string> witness;
    explicit target_lacks_lub(std::vector<std::string> subset)
        : std::runtime_error("target preorder lacks a required least upper bound"),
          witness(std::move(subset)) {}
};

struct PreorderExtension {
    CompletedPreorder completion;  // of the map's source (p1 or ideal points)
    std::vector<int> values;       // per point, an object of the target
};

/// Sends each completion point D to the least upper bound in the target of
/// the image f(D). The target must have lubs of all non-empty sets (p1
/// mode) or of all non-empty directed sets (ideal mode); verified by scan.
PreorderExtension extend_monotone(const MonotoneMap& f, BoolExtendMode mode);

}  // namespace flatcomp
