#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>

namespace flatcomp {

/// Raised when a textual value or document cannot be read.
struct parse_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// An extended non-negative rational: either a canonical fraction p/q
/// (gcd(p,q) = 1, q >= 1) or infinity, encoded as den == 0.
///
/// The value doubles as an object of the cost quantale: tensor is addition
/// with absorbing infinity, the internal hom is truncated subtraction, and
/// the categorical arrow x -> y is the numeric relation x >= y.
struct Cost {
    std::int64_t num = 0;
    std::int64_t den = 1;

    static Cost fin(std::int64_t p, std::int64_t q = 1);
    static Cost inf() { return Cost{1, 0}; }
    static Cost zero() { return Cost{0, 1}; }

    bool is_inf() const { return den == 0; }
    bool is_zero() const { return num == 0 && den == 1; }

    friend bool operator==(const Cost&, const Cost&) = default;
    // Numeric order; infinity is the greatest element.
    friend std::strong_ordering operator<=>(const Cost& a, const Cost& b);
};

/// x + y, with inf + x = x + inf = inf. Commutative, unit 0.
Cost cost_tensor(Cost x, Cost y);

/// Internal hom [x, y] = max(y - x, 0); [inf, y] = 0, [x, inf] = inf for
/// finite x. Adjoint to tensor: x + z >= y iff z >= [x, y].
Cost cost_hom(Cost x, Cost y);

/// Minimum under the numeric order; the empty meet is inf.
Cost cost_meet(std::span<const Cost> xs);
/// Maximum under the numeric order; the empty join is 0.
Cost cost_join(std::span<const Cost> xs);

inline Cost cost_min(Cost a, Cost b) { return a <= b ? a : b; }
inline Cost cost_max(Cost a, Cost b) { return a >= b ? a : b; }

/// Renders "p", "p/q" or "inf".
std::string to_string(const Cost& c);

/// Accepts "p", "p/q" (not necessarily in lowest terms) or "inf";
/// rejects negatives, zero denominators and malformed text.
Cost parse_cost(std::string_view text);

/// Truth values 0 <= 1, the objects of the boolean quantale.
using Truth = bool;

struct TruthOps {
    Truth tensor;
    Truth hom;
};

/// Tensor is logical and, hom is implication x => y.
inline TruthOps truth_ops(Truth x, Truth y) {
    return TruthOps{static_cast<Truth>(x && y), static_cast<Truth>(!x || y)};
}

}  // namespace flatcomp
