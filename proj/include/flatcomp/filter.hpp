#pragma once

#include "flatcomp/module.hpp"

namespace flatcomp {

/// A filter on a finite carrier, represented by its minimal member: the
/// filter is the up-closure of `base` in the powerset. Every filter on a
/// finite set is of this shape, so the representation is lossless.
struct PrincipalFilter {
    SpacePtr space;
    std::vector<int> base;  // sorted, distinct, non-empty

    friend bool operator==(const PrincipalFilter&, const PrincipalFilter&);
};

/// Sorts and deduplicates; throws on an empty base or out-of-range index.
PrincipalFilter make_filter(SpacePtr space, std::vector<int> base);
PrincipalFilter make_filter(const SpacePtr& space, const std::vector<std::string>& names);

/// M-(F)(x) = meet over the base of d(x, -); M+(F)(x) = join.
LeftModule m_minus(const PrincipalFilter& f);
LeftModule m_plus(const PrincipalFilter& f);

/// Column-wise duals d(-, x); both coincide when F is Cauchy.
RightModule m_r_minus(const PrincipalFilter& f);
RightModule m_r_plus(const PrincipalFilter& f);

/// The filter generated by M's sublevel sets: the up-closure of the zero
/// set Z(M), defined when M's values meet to 0; none otherwise.
std::optional<PrincipalFilter> gamma(const LeftModule& m);

struct Classification {
    Truth cauchy;
    Truth flat;
    Truth weakly_flat;
};

/// cauchy: all base pairs at distance 0; flat: one base member at distance 0
/// from every base member; weakly_flat: always true on a finite carrier
/// (each member witnesses itself). Monotone: cauchy => flat => weakly flat.
Classification classify(const PrincipalFilter& f);

/// The up-closure of the zero set of M-(F). Idempotent, contains the base,
/// and leaves M- unchanged.
PrincipalFilter closure(const PrincipalFilter& f);

/// The morphism relation F1 -> F2 of weakly flat filters: equivalent to
/// filter_distance(F1, F2) = 0 and to base(F1) being contained in the
/// closure of F2. Both routes are computed and compared.
Truth filter_leq(const PrincipalFilter& f1, const PrincipalFilter& f2);

/// join over x in base(F1) of meet over y in base(F2) of d(x, y);
/// equal to hom_presheaf(M-(F1), M-(F2)), which is asserted.
Cost filter_distance(const PrincipalFilter& f1, const PrincipalFilter& f2);

/// An object realizing the filter's colimit: d(x0, a) = join over the base
/// of d(-, a) for every a. First such object in object order, if any.
std::optional<int> representative(const PrincipalFilter& f);

/// The up-closure of {y | d(y, x) = 0}.
PrincipalFilter neighborhood(const SpacePtr& space, int x);

/// F contains the neighborhood filter of x; equivalently
/// hom(M-(F), yoneda(x)) = 0. Both routes computed and compared.
Truth converges(const PrincipalFilter& f, int x);

/// The up-closure of the image of the base.
PrincipalFilter direct_image(const NonexpansiveMap& g, const PrincipalFilter& f);

/// The eventually periodic sequence prefix . cycle^omega.
struct FwdSeq {
    SpacePtr space;
    std::vector<int> prefix;
    std::vector<int> cycle;  // non-empty
};

FwdSeq make_seq(SpacePtr space, std::vector<int> prefix, std::vector<int> cycle);

struct SeqCheck {
    Truth forward_cauchy;
    PrincipalFilter filter;
};

/// forward_cauchy holds iff every ordered pair of cycle elements is at
/// distance 0 (each such pair recurs at unbounded index gaps); the
/// associated filter is the up-closure of the cycle set.
SeqCheck seq_check(const FwdSeq& s);

/// For a flat filter: the constant sequence at a base member at distance 0
/// from the whole base, whose filter is mutually filter_leq-related to F
/// (asserted). None when F is not flat.
std::optional<FwdSeq> flat_witness_sequence(const PrincipalFilter& f);

}  // namespace flatcomp
