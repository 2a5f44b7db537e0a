#pragma once

#include <optional>
#include <vector>

#include "relfix/classes.hpp"
#include "relfix/core.hpp"
#include "relfix/props.hpp"

namespace relfix {

// Every engine re-validates its defining predicate (qfp / strict fp /
// leastness) by brute force before returning; a failed validation on a
// hypothesis-satisfying input raises InternalFailure.
//
// strict = true makes engines check their stated preconditions up front
// (PreconditionViolation on failure); the search module disables this to
// vary hypotheses deliberately.

// A finite derivation: positions are strictly increasing under the strict
// part of the relation; each element is either f of the greatest element of
// its prefix (successor) or a supremum of an f-closed prefix (limit).
struct Derivation {
  struct Step {
    enum Kind { successor, limit } kind = limit;
    int pred = -1;  // predecessor index for successor steps
  };
  std::vector<int> seq;
  std::vector<Step> kinds;
};

// Quotient of the carrier by (~ u =), the similarity-or-equality classes.
struct Quotient {
  RelatedSet qset;                 // classes under the set-to-set extension
  std::vector<ElemSet> members;    // members[c] = elements of class c
  std::vector<int> class_of;       // carrier index -> class id
  std::optional<EndoMap> qmap;     // quotient of f, when f was supplied
};

// Membership test for the family of f-closed, ambient-sup-closed subsets.
bool sm_closed(const RelatedSet& rel, const EndoMap& f, ElemSet b);

// Least member of that family, by closure iteration from the empty set.
ElemSet sm_core_set(const RelatedSet& rel, const EndoMap& f);

// Quasi-fixed point as a least-index supremum of the core set.
// pre (strict): All-complete and pointwise_infl_or_mono.
int sm_qfp(const RelatedSet& rel, const EndoMap& f, bool strict = true);

Witness check_derivation(const RelatedSet& rel, const EndoMap& f,
                         const Derivation& d);

// Maximal derivation: limit step (append the least-index supremum of an
// f-closed prefix) preferred over successor step (append f of the greatest
// prefix element); stops when neither applies.
// pre (strict): antisymmetric, well-complete. The derivation_infl /
// derivation_f_refl conditions are checked incrementally on the prefix.
Derivation build_derivable(const RelatedSet& rel, const EndoMap& f,
                           bool strict = true);

// Strict fixed point as the supremum of the derivable set.
// pre (strict): as build_derivable, plus (pseudo-order + inflationary
// variant) or (antisymmetric + monotone).
int derivation_fp(const RelatedSet& rel, const EndoMap& f, bool strict = true);

// Least strict fixed point of a monotone map.
// pre (strict): antisymmetric, well-complete, monotone.
int least_fp_mono(const RelatedSet& rel, const EndoMap& f, bool strict = true);

// pre (strict): attractive; monotone when f is supplied.
Quotient build_quotient(const RelatedSet& rel, const EndoMap* f = nullptr,
                        bool strict = true);

// Least quasi-fixed point via the quotient construction.
// pre (strict): attractive, well-complete, monotone.
int least_qfp_attractive(const RelatedSet& rel, const EndoMap& f,
                         bool strict = true);

// Supremum of X within the related set (qfps u P, <=), computed by
// restricting to the bound set of X and running least_qfp_attractive there.
int qfp_sup_in_class(const RelatedSet& rel, const EndoMap& f, SubsetClass cls,
                     ElemSet x, ElemSet p, bool strict = true);

// Exhaustively checks that (qfps u P) is cls-complete.
Witness verify_qfp_complete(const RelatedSet& rel, const EndoMap& f,
                            SubsetClass cls, ElemSet p, bool strict = true);

// { b | forall x. b <= x }; members are pairwise similar.
ElemSet bottoms(const RelatedSet& rel);

// { f^n(bot) | n >= 0 }, by iteration with cycle detection.
ElemSet kleene_iterates(const RelatedSet& rel, const EndoMap& f, int bot);

// Suprema of the iterate set; each member is validated as a qfp.
// pre (strict): omega-complete, omega-continuous, bot a bottom.
ElemSet kleene_qfps(const RelatedSet& rel, const EndoMap& f, int bot,
                    bool strict = true);

// True iff the suprema of the iterate set are exactly the least qfps.
// pre (strict): additionally attractive.
Witness kleene_least_equivalence(const RelatedSet& rel, const EndoMap& f,
                                 int bot, bool strict = true);

// Brute-force helpers shared with search and validation.
ElemSet strict_fixed_points(const RelatedSet& rel, const EndoMap& f);
ElemSet quasi_fixed_points(const RelatedSet& rel, const EndoMap& f);

}  // namespace relfix
