#pragma once

#include <string_view>
#include <vector>

#include "relfix/core.hpp"
#include "relfix/props.hpp"

namespace relfix {

// Completeness classes C of subsets. Membership is decidable per subset.
enum class SubsetClass { All, Connex, Directed, WellRelated, OmegaRange };

inline constexpr SubsetClass kAllClasses[] = {
    SubsetClass::All, SubsetClass::Connex, SubsetClass::Directed,
    SubsetClass::WellRelated, SubsetClass::OmegaRange,
};

std::string_view to_string(SubsetClass cls);
std::optional<SubsetClass> class_from_string(std::string_view s);

// OmegaRange: X is the range of an eventually-repeating monotone sequence
// from (N,<=) iff X is nonempty and admits an ordering x1..xk with
// xi <= xj for all i <= j (including i = j); decided by recursive
// first-element extraction with memoization.
bool is_in_class(const RelatedSet& rel, ElemSet x, SubsetClass cls);

// Subsets passing is_in_class, in ascending bitmask order.
std::vector<ElemSet> subsets_in_class(const RelatedSet& rel, SubsetClass cls);

// True iff every subset in the class has at least one supremum; a false
// verdict carries the witness subset.
Witness check_complete(const RelatedSet& rel, SubsetClass cls);

// Set-to-set extension of the relation: forall x in X, y in Y. x <= y.
bool set_le(const RelatedSet& rel, ElemSet x, ElemSet y);

}  // namespace relfix
