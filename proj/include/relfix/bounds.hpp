#pragma once

#include "relfix/core.hpp"

namespace relfix {

// All operations here are set-valued: without antisymmetry, greatest
// elements and suprema need not be unique. Any selection policy (least
// index) lives in the engines, not here.

enum class Side { greatest, least };

// { b in A | forall x in X. x <= b }; the empty set is bounded by everything.
ElemSet bounds_of(const RelatedSet& rel, ElemSet x);

// Elements e of X with forall x in X. x <= e (greatest) or e <= x (least).
// Note e <= e is required by the quantifier; no reflexivity is assumed.
ElemSet extremes_of(const RelatedSet& rel, ElemSet x, Side side);

// Suprema of X: least elements of the bound set. Infima are suprema in the
// dual relation.
ElemSet extreme_bounds(const RelatedSet& rel, ElemSet x);

}  // namespace relfix
