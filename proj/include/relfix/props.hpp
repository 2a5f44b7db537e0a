#pragma once

#include <optional>
#include <string_view>
#include <vector>

#include "relfix/core.hpp"

namespace relfix {

// Closed catalog of relation properties. Compound tags are conjunctions of
// the atomic ones, so classify() is closed under the entailment edges by
// construction.
enum class Prop {
  reflexive,
  irreflexive,
  transitive,
  antisymmetric,
  symmetric,
  asymmetric,
  connex,
  semiattractive,
  attractive,
  well_related,
  well_founded_strict,
  pseudo_order,
  quasi_order,
  partial_order,
  near_order,
  strict_order,
  tolerance,
  equivalence,
  partial_equivalence,
  well_ordered,
};

inline constexpr Prop kAllProps[] = {
    Prop::reflexive,       Prop::irreflexive,       Prop::transitive,
    Prop::antisymmetric,   Prop::symmetric,         Prop::asymmetric,
    Prop::connex,          Prop::semiattractive,    Prop::attractive,
    Prop::well_related,    Prop::well_founded_strict, Prop::pseudo_order,
    Prop::quasi_order,     Prop::partial_order,     Prop::near_order,
    Prop::strict_order,    Prop::tolerance,         Prop::equivalence,
    Prop::partial_equivalence, Prop::well_ordered,
};

enum class MapCond {
  monotone,
  inflationary,
  inflationary_variant,
  pointwise_infl_or_mono,
  omega_continuous,
  scott_continuous,
};

inline constexpr MapCond kAllMapConds[] = {
    MapCond::monotone,          MapCond::inflationary,
    MapCond::inflationary_variant, MapCond::pointwise_infl_or_mono,
    MapCond::omega_continuous,  MapCond::scott_continuous,
};

// Verdict plus a re-checkable counterexample when the verdict is false:
// up to three element indices and/or one subset exhibiting the violated
// clause, smallest in lexicographic scan order.
struct Witness {
  bool holds = true;
  std::vector<int> elems;
  std::optional<ElemSet> subset;

  explicit operator bool() const { return holds; }

  static Witness yes() { return {}; }
  static Witness no(std::vector<int> es,
                    std::optional<ElemSet> sub = std::nullopt) {
    return Witness{false, std::move(es), sub};
  }
};

Witness check_property(const RelatedSet& rel, Prop p);
Witness check_map_condition(const RelatedSet& rel, const EndoMap& f, MapCond c);

// Exactly the tags whose checker holds.
std::vector<Prop> classify(const RelatedSet& rel);

struct EntailmentEdge {
  std::vector<Prop> premises;
  Prop conclusion;
};

// Static entailment table (the sublocale arrows), used by the theorem suite.
const std::vector<EntailmentEdge>& entailment_edges();

std::string_view to_string(Prop p);
std::string_view to_string(MapCond c);
std::optional<Prop> prop_from_string(std::string_view s);
std::optional<MapCond> map_cond_from_string(std::string_view s);

// Domain-restricted primitive predicates, shared with the classes module.
bool reflexive_on(const RelatedSet& rel, ElemSet domain);
bool connex_on(const RelatedSet& rel, ElemSet domain);
bool directed_on(const RelatedSet& rel, ElemSet domain);
// Greedy least-extraction; equivalent to the exhaustive subset definition
// on finite carriers (the first extracted element of any subset is its
// least). O(n^3) instead of 2^n.
bool well_related_on(const RelatedSet& rel, ElemSet domain);
bool antisymmetric_on(const RelatedSet& rel, ElemSet domain);
// Repeated minimal-element removal on the strict part.
bool well_founded_strict_on(const RelatedSet& rel, ElemSet domain);

}  // namespace relfix
