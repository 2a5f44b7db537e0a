#include "relfix/classes.hpp"

#include <unordered_map>

#include "relfix/bounds.hpp"

namespace relfix {

namespace {

bool omega_range_rec(const RelatedSet& rel, ElemSet x,
                     std::unordered_map<ElemSet, bool>& memo) {
  if (x == 0) return true;
  auto it = memo.find(x);
  if (it != memo.end()) return it->second;
  bool ok = false;
  for (ElemSet s = x; s && !ok;) {
    int e = lowest_bit(s);
    s &= s - 1;
    if ((rel.rows[e] & x) == x) ok = omega_range_rec(rel, x & ~bit(e), memo);
  }
  memo.emplace(x, ok);
  return ok;
}

}  // namespace

bool is_in_class(const RelatedSet& rel, ElemSet x, SubsetClass cls) {
  switch (cls) {
    case SubsetClass::All:
      return true;
    case SubsetClass::Connex:
      return connex_on(rel, x);
    case SubsetClass::Directed:
      return directed_on(rel, x);  // the empty set counts as directed
    case SubsetClass::WellRelated:
      return well_related_on(rel, x);
    case SubsetClass::OmegaRange: {
      if (x == 0) return false;  // ranges of maps from N are nonempty
      std::unordered_map<ElemSet, bool> memo;
      return omega_range_rec(rel, x, memo);
    }
  }
  return false;
}

std::vector<ElemSet> subsets_in_class(const RelatedSet& rel, SubsetClass cls) {
  std::vector<ElemSet> out;
  ElemSet full = rel.full();
  for (ElemSet s = 0;; ++s) {
    if (is_in_class(rel, s, cls)) out.push_back(s);
    if (s == full) break;
  }
  return out;
}

Witness check_complete(const RelatedSet& rel, SubsetClass cls) {
  ElemSet full = rel.full();
  for (ElemSet s = 0;; ++s) {
    if (is_in_class(rel, s, cls) && extreme_bounds(rel, s) == 0)
      return Witness::no({}, s);
    if (s == full) break;
  }
  return Witness::yes();
}

bool set_le(const RelatedSet& rel, ElemSet x, ElemSet y) {
  for (ElemSet s = x; s;) {
    int i = lowest_bit(s);
    s &= s - 1;
    if ((rel.rows[i] & y) != y) return false;
  }
  return true;
}

std::string_view to_string(SubsetClass cls) {
  switch (cls) {
    case SubsetClass::All: return "all";
    case SubsetClass::Connex: return "connex";
    case SubsetClass::Directed: return "directed";
    case SubsetClass::WellRelated: return "well";
    case SubsetClass::OmegaRange: return "omega";
  }
  return "?";
}

std::optional<SubsetClass> class_from_string(std::string_view s) {
  for (SubsetClass c : kAllClasses)
    if (to_string(c) == s) return c;
  return std::nullopt;
}

}  // namespace relfix
