#include "relfix/props.hpp"

#include "relfix/bounds.hpp"
#include "relfix/classes.hpp"

namespace relfix {

namespace {

// Iterate set bits ascending.
template <typename F>
void for_each(ElemSet s, F&& f) {
  while (s) {
    int i = lowest_bit(s);
    s &= s - 1;
    f(i);
  }
}

Witness forall_x(const RelatedSet& rel, bool (*pred)(const RelatedSet&, int)) {
  for (int x = 0; x < rel.size(); ++x)
    if (!pred(rel, x)) return Witness::no({x});
  return Witness::yes();
}

Witness forall_xy(const RelatedSet& rel,
                  bool (*pred)(const RelatedSet&, int, int)) {
  for (int x = 0; x < rel.size(); ++x)
    for (int y = 0; y < rel.size(); ++y)
      if (!pred(rel, x, y)) return Witness::no({x, y});
  return Witness::yes();
}

Witness forall_xyz(const RelatedSet& rel,
                   bool (*pred)(const RelatedSet&, int, int, int)) {
  for (int x = 0; x < rel.size(); ++x)
    for (int y = 0; y < rel.size(); ++y)
      for (int z = 0; z < rel.size(); ++z)
        if (!pred(rel, x, y, z)) return Witness::no({x, y, z});
  return Witness::yes();
}

Witness conj(const RelatedSet& rel, std::initializer_list<Prop> parts) {
  for (Prop p : parts) {
    Witness w = check_property(rel, p);
    if (!w) return w;
  }
  return Witness::yes();
}

// First subset (ascending bitmask order) of `domain` violating `bad`.
template <typename Bad>
std::optional<ElemSet> first_bad_subset(ElemSet domain, Bad&& bad) {
  // iterate subsets of domain in ascending numeric order
  for (ElemSet s = 0;;) {
    if (bad(s)) return s;
    if (s == domain) break;
    s = (s - domain) & domain;  // next subset of domain
  }
  return std::nullopt;
}

}  // namespace

bool reflexive_on(const RelatedSet& rel, ElemSet domain) {
  bool ok = true;
  for_each(domain, [&](int x) { ok = ok && rel.le(x, x); });
  return ok;
}

bool connex_on(const RelatedSet& rel, ElemSet domain) {
  bool ok = true;
  for_each(domain, [&](int x) {
    for_each(domain, [&](int y) { ok = ok && (rel.le(x, y) || rel.le(y, x)); });
  });
  return ok;
}

bool directed_on(const RelatedSet& rel, ElemSet domain) {
  bool ok = true;
  for_each(domain, [&](int x) {
    for_each(domain, [&](int y) {
      bool found = false;
      for_each(domain, [&](int z) {
        found = found || (rel.le(x, z) && rel.le(y, z));
      });
      ok = ok && found;
    });
  });
  return ok;
}

bool well_related_on(const RelatedSet& rel, ElemSet domain) {
  ElemSet rest = domain;
  while (rest) {
    int least = -1;
    for (ElemSet s = rest; s;) {
      int e = lowest_bit(s);
      s &= s - 1;
      if ((rel.rows[e] & rest) == rest) {
        least = e;
        break;
      }
    }
    if (least < 0) return false;
    rest &= ~bit(least);
  }
  return true;
}

bool antisymmetric_on(const RelatedSet& rel, ElemSet domain) {
  bool ok = true;
  for_each(domain, [&](int x) {
    for_each(domain, [&](int y) {
      ok = ok && !(x != y && rel.sim(x, y));
    });
  });
  return ok;
}

bool well_founded_strict_on(const RelatedSet& rel, ElemSet domain) {
  ElemSet rest = domain;
  while (rest) {
    ElemSet minimal = 0;
    for_each(rest, [&](int x) {
      bool has_below = false;
      for_each(rest, [&](int y) { has_below = has_below || rel.lt(y, x); });
      if (!has_below) minimal |= bit(x);
    });
    if (!minimal) return false;
    rest &= ~minimal;
  }
  return true;
}

Witness check_property(const RelatedSet& rel, Prop p) {
  switch (p) {
    case Prop::reflexive:
      return forall_x(rel, [](const RelatedSet& r, int x) { return r.le(x, x); });
    case Prop::irreflexive:
      return forall_x(rel, [](const RelatedSet& r, int x) { return !r.le(x, x); });
    case Prop::transitive:
      return forall_xyz(rel, [](const RelatedSet& r, int x, int y, int z) {
        return !(r.le(x, y) && r.le(y, z)) || r.le(x, z);
      });
    case Prop::antisymmetric:
      return forall_xy(rel, [](const RelatedSet& r, int x, int y) {
        return !(r.sim(x, y) && x != y);
      });
    case Prop::symmetric:
      return forall_xy(rel, [](const RelatedSet& r, int x, int y) {
        return !r.le(x, y) || r.le(y, x);
      });
    case Prop::asymmetric:
      return forall_xy(rel, [](const RelatedSet& r, int x, int y) {
        return !(r.le(x, y) && r.le(y, x));
      });
    case Prop::connex:
      return forall_xy(rel, [](const RelatedSet& r, int x, int y) {
        return r.le(x, y) || r.le(y, x);
      });
    case Prop::semiattractive:
      return forall_xyz(rel, [](const RelatedSet& r, int x, int y, int z) {
        return !(r.sim(x, y) && r.le(y, z)) || r.le(x, z);
      });
    case Prop::attractive: {
      Witness w = check_property(rel, Prop::semiattractive);
      if (!w) return w;
      return check_property(derived_relation(rel, RelationView::dual),
                            Prop::semiattractive);
    }
    case Prop::well_related: {
      if (well_related_on(rel, rel.full())) return Witness::yes();
      auto bad = first_bad_subset(rel.full(), [&](ElemSet s) {
        return s != 0 && extremes_of(rel, s, Side::least) == 0;
      });
      return Witness::no({}, bad);
    }
    case Prop::well_founded_strict: {
      if (well_founded_strict_on(rel, rel.full())) return Witness::yes();
      auto bad = first_bad_subset(rel.full(), [&](ElemSet s) {
        if (s == 0) return false;
        bool has_minimal = false;
        for_each(s, [&](int x) {
          bool below = false;
          for_each(s, [&](int y) { below = below || rel.lt(y, x); });
          has_minimal = has_minimal || !below;
        });
        return !has_minimal;
      });
      return Witness::no({}, bad);
    }
    case Prop::pseudo_order:
      return conj(rel, {Prop::reflexive, Prop::antisymmetric});
    case Prop::quasi_order:
      return conj(rel, {Prop::reflexive, Prop::transitive});
    case Prop::partial_order:
      return conj(rel, {Prop::reflexive, Prop::transitive, Prop::antisymmetric});
    case Prop::near_order:
      return conj(rel, {Prop::transitive, Prop::antisymmetric});
    case Prop::strict_order:
      return conj(rel, {Prop::irreflexive, Prop::transitive});
    case Prop::tolerance:
      return conj(rel, {Prop::reflexive, Prop::symmetric});
    case Prop::equivalence:
      return conj(rel, {Prop::reflexive, Prop::symmetric, Prop::transitive});
    case Prop::partial_equivalence:
      return conj(rel, {Prop::symmetric, Prop::transitive});
    case Prop::well_ordered:
      return conj(rel, {Prop::antisymmetric, Prop::well_related});
  }
  throw ModelError("unknown property tag");
}

Witness check_map_condition(const RelatedSet& rel, const EndoMap& f,
                            MapCond c) {
  int n = rel.size();
  switch (c) {
    case MapCond::monotone:
      for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
          if (rel.le(x, y) && !rel.le(f(x), f(y))) return Witness::no({x, y});
      return Witness::yes();
    case MapCond::inflationary:
      for (int x = 0; x < n; ++x)
        if (!rel.le(x, f(x))) return Witness::no({x});
      return Witness::yes();
    case MapCond::inflationary_variant:
      for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
          if (rel.le(x, y) && !rel.le(x, f(y))) return Witness::no({x, y});
      return Witness::yes();
    case MapCond::pointwise_infl_or_mono:
      for (int x = 0; x < n; ++x) {
        if (rel.le(x, f(x))) continue;
        for (int y = 0; y < n; ++y)
          if (rel.le(y, x) && !rel.le(f(y), f(x))) return Witness::no({x, y});
      }
      return Witness::yes();
    case MapCond::omega_continuous: {
      for (ElemSet x = 1; x <= rel.full() && n > 0; ++x) {
        if (!is_in_class(rel, x, SubsetClass::OmegaRange)) continue;
        ElemSet sups = extreme_bounds(rel, x);
        ElemSet fsups = extreme_bounds(rel, image(f, x));
        for (ElemSet s = sups; s;) {
          int e = lowest_bit(s);
          s &= s - 1;
          if (!(fsups & bit(f(e)))) return Witness::no({e}, x);
        }
      }
      return Witness::yes();
    }
    case MapCond::scott_continuous: {
      for (ElemSet x = 1; x <= rel.full() && n > 0; ++x) {
        if (!directed_on(rel, x)) continue;
        ElemSet sups = extreme_bounds(rel, x);
        ElemSet fsups = extreme_bounds(rel, image(f, x));
        for (ElemSet s = sups; s;) {
          int e = lowest_bit(s);
          s &= s - 1;
          if (!(fsups & bit(f(e)))) return Witness::no({e}, x);
        }
      }
      return Witness::yes();
    }
  }
  throw ModelError("unknown map condition tag");
}

std::vector<Prop> classify(const RelatedSet& rel) {
  std::vector<Prop> out;
  for (Prop p : kAllProps)
    if (check_property(rel, p)) out.push_back(p);
  return out;
}

const std::vector<EntailmentEdge>& entailment_edges() {
  using P = Prop;
  static const std::vector<EntailmentEdge> edges = {
      {{P::well_related}, P::connex},
      {{P::connex}, P::reflexive},
      {{P::well_related}, P::well_founded_strict},
      {{P::transitive}, P::attractive},
      {{P::antisymmetric}, P::attractive},
      {{P::attractive}, P::semiattractive},
      {{P::antisymmetric, P::well_related}, P::partial_order},
      {{P::antisymmetric, P::well_related}, P::well_ordered},
      {{P::well_ordered}, P::partial_order},
      {{P::well_ordered}, P::well_related},
      {{P::well_ordered}, P::antisymmetric},
      {{P::reflexive, P::antisymmetric}, P::pseudo_order},
      {{P::pseudo_order}, P::reflexive},
      {{P::pseudo_order}, P::antisymmetric},
      {{P::reflexive, P::transitive}, P::quasi_order},
      {{P::quasi_order}, P::reflexive},
      {{P::quasi_order}, P::transitive},
      {{P::quasi_order, P::antisymmetric}, P::partial_order},
      {{P::partial_order}, P::pseudo_order},
      {{P::partial_order}, P::quasi_order},
      {{P::partial_order}, P::near_order},
      {{P::transitive, P::antisymmetric}, P::near_order},
      {{P::near_order}, P::transitive},
      {{P::near_order}, P::antisymmetric},
      {{P::irreflexive, P::transitive}, P::strict_order},
      {{P::strict_order}, P::asymmetric},
      {{P::irreflexive, P::antisymmetric}, P::asymmetric},
      {{P::asymmetric}, P::irreflexive},
      {{P::asymmetric}, P::antisymmetric},
      {{P::reflexive, P::symmetric}, P::tolerance},
      {{P::tolerance}, P::reflexive},
      {{P::tolerance}, P::symmetric},
      {{P::symmetric, P::transitive}, P::partial_equivalence},
      {{P::partial_equivalence}, P::symmetric},
      {{P::partial_equivalence}, P::transitive},
      {{P::quasi_order, P::symmetric}, P::equivalence},
      {{P::equivalence}, P::quasi_order},
      {{P::equivalence}, P::tolerance},
      {{P::equivalence}, P::partial_equivalence},
  };
  return edges;
}

std::string_view to_string(Prop p) {
  switch (p) {
    case Prop::reflexive: return "reflexive";
    case Prop::irreflexive: return "irreflexive";
    case Prop::transitive: return "transitive";
    case Prop::antisymmetric: return "antisymmetric";
    case Prop::symmetric: return "symmetric";
    case Prop::asymmetric: return "asymmetric";
    case Prop::connex: return "connex";
    case Prop::semiattractive: return "semiattractive";
    case Prop::attractive: return "attractive";
    case Prop::well_related: return "well_related";
    case Prop::well_founded_strict: return "well_founded_strict";
    case Prop::pseudo_order: return "pseudo_order";
    case Prop::quasi_order: return "quasi_order";
    case Prop::partial_order: return "partial_order";
    case Prop::near_order: return "near_order";
    case Prop::strict_order: return "strict_order";
    case Prop::tolerance: return "tolerance";
    case Prop::equivalence: return "equivalence";
    case Prop::partial_equivalence: return "partial_equivalence";
    case Prop::well_ordered: return "well_ordered";
  }
  return "?";
}

std::string_view to_string(MapCond c) {
  switch (c) {
    case MapCond::monotone: return "monotone";
    case MapCond::inflationary: return "inflationary";
    case MapCond::inflationary_variant: return "inflationary_variant";
    case MapCond::pointwise_infl_or_mono: return "pointwise_infl_or_mono";
    case MapCond::omega_continuous: return "omega_continuous";
    case MapCond::scott_continuous: return "scott_continuous";
  }
  return "?";
}

std::optional<Prop> prop_from_string(std::string_view s) {
  for (Prop p : kAllProps)
    if (to_string(p) == s) return p;
  return std::nullopt;
}

std::optional<MapCond> map_cond_from_string(std::string_view s) {
  for (MapCond c : kAllMapConds)
    if (to_string(c) == s) return c;
  return std::nullopt;
}

}  // namespace relfix
