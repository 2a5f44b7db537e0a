#include "relfix/fix.hpp"

#include <string>

#include "relfix/bounds.hpp"

namespace relfix {

namespace {

void require(bool ok, const char* clause) {
  if (!ok) throw PreconditionViolation(std::string("precondition failed: ") + clause);
}

// All suprema (taken in the ambient relation) of submasks of b.
ElemSet submask_sups(const RelatedSet& rel, ElemSet b) {
  ElemSet out = extreme_bounds(rel, 0);
  ElemSet s = b;
  while (true) {
    if (s) out |= extreme_bounds(rel, s);
    if (s == 0) break;
    s = (s - 1) & b;
  }
  return out;
}

}  // namespace

ElemSet strict_fixed_points(const RelatedSet& rel, const EndoMap& f) {
  ElemSet out = 0;
  for (int x = 0; x < rel.size(); ++x)
    if (f(x) == x) out |= bit(x);
  return out;
}

ElemSet quasi_fixed_points(const RelatedSet& rel, const EndoMap& f) {
  ElemSet out = 0;
  for (int x = 0; x < rel.size(); ++x)
    if (rel.sim(f(x), x)) out |= bit(x);
  return out;
}

bool sm_closed(const RelatedSet& rel, const EndoMap& f, ElemSet b) {
  if ((image(f, b) & ~b) != 0) return false;
  return (submask_sups(rel, b) & ~b) == 0;
}

ElemSet sm_core_set(const RelatedSet& rel, const EndoMap& f) {
  ElemSet b = 0;
  while (true) {
    ElemSet next = b | image(f, b) | submask_sups(rel, b);
    if (next == b) return b;
    b = next;
  }
}

int sm_qfp(const RelatedSet& rel, const EndoMap& f, bool strict) {
  if (strict) {
    require(bool(check_complete(rel, SubsetClass::All)), "UNIV-complete");
    require(bool(check_map_condition(rel, f, MapCond::pointwise_infl_or_mono)),
            "pointwise inflationary-or-monotone");
  }
  ElemSet sups = extreme_bounds(rel, sm_core_set(rel, f));
  if (sups == 0)
    throw InternalFailure("core set has no supremum");
  int c = lowest_bit(sups);
  if (!rel.sim(f(c), c))
    throw InternalFailure("supremum of core set is not a quasi-fixed point");
  return c;
}

Witness check_derivation(const RelatedSet& rel, const EndoMap& f,
                         const Derivation& d) {
  int n = rel.size();
  int k = static_cast<int>(d.seq.size());
  if (static_cast<int>(d.kinds.size()) != k) return Witness::no({});
  ElemSet set = 0;
  for (int i = 0; i < k; ++i) {
    int x = d.seq[i];
    if (x < 0 || x >= n || (set & bit(x))) return Witness::no({i});
    set |= bit(x);
  }
  // strictly increasing position-wise under the strict part
  for (int i = 0; i < k; ++i)
    for (int j = i + 1; j < k; ++j)
      if (!rel.lt(d.seq[i], d.seq[j])) return Witness::no({i, j});
  // well-ordered as a set
  if (!antisymmetric_on(rel, set) || !well_related_on(rel, set))
    return Witness::no({}, set);
  ElemSet prefix = 0;
  for (int i = 0; i < k; ++i) {
    int x = d.seq[i];
    const auto& step = d.kinds[i];
    if (step.kind == Derivation::Step::successor) {
      int y = step.pred;
      if (y < 0 || y >= n || !(prefix & bit(y))) return Witness::no({i});
      if (!(extremes_of(rel, prefix, Side::greatest) & bit(y)) || f(y) != x)
        return Witness::no({i}, prefix);
    } else {
      if ((image(f, prefix) & ~prefix) != 0) return Witness::no({i}, prefix);
      if (!(extreme_bounds(rel, prefix) & bit(x))) return Witness::no({i}, prefix);
    }
    prefix |= bit(x);
  }
  return Witness::yes();
}

namespace {

// derivation_infl and derivation_f_refl restricted to the built prefix.
void check_prefix_hypotheses(const RelatedSet& rel, const EndoMap& f,
                             ElemSet prefix, int position) {
  for (int a = 0; a < rel.size(); ++a) {
    if (!(prefix & bit(a))) continue;
    if (!rel.le(f(a), f(a)))
      throw HypothesisViolation("derivation_f_refl fails at position " +
                                std::to_string(position));
    for (int b2 = 0; b2 < rel.size(); ++b2)
      if ((prefix & bit(b2)) && rel.le(a, b2) && !rel.le(a, f(b2)))
        throw HypothesisViolation("derivation_infl fails at position " +
                                  std::to_string(position));
  }
}

void append_checked(const RelatedSet& rel, const EndoMap& f, Derivation& d,
                    ElemSet& prefix, int x, Derivation::Step step) {
  int pos = static_cast<int>(d.seq.size());
  for (ElemSet s = prefix; s;) {
    int p = lowest_bit(s);
    s &= s - 1;
    if (!rel.lt(p, x))
      throw HypothesisViolation(
          "appended element not strictly above prefix at position " +
          std::to_string(pos));
  }
  d.seq.push_back(x);
  d.kinds.push_back(step);
  prefix |= bit(x);
  check_prefix_hypotheses(rel, f, prefix, pos);
}

}  // namespace

Derivation build_derivable(const RelatedSet& rel, const EndoMap& f,
                           bool strict) {
  if (strict) {
    require(bool(check_property(rel, Prop::antisymmetric)), "antisymmetric");
    require(bool(check_complete(rel, SubsetClass::WellRelated)),
            "well-complete");
  }
  Derivation d;
  ElemSet prefix = 0;
  while (true) {
    if ((image(f, prefix) & ~prefix) == 0) {
      // limit step
      ElemSet sups = extreme_bounds(rel, prefix);
      if (sups == 0)
        throw HypothesisViolation(
            "prefix has no supremum (well-completeness fails) at position " +
            std::to_string(d.seq.size()));
      if (popcount(sups) > 1)
        throw HypothesisViolation(
            "multiple distinct suprema of prefix (antisymmetry fails)");
      int s = lowest_bit(sups);
      if (!(prefix & bit(s))) {
        append_checked(rel, f, d, prefix, s, {Derivation::Step::limit, -1});
        continue;
      }
      // sup already present and prefix f-closed: maximal
      return d;
    }
    ElemSet greatest = extremes_of(rel, prefix, Side::greatest);
    if (greatest == 0) return d;
    int y = lowest_bit(greatest);
    if (prefix & bit(f(y))) return d;
    append_checked(rel, f, d, prefix, f(y), {Derivation::Step::successor, y});
  }
}

namespace {

int sup_of_derivable(const RelatedSet& rel, const EndoMap& f, bool strict,
                     bool strict_checked) {
  Derivation d = build_derivable(rel, f, strict && !strict_checked);
  ElemSet set = 0;
  for (int x : d.seq) set |= bit(x);
  ElemSet sups = extreme_bounds(rel, set);
  if (sups == 0)
    throw HypothesisViolation("derivable set has no supremum");
  return lowest_bit(sups);
}

}  // namespace

int derivation_fp(const RelatedSet& rel, const EndoMap& f, bool strict) {
  if (strict) {
    require(bool(check_property(rel, Prop::antisymmetric)), "antisymmetric");
    require(bool(check_complete(rel, SubsetClass::WellRelated)),
            "well-complete");
    bool infl_instance =
        bool(check_property(rel, Prop::reflexive)) &&
        bool(check_map_condition(rel, f, MapCond::inflationary_variant));
    bool mono_instance = bool(check_map_condition(rel, f, MapCond::monotone));
    require(infl_instance || mono_instance,
            "(pseudo-order + inflationary variant) or monotone");
  }
  int p = sup_of_derivable(rel, f, false, true);
  if (f(p) != p)
    throw InternalFailure("supremum of derivable set is not a fixed point");
  return p;
}

int least_fp_mono(const RelatedSet& rel, const EndoMap& f, bool strict) {
  if (strict) {
    require(bool(check_property(rel, Prop::antisymmetric)), "antisymmetric");
    require(bool(check_complete(rel, SubsetClass::WellRelated)),
            "well-complete");
    require(bool(check_map_condition(rel, f, MapCond::monotone)), "monotone");
  }
  int p = sup_of_derivable(rel, f, false, true);
  if (f(p) != p)
    throw InternalFailure("supremum of derivable set is not a fixed point");
  for (int q = 0; q < rel.size(); ++q)
    if (f(q) == q && !rel.le(p, q))
      throw InternalFailure("returned fixed point is not least");
  return p;
}

Quotient build_quotient(const RelatedSet& rel, const EndoMap* f, bool strict) {
  if (strict) {
    require(bool(check_property(rel, Prop::attractive)), "attractive");
    if (f)
      require(bool(check_map_condition(rel, *f, MapCond::monotone)),
              "monotone");
  }
  int n = rel.size();
  Quotient q;
  q.class_of.assign(n, -1);
  auto class_around = [&](int x) {
    ElemSet cls = bit(x);
    for (int y = 0; y < n; ++y)
      if (rel.sim(x, y)) cls |= bit(y);
    return cls;
  };
  for (int x = 0; x < n; ++x) {
    if (q.class_of[x] != -1) continue;
    ElemSet cls = class_around(x);
    int id = static_cast<int>(q.members.size());
    for (ElemSet s = cls; s;) {
      int y = lowest_bit(s);
      s &= s - 1;
      if (q.class_of[y] != -1)
        throw PartitionFailure("similarity-or-equality is not transitive");
      q.class_of[y] = id;
    }
    q.members.push_back(cls);
  }
  for (int y = 0; y < n; ++y)
    if (class_around(y) != q.members[q.class_of[y]])
      throw PartitionFailure("similarity-or-equality is not transitive");
  int m = static_cast<int>(q.members.size());
  q.qset.rows.assign(m, 0u);
  for (int i = 0; i < m; ++i) {
    q.qset.names.push_back(rel.names.empty() ? std::string()
                                             : rel.names[lowest_bit(q.members[i])]);
    for (int j = 0; j < m; ++j)
      if (set_le(rel, q.members[i], q.members[j])) q.qset.rows[i] |= bit(j);
  }
  if (!check_property(q.qset, Prop::antisymmetric))
    throw InternalFailure("quotient is not antisymmetric");
  if (f) {
    EndoMap fm;
    fm.target.assign(m, 0);
    for (int i = 0; i < m; ++i) {
      int rep = lowest_bit(q.members[i]);
      fm.target[i] = q.class_of[(*f)(rep)];
      for (ElemSet s = q.members[i]; s;) {
        int y = lowest_bit(s);
        s &= s - 1;
        if (q.class_of[(*f)(y)] != fm.target[i])
          throw InternalFailure("quotient map depends on representative");
      }
    }
    q.qmap = std::move(fm);
  }
  return q;
}

int least_qfp_attractive(const RelatedSet& rel, const EndoMap& f, bool strict) {
  if (strict) {
    require(bool(check_property(rel, Prop::attractive)), "attractive");
    require(bool(check_complete(rel, SubsetClass::WellRelated)),
            "well-complete");
    require(bool(check_map_condition(rel, f, MapCond::monotone)), "monotone");
    }
  Quotient q = build_quotient(rel, &f, false);
  if (strict && !check_complete(q.qset, SubsetClass::WellRelated))
    throw InternalFailure("quotient failed to inherit well-completeness");
  int pc = least_fp_mono(q.qset, *q.qmap, false);
  int c = lowest_bit(q.members[pc]);
  if (!rel.sim(f(c), c))
    throw InternalFailure("returned point is not a quasi-fixed point");
  for (int x = 0; x < rel.size(); ++x)
    if ((rel.sim(f(x), x) || f(x) == x) && !rel.le(c, x))
      throw InternalFailure("returned quasi-fixed point is not least");
  return c;
}

namespace {

// Every well-related subset belongs to the class.
bool class_covers_well_related(const RelatedSet& rel, SubsetClass cls) {
  ElemSet full = rel.full();
  for (ElemSet s = 0;; ++s) {
    if (well_related_on(rel, s) && !is_in_class(rel, s, cls)) return false;
    if (s == full) break;
  }
  return true;
}

}  // namespace

int qfp_sup_in_class(const RelatedSet& rel, const EndoMap& f, SubsetClass cls,
                     ElemSet x, ElemSet p, bool strict) {
  ElemSet qfp_or_p = quasi_fixed_points(rel, f) | p;
  if (strict) {
    require(bool(check_property(rel, Prop::attractive)), "attractive");
    require(bool(check_complete(rel, cls)), "class-complete");
    require(class_covers_well_related(rel, cls),
            "class contains all well-related subsets");
    require(bool(check_map_condition(rel, f, MapCond::monotone)), "monotone");
    require((p & ~strict_fixed_points(rel, f)) == 0,
            "P within strict fixed points");
    require((x & ~qfp_or_p) == 0, "X within qfps and P");
    require(is_in_class(rel, x, cls), "X in class");
  }
  ElemSet b = bounds_of(rel, x);
  if ((image(f, b) & ~b) != 0)
    throw InternalFailure("bound set is not closed under f");
  std::vector<int> back;
  RelatedSet sub = restrict_to(rel, b, &back);
  std::vector<int> fwd(rel.size(), -1);
  for (int i = 0; i < sub.size(); ++i) fwd[back[i]] = i;
  EndoMap fb;
  for (int i = 0; i < sub.size(); ++i) fb.target.push_back(fwd[f(back[i])]);
  int qs = least_qfp_attractive(sub, fb, false);
  int q = back[qs];
  if (!(qfp_or_p & bit(q)) || !(b & bit(q)))
    throw InternalFailure("computed supremum fails validation");
  for (int y = 0; y < rel.size(); ++y)
    if ((qfp_or_p & bit(y)) && (b & bit(y)) && !rel.le(q, y))
      throw InternalFailure("computed supremum is not least among bounds");
  return q;
}

Witness verify_qfp_complete(const RelatedSet& rel, const EndoMap& f,
                            SubsetClass cls, ElemSet p, bool strict) {
  ElemSet q = quasi_fixed_points(rel, f) | p;
  if (strict) {
    require(bool(check_property(rel, Prop::attractive)), "attractive");
    require(bool(check_complete(rel, cls)), "class-complete");
    require(class_covers_well_related(rel, cls),
            "class contains all well-related subsets");
    require(bool(check_map_condition(rel, f, MapCond::monotone)), "monotone");
    require((p & ~strict_fixed_points(rel, f)) == 0,
            "P within strict fixed points");
  }
  for (ElemSet x = 0;; ++x) {
    if ((x & ~q) == 0 && is_in_class(rel, x, cls)) {
      ElemSet in_q_bounds = bounds_of(rel, x) & q;
      bool found = false;
      for (ElemSet s = in_q_bounds; s && !found;) {
        int e = lowest_bit(s);
        s &= s - 1;
        found = (rel.rows[e] & in_q_bounds) == in_q_bounds;
      }
      if (!found) return Witness::no({}, x);
    }
    if (x == rel.full()) break;
  }
  return Witness::yes();
}

ElemSet bottoms(const RelatedSet& rel) {
  ElemSet out = 0;
  for (int b = 0; b < rel.size(); ++b)
    if (rel.rows[b] == rel.full()) out |= bit(b);
  return out;
}

ElemSet kleene_iterates(const RelatedSet& rel, const EndoMap& f, int bot) {
  if (bot < 0 || bot >= rel.size())
    throw ModelError("invalid bottom index");
  ElemSet seen = 0;
  int x = bot;
  while (!(seen & bit(x))) {
    seen |= bit(x);
    x = f(x);
  }
  return seen;
}

ElemSet kleene_qfps(const RelatedSet& rel, const EndoMap& f, int bot,
                    bool strict) {
  if (strict) {
    require(bool(check_complete(rel, SubsetClass::OmegaRange)),
            "omega-complete");
    require(bool(check_map_condition(rel, f, MapCond::omega_continuous)),
            "omega-continuous");
    require((bottoms(rel) & bit(bot)) != 0, "bottom element");
  }
  ElemSet sups = extreme_bounds(rel, kleene_iterates(rel, f, bot));
  if (sups == 0)
    throw InternalFailure("iterate set has no supremum");
  for (ElemSet s = sups; s;) {
    int e = lowest_bit(s);
    s &= s - 1;
    if (!rel.sim(f(e), e))
      throw InternalFailure("iterate supremum is not a quasi-fixed point");
  }
  return sups;
}

Witness kleene_least_equivalence(const RelatedSet& rel, const EndoMap& f,
                                 int bot, bool strict) {
  if (strict) {
    require(bool(check_property(rel, Prop::attractive)), "attractive");
    require(bool(check_complete(rel, SubsetClass::OmegaRange)),
            "omega-complete");
    require(bool(check_map_condition(rel, f, MapCond::omega_continuous)),
            "omega-continuous");
    require((bottoms(rel) & bit(bot)) != 0, "bottom element");
  }
  ElemSet sups = extreme_bounds(rel, kleene_iterates(rel, f, bot));
  ElemSet qfps = quasi_fixed_points(rel, f);
  ElemSet least = 0;
  for (ElemSet s = qfps; s;) {
    int e = lowest_bit(s);
    s &= s - 1;
    if ((rel.rows[e] & qfps) == qfps) least |= bit(e);
  }
  if (sups == least) return Witness::yes();
  return Witness::no({lowest_bit(sups ^ least)});
}

}  // namespace relfix
