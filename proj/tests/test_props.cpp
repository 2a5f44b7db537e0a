#include "doctest.h"
#include "oracles.hpp"
#include "relfix/modelgen.hpp"
#include "relfix/props.hpp"

using namespace relfix;

namespace {

bool witness_violates_semiattractive(const RelatedSet& r, const Witness& w) {
  if (w.elems.size() != 3) return false;
  int x = w.elems[0], y = w.elems[1], z = w.elems[2];
  return r.sim(x, y) && r.le(y, z) && !r.le(x, z);
}

}  // namespace

TEST_CASE("check_property examples") {
  RelatedSet chain3 = standard_instance("chain 3").first;
  CHECK(check_property(chain3, Prop::well_related).holds);

  RelatedSet empty2 = make_related_set({"a", "b"}, {});
  Witness w = check_property(empty2, Prop::well_related);
  CHECK_FALSE(w.holds);
  CHECK(w.subset == ElemSet{0b01});  // {a}: no e with e <= e

  Witness sa = check_property(oracles::kleene_demo_rel(), Prop::semiattractive);
  CHECK_FALSE(sa.holds);
  CHECK(witness_violates_semiattractive(oracles::kleene_demo_rel(), sa));

  Witness as = check_property(oracles::all_true2_rel(), Prop::antisymmetric);
  CHECK_FALSE(as.holds);
  CHECK(as.elems == std::vector<int>{0, 1});
}

TEST_CASE("check_map_condition examples") {
  RelatedSet all2 = oracles::all_true2_rel();
  EndoMap swap = oracles::swap2_map(all2);
  CHECK(check_map_condition(all2, swap, MapCond::monotone).holds);
  CHECK(check_map_condition(all2, swap, MapCond::inflationary).holds);

  RelatedSet r4 = oracles::no_least_fp_rel();
  CHECK(check_map_condition(r4, oracles::no_least_fp_map(r4),
                            MapCond::inflationary).holds);

  for (std::uint64_t rc = 0; rc < related_set_count(2); ++rc) {
    RelatedSet r = nth_related_set(2, rc);
    EndoMap id = nth_endo_map(2, 1);  // a1 -> a1, a2 -> a2
    CHECK(check_map_condition(r, id, MapCond::monotone).holds);
  }
}

TEST_CASE("classify examples") {
  RelatedSet one = make_related_set({"x"}, {{"x", "x"}});
  std::vector<Prop> c = classify(one);
  for (Prop p : {Prop::reflexive, Prop::transitive, Prop::antisymmetric,
                 Prop::connex, Prop::well_related, Prop::partial_order,
                 Prop::pseudo_order, Prop::quasi_order, Prop::attractive,
                 Prop::well_ordered})
    CHECK(std::find(c.begin(), c.end(), p) != c.end());

  RelatedSet none = nth_related_set(0, 0);
  CHECK(classify(none).size() == std::size(kAllProps));  // all vacuous

  std::vector<Prop> all2 = classify(oracles::all_true2_rel());
  for (Prop p : {Prop::reflexive, Prop::transitive, Prop::connex,
                 Prop::well_related, Prop::quasi_order, Prop::attractive})
    CHECK(std::find(all2.begin(), all2.end(), p) != all2.end());
  CHECK(std::find(all2.begin(), all2.end(), Prop::antisymmetric) ==
        all2.end());
}

TEST_CASE("entailment table contains the named edges") {
  auto has = [](const std::vector<Prop>& prem, Prop concl) {
    for (const EntailmentEdge& e : entailment_edges())
      if (e.premises == prem && e.conclusion == concl) return true;
    return false;
  };
  CHECK(has({Prop::well_related}, Prop::connex));
  CHECK(has({Prop::antisymmetric, Prop::well_related}, Prop::partial_order));
  CHECK(has({Prop::reflexive, Prop::antisymmetric}, Prop::pseudo_order));
}

TEST_CASE("entailment closure and greedy equivalence, exhaustive n <= 3") {
  for (int n = 0; n <= 3; ++n)
    for (std::uint64_t rc = 0; rc < related_set_count(n); ++rc) {
      RelatedSet r = nth_related_set(n, rc);
      for (const EntailmentEdge& e : entailment_edges()) {
        bool prem = true;
        for (Prop p : e.premises)
          if (!check_property(r, p)) { prem = false; break; }
        if (prem) CHECK(check_property(r, e.conclusion).holds);
      }
      CHECK(well_related_on(r, r.full()) ==
            oracles::exhaustive_well_related(r, r.full()));
      if (check_property(r, Prop::well_related))
        CHECK(check_property(r, Prop::well_founded_strict).holds);
    }
}

TEST_CASE("witness re-checkability for failed properties, n = 3") {
  for (std::uint64_t rc = 0; rc < related_set_count(3); ++rc) {
    RelatedSet r = nth_related_set(3, rc);
    Witness w = check_property(r, Prop::transitive);
    if (!w.holds) {
      REQUIRE(w.elems.size() == 3);
      int x = w.elems[0], y = w.elems[1], z = w.elems[2];
      CHECK(r.le(x, y));
      CHECK(r.le(y, z));
      CHECK_FALSE(r.le(x, z));
    }
  }
}

TEST_CASE("unions of downward-closed well-founded families are well-founded") {
  // exhaustive over all families of subsets, n <= 3
  for (int n = 1; n <= 3; ++n) {
    int nsubsets = 1 << (1 << n);
    for (std::uint64_t rc = 0; rc < related_set_count(n); ++rc) {
      RelatedSet r = nth_related_set(n, rc);
      for (int fam = 0; fam < nsubsets; ++fam) {
        ElemSet uni = 0;
        for (int x = 0; x < (1 << n); ++x)
          if ((fam >> x) & 1) uni |= ElemSet(x);
        bool hyp = true;
        for (int x = 0; x < (1 << n) && hyp; ++x) {
          if (!((fam >> x) & 1)) continue;
          ElemSet xs = ElemSet(x);
          if (!well_founded_strict_on(r, xs)) { hyp = false; break; }
          // downward closed in the union
          for (ElemSet t = xs; t && hyp;) {
            int a = lowest_bit(t);
            t &= t - 1;
            for (ElemSet u = uni & ~xs; u && hyp;) {
              int b = lowest_bit(u);
              u &= u - 1;
              if (r.lt(b, a)) hyp = false;
            }
          }
        }
        if (hyp) CHECK(well_founded_strict_on(r, uni));
      }
    }
  }
}

TEST_CASE("continuity lemmas, exhaustive n <= 3") {
  for (int n = 1; n <= 3; ++n)
    for (std::uint64_t rc = 0; rc < related_set_count(n); ++rc) {
      RelatedSet r = nth_related_set(n, rc);
      for (std::uint64_t mc = 0; mc < endo_map_count(n); ++mc) {
        EndoMap f = nth_endo_map(n, mc);
        if (check_map_condition(r, f, MapCond::scott_continuous))
          CHECK(check_map_condition(r, f, MapCond::omega_continuous).holds);
        if (check_map_condition(r, f, MapCond::omega_continuous))
          for (int x = 0; x < n; ++x)
            for (int y = 0; y < n; ++y)
              if (r.le(x, x) && r.le(x, y) && r.le(y, y))
                CHECK(r.le(f(x), f(y)));
      }
    }
}
