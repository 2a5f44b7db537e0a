#include "doctest.h"
#include "oracles.hpp"
#include "relfix/classes.hpp"
#include "relfix/modelgen.hpp"

using namespace relfix;

TEST_CASE("is_in_class examples") {
  RelatedSet r = oracles::all_true2_rel();
  CHECK(is_in_class(r, 0, SubsetClass::Directed));

  RelatedSet irr = make_related_set({"x"}, {});
  CHECK_FALSE(is_in_class(irr, 0b1, SubsetClass::OmegaRange));

  RelatedSet chain3 = standard_instance("chain 3").first;
  for (SubsetClass cls : {SubsetClass::Connex, SubsetClass::WellRelated,
                          SubsetClass::Directed, SubsetClass::OmegaRange})
    CHECK(is_in_class(chain3, chain3.full(), cls));
}

TEST_CASE("subsets_in_class examples") {
  RelatedSet none = nth_related_set(0, 0);
  for (SubsetClass cls : kAllClasses) {
    auto subs = subsets_in_class(none, cls);
    if (cls == SubsetClass::OmegaRange)
      CHECK(subs.empty());  // ranges are nonempty
    else
      CHECK(subs == std::vector<ElemSet>{0});
  }

  CHECK(subsets_in_class(oracles::all_true2_rel(), SubsetClass::All) ==
        std::vector<ElemSet>{0, 1, 2, 3});

  RelatedSet empty2 = make_related_set({"a", "b"}, {});
  CHECK(subsets_in_class(empty2, SubsetClass::WellRelated) ==
        std::vector<ElemSet>{0});
}

TEST_CASE("check_complete examples") {
  CHECK(check_complete(oracles::all_true2_rel(), SubsetClass::All).holds);

  RelatedSet empty2 = make_related_set({"a", "b"}, {});
  Witness w = check_complete(empty2, SubsetClass::All);
  CHECK_FALSE(w.holds);
  CHECK(w.subset == ElemSet{0});

  CHECK(check_complete(oracles::no_least_fp_rel(), SubsetClass::All).holds);
}

TEST_CASE("omega range matches the permutation oracle, exhaustive n <= 3") {
  for (int n = 0; n <= 3; ++n)
    for (std::uint64_t rc = 0; rc < related_set_count(n); ++rc) {
      RelatedSet r = nth_related_set(n, rc);
      for (ElemSet x = 0;; ++x) {
        CHECK(is_in_class(r, x, SubsetClass::OmegaRange) ==
              oracles::omega_range_by_permutation(r, x));
        if (x == r.full()) break;
      }
    }
}

TEST_CASE("class inclusions, exhaustive n <= 3") {
  for (int n = 0; n <= 3; ++n)
    for (std::uint64_t rc = 0; rc < related_set_count(n); ++rc) {
      RelatedSet r = nth_related_set(n, rc);
      for (ElemSet x = 1; n > 0; ++x) {
        if (is_in_class(r, x, SubsetClass::WellRelated))
          CHECK(is_in_class(r, x, SubsetClass::Connex));
        if (is_in_class(r, x, SubsetClass::Connex) && x != 0)
          CHECK(is_in_class(r, x, SubsetClass::Directed));
        if (x == r.full()) break;
      }
      // hence All-completeness implies every other completeness
      if (check_complete(r, SubsetClass::All))
        for (SubsetClass cls : kAllClasses)
          CHECK(check_complete(r, cls).holds);
    }
}

TEST_CASE("union closure under the set-to-set extension, exhaustive n <= 3") {
  for (int n = 1; n <= 3; ++n)
    for (std::uint64_t rc = 0; rc < related_set_count(n); ++rc) {
      RelatedSet r = nth_related_set(n, rc);
      for (ElemSet x = 0;; ++x) {
        for (ElemSet y = 0;; ++y) {
          if (set_le(r, x, y)) {
            if (is_in_class(r, x, SubsetClass::Directed) &&
                is_in_class(r, y, SubsetClass::Directed))
              CHECK(is_in_class(r, x | y, SubsetClass::Directed));
            if (is_in_class(r, x, SubsetClass::WellRelated) &&
                is_in_class(r, y, SubsetClass::WellRelated))
              CHECK(is_in_class(r, x | y, SubsetClass::WellRelated));
          }
          if (y == r.full()) break;
        }
        if (x == r.full()) break;
      }
    }
}

TEST_CASE("set_le") {
  RelatedSet r = oracles::kleene_demo_rel();
  CHECK(set_le(r, 0, r.full()));   // vacuous
  CHECK(set_le(r, 0b010, 0b101));  // a2 <= a1 and a2 <= a3
  CHECK_FALSE(set_le(r, 0b100, 0b010));  // a3 <= a2 fails
}

TEST_CASE("class name round-trip") {
  for (SubsetClass cls : kAllClasses)
    CHECK(class_from_string(to_string(cls)) == cls);
  CHECK_FALSE(class_from_string("nope").has_value());
}
