#include "doctest.h"
#include "oracles.hpp"
#include "relfix/modelgen.hpp"
#include "relfix/props.hpp"

using namespace relfix;

namespace {

RelatedSet vee() {
  // a <= c, b <= c, c <= c
  return make_related_set({"a", "b", "c"},
                          {{"a", "c"}, {"b", "c"}, {"c", "c"}});
}

}  // namespace

TEST_CASE("bounds_of") {
  CHECK(bounds_of(vee(), 0b011) == 0b100);
  CHECK(bounds_of(vee(), 0) == 0b111);
  CHECK(bounds_of(oracles::all_true2_rel(), 0b01) == 0b11);
}

TEST_CASE("extremes_of") {
  RelatedSet refl = make_related_set({"x"}, {{"x", "x"}});
  CHECK(extremes_of(refl, 0b1, Side::greatest) == 0b1);
  RelatedSet irr = make_related_set({"x"}, {});
  CHECK(extremes_of(irr, 0b1, Side::greatest) == 0);
  CHECK(extremes_of(oracles::all_true2_rel(), 0b11, Side::least) == 0b11);
}

TEST_CASE("extreme_bounds") {
  CHECK(extreme_bounds(vee(), 0b011) == 0b100);
  CHECK(extreme_bounds(oracles::all_true2_rel(), 0b01) == 0b11);
  CHECK(extreme_bounds(oracles::kleene_demo_rel(), 0b101) == 0b101);
  RelatedSet chain2 = make_related_set(
      {"a", "b"}, {{"a", "a"}, {"a", "b"}, {"b", "b"}});
  CHECK(extreme_bounds(chain2, 0b01) == 0b01);
}

TEST_CASE("any two suprema are similar, exhaustive n <= 3") {
  for (int n = 0; n <= 3; ++n)
    for (std::uint64_t code = 0; code < related_set_count(n); ++code) {
      RelatedSet r = nth_related_set(n, code);
      for (ElemSet x = 0; x <= r.full(); ++x) {
        ElemSet sups = extreme_bounds(r, x);
        for (ElemSet s = sups; s;) {
          int a = lowest_bit(s);
          s &= s - 1;
          for (ElemSet t = sups; t;) {
            int b = lowest_bit(t);
            t &= t - 1;
            CHECK(r.sim(a, b));
          }
        }
        if (x == r.full()) break;
      }
    }
}

TEST_CASE("monotone image of a greatest element is a supremum of the image") {
  // exhaustive n <= 3, deterministic sample at n = 4
  auto check_one = [](const RelatedSet& r, const EndoMap& f) {
    if (!check_map_condition(r, f, MapCond::monotone)) return;
    for (ElemSet x = 0;; ++x) {
      for (ElemSet e = extremes_of(r, x, Side::greatest); e;) {
        int g = lowest_bit(e);
        e &= e - 1;
        CHECK((extreme_bounds(r, image(f, x)) & bit(f(g))) != 0);
      }
      if (x == r.full()) break;
    }
  };
  for (int n = 1; n <= 3; ++n)
    for (std::uint64_t rc = 0; rc < related_set_count(n); ++rc) {
      RelatedSet r = nth_related_set(n, rc);
      for (std::uint64_t mc = 0; mc < endo_map_count(n); ++mc)
        check_one(r, nth_endo_map(n, mc));
    }
  for (std::uint64_t t = 0; t < 400; ++t) {
    RelatedSet r = random_instance(mix64(t), 4, 0.5);
    check_one(r, nth_endo_map(4, mix64(t ^ 0xabcdef) % endo_map_count(4)));
  }
}

TEST_CASE("if every subset has a supremum, every subset has an infimum") {
  auto check_one = [](const RelatedSet& r) {
    bool all_sup = true;
    for (ElemSet x = 0;; ++x) {
      if (extreme_bounds(r, x) == 0) all_sup = false;
      if (x == r.full()) break;
    }
    if (!all_sup) return;
    RelatedSet d = derived_relation(r, RelationView::dual);
    for (ElemSet x = 0;; ++x) {
      CHECK(extreme_bounds(d, x) != 0);
      if (x == r.full()) break;
    }
  };
  for (int n = 0; n <= 3; ++n)
    for (std::uint64_t rc = 0; rc < related_set_count(n); ++rc)
      check_one(nth_related_set(n, rc));
  for (std::uint64_t t = 0; t < 2000; ++t)
    check_one(random_instance(mix64(t + 77), 4, 0.75));
}
