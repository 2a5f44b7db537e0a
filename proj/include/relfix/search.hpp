#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "relfix/classes.hpp"
#include "relfix/core.hpp"
#include "relfix/props.hpp"

namespace relfix {

// Atom catalog for conjectures: relation properties, map conditions,
// class-completeness tags, has_bottom, and the conclusion predicates.
struct Atom {
  enum class Kind {
    prop,
    map_cond,
    complete,
    has_bottom,
    exists_strict_fp,
    exists_qfp,
    exists_least_fp,
    exists_least_qfp,
    qfp_set_complete,
    kleene_sups_are_least_qfps,
  };
  Kind kind = Kind::prop;
  Prop prop = Prop::reflexive;
  MapCond cond = MapCond::monotone;
  SubsetClass cls = SubsetClass::All;

  static Atom of(Prop p) { return {Kind::prop, p, {}, {}}; }
  static Atom of(MapCond c) { return {Kind::map_cond, {}, c, {}}; }
  static Atom complete(SubsetClass c) { return {Kind::complete, {}, {}, c}; }
  static Atom qfp_complete(SubsetClass c) {
    return {Kind::qfp_set_complete, {}, {}, c};
  }
  static Atom of(Kind k) { return {k, {}, {}, {}}; }

  bool needs_map() const;
  bool needs_bottom() const;
  bool operator==(const Atom&) const = default;
};

std::string to_string(const Atom& a);
std::optional<Atom> atom_from_string(std::string_view s);

struct Conjecture {
  std::string id;
  std::vector<Atom> assume;
  Atom conclude;

  bool needs_map() const;
  bool needs_bottom() const;
};

struct Instance {
  RelatedSet rel;
  std::optional<EndoMap> f;
  std::optional<int> bot;
};

// Brute-force semantics; never consults the engines, so engine results can
// be checked against it.
bool eval_atom(const Instance& inst, const Atom& a);

struct Report {
  enum class Verdict { refuted, no_counterexample, verified };
  std::string id;
  Verdict verdict = Verdict::no_counterexample;
  std::optional<Instance> counterexample;
  std::uint64_t examined = 0;   // instances satisfying all assumptions
  int max_n = 0;
  std::uint64_t budget = 0;
  std::uint64_t millis = 0;
};

// Scans sizes 1..max_n; per size, relation codes ascending with map codes
// ascending inside (modelgen order); the bottom, when the conjecture needs
// one, is the least-index bottom element. Returns the first instance where
// every assumption holds and the conclusion fails. budget caps the number
// of assumption-satisfying instances examined. Deterministic for any jobs
// count: workers scan disjoint code ranges and results fold in code order.
Report find_counterexample(const Conjecture& c, int max_n,
                           std::uint64_t budget, int jobs = 1);

// One report per theorem entry (14 entries). Per size, instances satisfying
// a theorem's hypotheses are enumerated exhaustively while the code space
// fits 2^20, and otherwise sampled with a counter-based generator from
// seed; conclusions are asserted via the engines with their own validation
// enabled. A violation is reported with the offending instance.
std::vector<Report> verify_theorems(int max_n, std::uint64_t budget,
                                    std::uint64_t seed, int jobs = 1);

std::vector<std::string> theorem_names();

}  // namespace relfix
