#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "relfix/errors.hpp"

namespace relfix {

// Subset of carrier indices as a bitmask; bit i set <=> element i is in.
using ElemSet = std::uint32_t;

// Downstream operations enumerate subsets, so carriers are capped.
inline constexpr int kMaxCarrier = 16;

inline int popcount(ElemSet s) { return __builtin_popcount(s); }
inline int lowest_bit(ElemSet s) { return __builtin_ctz(s); }
inline ElemSet bit(int i) { return ElemSet{1} << i; }

// A finite carrier of named elements with an arbitrary binary relation.
// rows[i] bit j <=> element i <= element j. No order axioms are assumed.
// Elements are identified by carrier index; labels are presentation only.
// Immutable after construction.
struct RelatedSet {
  std::vector<std::string> names;
  std::vector<ElemSet> rows;

  int size() const { return static_cast<int>(names.size()); }
  bool le(int i, int j) const { return (rows[i] >> j) & 1u; }
  bool sim(int i, int j) const { return le(i, j) && le(j, i); }
  bool lt(int i, int j) const { return le(i, j) && !le(j, i); }
  ElemSet full() const {
    int n = size();
    return n == 0 ? 0u : (n == 32 ? ~ElemSet{0} : (ElemSet{1} << n) - 1u);
  }
  int index_of(const std::string& label) const;  // -1 if absent

  bool operator==(const RelatedSet&) const = default;
};

enum class RelationView { dual, strict, similarity };

RelatedSet make_related_set(
    const std::vector<std::string>& names,
    const std::vector<std::pair<std::string, std::string>>& edges);

// dual = transpose; strict(i,j) = le(i,j) & !le(j,i);
// similarity(i,j) = le(i,j) & le(j,i).
RelatedSet derived_relation(const RelatedSet& rel, RelationView kind);

// Restriction of the relation to the elements of `domain`, reindexed in
// ascending order. back_map (optional) receives new index -> old index.
RelatedSet restrict_to(const RelatedSet& rel, ElemSet domain,
                       std::vector<int>* back_map = nullptr);

// Total map f : A -> A; target[i] is the index of f(element i).
// Totality and closure (f`A within A) hold by construction.
struct EndoMap {
  std::vector<int> target;

  int operator()(int i) const { return target[i]; }
  int size() const { return static_cast<int>(target.size()); }

  bool operator==(const EndoMap&) const = default;
};

EndoMap make_endo_map(
    const RelatedSet& rel,
    const std::vector<std::pair<std::string, std::string>>& assignments);

// f^n(x); n = 0 gives x.
int apply_iter(const EndoMap& f, std::uint64_t n, int x);

// { f(x) | x in X }
ElemSet image(const EndoMap& f, ElemSet x);

}  // namespace relfix
