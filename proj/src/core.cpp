#include "relfix/core.hpp"

#include <unordered_map>

namespace relfix {

int RelatedSet::index_of(const std::string& label) const {
  for (int i = 0; i < size(); ++i)
    if (names[i] == label) return i;
  return -1;
}

RelatedSet make_related_set(
    const std::vector<std::string>& names,
    const std::vector<std::pair<std::string, std::string>>& edges) {
  if (static_cast<int>(names.size()) > kMaxCarrier)
    throw CapExceeded("carrier size " + std::to_string(names.size()) +
                      " exceeds cap " + std::to_string(kMaxCarrier));
  std::unordered_map<std::string, int> index;
  for (int i = 0; i < static_cast<int>(names.size()); ++i) {
    if (!index.emplace(names[i], i).second)
      throw ModelError("duplicate element label: " + names[i]);
  }
  RelatedSet rel;
  rel.names = names;
  rel.rows.assign(names.size(), 0u);
  for (const auto& [a, b] : edges) {
    auto ia = index.find(a);
    auto ib = index.find(b);
    if (ia == index.end()) throw ModelError("edge endpoint not in carrier: " + a);
    if (ib == index.end()) throw ModelError("edge endpoint not in carrier: " + b);
    rel.rows[ia->second] |= bit(ib->second);  // duplicate edges idempotent
  }
  return rel;
}

RelatedSet derived_relation(const RelatedSet& rel, RelationView kind) {
  int n = rel.size();
  RelatedSet out;
  out.names = rel.names;
  out.rows.assign(n, 0u);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      bool v = false;
      switch (kind) {
        case RelationView::dual: v = rel.le(j, i); break;
        case RelationView::strict: v = rel.lt(i, j); break;
        case RelationView::similarity: v = rel.sim(i, j); break;
      }
      if (v) out.rows[i] |= bit(j);
    }
  return out;
}

RelatedSet restrict_to(const RelatedSet& rel, ElemSet domain,
                       std::vector<int>* back_map) {
  RelatedSet out;
  std::vector<int> back;
  for (int i = 0; i < rel.size(); ++i)
    if (domain & bit(i)) {
      back.push_back(i);
      out.names.push_back(rel.names[i]);
    }
  int m = static_cast<int>(back.size());
  out.rows.assign(m, 0u);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      if (rel.le(back[i], back[j])) out.rows[i] |= bit(j);
  if (back_map) *back_map = std::move(back);
  return out;
}

EndoMap make_endo_map(
    const RelatedSet& rel,
    const std::vector<std::pair<std::string, std::string>>& assignments) {
  int n = rel.size();
  EndoMap f;
  f.target.assign(n, -1);
  for (const auto& [src, dst] : assignments) {
    int is = rel.index_of(src);
    int id = rel.index_of(dst);
    if (is < 0) throw ModelError("unknown element label: " + src);
    if (id < 0) throw ModelError("unknown element label: " + dst);
    if (f.target[is] != -1)
      throw ModelError("duplicate assignment for element: " + src);
    f.target[is] = id;
  }
  for (int i = 0; i < n; ++i)
    if (f.target[i] == -1)
      throw ModelError("missing assignment for element: " + rel.names[i]);
  return f;
}

int apply_iter(const EndoMap& f, std::uint64_t n, int x) {
  for (std::uint64_t k = 0; k < n; ++k) x = f(x);
  return x;
}

ElemSet image(const EndoMap& f, ElemSet x) {
  ElemSet out = 0;
  while (x) {
    int i = lowest_bit(x);
    x &= x - 1;
    out |= bit(f(i));
  }
  return out;
}

}  // namespace relfix
