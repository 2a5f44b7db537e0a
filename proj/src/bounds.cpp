#include "relfix/bounds.hpp"

namespace relfix {

ElemSet bounds_of(const RelatedSet& rel, ElemSet x) {
  ElemSet b = rel.full();
  ElemSet rest = x;
  while (rest) {
    int i = lowest_bit(rest);
    rest &= rest - 1;
    b &= rel.rows[i];
  }
  return b;
}

ElemSet extremes_of(const RelatedSet& rel, ElemSet x, Side side) {
  ElemSet out = 0;
  ElemSet rest = x;
  while (rest) {
    int e = lowest_bit(rest);
    rest &= rest - 1;
    bool ok = side == Side::greatest ? (bounds_of(rel, x) & bit(e)) != 0
                                     : (rel.rows[e] & x) == x;
    if (ok) out |= bit(e);
  }
  return out;
}

ElemSet extreme_bounds(const RelatedSet& rel, ElemSet x) {
  ElemSet b = bounds_of(rel, x);
  ElemSet out = 0;
  ElemSet rest = b;
  while (rest) {
    int e = lowest_bit(rest);
    rest &= rest - 1;
    if ((rel.rows[e] & b) == b) out |= bit(e);  // e below every bound
  }
  return out;
}

}  // namespace relfix
