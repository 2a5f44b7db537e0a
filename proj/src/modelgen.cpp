#include "relfix/modelgen.hpp"

#include <cmath>
#include <sstream>

namespace relfix {

namespace {

std::string elem_name(int i) { return "a" + std::to_string(i + 1); }

void check_enum_cap(int n) {
  if (n < 0 || n > kMaxEnumerate)
    throw CapExceeded("enumeration cap is n <= " +
                      std::to_string(kMaxEnumerate));
}

}  // namespace

std::uint64_t related_set_count(int n) {
  return std::uint64_t(1) << (n * n);
}

std::uint64_t endo_map_count(int n) {
  std::uint64_t c = 1;
  for (int i = 0; i < n; ++i) c *= n;
  return c;
}

RelatedSet nth_related_set(int n, std::uint64_t code) {
  RelatedSet r;
  for (int i = 0; i < n; ++i) {
    r.names.push_back(elem_name(i));
    ElemSet row = 0;
    for (int j = 0; j < n; ++j)
      if ((code >> (i * n + j)) & 1) row |= bit(j);
    r.rows.push_back(row);
  }
  return r;
}

EndoMap nth_endo_map(int n, std::uint64_t code) {
  EndoMap f;
  f.target.assign(n, 0);
  for (int i = n - 1; i >= 0; --i) {
    f.target[i] = static_cast<int>(code % n);
    code /= n;
  }
  return f;
}

std::vector<RelatedSet> enumerate_related_sets(
    int n, const std::vector<Prop>& constraints) {
  check_enum_cap(n);
  std::vector<RelatedSet> out;
  for (std::uint64_t code = 0; code < related_set_count(n); ++code) {
    RelatedSet r = nth_related_set(n, code);
    bool ok = true;
    for (Prop p : constraints)
      if (!check_property(r, p)) { ok = false; break; }
    if (ok) out.push_back(std::move(r));
  }
  return out;
}

std::vector<EndoMap> enumerate_endo_maps(
    const RelatedSet& rel, const std::vector<MapCond>& constraints) {
  int n = rel.size();
  check_enum_cap(n);
  std::vector<EndoMap> out;
  for (std::uint64_t code = 0; code < endo_map_count(n); ++code) {
    EndoMap f = nth_endo_map(n, code);
    bool ok = true;
    for (MapCond c : constraints)
      if (!check_map_condition(rel, f, c)) { ok = false; break; }
    if (ok) out.push_back(std::move(f));
  }
  return out;
}

namespace {

RelatedSet powerset_instance(int k) {
  int n = 1 << k;
  if (n > kMaxCarrier) throw CapExceeded("powerset carrier exceeds cap");
  RelatedSet r;
  for (int i = 0; i < n; ++i) {
    std::string nm = "s";
    for (int b = 0; b < k; ++b) nm += (i >> b) & 1 ? 'a' + char(b) : '_';
    r.names.push_back(nm);
    ElemSet row = 0;
    for (int j = 0; j < n; ++j)
      if ((i & ~j) == 0) row |= bit(j);  // subset inclusion
    r.rows.push_back(row);
  }
  return r;
}

RelatedSet chain_instance(int k) {
  if (k > kMaxCarrier) throw CapExceeded("chain carrier exceeds cap");
  RelatedSet r;
  for (int i = 0; i < k; ++i) {
    r.names.push_back(elem_name(i));
    ElemSet row = 0;
    for (int j = i; j < k; ++j) row |= bit(j);
    r.rows.push_back(row);
  }
  return r;
}

RelatedSet divisors_instance(int k) {
  std::vector<int> divs;
  for (int d = 1; d <= k; ++d)
    if (k % d == 0) divs.push_back(d);
  if (static_cast<int>(divs.size()) > kMaxCarrier)
    throw CapExceeded("divisor carrier exceeds cap");
  RelatedSet r;
  for (size_t i = 0; i < divs.size(); ++i) {
    r.names.push_back("d" + std::to_string(divs[i]));
    ElemSet row = 0;
    for (size_t j = 0; j < divs.size(); ++j)
      if (divs[j] % divs[i] == 0) row |= bit(static_cast<int>(j));
    r.rows.push_back(row);
  }
  return r;
}

RelatedSet all_true_instance(int k) {
  if (k > kMaxCarrier) throw CapExceeded("carrier exceeds cap");
  RelatedSet r;
  for (int i = 0; i < k; ++i) {
    r.names.push_back(elem_name(i));
    r.rows.push_back(k ? (ElemSet(1) << k) - 1 : 0);
  }
  return r;
}

// Five-point sign lattice bot < {neg, zero, pos} < top, ordered by
// information, with the transfer map of the loop body "x := x + positive":
// abstractly s |-> join(s, pos). The loop invariant is its least fixed
// point, pos.
std::pair<RelatedSet, std::optional<EndoMap>> sign_analysis_instance() {
  enum { bot, neg, zero, pos, top };
  RelatedSet r = make_related_set(
      {"bot", "neg", "zero", "pos", "top"},
      {{"bot", "bot"}, {"bot", "neg"}, {"bot", "zero"}, {"bot", "pos"},
       {"bot", "top"}, {"neg", "neg"}, {"neg", "top"}, {"zero", "zero"},
       {"zero", "top"}, {"pos", "pos"}, {"pos", "top"}, {"top", "top"}});
  EndoMap f;
  f.target = {pos, top, top, pos, top};
  return {std::move(r), std::move(f)};
}

}  // namespace

std::pair<RelatedSet, std::optional<EndoMap>> standard_instance(
    const std::string& name) {
  std::istringstream in(name);
  std::string kind;
  in >> kind;
  if (kind == "sign_analysis") return sign_analysis_instance();
  int k = -1;
  in >> k;
  if (in.fail() || k < 0) throw ModelError("bad instance name: " + name);
  if (kind == "powerset") return {powerset_instance(k), std::nullopt};
  if (kind == "chain") return {chain_instance(k), std::nullopt};
  if (kind == "divisors") return {divisors_instance(k), std::nullopt};
  if (kind == "all_true") return {all_true_instance(k), std::nullopt};
  throw ModelError("unknown instance name: " + name);
}

RelatedSet random_instance(std::uint64_t seed, int n, double density) {
  if (n < 0 || n > kMaxCarrier) throw CapExceeded("carrier exceeds cap");
  std::uint64_t threshold =
      density >= 1.0 ? std::uint64_t(1) << 32
                     : std::uint64_t(density * 4294967296.0);
  std::uint64_t x = seed;
  RelatedSet r;
  for (int i = 0; i < n; ++i) {
    r.names.push_back(elem_name(i));
    ElemSet row = 0;
    for (int j = 0; j < n; ++j) {
      x = x * 6364136223846793005ull + 1442695040888963407ull;
      if ((x >> 32) < threshold) row |= bit(j);
    }
    r.rows.push_back(row);
  }
  return r;
}

std::uint64_t mix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ull;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
  return x ^ (x >> 31);
}

}  // namespace relfix
