#include "relfix/search.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <functional>
#include <thread>

#include "relfix/bounds.hpp"
#include "relfix/fix.hpp"
#include "relfix/modelgen.hpp"

namespace relfix {

bool Atom::needs_map() const {
  switch (kind) {
    case Kind::prop:
    case Kind::complete:
    case Kind::has_bottom:
      return false;
    default:
      return true;
  }
}

bool Atom::needs_bottom() const {
  return kind == Kind::kleene_sups_are_least_qfps;
}

bool Conjecture::needs_map() const {
  for (const Atom& a : assume)
    if (a.needs_map()) return true;
  return conclude.needs_map();
}

bool Conjecture::needs_bottom() const {
  for (const Atom& a : assume)
    if (a.needs_bottom()) return true;
  return conclude.needs_bottom();
}

std::string to_string(const Atom& a) {
  switch (a.kind) {
    case Atom::Kind::prop:
      return std::string(to_string(a.prop));
    case Atom::Kind::map_cond:
      return std::string(to_string(a.cond));
    case Atom::Kind::complete:
      return std::string(to_string(a.cls)) + "_complete";
    case Atom::Kind::has_bottom:
      return "has_bottom";
    case Atom::Kind::exists_strict_fp:
      return "exists_strict_fp";
    case Atom::Kind::exists_qfp:
      return "exists_qfp";
    case Atom::Kind::exists_least_fp:
      return "exists_least_fp";
    case Atom::Kind::exists_least_qfp:
      return "exists_least_qfp";
    case Atom::Kind::qfp_set_complete:
      return "qfp_set_" + std::string(to_string(a.cls)) + "_complete";
    case Atom::Kind::kleene_sups_are_least_qfps:
      return "kleene_sups_are_least_qfps";
  }
  return "?";
}

std::optional<Atom> atom_from_string(std::string_view s) {
  if (auto p = prop_from_string(s)) return Atom::of(*p);
  if (auto c = map_cond_from_string(s)) return Atom::of(*c);
  for (SubsetClass cls : kAllClasses) {
    if (s == std::string(to_string(cls)) + "_complete")
      return Atom::complete(cls);
    if (s == "qfp_set_" + std::string(to_string(cls)) + "_complete")
      return Atom::qfp_complete(cls);
  }
  if (s == "has_bottom") return Atom::of(Atom::Kind::has_bottom);
  if (s == "exists_strict_fp") return Atom::of(Atom::Kind::exists_strict_fp);
  if (s == "exists_qfp") return Atom::of(Atom::Kind::exists_qfp);
  if (s == "exists_least_fp") return Atom::of(Atom::Kind::exists_least_fp);
  if (s == "exists_least_qfp") return Atom::of(Atom::Kind::exists_least_qfp);
  if (s == "kleene_sups_are_least_qfps")
    return Atom::of(Atom::Kind::kleene_sups_are_least_qfps);
  return std::nullopt;
}

namespace {

// Least elements of s within s.
ElemSet least_of(const RelatedSet& rel, ElemSet s) {
  ElemSet out = 0;
  for (ElemSet t = s; t;) {
    int e = lowest_bit(t);
    t &= t - 1;
    if ((rel.rows[e] & s) == s) out |= bit(e);
  }
  return out;
}

}  // namespace

bool eval_atom(const Instance& inst, const Atom& a) {
  const RelatedSet& rel = inst.rel;
  switch (a.kind) {
    case Atom::Kind::prop:
      return bool(check_property(rel, a.prop));
    case Atom::Kind::map_cond:
      return bool(check_map_condition(rel, *inst.f, a.cond));
    case Atom::Kind::complete:
      return bool(check_complete(rel, a.cls));
    case Atom::Kind::has_bottom:
      return bottoms(rel) != 0;
    case Atom::Kind::exists_strict_fp:
      return strict_fixed_points(rel, *inst.f) != 0;
    case Atom::Kind::exists_qfp:
      return quasi_fixed_points(rel, *inst.f) != 0;
    case Atom::Kind::exists_least_fp:
      return least_of(rel, strict_fixed_points(rel, *inst.f)) != 0;
    case Atom::Kind::exists_least_qfp:
      return least_of(rel, quasi_fixed_points(rel, *inst.f)) != 0;
    case Atom::Kind::qfp_set_complete:
      return bool(verify_qfp_complete(rel, *inst.f, a.cls, 0, false));
    case Atom::Kind::kleene_sups_are_least_qfps: {
      std::optional<int> bot = inst.bot;
      if (!bot) {
        ElemSet b = bottoms(rel);
        if (b == 0) return false;
        bot = lowest_bit(b);
      }
      ElemSet sups = extreme_bounds(rel, kleene_iterates(rel, *inst.f, *bot));
      return sups == least_of(rel, quasi_fixed_points(rel, *inst.f));
    }
  }
  return false;
}

namespace {

// Cheap syntactic checks first, completeness scans last.
int atom_cost(const Atom& a) {
  switch (a.kind) {
    case Atom::Kind::prop:
      return 0;
    case Atom::Kind::has_bottom:
      return 1;
    case Atom::Kind::map_cond:
      return a.cond == MapCond::omega_continuous ||
                     a.cond == MapCond::scott_continuous
                 ? 4
                 : 2;
    case Atom::Kind::complete:
      return 3;
    default:
      return 5;
  }
}

struct ChunkResult {
  std::uint64_t filtered = 0;  // hypothesis-satisfying instances seen,
                               // up to and including the first failure
  std::optional<Instance> fail;
  std::uint64_t fail_ordinal = 0;  // 0-based among filtered instances
};

// Scans relation codes [lo, hi) with maps nested inside; stops the chunk at
// its first failing instance.
ChunkResult scan_rel_range(int n, std::uint64_t lo, std::uint64_t hi,
                           const std::vector<Atom>& rel_atoms,
                           const std::vector<Atom>& map_atoms, bool with_map,
                           bool with_bottom,
                           const std::function<bool(const Instance&)>& test) {
  ChunkResult res;
  std::uint64_t map_count = with_map ? endo_map_count(n) : 1;
  for (std::uint64_t rc = lo; rc < hi; ++rc) {
    Instance inst{nth_related_set(n, rc), std::nullopt, std::nullopt};
    bool rel_ok = true;
    for (const Atom& a : rel_atoms)
      if (!eval_atom(inst, a)) { rel_ok = false; break; }
    if (!rel_ok) continue;
    if (with_bottom) {
      ElemSet b = bottoms(inst.rel);
      if (b) inst.bot = lowest_bit(b);
    }
    for (std::uint64_t mc = 0; mc < map_count; ++mc) {
      if (with_map) inst.f = nth_endo_map(n, mc);
      bool ok = true;
      for (const Atom& a : map_atoms)
        if (!eval_atom(inst, a)) { ok = false; break; }
      if (!ok) continue;
      res.filtered++;
      if (!test(inst)) {
        res.fail = inst;
        res.fail_ordinal = res.filtered - 1;
        return res;
      }
    }
  }
  return res;
}

template <typename Scan>
std::vector<ChunkResult> run_chunks(std::uint64_t total, int jobs,
                                    std::uint64_t chunk_size,
                                    const Scan& scan) {
  std::uint64_t nchunks = (total + chunk_size - 1) / chunk_size;
  std::vector<ChunkResult> results(nchunks);
  if (jobs <= 1 || nchunks <= 1) {
    for (std::uint64_t i = 0; i < nchunks; ++i)
      results[i] =
          scan(i * chunk_size, std::min(total, (i + 1) * chunk_size));
    return results;
  }
  std::atomic<std::uint64_t> next{0};
  auto worker = [&] {
    for (std::uint64_t i; (i = next.fetch_add(1)) < nchunks;)
      results[i] =
          scan(i * chunk_size, std::min(total, (i + 1) * chunk_size));
  };
  std::vector<std::thread> pool;
  for (int t = 0; t < jobs; ++t) pool.emplace_back(worker);
  for (auto& th : pool) th.join();
  return results;
}

// Sequential fold over chunk results in index order; reproduces the
// single-threaded scan exactly, so reports are identical for any jobs
// count. Returns true to keep scanning further sizes.
struct FoldState {
  std::uint64_t consumed = 0;
  std::optional<Instance> fail;
  bool budget_hit = false;
};

void fold_chunks(FoldState& st, const std::vector<ChunkResult>& chunks,
                 std::uint64_t budget) {
  for (const ChunkResult& c : chunks) {
    if (c.fail) {
      if (st.consumed + c.fail_ordinal < budget) {
        st.consumed += c.fail_ordinal + 1;
        st.fail = c.fail;
      } else {
        st.consumed = budget;
        st.budget_hit = true;
      }
      return;
    }
    if (st.consumed + c.filtered >= budget) {
      st.consumed = budget;
      st.budget_hit = true;
      return;
    }
    st.consumed += c.filtered;
  }
}

struct SplitAtoms {
  std::vector<Atom> rel_atoms, map_atoms;
};

SplitAtoms split_atoms(const std::vector<Atom>& atoms) {
  SplitAtoms out;
  for (const Atom& a : atoms)
    (a.needs_map() ? out.map_atoms : out.rel_atoms).push_back(a);
  auto by_cost = [](const Atom& x, const Atom& y) {
    return atom_cost(x) < atom_cost(y);
  };
  std::stable_sort(out.rel_atoms.begin(), out.rel_atoms.end(), by_cost);
  std::stable_sort(out.map_atoms.begin(), out.map_atoms.end(), by_cost);
  return out;
}

std::uint64_t now_millis(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration_cast<std::chrono::milliseconds>(
             std::chrono::steady_clock::now() - t0)
      .count();
}

}  // namespace

Report find_counterexample(const Conjecture& c, int max_n,
                           std::uint64_t budget, int jobs) {
  if (max_n > kMaxEnumerate)
    throw CapExceeded("find_counterexample cap is max_n <= " +
                      std::to_string(kMaxEnumerate));
  auto t0 = std::chrono::steady_clock::now();
  SplitAtoms atoms = split_atoms(c.assume);
  bool with_map = c.needs_map();
  bool with_bottom = c.needs_bottom();
  auto test = [&](const Instance& inst) { return eval_atom(inst, c.conclude); };
  FoldState st;
  for (int n = 1; n <= max_n && !st.fail && !st.budget_hit; ++n) {
    std::uint64_t rel_count = related_set_count(n);
    std::uint64_t chunk = std::max<std::uint64_t>(1, rel_count / 64);
    auto scan = [&](std::uint64_t lo, std::uint64_t hi) {
      return scan_rel_range(n, lo, hi, atoms.rel_atoms, atoms.map_atoms,
                            with_map, with_bottom, test);
    };
    fold_chunks(st, run_chunks(rel_count, jobs, chunk, scan), budget);
  }
  Report r;
  r.id = c.id;
  r.max_n = max_n;
  r.budget = budget;
  r.examined = st.consumed;
  if (st.fail) {
    // re-validate before reporting: no false counterexamples
    for (const Atom& a : c.assume)
      if (!eval_atom(*st.fail, a))
        throw InternalFailure("counterexample fails an assumption");
    if (eval_atom(*st.fail, c.conclude))
      throw InternalFailure("counterexample satisfies the conclusion");
    r.verdict = Report::Verdict::refuted;
    r.counterexample = st.fail;
  } else {
    r.verdict = Report::Verdict::no_counterexample;
  }
  r.millis = now_millis(t0);
  return r;
}

namespace {

struct TheoremEntry {
  std::string name;
  bool with_map;
  bool with_bottom;
  std::vector<Atom> hyps;
  std::function<bool(const Instance&)> check;
};

bool check_entailments(const Instance& inst) {
  for (const EntailmentEdge& e : entailment_edges()) {
    bool prem = true;
    for (Prop p : e.premises)
      if (!check_property(inst.rel, p)) { prem = false; break; }
    if (prem && !check_property(inst.rel, e.conclusion)) return false;
  }
  return true;
}

std::vector<TheoremEntry> theorem_table() {
  using K = Atom::Kind;
  auto C = [](SubsetClass c) { return Atom::complete(c); };
  std::vector<TheoremEntry> t;
  t.push_back({"complete_infl_mono_imp_ex_qfp", true, false,
               {C(SubsetClass::All), Atom::of(MapCond::pointwise_infl_or_mono)},
               [](const Instance& i) {
                 int c = sm_qfp(i.rel, *i.f, false);
                 return i.rel.sim((*i.f)(c), c);
               }});
  t.push_back({"complete_infl_mono_imp_ex_fp", true, false,
               {C(SubsetClass::All), Atom::of(Prop::antisymmetric),
                Atom::of(MapCond::pointwise_infl_or_mono)},
               [](const Instance& i) {
                 return strict_fixed_points(i.rel, *i.f) != 0;
               }});
  t.push_back({"well_complete_infl_imp_ex_fixed_point", true, false,
               {C(SubsetClass::WellRelated), Atom::of(Prop::reflexive),
                Atom::of(Prop::antisymmetric),
                Atom::of(MapCond::inflationary_variant)},
               [](const Instance& i) {
                 int p = derivation_fp(i.rel, *i.f, false);
                 return (*i.f)(p) == p;
               }});
  t.push_back({"mono_imp_ex_least_fp", true, false,
               {C(SubsetClass::WellRelated), Atom::of(Prop::antisymmetric),
                Atom::of(MapCond::monotone)},
               [](const Instance& i) {
                 int p = least_fp_mono(i.rel, *i.f, false);
                 ElemSet fps = strict_fixed_points(i.rel, *i.f);
                 return (fps & bit(p)) && (i.rel.rows[p] & fps) == fps;
               }});
  t.push_back({"attract_mono_imp_least_qfp", true, false,
               {C(SubsetClass::WellRelated), Atom::of(Prop::attractive),
                Atom::of(MapCond::monotone)},
               [](const Instance& i) {
                 int c = least_qfp_attractive(i.rel, *i.f, false);
                 ElemSet q = quasi_fixed_points(i.rel, *i.f) |
                             strict_fixed_points(i.rel, *i.f);
                 return i.rel.sim((*i.f)(c), c) && (i.rel.rows[c] & q) == q;
               }});
  t.push_back({"mono_imp_qfp_complete", true, false,
               {C(SubsetClass::All), Atom::of(Prop::attractive),
                Atom::of(MapCond::monotone)},
               [](const Instance& i) {
                 return bool(verify_qfp_complete(i.rel, *i.f, SubsetClass::All,
                                                 0, false));
               }});
  for (SubsetClass cls : {SubsetClass::Connex, SubsetClass::Directed,
                          SubsetClass::WellRelated}) {
    t.push_back({"mono_imp_fp_" + std::string(to_string(cls)) + "_complete",
                 true, false,
                 {C(cls), Atom::of(Prop::antisymmetric),
                  Atom::of(MapCond::monotone)},
                 [cls](const Instance& i) {
                   return bool(verify_qfp_complete(
                       i.rel, *i.f, cls, strict_fixed_points(i.rel, *i.f),
                       false));
                 }});
  }
  t.push_back({"complete_dual", false, false,
               {C(SubsetClass::All)},
               [](const Instance& i) {
                 return bool(check_complete(
                     derived_relation(i.rel, RelationView::dual),
                     SubsetClass::All));
               }});
  t.push_back({"sublocale_entailments", false, false, {}, check_entailments});
  t.push_back({"scott_continuous_imp_omega_continuous", true, false,
               {Atom::of(MapCond::scott_continuous)},
               [](const Instance& i) {
                 return bool(check_map_condition(i.rel, *i.f,
                                                 MapCond::omega_continuous));
               }});
  t.push_back({"omega_continuous_imp_mono_refl", true, false,
               {Atom::of(MapCond::omega_continuous)},
               [](const Instance& i) {
                 const RelatedSet& r = i.rel;
                 for (int x = 0; x < r.size(); ++x)
                   for (int y = 0; y < r.size(); ++y)
                     if (r.le(x, x) && r.le(x, y) && r.le(y, y) &&
                         !r.le((*i.f)(x), (*i.f)(y)))
                       return false;
                 return true;
               }});
  t.push_back({"kleene_qfp", true, true,
               {C(SubsetClass::OmegaRange), Atom::of(K::has_bottom),
                Atom::of(MapCond::omega_continuous)},
               [](const Instance& i) {
                 kleene_qfps(i.rel, *i.f, *i.bot, false);  // self-validating
                 if (check_property(i.rel, Prop::attractive))
                   return bool(
                       kleene_least_equivalence(i.rel, *i.f, *i.bot, false));
                 return true;
               }});
  return t;
}

// Counter-based sampled scan for sizes whose code space is too large to
// enumerate. Each counter decodes independently, so ranges parallelize.
ChunkResult scan_sample_range(int n, std::uint64_t lo, std::uint64_t hi,
                              std::uint64_t stream,
                              const std::vector<Atom>& rel_atoms,
                              const std::vector<Atom>& map_atoms,
                              bool with_map, bool with_bottom,
                              const std::function<bool(const Instance&)>& test) {
  static constexpr double kDensities[] = {0.25, 0.5, 0.75, 0.95};
  ChunkResult res;
  std::uint64_t map_count = with_map ? endo_map_count(n) : 1;
  for (std::uint64_t t = lo; t < hi; ++t) {
    std::uint64_t u = mix64(stream + t);
    Instance inst{random_instance(u, n, kDensities[t & 3]), std::nullopt,
                  std::nullopt};
    bool ok = true;
    for (const Atom& a : rel_atoms)
      if (!eval_atom(inst, a)) { ok = false; break; }
    if (!ok) continue;
    if (with_bottom) {
      ElemSet b = bottoms(inst.rel);
      if (b) inst.bot = lowest_bit(b);
    }
    if (with_map)
      inst.f = nth_endo_map(n, mix64(u ^ 0x517cc1b727220a95ull) % map_count);
    for (const Atom& a : map_atoms)
      if (!eval_atom(inst, a)) { ok = false; break; }
    if (!ok) continue;
    res.filtered++;
    if (!test(inst)) {
      res.fail = inst;
      res.fail_ordinal = res.filtered - 1;
      return res;
    }
  }
  return res;
}

// Exhaustive while the pre-filter code space stays within this bound.
constexpr std::uint64_t kExhaustiveSpace = std::uint64_t(1) << 20;

}  // namespace

std::vector<std::string> theorem_names() {
  std::vector<std::string> out;
  for (const TheoremEntry& e : theorem_table()) out.emplace_back(e.name);
  return out;
}

std::vector<Report> verify_theorems(int max_n, std::uint64_t budget,
                                    std::uint64_t seed, int jobs) {
  if (max_n > kMaxCarrier) throw CapExceeded("max_n exceeds carrier cap");
  std::vector<Report> reports;
  std::vector<TheoremEntry> table = theorem_table();
  for (std::size_t e = 0; e < table.size(); ++e) {
    const TheoremEntry& entry = table[e];
    auto t0 = std::chrono::steady_clock::now();
    SplitAtoms atoms = split_atoms(entry.hyps);
    FoldState st;
    for (int n = 1; n <= max_n && !st.fail && !st.budget_hit; ++n) {
      std::uint64_t rel_count = related_set_count(n);
      std::uint64_t space =
          rel_count * (entry.with_map ? endo_map_count(n) : 1);
      if (space <= kExhaustiveSpace) {
        auto scan = [&](std::uint64_t lo, std::uint64_t hi) {
          return scan_rel_range(n, lo, hi, atoms.rel_atoms, atoms.map_atoms,
                                entry.with_map, entry.with_bottom,
                                entry.check);
        };
        std::uint64_t chunk = std::max<std::uint64_t>(1, rel_count / 64);
        fold_chunks(st, run_chunks(rel_count, jobs, chunk, scan), budget);
      } else {
        std::uint64_t draws = budget > (std::uint64_t(1) << 40)
                                  ? (std::uint64_t(1) << 24)
                                  : budget * 100;
        std::uint64_t stream =
            mix64(seed ^ mix64(e * 1000003ull + std::uint64_t(n)));
        auto scan = [&](std::uint64_t lo, std::uint64_t hi) {
          return scan_sample_range(n, lo, hi, stream, atoms.rel_atoms,
                                   atoms.map_atoms, entry.with_map,
                                   entry.with_bottom, entry.check);
        };
        std::uint64_t chunk = std::max<std::uint64_t>(1, draws / 256);
        fold_chunks(st, run_chunks(draws, jobs, chunk, scan), budget);
      }
    }
    Report r;
    r.id = entry.name;
    r.max_n = max_n;
    r.budget = budget;
    r.examined = st.consumed;
    if (st.fail) {
      r.verdict = Report::Verdict::refuted;
      r.counterexample = st.fail;
    } else {
      r.verdict = Report::Verdict::verified;
    }
    r.millis = now_millis(t0);
    reports.push_back(std::move(r));
  }
  return reports;
}

}  // namespace relfix
