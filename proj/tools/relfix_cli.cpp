#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "relfix/bounds.hpp"
#include "relfix/classes.hpp"
#include "relfix/fix.hpp"
#include "relfix/props.hpp"
#include "relfix/search.hpp"
#include "relfix/textio.hpp"

using nlohmann::json;
using namespace relfix;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFalse = 1;
constexpr int kExitUsage = 2;
constexpr int kExitInput = 3;
constexpr int kExitInternal = 4;

Model load_model(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ModelError("cannot open file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_model(buf.str());
}

const RelatedSet& need_relset(const Model& m, const std::string& name) {
  const NamedRelSet* r = m.find_relset(name);
  if (!r) throw ModelError("no relset named '" + name + "'");
  return r->rel;
}

std::vector<std::string> labels_of(const RelatedSet& rel, ElemSet s) {
  std::vector<std::string> out;
  for (ElemSet t = s; t;) {
    int e = lowest_bit(t);
    t &= t - 1;
    out.push_back(rel.names[e]);
  }
  return out;
}

json witness_json(const RelatedSet& rel, const Witness& w) {
  json j;
  j["holds"] = w.holds;
  if (!w.holds) {
    json elems = json::array();
    for (int e : w.elems) elems.push_back(rel.names[e]);
    j["elems"] = elems;
    if (w.subset) j["subset"] = labels_of(rel, *w.subset);
  }
  return j;
}

json instance_json(const Instance& inst) {
  json j;
  j["elements"] = inst.rel.names;
  json le = json::array();
  for (int i = 0; i < inst.rel.size(); ++i)
    for (int k = 0; k < inst.rel.size(); ++k)
      if (inst.rel.le(i, k))
        le.push_back({inst.rel.names[i], inst.rel.names[k]});
  j["le"] = le;
  if (inst.f) {
    json f = json::object();
    for (int i = 0; i < inst.rel.size(); ++i)
      f[inst.rel.names[i]] = inst.rel.names[(*inst.f)(i)];
    j["map"] = f;
  }
  if (inst.bot) j["bottom"] = inst.rel.names[*inst.bot];
  return j;
}

void emit(const json& j) { std::cout << j.dump(2) << "\n"; }

std::string instance_text(const Instance& inst) {
  Model m;
  m.relsets.push_back({"A", inst.rel});
  if (inst.f) m.maps.push_back({"f", "A", *inst.f});
  std::string out = serialize_model(m);
  if (inst.bot) out += "# bottom: " + inst.rel.names[*inst.bot] + "\n";
  return out;
}

json report_json(const Report& r) {
  json j;
  j["id"] = r.id;
  switch (r.verdict) {
    case Report::Verdict::refuted:
      j["verdict"] = "refuted";
      break;
    case Report::Verdict::no_counterexample:
      j["verdict"] = "no-counterexample";
      break;
    case Report::Verdict::verified:
      j["verdict"] = "verified";
      break;
  }
  if (r.counterexample) j["instance"] = instance_json(*r.counterexample);
  j["counts"] = {{"examined", r.examined},
                 {"max_size", r.max_n},
                 {"budget", r.budget}};
  // millis deliberately omitted: reports must be byte-identical across runs
  return j;
}

int cmd_check(const Model& m, const std::string& relset,
              const std::string& props, bool as_json) {
  const RelatedSet& rel = need_relset(m, relset);
  std::vector<Prop> wanted;
  bool all = props == "all";
  if (all) {
    wanted.assign(std::begin(kAllProps), std::end(kAllProps));
  } else {
    std::stringstream ss(props);
    std::string item;
    while (std::getline(ss, item, ',')) {
      auto p = prop_from_string(item);
      if (!p) throw ModelError("unknown property: " + item);
      wanted.push_back(*p);
    }
  }
  bool ok = true;
  json jprops = json::object();
  for (Prop p : wanted) {
    Witness w = check_property(rel, p);
    if (!w.holds) ok = false;
    if (as_json) {
      jprops[std::string(to_string(p))] = witness_json(rel, w);
    } else {
      std::cout << to_string(p) << ": " << (w.holds ? "yes" : "no");
      if (!w.holds && !w.elems.empty()) {
        std::cout << "  (witness:";
        for (int e : w.elems) std::cout << " " << rel.names[e];
        std::cout << ")";
      } else if (!w.holds && w.subset) {
        std::cout << "  (witness subset: {";
        bool first = true;
        for (const auto& l : labels_of(rel, *w.subset)) {
          std::cout << (first ? "" : ", ") << l;
          first = false;
        }
        std::cout << "})";
      }
      std::cout << "\n";
    }
  }
  if (as_json) {
    json j;
    j["verdict"] = ok;
    j["props"] = jprops;
    emit(j);
  }
  return all || ok ? kExitOk : kExitFalse;
}

int cmd_complete(const Model& m, const std::string& relset,
                 const std::string& cls_name, bool as_json) {
  const RelatedSet& rel = need_relset(m, relset);
  auto cls = class_from_string(cls_name);
  if (!cls) throw ModelError("unknown class: " + cls_name);
  Witness w = check_complete(rel, *cls);
  if (as_json) {
    json j;
    j["verdict"] = w.holds;
    j["witness"] = witness_json(rel, w);
    emit(j);
  } else if (w.holds) {
    std::cout << relset << " is " << cls_name << "-complete\n";
  } else {
    std::cout << relset << " is not " << cls_name
              << "-complete; subset without supremum: {";
    bool first = true;
    for (const auto& l : labels_of(rel, *w.subset)) {
      std::cout << (first ? "" : ", ") << l;
      first = false;
    }
    std::cout << "}\n";
  }
  return w.holds ? kExitOk : kExitFalse;
}

int cmd_fixpoint(const Model& m, const std::string& map_name,
                 const std::string& engine, const std::string& bottom,
                 bool as_json) {
  const NamedMap* nm = m.find_map(map_name);
  if (!nm) throw ModelError("no map named '" + map_name + "'");
  const RelatedSet& rel = need_relset(m, nm->relset);
  const EndoMap& f = nm->map;
  json trace = json::array();
  json j;
  j["engine"] = engine;
  if (engine == "sm") {
    ElemSet core = sm_core_set(rel, f);
    int p = sm_qfp(rel, f);
    trace.push_back({{"core", labels_of(rel, core)}});
    trace.push_back({{"suprema", labels_of(rel, extreme_bounds(rel, core))}});
    j["point"] = rel.names[p];
    j["check"] = "f " + rel.names[p] + " ~ " + rel.names[p];
  } else if (engine == "derivation") {
    Derivation d = build_derivable(rel, f);
    for (std::size_t i = 0; i < d.seq.size(); ++i) {
      json step;
      step["elem"] = rel.names[d.seq[i]];
      if (d.kinds[i].kind == Derivation::Step::successor) {
        step["kind"] = "successor";
        step["pred"] = rel.names[d.kinds[i].pred];
      } else {
        step["kind"] = "limit";
      }
      trace.push_back(step);
    }
    int p = derivation_fp(rel, f);
    j["point"] = rel.names[p];
    j["check"] = "f " + rel.names[p] + " = " + rel.names[p];
  } else if (engine == "quotient") {
    Quotient q = build_quotient(rel, &f);
    for (const ElemSet& cls : q.members)
      trace.push_back({{"class", labels_of(rel, cls)}});
    int c = least_qfp_attractive(rel, f);
    j["point"] = rel.names[c];
    j["check"] = "f " + rel.names[c] + " ~ " + rel.names[c] + " (least)";
  } else if (engine == "kleene") {
    ElemSet bots = bottoms(rel);
    int bot;
    if (!bottom.empty()) {
      bot = rel.index_of(bottom);
      if (bot < 0) throw ModelError("unknown element: " + bottom);
    } else {
      if (bots == 0)
        throw PreconditionViolation("precondition failed: bottom element");
      bot = lowest_bit(bots);
    }
    ElemSet fn = kleene_iterates(rel, f, bot);
    ElemSet sups = kleene_qfps(rel, f, bot);
    trace.push_back({{"bottom", rel.names[bot]}});
    trace.push_back({{"iterates", labels_of(rel, fn)}});
    json pts = json::array();
    for (const auto& l : labels_of(rel, sups)) pts.push_back(l);
    j["point"] = pts;
    j["check"] = "every supremum s of the iterates has f s ~ s";
  } else {
    throw ModelError("unknown engine: " + engine);
  }
  j["trace"] = trace;
  if (as_json) {
    emit(j);
  } else {
    std::cout << "engine: " << engine << "\n";
    if (j["point"].is_array()) {
      std::cout << "points:";
      for (const auto& p : j["point"]) std::cout << " " << p.get<std::string>();
      std::cout << "\n";
    } else {
      std::cout << "point: " << j["point"].get<std::string>() << "\n";
    }
    std::cout << "check: " << j["check"].get<std::string>() << "\n";
    std::cout << "trace: " << trace.dump() << "\n";
  }
  return kExitOk;
}

int cmd_search(const Model& m, const std::string& conj_name, int max_n,
               std::uint64_t budget, int jobs, bool as_json) {
  const NamedConjecture* nc = m.find_conjecture(conj_name);
  if (!nc) throw ModelError("no conjecture named '" + conj_name + "'");
  Report r = find_counterexample(nc->conjecture, max_n, budget, jobs);
  if (as_json) {
    emit(report_json(r));
  } else if (r.verdict == Report::Verdict::refuted) {
    std::cout << "refuted: " << r.id << " (examined " << r.examined
              << " instances)\n"
              << instance_text(*r.counterexample);
  } else {
    std::cout << "no counterexample: " << r.id << " (examined " << r.examined
              << " instances up to size " << r.max_n << ")\n";
  }
  return r.verdict == Report::Verdict::refuted ? kExitFalse : kExitOk;
}

int cmd_verify(int max_n, std::uint64_t budget, std::uint64_t seed, int jobs,
               bool as_json) {
  std::vector<Report> reports = verify_theorems(max_n, budget, seed, jobs);
  bool ok = true;
  json out = json::array();
  for (const Report& r : reports) {
    if (r.verdict != Report::Verdict::verified) ok = false;
    if (as_json) {
      out.push_back(report_json(r));
    } else {
      std::cout << r.id << ": "
                << (r.verdict == Report::Verdict::verified ? "verified"
                                                           : "VIOLATED")
                << " (" << r.examined << " instances)\n";
      if (r.counterexample) std::cout << instance_text(*r.counterexample);
    }
  }
  if (as_json) emit(out);
  return ok ? kExitOk : kExitFalse;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"finite-model toolkit for fixed points over binary relations"};
  app.require_subcommand(1);

  std::string file, relset, map_name, props = "all", cls, engine, bottom,
              conj;
  int max_n = 3, jobs = 1;
  std::uint64_t budget = 1000000000000ull, seed = 0;
  bool as_json = false;

  auto* check = app.add_subcommand("check", "classify a related set");
  check->add_option("file", file)->required();
  check->add_option("--relset", relset)->required();
  check->add_option("--props", props);
  check->add_flag("--json", as_json);

  auto* complete = app.add_subcommand("complete", "completeness check");
  complete->add_option("file", file)->required();
  complete->add_option("--relset", relset)->required();
  complete->add_option("--class", cls)->required();
  complete->add_flag("--json", as_json);

  auto* fixpoint = app.add_subcommand("fixpoint", "run a fixed-point engine");
  fixpoint->add_option("file", file)->required();
  fixpoint->add_option("--relset", relset)->required();
  fixpoint->add_option("--map", map_name)->required();
  fixpoint->add_option("--engine", engine)->required();
  fixpoint->add_option("--bottom", bottom);
  fixpoint->add_flag("--json", as_json);

  auto* search = app.add_subcommand("search", "refute a conjecture");
  search->add_option("file", file)->required();
  search->add_option("--conjecture", conj)->required();
  search->add_option("--max-size", max_n)->required();
  search->add_option("--budget", budget);
  search->add_option("--seed", seed);
  search->add_option("--jobs", jobs);
  search->add_flag("--json", as_json);

  auto* verify = app.add_subcommand("verify-theorems", "bulk theorem check");
  verify->add_option("--max-size", max_n);
  verify->add_option("--budget", budget);
  verify->add_option("--seed", seed);
  verify->add_option("--jobs", jobs);
  verify->add_flag("--json", as_json);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (check->parsed())
      return cmd_check(load_model(file), relset, props, as_json);
    if (complete->parsed())
      return cmd_complete(load_model(file), relset, cls, as_json);
    if (fixpoint->parsed()) {
      Model m = load_model(file);
      const NamedMap* nm = m.find_map(map_name);
      if (nm && nm->relset != relset)
        throw ModelError("map '" + map_name + "' is not over relset '" +
                         relset + "'");
      return cmd_fixpoint(m, map_name, engine, bottom, as_json);
    }
    if (search->parsed())
      return cmd_search(load_model(file), conj, max_n, budget, jobs, as_json);
    if (verify->parsed())
      return cmd_verify(max_n, budget, seed, jobs, as_json);
  } catch (const InternalFailure& e) {
    std::cerr << "internal failure: " << e.what() << "\n";
    return kExitInternal;
  } catch (const PreconditionViolation& e) {
    std::cerr << e.what() << "\n";
    return kExitFalse;
  } catch (const HypothesisViolation& e) {
    std::cerr << "hypothesis violation: " << e.what() << "\n";
    return kExitFalse;
  } catch (const PartitionFailure& e) {
    std::cerr << "partition failure: " << e.what() << "\n";
    return kExitFalse;
  } catch (const ParseError& e) {
    std::cerr << file << ":" << e.what() << "\n";
    return kExitInput;
  } catch (const std::runtime_error& e) {  // ModelError, CapExceeded, IO
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  }
  return kExitUsage;
}
