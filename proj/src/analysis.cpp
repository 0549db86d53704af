#include "icsi/analysis.hpp"

#include <algorithm>
#include <sstream>

#include "icsi/errors.hpp"

namespace icsi {

using nlohmann::ordered_json;

bool AnalysisReport::all_decodable() const {
  return std::all_of(decoding.begin(), decoding.end(), [](const DecodeVerdict& d) { return d.decodable; });
}

namespace {

void run_code(const ICStructure& s, AnalysisReport& r) {
  r.code = build_toj_code(s);
  const auto receivers = receivers_of(s.graph());
  r.decoding = check_decodable(r.code, receivers);
}

}  // namespace

AnalysisReport analyze(const ICStructure& s, const AnalysisOptions& options) {
  AnalysisReport r;
  r.n = s.vertex_count();
  r.k = s.inner_count();
  r.validation = validate(s);

  const auto& v = r.validation;
  if (!v.condition1.holds) r.problems.push_back(std::to_string(v.condition1.uncovered.size()) + " arc(s) lie on no I-path");
  if (!v.condition2.holds) r.problems.push_back(std::to_string(v.condition2.cycles.size()) + " I-cycle(s)");
  if (!v.condition3.holds) {
    r.problems.push_back(std::to_string(v.condition3.offending.size()) + " inner pair(s) without a unique I-path");
  }
  if (!r.problems.empty()) return r;

  r.family = build_family(s);
  if (r.family.empty()) {
    r.valid = true;
    run_code(s, r);
    r.notices.push_back("no outer cycles; the interlocked bound does not apply");
    return r;
  }

  r.side_conditions = check_c1_c2(s, inner_partition(s, r.family.union_vertices()));
  r.ilc = check_ilc(r.family);
  if (!r.ilc->holds) {
    r.problems.push_back("outer cycles violate ILC");
    return r;
  }
  r.central = central_cycles(r.family);
  if (r.central.empty()) {
    r.problems.push_back("outer cycles have no central cycle");
    return r;
  }
  r.valid = true;
  r.lemmas = verify_lemmas(s, r.family);
  r.disjoint = max_disjoint(r.family);
  for (const auto& w : r.disjoint->warnings) r.notices.push_back(w);

  std::optional<int> mais;
  if (options.oracle) {
    OracleResult o;
    o.max_disjoint = oracle_max_disjoint(r.family, options.limits);
    o.min_hitting = oracle_min_hitting(r.family, options.limits);
    if (r.n <= options.limits.max_vertices) {
      o.mais = oracle_mais(s.graph(), options.limits);
      mais = o.mais->order;
    } else {
      r.notices.push_back("MAIS search skipped: " + std::to_string(r.n) + " vertices exceed the bound of " +
                          std::to_string(options.limits.max_vertices));
    }
    r.oracle = std::move(o);
  }

  run_code(s, r);
  r.length = length_report(s, r.disjoint->t, mais);
  return r;
}

ExpectedRecord describe(const ICStructure& s) {
  AnalysisReport r = analyze(s);
  if (!r.valid || !r.disjoint) throw PreconditionError("structure has no interlocked outer cycles to describe");
  ExpectedRecord e;
  e.n = r.n;
  e.k = r.k;
  e.inner = s.inner();
  for (const Cycle& c : r.family.cycles()) e.cycles.push_back(c.vertex_set());
  for (CycleIndex i = 0; i < r.family.size(); ++i) {
    for (CycleIndex j = i + 1; j < r.family.size(); ++j) {
      e.intersections[{static_cast<int>(i) + 1, static_cast<int>(j) + 1}] = r.family.intersection(i, j);
    }
  }
  for (CycleIndex c : r.central) e.central.push_back(static_cast<int>(c) + 1);
  e.all_common = r.lemmas->all_common;
  e.t = r.disjoint->t;
  for (CycleIndex c : r.disjoint->chosen_cycles) e.chosen_cycles.push_back(static_cast<int>(c) + 1);
  e.removed = r.disjoint->removed_vertices;
  for (const auto& entry : r.lemmas->lemma21_entries) {
    for (const Path& p : entry.unique_runs) {
      e.unique_runs.push_back({static_cast<int>(r.lemmas->central) + 1, static_cast<int>(entry.cycle) + 1,
                               p.front(), p.back()});
    }
  }
  for (const auto& entry : r.lemmas->lemma22_entries) {
    if (!entry.in_path || !entry.out_path) continue;
    e.entry_exit.push_back({static_cast<int>(entry.cycle) + 1, entry.in_path->front(), entry.in_path->back(),
                            entry.out_path->front(), entry.out_path->back()});
  }
  return e;
}

namespace {

ordered_json vertices(const std::vector<Vertex>& vs) { return ordered_json(vs); }
ordered_json vertices(const VertexSet& vs) { return ordered_json(std::vector<Vertex>(vs.begin(), vs.end())); }

ordered_json labels(const std::vector<CycleIndex>& cs) {
  ordered_json out = ordered_json::array();
  for (CycleIndex c : cs) out.push_back(c + 1);
  return out;
}

ordered_json arc_list(const std::vector<Arc>& arcs) {
  ordered_json out = ordered_json::array();
  for (const Arc& a : arcs) out.push_back({a.from, a.to});
  return out;
}

ordered_json cycle_list(const std::vector<Cycle>& cycles) {
  ordered_json out = ordered_json::array();
  for (const Cycle& c : cycles) out.push_back(vertices(c.vertices()));
  return out;
}

ordered_json optional_path(const std::optional<Path>& p) {
  return p ? vertices(p->vertices) : ordered_json(nullptr);
}

ordered_json side_condition(const SideConditionVerdict& v) {
  ordered_json j;
  j["holds"] = v.holds;
  if (v.witness) {
    const auto& w = *v.witness;
    j["witness"] = {{"p", w.p}, {"q", w.q}, {"u", w.u}, {"v", w.v}, {"shared", w.shared},
                    {"endpoint_only", w.endpoint_only}};
  } else {
    j["witness"] = nullptr;
  }
  return j;
}

ordered_json lemmas_json(const LemmaReport& l) {
  ordered_json j;
  j["central"] = l.central + 1;
  j["all_common"] = vertices(l.all_common);
  j["verdicts"] = {{"lemma2.1", to_string(l.lemma21)}, {"lemma2.2", to_string(l.lemma22)},
                   {"lemma2.3", to_string(l.lemma23)}, {"lemma2.4", to_string(l.lemma24)},
                   {"lemma2.5", to_string(l.lemma25)}, {"P1", to_string(l.p1)},
                   {"P2", to_string(l.p2)}};
  j["lemma2.3_all_cycles"] = l.lemma23_unscoped;

  ordered_json runs = ordered_json::array();
  for (const auto& e : l.lemma21_entries) {
    ordered_json paths = ordered_json::array();
    for (const Path& p : e.unique_runs) paths.push_back(vertices(p.vertices));
    runs.push_back({{"cycle", e.cycle + 1}, {"verdict", to_string(e.verdict)}, {"unique_runs", paths}});
  }
  j["unique_runs"] = runs;

  ordered_json entries = ordered_json::array();
  for (const auto& e : l.lemma22_entries) {
    entries.push_back({{"cycle", e.cycle + 1},
                       {"exclusive", vertices(e.exclusive)},
                       {"in_path", optional_path(e.in_path)},
                       {"out_path", optional_path(e.out_path)},
                       {"verdict", to_string(e.verdict)}});
  }
  j["entry_exit"] = entries;

  ordered_json groups = ordered_json::array();
  for (const auto& e : l.lemma23_entries) {
    groups.push_back({{"cycle", e.cycle + 1}, {"group", labels(e.group)}, {"common", vertices(e.common)}});
  }
  j["common_groups"] = groups;
  return j;
}

ordered_json disjoint_json(const DisjointCycleResult& d) {
  ordered_json j;
  j["t"] = d.t;
  j["shortcut"] = d.shortcut;
  j["central"] = d.central ? ordered_json(*d.central + 1) : ordered_json(nullptr);
  j["chosen_cycles"] = labels(d.chosen_cycles);
  j["removed_vertices"] = vertices(d.removed_vertices);
  ordered_json trace = ordered_json::array();
  for (const auto& step : d.trace) {
    trace.push_back({{"cycle", step.chosen_cycle + 1},
                     {"vertex", step.chosen_vertex},
                     {"fallback", step.used_fallback},
                     {"removed_cycles", labels(step.removed_cycles)}});
  }
  j["trace"] = trace;
  return j;
}

ordered_json oracle_json(const OracleResult& o, int t) {
  ordered_json j;
  j["max_disjoint"] = {{"size", o.max_disjoint.size}, {"subfamily", labels(o.max_disjoint.subfamily)}};
  j["min_hitting"] = {{"size", o.min_hitting.size}, {"vertices", vertices(o.min_hitting.vertices)}};
  if (o.mais) {
    j["mais"] = {{"order", o.mais->order}, {"acyclic_set", vertices(o.mais->acyclic_set)}};
  } else {
    j["mais"] = nullptr;
  }
  const auto tt = static_cast<std::size_t>(t);
  j["agrees"] = o.max_disjoint.size == tt && o.min_hitting.size == tt;
  return j;
}

ordered_json code_json(const AnalysisReport& r) {
  ordered_json j;
  j["length"] = r.code.length();
  ordered_json rows = ordered_json::array();
  for (const auto& row : r.code.rows) {
    ordered_json support = ordered_json::array();
    for (std::size_t i : row.coefficients.support()) support.push_back(i + 1);
    rows.push_back({{"kind", row.kind == IndexCode::RowKind::inner_xor ? "inner-xor" : "non-inner"},
                    {"vertex", row.vertex == 0 ? ordered_json(nullptr) : ordered_json(row.vertex)},
                    {"support", support}});
  }
  j["rows"] = rows;
  j["all_decodable"] = r.all_decodable();
  ordered_json failed = ordered_json::array();
  ordered_json decoding = ordered_json::array();
  for (const auto& d : r.decoding) {
    if (!d.decodable) failed.push_back(d.receiver);
    ordered_json entry;
    entry["receiver"] = d.receiver;
    entry["decodable"] = d.decodable;
    ordered_json used = ordered_json::array();
    for (std::size_t i : d.rows_used) used.push_back(i + 1);
    entry["rows"] = used;
    entry["side_information"] = vertices(d.side_info_used);
    decoding.push_back(std::move(entry));
  }
  j["undecodable"] = failed;
  j["decoding"] = decoding;
  return j;
}

std::string join(const VertexSet& vs) {
  std::string out = "{";
  for (Vertex v : vs) out += (out.size() > 1 ? "," : "") + std::to_string(v);
  return out + "}";
}

std::string join_labels(const std::vector<CycleIndex>& cs) {
  std::string out = "{";
  for (CycleIndex c : cs) out += (out.size() > 1 ? "," : "") + std::string("C_") + std::to_string(c + 1);
  return out + "}";
}

}  // namespace

ordered_json to_json(const AnalysisReport& r) {
  ordered_json j;
  j["n"] = r.n;
  j["k"] = r.k;
  j["valid"] = r.valid;
  j["problems"] = r.problems;
  j["notices"] = r.notices;

  const auto& v = r.validation;
  ordered_json offending = ordered_json::array();
  for (const auto& pc : v.condition3.offending) {
    offending.push_back({{"from", pc.from}, {"to", pc.to}, {"count", pc.count}});
  }
  j["validation"] = {
      {"condition1", {{"holds", v.condition1.holds}, {"uncovered", arc_list(v.condition1.uncovered)}}},
      {"condition2", {{"holds", v.condition2.holds}, {"i_cycles", cycle_list(v.condition2.cycles)}}},
      {"condition3", {{"holds", v.condition3.holds}, {"offending", offending}}},
      {"condition4", {{"holds", v.condition4.holds}, {"outer_cycle_count", v.condition4.cycles.size()}}}};

  if (r.side_conditions) {
    j["side_conditions"] = {{"C1", side_condition(r.side_conditions->c1)},
                            {"C2", side_condition(r.side_conditions->c2)}};
  }

  if (!r.family.empty()) {
    ordered_json fam;
    fam["cycles"] = cycle_list(r.family.cycles());
    ordered_json inter = ordered_json::array();
    for (CycleIndex a = 0; a < r.family.size(); ++a) {
      for (CycleIndex b = a + 1; b < r.family.size(); ++b) {
        inter.push_back({{"i", a + 1}, {"j", b + 1}, {"vertices", vertices(r.family.intersection(a, b))}});
      }
    }
    fam["intersections"] = inter;
    ordered_json excl = ordered_json::array();
    for (CycleIndex a = 0; a < r.family.size(); ++a) excl.push_back(vertices(r.family.exclusive(a)));
    fam["exclusive"] = excl;
    fam["union_vertices"] = vertices(r.family.union_vertices());
    if (r.ilc) {
      ordered_json violations = ordered_json::array();
      for (const auto& iv : r.ilc->violations) {
        violations.push_back({{"i", iv.first + 1}, {"j", iv.second + 1}, {"shared", vertices(iv.shared)},
                              {"reason", iv.reason}});
      }
      fam["ilc"] = {{"holds", r.ilc->holds}, {"violations", violations}};
    }
    fam["central"] = labels(r.central);
    j["family"] = fam;
  }

  if (r.lemmas) j["lemmas"] = lemmas_json(*r.lemmas);
  if (r.disjoint) j["disjoint"] = disjoint_json(*r.disjoint);
  if (r.oracle) j["oracle"] = oracle_json(*r.oracle, r.disjoint ? r.disjoint->t : 0);
  if (r.valid) j["code"] = code_json(r);
  if (r.length) {
    j["length"] = {{"toj_length", r.length->toj_length},
                   {"interlocked_bound", r.length->interlocked_bound},
                   {"savings", r.length->savings},
                   {"mais", r.length->mais ? ordered_json(*r.length->mais) : ordered_json(nullptr)},
                   {"sandwich_holds", r.length->sandwich_holds}};
  } else if (r.valid) {
    j["length"] = {{"toj_length", static_cast<int>(r.code.length())}};
  }
  return j;
}

std::string format_text(const AnalysisReport& r) {
  std::ostringstream os;
  const auto& v = r.validation;
  os << "N=" << r.n << " K=" << r.k << '\n';
  os << "conditions: 1 " << (v.condition1.holds ? "holds" : "violated") << ", 2 "
     << (v.condition2.holds ? "holds" : "violated") << ", 3 " << (v.condition3.holds ? "holds" : "violated")
     << ", 4 " << (v.condition4.holds ? "holds" : "violated") << '\n';
  for (const auto& p : r.problems) os << "invalid: " << p << '\n';

  if (!r.family.empty()) {
    os << "outer cycles:\n";
    for (CycleIndex i = 0; i < r.family.size(); ++i) {
      os << "  C_" << i + 1 << " = " << to_string(r.family.cycle(i)) << '\n';
    }
    for (CycleIndex a = 0; a < r.family.size(); ++a) {
      for (CycleIndex b = a + 1; b < r.family.size(); ++b) {
        os << "  V_{" << a + 1 << ',' << b + 1 << "} = " << join(r.family.intersection(a, b)) << '\n';
      }
    }
    if (r.ilc) os << "ILC: " << (r.ilc->holds ? "holds" : "violated") << '\n';
    if (r.ilc && r.ilc->holds) os << "central cycles: " << join_labels(r.central) << '\n';
  }
  if (r.side_conditions) {
    os << "C1: " << (r.side_conditions->c1.holds ? "holds" : "fails") << ", C2: "
       << (r.side_conditions->c2.holds ? "holds" : "fails") << '\n';
  }
  if (r.lemmas) {
    const auto& l = *r.lemmas;
    os << "lemmas (central C_" << l.central + 1 << "): 2.1 " << to_string(l.lemma21) << ", 2.2 "
       << to_string(l.lemma22) << ", 2.3 " << to_string(l.lemma23) << ", 2.4 " << to_string(l.lemma24)
       << ", 2.5 " << to_string(l.lemma25) << ", P1 " << to_string(l.p1) << ", P2 " << to_string(l.p2)
       << '\n';
  }
  if (r.disjoint) {
    const auto& d = *r.disjoint;
    os << "t=" << d.t << " C^S=" << join_labels(d.chosen_cycles) << " S=" << join(d.removed_vertices)
       << (d.shortcut ? " (common vertex)" : "") << '\n';
  }
  if (r.oracle) {
    os << "oracle: max disjoint " << r.oracle->max_disjoint.size << ", min hitting "
       << r.oracle->min_hitting.size;
    if (r.oracle->mais) os << ", MAIS " << r.oracle->mais->order;
    os << '\n';
  }
  if (r.valid) {
    os << "code: " << r.code.length() << " symbols, ";
    std::vector<Vertex> failed;
    for (const auto& d : r.decoding) {
      if (!d.decodable) failed.push_back(d.receiver);
    }
    if (failed.empty()) {
      os << "all receivers decode\n";
    } else {
      os << "undecodable receivers " << join(VertexSet(failed.begin(), failed.end())) << '\n';
    }
  }
  if (r.length) {
    os << "length: toj " << r.length->toj_length << ", interlocked bound " << r.length->interlocked_bound
       << ", savings " << r.length->savings;
    if (r.length->mais) os << ", MAIS " << *r.length->mais << (r.length->sandwich_holds ? "" : " (ORDER BROKEN)");
    os << '\n';
  }
  for (const auto& n : r.notices) os << "note: " << n << '\n';
  return os.str();
}

ordered_json to_json(const ExpectedRecord& e) {
  ordered_json j;
  j["n"] = e.n;
  j["k"] = e.k;
  j["inner"] = vertices(e.inner);
  ordered_json cycles = ordered_json::array();
  for (const auto& c : e.cycles) cycles.push_back(vertices(c));
  j["cycles"] = cycles;
  ordered_json inter = ordered_json::array();
  for (const auto& [key, vs] : e.intersections) {
    inter.push_back({{"i", key.first}, {"j", key.second}, {"vertices", vertices(vs)}});
  }
  j["intersections"] = inter;
  j["central"] = e.central;
  j["all_common"] = vertices(e.all_common);
  j["t"] = e.t;
  j["chosen_cycles"] = e.chosen_cycles;
  j["removed"] = vertices(e.removed);
  ordered_json runs = ordered_json::array();
  for (const auto& u : e.unique_runs) {
    runs.push_back({{"central", u.central}, {"cycle", u.cycle}, {"from", u.from}, {"to", u.to}});
  }
  j["unique_runs"] = runs;
  ordered_json ee = ordered_json::array();
  for (const auto& x : e.entry_exit) {
    ee.push_back({{"cycle", x.cycle}, {"in", {x.in_from, x.in_to}}, {"out", {x.out_from, x.out_to}}});
  }
  j["entry_exit"] = ee;
  j["notes"] = e.notes;
  return j;
}

}  // namespace icsi
