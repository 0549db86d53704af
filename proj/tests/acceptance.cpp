// Acceptance run: one PASS/FAIL line per criterion, details indented below.
//
// Exit status is 0 when the failing clauses are exactly the known-red set
// listed in kKnownRed (see README), so a regression anywhere else, or the
// known failure unexpectedly passing, still breaks the build.

#include <chrono>
#include <filesystem>
#include <iostream>
#include <set>
#include <sstream>

#include "icsi/analysis.hpp"
#include "icsi/errors.hpp"
#include "icsi/fixtures.hpp"
#include "icsi/graph_io.hpp"
#include "support.hpp"

using namespace icsi;
using Clock = std::chrono::steady_clock;

namespace {

const std::set<std::string> kKnownRed{"5b"};

struct Item {
  std::string name;
  ICStructure structure;
  std::optional<ExpectedRecord> expected;
};

std::set<std::string> failed;

void report(const std::string& id, bool ok, const std::string& title, const std::vector<std::string>& details = {}) {
  std::cout << (ok ? "PASS " : "FAIL ") << id << "  " << title << '\n';
  for (const auto& d : details) std::cout << "       " << d << '\n';
  if (!ok) failed.insert(id);
}

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

std::string set_text(const VertexSet& s) {
  std::string out = "{";
  for (Vertex v : s) out += (out.size() > 1 ? "," : "") + std::to_string(v);
  return out + "}";
}

bool valid_packing(const ICStructure& s, const CycleFamily& fam, const DisjointCycleResult& d) {
  for (std::size_t i = 0; i < d.chosen_cycles.size(); ++i) {
    for (std::size_t j = i + 1; j < d.chosen_cycles.size(); ++j) {
      if (fam.intersects(d.chosen_cycles[i], d.chosen_cycles[j])) return false;
    }
  }
  VertexSet removed = d.removed_vertices;
  removed.insert(s.inner().begin(), s.inner().end());
  return is_acyclic_after_removal(s.graph(), removed) && static_cast<int>(d.chosen_cycles.size()) == d.t &&
         static_cast<int>(d.removed_vertices.size()) == d.t;
}

void criterion1(const std::vector<Item>& fixtures) {
  struct Want {
    int t;
    std::optional<VertexSet> exact;    // S the example prints
    std::optional<VertexSet> allowed;  // S must lie inside this set
  };
  const std::vector<Want> wants{{1, std::nullopt, std::nullopt},
                                {1, VertexSet{8}, std::nullopt},
                                {1, std::nullopt, VertexSet{14}},
                                {2, VertexSet{13, 14}, std::nullopt},
                                {2, VertexSet{22, 19}, std::nullopt}};
  bool ok = true;
  std::vector<std::string> details;
  for (std::size_t i = 0; i < fixtures.size(); ++i) {
    const Item& it = fixtures[i];
    auto t0 = Clock::now();
    AnalysisReport r = analyze(it.structure);
    double secs = seconds_since(t0);
    const Want& w = wants[i];
    bool good = r.valid && r.disjoint && r.disjoint->t == w.t;
    std::string how;
    if (good) {
      const auto& d = *r.disjoint;
      bool packing_ok = valid_packing(it.structure, r.family, d);
      if (w.allowed) good = good && std::includes(w.allowed->begin(), w.allowed->end(), d.removed_vertices.begin(),
                                                  d.removed_vertices.end());
      if (w.exact && d.removed_vertices == *w.exact) {
        how = "S matches the example";
      } else {
        how = w.exact ? "S differs from the example " + set_text(*w.exact) + "; accepted on validity"
                      : "S checked for validity";
      }
      good = good && packing_ok && static_cast<int>(d.removed_vertices.size()) == w.t;
      details.push_back(it.name + ": t=" + std::to_string(d.t) + " S=" + set_text(d.removed_vertices) + ", " + how +
                        (packing_ok ? "" : ", INVALID packing") + ", " + std::to_string(secs) + " s");
    } else {
      details.push_back(it.name + ": analysis did not produce the expected t");
    }
    good = good && secs < 1.0;
    ok = ok && good;
  }
  report("1", ok, "fixture regression (t, S, < 1 s per fixture)", details);
}

void criterion2(const std::vector<Item>& fixtures) {
  bool ok = true;
  std::vector<std::string> details;
  for (std::size_t i = 0; i < fixtures.size(); ++i) {
    const Item& it = fixtures[i];
    CycleFamily fam = build_family(it.structure);
    std::vector<CycleIndex> want;
    if (i < 3) {
      for (CycleIndex c = 0; c < fam.size(); ++c) want.push_back(c);
    } else {
      want.push_back(label_to_index(*it.expected, fam, 1));
    }
    auto got = central_cycles(fam);
    bool good = got == want;
    ok = ok && good;
    details.push_back(it.name + ": " + std::to_string(got.size()) + " central of " + std::to_string(fam.size()) +
                      (good ? "" : " (mismatch)"));
  }
  report("2", ok, "central cycles (all for examples 1-3, only C_1 for 4-5)", details);
}

void criterion3_4_5(const std::vector<Item>& corpus, double generation_secs) {
  auto t0 = Clock::now();
  std::size_t oracle_ok = 0, lemma_ok = 0, rows_ok = 0, decode_ok = 0, sandwich_checked = 0, sandwich_ok = 0;
  std::size_t max_cycles = 0;
  std::vector<std::string> oracle_bad, lemma_bad, rows_bad, decode_bad, sandwich_notes;
  std::size_t undecodable_receivers = 0, receivers = 0;
  double oracle_secs = 0;

  for (const Item& it : corpus) {
    CycleFamily fam = build_family(it.structure);
    max_cycles = std::max(max_cycles, fam.size());
    auto to = Clock::now();
    try {
      DisjointCycleResult d = max_disjoint(fam);
      auto od = oracle_max_disjoint(fam);
      auto oh = oracle_min_hitting(fam);
      const auto t = static_cast<std::size_t>(d.t);
      if (od.size == t && oh.size == t && valid_packing(it.structure, fam, d)) {
        ++oracle_ok;
      } else {
        oracle_bad.push_back(it.name + ": t=" + std::to_string(t) + " oracle " + std::to_string(od.size) + "/" +
                             std::to_string(oh.size));
      }
    } catch (const std::exception& e) {
      oracle_bad.push_back(it.name + ": " + e.what());
    }
    oracle_secs += seconds_since(to);

    try {
      LemmaReport l = verify_lemmas(it.structure, fam);
      if (!l.any_violated()) {
        ++lemma_ok;
      } else {
        lemma_bad.push_back(it.name);
      }
    } catch (const std::exception& e) {
      lemma_bad.push_back(it.name + ": " + e.what());
    }

    IndexCode code = build_toj_code(it.structure);
    if (static_cast<int>(code.length()) == it.structure.vertex_count() - it.structure.inner_count() + 1) {
      ++rows_ok;
    } else {
      rows_bad.push_back(it.name);
    }
    auto rs = receivers_of(it.structure.graph());
    auto verdicts = check_decodable(code, rs);
    VertexSet bad;
    for (const auto& v : verdicts) {
      if (!v.decodable) bad.insert(v.receiver);
    }
    receivers += verdicts.size();
    undecodable_receivers += bad.size();
    if (bad.empty()) {
      ++decode_ok;
    } else if (decode_bad.size() < 6 || it.expected) {
      decode_bad.push_back(it.name + ": receivers " + set_text(bad) + " cannot decode");
    }

    if (it.expected) {
      if (it.structure.vertex_count() > OracleLimits{}.max_vertices) {
        sandwich_notes.push_back(it.name + ": MAIS skipped, " + std::to_string(it.structure.vertex_count()) +
                                 " vertices exceed the bound of " + std::to_string(OracleLimits{}.max_vertices));
      } else {
        ++sandwich_checked;
        int mais = oracle_mais(it.structure.graph()).order;
        LengthReport lr = length_report(it.structure, max_disjoint(fam).t, mais);
        if (lr.sandwich_holds) ++sandwich_ok;
        sandwich_notes.push_back(it.name + ": MAIS " + std::to_string(mais) + " <= " +
                                 std::to_string(lr.interlocked_bound) + " <= " + std::to_string(lr.toj_length) +
                                 (lr.sandwich_holds ? "" : " BROKEN"));
      }
    }
  }
  const double total = seconds_since(t0) + generation_secs;
  const std::size_t n = corpus.size();

  std::vector<std::string> d3{std::to_string(oracle_ok) + "/" + std::to_string(n) + " structures agree (largest family " +
                                  std::to_string(max_cycles) + " cycles)",
                              "corpus time " + std::to_string(total) + " s (generation " + std::to_string(generation_secs) +
                                  " s, oracles " + std::to_string(oracle_secs) + " s)"};
  d3.insert(d3.end(), oracle_bad.begin(), oracle_bad.end());
  report("3", oracle_ok == n && total < 60.0, "Algorithm 1 equals both oracles on the corpus, < 60 s", d3);

  std::vector<std::string> d4{std::to_string(lemma_ok) + "/" + std::to_string(n) + " structures without a violated verdict"};
  d4.insert(d4.end(), lemma_bad.begin(), lemma_bad.end());
  report("4", lemma_ok == n, "lemma and property verdicts never 'violated'", d4);

  const bool c5a = rows_ok == n;
  const bool c5b = decode_ok == n;
  const bool c5c = sandwich_ok == sandwich_checked;
  report("5", c5a && c5b && c5c, "code length, decodability and length ordering",
         {std::string(c5a ? "ok  " : "BAD ") + "5a: N-K+1 rows on " + std::to_string(rows_ok) + "/" + std::to_string(n),
          std::string(c5b ? "ok  " : "BAD ") + "5b: every receiver decodes on " + std::to_string(decode_ok) + "/" +
              std::to_string(n) + " structures (" + std::to_string(undecodable_receivers) + " of " +
              std::to_string(receivers) + " receivers fail)",
          std::string(c5c ? "ok  " : "BAD ") + "5c: mais <= N-K+2-t <= N-K+1 on " + std::to_string(sandwich_ok) + "/" +
              std::to_string(sandwich_checked) + " fixtures within the MAIS bound"});
  for (const auto& s : rows_bad) std::cout << "       5a: " << s << '\n';
  for (const auto& s : decode_bad) std::cout << "       5b: " << s << '\n';
  for (const auto& s : sandwich_notes) std::cout << "       5c: " << s << '\n';
  if (!c5a) failed.insert("5a");
  if (!c5b) failed.insert("5b");
  if (!c5c) failed.insert("5c");
  failed.erase("5");
}

void criterion6() {
  std::vector<std::string> details;
  bool ok = true;

  // ILC symmetry over cycles of random digraphs.
  std::mt19937_64 rng(6);
  std::size_t pairs = 0, asym = 0;
  for (int trial = 0; trial < 100; ++trial) {
    Digraph g = testing::random_digraph(8, 22, rng);
    auto cycles = enumerate_cycles(g);
    if (cycles.size() > 15) cycles.resize(15);
    for (const auto& a : cycles) {
      for (const auto& b : cycles) {
        ++pairs;
        if (share_single_path(a, b) != share_single_path(b, a)) ++asym;
      }
    }
  }
  ok = ok && asym == 0;
  details.push_back("ILC symmetry: " + std::to_string(pairs - asym) + "/" + std::to_string(pairs) + " ordered pairs");

  // Cycle enumeration against a bitmask count.
  int agree = 0;
  for (int trial = 0; trial < 100; ++trial) {
    const int n = 4 + static_cast<int>(rng() % 9);
    Digraph g = testing::random_digraph(n, 12 + static_cast<int>(rng() % 14), rng);
    std::map<VertexSet, std::size_t> mine;
    for (const auto& c : enumerate_cycles(g)) ++mine[c.vertex_set()];
    if (mine == testing::naive_cycle_counts(g)) ++agree;
  }
  ok = ok && agree == 100;
  details.push_back("cycle enumeration: " + std::to_string(agree) + "/100 random graphs (4-12 vertices)");

  // Decodability verdicts under row permutation.
  int stable = 0, total = 0;
  for (std::uint64_t seed = 1; seed <= 30; ++seed) {
    GeneratorConfig cfg;
    cfg.seed = seed;
    cfg.sharing_mode = static_cast<SharingMode>(seed % 3);
    ICStructure s = generate(cfg);
    IndexCode code = build_toj_code(s);
    auto rs = receivers_of(s.graph());
    auto base = check_decodable(code, rs);
    for (int k = 0; k < 3; ++k) {
      IndexCode shuffled = code;
      std::shuffle(shuffled.rows.begin(), shuffled.rows.end(), rng);
      auto again = check_decodable(shuffled, rs);
      bool same = true;
      for (std::size_t i = 0; i < base.size(); ++i) same = same && base[i].decodable == again[i].decodable;
      ++total;
      if (same) ++stable;
    }
  }
  ok = ok && stable == total;
  details.push_back("decodability under row permutation: " + std::to_string(stable) + "/" + std::to_string(total));

  // Generator determinism.
  int same = 0;
  for (std::uint64_t seed = 1; seed <= 30; ++seed) {
    GeneratorConfig cfg;
    cfg.seed = seed;
    cfg.sharing_mode = static_cast<SharingMode>(seed % 3);
    cfg.num_cycles = {1, 8};
    if (format_structure(generate(cfg)) == format_structure(generate(cfg))) ++same;
  }
  ok = ok && same == 30;
  details.push_back("generator determinism: " + std::to_string(same) + "/30 seeds");

  report("6", ok, "property tests", details);
}

}  // namespace

int main(int argc, char** argv) {
  std::filesystem::path dir = std::filesystem::path(ICSI_SOURCE_DIR) / "fixtures";
  if (argc > 1) dir = argv[1];

  std::vector<Item> fixtures;
  for (const auto& name : fixture_names()) {
    fixtures.push_back({name, read_structure(dir / (name + ".graph")), load_fixture(name).expected});
  }

  std::vector<Item> corpus = fixtures;
  auto t0 = Clock::now();
  for (std::uint64_t seed = 1; seed <= 200; ++seed) {
    GeneratorConfig cfg;
    cfg.seed = seed;
    cfg.sharing_mode = static_cast<SharingMode>(seed % 3);
    cfg.num_cycles = {1, 10};
    corpus.push_back({"seed " + std::to_string(seed) + " " + to_string(cfg.sharing_mode), generate(cfg), std::nullopt});
  }
  const double generation_secs = seconds_since(t0);
  std::cout << "corpus: " << fixtures.size() << " fixtures + 200 generated structures\n";

  criterion1(fixtures);
  criterion2(fixtures);
  criterion3_4_5(corpus, generation_secs);
  criterion6();

  std::string summary;
  for (const auto& f : failed) summary += (summary.empty() ? "" : ", ") + f;
  std::cout << "failing: " << (summary.empty() ? "none" : summary) << '\n';
  if (failed == kKnownRed) {
    std::cout << "only the documented known failure is red\n";
    return 0;
  }
  return 1;
}
