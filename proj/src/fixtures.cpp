#include "icsi/fixtures.hpp"

#include <algorithm>
#include <array>
#include <random>
#include <set>
#include <stdexcept>

#include "icsi/errors.hpp"

namespace icsi {

namespace {

// How a worked example is laid out. Outer cycles and entry/exit arcs come
// from the example itself; the remaining inner pairs are completed with one
// I-path each (a direct arc, or a detour through one of the example's
// non-cycle non-inner vertices).
struct ExampleLayout {
  int n = 0;
  int k = 0;
  std::vector<std::vector<Vertex>> cycles;
  std::vector<Arc> entries;
  std::vector<Arc> exits;
  std::vector<std::array<Vertex, 3>> routed;  // inner, non-inner, inner
};

Fixture assemble(std::string name, const ExampleLayout& layout, ExpectedRecord expected) {
  Digraph g(layout.n);
  ArcNotes notes;
  auto add = [&](Vertex u, Vertex v, const std::string& note) {
    if (g.ensure_arc(u, v)) {
      notes[{u, v}] = note;
    } else {
      notes[{u, v}] += ", " + note.substr(note.rfind(' ') + 1);
    }
  };

  for (std::size_t c = 0; c < layout.cycles.size(); ++c) {
    const auto& seq = layout.cycles[c];
    for (std::size_t i = 0; i < seq.size(); ++i) {
      add(seq[i], seq[(i + 1) % seq.size()], "outer cycle C_" + std::to_string(c + 1));
    }
  }
  VertexSet out_terminals, in_terminals;
  for (const Arc& a : layout.entries) {
    add(a.from, a.to, "quoted entry path");
    out_terminals.insert(a.from);
  }
  for (const Arc& a : layout.exits) {
    add(a.from, a.to, "quoted exit path");
    in_terminals.insert(a.to);
  }

  VertexSet inner;
  for (Vertex v = 1; v <= layout.k; ++v) inner.insert(v);
  for (Vertex i : inner) {
    for (Vertex j : inner) {
      if (i == j || (out_terminals.count(i) && in_terminals.count(j))) continue;
      auto route = std::find_if(layout.routed.begin(), layout.routed.end(),
                                [&](const auto& r) { return r[0] == i && r[2] == j; });
      if (route != layout.routed.end()) {
        add(i, (*route)[1], "reconstructed route through a non-cycle vertex");
        add((*route)[1], j, "reconstructed route through a non-cycle vertex");
      } else {
        add(i, j, "reconstructed direct inner arc");
      }
    }
  }
  return Fixture{std::move(name), ICStructure(std::move(g), std::move(inner)), std::move(expected),
                 std::move(notes)};
}

VertexSet range_set(Vertex lo, Vertex hi) {
  VertexSet s;
  for (Vertex v = lo; v <= hi; ++v) s.insert(v);
  return s;
}

Fixture example1() {
  ExampleLayout layout;
  layout.n = 17;
  layout.k = 6;
  layout.cycles = {{11, 12, 15, 16, 17}, {11, 12, 10, 9, 8}, {11, 12, 13, 14}};
  layout.entries = {{1, 10}, {2, 13}, {3, 15}};
  layout.exits = {{9, 4}, {14, 5}, {16, 6}};
  layout.routed = {{4, 7, 1}};

  ExpectedRecord e;
  e.n = 17;
  e.k = 6;
  e.inner = range_set(1, 6);
  e.cycles = {{11, 12, 15, 16, 17}, {11, 12, 10, 9, 8}, {11, 12, 13, 14}};
  e.intersections = {{{1, 2}, {11, 12}}, {{1, 3}, {11, 12}}, {{2, 3}, {11, 12}}};
  e.central = {1, 2, 3};
  e.all_common = {11, 12};
  e.t = 1;
  e.chosen_cycles = {1};
  e.removed = {11};
  for (int c = 1; c <= 3; ++c) {
    for (int k = 1; k <= 3; ++k) {
      if (k != c) e.unique_runs.push_back({c, k, 12, 11});
    }
  }
  e.entry_exit = {{2, 1, 10, 9, 4}, {3, 2, 13, 14, 5}, {1, 3, 15, 16, 6}};
  return assemble("example1", layout, std::move(e));
}

Fixture example2() {
  ExampleLayout layout;
  layout.n = 14;
  layout.k = 6;
  layout.cycles = {{8, 9, 10}, {8, 11, 12}, {8, 13, 14}};
  layout.entries = {{3, 9}, {2, 11}, {1, 13}};
  layout.exits = {{10, 5}, {12, 4}, {14, 6}};
  layout.routed = {{4, 7, 1}};

  ExpectedRecord e;
  e.n = 14;
  e.k = 6;
  e.inner = range_set(1, 6);
  e.cycles = {{8, 9, 10}, {8, 11, 12}, {8, 13, 14}};
  e.intersections = {{{1, 2}, {8}}, {{1, 3}, {8}}, {{2, 3}, {8}}};
  e.central = {1, 2, 3};
  e.all_common = {8};
  e.t = 1;
  e.chosen_cycles = {1};
  e.removed = {8};
  for (int c = 1; c <= 3; ++c) {
    for (int k = 1; k <= 3; ++k) {
      // "Cycle C_k except the vertex 8": the whole cycle, leaving and re-entering 8.
      if (k != c) e.unique_runs.push_back({c, k, 8, 8});
    }
  }
  e.entry_exit = {{2, 2, 11, 12, 4}, {3, 1, 13, 14, 6}, {1, 3, 9, 10, 5}};
  return assemble("example2", layout, std::move(e));
}

Fixture example3() {
  ExampleLayout layout;
  layout.n = 19;
  layout.k = 6;
  layout.cycles = {{13, 14, 10, 11, 12}, {13, 14, 15, 18, 19}, {14, 15, 16, 17}};
  layout.entries = {{3, 11}, {1, 18}, {2, 16}};
  layout.exits = {{12, 6}, {19, 4}, {17, 5}};
  layout.routed = {{4, 7, 1}, {5, 8, 2}, {6, 9, 3}};

  ExpectedRecord e;
  e.n = 19;
  e.k = 6;
  e.inner = range_set(1, 6);
  e.cycles = {{10, 11, 12, 13, 14}, {13, 14, 15, 18, 19}, {14, 15, 16, 17}};
  e.intersections = {{{1, 2}, {13, 14}}, {{1, 3}, {14}}, {{2, 3}, {14, 15}}};
  e.central = {1, 2, 3};
  e.all_common = {14};
  e.t = 1;
  e.chosen_cycles = {1};
  e.removed = {14};
  e.unique_runs = {{1, 2, 15, 13}, {1, 3, 15, 14}, {2, 1, 14, 13},
                   {2, 3, 15, 14}, {3, 1, 14, 13}, {3, 2, 15, 13}};
  e.entry_exit = {{2, 1, 18, 19, 4}, {3, 2, 16, 17, 5}, {1, 3, 11, 12, 6}};
  return assemble("example3", layout, std::move(e));
}

Fixture example4() {
  ExampleLayout layout;
  layout.n = 18;
  layout.k = 6;
  layout.cycles = {{12, 13, 14, 15}, {12, 13, 10, 11}, {14, 15, 16, 17}, {13, 9, 18}};
  layout.entries = {{1, 10}, {3, 16}, {2, 9}};
  layout.exits = {{11, 6}, {17, 5}, {18, 4}};
  layout.routed = {{4, 7, 1}, {5, 8, 2}};

  ExpectedRecord e;
  e.n = 18;
  e.k = 6;
  e.inner = range_set(1, 6);
  e.cycles = {{12, 13, 14, 15}, {10, 11, 12, 13}, {14, 15, 16, 17}, {9, 13, 18}};
  e.intersections = {{{1, 2}, {12, 13}}, {{1, 3}, {14, 15}}, {{1, 4}, {13}},
                     {{2, 3}, {}},       {{2, 4}, {13}},     {{3, 4}, {}}};
  e.central = {1};
  e.all_common = {};
  e.t = 2;
  e.chosen_cycles = {2, 3};
  e.removed = {13, 14};
  e.unique_runs = {{1, 2, 13, 12}, {1, 3, 15, 14}, {1, 4, 13, 13}};
  e.entry_exit = {{2, 1, 10, 11, 6}, {3, 3, 16, 17, 5}, {4, 2, 9, 18, 4}};
  e.notes = {
      "The example lists V_{2,3} = {13} and V_{2,4} = {}; the listed vertex sets give "
      "V_{2,3} = {} and V_{2,4} = {13}, which also matches the later remark that C_2, C_1 "
      "and C_4 share vertex 13. The record uses the values implied by the vertex sets."};
  return assemble("example4", layout, std::move(e));
}

Fixture example5() {
  ExampleLayout layout;
  layout.n = 33;
  layout.k = 8;
  layout.cycles = {{13, 14, 15, 16, 17, 18, 19, 20, 21, 22},
                   {20, 21, 22, 23, 24, 25, 26, 27, 28, 29},
                   {13, 30, 31, 22},
                   {18, 19, 33, 32}};
  layout.entries = {{3, 28}, {1, 30}, {2, 33}};
  layout.exits = {{29, 5}, {31, 6}, {32, 4}};
  layout.routed = {{4, 9, 1}, {5, 10, 2}, {6, 11, 3}, {7, 12, 8}};

  ExpectedRecord e;
  e.n = 33;
  e.k = 8;
  e.inner = range_set(1, 8);
  e.cycles = {range_set(13, 22), range_set(20, 29), {13, 22, 30, 31}, {18, 19, 32, 33}};
  e.intersections = {{{1, 2}, {20, 21, 22}}, {{1, 3}, {13, 22}}, {{1, 4}, {18, 19}},
                     {{2, 3}, {22}},         {{2, 4}, {}},       {{3, 4}, {}}};
  e.central = {1};
  e.all_common = {};
  e.t = 2;
  e.chosen_cycles = {3, 4};
  e.removed = {19, 22};
  e.unique_runs = {{1, 2, 22, 20}, {1, 3, 13, 22}, {1, 4, 19, 18}};
  e.entry_exit = {{2, 3, 28, 29, 5}, {3, 1, 30, 31, 6}, {4, 2, 33, 32, 4}};
  return assemble("example5", layout, std::move(e));
}

}  // namespace

const std::vector<std::string>& fixture_names() {
  static const std::vector<std::string> names{"example1", "example2", "example3", "example4",
                                              "example5"};
  return names;
}

Fixture load_fixture(std::string_view name) {
  if (name == "example1") return example1();
  if (name == "example2") return example2();
  if (name == "example3") return example3();
  if (name == "example4") return example4();
  if (name == "example5") return example5();
  throw std::out_of_range("unknown fixture '" + std::string(name) + "'");
}

CycleIndex label_to_index(const ExpectedRecord& expected, const CycleFamily& fam, int label) {
  const VertexSet& wanted = expected.cycles.at(static_cast<std::size_t>(label - 1));
  for (CycleIndex i = 0; i < fam.size(); ++i) {
    if (fam.vertex_set(i) == wanted) return i;
  }
  throw std::out_of_range("no cycle matches label C_" + std::to_string(label));
}

std::string to_string(SharingMode mode) {
  switch (mode) {
    case SharingMode::shared_path_all:
      return "shared-path-all";
    case SharingMode::shared_vertex_all:
      return "shared-vertex-all";
    case SharingMode::chained_through_central:
      return "chained-through-central";
  }
  return "unknown";
}

SharingMode parse_sharing_mode(std::string_view name) {
  for (SharingMode m : {SharingMode::shared_path_all, SharingMode::shared_vertex_all,
                        SharingMode::chained_through_central}) {
    if (name == to_string(m)) return m;
  }
  throw std::invalid_argument("unknown sharing mode '" + std::string(name) + "'");
}

std::optional<std::string> rejection_reason(const ICStructure& s) {
  ICValidationReport report = validate(s);
  if (!report.condition1.holds) return "an arc lies on no I-path";
  if (!report.condition2.holds) return "an I-cycle exists";
  if (!report.condition3.holds) return "an inner pair lacks a unique I-path";
  CycleFamily fam = build_family(s);
  if (fam.empty()) return "no outer cycles";
  if (!check_ilc(fam).holds) return "outer cycles violate ILC";
  if (central_cycles(fam).empty()) return "outer cycles have no central cycle";
  LemmaReport lemmas = verify_lemmas(s, fam);
  if (lemmas.lemma22 == Verdict::violated) return "a non-central cycle lacks entry or exit paths";
  return std::nullopt;
}

namespace {

// Portable draws: std distributions differ between standard libraries.
class Draw {
 public:
  explicit Draw(std::uint64_t seed) : engine_(seed) {}

  int between(int lo, int hi) {
    if (hi <= lo) return lo;
    return lo + static_cast<int>(engine_() % static_cast<std::uint64_t>(hi - lo + 1));
  }
  bool chance(int numerator, int denominator) { return between(1, denominator) <= numerator; }
  template <typename T>
  const T& pick(const std::vector<T>& items) {
    return items[static_cast<std::size_t>(between(0, static_cast<int>(items.size()) - 1))];
  }

 private:
  std::mt19937_64 engine_;
};

// Vertices are created with provisional ids and renumbered at the end so the
// inner vertices come first, as in the worked examples.
class Sketch {
 public:
  int add_inner() {
    kinds_.push_back(true);
    return static_cast<int>(kinds_.size()) - 1;
  }
  int add_non_inner() {
    kinds_.push_back(false);
    return static_cast<int>(kinds_.size()) - 1;
  }
  void arc(int u, int v) { arcs_.insert({u, v}); }

  ICStructure finish() const {
    std::vector<Vertex> label(kinds_.size());
    Vertex next = 1;
    for (std::size_t i = 0; i < kinds_.size(); ++i) {
      if (kinds_[i]) label[i] = next++;
    }
    VertexSet inner;
    for (Vertex v = 1; v < next; ++v) inner.insert(v);
    for (std::size_t i = 0; i < kinds_.size(); ++i) {
      if (!kinds_[i]) label[i] = next++;
    }
    Digraph g(static_cast<int>(kinds_.size()));
    for (const auto& [u, v] : arcs_) g.add_arc(label[u], label[v]);
    return ICStructure(std::move(g), std::move(inner));
  }

 private:
  std::vector<bool> kinds_;
  std::set<std::pair<int, int>> arcs_;
};

void check_range(const std::pair<int, int>& r, int min_lo, const char* what) {
  if (r.first > r.second) throw std::invalid_argument(std::string(what) + " range is empty");
  if (r.first < min_lo) {
    throw std::invalid_argument(std::string(what) + " must be at least " + std::to_string(min_lo));
  }
}

ICStructure sketch_once(const GeneratorConfig& cfg, Draw& draw) {
  Sketch sk;
  const int cycles = draw.between(cfg.num_cycles.first, cfg.num_cycles.second);
  const int min_central = cfg.sharing_mode == SharingMode::shared_vertex_all ? 2 : 3;
  const int central_len = std::max(min_central, draw.between(cfg.cycle_length.first, cfg.cycle_length.second));

  std::vector<int> ring;
  for (int i = 0; i < central_len; ++i) ring.push_back(sk.add_non_inner());
  for (int i = 0; i < central_len; ++i) sk.arc(ring[i], ring[(i + 1) % central_len]);

  // Satellites share a forward stretch of the central ring and close through
  // fresh vertices.
  std::vector<char> on_segment(static_cast<std::size_t>(central_len), 0);
  std::vector<std::vector<int>> detours;
  const int shared_len = draw.between(2, central_len - 1);
  for (int c = 1; c < cycles; ++c) {
    int start = 0;
    int seg = 1;
    switch (cfg.sharing_mode) {
      case SharingMode::shared_vertex_all:
        break;
      case SharingMode::shared_path_all:
        seg = shared_len;
        break;
      case SharingMode::chained_through_central:
        start = draw.between(0, central_len - 1);
        seg = draw.between(1, std::max(1, central_len / 2));
        break;
    }
    const int len = draw.between(cfg.cycle_length.first, cfg.cycle_length.second);
    const int fresh = std::max(1, len - seg);
    std::vector<int> detour;
    for (int i = 0; i < fresh; ++i) detour.push_back(sk.add_non_inner());
    for (int i = 0; i < seg; ++i) on_segment[static_cast<std::size_t>((start + i) % central_len)] = 1;
    int last = ring[static_cast<std::size_t>((start + seg - 1) % central_len)];
    for (int d : detour) {
      sk.arc(last, d);
      last = d;
    }
    sk.arc(last, ring[static_cast<std::size_t>(start)]);
    detours.push_back(std::move(detour));
  }

  int inner_total = 0;
  auto terminal = [&](int outer_vertex, bool entering) {
    int t = sk.add_inner();
    ++inner_total;
    int from = entering ? t : outer_vertex;
    int to = entering ? outer_vertex : t;
    if (draw.chance(1, 4)) {
      int via = sk.add_non_inner();
      sk.arc(from, via);
      sk.arc(via, to);
    } else {
      sk.arc(from, to);
    }
    return t;
  };

  std::vector<int> out_terminals, in_terminals;
  for (const auto& detour : detours) {
    out_terminals.push_back(terminal(draw.pick(detour), true));
    in_terminals.push_back(terminal(draw.pick(detour), false));
  }
  std::vector<int> central_only;
  for (int i = 0; i < central_len; ++i) {
    if (!on_segment[static_cast<std::size_t>(i)]) central_only.push_back(ring[static_cast<std::size_t>(i)]);
  }
  int central_pairs = cycles == 1 ? 2 : draw.between(0, 1);
  if (central_only.empty()) central_pairs = 0;
  for (int p = 0; p < central_pairs; ++p) {
    out_terminals.push_back(terminal(draw.pick(central_only), true));
    in_terminals.push_back(terminal(draw.pick(central_only), false));
  }

  std::vector<int> inner_ids(out_terminals);
  inner_ids.insert(inner_ids.end(), in_terminals.begin(), in_terminals.end());
  const int wanted = draw.between(cfg.inner_count.first, cfg.inner_count.second);
  while (inner_total < wanted) {
    inner_ids.push_back(sk.add_inner());
    ++inner_total;
  }

  std::set<int> outs(out_terminals.begin(), out_terminals.end());
  std::set<int> ins(in_terminals.begin(), in_terminals.end());
  for (int i : inner_ids) {
    for (int j : inner_ids) {
      if (i == j || (outs.count(i) && ins.count(j))) continue;
      if (draw.chance(1, 8)) {
        int via = sk.add_non_inner();
        sk.arc(i, via);
        sk.arc(via, j);
      } else {
        sk.arc(i, j);
      }
    }
  }
  return sk.finish();
}

}  // namespace

ICStructure generate(const GeneratorConfig& config) {
  check_range(config.num_cycles, 1, "num_cycles");
  check_range(config.cycle_length, 2, "cycle_length");
  check_range(config.inner_count, 2, "inner_count");
  if (config.max_attempts < 1) throw std::invalid_argument("max_attempts must be positive");

  Draw draw(config.seed);
  std::string last_reason = "no attempt made";
  for (int attempt = 0; attempt < config.max_attempts; ++attempt) {
    ICStructure candidate = sketch_once(config, draw);
    auto reason = rejection_reason(candidate);
    if (!reason) return candidate;
    last_reason = *reason;
  }
  throw GenerationError("no valid structure after " + std::to_string(config.max_attempts) +
                        " attempts; last rejection: " + last_reason);
}

}  // namespace icsi
