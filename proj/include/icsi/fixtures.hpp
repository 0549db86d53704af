#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "icsi/graph_io.hpp"
#include "icsi/ic_check.hpp"
#include "icsi/outer_cycles.hpp"

namespace icsi {

/// Facts stated for a worked example. Cycle labels are 1-based and follow the
/// example's own numbering, which need not match the canonical family order;
/// use label_to_index() to translate.
struct ExpectedRecord {
  /// Unique stretch of C_cycle (relative to central C_central) from `from` to `to`.
  struct UniqueRun {
    int central = 0;
    int cycle = 0;
    Vertex from = 0;
    Vertex to = 0;
  };
  /// Entry path inner -> exclusive vertex and exit path exclusive vertex -> inner.
  struct EntryExit {
    int cycle = 0;
    Vertex in_from = 0, in_to = 0;
    Vertex out_from = 0, out_to = 0;
  };

  int n = 0;
  int k = 0;
  VertexSet inner;
  std::vector<VertexSet> cycles;
  std::map<std::pair<int, int>, VertexSet> intersections;  // i < j
  std::vector<int> central;
  VertexSet all_common;
  int t = 0;
  std::vector<int> chosen_cycles;  // C^S as listed
  VertexSet removed;               // S as listed
  std::vector<UniqueRun> unique_runs;
  std::vector<EntryExit> entry_exit;
  std::vector<std::string> notes;
};

struct Fixture {
  std::string name;
  ICStructure structure;
  ExpectedRecord expected;
  ArcNotes provenance;
};

const std::vector<std::string>& fixture_names();

/// Throws std::out_of_range for an unknown name.
Fixture load_fixture(std::string_view name);

/// Family index of the cycle with the given 1-based example label.
/// Throws std::out_of_range if the family has no cycle with that vertex set.
CycleIndex label_to_index(const ExpectedRecord& expected, const CycleFamily& fam, int label);

enum class SharingMode { shared_path_all, shared_vertex_all, chained_through_central };

std::string to_string(SharingMode mode);
/// Throws std::invalid_argument for an unknown mode name.
SharingMode parse_sharing_mode(std::string_view name);

struct GeneratorConfig {
  std::pair<int, int> num_cycles{1, 4};
  /// Vertex count of each cycle, central and satellites alike.
  std::pair<int, int> cycle_length{3, 6};
  SharingMode sharing_mode = SharingMode::chained_through_central;
  /// Lower bound on K; star inner vertices are added to reach it. The outer
  /// region needs at least two entry and two exit terminals, so K >= 4.
  std::pair<int, int> inner_count{4, 6};
  std::uint64_t seed = 1;
  int max_attempts = 400;
};

/// Deterministic per seed. Every result passes Conditions 1-3, has outer
/// cycles satisfying ILC and CCC, and meets the entry/exit path requirements
/// for every non-central cycle. Throws GenerationError when all attempts are
/// rejected (with the last rejection reason) and std::invalid_argument on an
/// empty or infeasible range.
ICStructure generate(const GeneratorConfig& config);

/// Why `s` would be rejected by the generator, or nullopt if it is accepted.
std::optional<std::string> rejection_reason(const ICStructure& s);

}  // namespace icsi
