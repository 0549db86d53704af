#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "icsi/codec.hpp"
#include "icsi/disjoint.hpp"
#include "icsi/fixtures.hpp"
#include "icsi/ic_check.hpp"
#include "icsi/oracle.hpp"
#include "icsi/outer_cycles.hpp"

namespace icsi {

struct AnalysisOptions {
  bool oracle = false;
  OracleLimits limits;
};

// Everything `analyze` computes for one structure. Sections after
// `validation` are filled only as far as the pipeline got: a structure that
// fails Conditions 1-3, ILC or CCC stops early with `valid == false`.
struct AnalysisReport {
  int n = 0;
  int k = 0;
  bool valid = false;
  std::vector<std::string> problems;  // why the structure was rejected
  std::vector<std::string> notices;   // skipped checks and fallbacks

  ICValidationReport validation;
  std::optional<SideConditions> side_conditions;

  CycleFamily family;
  std::optional<IlcResult> ilc;
  std::vector<CycleIndex> central;
  std::optional<LemmaReport> lemmas;
  std::optional<DisjointCycleResult> disjoint;
  std::optional<OracleResult> oracle;

  IndexCode code;
  std::vector<DecodeVerdict> decoding;
  /// Present whenever outer cycles exist; without them there is no t.
  std::optional<LengthReport> length;

  bool all_decodable() const;
};

/// Runs the full pipeline. Throws OracleRefusal when `options.oracle` is set
/// and the cycle family exceeds the oracle bounds; an oversized vertex count
/// only skips the MAIS search (with a notice).
AnalysisReport analyze(const ICStructure& s, const AnalysisOptions& options = {});

nlohmann::ordered_json to_json(const AnalysisReport& report);
std::string format_text(const AnalysisReport& report);

/// Facts about `s` in the same shape as a worked example's record, with cycle
/// labels in canonical family order. Requires a structure that analyze()
/// accepts with outer cycles; throws PreconditionError otherwise.
ExpectedRecord describe(const ICStructure& s);

nlohmann::ordered_json to_json(const ExpectedRecord& record);

}  // namespace icsi
