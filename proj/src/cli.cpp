#include "icsi/cli.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <optional>
#include <sstream>

#include "icsi/analysis.hpp"
#include "icsi/errors.hpp"
#include "icsi/fixtures.hpp"
#include "icsi/graph_io.hpp"

namespace icsi {

namespace fs = std::filesystem;

namespace {

// "4" or "3-6".
std::pair<int, int> parse_range(const std::string& text, const char* what) {
  auto dash = text.find('-', 1);
  try {
    std::size_t used = 0;
    if (dash == std::string::npos) {
      int v = std::stoi(text, &used);
      if (used == text.size()) return {v, v};
    } else {
      int lo = std::stoi(text.substr(0, dash), &used);
      if (used == dash) {
        std::string rest = text.substr(dash + 1);
        int hi = std::stoi(rest, &used);
        if (used == rest.size()) return {lo, hi};
      }
    }
  } catch (const std::logic_error&) {
  }
  throw std::invalid_argument(std::string(what) + ": expected N or LO-HI, got '" + text + "'");
}

fs::path resolve_input(const std::string& given) {
  fs::path p(given);
  if (!fs::exists(p)) {
    fs::path with_ext = p;
    with_ext += ".graph";
    if (fs::exists(with_ext)) return with_ext;
  }
  return p;
}

void write_file(const fs::path& path, const std::string& content) {
  if (path.has_parent_path()) fs::create_directories(path.parent_path());
  std::ofstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot write " + path.string());
  f << content;
}

std::string dump(const nlohmann::ordered_json& j) { return j.dump(2) + "\n"; }

std::string dot_text(const ICStructure& s, const AnalysisReport* r) {
  DotStyle style;
  if (r && !r->family.empty()) {
    style.highlight = r->family.union_vertices();
    if (r->disjoint) {
      for (CycleIndex c : r->disjoint->chosen_cycles) {
        for (const Arc& a : r->family.cycle(c).arcs()) style.bold_arcs.push_back(a);
      }
    }
  }
  std::ostringstream os;
  write_dot(os, s, style);
  return os.str();
}

struct Inputs {
  std::string input;
  bool oracle = false;
  bool json = false;
  std::string dot_path;
  int max_vertices = OracleLimits{}.max_vertices;
  std::size_t max_cycles = OracleLimits{}.max_cycles;

  std::string seed = "1";
  std::string cycles = "1-4";
  std::string mode = "chained-through-central";
  std::string cycle_length = "3-6";
  std::string inner = "4-6";
  std::string out_prefix;

  std::string export_dir = "fixtures";
};

void add_limits(CLI::App* cmd, Inputs& in) {
  cmd->add_option("--max-oracle-vertices", in.max_vertices, "Vertex bound for the MAIS search");
  cmd->add_option("--max-oracle-cycles", in.max_cycles, "Cycle bound for the packing and hitting searches");
}

int cmd_analyze(const Inputs& in, bool force_oracle, std::ostream& out, std::ostream& err) {
  ICStructure s = read_structure(resolve_input(in.input));
  AnalysisOptions opts;
  opts.oracle = in.oracle || force_oracle;
  opts.limits.max_vertices = in.max_vertices;
  opts.limits.max_cycles = in.max_cycles;
  AnalysisReport r = analyze(s, opts);
  const std::string text = in.json ? dump(to_json(r)) : format_text(r);
  if (!in.dot_path.empty()) write_file(in.dot_path, dot_text(s, &r));
  if (!r.valid) {
    err << text;
    return kExitInvalid;
  }
  out << text;
  return kExitOk;
}

int cmd_oracle(const Inputs& in, std::ostream& out) {
  ICStructure s = read_structure(resolve_input(in.input));
  CycleFamily fam = build_family(s);
  OracleLimits limits{in.max_cycles, in.max_vertices};
  nlohmann::ordered_json j;
  auto d = oracle_max_disjoint(fam, limits);
  auto h = oracle_min_hitting(fam, limits);
  auto m = oracle_mais(s.graph(), limits);
  std::vector<std::size_t> labels;
  for (CycleIndex c : d.subfamily) labels.push_back(c + 1);
  j["outer_cycles"] = fam.size();
  j["max_disjoint"] = {{"size", d.size}, {"subfamily", labels}};
  j["min_hitting"] = {{"size", h.size}, {"vertices", std::vector<Vertex>(h.vertices.begin(), h.vertices.end())}};
  j["mais"] = {{"order", m.order},
               {"acyclic_set", std::vector<Vertex>(m.acyclic_set.begin(), m.acyclic_set.end())}};
  out << dump(j);
  return kExitOk;
}

int cmd_validate(const Inputs& in, std::ostream& out, std::ostream& err) {
  ICStructure s = read_structure(resolve_input(in.input));
  AnalysisReport r = analyze(s);
  nlohmann::ordered_json j = to_json(r);
  nlohmann::ordered_json brief;
  brief["valid"] = r.valid;
  brief["problems"] = r.problems;
  brief["validation"] = j["validation"];
  if (j.contains("family")) brief["central"] = j["family"]["central"];
  (r.valid ? out : err) << (in.json ? dump(brief) : format_text(r));
  return r.valid ? kExitOk : kExitInvalid;
}

int cmd_generate(const Inputs& in, std::ostream& out) {
  GeneratorConfig cfg;
  cfg.seed = std::stoull(in.seed);
  cfg.num_cycles = parse_range(in.cycles, "--cycles");
  cfg.cycle_length = parse_range(in.cycle_length, "--cycle-length");
  cfg.inner_count = parse_range(in.inner, "--inner");
  cfg.sharing_mode = parse_sharing_mode(in.mode);
  ICStructure s = generate(cfg);

  std::ostringstream header;
  header << "generated: seed " << cfg.seed << ", mode " << to_string(cfg.sharing_mode) << ", cycles "
         << in.cycles << ", cycle length " << in.cycle_length << ", inner " << in.inner;
  const std::string graph = format_structure(s, {}, header.str());
  if (in.out_prefix.empty()) {
    out << graph;
    return kExitOk;
  }
  nlohmann::ordered_json sidecar;
  sidecar["generator"] = {{"seed", cfg.seed},
                          {"mode", to_string(cfg.sharing_mode)},
                          {"cycles", in.cycles},
                          {"cycle_length", in.cycle_length},
                          {"inner", in.inner}};
  sidecar["expected"] = to_json(describe(s));
  write_file(in.out_prefix + ".graph", graph);
  write_file(in.out_prefix + ".json", dump(sidecar));
  out << "wrote " << in.out_prefix << ".graph and " << in.out_prefix << ".json\n";
  return kExitOk;
}

int cmd_export(const Inputs& in, std::ostream& out) {
  for (const std::string& name : fixture_names()) {
    Fixture f = load_fixture(name);
    const fs::path base = fs::path(in.export_dir) / name;
    write_file(base.string() + ".graph",
               format_structure(f.structure, f.provenance,
                                "Reconstruction of worked " + name +
                                    ".\nArc comments say whether an arc is quoted or was chosen to complete the structure."));
    write_file(base.string() + ".json", dump(to_json(f.expected)));
    out << "wrote " << base.string() << ".graph\n";
  }
  return kExitOk;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Analyzer for interlinked cycle structures with interlocked outer cycles", "icsi"};
  app.require_subcommand(1);
  Inputs in;

  auto* analyze_cmd = app.add_subcommand("analyze", "Validate a structure and run the full analysis");
  analyze_cmd->add_option("input", in.input, "Structure file (.graph may be omitted)")->required();
  analyze_cmd->add_flag("--oracle", in.oracle, "Cross-check with exhaustive searches");
  analyze_cmd->add_flag("--json", in.json, "JSON output");
  analyze_cmd->add_option("--dot", in.dot_path, "Also write a DOT drawing to this path");
  add_limits(analyze_cmd, in);

  auto* validate_cmd = app.add_subcommand("validate", "Check the structural conditions only");
  validate_cmd->add_option("input", in.input, "Structure file")->required();
  validate_cmd->add_flag("--json", in.json, "JSON output");

  auto* oracle_cmd = app.add_subcommand("oracle", "Exhaustive packing, hitting set and MAIS");
  oracle_cmd->add_option("input", in.input, "Structure file")->required();
  add_limits(oracle_cmd, in);

  auto* dot_cmd = app.add_subcommand("dot", "Print a DOT drawing of a structure");
  dot_cmd->add_option("input", in.input, "Structure file")->required();

  auto* gen_cmd = app.add_subcommand("generate", "Generate a random valid structure");
  gen_cmd->add_option("--seed", in.seed, "RNG seed");
  gen_cmd->add_option("--cycles", in.cycles, "Number of outer cycles, N or LO-HI");
  gen_cmd->add_option("--mode", in.mode, "shared-path-all, shared-vertex-all or chained-through-central");
  gen_cmd->add_option("--cycle-length", in.cycle_length, "Vertices per cycle, N or LO-HI");
  gen_cmd->add_option("--inner", in.inner, "Minimum inner vertex count, N or LO-HI");
  gen_cmd->add_option("--out", in.out_prefix, "Write PREFIX.graph and PREFIX.json instead of printing");

  auto* fixtures_cmd = app.add_subcommand("fixtures", "Built-in worked examples");
  fixtures_cmd->require_subcommand(1);
  fixtures_cmd->add_subcommand("list", "List fixture names");
  auto* export_cmd = fixtures_cmd->add_subcommand("export", "Write fixtures and expected records");
  export_cmd->add_option("dir", in.export_dir, "Target directory");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitParse;
  }

  try {
    if (*analyze_cmd) return cmd_analyze(in, false, out, err);
    if (*validate_cmd) return cmd_validate(in, out, err);
    if (*oracle_cmd) return cmd_oracle(in, out);
    if (*dot_cmd) {
      ICStructure s = read_structure(resolve_input(in.input));
      out << dot_text(s, nullptr);
      return kExitOk;
    }
    if (*gen_cmd) return cmd_generate(in, out);
    if (*export_cmd) return cmd_export(in, out);
    for (const auto& name : fixture_names()) out << name << '\n';
    return kExitOk;
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << '\n';
    return kExitParse;
  } catch (const OracleRefusal& e) {
    err << "oracle refused: " << e.what() << '\n';
    return kExitRefused;
  } catch (const GenerationError& e) {
    err << "generation failed: " << e.what() << '\n';
    return kExitInvalid;
  } catch (const StructureError& e) {
    err << "invalid structure: " << e.what() << '\n';
    return kExitInvalid;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitParse;
  }
}

}  // namespace icsi
