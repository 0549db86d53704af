#pragma once

#include <filesystem>
#include <map>
#include <ostream>
#include <string>
#include <string_view>

#include "icsi/ic_check.hpp"

namespace icsi {

// Text format, one record per line:
//
//   # comment
//   graph N K
//   inner: i1 i2 ... iK
//   arc u v        # trailing comments allowed
//
// `graph` must come first, `inner:` exactly once, arcs in any order.

/// Throws ParseError (with line and column) on malformed input and on inputs
/// that break the digraph invariants.
ICStructure parse_structure(std::string_view text);
ICStructure read_structure(const std::filesystem::path& path);

/// Per-arc annotations emitted as trailing comments by the writer.
using ArcNotes = std::map<Arc, std::string>;

void write_structure(std::ostream& os, const ICStructure& s, const ArcNotes& notes = {},
                     std::string_view header_comment = {});
std::string format_structure(const ICStructure& s, const ArcNotes& notes = {},
                             std::string_view header_comment = {});

struct DotStyle {
  /// Vertices drawn as filled boxes (the inner set is always highlighted).
  VertexSet highlight;
  /// Arcs drawn bold, e.g. those of a chosen cycle packing.
  std::vector<Arc> bold_arcs;
};

void write_dot(std::ostream& os, const ICStructure& s, const DotStyle& style = {});

}  // namespace icsi
