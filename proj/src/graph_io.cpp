#include "icsi/graph_io.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <optional>
#include <set>
#include <sstream>
#include <vector>

#include "icsi/errors.hpp"

namespace icsi {

namespace {

struct Token {
  std::string_view text;
  int column;  // 1-based
};

std::vector<Token> tokenize(std::string_view line) {
  std::vector<Token> tokens;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    if (i >= line.size() || line[i] == '#') break;
    std::size_t start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r' && line[i] != '#') ++i;
    tokens.push_back({line.substr(start, i - start), static_cast<int>(start) + 1});
  }
  return tokens;
}

int parse_int(const Token& tok, int line_no) {
  int value = 0;
  auto [ptr, ec] = std::from_chars(tok.text.data(), tok.text.data() + tok.text.size(), value);
  if (ec != std::errc() || ptr != tok.text.data() + tok.text.size()) {
    throw ParseError(line_no, tok.column, "expected an integer, found '" + std::string(tok.text) + "'");
  }
  return value;
}

}  // namespace

ICStructure parse_structure(std::string_view text) {
  std::optional<Digraph> graph;
  int declared_k = 0;
  std::optional<VertexSet> inner;
  int line_no = 0;
  int last_line = 1;

  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;
    std::vector<Token> tokens = tokenize(line);
    if (tokens.empty()) continue;
    last_line = line_no;

    const Token& head = tokens.front();
    if (head.text == "graph") {
      if (graph) throw ParseError(line_no, head.column, "duplicate 'graph' header");
      if (tokens.size() != 3) throw ParseError(line_no, head.column, "expected 'graph N K'");
      int n = parse_int(tokens[1], line_no);
      declared_k = parse_int(tokens[2], line_no);
      if (n < 1) throw ParseError(line_no, tokens[1].column, "N must be positive");
      if (declared_k < 0 || declared_k > n) {
        throw ParseError(line_no, tokens[2].column, "K must lie in 0..N");
      }
      graph.emplace(n);
    } else if (head.text == "inner:" || head.text == "inner") {
      if (!graph) throw ParseError(line_no, head.column, "'inner:' before the 'graph' header");
      if (inner) throw ParseError(line_no, head.column, "duplicate 'inner:' line");
      std::size_t first = 1;
      if (head.text == "inner") {
        if (tokens.size() < 2 || tokens[1].text != ":") {
          throw ParseError(line_no, head.column, "expected 'inner:'");
        }
        first = 2;
      }
      inner.emplace();
      for (std::size_t i = first; i < tokens.size(); ++i) {
        int v = parse_int(tokens[i], line_no);
        if (!graph->contains(v)) throw ParseError(line_no, tokens[i].column, "inner vertex out of range");
        if (!inner->insert(v).second) throw ParseError(line_no, tokens[i].column, "repeated inner vertex");
      }
      if (static_cast<int>(inner->size()) != declared_k) {
        throw ParseError(line_no, head.column,
                         "header declares K=" + std::to_string(declared_k) + " but " +
                             std::to_string(inner->size()) + " inner vertices are listed");
      }
    } else if (head.text == "arc") {
      if (!graph) throw ParseError(line_no, head.column, "'arc' before the 'graph' header");
      if (tokens.size() != 3) throw ParseError(line_no, head.column, "expected 'arc u v'");
      int u = parse_int(tokens[1], line_no);
      int v = parse_int(tokens[2], line_no);
      try {
        graph->add_arc(u, v);
      } catch (const GraphError& e) {
        throw ParseError(line_no, tokens[1].column, e.what());
      }
    } else {
      throw ParseError(line_no, head.column, "unknown record '" + std::string(head.text) + "'");
    }
  }
  if (!graph) throw ParseError(last_line, 1, "missing 'graph N K' header");
  if (!inner) throw ParseError(last_line, 1, "missing 'inner:' line");
  try {
    return ICStructure(std::move(*graph), std::move(*inner));
  } catch (const StructureError& e) {
    throw ParseError(last_line, 1, e.what());
  }
}

ICStructure read_structure(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_structure(buffer.str());
}

void write_structure(std::ostream& os, const ICStructure& s, const ArcNotes& notes,
                     std::string_view header_comment) {
  if (!header_comment.empty()) {
    std::istringstream lines{std::string(header_comment)};
    for (std::string line; std::getline(lines, line);) os << "# " << line << '\n';
  }
  os << "graph " << s.vertex_count() << ' ' << s.inner_count() << '\n';
  os << "inner:";
  for (Vertex v : s.inner()) os << ' ' << v;
  os << '\n';
  for (const Arc& a : s.graph().arcs()) {
    os << "arc " << a.from << ' ' << a.to;
    if (auto it = notes.find(a); it != notes.end()) os << "  # " << it->second;
    os << '\n';
  }
}

std::string format_structure(const ICStructure& s, const ArcNotes& notes,
                             std::string_view header_comment) {
  std::ostringstream os;
  write_structure(os, s, notes, header_comment);
  return os.str();
}

void write_dot(std::ostream& os, const ICStructure& s, const DotStyle& style) {
  std::set<Arc> bold(style.bold_arcs.begin(), style.bold_arcs.end());
  os << "digraph G {\n";
  os << "  rankdir=LR;\n";
  for (Vertex v : s.graph().vertices()) {
    os << "  " << v << " [label=\"" << v << "\"";
    if (s.is_inner(v)) {
      os << ", shape=doublecircle";
    } else if (style.highlight.count(v)) {
      os << ", shape=box, style=filled, fillcolor=lightgrey";
    }
    os << "];\n";
  }
  for (const Arc& a : s.graph().arcs()) {
    os << "  " << a.from << " -> " << a.to;
    if (bold.count(a)) os << " [penwidth=2.5]";
    os << ";\n";
  }
  os << "}\n";
}

}  // namespace icsi
