#include "oneplane/io.hpp"

#include <charconv>
#include <sstream>

namespace oneplane {

FormatError::FormatError(int line, const std::string& what)
    : std::runtime_error("line " + std::to_string(line) + ": " + what),
      line_(line) {}

namespace {

struct LineReader {
  const std::string& text;
  size_t pos = 0;
  int line_no = 0;

  bool next(std::string& out) {
    if (pos >= text.size()) return false;
    size_t nl = text.find('\n', pos);
    if (nl == std::string::npos) {
      out = text.substr(pos);
      pos = text.size();
    } else {
      out = text.substr(pos, nl - pos);
      pos = nl + 1;
    }
    ++line_no;
    return true;
  }
};

// Single spaces only; empty tokens are a grammar error.
std::vector<std::string> split_tokens(const std::string& line, int line_no) {
  std::vector<std::string> tokens;
  size_t start = 0;
  while (true) {
    size_t sp = line.find(' ', start);
    std::string tok = sp == std::string::npos ? line.substr(start)
                                              : line.substr(start, sp - start);
    if (tok.empty()) throw FormatError(line_no, "empty token (check spacing)");
    tokens.push_back(tok);
    if (sp == std::string::npos) break;
    start = sp + 1;
  }
  return tokens;
}

int parse_int(const std::string& tok, int line_no) {
  int value = 0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
  if (ec != std::errc() || ptr != tok.data() + tok.size() || value < 0)
    throw FormatError(line_no, "expected non-negative integer, got '" + tok + "'");
  return value;
}

}  // namespace

Drawing parse_drawing(const std::string& text) {
  LineReader reader{text};
  std::string line;

  auto require_line = [&](const char* what) {
    if (!reader.next(line))
      throw FormatError(reader.line_no + 1, std::string("expected ") + what);
    return split_tokens(line, reader.line_no);
  };

  auto header = require_line("DRAWING 1");
  if (header.size() != 2 || header[0] != "DRAWING" || header[1] != "1")
    throw FormatError(reader.line_no, "expected 'DRAWING 1'");

  auto vline = require_line("vertices <n>");
  if (vline.size() != 2 || vline[0] != "vertices")
    throw FormatError(reader.line_no, "expected 'vertices <n>'");
  int n = parse_int(vline[1], reader.line_no);

  auto cline = require_line("crossings <c>");
  if (cline.size() != 2 || cline[0] != "crossings")
    throw FormatError(reader.line_no, "expected 'crossings <c>'");
  int c = parse_int(cline[1], reader.line_no);

  std::vector<EdgeRecord> edges;
  std::vector<Segment> segments;
  std::vector<std::vector<int>> rotation;
  std::optional<int> outer;

  enum class Section { Edges, Segments, Rotations, Outer, Done };
  Section section = Section::Edges;
  while (reader.next(line)) {
    auto tokens = split_tokens(line, reader.line_no);
    const std::string& directive = tokens[0];
    if (directive == "edge") {
      if (section != Section::Edges)
        throw FormatError(reader.line_no, "edge line out of order");
      if (tokens.size() != 4 && !(tokens.size() == 6 && tokens[4] == "x"))
        throw FormatError(reader.line_no, "expected 'edge <id> <u> <v> [x <node>]'");
      EdgeRecord e;
      e.id = parse_int(tokens[1], reader.line_no);
      e.u = parse_int(tokens[2], reader.line_no);
      e.v = parse_int(tokens[3], reader.line_no);
      if (tokens.size() == 6) e.crossed_by = parse_int(tokens[5], reader.line_no);
      if (e.id != static_cast<int>(edges.size()))
        throw FormatError(reader.line_no, "edge ids must appear in order from 0");
      edges.push_back(e);
    } else if (directive == "seg") {
      if (section == Section::Edges) section = Section::Segments;
      if (section != Section::Segments)
        throw FormatError(reader.line_no, "seg line out of order");
      if (tokens.size() != 5)
        throw FormatError(reader.line_no, "expected 'seg <id> <tail> <head> <edgeId>'");
      Segment s;
      s.id = parse_int(tokens[1], reader.line_no);
      s.tail = parse_int(tokens[2], reader.line_no);
      s.head = parse_int(tokens[3], reader.line_no);
      s.edge = parse_int(tokens[4], reader.line_no);
      if (s.id != static_cast<int>(segments.size()))
        throw FormatError(reader.line_no, "seg ids must appear in order from 0");
      segments.push_back(s);
    } else if (directive == "rot") {
      if (section == Section::Edges || section == Section::Segments)
        section = Section::Rotations;
      if (section != Section::Rotations)
        throw FormatError(reader.line_no, "rot line out of order");
      if (tokens.size() < 2)
        throw FormatError(reader.line_no, "expected 'rot <node> <dart>...'");
      int node = parse_int(tokens[1], reader.line_no);
      if (node != static_cast<int>(rotation.size()))
        throw FormatError(reader.line_no, "rot lines must cover nodes in order from 0");
      std::vector<int> darts;
      for (size_t i = 2; i < tokens.size(); ++i)
        darts.push_back(parse_int(tokens[i], reader.line_no));
      rotation.push_back(std::move(darts));
    } else if (directive == "outer") {
      if (section == Section::Outer || section == Section::Done)
        throw FormatError(reader.line_no, "duplicate outer line");
      section = Section::Outer;
      if (tokens.size() != 2)
        throw FormatError(reader.line_no, "expected 'outer <faceIndex>'");
      outer = parse_int(tokens[1], reader.line_no);
    } else {
      throw FormatError(reader.line_no, "unknown directive '" + directive + "'");
    }
  }

  if (static_cast<int>(rotation.size()) != n + c)
    throw FormatError(reader.line_no, "expected one rot line per node (" +
                                          std::to_string(n + c) + " nodes)");

  return Drawing::create(n, c, std::move(edges), std::move(segments),
                         std::move(rotation), outer);
}

std::string serialize_drawing(const Drawing& d) {
  std::ostringstream out;
  out << "DRAWING 1\n";
  out << "vertices " << d.vertex_count() << "\n";
  out << "crossings " << d.crossing_count() << "\n";
  for (const EdgeRecord& e : d.edges()) {
    out << "edge " << e.id << " " << e.u << " " << e.v;
    if (e.crossed_by != -1) out << " x " << e.crossed_by;
    out << "\n";
  }
  for (const Segment& s : d.segments())
    out << "seg " << s.id << " " << s.tail << " " << s.head << " " << s.edge << "\n";
  for (int node = 0; node < d.node_count(); ++node) {
    out << "rot " << node;
    for (int dart : d.rotation()[node]) out << " " << dart;
    out << "\n";
  }
  if (d.outer_face()) out << "outer " << *d.outer_face() << "\n";
  return out.str();
}

std::string to_dot(const Drawing& d) {
  std::ostringstream out;
  out << "graph planarization {\n";
  for (int node = 0; node < d.node_count(); ++node) {
    out << "  " << node;
    if (d.is_crossing_node(node)) out << " [shape=point, crossing=true]";
    out << ";\n";
  }
  for (const Segment& s : d.segments())
    out << "  " << s.tail << " -- " << s.head << " [edge=" << s.edge << "];\n";
  out << "}\n";
  return out.str();
}

}  // namespace oneplane
