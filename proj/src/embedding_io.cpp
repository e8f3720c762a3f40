#include "lvpoly/embedding_io.hpp"

#include <fstream>
#include <map>
#include <optional>
#include <sstream>
#include <vector>

namespace lvpoly {

namespace {

struct Cursor {
  const std::string& text;
  std::size_t pos = 0;
  int line;

  void skip_space() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  }
  bool done() {
    skip_space();
    return pos >= text.size();
  }
  bool peek(char c) {
    skip_space();
    return pos < text.size() && text[pos] == c;
  }
  void expect(char c) {
    if (!peek(c)) fail(std::string("expected '") + c + "'");
    ++pos;
  }
  std::string word() {
    skip_space();
    const std::size_t start = pos;
    while (pos < text.size() && (std::isalnum(static_cast<unsigned char>(text[pos])) || text[pos] == '_')) ++pos;
    if (start == pos) fail("expected a word");
    return text.substr(start, pos - start);
  }
  int integer(const char* what) {
    skip_space();
    const std::size_t start = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (start == pos) fail(std::string("expected ") + what);
    if (pos - start > 9) fail(std::string(what) + " too large");
    return std::stoi(text.substr(start, pos - start));
  }
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError(line, what + " near column " + std::to_string(pos + 1));
  }
};

struct EdgeLine {
  int u;
  int v;
  int sign;
  int line;
};

}  // namespace

EmbeddedGraph parse_embedded_graph(std::istream& in) {
  std::map<int, std::pair<std::vector<Sector>, int>> vertices;
  std::map<int, EdgeLine> edges;
  std::vector<std::pair<Region, int>> regions;
  std::optional<int> cellular_line;

  std::string raw;
  int line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    const std::string line = raw.substr(0, raw.find('#'));
    Cursor cur{line, 0, line_no};
    if (cur.done()) continue;
    const std::string keyword = cur.word();
    if (keyword == "cellular") {
      if (!cur.done()) cur.fail("unexpected text after 'cellular'");
      cellular_line = line_no;
      continue;
    }
    const int id = cur.integer("id");
    cur.expect(':');
    if (keyword == "vertex") {
      if (vertices.contains(id)) cur.fail("duplicate vertex " + std::to_string(id));
      std::vector<Sector> sectors;
      while (!cur.done()) {
        if (cur.word() != "sector") cur.fail("expected 'sector'");
        cur.expect('(');
        Sector s;
        while (!cur.peek(')')) {
          if (cur.done()) cur.fail("unterminated sector");
          const int e = cur.integer("edge id");
          cur.expect('.');
          const int end = cur.integer("half-edge end");
          if (end > 1) cur.fail("half-edge end must be 0 or 1");
          s.push_back({e, end});
        }
        cur.expect(')');
        sectors.push_back(std::move(s));
      }
      if (sectors.empty()) cur.fail("vertex needs at least one sector");
      vertices[id] = {std::move(sectors), line_no};
    } else if (keyword == "edge") {
      if (edges.contains(id)) cur.fail("duplicate edge " + std::to_string(id));
      if (id > kMaxEdgeId) cur.fail("edge id above 63");
      EdgeLine e{cur.integer("vertex id"), cur.integer("vertex id"), 1, line_no};
      if (!cur.done()) {
        if (cur.word() != "sign") cur.fail("expected 'sign'");
        cur.skip_space();
        if (cur.peek('+')) {
          e.sign = 1;
        } else if (cur.peek('-')) {
          e.sign = -1;
        } else {
          cur.fail("sign must be + or -");
        }
        ++cur.pos;
        if (!cur.done()) cur.fail("unexpected text after sign");
      }
      edges[id] = e;
    } else if (keyword == "region") {
      Region reg;
      reg.id = id;
      if (cur.word() != "genus") cur.fail("expected 'genus'");
      reg.genus = cur.integer("genus");
      if (cur.word() != "circles") cur.fail("expected 'circles'");
      reg.circles.push_back(cur.integer("circle index"));
      while (cur.peek(',')) {
        cur.expect(',');
        reg.circles.push_back(cur.integer("circle index"));
      }
      if (!cur.done()) cur.fail("unexpected text after circle list");
      regions.push_back({std::move(reg), line_no});
    } else {
      cur.fail("unknown keyword '" + keyword + "'");
    }
  }

  if (cellular_line && !regions.empty()) {
    throw ParseError(regions.front().second, "region lines cannot be combined with 'cellular'");
  }
  if (!cellular_line && regions.empty()) {
    throw ParseError(line_no, "no regions given; add region lines or 'cellular'");
  }

  Multigraph g;
  std::map<int, std::vector<Sector>> sectors;
  for (auto& [v, entry] : vertices) {
    g.add_vertex(v);
    sectors[v] = entry.first;
  }
  std::map<int, int> signs;
  for (const auto& [id, e] : edges) {
    try {
      g.add_edge(id, e.u, e.v);
    } catch (const InputError& err) {
      throw ParseError(e.line, err.what());
    }
    signs[id] = e.sign;
  }
  std::optional<RotationSystem> rotation;
  try {
    rotation.emplace(std::move(g), std::move(sectors), std::move(signs));
  } catch (const InputError& err) {
    // Point at the vertex line when the message names one.
    int line = line_no;
    const std::string msg = err.what();
    for (const auto& [v, entry] : vertices) {
      if (msg.rfind("vertex " + std::to_string(v) + ":", 0) == 0 ||
          msg.rfind("vertex " + std::to_string(v) + " ", 0) == 0) {
        line = entry.second;
      }
    }
    throw ParseError(line, msg);
  }
  if (cellular_line) return EmbeddedGraph::cellular(std::move(*rotation));
  std::vector<Region> plain;
  for (auto& [reg, line] : regions) plain.push_back(reg);
  try {
    return EmbeddedGraph(std::move(*rotation), std::move(plain));
  } catch (const InputError& err) {
    throw ParseError(regions.front().second, err.what());
  }
}

EmbeddedGraph parse_embedded_graph(const std::string& text) {
  std::istringstream in(text);
  return parse_embedded_graph(in);
}

EmbeddedGraph read_embedded_graph_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path);
  return parse_embedded_graph(in);
}

std::string to_text(const EmbeddedGraph& emb) {
  std::ostringstream out;
  const RotationSystem& r = emb.rotation();
  for (int v : r.graph().vertices()) {
    out << "vertex " << v << ":";
    for (const Sector& s : r.sectors(v)) {
      out << " sector (";
      for (std::size_t i = 0; i < s.size(); ++i) out << (i ? " " : "") << s[i].edge << "." << s[i].end;
      out << ")";
    }
    out << "\n";
  }
  for (int e : r.edges()) {
    out << "edge " << e << ": " << r.graph().ends(e).u << " " << r.graph().ends(e).v << " sign "
        << (r.sign(e) > 0 ? '+' : '-') << "\n";
  }
  bool default_cellular = !r.has_pinch() && static_cast<int>(emb.regions().size()) == emb.circles().count();
  for (const Region& reg : emb.regions()) {
    default_cellular = default_cellular && reg.genus == 0 && reg.circles.size() == 1 && reg.circles[0] == reg.id;
  }
  if (default_cellular) {
    out << "cellular\n";
  } else {
    for (const Region& reg : emb.regions()) {
      out << "region " << reg.id << ": genus " << reg.genus << " circles ";
      for (std::size_t i = 0; i < reg.circles.size(); ++i) out << (i ? "," : "") << reg.circles[i];
      out << "\n";
    }
  }
  return out.str();
}

}  // namespace lvpoly
