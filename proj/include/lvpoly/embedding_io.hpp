#pragma once

#include <istream>
#include <string>

#include "lvpoly/embedding.hpp"
#include "lvpoly/errors.hpp"

namespace lvpoly {

class ParseError : public InputError {
 public:
  ParseError(int line, const std::string& what)
      : InputError("line " + std::to_string(line) + ": " + what), line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

/// Reads the embedded-graph text format:
///
///   # comment
///   vertex <id>: sector (<e>.<end> ...) [sector (...)]...
///   edge <id>: <u> <v> sign <+|->
///   region <id>: genus <g> circles <c1>,<c2>,...
///   cellular
///
/// `cellular` (exclusive with region lines) puts a genus-0 disc on every
/// boundary circle. Circle numbers are those printed by `lvpoly trace`.
EmbeddedGraph parse_embedded_graph(std::istream& in);
EmbeddedGraph parse_embedded_graph(const std::string& text);
EmbeddedGraph read_embedded_graph_file(const std::string& path);

/// Inverse of parse_embedded_graph; emits `cellular` when the regions are
/// exactly the default cellular ones.
std::string to_text(const EmbeddedGraph& emb);

}  // namespace lvpoly
