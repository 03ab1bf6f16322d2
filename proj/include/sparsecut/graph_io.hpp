#pragma once

#include <fstream>
#include <istream>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "sparsecut/graph.hpp"

namespace sparsecut {

/// Error raised for malformed .ssc / .td input; carries the 1-based line number.
class FormatError : public std::runtime_error {
 public:
  FormatError(int line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
  [[nodiscard]] int line() const { return line_; }

 private:
  int line_;
};

// .ssc graph format
//   c <comment>
//   p ssc <n> <m>
//   e <u> <v> <num>[/<den>]      (m lines, 1-indexed)
//   v <u> <num>[/<den>]          (optional vertex weights; missing ones are 1)

inline WeightedGraph parse_ssc(std::istream& in) {
  std::string line;
  int line_no = 0;
  int n = -1;
  long declared_m = -1;
  std::vector<Edge> edges;
  std::optional<std::vector<Rational>> vweights;

  auto read_vertex = [&](std::istringstream& ss) {
    long x = 0;
    if (!(ss >> x)) throw FormatError(line_no, "expected vertex index");
    if (x < 1 || x > n) throw FormatError(line_no, "vertex " + std::to_string(x) + " out of range 1.." + std::to_string(n));
    return static_cast<Vertex>(x - 1);
  };
  auto read_weight = [&](std::istringstream& ss, bool required) {
    std::string tok;
    if (!(ss >> tok)) {
      if (required) throw FormatError(line_no, "expected weight");
      return Rational(1);
    }
    try {
      return Rational::parse(tok);
    } catch (const std::exception& e) {
      throw FormatError(line_no, e.what());
    }
  };

  while (std::getline(in, line)) {
    ++line_no;
    std::istringstream ss(line);
    std::string tag;
    if (!(ss >> tag) || tag[0] == 'c') continue;
    if (tag == "p") {
      if (n >= 0) throw FormatError(line_no, "duplicate problem line");
      std::string kind;
      long nn = -1;
      if (!(ss >> kind >> nn >> declared_m) || kind != "ssc" || nn < 0 || declared_m < 0) {
        throw FormatError(line_no, "malformed problem line, expected 'p ssc <n> <m>'");
      }
      n = static_cast<int>(nn);
    } else if (tag == "e") {
      if (n < 0) throw FormatError(line_no, "edge before problem line");
      const Vertex u = read_vertex(ss);
      const Vertex v = read_vertex(ss);
      if (u == v) throw FormatError(line_no, "self-loop");
      const Rational w = read_weight(ss, false);
      if (w.sign() < 0) throw FormatError(line_no, "negative edge weight");
      edges.push_back({u, v, w});
    } else if (tag == "v") {
      if (n < 0) throw FormatError(line_no, "vertex weight before problem line");
      const Vertex u = read_vertex(ss);
      const Rational w = read_weight(ss, true);
      if (w.sign() <= 0) throw FormatError(line_no, "vertex weight must be positive");
      if (!vweights) vweights.emplace(static_cast<std::size_t>(n), Rational(1));
      (*vweights)[static_cast<std::size_t>(u)] = w;
    } else {
      throw FormatError(line_no, "unknown line type '" + tag + "'");
    }
  }
  if (n < 0) throw FormatError(line_no, "missing problem line");
  if (static_cast<long>(edges.size()) != declared_m) {
    throw FormatError(line_no, "declared " + std::to_string(declared_m) + " edges, found " + std::to_string(edges.size()));
  }
  return WeightedGraph(n, edges, std::move(vweights));
}

inline WeightedGraph parse_ssc(const std::string& text) {
  std::istringstream in(text);
  return parse_ssc(in);
}

inline WeightedGraph read_ssc(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open graph file '" + path + "'");
  return parse_ssc(in);
}

inline void write_ssc(std::ostream& out, const WeightedGraph& g) {
  out << "p ssc " << g.order() << ' ' << g.size() << '\n';
  for (const Edge& e : g.edges()) out << "e " << e.u + 1 << ' ' << e.v + 1 << ' ' << e.weight.str() << '\n';
  if (g.has_vertex_weights()) {
    for (Vertex v = 0; v < g.order(); ++v) out << "v " << v + 1 << ' ' << g.vertex_weight(v).str() << '\n';
  }
}

inline std::string to_ssc(const WeightedGraph& g) {
  std::ostringstream out;
  write_ssc(out, g);
  return out.str();
}

}  // namespace sparsecut
