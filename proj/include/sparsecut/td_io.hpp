#pragma once

#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "sparsecut/graph_io.hpp"
#include "sparsecut/tree_decomposition.hpp"

namespace sparsecut {

/// Decomposition read from a PACE .td file together with its declared vertex count.
struct TdFile {
  TreeDecomposition td;
  int vertices = 0;
};

// PACE .td format
//   c <comment>
//   s td <num_bags> <width+1> <n>
//   b <id> <v> <v> ...        (ids 1..num_bags, vertices 1..n)
//   <id> <id>                 (num_bags - 1 tree edges)

inline TdFile parse_td(std::istream& in) {
  std::string line;
  int line_no = 0;
  bool have_header = false;
  long num_bags = 0;
  long declared_size = 0;
  long n = 0;
  TdFile out;
  std::vector<char> seen;

  while (std::getline(in, line)) {
    ++line_no;
    std::istringstream ss(line);
    std::string tag;
    if (!(ss >> tag) || tag[0] == 'c') continue;
    if (tag == "s") {
      std::string kind;
      if (have_header) throw FormatError(line_no, "duplicate header");
      if (!(ss >> kind >> num_bags >> declared_size >> n) || kind != "td" || num_bags < 0 || declared_size < 0 || n < 0) {
        throw FormatError(line_no, "malformed header, expected 's td <bags> <width+1> <n>'");
      }
      have_header = true;
      out.vertices = static_cast<int>(n);
      out.td.bags.assign(static_cast<std::size_t>(num_bags), {});
      seen.assign(static_cast<std::size_t>(num_bags), 0);
    } else if (!have_header) {
      throw FormatError(line_no, "content before header");
    } else if (tag == "b") {
      long id = 0;
      if (!(ss >> id)) throw FormatError(line_no, "missing bag id");
      if (id < 1 || id > num_bags) throw FormatError(line_no, "bag index " + std::to_string(id) + " out of range");
      if (seen[static_cast<std::size_t>(id - 1)]++) throw FormatError(line_no, "bag " + std::to_string(id) + " listed twice");
      VertexSet bag;
      long v = 0;
      while (ss >> v) {
        if (v < 1 || v > n) throw FormatError(line_no, "vertex " + std::to_string(v) + " out of range");
        bag.push_back(static_cast<Vertex>(v - 1));
      }
      if (!ss.eof()) throw FormatError(line_no, "malformed bag line");
      out.td.bags[static_cast<std::size_t>(id - 1)] = normalized(std::move(bag));
    } else {
      long a = 0;
      long b = 0;
      std::istringstream es(line);
      std::string rest;
      if (!(es >> a >> b) || (es >> rest)) throw FormatError(line_no, "malformed tree edge");
      if (a < 1 || a > num_bags || b < 1 || b > num_bags) throw FormatError(line_no, "bag index out of range in tree edge");
      out.td.tree_edges.emplace_back(static_cast<int>(a - 1), static_cast<int>(b - 1));
    }
  }
  if (!have_header) throw FormatError(line_no, "missing header");
  for (long i = 0; i < num_bags; ++i) {
    if (!seen[static_cast<std::size_t>(i)]) throw FormatError(line_no, "bag " + std::to_string(i + 1) + " missing");
  }
  if (out.td.width() + 1 != declared_size) {
    throw FormatError(line_no, "declared bag size " + std::to_string(declared_size) + " differs from actual " + std::to_string(out.td.width() + 1));
  }
  if (auto shape = detail::check_tree_shape(static_cast<int>(num_bags), out.td.tree_edges); !shape) {
    throw FormatError(line_no, "tree edges do not form a tree: " + shape.witness);
  }
  return out;
}

inline TdFile parse_td(const std::string& text) {
  std::istringstream in(text);
  return parse_td(in);
}

inline TdFile read_td(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open decomposition file '" + path + "'");
  return parse_td(in);
}

inline void write_td(std::ostream& out, const TreeDecomposition& td, int vertices) {
  out << "s td " << td.bags.size() << ' ' << td.width() + 1 << ' ' << vertices << '\n';
  for (std::size_t i = 0; i < td.bags.size(); ++i) {
    out << "b " << i + 1;
    for (const Vertex v : td.bags[i]) out << ' ' << v + 1;
    out << '\n';
  }
  for (const auto& [a, b] : td.tree_edges) out << a + 1 << ' ' << b + 1 << '\n';
}

inline std::string to_td(const TreeDecomposition& td, int vertices) {
  std::ostringstream out;
  write_td(out, td, vertices);
  return out.str();
}

}  // namespace sparsecut
