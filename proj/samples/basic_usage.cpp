// Small tour of the library: build a graph, solve both problems, and
// generate a reduction instance.
#include <iostream>

#include "sparsecut/sparsecut.hpp"

namespace sc = sparsecut;

static void print_set(const sc::VertexSet& s) {
  std::cout << '{';
  for (std::size_t i = 0; i < s.size(); ++i) std::cout << (i ? "," : "") << s[i] + 1;
  std::cout << '}';
}

int main() {
  // a 6-cycle with one heavy edge
  const sc::WeightedGraph g = sc::parse_ssc(
      "p ssc 6 6\n"
      "e 1 2 1\ne 2 3 1\ne 3 4 5\ne 4 5 1\ne 5 6 1\ne 6 1 1\n");

  for (const auto algo : {sc::Algorithm::Treewidth, sc::Algorithm::VertexCover, sc::Algorithm::RandomSeparation}) {
    const auto s = sc::solve_sse(g, 3, algo);
    std::cout << "psi_3 via " << sc::to_string(algo) << " = " << s.value.str() << ", S = ";
    print_set(s.witness);
    std::cout << '\n';
  }

  // the kSC solvers take unit weights
  const sc::WeightedGraph c8 = sc::parse_ssc(
      "p ssc 8 8\n"
      "e 1 2 1\ne 2 3 1\ne 3 4 1\ne 4 5 1\ne 5 6 1\ne 6 7 1\ne 7 8 1\ne 8 1 1\n");
  const auto p = sc::solve_ksc(c8, 2, sc::Algorithm::Treewidth);
  std::cout << "phi_2(C8) = " << p.value.str() << ", parts:";
  for (const auto& part : p.partition) {
    std::cout << ' ';
    print_set(part);
  }
  std::cout << '\n';

  const auto d = sc::ksc_decision(c8, 3, sc::Rational(1), sc::Algorithm::VertexCover);
  std::cout << "C8 in 3 parts with expansion <= 1: " << (d.yes ? "yes" : "no") << '\n';

  // a partition instance turned into a kSC instance
  const auto inst = sc::gen_partition_ksc({{1, 1, 2}, 2}, 3);
  std::cout << "generated " << inst.graph.order() << " vertices, threshold " << inst.threshold.str()
            << ", expected " << sc::to_string(inst.expected) << '\n';
}
