// ssc: command-line front end for the sparsecut solvers.

#include <chrono>
#include <cmath>
#include <cstdint>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "sparsecut/random_graphs.hpp"
#include "sparsecut/sparsecut.hpp"

namespace sc = sparsecut;
using nlohmann::ordered_json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitError = 1;
constexpr int kExitNo = 2;

std::string fnv1a(const std::string& text) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (const unsigned char c : text) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  std::ostringstream out;
  out << std::hex << std::setw(16) << std::setfill('0') << h;
  return out.str();
}

std::vector<std::string> split_commas(const std::string& s) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream in(s);
  while (std::getline(in, cur, ',')) {
    if (!cur.empty()) out.push_back(cur);
  }
  return out;
}

std::vector<std::int64_t> parse_int_list(const std::string& s, const std::string& what) {
  std::vector<std::int64_t> out;
  for (const std::string& tok : split_commas(s)) {
    const sc::Rational r = sc::Rational::parse(tok);
    if (!r.is_integer()) throw std::invalid_argument(what + ": '" + tok + "' is not an integer");
    out.push_back(r.num());
  }
  return out;
}

/// 1-indexed vertex list from the command line.
sc::VertexSet parse_vertices(const std::string& s, int n) {
  sc::VertexSet out;
  for (const std::int64_t v : parse_int_list(s, "vertex list")) {
    if (v < 1 || v > n) throw std::invalid_argument("vertex " + std::to_string(v) + " out of range 1.." + std::to_string(n));
    out.push_back(static_cast<sc::Vertex>(v - 1));
  }
  return sc::normalized(out);
}

ordered_json vertices_json(const sc::VertexSet& s) {
  ordered_json a = ordered_json::array();
  for (const sc::Vertex v : s) a.push_back(v + 1);
  return a;
}

ordered_json partition_json(const sc::KPartition& p) {
  ordered_json a = ordered_json::array();
  for (const auto& part : p) a.push_back(vertices_json(part));
  return a;
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write '" + path + "'");
  out << text;
}

bool decide(const sc::ExpansionValue& value, const sc::Rational& threshold) {
  return threshold.sign() >= 0 && value <= sc::ExpansionValue(threshold);
}

// ---------------------------------------------------------------- solve

struct SolveFlags {
  std::string problem;
  std::string graph;
  std::optional<int> k;
  std::string algo;
  std::optional<std::string> td;
  std::optional<std::string> cover;
  std::optional<std::string> threshold;
  std::optional<std::uint64_t> trials;
  std::optional<std::string> delta;
  std::uint64_t seed = 1;
  bool timing = false;
};

int cmd_solve(const SolveFlags& f) {
  const auto start = std::chrono::steady_clock::now();
  const sc::WeightedGraph g = sc::read_ssc(f.graph);
  const int n = g.order();
  const sc::Algorithm algo = sc::parse_algorithm(f.algo);
  const unsigned threads = sc::threads_from_env();

  ordered_json report;
  report["problem"] = f.problem;
  report["algorithm"] = sc::to_string(algo);
  report["instance_digest"] = fnv1a(sc::to_ssc(g));
  report["vertices"] = n;
  report["edges"] = g.size();

  int k = 0;
  if (f.problem == "2sc") {
    if (n < 2) throw std::invalid_argument("2sc needs at least 2 vertices");
    k = n / 2;
  } else {
    if (!f.k) throw std::invalid_argument("--k is required for " + f.problem);
    k = *f.k;
  }
  report["k"] = (f.problem == "2sc") ? 2 : k;

  std::optional<sc::NiceTreeDecomposition> nice;
  if (algo == sc::Algorithm::Treewidth) {
    sc::TreeDecomposition td;
    std::string source = "heuristic";
    if (f.td) {
      const sc::TdFile file = sc::read_td(*f.td);
      if (file.vertices != n) {
        throw std::invalid_argument("decomposition declares " + std::to_string(file.vertices) + " vertices, graph has " + std::to_string(n));
      }
      td = file.td;
      source = "file";
    } else {
      td = sc::heuristic_decompose(g);
    }
    if (auto v = sc::validate(g, td); !v) throw std::invalid_argument("invalid tree decomposition: " + v.message());
    nice = sc::make_nice(td);
    report["decomposition"] = {{"source", source}, {"width", td.width()}, {"digest", fnv1a(sc::to_td(td, n))}};
  }

  std::optional<sc::VertexSet> cover;
  if (algo == sc::Algorithm::VertexCover) {
    std::string source = "search";
    if (f.cover) {
      cover = parse_vertices(*f.cover, n);
      for (const sc::Edge& e : g.edges()) {
        if (!std::binary_search(cover->begin(), cover->end(), e.u) && !std::binary_search(cover->begin(), cover->end(), e.v)) {
          throw std::invalid_argument("not a vertex cover: edge " + std::to_string(e.u + 1) + "-" + std::to_string(e.v + 1) + " is uncovered");
        }
      }
      source = "file";
    } else {
      cover = sc::minimum_vertex_cover(g);
    }
    report["cover"] = {{"source", source}, {"size", cover->size()}, {"vertices", vertices_json(*cover)}};
  }

  std::optional<sc::RandomizedFamily> randomized;
  std::optional<sc::ExhaustiveFamily> exhaustive;
  const sc::ColoringFamily* family = nullptr;
  if (algo == sc::Algorithm::RandomSeparation) {
    const int kk = std::min(k, n - 1);
    if (f.trials) {
      family = &randomized.emplace(*f.trials, f.seed);
    } else if (f.delta) {
      const std::uint64_t t = sc::trial_count(kk, sc::max_degree(g), sc::Rational::parse(*f.delta));
      family = &randomized.emplace(t, f.seed);
    } else {
      family = &exhaustive.emplace(n);
    }
    report["family"] = family->describe();
  }

  ordered_json stats = ordered_json::object();
  sc::ExpansionValue value;
  if (f.problem == "sse" || f.problem == "2sc") {
    sc::SseSolution s;
    switch (algo) {
      case sc::Algorithm::Brute:
        s = sc::sse_brute(g, k);
        break;
      case sc::Algorithm::Treewidth: {
        const auto r = sc::sse_treewidth_dp(g, k, *nice);
        s = r.solution;
        stats = {{"width", r.stats.width},
                 {"nodes", r.stats.nodes},
                 {"retained_entries", r.stats.retained_entries},
                 {"peak_live_entries", r.stats.peak_live_entries}};
        break;
      }
      case sc::Algorithm::VertexCover:
        s = sc::sse_vertex_cover(g, k, *cover);
        stats = {{"cover_subsets", std::uint64_t{1} << cover->size()}};
        break;
      case sc::Algorithm::RandomSeparation: {
        const auto r = sc::sse_random_separation(g, std::min(k, n - 1), *family, threads);
        if (r.best) s = *r.best;
        else s = {sc::ExpansionValue::infinity(), {}};
        stats = {{"trials", r.trials}, {"productive_trials", r.productive_trials}, {"best_trial", r.best_trial}};
        break;
      }
    }
    value = s.value;
    if (s.value.is_finite()) {
      // Re-verify before printing.
      if (s.witness.empty() || static_cast<int>(s.witness.size()) > std::min(k, n - 1) || sc::edge_expansion(g, s.witness) != s.value) {
        throw std::logic_error("internal error: witness does not reproduce the reported value");
      }
    }
    if (f.problem == "sse") {
      report["value"] = s.value.str();
      report["witness"] = s.value.is_finite() ? vertices_json(s.witness) : ordered_json(nullptr);
    } else {
      report["value"] = s.value.str();
      if (s.value.is_finite()) {
        sc::VertexSet rest;
        for (sc::Vertex v = 0; v < n; ++v) {
          if (!std::binary_search(s.witness.begin(), s.witness.end(), v)) rest.push_back(v);
        }
        const sc::KPartition p{s.witness, rest};
        if (sc::partition_expansion(g, p) != s.value) throw std::logic_error("internal error: partition does not reproduce the reported value");
        report["partition"] = partition_json(p);
      } else {
        report["partition"] = nullptr;
      }
    }
  } else if (f.problem == "ksc") {
    sc::KscSolution s;
    switch (algo) {
      case sc::Algorithm::Brute:
        s = sc::ksc_brute(g, k);
        break;
      case sc::Algorithm::Treewidth: {
        const auto r = sc::ksc_treewidth_dp(g, k, *nice);
        s = r.solution;
        stats = {{"width", r.stats.width},
                 {"total_entries", r.stats.total_entries},
                 {"max_node_entries", r.stats.max_node_entries},
                 {"within_bound", r.stats.within_bound}};
        break;
      }
      case sc::Algorithm::VertexCover: {
        const auto r = sc::ksc_vertex_cover(g, k, *cover, threads);
        s = r.solution;
        stats = {{"cover_partitions", r.stats.cover_partitions}, {"pareto_states", r.stats.pareto_states}};
        break;
      }
      case sc::Algorithm::RandomSeparation:
        throw std::invalid_argument("randsep solves sse and 2sc only");
    }
    sc::require_partition(g, s.partition);
    if (static_cast<int>(s.partition.size()) != k || sc::partition_expansion(g, s.partition) != s.value) {
      throw std::logic_error("internal error: partition does not reproduce the reported value");
    }
    value = s.value;
    report["value"] = s.value.str();
    report["partition"] = partition_json(s.partition);
  } else {
    throw std::invalid_argument("unknown problem '" + f.problem + "'");
  }
  report["stats"] = stats;

  int code = kExitOk;
  if (f.threshold) {
    const sc::Rational t = sc::Rational::parse(*f.threshold);
    const bool yes = decide(value, t);
    report["threshold"] = t.str();
    report["decision"] = yes ? "yes" : "no";
    if (!yes) code = kExitNo;
  }
  if (f.timing) {
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    report["wall_seconds"] = secs;
  }
  std::cout << report.dump(2) << '\n';
  return code;
}

// ---------------------------------------------------------------- gen

/// Source answer for kSC at N when the source graph is small enough to brute force.
sc::Expected source_ksc_answer(const sc::WeightedGraph& g, int k, const sc::Rational& N) {
  if (g.order() > 12 || k < 2 || k > g.order()) return sc::Expected::Unknown;
  return sc::expected_from(decide(sc::ksc_brute(g, k).value, N));
}

int emit(const sc::GeneratedInstance& inst, const std::string& prefix) {
  write_file(prefix + ".ssc", sc::to_ssc(inst.graph));
  write_file(prefix + ".meta", sc::to_meta(inst));
  ordered_json out;
  out["graph"] = prefix + ".ssc";
  out["meta"] = prefix + ".meta";
  out["problem"] = inst.problem;
  out["vertices"] = inst.graph.order();
  out["edges"] = inst.graph.size();
  out["k"] = inst.k;
  out["threshold"] = inst.threshold.str();
  out["expected"] = sc::to_string(inst.expected);
  std::cout << out.dump(2) << '\n';
  return kExitOk;
}

// ---------------------------------------------------------------- check

struct CheckFlags {
  int nmax = 7;
  int kmax = 3;
  int instances = 200;
  std::uint64_t seed = 7;
  bool weighted = false;
};

int cmd_check(const CheckFlags& f) {
  if (f.nmax < 2) throw std::invalid_argument("--nmax must be at least 2");
  if (f.nmax > sc::ExhaustiveFamily::kMaxVertices) throw std::invalid_argument("--nmax above 22 is not supported (exhaustive colorings)");
  if (f.kmax < 1) throw std::invalid_argument("--kmax must be at least 1");
  if (f.instances < 0) throw std::invalid_argument("--instances must be nonnegative");

  struct Tally {
    std::string name;
    long runs = 0;
    long mismatches = 0;
  };
  std::vector<Tally> tally{{"sse/tw"}, {"sse/vc"}, {"sse/randsep"}, {"2sc/tw"}, {"ksc/tw"}, {"ksc/vc"}};
  std::mt19937_64 rng(f.seed);
  bool printed_header = false;

  auto report_mismatch = [&](const sc::WeightedGraph& g, const std::string& what, int k, const std::string& expected, const std::string& got) {
    if (!printed_header) {
      std::cout << "mismatches (replay each instance with ssc solve):\n";
      printed_header = true;
    }
    std::cout << "c mismatch " << what << " k=" << k << " brute=" << expected << " got=" << got << '\n' << sc::to_ssc(g);
  };

  // A solver that throws counts as a mismatch too.
  auto run = [&](Tally& t, const sc::WeightedGraph& g, int k, const sc::ExpansionValue& expected, auto&& solve) {
    ++t.runs;
    std::pair<bool, std::string> outcome;
    try {
      outcome = solve();
    } catch (const std::exception& e) {
      outcome = {false, std::string("error(") + e.what() + ")"};
    }
    if (!outcome.first) {
      ++t.mismatches;
      report_mismatch(g, t.name, k, expected.str(), outcome.second);
    }
  };

  for (int i = 0; i < f.instances; ++i) {
    const sc::WeightedGraph g = sc::random_small_graph(rng, 2, f.nmax, f.weighted);
    const int n = g.order();
    const auto nice = sc::make_nice(sc::heuristic_decompose(g));
    const auto cover = sc::minimum_vertex_cover(g);
    const sc::ExhaustiveFamily family(n);

    for (int k = 1; k <= f.kmax; ++k) {
      const auto brute = sc::sse_brute(g, k);
      auto sse_ok = [&](const sc::SseSolution& s) {
        return s.value == brute.value && !s.witness.empty() && static_cast<int>(s.witness.size()) <= std::min(k, n - 1) &&
               sc::edge_expansion(g, s.witness) == s.value;
      };
      run(tally[0], g, k, brute.value, [&] {
        const auto s = sc::sse_treewidth_dp(g, k, nice).solution;
        return std::pair{sse_ok(s), s.value.str()};
      });
      run(tally[1], g, k, brute.value, [&] {
        const auto s = sc::sse_vertex_cover(g, k, cover);
        return std::pair{sse_ok(s), s.value.str()};
      });
      run(tally[2], g, k, brute.value, [&] {
        const auto r = sc::sse_random_separation(g, std::min(k, n - 1), family);
        if (!r.best) return std::pair{false, std::string("inf")};
        return std::pair{sse_ok(*r.best), r.best->value.str()};
      });
    }

    const auto two = sc::ksc_brute(g, 2);
    run(tally[3], g, 2, two.value, [&] {
      const auto s = sc::solve_2sc(g, sc::Algorithm::Treewidth, {nice, std::nullopt, nullptr, 1});
      return std::pair{s.value == two.value && sc::partition_expansion(g, s.partition) == s.value, s.value.str()};
    });

    std::vector<sc::Edge> unit;
    for (const sc::Edge& e : g.edges()) unit.push_back({e.u, e.v, 1});
    const sc::WeightedGraph ug(n, unit);
    for (int k = 2; k <= std::min(f.kmax, n); ++k) {
      const auto brute = sc::ksc_brute(ug, k);
      auto ksc_ok = [&](const sc::KscSolution& s) {
        if (s.value != brute.value || static_cast<int>(s.partition.size()) != k) return false;
        sc::require_partition(ug, s.partition);
        return sc::partition_expansion(ug, s.partition) == s.value;
      };
      run(tally[4], ug, k, brute.value, [&] {
        const auto s = sc::ksc_treewidth_dp(ug, k, nice).solution;
        return std::pair{ksc_ok(s), s.value.str()};
      });
      run(tally[5], ug, k, brute.value, [&] {
        const auto s = sc::ksc_vertex_cover(ug, k, cover).solution;
        return std::pair{ksc_ok(s), s.value.str()};
      });
    }
  }

  long total_mismatches = 0;
  std::cout << std::left << std::setw(14) << "check" << std::setw(8) << "runs" << std::setw(12) << "mismatches"
            << "status\n";
  for (const Tally& t : tally) {
    total_mismatches += t.mismatches;
    std::cout << std::left << std::setw(14) << t.name << std::setw(8) << t.runs << std::setw(12) << t.mismatches << (t.mismatches ? "FAIL" : "pass")
              << '\n';
  }
  std::cout << (total_mismatches ? "FAIL" : "pass") << '\n';
  return total_mismatches ? kExitError : kExitOk;
}

// ---------------------------------------------------------------- bench

struct BenchFlags {
  std::string family = "path";
  std::string sizes = "50,100,200,400";
  int rows = 4;
  int k = 3;
  std::string algos = "sse-tw";
  std::string delta = "1/10";
  std::uint64_t seed = 1;
};

sc::WeightedGraph bench_graph(const BenchFlags& f, int n, std::mt19937_64& rng) {
  if (f.family == "path") return sc::families::path(n);
  if (f.family == "cycle") return sc::families::cycle(n);
  if (f.family == "grid") {
    if (f.rows < 1 || n % f.rows != 0) throw std::invalid_argument("grid size " + std::to_string(n) + " is not a multiple of --rows");
    return sc::families::grid(f.rows, n / f.rows);
  }
  if (f.family == "random") return sc::random_graph(rng, n, std::min(1.0, 3.0 / n), false);
  throw std::invalid_argument("unknown family '" + f.family + "' (path, cycle, grid, random)");
}

int cmd_bench(const BenchFlags& f) {
  std::mt19937_64 rng(f.seed);
  std::cout << "family,n,m,width,cover,max_degree,k,algorithm,entries,bound,seconds,value\n";
  for (const std::int64_t n64 : parse_int_list(f.sizes, "--sizes")) {
    const int n = static_cast<int>(n64);
    const sc::WeightedGraph g = bench_graph(f, n, rng);
    const auto td = sc::heuristic_decompose(g);
    const auto nice = sc::make_nice(td);
    const int width = td.width();
    const int delta_max = sc::max_degree(g);
    std::optional<sc::VertexSet> cover;
    for (const std::string& algo : split_commas(f.algos)) {
      const bool wants_cover = algo == "sse-vc" || algo == "ksc-vc";
      if (wants_cover && !cover) cover = sc::minimum_vertex_cover(g);
      const auto start = std::chrono::steady_clock::now();
      std::string entries;
      std::string bound;
      sc::ExpansionValue value;
      if (algo == "sse-tw") {
        const auto r = sc::sse_treewidth_dp(g, f.k, nice);
        entries = std::to_string(r.stats.retained_entries);
        bound = std::to_string(static_cast<std::uint64_t>(std::ldexp(1.0, width)) * static_cast<std::uint64_t>(n) * static_cast<std::uint64_t>(f.k + 1));
        value = r.solution.value;
      } else if (algo == "sse-vc") {
        value = sc::sse_vertex_cover(g, f.k, *cover).value;
        entries = std::to_string(std::uint64_t{1} << cover->size());
      } else if (algo == "sse-randsep") {
        const int kk = std::min(f.k, n - 1);
        const sc::RandomizedFamily fam(sc::trial_count(kk, delta_max, sc::Rational::parse(f.delta)), f.seed);
        const auto r = sc::sse_random_separation(g, kk, fam, sc::threads_from_env());
        entries = std::to_string(r.trials);
        value = r.best ? r.best->value : sc::ExpansionValue::infinity();
      } else if (algo == "ksc-tw") {
        const auto r = sc::ksc_treewidth_dp(g, f.k, nice);
        entries = std::to_string(r.stats.max_node_entries);
        bound = std::to_string(sc::ksc_entry_bound(width + 1, n, g.size(), f.k));
        value = r.solution.value;
      } else if (algo == "ksc-vc") {
        const auto r = sc::ksc_vertex_cover(g, f.k, *cover, sc::threads_from_env());
        entries = std::to_string(r.stats.pareto_states);
        value = r.solution.value;
      } else {
        throw std::invalid_argument("unknown bench algorithm '" + algo + "' (sse-tw, sse-vc, sse-randsep, ksc-tw, ksc-vc)");
      }
      const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
      std::cout << f.family << ',' << n << ',' << g.size() << ',' << width << ',' << (cover ? std::to_string(cover->size()) : "") << ','
                << delta_max << ',' << f.k << ',' << algo << ',' << entries << ',' << bound << ',' << secs << ',' << value.str() << '\n';
    }
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact solvers for k-sparsest cut and k-small-set expansion"};
  app.require_subcommand(1);
  int code = kExitOk;

  // solve
  SolveFlags sf;
  auto* solve = app.add_subcommand("solve", "Solve an instance and print a JSON report");
  solve->add_option("problem", sf.problem, "sse, ksc or 2sc")->required()->check(CLI::IsMember({"sse", "ksc", "2sc"}));
  solve->add_option("--graph", sf.graph, ".ssc graph file")->required();
  solve->add_option("--k", sf.k, "set size bound (sse) or number of parts (ksc)");
  solve->add_option("--algo", sf.algo, "brute, tw, vc or randsep")->required()->check(CLI::IsMember({"brute", "tw", "vc", "randsep"}));
  solve->add_option("--td", sf.td, "PACE .td decomposition (tw)");
  solve->add_option("--cover", sf.cover, "vertex cover as v,v,... (vc, 1-indexed)");
  solve->add_option("--threshold", sf.threshold, "decision threshold num/den");
  auto* trials = solve->add_option("--trials", sf.trials, "random colorings (randsep)");
  solve->add_option("--delta", sf.delta, "failure probability; trials from the 2^((d+1)k) ln(1/delta) bound (randsep)")->excludes(trials);
  solve->add_option("--seed", sf.seed, "seed of the randomized coloring family");
  solve->add_flag("--timing", sf.timing, "include wall time in the report");
  solve->callback([&] { code = cmd_solve(sf); });

  // gen
  auto* gen = app.add_subcommand("gen", "Generate a reduction instance (PREFIX.ssc and PREFIX.meta)");
  gen->require_subcommand(1);
  std::string out_prefix;
  std::string weights;
  std::string graph_path;
  std::string threshold;
  std::int64_t partition_b = 0;
  int k = 0;
  std::optional<std::int64_t> big_m_int;
  std::optional<std::string> big_m;
  std::optional<std::string> big_l;
  int bins = 0;
  std::int64_t capacity = 0;
  std::optional<std::int64_t> chi;

  auto* g_part = gen->add_subcommand("partition-ksc", "Partition -> kSC with vertex cover 3");
  g_part->add_option("--weights", weights, "w1,w2,...")->required();
  g_part->add_option("--B", partition_b, "half of the total weight")->required();
  g_part->add_option("--k", k, "parts (>= 3)")->required();
  g_part->add_option("--M", big_m_int, "gadget size M (default n+k+2)");
  g_part->add_option("--L", big_l, "stand-in for infinite edge weights");
  g_part->add_option("--out", out_prefix, "output prefix")->required();
  g_part->callback([&] {
    std::optional<sc::Rational> L;
    if (big_l) L = sc::Rational::parse(*big_l);
    code = emit(sc::gen_partition_ksc({parse_int_list(weights, "--weights"), partition_b}, k, big_m_int, L), out_prefix);
  });

  auto* g_ubp = gen->add_subcommand("ubp-ksc", "Unary bin packing -> vertex-weighted kSC");
  g_ubp->add_option("--weights", weights, "item weights w1,w2,...")->required();
  g_ubp->add_option("--bins", bins, "number of bins (>= 3)")->required();
  g_ubp->add_option("--capacity", capacity, "bin capacity")->required();
  g_ubp->add_option("--out", out_prefix, "output prefix")->required();
  g_ubp->callback([&] { code = emit(sc::gen_ubp_ksc({parse_int_list(weights, "--weights"), bins, capacity}), out_prefix); });

  auto* g_md3 = gen->add_subcommand("maxdeg3", "kSC instance -> max degree 3 (threshold N/n)");
  g_md3->add_option("--graph", graph_path, "source .ssc graph")->required();
  g_md3->add_option("--k", k, "parts")->required();
  g_md3->add_option("--threshold", threshold, "source threshold N")->required();
  g_md3->add_option("--M", big_m, "cycle edge weight");
  g_md3->add_option("--out", out_prefix, "output prefix")->required();
  g_md3->callback([&] {
    const auto g = sc::read_ssc(graph_path);
    const auto N = sc::Rational::parse(threshold);
    std::optional<sc::Rational> M;
    if (big_m) M = sc::Rational::parse(*big_m);
    code = emit(sc::maxdeg3_instance(g, k, N, M, source_ksc_answer(g, k, N)), out_prefix);
  });

  auto* g_dg2 = gen->add_subcommand("degen2", "kSC instance -> degeneracy 2 (threshold N/(n+N))");
  g_dg2->add_option("--graph", graph_path, "source .ssc graph")->required();
  g_dg2->add_option("--k", k, "parts")->required();
  g_dg2->add_option("--threshold", threshold, "source threshold N")->required();
  g_dg2->add_option("--M", big_m, "cycle edge weight of the intermediate graph");
  g_dg2->add_option("--L", big_l, "weight of the outer subdivision edges");
  g_dg2->add_option("--out", out_prefix, "output prefix")->required();
  g_dg2->callback([&] {
    const auto g = sc::read_ssc(graph_path);
    const auto N = sc::Rational::parse(threshold);
    std::optional<sc::Rational> M;
    std::optional<sc::Rational> L;
    if (big_m) M = sc::Rational::parse(*big_m);
    if (big_l) L = sc::Rational::parse(*big_l);
    code = emit(sc::degen2_instance(g, k, N, M, L, source_ksc_answer(g, k, N)), out_prefix);
  });

  auto* g_unit = gen->add_subcommand("unitarize", "Vertex-weighted kSC -> unweighted (threshold N/chi)");
  g_unit->add_option("--graph", graph_path, "source .ssc graph with vertex weights")->required();
  g_unit->add_option("--k", k, "parts")->required();
  g_unit->add_option("--threshold", threshold, "source threshold N")->required();
  g_unit->add_option("--chi", chi, "scale factor (default: smallest valid)");
  g_unit->add_option("--out", out_prefix, "output prefix")->required();
  g_unit->callback([&] {
    const auto g = sc::read_ssc(graph_path);
    const auto N = sc::Rational::parse(threshold);
    const std::int64_t c = chi.value_or(sc::minimal_chi(g));
    sc::GeneratedInstance inst;
    inst.problem = "ksc";
    inst.graph = sc::unitarize(g, c);
    inst.k = k;
    inst.threshold = N / sc::Rational(c);
    inst.expected = source_ksc_answer(g, k, N);
    inst.record("construction", "unitarize");
    inst.record("chi", std::to_string(c));
    inst.record("source.threshold", N.str());
    inst.record("relation", "phi_k(G) = chi * phi_k(G')");
    code = emit(inst, out_prefix);
  });

  auto* g_clq = gen->add_subcommand("clique-sse", "k-clique on a regular graph -> kSSE (threshold d-k+1)");
  g_clq->add_option("--graph", graph_path, "regular .ssc graph")->required();
  g_clq->add_option("--k", k, "clique size")->required();
  g_clq->add_option("--out", out_prefix, "output prefix")->required();
  g_clq->callback([&] { code = emit(sc::gen_clique_sse(sc::read_ssc(graph_path), k), out_prefix); });

  // check
  CheckFlags cf;
  auto* check = app.add_subcommand("check", "Compare every algorithm with brute force on random instances");
  check->add_option("--nmax", cf.nmax, "largest vertex count");
  check->add_option("--kmax", cf.kmax, "largest k");
  check->add_option("--instances", cf.instances, "number of random graphs");
  check->add_option("--seed", cf.seed, "generator seed");
  check->add_flag("--weighted", cf.weighted, "random rational edge weights (kSC checks use the unweighted skeleton)");
  check->callback([&] { code = cmd_check(cf); });

  // bench
  BenchFlags bf;
  auto* bench = app.add_subcommand("bench", "Scaling runs as CSV");
  bench->add_option("--family", bf.family, "path, cycle, grid or random");
  bench->add_option("--sizes", bf.sizes, "vertex counts n1,n2,...");
  bench->add_option("--rows", bf.rows, "grid rows");
  bench->add_option("--k", bf.k, "k");
  bench->add_option("--algo", bf.algos, "sse-tw, sse-vc, sse-randsep, ksc-tw, ksc-vc (comma separated)");
  bench->add_option("--delta", bf.delta, "failure probability for sse-randsep");
  bench->add_option("--seed", bf.seed, "seed for random graphs and colorings");
  bench->callback([&] { code = cmd_bench(bf); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kExitOk : kExitError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitError;
  }
  return code;
}
