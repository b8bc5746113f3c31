#pragma once

// Small graphs shared by the oracle-equivalence tests.

#include <random>
#include <string>
#include <utility>
#include <vector>

#include "wood/constructions.hpp"
#include "wood/graph.hpp"

namespace corpus {

inline wood::Graph random_graph(std::size_t n, double p, unsigned seed) {
  std::mt19937 rng(seed);
  std::bernoulli_distribution coin(p);
  wood::GraphBuilder b(n);
  for (wood::Vertex u = 0; u < n; ++u)
    for (wood::Vertex v = u + 1; v < n; ++v)
      if (coin(rng)) b.add_edge(u, v);
  return std::move(b).build();
}

inline wood::Graph path(std::size_t n) {
  wood::GraphBuilder b(n);
  for (wood::Vertex v = 0; v + 1 < n; ++v) b.add_edge(v, v + 1);
  return std::move(b).build();
}

inline wood::Graph cycle(std::size_t n) {
  wood::GraphBuilder b(n);
  for (wood::Vertex v = 0; v < n; ++v) b.add_edge(v, static_cast<wood::Vertex>((v + 1) % n));
  return std::move(b).build();
}

inline wood::Graph complete(std::size_t n) {
  wood::GraphBuilder b(n);
  for (wood::Vertex u = 0; u < n; ++u)
    for (wood::Vertex v = u + 1; v < n; ++v) b.add_edge(u, v);
  return std::move(b).build();
}

inline wood::Graph hypercube(int dim) {
  const std::size_t n = std::size_t{1} << dim;
  wood::GraphBuilder b(n);
  for (wood::Vertex v = 0; v < n; ++v)
    for (int k = 0; k < dim; ++k) b.add_edge(v, v ^ (1u << k));
  return std::move(b).build();
}

// Every graph of order <= 200 the verifier suites compare against oracles.
inline std::vector<std::pair<std::string, wood::Graph>> small_graphs() {
  std::vector<std::pair<std::string, wood::Graph>> out;
  out.emplace_back("c5", wood::fixture("c5"));
  out.emplace_back("petersen", wood::fixture("petersen"));
  out.emplace_back("k44", wood::fixture("k44"));
  out.emplace_back("star(6)", wood::fixture("star(6)"));
  out.emplace_back("p4", path(4));
  out.emplace_back("c6", cycle(6));
  out.emplace_back("k5", complete(5));
  out.emplace_back("q4", hypercube(4));
  out.emplace_back("crooked(n=3)",
                   wood::build_crooked_graph(wood::tabulate_power_map(wood::make_field(3), 3)).graph);
  out.emplace_back("w5(3)", wood::build_w5(3));
  out.emplace_back("w7(11)", wood::build_w7(11));
  out.emplace_back("w3(n=2 unverified)", [] {
    wood::CrookedBuildOptions o;
    o.allow_non_crooked = true;
    return wood::build_w3(wood::tabulate_power_map(wood::make_field(2), 3), o);
  }());
  unsigned seed = 1;
  for (std::size_t n : {1u, 2u, 3u, 7u, 20u, 64u, 65u, 130u, 200u})
    for (double p : {0.05, 0.3, 0.8}) out.emplace_back("random", random_graph(n, p, seed++));
  return out;
}

}  // namespace corpus
