#pragma once

// Deterministic builders for the crooked graph G_Q, its Wood-class
// augmentations, the W5 fibre-embedding recursion, the W7 Cayley graphs on
// F_p^2, and small named fixtures.
//
// Vertex layouts are pinned so exported edge lists are byte-reproducible:
//   crooked:  (a, i, alpha) -> (a * 2 + i) * q + alpha,  fibre index a * 2 + i
//   w3:       crooked block, then hub v_j at 2q^2 + j, apex v at 2q^2 + 2q
//   cayley:   (x, y) -> x * p + y

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "wood/crooked.hpp"
#include "wood/graph.hpp"

namespace wood {

struct CrookedVertex {
  Gf2Elem a;
  std::uint32_t i = 0;
  Gf2Elem alpha;
};

// Index layout of V x F_2 x W for q = 2^n.
Vertex crooked_index(const CrookedVertex& v, std::uint32_t q);
CrookedVertex crooked_coordinates(Vertex idx, std::uint32_t q);

struct CrookedBuildOptions {
  // Run is_crooked before building.
  bool verify = true;
  // Build even if verification fails; the result is marked unverified.
  bool allow_non_crooked = false;
  unsigned workers = 1;
};

struct CrookedGraph {
  Graph graph;
  FiberPartition fibers;
  std::uint32_t q = 0;
  // Present when verification ran.
  std::optional<CrookedVerdict> verdict;
};

// Distinct (a, i, alpha) and (b, j, beta) are adjacent iff
//   alpha + beta = Q(a + b) + (i + j + 1)(Q(a) + Q(b)).
// Throws ConstructionRefused when verification fails and allow_non_crooked is
// off.
CrookedGraph build_crooked_graph(const FunctionTable& table, const CrookedBuildOptions& opts = {});

// G_Q plus a hub v_j per fibre I_j (adjacent to I_j and the apex) and an apex
// adjacent to every hub.
Graph build_w3(const CrookedGraph& gq);
Graph build_w3(const FunctionTable& table, const CrookedBuildOptions& opts = {});

// Adds a copy of h inside every fibre via the order-preserving bijection from
// h's vertices to the fibre's sorted vertices. Throws ParameterError when
// h.order() differs from the fibre size.
Graph embed_into_fibers(const Graph& gq, const FiberPartition& part, const Graph& h);

inline constexpr int kMinW5Level = 2;
inline constexpr int kMaxW5Level = 4;

// e = 2 gives K_{4,4}; otherwise H = build_w5(e - 1) embedded into the fibres
// of G_Q for Q = x^3 over GF(2^(2^(e-1) - 1)). Throws ParameterError outside
// 2 <= e <= 4.
Graph build_w5(int e, unsigned workers = 1);

// Throws ParameterError unless p is prime with p = 11 (mod 12).
void require_w7_prime(std::int64_t p);

// Connection set {(x, x^2), (x, -x^2) : x != 0} of F_p^2, sorted.
std::vector<std::pair<std::int64_t, std::int64_t>> w7_connection_set(std::int64_t p);

// Cay(F_p^2, A) for the set above.
Graph build_w7(std::int64_t p);

// "c5", "petersen", "k44", or "star(m)" = K_{1,m-1} on 2 <= m <= 4096 vertices.
// Throws ParameterError for anything else.
Graph fixture(const std::string& name);

}  // namespace wood
