#pragma once

// Exact graph property verifiers. Every verifier that reports a failure
// carries the lexicographically least violating tuple, and results never
// depend on the worker count.

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "wood/graph.hpp"

namespace wood {

using VertexPair = std::pair<Vertex, Vertex>;

struct TriangleResult {
  bool triangle_free = true;
  std::optional<std::array<Vertex, 3>> witness;  // u < v < w
};

TriangleResult is_triangle_free(const Graph& g, unsigned workers = 1);

// Shortest cycle length, or nullopt when the graph is acyclic.
std::optional<std::size_t> girth(const Graph& g);

struct DiameterResult {
  enum class Status { Exact, ExceedsCap, Disconnected };
  Status status = Status::Exact;
  // Exact diameter when status == Exact.
  std::size_t value = 0;
  // Exact: least (u, v), u < v, with d(u, v) = diameter. ExceedsCap: least
  // (u, v) with d(u, v) > cap. Disconnected: least unreachable pair.
  std::optional<VertexPair> witness;

  bool is(std::size_t d) const { return status == Status::Exact && value == d; }
};

std::string to_string(DiameterResult::Status s);

// Frontier-bitset BFS from every vertex, switching to bottom-up expansion
// when the frontier outgrows the unvisited set.
DiameterResult diameter(const Graph& g, std::size_t cap, unsigned workers = 1);

// Counts of unordered pairs by number of common neighbours. Buckets 0..15 are
// exact; bucket 16 collects everything >= 16.
struct CommonNeighborHistogram {
  static constexpr std::size_t kBuckets = 17;
  std::array<std::uint64_t, kBuckets> counts{};

  void add(std::size_t c, std::uint64_t times = 1) { counts[c < kBuckets - 1 ? c : kBuckets - 1] += times; }
  std::uint64_t total() const;
  CommonNeighborHistogram& operator+=(const CommonNeighborHistogram& o);
  friend bool operator==(const CommonNeighborHistogram&, const CommonNeighborHistogram&) = default;
};

enum class CommonNeighborMethod { Auto, BitsetPairs, Wedges };
std::string to_string(CommonNeighborMethod m);

struct CommonNeighborProfile {
  CommonNeighborMethod method = CommonNeighborMethod::Auto;  // the one actually run
  // Maximum over all distinct pairs (0 when order < 2).
  std::size_t max_common = 0;
  std::optional<VertexPair> max_witness;
  // Minimum over nonadjacent distinct pairs; nullopt when there are none.
  std::optional<std::size_t> min_common_nonadjacent;
  std::optional<VertexPair> min_witness;
  CommonNeighborHistogram adjacent;
  CommonNeighborHistogram nonadjacent;
};

// Estimated word/counter operations of each method for this graph.
double bitset_pair_cost(const Graph& g);
double wedge_cost(const Graph& g);

CommonNeighborProfile common_neighbor_profile(const Graph& g, unsigned workers = 1,
                                              CommonNeighborMethod method = CommonNeighborMethod::Auto);

std::size_t common_neighbors(const Graph& g, Vertex u, Vertex v);

struct DegreeProfile {
  std::size_t min = 0;
  std::size_t max = 0;
  bool regular = true;
  std::map<std::size_t, std::size_t> counts;  // degree -> number of vertices
  std::uint64_t degree_sum = 0;
};

DegreeProfile degree_profile(const Graph& g);

// Some vertex is adjacent to every other one and all others have degree 1.
bool is_star(const Graph& g);

struct IntersectionArray {
  std::vector<std::size_t> b;  // b_0 .. b_{d-1}
  std::vector<std::size_t> c;  // c_1 .. c_d
  std::size_t diameter() const { return b.size(); }
  // k_0 = 1, k_{i+1} = k_i b_i / c_{i+1}; sums to the order for a genuine array.
  std::vector<double> class_sizes() const;
  friend bool operator==(const IntersectionArray&, const IntersectionArray&) = default;
};

std::string to_string(const IntersectionArray& a);

struct IntersectionArrayResult {
  bool distance_regular = false;
  std::optional<IntersectionArray> array;
  // Least (base, vertex) at which the local b_i / c_i disagree with base 0.
  std::optional<VertexPair> witness;
  std::string detail;
};

// Throws ParameterError when g is disconnected or empty. `base_limit`
// restricts the base vertices to [0, base_limit) for spot checks on large
// graphs; 0 means every vertex.
IntersectionArrayResult intersection_array(const Graph& g, unsigned workers = 1, std::size_t base_limit = 0);

struct CoverResult {
  bool pass = true;
  // "independence" (u, v same fiber and adjacent), "matching" (u has != 1
  // neighbours in fiber of v), "antipodal" (u, v violate the distance-3 rule),
  // or "shape" (fiber count is not twice the fiber size).
  std::string failure;
  std::vector<Vertex> witness;
};

// Throws ParameterError when the partition does not match the graph order.
CoverResult check_cover_structure(const Graph& g, const FiberPartition& part, unsigned workers = 1);

}  // namespace wood
