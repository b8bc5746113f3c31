#pragma once

// Immutable simple undirected graphs with bit-packed adjacency rows plus a
// CSR neighbour list. Built once through GraphBuilder, then shared read-only.

#include <bit>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace wood {

using Vertex = std::uint32_t;
using Word = std::uint64_t;
inline constexpr std::size_t kWordBits = 64;

inline std::size_t words_for(std::size_t bits) { return (bits + kWordBits - 1) / kWordBits; }

class Graph {
 public:
  Graph() = default;

  std::size_t order() const { return order_; }
  std::size_t words_per_row() const { return words_; }
  std::size_t edge_count() const { return targets_.size() / 2; }

  std::span<const Word> row(Vertex v) const { return {bits_.data() + std::size_t{v} * words_, words_}; }
  bool adjacent(Vertex u, Vertex v) const {
    return (bits_[std::size_t{u} * words_ + v / kWordBits] >> (v % kWordBits)) & 1u;
  }
  // Sorted ascending.
  std::span<const Vertex> neighbors(Vertex v) const {
    return {targets_.data() + offsets_[v], offsets_[v + 1] - offsets_[v]};
  }
  std::size_t degree(Vertex v) const { return offsets_[v + 1] - offsets_[v]; }

  bool has_labels() const { return !labels_.empty(); }
  // Empty string when the graph carries no labels.
  const std::string& label(Vertex v) const;
  const std::vector<std::string>& labels() const { return labels_; }

  // All edges (u, v) with u < v in lexicographic order.
  std::vector<std::pair<Vertex, Vertex>> edges() const;

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.order_ == b.order_ && a.bits_ == b.bits_;
  }

 private:
  friend class GraphBuilder;

  std::size_t order_ = 0;
  std::size_t words_ = 0;
  std::vector<Word> bits_;
  std::vector<std::size_t> offsets_{0};
  std::vector<Vertex> targets_;
  std::vector<std::string> labels_;
};

class GraphBuilder {
 public:
  explicit GraphBuilder(std::size_t order);
  // Starts from an existing graph's edges and labels.
  explicit GraphBuilder(const Graph& base);

  std::size_t order() const { return order_; }

  // Idempotent. Throws ParameterError on self-loops or out-of-range vertices.
  void add_edge(Vertex u, Vertex v);
  bool has_edge(Vertex u, Vertex v) const;
  void set_label(Vertex v, std::string label);

  Graph build() &&;

 private:
  std::size_t order_;
  std::size_t words_;
  std::vector<Word> bits_;
  std::vector<std::string> labels_;
};

// Rows are mirror images of each other and the diagonal is clear. Checked by a
// transpose walk over the packed rows.
bool is_symmetric_loopless(const Graph& g);

// Vertex index sets I_1..I_m that partition [0, order) into classes of equal
// size. For a crooked graph m = 2q and every class has q vertices.
class FiberPartition {
 public:
  FiberPartition() = default;
  // Throws ParameterError unless the sets are nonempty, pairwise disjoint,
  // of equal size and cover [0, order) exactly. Sets are stored sorted.
  FiberPartition(std::vector<std::vector<Vertex>> fibers, std::size_t order);

  std::size_t fiber_count() const { return fibers_.size(); }
  std::size_t fiber_size() const { return fibers_.empty() ? 0 : fibers_.front().size(); }
  std::size_t order() const { return fiber_of_.size(); }
  std::span<const Vertex> fiber(std::size_t j) const { return fibers_[j]; }
  const std::vector<std::vector<Vertex>>& fibers() const { return fibers_; }
  std::size_t fiber_of(Vertex v) const { return fiber_of_[v]; }

 private:
  std::vector<std::vector<Vertex>> fibers_;
  std::vector<std::size_t> fiber_of_;
};

}  // namespace wood
