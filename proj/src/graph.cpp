#include "wood/graph.hpp"

#include <algorithm>
#include <limits>
#include <string>

#include "wood/error.hpp"

namespace wood {

const std::string& Graph::label(Vertex v) const {
  static const std::string kEmpty;
  return labels_.empty() ? kEmpty : labels_[v];
}

std::vector<std::pair<Vertex, Vertex>> Graph::edges() const {
  std::vector<std::pair<Vertex, Vertex>> out;
  out.reserve(edge_count());
  for (Vertex u = 0; u < order_; ++u)
    for (Vertex v : neighbors(u))
      if (v > u) out.emplace_back(u, v);
  return out;
}

GraphBuilder::GraphBuilder(std::size_t order)
    : order_(order), words_(words_for(order)), bits_(order * words_for(order), 0) {
  if (order > std::numeric_limits<Vertex>::max())
    throw ParameterError("graph order " + std::to_string(order) + " exceeds the vertex index range");
}

GraphBuilder::GraphBuilder(const Graph& base)
    : order_(base.order_), words_(base.words_), bits_(base.bits_), labels_(base.labels_) {}

void GraphBuilder::add_edge(Vertex u, Vertex v) {
  if (u >= order_ || v >= order_)
    throw ParameterError("edge (" + std::to_string(u) + ", " + std::to_string(v) +
                         ") outside graph of order " + std::to_string(order_));
  if (u == v) throw ParameterError("self-loop at vertex " + std::to_string(u));
  bits_[std::size_t{u} * words_ + v / kWordBits] |= Word{1} << (v % kWordBits);
  bits_[std::size_t{v} * words_ + u / kWordBits] |= Word{1} << (u % kWordBits);
}

bool GraphBuilder::has_edge(Vertex u, Vertex v) const {
  return (bits_[std::size_t{u} * words_ + v / kWordBits] >> (v % kWordBits)) & 1u;
}

void GraphBuilder::set_label(Vertex v, std::string label) {
  if (v >= order_) throw ParameterError("label for vertex " + std::to_string(v) + " out of range");
  if (labels_.empty()) labels_.resize(order_);
  labels_[v] = std::move(label);
}

Graph GraphBuilder::build() && {
  Graph g;
  g.order_ = order_;
  g.words_ = words_;
  g.bits_ = std::move(bits_);
  g.labels_ = std::move(labels_);
  g.offsets_.assign(order_ + 1, 0);
  std::size_t total = 0;
  for (std::size_t v = 0; v < order_; ++v) {
    for (std::size_t w = 0; w < words_; ++w) total += std::popcount(g.bits_[v * words_ + w]);
    g.offsets_[v + 1] = total;
  }
  g.targets_.resize(total);
  std::size_t pos = 0;
  for (std::size_t v = 0; v < order_; ++v)
    for (std::size_t w = 0; w < words_; ++w)
      for (Word word = g.bits_[v * words_ + w]; word != 0; word &= word - 1)
        g.targets_[pos++] = static_cast<Vertex>(w * kWordBits + std::countr_zero(word));
  return g;
}

bool is_symmetric_loopless(const Graph& g) {
  for (Vertex u = 0; u < g.order(); ++u) {
    if (g.adjacent(u, u)) return false;
    const auto row = g.row(u);
    for (std::size_t w = 0; w < row.size(); ++w)
      for (Word word = row[w]; word != 0; word &= word - 1) {
        const auto v = static_cast<Vertex>(w * kWordBits + std::countr_zero(word));
        if (v >= g.order() || !g.adjacent(v, u)) return false;
      }
  }
  return true;
}

FiberPartition::FiberPartition(std::vector<std::vector<Vertex>> fibers, std::size_t order)
    : fibers_(std::move(fibers)), fiber_of_(order, std::numeric_limits<std::size_t>::max()) {
  if (fibers_.empty()) throw ParameterError("fiber partition has no fibers");
  const std::size_t size = fibers_.front().size();
  std::size_t covered = 0;
  for (std::size_t j = 0; j < fibers_.size(); ++j) {
    auto& f = fibers_[j];
    if (f.empty() || f.size() != size)
      throw ParameterError("fiber " + std::to_string(j) + " has size " + std::to_string(f.size()) +
                           ", expected " + std::to_string(size));
    std::sort(f.begin(), f.end());
    for (Vertex v : f) {
      if (v >= order) throw ParameterError("fiber vertex " + std::to_string(v) + " out of range");
      if (fiber_of_[v] != std::numeric_limits<std::size_t>::max())
        throw ParameterError("vertex " + std::to_string(v) + " lies in two fibers");
      fiber_of_[v] = j;
      ++covered;
    }
  }
  if (covered != order)
    throw ParameterError("fibers cover " + std::to_string(covered) + " of " + std::to_string(order) +
                         " vertices");
}

}  // namespace wood
