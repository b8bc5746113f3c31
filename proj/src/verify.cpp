#include "wood/verify.hpp"

#include <algorithm>
#include <bit>
#include <deque>
#include <limits>
#include <numeric>
#include <sstream>

#include "wood/error.hpp"
#include "wood/parallel.hpp"

namespace wood {

namespace {

constexpr std::size_t kUnset = std::numeric_limits<std::size_t>::max();

// Fixed-size scratch bitset used by the BFS-style verifiers.
class Bits {
 public:
  explicit Bits(std::size_t bits) : bits_(bits), words_(words_for(bits), 0) {}

  void clear() { std::fill(words_.begin(), words_.end(), 0); }
  void set(Vertex v) { words_[v / kWordBits] |= Word{1} << (v % kWordBits); }
  bool test(Vertex v) const { return (words_[v / kWordBits] >> (v % kWordBits)) & 1u; }
  std::size_t count() const {
    std::size_t c = 0;
    for (Word w : words_) c += std::popcount(w);
    return c;
  }
  void assign(std::span<const Word> src) { std::copy(src.begin(), src.end(), words_.begin()); }
  void or_with(std::span<const Word> src) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= src[i];
  }
  bool intersects(std::span<const Word> src) const {
    for (std::size_t i = 0; i < words_.size(); ++i)
      if (words_[i] & src[i]) return true;
    return false;
  }
  // Least set bit strictly above `after`, or kUnset.
  std::size_t next_after(std::size_t after) const {
    std::size_t from = after + 1;
    if (from >= bits_) return kUnset;
    std::size_t w = from / kWordBits;
    Word word = words_[w] & (~Word{0} << (from % kWordBits));
    while (true) {
      if (word) return w * kWordBits + std::countr_zero(word);
      if (++w == words_.size()) return kUnset;
      word = words_[w];
    }
  }
  std::size_t first() const { return bits_ == 0 ? kUnset : test(0) ? 0 : next_after(0); }
  std::span<Word> words() { return words_; }
  std::span<const Word> words() const { return words_; }

 private:
  std::size_t bits_;
  std::vector<Word> words_;
};

template <typename F>
void for_each_bit(std::span<const Word> words, F&& f) {
  for (std::size_t w = 0; w < words.size(); ++w)
    for (Word word = words[w]; word != 0; word &= word - 1)
      f(static_cast<Vertex>(w * kWordBits + std::countr_zero(word)));
}

std::size_t and_popcount(std::span<const Word> a, std::span<const Word> b) {
  std::size_t c = 0;
  for (std::size_t i = 0; i < a.size(); ++i) c += std::popcount(a[i] & b[i]);
  return c;
}

// Least w > v adjacent to both u and v.
std::size_t least_common_above(const Graph& g, Vertex u, Vertex v) {
  const std::size_t first_word = (std::size_t{v} + 1) / kWordBits;
  const std::size_t word_span = g.words_per_row() - std::min(first_word, g.words_per_row());
  const auto nv = g.neighbors(v);
  if (word_span <= nv.size()) {
    const auto ru = g.row(u), rv = g.row(v);
    for (std::size_t w = first_word; w < g.words_per_row(); ++w) {
      Word word = ru[w] & rv[w];
      if (w == first_word) word &= ~Word{0} << ((std::size_t{v} + 1) % kWordBits);
      if (word) return w * kWordBits + std::countr_zero(word);
    }
    return kUnset;
  }
  for (auto it = std::upper_bound(nv.begin(), nv.end(), v); it != nv.end(); ++it)
    if (g.adjacent(u, *it)) return *it;
  return kUnset;
}

// Breadth-first search levels from one base; dist is kUnset for unreachable.
void bfs_levels(const Graph& g, Vertex base, std::vector<std::size_t>& dist, std::vector<Vertex>& queue) {
  std::fill(dist.begin(), dist.end(), kUnset);
  queue.clear();
  dist[base] = 0;
  queue.push_back(base);
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const Vertex v = queue[head];
    for (Vertex w : g.neighbors(v))
      if (dist[w] == kUnset) {
        dist[w] = dist[v] + 1;
        queue.push_back(w);
      }
  }
}

bool is_connected(const Graph& g, std::optional<Vertex>* unreachable = nullptr) {
  if (g.order() == 0) return true;
  std::vector<std::size_t> dist(g.order());
  std::vector<Vertex> queue;
  bfs_levels(g, 0, dist, queue);
  for (Vertex v = 0; v < g.order(); ++v)
    if (dist[v] == kUnset) {
      if (unreachable) *unreachable = v;
      return false;
    }
  return true;
}

}  // namespace

// ---------------------------------------------------------------- triangles

TriangleResult is_triangle_free(const Graph& g, unsigned workers) {
  const std::size_t n = g.order();
  std::vector<std::optional<std::array<Vertex, 3>>> found(chunk_count(n, workers));
  parallel_chunks(n, workers, [&](std::size_t begin, std::size_t end, std::size_t chunk) {
    for (std::size_t ui = begin; ui < end; ++ui) {
      const auto u = static_cast<Vertex>(ui);
      const auto nu = g.neighbors(u);
      for (auto it = std::upper_bound(nu.begin(), nu.end(), u); it != nu.end(); ++it) {
        const std::size_t w = least_common_above(g, u, *it);
        if (w != kUnset) {
          found[chunk] = std::array<Vertex, 3>{u, *it, static_cast<Vertex>(w)};
          return;
        }
      }
    }
  });
  for (auto& f : found)
    if (f) return {false, f};
  return {};
}

// -------------------------------------------------------------------- girth

std::optional<std::size_t> girth(const Graph& g) {
  const std::size_t n = g.order();
  std::size_t best = kUnset;
  std::vector<std::size_t> dist(n, kUnset);
  std::vector<Vertex> parent(n), queue;
  for (Vertex root = 0; root < n; ++root) {
    std::fill(dist.begin(), dist.end(), kUnset);
    queue.clear();
    dist[root] = 0;
    parent[root] = root;
    queue.push_back(root);
    for (std::size_t head = 0; head < queue.size(); ++head) {
      const Vertex v = queue[head];
      if (best != kUnset && 2 * dist[v] + 1 >= best) break;
      for (Vertex w : g.neighbors(v)) {
        if (dist[w] == kUnset) {
          dist[w] = dist[v] + 1;
          parent[w] = v;
          queue.push_back(w);
        } else if (parent[v] != w) {
          best = std::min(best, dist[v] + dist[w] + 1);
        }
      }
    }
  }
  if (best == kUnset) return std::nullopt;
  return best;
}

// ----------------------------------------------------------------- diameter

std::string to_string(DiameterResult::Status s) {
  switch (s) {
    case DiameterResult::Status::Exact: return "exact";
    case DiameterResult::Status::ExceedsCap: return "exceeds_cap";
    case DiameterResult::Status::Disconnected: return "disconnected";
  }
  return "unknown";
}

DiameterResult diameter(const Graph& g, std::size_t cap, unsigned workers) {
  const std::size_t n = g.order();
  DiameterResult result;
  if (n <= 1) return result;

  std::optional<Vertex> unreachable;
  if (!is_connected(g, &unreachable)) {
    result.status = DiameterResult::Status::Disconnected;
    result.witness = VertexPair{0, *unreachable};
    return result;
  }

  struct SourceStats {
    std::size_t ecc = 0;
    std::size_t far_above = kUnset;  // least v > source at distance ecc
    bool exceeded = false;
  };
  std::vector<SourceStats> stats(n);
  const std::size_t words = g.words_per_row();
  const Word last_mask = n % kWordBits == 0 ? ~Word{0} : (Word{1} << (n % kWordBits)) - 1;

  parallel_chunks(n, workers, [&](std::size_t begin, std::size_t end, std::size_t) {
    Bits visited(n), frontier(n), next(n);
    for (std::size_t si = begin; si < end; ++si) {
      const auto s = static_cast<Vertex>(si);
      visited.assign(g.row(s));
      visited.set(s);
      frontier.assign(g.row(s));
      std::size_t visited_count = visited.count();
      std::size_t frontier_count = g.degree(s);
      std::size_t level = 1;
      while (visited_count < n && level < cap) {
        ++level;
        next.clear();
        auto nw = next.words();
        const auto vw = visited.words();
        if (frontier_count > n - visited_count) {
          for (std::size_t w = 0; w < words; ++w) {
            Word unvisited = ~vw[w];
            if (w + 1 == words) unvisited &= last_mask;
            for (; unvisited != 0; unvisited &= unvisited - 1) {
              const auto u = static_cast<Vertex>(w * kWordBits + std::countr_zero(unvisited));
              if (frontier.intersects(g.row(u))) nw[w] |= Word{1} << (u % kWordBits);
            }
          }
        } else {
          for_each_bit(frontier.words(), [&](Vertex f) { next.or_with(g.row(f)); });
          for (std::size_t w = 0; w < words; ++w) nw[w] &= ~vw[w];
        }
        frontier_count = next.count();
        std::swap(frontier, next);
        visited.or_with(frontier.words());
        visited_count += frontier_count;
      }
      SourceStats& st = stats[si];
      if (visited_count < n) {
        st.exceeded = true;
        // Least vertex above s beyond the cap.
        for (std::size_t v = si + 1; v < n; ++v)
          if (!visited.test(static_cast<Vertex>(v))) {
            st.far_above = v;
            break;
          }
      } else {
        st.ecc = level;
        st.far_above = frontier.next_after(si);
      }
    }
  });

  for (std::size_t s = 0; s < n; ++s)
    if (stats[s].exceeded && stats[s].far_above != kUnset) {
      result.status = DiameterResult::Status::ExceedsCap;
      result.value = cap + 1;
      result.witness = VertexPair{static_cast<Vertex>(s), static_cast<Vertex>(stats[s].far_above)};
      return result;
    }
  for (const auto& st : stats) result.value = std::max(result.value, st.ecc);
  for (std::size_t s = 0; s < n; ++s)
    if (stats[s].ecc == result.value && stats[s].far_above != kUnset) {
      result.witness = VertexPair{static_cast<Vertex>(s), static_cast<Vertex>(stats[s].far_above)};
      break;
    }
  return result;
}

// --------------------------------------------------------- common neighbours

std::uint64_t CommonNeighborHistogram::total() const {
  return std::accumulate(counts.begin(), counts.end(), std::uint64_t{0});
}

CommonNeighborHistogram& CommonNeighborHistogram::operator+=(const CommonNeighborHistogram& o) {
  for (std::size_t i = 0; i < kBuckets; ++i) counts[i] += o.counts[i];
  return *this;
}

std::string to_string(CommonNeighborMethod m) {
  switch (m) {
    case CommonNeighborMethod::Auto: return "auto";
    case CommonNeighborMethod::BitsetPairs: return "bitset_pairs";
    case CommonNeighborMethod::Wedges: return "wedges";
  }
  return "unknown";
}

double bitset_pair_cost(const Graph& g) {
  const double n = static_cast<double>(g.order());
  return n * (n - 1) / 2 * static_cast<double>(g.words_per_row());
}

double wedge_cost(const Graph& g) {
  double wedges = 0;
  for (Vertex v = 0; v < g.order(); ++v) wedges += static_cast<double>(g.degree(v)) * g.degree(v);
  const double n = static_cast<double>(g.order());
  return wedges + n * (n - 1) / 2;
}

std::size_t common_neighbors(const Graph& g, Vertex u, Vertex v) { return and_popcount(g.row(u), g.row(v)); }

namespace {

struct PairStats {
  std::size_t max = 0;
  std::optional<VertexPair> max_witness;
  std::optional<std::size_t> min;
  std::optional<VertexPair> min_witness;
  CommonNeighborHistogram adjacent, nonadjacent;

  void record(Vertex u, Vertex v, std::size_t c, bool adj) {
    if (!max_witness || c > max) {
      max = c;
      max_witness = VertexPair{u, v};
    }
    if (adj) {
      adjacent.add(c);
    } else {
      nonadjacent.add(c);
      if (!min || c < *min) {
        min = c;
        min_witness = VertexPair{u, v};
      }
    }
  }

  // `later` covers lexicographically larger pairs, so ties keep ours.
  void merge(const PairStats& later) {
    if (later.max_witness && (!max_witness || later.max > max)) {
      max = later.max;
      max_witness = later.max_witness;
    }
    if (later.min && (!min || *later.min < *min)) {
      min = later.min;
      min_witness = later.min_witness;
    }
    adjacent += later.adjacent;
    nonadjacent += later.nonadjacent;
  }
};

}  // namespace

CommonNeighborProfile common_neighbor_profile(const Graph& g, unsigned workers, CommonNeighborMethod method) {
  const std::size_t n = g.order();
  if (method == CommonNeighborMethod::Auto)
    method = wedge_cost(g) < bitset_pair_cost(g) ? CommonNeighborMethod::Wedges : CommonNeighborMethod::BitsetPairs;

  std::vector<PairStats> partial(chunk_count(n, workers));
  parallel_chunks(n, workers, [&](std::size_t begin, std::size_t end, std::size_t chunk) {
    PairStats& st = partial[chunk];
    if (method == CommonNeighborMethod::BitsetPairs) {
      for (std::size_t ui = begin; ui < end; ++ui) {
        const auto u = static_cast<Vertex>(ui);
        for (auto v = static_cast<Vertex>(ui + 1); v < n; ++v)
          st.record(u, v, and_popcount(g.row(u), g.row(v)), g.adjacent(u, v));
      }
      return;
    }
    // Wedge counting: every path u - w - v with v > u bumps v's counter.
    std::vector<std::uint32_t> count(n, 0);
    std::vector<std::size_t> stamp(n, kUnset);
    for (std::size_t ui = begin; ui < end; ++ui) {
      const auto u = static_cast<Vertex>(ui);
      for (Vertex w : g.neighbors(u)) {
        const auto nw = g.neighbors(w);
        for (auto it = std::upper_bound(nw.begin(), nw.end(), u); it != nw.end(); ++it) {
          if (stamp[*it] != ui) {
            stamp[*it] = ui;
            count[*it] = 0;
          }
          ++count[*it];
        }
      }
      for (auto v = static_cast<Vertex>(ui + 1); v < n; ++v)
        st.record(u, v, stamp[v] == ui ? count[v] : 0, g.adjacent(u, v));
    }
  });

  PairStats total;
  for (const auto& p : partial) total.merge(p);
  CommonNeighborProfile out;
  out.method = method;
  out.max_common = total.max;
  out.max_witness = total.max_witness;
  out.min_common_nonadjacent = total.min;
  out.min_witness = total.min_witness;
  out.adjacent = total.adjacent;
  out.nonadjacent = total.nonadjacent;
  return out;
}

// ------------------------------------------------------------------ degrees

DegreeProfile degree_profile(const Graph& g) {
  DegreeProfile p;
  if (g.order() == 0) return p;
  p.min = kUnset;
  for (Vertex v = 0; v < g.order(); ++v) {
    const std::size_t d = g.degree(v);
    p.min = std::min(p.min, d);
    p.max = std::max(p.max, d);
    ++p.counts[d];
    p.degree_sum += d;
  }
  p.regular = p.min == p.max;
  return p;
}

bool is_star(const Graph& g) {
  const std::size_t n = g.order();
  if (n < 2) return false;
  std::size_t centers = 0, leaves = 0;
  for (Vertex v = 0; v < n; ++v) {
    if (g.degree(v) == n - 1) ++centers;
    if (g.degree(v) == 1) ++leaves;
  }
  if (n == 2) return centers == 2;
  return centers == 1 && leaves == n - 1;
}

// ------------------------------------------------------ intersection arrays

std::vector<double> IntersectionArray::class_sizes() const {
  std::vector<double> k{1.0};
  for (std::size_t i = 0; i < b.size(); ++i) k.push_back(k.back() * static_cast<double>(b[i]) / c[i]);
  return k;
}

std::string to_string(const IntersectionArray& a) {
  std::ostringstream os;
  os << '{';
  for (std::size_t i = 0; i < a.b.size(); ++i) os << (i ? ", " : "") << a.b[i];
  os << "; ";
  for (std::size_t i = 0; i < a.c.size(); ++i) os << (i ? ", " : "") << a.c[i];
  os << '}';
  return os.str();
}

IntersectionArrayResult intersection_array(const Graph& g, unsigned workers, std::size_t base_limit) {
  const std::size_t n = g.order();
  if (n == 0) throw ParameterError("intersection array of the empty graph");
  if (!is_connected(g)) throw ParameterError("intersection array needs a connected graph");
  const std::size_t bases = base_limit == 0 ? n : std::min(base_limit, n);

  struct Local {
    std::size_t b, c;
  };
  // Reference values from base 0, taken at the least vertex of each level.
  std::vector<std::size_t> dist(n);
  std::vector<Vertex> queue;
  bfs_levels(g, 0, dist, queue);
  const std::size_t d = dist[queue.back()];
  const auto local_at = [&g](const std::vector<std::size_t>& dd, Vertex v) {
    Local l{0, 0};
    for (Vertex w : g.neighbors(v)) {
      if (dd[w] == dd[v] + 1) ++l.b;
      if (dd[w] + 1 == dd[v]) ++l.c;
    }
    return l;
  };
  std::vector<Local> ref(d + 1);
  std::vector<bool> seen(d + 1, false);
  for (Vertex v = 0; v < n; ++v)
    if (!seen[dist[v]]) {
      seen[dist[v]] = true;
      ref[dist[v]] = local_at(dist, v);
    }

  struct Mismatch {
    Vertex base, vertex;
    std::string detail;
  };
  std::vector<std::optional<Mismatch>> found(chunk_count(bases, workers));
  parallel_chunks(bases, workers, [&](std::size_t begin, std::size_t end, std::size_t chunk) {
    std::vector<std::size_t> dd(n);
    std::vector<Vertex> qq;
    for (std::size_t bi = begin; bi < end; ++bi) {
      const auto base = static_cast<Vertex>(bi);
      bfs_levels(g, base, dd, qq);
      for (Vertex v = 0; v < n; ++v) {
        const std::size_t i = dd[v];
        if (i <= d) {
          const Local l = local_at(dd, v);
          if (l.b == ref[i].b && l.c == ref[i].c) continue;
          std::ostringstream why;
          if (l.b != ref[i].b) why << "b_" << i << " = " << l.b << " but reference gives " << ref[i].b;
          else why << "c_" << i << " = " << l.c << " but reference gives " << ref[i].c;
          found[chunk] = Mismatch{base, v, why.str()};
        } else {
          found[chunk] = Mismatch{base, v,
                                  "vertex at distance " + std::to_string(i) + " exceeds reference diameter " +
                                      std::to_string(d)};
        }
        return;
      }
    }
  });

  IntersectionArrayResult result;
  for (auto& f : found)
    if (f) {
      result.witness = VertexPair{f->base, f->vertex};
      result.detail = f->detail;
      return result;
    }
  result.distance_regular = true;
  IntersectionArray arr;
  for (std::size_t i = 0; i < d; ++i) arr.b.push_back(ref[i].b);
  for (std::size_t i = 1; i <= d; ++i) arr.c.push_back(ref[i].c);
  result.array = arr;
  if (bases < n) result.detail = "checked " + std::to_string(bases) + " of " + std::to_string(n) + " base vertices";
  return result;
}

// ---------------------------------------------------------- cover structure

CoverResult check_cover_structure(const Graph& g, const FiberPartition& part, unsigned workers) {
  const std::size_t n = g.order();
  if (part.order() != n)
    throw ParameterError("partition covers " + std::to_string(part.order()) + " vertices but graph has " +
                         std::to_string(n));
  const std::size_t m = part.fiber_count();

  for (Vertex u = 0; u < n; ++u)
    for (Vertex v : g.neighbors(u))
      if (part.fiber_of(v) == part.fiber_of(u)) return {false, "independence", {std::min(u, v), std::max(u, v)}};

  std::vector<std::size_t> per_fiber(m);
  for (Vertex u = 0; u < n; ++u) {
    std::fill(per_fiber.begin(), per_fiber.end(), 0);
    for (Vertex v : g.neighbors(u)) ++per_fiber[part.fiber_of(v)];
    for (std::size_t j = 0; j < m; ++j)
      if (j != part.fiber_of(u) && per_fiber[j] != 1) return {false, "matching", {u, part.fiber(j).front()}};
  }

  // Distance-3 set of u must be exactly its fibre minus u: the ball of
  // radius 2 misses precisely the fibre-mates, each of which is one step
  // beyond the distance-2 sphere.
  std::vector<Bits> fiber_masks;
  fiber_masks.reserve(m);
  for (std::size_t j = 0; j < m; ++j) {
    Bits b(n);
    for (Vertex v : part.fiber(j)) b.set(v);
    fiber_masks.push_back(std::move(b));
  }
  const std::size_t words = g.words_per_row();
  const Word last_mask = n % kWordBits == 0 ? ~Word{0} : (Word{1} << (n % kWordBits)) - 1;
  std::vector<std::optional<std::vector<Vertex>>> found(chunk_count(n, workers));
  parallel_chunks(n, workers, [&](std::size_t begin, std::size_t end, std::size_t chunk) {
    Bits ball(n), sphere2(n);
    for (std::size_t ui = begin; ui < end; ++ui) {
      const auto u = static_cast<Vertex>(ui);
      ball.clear();
      for (Vertex w : g.neighbors(u)) ball.or_with(g.row(w));
      ball.or_with(g.row(u));
      ball.set(u);
      sphere2.assign(ball.words());
      for (std::size_t w = 0; w < words; ++w) sphere2.words()[w] &= ~g.row(u)[w];
      const auto fw = fiber_masks[part.fiber_of(u)].words();
      std::optional<Vertex> bad;
      for (std::size_t w = 0; w < words && !bad; ++w) {
        Word outside = ~ball.words()[w];
        if (w + 1 == words) outside &= last_mask;
        Word expected = fw[w] & ~(w == u / kWordBits ? Word{1} << (u % kWordBits) : Word{0});
        if (const Word diff = outside ^ expected; diff != 0)
          bad = static_cast<Vertex>(w * kWordBits + std::countr_zero(diff));
      }
      if (!bad)
        for (Vertex v : part.fiber(part.fiber_of(u)))
          if (v != u && !sphere2.intersects(g.row(v))) {
            bad = v;
            break;
          }
      if (bad) {
        found[chunk] = std::vector<Vertex>{u, *bad};
        return;
      }
    }
  });
  for (auto& f : found)
    if (f) return {false, "antipodal", *f};

  if (m != 2 * part.fiber_size()) return {false, "shape", {}};
  return {};
}

}  // namespace wood
