#include "wood/constructions.hpp"

#include <algorithm>
#include <regex>
#include <sstream>

#include "wood/error.hpp"
#include "wood/field.hpp"

namespace wood {

Vertex crooked_index(const CrookedVertex& v, std::uint32_t q) {
  return (v.a.bits * 2 + v.i) * q + v.alpha.bits;
}

CrookedVertex crooked_coordinates(Vertex idx, std::uint32_t q) {
  const std::uint32_t fibre = idx / q;
  return {Gf2Elem{fibre / 2}, fibre % 2, Gf2Elem{idx % q}};
}

namespace {

std::string describe_failure(const CrookedVerdict& v) {
  std::ostringstream os;
  if (!v.condition1) os << "Q(0) != 0; ";
  if (!v.condition2.pass) {
    const auto& w = *v.condition2.witness;
    os << "not APN (quadruple " << w[0] << ", " << w[1] << ", " << w[2] << ", " << w[3] << "); ";
  }
  if (!v.condition3.pass) {
    const auto& w = *v.condition3.witness;
    os << "condition 3 fails at a=" << w[3] << " (x = " << w[0] << ", " << w[1] << ", " << w[2] << "); ";
  }
  return os.str();
}

}  // namespace

CrookedGraph build_crooked_graph(const FunctionTable& table, const CrookedBuildOptions& opts) {
  CrookedGraph out;
  if (opts.verify) {
    out.verdict = is_crooked(table, opts.workers);
    if (!out.verdict->pass() && !opts.allow_non_crooked)
      throw ConstructionRefused("function table is not crooked: " + describe_failure(*out.verdict));
  }
  const std::uint32_t q = table.size();
  out.q = q;
  const std::size_t order = std::size_t{2} * q * q;
  GraphBuilder b(order);
  for (std::uint32_t a = 0; a < q; ++a)
    for (std::uint32_t i = 0; i < 2; ++i)
      for (std::uint32_t alpha = 0; alpha < q; ++alpha) {
        const Vertex u = crooked_index({Gf2Elem{a}, i, Gf2Elem{alpha}}, q);
        b.set_label(u, "a=" + std::to_string(a) + ",i=" + std::to_string(i) + ",alpha=" + std::to_string(alpha));
        for (std::uint32_t bb = 0; bb < q; ++bb) {
          const std::uint32_t qa_qb = table.at(a).bits ^ table.at(bb).bits;
          for (std::uint32_t j = 0; j < 2; ++j) {
            // (i + j + 1) mod 2 selects whether Q(a) + Q(b) contributes.
            const std::uint32_t rhs = table.at(a ^ bb).bits ^ (((i ^ j ^ 1u) & 1u) ? qa_qb : 0u);
            const std::uint32_t beta = alpha ^ rhs;
            const Vertex v = crooked_index({Gf2Elem{bb}, j, Gf2Elem{beta}}, q);
            if (v != u) b.add_edge(u, v);
          }
        }
      }
  out.graph = std::move(b).build();

  std::vector<std::vector<Vertex>> fibres(2 * std::size_t{q});
  for (std::size_t j = 0; j < fibres.size(); ++j)
    for (std::uint32_t alpha = 0; alpha < q; ++alpha) fibres[j].push_back(static_cast<Vertex>(j * q + alpha));
  out.fibers = FiberPartition(std::move(fibres), order);
  return out;
}

Graph build_w3(const CrookedGraph& gq) {
  const std::size_t base = gq.graph.order();
  const std::size_t m = gq.fibers.fiber_count();
  GraphBuilder b(base + m + 1);
  for (const auto& [u, v] : gq.graph.edges()) b.add_edge(u, v);
  for (Vertex v = 0; v < base; ++v) b.set_label(v, gq.graph.label(v));
  const auto apex = static_cast<Vertex>(base + m);
  b.set_label(apex, "apex");
  for (std::size_t j = 0; j < m; ++j) {
    const auto hub = static_cast<Vertex>(base + j);
    b.set_label(hub, "hub=" + std::to_string(j));
    b.add_edge(hub, apex);
    for (Vertex v : gq.fibers.fiber(j)) b.add_edge(hub, v);
  }
  return std::move(b).build();
}

Graph build_w3(const FunctionTable& table, const CrookedBuildOptions& opts) {
  return build_w3(build_crooked_graph(table, opts));
}

Graph embed_into_fibers(const Graph& gq, const FiberPartition& part, const Graph& h) {
  if (part.order() != gq.order())
    throw ParameterError("fibre partition covers " + std::to_string(part.order()) + " vertices, graph has " +
                         std::to_string(gq.order()));
  if (h.order() != part.fiber_size())
    throw ParameterError("embedded graph has order " + std::to_string(h.order()) + " but fibres have size " +
                         std::to_string(part.fiber_size()));
  GraphBuilder b(gq);
  const auto h_edges = h.edges();
  for (std::size_t j = 0; j < part.fiber_count(); ++j) {
    const auto fibre = part.fiber(j);
    for (const auto& [x, y] : h_edges) b.add_edge(fibre[x], fibre[y]);
  }
  return std::move(b).build();
}

Graph build_w5(int e, unsigned workers) {
  if (e < kMinW5Level || e > kMaxW5Level)
    throw ParameterError("w5 level e must lie in [2, 4], got " + std::to_string(e));
  if (e == kMinW5Level) return fixture("k44");
  const Graph h = build_w5(e - 1, workers);
  const int n = (1 << (e - 1)) - 1;
  CrookedBuildOptions opts;
  opts.workers = workers;
  const CrookedGraph gq = build_crooked_graph(tabulate_power_map(make_field(n), 3), opts);
  return embed_into_fibers(gq.graph, gq.fibers, h);
}

void require_w7_prime(std::int64_t p) {
  if (!is_prime(p)) throw ParameterError("w7 needs a prime p, got " + std::to_string(p));
  if (p % 12 != 11)
    throw ParameterError("w7 needs p = 11 (mod 12), got p = " + std::to_string(p) + " = " +
                         std::to_string(p % 12) + " (mod 12)");
}

std::vector<std::pair<std::int64_t, std::int64_t>> w7_connection_set(std::int64_t p) {
  require_w7_prime(p);
  std::vector<std::pair<std::int64_t, std::int64_t>> a;
  a.reserve(2 * static_cast<std::size_t>(p - 1));
  for (std::int64_t x = 1; x < p; ++x) {
    const PrimeFieldElem xe(x, p);
    const PrimeFieldElem sq = xe * xe;
    a.emplace_back(x, sq.value());
    a.emplace_back(x, (-sq).value());
  }
  std::sort(a.begin(), a.end());
  return a;
}

Graph build_w7(std::int64_t p) {
  const auto conn = w7_connection_set(p);
  const auto n = static_cast<std::size_t>(p * p);
  GraphBuilder b(n);
  for (std::int64_t x = 0; x < p; ++x)
    for (std::int64_t y = 0; y < p; ++y) {
      const auto u = static_cast<Vertex>(x * p + y);
      b.set_label(u, "x=" + std::to_string(x) + ",y=" + std::to_string(y));
      for (const auto& [dx, dy] : conn) b.add_edge(u, static_cast<Vertex>(((x + dx) % p) * p + (y + dy) % p));
    }
  return std::move(b).build();
}

Graph fixture(const std::string& name) {
  if (name == "c5") {
    GraphBuilder b(5);
    for (Vertex i = 0; i < 5; ++i) b.add_edge(i, (i + 1) % 5);
    return std::move(b).build();
  }
  if (name == "petersen") {
    // Outer 5-cycle 0..4, inner pentagram 5..9, spokes i -- i+5.
    GraphBuilder b(10);
    for (Vertex i = 0; i < 5; ++i) {
      b.add_edge(i, (i + 1) % 5);
      b.add_edge(i + 5, (i + 2) % 5 + 5);
      b.add_edge(i, i + 5);
    }
    return std::move(b).build();
  }
  if (name == "k44") {
    GraphBuilder b(8);
    for (Vertex i = 0; i < 4; ++i)
      for (Vertex j = 4; j < 8; ++j) b.add_edge(i, j);
    return std::move(b).build();
  }
  static const std::regex star_re(R"(star\((\d+)\))");
  std::smatch m;
  if (std::regex_match(name, m, star_re)) {
    const unsigned long order = std::stoul(m[1].str());
    if (order < 2 || order > 4096) throw ParameterError("star order must lie in [2, 4096]");
    GraphBuilder b(order);
    for (Vertex v = 1; v < order; ++v) b.add_edge(0, v);
    return std::move(b).build();
  }
  throw ParameterError("unknown fixture '" + name + "' (expected c5, petersen, k44 or star(m))");
}

}  // namespace wood
