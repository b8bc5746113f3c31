#include "wood/certificate.hpp"

#include <algorithm>
#include <chrono>
#include <string>

#include "wood/error.hpp"

namespace wood {

using nlohmann::json;

namespace {

json pair_json(const std::optional<VertexPair>& p) {
  if (!p) return nullptr;
  return json::array({p->first, p->second});
}

template <std::size_t N>
json array_json(const std::optional<std::array<std::uint32_t, N>>& a) {
  if (!a) return nullptr;
  return json(*a);
}

json histogram_json(const CommonNeighborHistogram& h) { return json(h.counts); }

}  // namespace

bool Certificate::pass() const {
  return std::all_of(checks.begin(), checks.end(), [](const auto& kv) { return kv.second; });
}

bool wood_membership(const Certificate& c, std::size_t t) {
  return c.triangles.triangle_free && c.common.max_common + 1 <= t && c.diam.is(2) && !c.star;
}

Certificate check_wood(const Graph& g, std::size_t t, unsigned workers, CommonNeighborMethod method) {
  if (t < 2) throw ParameterError("Wood class parameter t must be >= 2, got " + std::to_string(t));
  Certificate c;
  const auto timed = [&c](const char* name, auto&& fn) {
    const auto start = std::chrono::steady_clock::now();
    fn();
    const std::chrono::duration<double, std::milli> ms = std::chrono::steady_clock::now() - start;
    c.timings_ms.emplace_back(name, ms.count());
  };
  c.order = g.order();
  c.edges = g.edge_count();
  timed("degree_profile", [&] { c.degrees = degree_profile(g); });
  timed("triangle_free", [&] { c.triangles = is_triangle_free(g, workers); });
  timed("common_neighbors", [&] { c.common = common_neighbor_profile(g, workers, method); });
  timed("diameter", [&] { c.diam = diameter(g, 3, workers); });
  timed("is_star", [&] { c.star = is_star(g); });
  c.wood = {t, wood_membership(c, t)};
  return c;
}

json to_json(const CrookedVerdict& v) {
  return {
      {"pass", v.pass()},
      {"condition1", v.condition1},
      {"condition2", {{"pass", v.condition2.pass}, {"witness", array_json(v.condition2.witness)}}},
      {"condition3", {{"pass", v.condition3.pass}, {"witness", array_json(v.condition3.witness)}}},
  };
}

json to_json(const IntersectionArrayResult& r) {
  json j = {{"distance_regular", r.distance_regular}, {"witness", pair_json(r.witness)}, {"detail", r.detail}};
  if (r.array) j["array"] = {{"b", r.array->b}, {"c", r.array->c}};
  else j["array"] = nullptr;
  return j;
}

json to_json(const Certificate& c) {
  json degree_counts = json::object();
  for (const auto& [deg, cnt] : c.degrees.counts) degree_counts[std::to_string(deg)] = cnt;

  json params = json::object();
  for (const auto& [k, v] : c.parameters) params[k] = v;

  json j = {
      {"schema_version", kCertificateSchemaVersion},
      {"family", c.family},
      {"parameters", params},
      {"notes", c.notes},
      {"order", c.order},
      {"edges", c.edges},
      {"degree_profile",
       {{"min", c.degrees.min}, {"max", c.degrees.max}, {"regular", c.degrees.regular}, {"counts", degree_counts}}},
      {"triangle_free", {{"pass", c.triangles.triangle_free}, {"witness", array_json(c.triangles.witness)}}},
      {"common_neighbors",
       {{"method", to_string(c.common.method)},
        {"max", c.common.max_common},
        {"max_witness", pair_json(c.common.max_witness)},
        {"min_nonadjacent", c.common.min_common_nonadjacent ? json(*c.common.min_common_nonadjacent) : json()},
        {"min_witness", pair_json(c.common.min_witness)},
        {"histogram_adjacent", histogram_json(c.common.adjacent)},
        {"histogram_nonadjacent", histogram_json(c.common.nonadjacent)}}},
      {"diameter",
       {{"status", to_string(c.diam.status)},
        {"value", c.diam.status == DiameterResult::Status::Disconnected ? json() : json(c.diam.value)},
        {"witness", pair_json(c.diam.witness)}}},
      {"is_star", c.star},
      {"wood", {{"t", c.wood.t}, {"pass", c.wood.pass}}},
  };
  if (c.intersection) j["intersection_array"] = to_json(*c.intersection);
  if (c.cover)
    j["cover_structure"] = {{"pass", c.cover->pass}, {"failure", c.cover->failure}, {"witness", c.cover->witness}};
  if (c.crookedness_status) {
    j["crookedness"] = {{"status", *c.crookedness_status}};
    if (c.crookedness) j["crookedness"]["verdict"] = to_json(*c.crookedness);
  }
  j["checks"] = c.checks;
  j["pass"] = c.pass();
  json timings = json::object();
  for (const auto& [name, ms] : c.timings_ms) timings[name] = ms;
  j["timings_ms"] = timings;
  return j;
}

std::string canonical_dump(const json& cert) {
  json copy = cert;
  copy.erase("timings_ms");
  return copy.dump(2);
}

}  // namespace wood
