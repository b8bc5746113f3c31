#include "wood/certify.hpp"

#include <chrono>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <sstream>

#include "wood/constructions.hpp"
#include "wood/error.hpp"

namespace wood {

using nlohmann::json;

Family parse_family(const std::string& name) {
  if (name == "crooked") return Family::Crooked;
  if (name == "w3") return Family::W3;
  if (name == "w5") return Family::W5;
  if (name == "w7") return Family::W7;
  if (name == "fixture") return Family::Fixture;
  throw ParameterError("unknown family '" + name + "' (expected crooked, w3, w5, w7 or fixture)");
}

std::string to_string(Family f) {
  switch (f) {
    case Family::Crooked: return "crooked";
    case Family::W3: return "w3";
    case Family::W5: return "w5";
    case Family::W7: return "w7";
    case Family::Fixture: return "fixture";
  }
  return "unknown";
}

CheckLevel parse_level(const std::string& name) {
  if (name == "fast") return CheckLevel::Fast;
  if (name == "full") return CheckLevel::Full;
  throw ParameterError("unknown check level '" + name + "' (expected fast or full)");
}

namespace {

class Stopwatch {
 public:
  double lap_ms() {
    const auto now = std::chrono::steady_clock::now();
    const std::chrono::duration<double, std::milli> ms = now - last_;
    last_ = now;
    return ms.count();
  }

 private:
  std::chrono::steady_clock::time_point last_ = std::chrono::steady_clock::now();
};

void validate(const CertifyConfig& cfg) {
  const auto reject = [&](bool present, const char* flag) {
    if (present) throw ParameterError(std::string(flag) + " does not apply to family " + to_string(cfg.family));
  };
  const bool crooked_like = cfg.family == Family::Crooked || cfg.family == Family::W3;
  if (!crooked_like) {
    reject(cfg.n.has_value(), "--n");
    reject(cfg.d.has_value(), "--d");
    reject(cfg.table_path.has_value(), "--table");
  }
  if (crooked_like && cfg.table_path && (cfg.n || cfg.d))
    throw ParameterError("--table cannot be combined with --n/--d");
  if (cfg.family != Family::W5) reject(cfg.e.has_value(), "--e");
  if (cfg.family != Family::W7) reject(cfg.p.has_value(), "--p");
  if (cfg.family != Family::Fixture) reject(cfg.name.has_value(), "--name");
  if (cfg.family == Family::W5 && !cfg.e) throw ParameterError("family w5 needs --e");
  if (cfg.family == Family::W7 && !cfg.p) throw ParameterError("family w7 needs --p");
  if (cfg.family == Family::Fixture && !cfg.name) throw ParameterError("family fixture needs --name");
  if (cfg.t && *cfg.t < 2) throw ParameterError("--t must be >= 2");
  if (cfg.workers < 1) throw ParameterError("worker count must be >= 1");
  if (cfg.export_format && !cfg.export_path) throw ParameterError("--export needs --out");
  if (cfg.export_path && !cfg.export_format) throw ParameterError("--out needs --export");
}

std::size_t default_t(Family f) {
  switch (f) {
    case Family::W5: return 5;
    case Family::W7: return 7;
    case Family::Fixture: return 2;
    default: return 3;
  }
}

// Nonadjacent pairs only have common-neighbour counts in `allowed`.
bool nonadjacent_counts_within(const CommonNeighborProfile& p, std::initializer_list<std::size_t> allowed) {
  for (std::size_t c = 0; c < CommonNeighborHistogram::kBuckets; ++c) {
    bool ok = false;
    for (std::size_t a : allowed) ok = ok || a == c;
    if (!ok && p.nonadjacent.counts[c] != 0) return false;
  }
  return true;
}

struct CrookedInput {
  FunctionTable table;
  bool pinned = false;
};

CrookedInput crooked_input(const CertifyConfig& cfg, Certificate& cert) {
  if (cfg.table_path) {
    std::ifstream in(*cfg.table_path);
    if (!in) throw ParameterError("cannot read function table '" + cfg.table_path->string() + "'");
    FunctionTable table = read_function_table(in);
    cert.parameters["table"] = cfg.table_path->string();
    cert.parameters["n"] = table.n();
    return {std::move(table), false};
  }
  const int n = cfg.n.value_or(3);
  const std::uint64_t d = cfg.d.value_or(3);
  const FieldCtx ctx = make_field(n);
  cert.parameters["n"] = n;
  cert.parameters["d"] = d;
  cert.parameters["modulus"] = ctx.modulus();
  return {tabulate_power_map(ctx, d), is_pinned_crooked_power_map(n, d)};
}

}  // namespace

Certificate certify(const CertifyConfig& cfg) {
  validate(cfg);
  Certificate cert;
  Stopwatch clock;
  std::vector<std::pair<std::string, double>> timings;

  Graph g;
  std::optional<CrookedGraph> crooked;
  std::optional<CrookedVerdict> verdict;
  std::optional<std::string> crooked_status;
  std::uint32_t q = 0;

  switch (cfg.family) {
    case Family::Crooked:
    case Family::W3: {
      CrookedInput input = crooked_input(cfg, cert);
      CrookedBuildOptions opts;
      opts.verify = cfg.level == CheckLevel::Full || !input.pinned;
      opts.allow_non_crooked = true;
      opts.workers = cfg.workers;
      crooked = build_crooked_graph(input.table, opts);
      verdict = crooked->verdict;
      crooked_status = opts.verify ? "verified" : "pinned";
      q = crooked->q;
      cert.parameters["q"] = q;
      cert.notes.push_back("q = 2^n = |V|, inferred from the order 2q^2 and the 2q fibres");
      g = cfg.family == Family::W3 ? build_w3(*crooked) : crooked->graph;
      break;
    }
    case Family::W5:
      cert.parameters["e"] = *cfg.e;
      g = build_w5(*cfg.e, cfg.workers);
      break;
    case Family::W7:
      cert.parameters["p"] = *cfg.p;
      g = build_w7(*cfg.p);
      break;
    case Family::Fixture:
      cert.parameters["name"] = *cfg.name;
      g = fixture(*cfg.name);
      break;
  }
  timings.emplace_back("build", clock.lap_ms());

  const std::size_t t = cfg.t.value_or(default_t(cfg.family));
  Certificate checked = check_wood(g, t, cfg.workers);
  checked.family = to_string(cfg.family);
  checked.parameters = std::move(cert.parameters);
  checked.notes = std::move(cert.notes);
  checked.crookedness_status = crooked_status;
  checked.crookedness = verdict;
  timings.insert(timings.end(), checked.timings_ms.begin(), checked.timings_ms.end());
  clock.lap_ms();
  cert = std::move(checked);

  auto& checks = cert.checks;
  const bool wood_counts = cfg.family != Family::Crooked || cfg.t.has_value();
  if (wood_counts) checks["wood"] = cert.wood.pass;
  if (crooked_status) checks["crooked_function"] = !verdict || verdict->pass();

  switch (cfg.family) {
    case Family::Crooked: {
      checks["order"] = cert.order == std::size_t{2} * q * q;
      checks["regular_degree"] = cert.degrees.regular && cert.degrees.max == 2 * std::size_t{q} - 1;
      checks["triangle_free"] = cert.triangles.triangle_free;
      checks["diameter_3"] = cert.diam.is(3);
      checks["distance2_pairs_two_common"] = nonadjacent_counts_within(cert.common, {0, 2});
      // Every base vertex costs a full BFS; the fast level spot-checks large graphs.
      const std::size_t bases = cfg.level == CheckLevel::Fast && g.order() > kFastIntersectionOrder
                                    ? kFastIntersectionBases
                                    : 0;
      cert.intersection = intersection_array(g, cfg.workers, bases);
      if (bases != 0) cert.notes.push_back("intersection array spot-checked from the first " +
                                           std::to_string(bases) + " base vertices; use --level full");
      timings.emplace_back("intersection_array", clock.lap_ms());
      const IntersectionArray expected{{2 * std::size_t{q} - 1, 2 * std::size_t{q} - 2, 1},
                                       {1, 2, 2 * std::size_t{q} - 1}};
      checks["intersection_array"] = cert.intersection->distance_regular && cert.intersection->array == expected;
      cert.cover = check_cover_structure(g, crooked->fibers, cfg.workers);
      timings.emplace_back("cover_structure", clock.lap_ms());
      checks["cover_structure"] = cert.cover->pass;
      break;
    }
    case Family::W3:
      checks["order"] = cert.order == std::size_t{2} * q * q + 2 * std::size_t{q} + 1;
      break;
    case Family::W5:
      checks["order"] = cert.order == (std::size_t{1} << ((1 << *cfg.e) - 1));
      checks["regular"] = cert.degrees.regular;
      break;
    case Family::W7: {
      const auto p = static_cast<std::size_t>(*cfg.p);
      checks["order"] = cert.order == p * p;
      checks["regular_degree"] = cert.degrees.regular && cert.degrees.max == 2 * (p - 1);
      checks["nonadjacent_common_in_1_6"] = nonadjacent_counts_within(cert.common, {1, 2, 3, 4, 5, 6});
      bool vertical = true;
      for (std::size_t x = 0; x < p && vertical; ++x)
        for (std::size_t y = 0; y < p && vertical; ++y)
          for (std::size_t b = 1; b < p && vertical; ++b)
            vertical = common_neighbors(g, static_cast<Vertex>(x * p + y),
                                        static_cast<Vertex>(x * p + (y + b) % p)) == 2;
      checks["vertical_pairs_two_common"] = vertical;
      timings.emplace_back("vertical_pairs", clock.lap_ms());
      break;
    }
    case Family::Fixture:
      break;
  }
  cert.timings_ms = std::move(timings);

  if (cfg.export_format) {
    export_graph(g, *cfg.export_format, *cfg.export_path);
    cert.timings_ms.emplace_back("export", clock.lap_ms());
  }
  return cert;
}

CertifyOutcome run_certify(const CertifyConfig& cfg) {
  CertifyOutcome out;
  try {
    const Certificate cert = certify(cfg);
    out.certificate = to_json(cert);
    out.exit_code = cert.pass() ? kExitPass : kExitPropertyFailure;
  } catch (const ParameterError& e) {
    return {nullptr, kExitParameterError, e.what()};
  } catch (const ConstructionRefused& e) {
    return {nullptr, kExitParameterError, e.what()};
  } catch (const std::runtime_error& e) {
    return {nullptr, kExitParameterError, e.what()};
  }
  if (cfg.cert_path) {
    std::ofstream f(*cfg.cert_path, std::ios::binary);
    f << out.certificate.dump(2) << '\n';
    if (!f) return {out.certificate, kExitParameterError, "cannot write certificate to '" + cfg.cert_path->string() + "'"};
  }
  return out;
}

// ------------------------------------------------------------------- turan

TuranReport turan_report(const std::vector<int>& e_values, unsigned workers) {
  if (e_values.empty()) throw ParameterError("turan report needs at least one e");
  for (int e : e_values)
    if (e < 1 || e > kMaxTuranLevel)
      throw ParameterError("turan level e must lie in [1, 4] (crooked graph over GF(2^(2e-1))), got " +
                           std::to_string(e));
  TuranReport r;
  r.inv_sqrt3 = 1.0 / std::sqrt(3.0);
  r.inv_sqrt2 = 1.0 / std::sqrt(2.0);
  for (int e : e_values) {
    const int n = 2 * e - 1;
    CrookedBuildOptions opts;
    opts.verify = !is_pinned_crooked_power_map(n, 3);
    opts.workers = workers;
    const CrookedGraph gq = build_crooked_graph(tabulate_power_map(make_field(n), 3), opts);
    TuranRow row;
    row.e = e;
    row.q = gq.q;
    row.vertices = gq.graph.order();
    row.edges = gq.graph.edge_count();
    const DegreeProfile dp = degree_profile(gq.graph);
    row.handshake_ok = dp.degree_sum == 2 * static_cast<std::uint64_t>(row.edges);
    row.ratio = static_cast<double>(row.edges) / std::pow(static_cast<double>(row.vertices), 1.5);
    r.rows.push_back(row);
  }
  return r;
}

std::string format_turan_report(const TuranReport& r) {
  std::ostringstream os;
  os << "e\tq\tvertices\tedges\tratio\thandshake\n";
  for (const auto& row : r.rows)
    os << row.e << '\t' << row.q << '\t' << row.vertices << '\t' << row.edges << '\t' << std::fixed
       << std::setprecision(6) << row.ratio << '\t' << (row.handshake_ok ? "ok" : "FAIL") << '\n';
  os << std::fixed << std::setprecision(6) << "# 1/sqrt(3) = " << r.inv_sqrt3
     << "\n# 1/sqrt(2) = " << r.inv_sqrt2 << '\n';
  return os.str();
}

json to_json(const TuranReport& r) {
  json rows = json::array();
  for (const auto& row : r.rows)
    rows.push_back({{"e", row.e},
                    {"q", row.q},
                    {"vertices", row.vertices},
                    {"edges", row.edges},
                    {"ratio", row.ratio},
                    {"handshake_ok", row.handshake_ok}});
  return {{"rows", rows}, {"inv_sqrt3", r.inv_sqrt3}, {"inv_sqrt2", r.inv_sqrt2}};
}

}  // namespace wood
