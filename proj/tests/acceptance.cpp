// One PASS/FAIL line per acceptance criterion. Exit status is nonzero when
// any criterion fails. Runtime limits are wall-clock on the build machine.

#include <sys/wait.h>

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "corpus.hpp"
#include "oracle.hpp"
#include "wood/certificate.hpp"
#include "wood/certify.hpp"
#include "wood/constructions.hpp"
#include "wood/crooked.hpp"
#include "wood/error.hpp"
#include "wood/parallel.hpp"
#include "wood/verify.hpp"

using namespace wood;

namespace {

// Tolerances and limits.
constexpr double kLimitCrookedSec = 10.0;
constexpr double kLimitCrookedGraphSec = 1.0;
constexpr double kLimitW3Sec = 5.0;
constexpr double kLimitW5SmallSec = 2.0;
constexpr double kLimitW5LargeSec = 600.0;
constexpr double kLimitW7Sec = 30.0;
constexpr double kTuranTolerance = 1e-3;

struct Outcome {
  bool pass = true;
  std::vector<std::string> failures;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      failures.push_back(what);
    }
  }
};

class Timer {
 public:
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

std::string fmt(double v, int digits = 3) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", digits, v);
  return buf;
}

FunctionTable cube(int n) { return tabulate_power_map(make_field(n), 3); }

bool same_verdict(const CrookedVerdict& a, const CrookedVerdict& b) {
  return a.condition1 == b.condition1 && a.condition2.pass == b.condition2.pass &&
         a.condition3.pass == b.condition3.pass && a.condition2.witness == b.condition2.witness &&
         a.condition3.witness == b.condition3.witness;
}

bool is_wood(const Graph& g, std::size_t t, unsigned workers, CommonNeighborMethod m = CommonNeighborMethod::Auto) {
  return check_wood(g, t, workers, m).wood.pass;
}

Outcome crooked_functions(unsigned workers, std::string& info) {
  Outcome o;
  Timer timer;
  for (int n : {3, 5, 7}) o.require(is_crooked(cube(n), workers).pass(), "x^3 not crooked at n=" + std::to_string(n));
  for (int n : {2, 4}) o.require(!is_crooked(cube(n), workers).pass(), "x^3 crooked at n=" + std::to_string(n));
  std::size_t maps = 0;
  for (int n = 1; n <= 5; ++n) {
    const std::uint64_t top = n == 1 ? 1 : (std::uint64_t{1} << n) - 2;
    for (std::uint64_t d = 1; d <= top; ++d, ++maps) {
      const auto t = tabulate_power_map(make_field(n), d);
      o.require(same_verdict(is_crooked(t, workers), is_crooked_naive(t)),
                "oracle disagreement n=" + std::to_string(n) + " d=" + std::to_string(d));
    }
  }
  const double s = timer.seconds();
  o.require(s < kLimitCrookedSec, "runtime " + fmt(s) + " s");
  info = std::to_string(maps) + " power maps vs naive oracle, " + fmt(s) + " s";
  return o;
}

Outcome crooked_graph_q8(unsigned workers, std::string& info) {
  Outcome o;
  Timer timer;
  const CrookedGraph gq = build_crooked_graph(cube(3), {true, false, workers});
  const Graph& g = gq.graph;
  const auto dp = degree_profile(g);
  const auto cn = common_neighbor_profile(g, workers);
  const auto ia = intersection_array(g, workers);
  const auto cover = check_cover_structure(g, gq.fibers, workers);
  const bool tri = is_triangle_free(g, workers).triangle_free;
  const bool d3 = diameter(g, 3, workers).is(3);
  const double s = timer.seconds();
  o.require(g.order() == 128, "order");
  o.require(dp.regular && dp.max == 15, "not 15-regular");
  o.require(tri, "triangle");
  o.require(d3, "diameter");
  // Triangle-free with diameter 3: distance-2 pairs are exactly the
  // nonadjacent pairs with a common neighbour.
  bool two = true;
  for (std::size_t c = 0; c < CommonNeighborHistogram::kBuckets; ++c)
    if (c != 0 && c != 2 && cn.nonadjacent.counts[c] != 0) two = false;
  o.require(two, "distance-2 pair without exactly 2 common neighbours");
  o.require(ia.distance_regular && ia.array == IntersectionArray{{15, 14, 1}, {1, 2, 15}}, "intersection array");
  o.require(cover.pass && gq.fibers.fiber_count() == 16 && gq.fibers.fiber_size() == 8,
            "cover structure: " + cover.failure);
  o.require(s < kLimitCrookedGraphSec, "runtime " + fmt(s) + " s");
  info = "array " + (ia.array ? to_string(*ia.array) : std::string("-")) + ", " + fmt(s) + " s";
  return o;
}

Outcome w3_n5(unsigned workers, std::string& info) {
  Outcome o;
  Timer timer;
  const Graph g = build_w3(cube(5), {true, false, workers});
  const Certificate c = check_wood(g, 3, workers);
  const double s = timer.seconds();
  o.require(g.order() == 2113 && g.order() == (1u << 11) + (1u << 6) + 1, "order");
  o.require(c.wood.pass, "not in W3");
  o.require(c.triangles.triangle_free, "triangle");
  o.require(c.common.max_common <= 2, "max common " + std::to_string(c.common.max_common));
  o.require(c.common.min_common_nonadjacent && *c.common.min_common_nonadjacent >= 1, "nonadjacent pair apart");
  o.require(c.diam.is(2), "diameter");
  o.require(!c.star, "star");
  o.require(c.degrees.counts == std::map<std::size_t, std::size_t>{{33, 64}, {64, 2049}}, "degree multiset");
  o.require(s < kLimitW3Sec, "runtime " + fmt(s) + " s");
  info = "order 2113, max common " + std::to_string(c.common.max_common) + ", " + fmt(s) + " s";
  return o;
}

Outcome w5(unsigned workers, std::string& info) {
  Outcome o;
  Timer small;
  const Graph g2 = build_w5(2, workers);
  o.require(g2 == fixture("k44"), "w5(2) is not K44");
  o.require(is_wood(g2, 5, workers), "w5(2) not in W5");
  const Graph g3 = build_w5(3, workers);
  const auto dp3 = degree_profile(g3);
  o.require(g3.order() == 128, "w5(3) order");
  o.require(dp3.regular && dp3.max == 19, "w5(3) not 19-regular");
  o.require(is_wood(g3, 5, workers), "w5(3) not in W5");
  const double s_small = small.seconds();
  o.require(s_small < kLimitW5SmallSec, "e<=3 runtime " + fmt(s_small) + " s");

  Timer large;
  const Graph g4 = build_w5(4, workers);
  const auto dp4 = degree_profile(g4);
  o.require(g4.order() == 32768, "w5(4) order");
  o.require(dp4.regular && dp4.max == 274, "w5(4) not 274-regular");
  o.require(is_wood(g4, 5, workers, CommonNeighborMethod::Wedges), "w5(4) not in W5");
  const double s_large = large.seconds();
  o.require(s_large < kLimitW5LargeSec, "e=4 runtime " + fmt(s_large) + " s");
  info = "e<=3 " + fmt(s_small) + " s, e=4 " + fmt(s_large, 1) + " s";
  return o;
}

int run_woodcert(const std::string& args) {
  const std::string cmd = std::string(WOODCERT_PATH) + " " + args + " >/dev/null 2>&1";
  const int status = std::system(cmd.c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

Outcome w7(unsigned workers, std::string& info) {
  Outcome o;
  double s59 = 0;
  for (std::int64_t p : {11, 23, 47, 59}) {
    Timer timer;
    const std::string tag = "p=" + std::to_string(p) + ": ";
    const Graph g = build_w7(p);
    const Certificate c = check_wood(g, 7, workers);
    const auto n = static_cast<std::size_t>(p * p);
    o.require(g.order() == n, tag + "order");
    o.require(c.degrees.regular && c.degrees.max == static_cast<std::size_t>(2 * (p - 1)), tag + "degree");
    o.require(c.wood.pass, tag + "not in W7");
    bool in_range = true;
    for (std::size_t k = 0; k < CommonNeighborHistogram::kBuckets; ++k)
      if ((k < 1 || k > 6) && c.common.nonadjacent.counts[k] != 0) in_range = false;
    o.require(in_range, tag + "nonadjacent count outside [1, 6]");
    bool vertical = true;
    for (std::int64_t x = 0; x < p; ++x)
      for (std::int64_t y = 0; y < p; ++y)
        for (std::int64_t b = 1; b < p; ++b)
          vertical = vertical && common_neighbors(g, static_cast<Vertex>(x * p + y),
                                                  static_cast<Vertex>(x * p + (y + b) % p)) == 2;
    o.require(vertical, tag + "vertical pair without 2 common neighbours");
    if (p == 59) s59 = timer.seconds();
  }
  o.require(s59 < kLimitW7Sec, "p=59 runtime " + fmt(s59) + " s");
  bool refused = false;
  try {
    build_w7(13);
  } catch (const ParameterError&) {
    refused = true;
  }
  o.require(refused, "build_w7(13) accepted");
  const int code = run_woodcert("certify --family w7 --p 13");
  o.require(code == kExitParameterError, "woodcert exit " + std::to_string(code) + " for p=13");
  info = "p=59 " + fmt(s59) + " s, p=13 exit " + std::to_string(code);
  return o;
}

Outcome fixtures(unsigned workers, std::string& info) {
  Outcome o;
  o.require(is_wood(fixture("c5"), 2, workers), "C5 not in W2");
  o.require(is_wood(fixture("petersen"), 2, workers), "Petersen not in W2");
  o.require(is_wood(fixture("k44"), 5, workers), "K44 fails t=5");
  o.require(!is_wood(fixture("k44"), 4, workers), "K44 passes t=4");
  const Certificate star = check_wood(fixture("star(6)"), 2, workers);
  o.require(star.star && !star.wood.pass, "K_{1,5} not excluded");
  info = "C5, Petersen in W2; K44 t=5 only; K_{1,5} star";
  return o;
}

Outcome turan(unsigned workers, std::string& info) {
  Outcome o;
  const TuranReport r = turan_report({2, 3, 4}, workers);
  const double expected[] = {0.6629, 0.6961, 0.7043};
  std::string ratios;
  for (std::size_t i = 0; i < r.rows.size(); ++i) {
    const auto& row = r.rows[i];
    o.require(std::abs(row.ratio - expected[i]) <= kTuranTolerance, "e=" + std::to_string(row.e) + " ratio " + fmt(row.ratio, 6));
    o.require(row.ratio < 1 / std::sqrt(2.0), "e=" + std::to_string(row.e) + " above 1/sqrt(2)");
    o.require(row.handshake_ok, "handshake");
    if (i > 0) o.require(row.ratio > r.rows[i - 1].ratio, "not increasing");
    ratios += (i ? ", " : "") + fmt(row.ratio, 4);
  }
  info = "ratios " + ratios;
  return o;
}

Outcome oracle_equivalence(unsigned workers, std::string& info) {
  Outcome o;
  const auto graphs = corpus::small_graphs();
  for (const auto& [name, g] : graphs) {
    const std::string tag = name + " (n=" + std::to_string(g.order()) + "): ";
    if (g.order() > 200) {
      o.require(false, tag + "larger than 200");
      continue;
    }
    const oracle::Dense d(g);
    o.require(is_triangle_free(g, workers).triangle_free == (d.triangle_count() == 0), tag + "triangles");
    const int diam = oracle::diameter_of(d.distances());
    const auto r = diameter(g, g.order() + 1, workers);
    o.require(diam < 0 ? r.status == DiameterResult::Status::Disconnected : r.is(static_cast<std::size_t>(diam)),
              tag + "diameter");
    const auto s = oracle::pair_summary(d);
    for (auto m : {CommonNeighborMethod::BitsetPairs, CommonNeighborMethod::Wedges}) {
      const auto p = common_neighbor_profile(g, workers, m);
      const long long min = p.min_common_nonadjacent ? static_cast<long long>(*p.min_common_nonadjacent) : -1;
      const std::vector<long long> adj(p.adjacent.counts.begin(), p.adjacent.counts.end());
      const std::vector<long long> non(p.nonadjacent.counts.begin(), p.nonadjacent.counts.end());
      o.require(static_cast<long long>(p.max_common) == s.max_all && min == s.min_nonadjacent &&
                    adj == s.adjacent_hist && non == s.nonadjacent_hist,
                tag + "common neighbours via " + to_string(m));
    }
  }
  info = std::to_string(graphs.size()) + " graphs, both common-neighbour methods";
  return o;
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

Outcome determinism(unsigned, std::string& info) {
  Outcome o;
  const auto dir = std::filesystem::temp_directory_path() / "wood_acceptance";
  std::filesystem::create_directories(dir);
  std::size_t configs = 0;
  for (const auto& family : std::vector<std::pair<Family, std::int64_t>>{
           {Family::Crooked, 5}, {Family::W3, 5}, {Family::W5, 3}, {Family::W7, 59}}) {
    std::string cert0, export0;
    for (unsigned workers : {1u, 3u, 8u}) {
      CertifyConfig cfg;
      cfg.family = family.first;
      if (family.first == Family::Crooked || family.first == Family::W3) cfg.n = static_cast<int>(family.second);
      if (family.first == Family::W5) cfg.e = static_cast<int>(family.second);
      if (family.first == Family::W7) cfg.p = family.second;
      cfg.workers = workers;
      cfg.export_format = ExportFormat::EdgeList;
      cfg.export_path = dir / ("edges_" + std::to_string(workers) + ".txt");
      const auto out = run_certify(cfg);
      const std::string tag = to_string(cfg.family) + " workers=" + std::to_string(workers) + ": ";
      o.require(out.exit_code == kExitPass, tag + "exit " + std::to_string(out.exit_code));
      const std::string cert = canonical_dump(out.certificate), exported = slurp(*cfg.export_path);
      if (workers == 1) {
        cert0 = cert;
        export0 = exported;
      } else {
        o.require(cert == cert0, tag + "certificate differs");
        o.require(exported == export0, tag + "edge list differs");
      }
    }
    ++configs;
  }
  info = std::to_string(configs) + " configurations at 1, 3, 8 workers";
  return o;
}

}  // namespace

int main() {
  const unsigned workers = default_workers();
  const std::vector<std::pair<std::string, std::function<Outcome(unsigned, std::string&)>>> criteria = {
      {"crooked function verification", crooked_functions},
      {"crooked graph q=8", crooked_graph_q8},
      {"W3 at n=5", w3_n5},
      {"W5 recursion e=2,3,4", w5},
      {"W7 Cayley graphs", w7},
      {"fixtures", fixtures},
      {"Turan density report", turan},
      {"oracle equivalence", oracle_equivalence},
      {"determinism", determinism},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    std::string info;
    Outcome o;
    try {
      o = criteria[i].second(workers, info);
    } catch (const std::exception& e) {
      o.require(false, std::string("exception: ") + e.what());
    }
    std::printf("%s criterion %zu: %s", o.pass ? "PASS" : "FAIL", i + 1, criteria[i].first.c_str());
    if (!info.empty()) std::printf(" (%s)", info.c_str());
    for (const auto& f : o.failures) std::printf(" [%s]", f.c_str());
    std::printf("\n");
    std::fflush(stdout);
    failed += !o.pass;
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
