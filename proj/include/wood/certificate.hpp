#pragma once

// Structured verification report. Serialises to JSON (schema below); the
// "timings_ms" object is the only part that may differ between runs of the
// same configuration.

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "wood/crooked.hpp"
#include "wood/verify.hpp"

namespace wood {

inline constexpr int kCertificateSchemaVersion = 1;

struct WoodVerdict {
  std::size_t t = 2;
  bool pass = false;
};

struct Certificate {
  std::string family;
  // Ordered so that serialisation is deterministic.
  std::map<std::string, nlohmann::json> parameters;
  std::vector<std::string> notes;

  std::size_t order = 0;
  std::size_t edges = 0;
  DegreeProfile degrees;
  TriangleResult triangles;
  CommonNeighborProfile common;
  DiameterResult diam;
  bool star = false;
  WoodVerdict wood;

  std::optional<IntersectionArrayResult> intersection;
  std::optional<CoverResult> cover;
  // "verified", "pinned" or "unverified", with the checker verdict if run.
  std::optional<std::string> crookedness_status;
  std::optional<CrookedVerdict> crookedness;

  // Named pass/fail checks that decide the exit status.
  std::map<std::string, bool> checks;
  std::vector<std::pair<std::string, double>> timings_ms;

  bool pass() const;
};

// Triangle-free, at most t-1 common neighbours per pair, diameter 2, not a
// star.
bool wood_membership(const Certificate& c, std::size_t t);

// Runs the degree, triangle, common-neighbour, diameter and star checks and
// fills in the Wood-class verdict for t. Throws ParameterError when t < 2.
Certificate check_wood(const Graph& g, std::size_t t, unsigned workers = 1,
                       CommonNeighborMethod method = CommonNeighborMethod::Auto);

nlohmann::json to_json(const Certificate& c);
nlohmann::json to_json(const CrookedVerdict& v);
nlohmann::json to_json(const IntersectionArrayResult& r);

// Serialised certificate with "timings_ms" removed, for reproducibility checks.
std::string canonical_dump(const nlohmann::json& cert);

}  // namespace wood
