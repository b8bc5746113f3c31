#pragma once

// Build-and-certify orchestration behind the woodcert tool and the Python
// module.

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "wood/certificate.hpp"
#include "wood/graph_io.hpp"

namespace wood {

enum class Family { Crooked, W3, W5, W7, Fixture };
enum class CheckLevel { Fast, Full };

Family parse_family(const std::string& name);
std::string to_string(Family f);
CheckLevel parse_level(const std::string& name);

struct CertifyConfig {
  Family family = Family::Fixture;
  std::optional<int> n;            // crooked, w3 (default 3)
  std::optional<std::uint64_t> d;  // crooked, w3 (default 3)
  std::optional<std::filesystem::path> table_path;  // crooked, w3: explicit Q
  std::optional<int> e;            // w5
  std::optional<std::int64_t> p;   // w7
  std::optional<std::string> name;  // fixture
  std::optional<std::size_t> t;    // Wood parameter override
  CheckLevel level = CheckLevel::Fast;
  unsigned workers = 1;
  std::optional<ExportFormat> export_format;
  std::optional<std::filesystem::path> export_path;
  std::optional<std::filesystem::path> cert_path;
};

// Above this order the fast level checks the intersection array from the
// first kFastIntersectionBases base vertices only.
inline constexpr std::size_t kFastIntersectionOrder = 4096;
inline constexpr std::size_t kFastIntersectionBases = 256;

inline constexpr int kExitPass = 0;
inline constexpr int kExitPropertyFailure = 1;
inline constexpr int kExitParameterError = 2;

struct CertifyOutcome {
  nlohmann::json certificate;  // null on parameter errors
  int exit_code = kExitPass;
  std::string message;         // parameter error text
};

// Builds the requested graph, runs the verifier battery, writes the
// certificate (and export) where configured. Never throws for bad
// parameters: those map to exit code 2.
CertifyOutcome run_certify(const CertifyConfig& cfg);

// The certificate alone; throws ParameterError on bad parameters.
Certificate certify(const CertifyConfig& cfg);

struct TuranRow {
  int e = 0;
  std::uint32_t q = 0;
  std::size_t vertices = 0;  // 2^(4e-1)
  std::size_t edges = 0;     // counted on the built crooked graph
  double ratio = 0;          // edges / vertices^(3/2)
  bool handshake_ok = false;
};

struct TuranReport {
  std::vector<TuranRow> rows;
  double inv_sqrt3 = 0;
  double inv_sqrt2 = 0;
};

inline constexpr int kMaxTuranLevel = 4;

// Throws ParameterError unless every e lies in [1, 4].
TuranReport turan_report(const std::vector<int>& e_values, unsigned workers = 1);
std::string format_turan_report(const TuranReport& r);
nlohmann::json to_json(const TuranReport& r);

}  // namespace wood
