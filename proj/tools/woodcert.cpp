// woodcert: build Wood-class graph families and certify their properties.
//
//   woodcert certify --family w3 --n 5 --cert w3.json
//   woodcert turan --e-list 2,3,4 --out turan.tsv
//   woodcert table --n 5 --d 3 --out x3.txt
//   woodcert table --check x3.txt

#include <fstream>
#include <sstream>
#include <iostream>

#include <CLI11.hpp>

#include "wood/certify.hpp"
#include "wood/crooked.hpp"
#include "wood/error.hpp"
#include "wood/parallel.hpp"

namespace {

int run_table(const std::string& check_path, int n, std::uint64_t d, const std::string& out_path,
              unsigned workers) {
  if (!check_path.empty()) {
    std::ifstream in(check_path);
    if (!in) throw wood::ParameterError("cannot read '" + check_path + "'");
    const auto verdict = wood::is_crooked(wood::read_function_table(in), workers);
    std::cout << wood::to_json(verdict).dump(2) << '\n';
    return verdict.pass() ? wood::kExitPass : wood::kExitPropertyFailure;
  }
  const auto table = wood::tabulate_power_map(wood::make_field(n), d);
  if (out_path.empty()) {
    wood::write_function_table(table, std::cout);
  } else {
    std::ofstream out(out_path);
    if (!out) throw wood::ParameterError("cannot write '" + out_path + "'");
    wood::write_function_table(table, out);
  }
  return wood::kExitPass;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Construct and certify triangle-free diameter-2 graph families"};
  app.require_subcommand(1);
  unsigned threads = wood::default_workers();
  app.add_option("--threads", threads, "Worker threads (default: $WOOD_THREADS or hardware concurrency)")
      ->check(CLI::PositiveNumber);

  wood::CertifyConfig cfg;
  std::string family, level = "fast", export_fmt, export_path, cert_path, name, table_path;
  int n = 0, e = 0;
  std::uint64_t d = 0;
  std::int64_t p = 0;
  std::size_t t = 0;
  auto* certify = app.add_subcommand("certify", "Build one family member and certify it");
  certify->add_option("--family", family, "crooked | w3 | w5 | w7 | fixture")->required();
  auto* n_opt = certify->add_option("--n", n, "Extension degree for crooked and w3 (default 3)");
  auto* d_opt = certify->add_option("--d", d, "Power-map exponent for crooked and w3 (default 3)");
  auto* table_opt = certify->add_option("--table", table_path, "Function table file for crooked and w3");
  auto* e_opt = certify->add_option("--e", e, "Recursion level for w5 (2..4)");
  auto* p_opt = certify->add_option("--p", p, "Prime p = 11 (mod 12) for w7");
  auto* name_opt = certify->add_option("--name", name, "Fixture: c5 | petersen | k44 | star(m)");
  auto* t_opt = certify->add_option("--t", t, "Wood class parameter t");
  certify->add_option("--level", level, "fast | full")->check(CLI::IsMember({"fast", "full"}));
  certify->add_option("--threads", threads, "Worker threads")->check(CLI::PositiveNumber);
  auto* export_opt = certify->add_option("--export", export_fmt, "edgelist | dot");
  auto* out_opt = certify->add_option("--out", export_path, "Graph export path");
  auto* cert_opt = certify->add_option("--cert", cert_path, "Certificate path (default: stdout)");

  std::string e_list = "2,3,4", turan_out;
  bool turan_json = false;
  auto* turan = app.add_subcommand("turan", "Edge density of crooked graphs against n^(3/2)");
  turan->add_option("--e-list", e_list, "Comma-separated levels e (1..4)");
  turan->add_option("--out", turan_out, "Also write the report here");
  turan->add_flag("--json", turan_json, "Emit JSON instead of a table");

  std::string check_path, table_out;
  int table_n = 3;
  std::uint64_t table_d = 3;
  auto* table = app.add_subcommand("table", "Export or check a function table");
  table->add_option("--check", check_path, "Decide crookedness of a table file");
  table->add_option("--n", table_n, "Extension degree of the exported power map");
  table->add_option("--d", table_d, "Exponent of the exported power map");
  table->add_option("--out", table_out, "Export path (default: stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& err) {
    const int code = app.exit(err);
    return code == 0 ? 0 : wood::kExitParameterError;
  }

  try {
    if (*certify) {
      cfg.family = wood::parse_family(family);
      if (*n_opt) cfg.n = n;
      if (*d_opt) cfg.d = d;
      if (*table_opt) cfg.table_path = table_path;
      if (*e_opt) cfg.e = e;
      if (*p_opt) cfg.p = p;
      if (*name_opt) cfg.name = name;
      if (*t_opt) cfg.t = t;
      cfg.level = wood::parse_level(level);
      cfg.workers = threads;
      if (*export_opt) cfg.export_format = wood::parse_export_format(export_fmt);
      if (*out_opt) cfg.export_path = export_path;
      if (*cert_opt) cfg.cert_path = cert_path;
      const auto outcome = wood::run_certify(cfg);
      if (outcome.exit_code == wood::kExitParameterError) {
        std::cerr << "woodcert: " << outcome.message << '\n';
        return outcome.exit_code;
      }
      if (!cfg.cert_path) std::cout << outcome.certificate.dump(2) << '\n';
      std::cerr << "woodcert: " << family << (outcome.exit_code == 0 ? " certified" : " FAILED") << '\n';
      return outcome.exit_code;
    }
    if (*turan) {
      std::vector<int> levels;
      std::stringstream ss(e_list);
      for (std::string tok; std::getline(ss, tok, ',');) {
        std::size_t used = 0;
        const int v = std::stoi(tok, &used);
        if (used != tok.size()) throw wood::ParameterError("bad --e-list entry '" + tok + "'");
        levels.push_back(v);
      }
      const auto report = wood::turan_report(levels, threads);
      const std::string text = turan_json ? wood::to_json(report).dump(2) + "\n" : wood::format_turan_report(report);
      std::cout << text;
      if (!turan_out.empty()) {
        std::ofstream out(turan_out);
        out << text;
        if (!out) throw wood::ParameterError("cannot write '" + turan_out + "'");
      }
      return wood::kExitPass;
    }
    return run_table(check_path, table_n, table_d, table_out, threads);
  } catch (const std::invalid_argument& err) {
    std::cerr << "woodcert: " << err.what() << '\n';
    return wood::kExitParameterError;
  } catch (const std::out_of_range& err) {
    std::cerr << "woodcert: " << err.what() << '\n';
    return wood::kExitParameterError;
  }
}
