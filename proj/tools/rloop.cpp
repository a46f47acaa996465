#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "rloop/analysis.hpp"
#include "rloop/census.hpp"
#include "rloop/error.hpp"
#include "rloop/golden.hpp"
#include "rloop/table_io.hpp"
#include "rloop/transversal.hpp"

namespace {

constexpr int kExitParse = 1;
constexpr int kExitAxiom = 2;
constexpr int kExitCap = 3;

int run_analyze(const std::string& path, bool json) {
  rloop::RightLoopTable table = rloop::read_table_file(path);
  rloop::AnalysisReport report = rloop::analyze(table);
  std::cout << (json ? rloop::to_json(report, table) : rloop::to_text(report, table));
  if (json) std::cout << "\n";
  return report.center_exact ? 0 : kExitCap;
}

int run_from_transversal(const std::string& path, const std::string& out_path,
                         bool verify, std::size_t cap) {
  rloop::GroupSpec spec = rloop::read_group_spec_file(path);
  rloop::TransversalSpec ts = rloop::build_transversal(spec, cap);
  rloop::NrtCheck nrt = rloop::is_nrt(ts);
  if (!nrt.ok) {
    std::cerr << "not an NRT: " << nrt.diagnostic << "\n";
    return kExitAxiom;
  }
  rloop::RightLoopTable table = rloop::induced_table(ts);
  if (out_path.empty()) {
    rloop::write_table(std::cout, table);
  } else {
    std::ofstream out(out_path);
    if (!out) throw rloop::ParseError("cannot write " + out_path);
    rloop::write_table(out, table);
  }
  if (verify) {
    rloop::PermGroup hs = rloop::h_subgroup(ts);
    rloop::PermGroup kernel = rloop::chi_kernel(ts);
    std::cerr << "|G| = " << ts.ambient.order() << ", [G:H] = " << table.size()
              << ", |H_S| = " << hs.order() << ", |core| = " << kernel.order()
              << ", |chi(G)| = " << rloop::chi_image(ts).order() << "\n";
  }
  return 0;
}

int run_enumerate(int n, bool json, const std::string& out_dir) {
  auto tables = rloop::enumerate_right_loops(n);
  std::vector<rloop::CensusRecord> records;
  records.reserve(tables.size());
  for (const auto& t : tables) records.push_back(rloop::census_record(t));

  // counts per (|G_SS|, |G_S|, |center|) signature
  std::map<std::tuple<std::size_t, std::size_t, std::size_t>, std::size_t> counts;
  for (const auto& r : records)
    ++counts[{r.gss_order, r.gs_order, r.center.size()}];

  if (json) {
    nlohmann::json j;
    j["order"] = n;
    j["classes"] = records.size();
    j["records"] = nlohmann::json::array();
    for (const auto& r : records) {
      nlohmann::json jr;
      jr["table"] = r.table.rows();
      jr["gss_order"] = r.gss_order;
      jr["gs_order"] = r.gs_order;
      jr["sigma1"] = r.sigma1;
      jr["center"] = r.center;
      jr["is_loop"] = r.is_loop;
      jr["is_group"] = r.is_group;
      jr["simple"] = r.simple;
      j["records"].push_back(std::move(jr));
    }
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "right loops of order " << n << " up to isomorphism: " << records.size()
              << "\n";
    std::cout << "|G_SS| |G_S| |center| count\n";
    for (const auto& [key, count] : counts)
      std::cout << std::get<0>(key) << " " << std::get<1>(key) << " " << std::get<2>(key)
                << " " << count << "\n";
  }

  if (!out_dir.empty()) {
    std::filesystem::create_directories(out_dir);
    for (std::size_t i = 0; i < records.size(); ++i) {
      std::ofstream out(out_dir + "/order" + std::to_string(n) + "_class" +
                        std::to_string(i) + ".table");
      rloop::write_table(out, records[i].table);
    }
  }
  return 0;
}

int run_verify_paper(std::uint64_t seed) {
  auto checks = rloop::run_golden_checks("", seed);
  bool all = true;
  for (const auto& c : checks) {
    std::cout << (c.pass ? "PASS " : "FAIL ") << c.name;
    if (!c.pass && !c.detail.empty()) std::cout << "  (" << c.detail << ")";
    std::cout << "\n";
    all = all && c.pass;
  }
  std::cout << (all ? "all checks passed" : "SOME CHECKS FAILED") << "\n";
  return all ? 0 : kExitParse;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"finite right loop toolkit"};
  app.require_subcommand(1);
  std::size_t cap = rloop::kDefaultOrderCap;
  app.add_option("--cap", cap, "group order cap for closures");

  auto* analyze = app.add_subcommand("analyze", "analyze a right loop table file");
  std::string analyze_path;
  bool analyze_json = false;
  analyze->add_option("file", analyze_path, "table file")->required();
  analyze->add_flag("--json", analyze_json, "machine readable output");

  auto* fromt = app.add_subcommand("from-transversal",
                                   "induce a right loop table from a group spec");
  std::string fromt_path, fromt_out;
  bool fromt_verify = false;
  fromt->add_option("file", fromt_path, "group spec file")->required();
  fromt->add_option("-o,--out", fromt_out, "output table file (default stdout)");
  fromt->add_flag("--verify", fromt_verify, "also report H_S and the core");

  auto* enumerate = app.add_subcommand("enumerate", "census of right loops of order n");
  int enum_n = 0;
  bool enum_json = false;
  std::string enum_out;
  enumerate->add_option("n", enum_n, "order (at most 6)")->required();
  enumerate->add_flag("--json", enum_json, "machine readable output");
  enumerate->add_option("--out", enum_out, "directory for one table file per class");

  auto* verify = app.add_subcommand("verify-paper", "run the built-in golden suite");
  std::uint64_t seed = 0;
  verify->add_option("--seed", seed, "seed for randomized spot checks");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*analyze) return run_analyze(analyze_path, analyze_json);
    if (*fromt) return run_from_transversal(fromt_path, fromt_out, fromt_verify, cap);
    if (*enumerate) return run_enumerate(enum_n, enum_json, enum_out);
    if (*verify) return run_verify_paper(seed);
  } catch (const rloop::ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kExitParse;
  } catch (const rloop::CapError& e) {
    std::cerr << "cap exceeded: " << e.what() << "\n";
    return kExitCap;
  } catch (const rloop::ValidationError& e) {
    std::cerr << "axiom violation: " << e.what() << "\n";
    return kExitAxiom;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitParse;
  }
  return 0;
}
