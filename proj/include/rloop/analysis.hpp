#ifndef RLOOP_ANALYSIS_HPP
#define RLOOP_ANALYSIS_HPP

#include <string>
#include <vector>

#include "rloop/centering.hpp"
#include "rloop/congruence.hpp"
#include "rloop/torsion.hpp"

namespace rloop {

/// Everything the analyze command reports about one table.
struct AnalysisReport {
  int order = 0;
  std::vector<std::string> labels;
  bool is_loop = false;
  bool is_group = false;
  std::size_t gss_order = 0;
  std::size_t gs_order = 0;
  std::size_t normalizer_order = 0;
  bool normalizer_is_normal = false;
  std::vector<int> sigma1;
  bool sigma_is_congruence = false;
  std::optional<CongruenceViolation> sigma_violation;
  std::vector<Partition> congruences;
  Partition zeta;
  std::vector<int> center;
  bool center_exact = true;
  bool sigma_equals_zeta = false;
  bool simple = false;
  bool gss_quasiprimitive = false;
  std::vector<StatementReport> statements;
};

AnalysisReport analyze(const RightLoopTable& table);

std::string to_text(const AnalysisReport& report, const RightLoopTable& table);
std::string to_json(const AnalysisReport& report, const RightLoopTable& table);

}  // namespace rloop

#endif
