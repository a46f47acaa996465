#include "rloop/analysis.hpp"

#include <sstream>

#include <json.hpp>

#include "rloop/torsion.hpp"

namespace rloop {

AnalysisReport analyze(const RightLoopTable& table) {
  AnalysisReport r;
  r.order = table.size();
  r.labels = table.labels();
  r.is_loop = table.is_loop();
  r.is_group = table.is_group();

  TorsionData td = torsion_data(table);
  r.gss_order = td.gss.order();
  r.gs_order = td.gs.order();
  PermGroup norm = gs_normalizer(table, td);
  r.normalizer_order = norm.order();
  r.normalizer_is_normal = is_normal_in(norm, td.gss);

  StabilityRelation sigma = stability(table, td);
  r.sigma1 = sigma.identity_class;
  SigmaCongruenceReport sc = sigma_is_congruence(table, td);
  r.sigma_is_congruence = sc.is_congruence;
  r.sigma_violation = sc.violation;

  r.congruences = all_congruences(table);
  CenterResult c = center_congruence(table);
  r.zeta = c.zeta;
  r.center = c.center;
  r.center_exact = c.exact;
  r.sigma_equals_zeta = sc.is_congruence && sigma.classes == c.zeta;
  r.simple = is_simple(table);
  r.gss_quasiprimitive = is_quasiprimitive(td.gss);
  r.statements = verify_statements(table);
  return r;
}

namespace {

std::string partition_text(const Partition& p, const RightLoopTable& t) {
  std::string out;
  for (const auto& blk : p.blocks()) out += t.label_set(blk);
  return out;
}

const char* status_name(ConclusionStatus s) {
  switch (s) {
    case ConclusionStatus::Pass: return "pass";
    case ConclusionStatus::Vacuous: return "vacuous";
    case ConclusionStatus::Fail: return "fail";
  }
  return "?";
}

}  // namespace

std::string to_text(const AnalysisReport& r, const RightLoopTable& t) {
  std::ostringstream out;
  out << "order:            " << r.order << "\n";
  out << "is loop:          " << (r.is_loop ? "yes" : "no") << "\n";
  out << "is group:         " << (r.is_group ? "yes" : "no") << "\n";
  out << "|G_SS|:           " << r.gss_order << "\n";
  out << "|G_S|:            " << r.gs_order << "\n";
  out << "|N(G_S)|:         " << r.normalizer_order
      << (r.normalizer_is_normal ? " (normal in G_SS)" : " (not normal in G_SS)") << "\n";
  out << "sigma1:           " << t.label_set(r.sigma1) << "\n";
  out << "sigma congruence: " << (r.sigma_is_congruence ? "yes" : "no");
  if (r.sigma_violation) {
    const auto& v = *r.sigma_violation;
    out << "  [witness: (" << t.label(v.x) << "," << t.label(v.y) << ") ~ ("
        << t.label(v.u) << "," << t.label(v.v) << ") split by " << v.op << "]";
  }
  out << "\n";
  out << "congruences:      " << r.congruences.size() << "\n";
  for (const auto& c : r.congruences) out << "  " << partition_text(c, t) << "\n";
  out << "zeta:             " << partition_text(r.zeta, t)
      << (r.center_exact ? "" : "  (lower bound, search capped)") << "\n";
  out << "center:           " << t.label_set(r.center) << "\n";
  out << "sigma == zeta:    " << (r.sigma_equals_zeta ? "yes" : "no") << "\n";
  out << "simple:           " << (r.simple ? "yes" : "no") << "\n";
  out << "G_SS quasiprim.:  " << (r.gss_quasiprimitive ? "yes" : "no") << "\n";
  out << "statements:\n";
  for (const auto& s : r.statements) {
    out << "  " << s.id << ": " << status_name(s.status);
    if (!s.detail.empty()) out << " (" << s.detail << ")";
    out << "\n";
  }
  return out.str();
}

std::string to_json(const AnalysisReport& r, const RightLoopTable& t) {
  nlohmann::json j;
  j["order"] = r.order;
  j["labels"] = r.labels;
  j["is_loop"] = r.is_loop;
  j["is_group"] = r.is_group;
  j["gss_order"] = r.gss_order;
  j["gs_order"] = r.gs_order;
  j["normalizer_order"] = r.normalizer_order;
  j["normalizer_is_normal"] = r.normalizer_is_normal;

  auto label_list = [&](const std::vector<int>& xs) {
    std::vector<std::string> out;
    for (int x : xs) out.push_back(t.label(x));
    return out;
  };
  auto partition_json = [&](const Partition& p) {
    std::vector<std::vector<std::string>> blocks;
    for (const auto& blk : p.blocks()) blocks.push_back(label_list(blk));
    return blocks;
  };

  j["sigma1"] = label_list(r.sigma1);
  j["sigma_is_congruence"] = r.sigma_is_congruence;
  if (r.sigma_violation) {
    const auto& v = *r.sigma_violation;
    j["sigma_violation"] = {{"x", t.label(v.x)},
                            {"y", t.label(v.y)},
                            {"u", t.label(v.u)},
                            {"v", t.label(v.v)},
                            {"op", std::string(1, v.op)}};
  }
  j["congruences"] = nlohmann::json::array();
  for (const auto& c : r.congruences) j["congruences"].push_back(partition_json(c));
  j["zeta"] = partition_json(r.zeta);
  j["center"] = label_list(r.center);
  j["center_exact"] = r.center_exact;
  j["sigma_equals_zeta"] = r.sigma_equals_zeta;
  j["simple"] = r.simple;
  j["gss_quasiprimitive"] = r.gss_quasiprimitive;
  j["statements"] = nlohmann::json::array();
  for (const auto& s : r.statements)
    j["statements"].push_back({{"id", s.id},
                               {"hypothesis_holds", s.hypothesis_holds},
                               {"status", status_name(s.status)},
                               {"detail", s.detail}});
  j["table"] = t.rows();
  return j.dump(2);
}

}  // namespace rloop
