#include "rloop/census.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "rloop/centering.hpp"
#include "rloop/congruence.hpp"
#include "rloop/error.hpp"
#include "rloop/torsion.hpp"

namespace rloop {

std::vector<int> canonical_form(const RightLoopTable& t) {
  int n = t.size();
  std::vector<int> relabel(n), best;
  std::iota(relabel.begin(), relabel.end(), 0);
  std::vector<int> inverse(n), flat(n * n);
  do {
    for (int i = 0; i < n; ++i) inverse[relabel[i]] = i;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) flat[i * n + j] = relabel[t.mul(inverse[i], inverse[j])];
    if (best.empty() || flat < best) best = flat;
  } while (std::next_permutation(relabel.begin() + 1, relabel.end()));
  return best;
}

namespace {

void fill_cells(int n, std::vector<std::vector<int>>& table,
                std::vector<std::vector<bool>>& used, int cell,
                std::set<std::vector<int>>& canon) {
  if (cell == (n - 1) * (n - 1)) {
    RightLoopTable t = RightLoopTable::validate(table);
    canon.insert(canonical_form(t));
    return;
  }
  int i = 1 + cell / (n - 1);
  int j = 1 + cell % (n - 1);
  for (int v = 0; v < n; ++v) {
    if (used[j][v]) continue;
    used[j][v] = true;
    table[i][j] = v;
    fill_cells(n, table, used, cell + 1, canon);
    used[j][v] = false;
  }
}

}  // namespace

std::vector<RightLoopTable> enumerate_right_loops(int n) {
  if (n < 1) throw ValidationError("order must be positive");
  if (n > kCensusOrderCap)
    throw CapError("census order cap is " + std::to_string(kCensusOrderCap));
  std::vector<std::vector<int>> table(n, std::vector<int>(n, 0));
  std::vector<std::vector<bool>> used(n, std::vector<bool>(n, false));
  for (int x = 0; x < n; ++x) {
    table[0][x] = x;  // identity row
    table[x][0] = x;  // identity column; its cells are never enumerated
    used[x][x] = true; // column x already holds x in row 0
  }

  std::set<std::vector<int>> canon;
  fill_cells(n, table, used, 0, canon);

  std::vector<RightLoopTable> out;
  for (const auto& flat : canon) {
    std::vector<std::vector<int>> rows(n, std::vector<int>(n));
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) rows[i][j] = flat[i * n + j];
    out.push_back(RightLoopTable::validate(rows));
  }
  return out;
}

CensusRecord census_record(const RightLoopTable& t) {
  CensusRecord r;
  r.table = t;
  TorsionData td = torsion_data(t);
  r.gss_order = td.gss.order();
  r.gs_order = td.gs.order();
  r.sigma1 = stability(t, td).identity_class;
  r.center = center(t);
  r.is_loop = t.is_loop();
  r.is_group = t.is_group();
  r.simple = is_simple(t);
  return r;
}

std::vector<Order4Case> classify_order4() {
  struct Reference {
    std::string name;
    GroupFingerprint fp;
  };
  std::vector<Reference> refs = {
      {"Z4", fingerprint(PermGroup::cyclic(4))},
      {"Z2xZ2", fingerprint(PermGroup::closure({Perm::from_cycles(4, {{0, 1}}),
                                                Perm::from_cycles(4, {{2, 3}})}))},
      {"Sym4", fingerprint(PermGroup::symmetric(4))},
      {"Alt4", fingerprint(PermGroup::alternating(4))},
      {"D8", fingerprint(PermGroup::dihedral_of_order(8))},
  };

  std::vector<Order4Case> cases;
  for (const auto& t : enumerate_right_loops(4)) {
    TorsionData td = torsion_data(t);
    GroupFingerprint fp = fingerprint(td.gss);
    std::string name;
    for (const auto& ref : refs)
      if (ref.fp == fp) name = ref.name;
    if (name.empty()) throw Error("order-4 table with unexpected translation group");
    auto it = std::find_if(cases.begin(), cases.end(), [&](const Order4Case& c) {
      return c.gss_name == name && c.gs_order == td.gs.order();
    });
    if (it == cases.end()) {
      cases.push_back({name, td.gss.order(), td.gs.order(), {}});
      it = cases.end() - 1;
    }
    it->records.push_back(census_record(t));
  }
  std::sort(cases.begin(), cases.end(), [](const Order4Case& a, const Order4Case& b) {
    if (a.gss_order != b.gss_order) return a.gss_order < b.gss_order;
    return a.gss_name < b.gss_name;
  });
  return cases;
}

}  // namespace rloop
