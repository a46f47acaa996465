#include "rloop/torsion.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "rloop/error.hpp"

namespace rloop {

Perm cocycle(const RightLoopTable& loop, int y, int z) {
  Perm ry = loop.right_translation(y);
  Perm rz = loop.right_translation(z);
  Perm ryz = loop.right_translation(loop.mul(y, z));
  return compose(compose(ry, rz), ryz.inverse());
}

Perm as_translation(const RightLoopTable& loop, int x) {
  return loop.right_translation(x);
}

TorsionData torsion_data(const RightLoopTable& loop, std::size_t order_cap) {
  int n = loop.size();
  std::vector<Perm> translations;
  for (int x = 0; x < n; ++x) translations.push_back(loop.right_translation(x));
  PermGroup gss = PermGroup::closure(translations, order_cap);
  PermGroup gs = stabilizer(gss, 0);

  // G_S must equal the closure of the cocycles f(y,z)
  std::set<Perm> cocycle_gens = {Perm(n)};
  for (int y = 0; y < n; ++y)
    for (int z = 0; z < n; ++z) cocycle_gens.insert(cocycle(loop, y, z));
  PermGroup from_cocycles =
      PermGroup::closure({cocycle_gens.begin(), cocycle_gens.end()}, order_cap);
  if (!gs.same_group(from_cocycles))
    throw Error("stabilizer of the identity differs from the cocycle closure");

  return {std::move(gss), std::move(gs)};
}

PermGroup gs_normalizer(const RightLoopTable& loop, const TorsionData& td) {
  (void)loop;
  return normalizer(td.gss, td.gs);
}

StabilityRelation stability(const RightLoopTable& loop, const TorsionData& td) {
  int n = loop.size();
  // memoized per-point stabilizers, as sorted index sets into gss's elements
  const auto& elems = td.gss.elements();
  std::vector<std::vector<int>> stabs(n);
  for (int x = 0; x < n; ++x)
    for (std::size_t e = 0; e < elems.size(); ++e)
      if (elems[e](x) == x) stabs[x].push_back(static_cast<int>(e));

  std::map<std::vector<int>, int> stab_to_block;
  std::vector<int> ids(n);
  for (int x = 0; x < n; ++x) {
    auto [it, fresh] = stab_to_block.emplace(stabs[x], static_cast<int>(stab_to_block.size()));
    ids[x] = it->second;
    (void)fresh;
  }
  Partition classes = Partition::from_block_ids(ids);
  std::vector<int> sigma1 = classes.block(classes.block_of(0));

  // cross-check one: fully associating elements
  std::vector<int> assoc;
  for (int x = 0; x < n; ++x) {
    bool ok = true;
    for (int y = 0; y < n && ok; ++y)
      for (int z = 0; z < n && ok; ++z)
        if (loop.mul(loop.mul(x, y), z) != loop.mul(x, loop.mul(y, z))) ok = false;
    if (ok) assoc.push_back(x);
  }
  if (assoc != sigma1)
    throw Error("stability class of the identity differs from the associating set");

  // cross-check two: N_{G_SS}(G_S) ∩ S under the translation embedding
  PermGroup norm = gs_normalizer(loop, td);
  std::vector<int> in_normalizer;
  for (int x = 0; x < n; ++x)
    if (norm.contains(loop.right_translation(x))) in_normalizer.push_back(x);
  if (in_normalizer != sigma1)
    throw Error("stability class of the identity differs from N(G_S) ∩ S");

  return {std::move(classes), std::move(sigma1)};
}

StabilityRelation stability(const RightLoopTable& loop) {
  return stability(loop, torsion_data(loop));
}

SigmaCongruenceReport sigma_is_congruence(const RightLoopTable& loop, const TorsionData& td) {
  StabilityRelation rel = stability(loop, td);
  CongruenceCheck check = is_congruence(loop, rel.classes);
  PermGroup norm = gs_normalizer(loop, td);
  SigmaCongruenceReport report;
  report.is_congruence = check.ok;
  report.violation = check.violation;
  report.normalizer_is_normal = is_normal_in(norm, td.gss);
  return report;
}

SigmaCongruenceReport sigma_is_congruence(const RightLoopTable& loop) {
  return sigma_is_congruence(loop, torsion_data(loop));
}

}  // namespace rloop
