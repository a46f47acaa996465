#include "rloop/centering.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "rloop/error.hpp"
#include "rloop/torsion.hpp"

namespace rloop {

BetaAlgebra BetaAlgebra::build(const RightLoopTable& base, const Partition& beta) {
  if (!is_congruence(base, beta).ok)
    throw ValidationError("beta is not a congruence, cannot form the pair algebra");
  BetaAlgebra a;
  a.base_ = base;
  a.beta_ = beta;
  int n = base.size();
  a.index_.assign(n * n, -1);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      if (beta.same_block(x, y)) {
        a.index_[x * n + y] = static_cast<int>(a.pairs_.size());
        a.pairs_.emplace_back(x, y);
      }
  int m = a.pair_count();
  std::vector<std::vector<int>> table(m, std::vector<int>(m));
  std::vector<std::string> labels(m);
  for (int p = 0; p < m; ++p) {
    auto [x, y] = a.pairs_[p];
    labels[p] = "(" + base.label(x) + "," + base.label(y) + ")";
    for (int q = 0; q < m; ++q) {
      auto [u, v] = a.pairs_[q];
      table[p][q] = a.index_[base.mul(x, u) * n + base.mul(y, v)];
    }
  }
  a.pair_table_ = RightLoopTable::validate(table, std::move(labels));
  return a;
}

namespace {

std::vector<int> identity_block(const Partition& p) { return p.block(p.block_of(0)); }

bool fully_associates(const RightLoopTable& loop, int x) {
  for (int y = 0; y < loop.size(); ++y)
    for (int z = 0; z < loop.size(); ++z)
      if (loop.mul(loop.mul(x, y), z) != loop.mul(x, loop.mul(y, z))) return false;
  return true;
}

// the commutation consequences: left inverses of beta's identity block
// commute with gamma's identity block; for gamma = SxS the identity block
// must consist of fully associating elements
bool necessity_conditions(const RightLoopTable& loop, const Partition& gamma,
                          const Partition& beta, std::string* why) {
  for (int b : identity_block(beta)) {
    int bp = loop.left_inverse(b);
    for (int c : identity_block(gamma))
      if (loop.mul(c, bp) != loop.mul(bp, c)) {
        if (why)
          *why = "left inverse of " + loop.label(b) + " does not commute with " +
                 loop.label(c);
        return false;
      }
    if (gamma.is_full() && !fully_associates(loop, b)) {
      if (why) *why = "identity-block element " + loop.label(b) + " does not associate";
      return false;
    }
  }
  return true;
}

bool condition_i(const CenteringWitness& w, std::string* why) {
  const auto& pairs = w.beta.pairs();
  for (const auto& cls : w.relation.blocks()) {
    int x0 = pairs[cls[0]].first;
    for (int p : cls)
      if (!w.gamma.same_block(pairs[p].first, x0)) {
        if (why) *why = "class mixes gamma blocks of first components";
        return false;
      }
  }
  return true;
}

bool condition_ii(const CenteringWitness& w, std::string* why) {
  const auto& pairs = w.beta.pairs();
  for (const auto& cls : w.relation.blocks()) {
    std::set<int> firsts;
    for (int p : cls) firsts.insert(pairs[p].first);
    if (firsts.size() != cls.size()) {
      if (why) *why = "projection to first components is not injective on a class";
      return false;
    }
    const auto& target = w.gamma.block(w.gamma.block_of(pairs[cls[0]].first));
    if (firsts.size() != target.size() ||
        !std::includes(target.begin(), target.end(), firsts.begin(), firsts.end())) {
      if (why) *why = "projection to first components is not onto the gamma class";
      return false;
    }
  }
  return true;
}

bool condition_iii(const CenteringWitness& w, std::string* why) {
  for (const auto& gblk : w.gamma.blocks()) {
    int d0 = w.beta.index_of(gblk[0], gblk[0]);
    for (int x : gblk)
      if (!w.relation.same_block(w.beta.index_of(x, x), d0)) {
        if (why) *why = "diagonal pairs of gamma-related elements fall in different classes";
        return false;
      }
  }
  return true;
}

bool condition_iv(const CenteringWitness& w, std::string* why) {
  const auto& pairs = w.beta.pairs();
  for (const auto& cls : w.relation.blocks()) {
    auto [x0, y0] = pairs[cls[0]];
    int swap_class = w.relation.block_of(w.beta.index_of(y0, x0));
    for (int p : cls) {
      auto [x, y] = pairs[p];
      if (w.relation.block_of(w.beta.index_of(y, x)) != swap_class) {
        if (why) *why = "relation is not swap symmetric";
        return false;
      }
    }
  }
  return true;
}

bool condition_v(const CenteringWitness& w, std::string* why) {
  // (x,y)~(u,v) and (y,z)~(v,w) force (x,z)~(u,w); equivalently the class
  // of (x,z) depends only on (class(x,y), class(y,z))
  const auto& pairs = w.beta.pairs();
  const Partition& beta = w.beta.beta();
  std::map<std::pair<int, int>, int> composed;
  for (int p = 0; p < w.beta.pair_count(); ++p) {
    auto [x, y] = pairs[p];
    for (int z : beta.block(beta.block_of(y))) {
      int q = w.beta.index_of(y, z);
      std::pair<int, int> key{w.relation.block_of(p), w.relation.block_of(q)};
      int result = w.relation.block_of(w.beta.index_of(x, z));
      auto [it, fresh] = composed.emplace(key, result);
      if (!fresh && it->second != result) {
        if (why) *why = "composition condition fails";
        return false;
      }
    }
  }
  return true;
}

// (x,x) ~ (x,y) forces x = y
bool condition_ii_reduced(const CenteringWitness& w, std::string* why) {
  const auto& pairs = w.beta.pairs();
  int n = w.beta.base().size();
  for (int x = 0; x < n; ++x) {
    int d = w.beta.index_of(x, x);
    for (int p : w.relation.block(w.relation.block_of(d)))
      if (pairs[p].first == x && pairs[p].second != x) {
        if (why) *why = "a class merges (x,x) with (x,y), y != x";
        return false;
      }
  }
  return true;
}

// x/y is constant on each class (every witness in sight is keyed by the
// division value; this pins the relation down uniquely)
bool condition_vi(const CenteringWitness& w, std::string* why) {
  const auto& pairs = w.beta.pairs();
  const auto& base = w.beta.base();
  for (const auto& cls : w.relation.blocks()) {
    auto [x0, y0] = pairs[cls[0]];
    int q = base.rdiv(x0, y0);
    for (int p : cls) {
      auto [x, y] = pairs[p];
      if (base.rdiv(x, y) != q) {
        if (why) *why = "division value is not constant on a class";
        return false;
      }
    }
  }
  return true;
}

bool relation_shape_ok(const CenteringWitness& w) {
  return w.relation.size() == w.beta.pair_count();
}

bool structural_conditions(const CenteringWitness& w) {
  return condition_i(w, nullptr) && condition_ii(w, nullptr) && condition_iii(w, nullptr) &&
         condition_iv(w, nullptr) && condition_v(w, nullptr) && condition_vi(w, nullptr);
}

}  // namespace

AxiomCheck check_centering_axioms(const CenteringWitness& w) {
  if (!relation_shape_ok(w))
    throw ValidationError("relation is not an equivalence on beta's pairs");
  AxiomCheck out;
  std::string why;
  if (!necessity_conditions(w.beta.base(), w.gamma, w.beta.beta(), &why))
    out.failures.push_back("identity-block-commutation");
  if (!condition_i(w, &why)) out.failures.push_back("projection-compatibility");
  if (!condition_ii(w, &why)) out.failures.push_back("class-bijection");
  if (!condition_iii(w, &why)) out.failures.push_back("diagonal-linking");
  if (!condition_iv(w, &why)) out.failures.push_back("swap-symmetry");
  if (!condition_v(w, &why)) out.failures.push_back("composition");
  if (!condition_vi(w, &why)) out.failures.push_back("division-constancy");
  out.ok = out.failures.empty();
  return out;
}

bool check_centering_equiv(const CenteringWitness& w) {
  if (!relation_shape_ok(w))
    throw ValidationError("relation is not an equivalence on beta's pairs");
  return necessity_conditions(w.beta.base(), w.gamma, w.beta.beta(), nullptr) &&
         condition_i(w, nullptr) && condition_ii(w, nullptr) &&
         condition_iii(w, nullptr) && condition_ii_reduced(w, nullptr) &&
         condition_vi(w, nullptr);
}

CenteringWitness group_centering_witness(const RightLoopTable& g,
                                         const std::vector<int>& h_in,
                                         const std::vector<int>& k_in) {
  if (!g.is_group()) throw ValidationError("table is not a group");
  auto inv = [&](int x) { return g.left_inverse(x); };
  auto contains = [](const std::vector<int>& set, int x) {
    return std::find(set.begin(), set.end(), x) != set.end();
  };
  for (const auto* sub : {&h_in, &k_in}) {
    if (!contains(*sub, 0)) throw ValidationError("subgroup lacks the identity");
    for (int a : *sub)
      for (int b : *sub)
        if (!contains(*sub, g.mul(a, inv(b))))
          throw ValidationError("element set is not a subgroup");
    for (int a : *sub)
      for (int x = 0; x < g.size(); ++x)
        if (!contains(*sub, g.mul(g.mul(x, a), inv(x))))
          throw ValidationError("subgroup is not normal");
  }
  for (int a : h_in)
    for (int b : k_in)
      if (g.mul(a, b) != g.mul(b, a))
        throw ValidationError("subgroups do not commute elementwise");

  auto coset_partition = [&](const std::vector<int>& sub) {
    std::vector<std::pair<int, int>> pairs;
    for (int a : sub)
      for (int x = 0; x < g.size(); ++x) pairs.emplace_back(g.mul(a, x), x);
    return Partition::from_pairs(g.size(), pairs);
  };
  Partition beta = coset_partition(h_in);
  Partition gamma = coset_partition(k_in);

  CenteringWitness w;
  w.beta = BetaAlgebra::build(g, beta);
  w.gamma = gamma;
  // (x,y) ~ (u,v)  iff  y x^-1 = v u^-1  and  x^-1 u in K
  std::map<std::pair<int, int>, int> key_to_block;
  std::vector<int> ids(w.beta.pair_count());
  for (int p = 0; p < w.beta.pair_count(); ++p) {
    auto [x, y] = w.beta.pairs()[p];
    std::pair<int, int> key{g.mul(y, inv(x)), gamma.block_of(x)};
    auto [it, fresh] = key_to_block.emplace(key, static_cast<int>(key_to_block.size()));
    ids[p] = it->second;
    (void)fresh;
  }
  w.relation = Partition::from_block_ids(ids);

  // the identity class must be {(w,w) : w in K}
  const auto& id_class = w.relation.block(w.relation.block_of(w.beta.index_of(0, 0)));
  std::set<std::pair<int, int>> got;
  for (int p : id_class) got.insert(w.beta.pairs()[p]);
  std::set<std::pair<int, int>> want;
  for (int x : k_in) want.emplace(x, x);
  if (got != want) throw Error("identity class of the group witness is not the diagonal of K");
  return w;
}

namespace {

Partition candidate_relation(const BetaAlgebra& beta, const Partition& gamma) {
  const auto& base = beta.base();
  std::map<std::pair<int, int>, int> key_to_block;
  std::vector<int> ids(beta.pair_count());
  for (int p = 0; p < beta.pair_count(); ++p) {
    auto [x, y] = beta.pairs()[p];
    std::pair<int, int> key{base.rdiv(x, y), gamma.block_of(x)};
    auto [it, fresh] = key_to_block.emplace(key, static_cast<int>(key_to_block.size()));
    ids[p] = it->second;
    (void)fresh;
  }
  return Partition::from_block_ids(ids);
}

// Axioms (ii) and (iii) force the class layout: in each gamma block the
// diagonal pairs form one class, and the remaining pairs split into
// k = |beta block| - 1 classes, each picking exactly one non-diagonal
// partner per element. The enumerator walks every such layout.
struct ForcedEnumerator {
  const BetaAlgebra& algebra;
  const Partition& gamma;
  std::size_t cap;
  std::size_t leaves = 0;
  bool capped = false;
  std::vector<int> class_of{};  // per pair; diag classes preassigned
  int next_class = 0;

  template <typename Visit>
  void run(Visit&& visit) {
    const Partition& beta = algebra.beta();
    int k = static_cast<int>(identity_block(beta).size()) - 1;
    class_of.assign(algebra.pair_count(), -1);
    next_class = 0;
    // diagonal class per gamma block
    for (const auto& gblk : gamma.blocks()) {
      int c = next_class++;
      for (int x : gblk) class_of[algebra.index_of(x, x)] = c;
    }
    if (k == 0) {
      ++leaves;
      visit(class_of);
      return;
    }
    // per gamma block: k block-local classes, assigned element by element
    struct BlockPlan {
      std::vector<int> elements;
      int class_base;
    };
    std::vector<BlockPlan> plan;
    for (const auto& gblk : gamma.blocks()) {
      plan.push_back({gblk, next_class});
      next_class += k;
    }
    assign(plan, 0, 0, k, std::forward<Visit>(visit));
  }

  template <typename Plan, typename Visit>
  void assign(const Plan& plan, std::size_t block, std::size_t elem, int k, Visit&& visit) {
    if (capped) return;
    if (block == plan.size()) {
      ++leaves;
      visit(class_of);
      return;
    }
    const auto& bp = plan[block];
    if (elem == bp.elements.size()) {
      assign(plan, block + 1, 0, k, std::forward<Visit>(visit));
      return;
    }
    const Partition& beta = algebra.beta();
    int x = bp.elements[elem];
    std::vector<int> partners;
    for (int v : beta.block(beta.block_of(x)))
      if (v != x) partners.push_back(v);
    // first element of the block anchors the class labels
    std::vector<int> perm(k);
    std::iota(perm.begin(), perm.end(), 0);
    do {
      if (leaves >= cap) {
        capped = true;
        return;
      }
      for (int i = 0; i < k; ++i)
        class_of[algebra.index_of(x, partners[i])] = bp.class_base + perm[i];
      assign(plan, block, elem + 1, k, visit);
      for (int i = 0; i < k; ++i) class_of[algebra.index_of(x, partners[i])] = -1;
      if (elem == 0) break;  // canonical anchor: only the identity assignment
    } while (std::next_permutation(perm.begin(), perm.end()));
  }
};

// number of layouts: prod over gamma blocks of (k!)^(size-1)
double forced_space_estimate(const Partition& gamma, const Partition& beta) {
  int k = static_cast<int>(beta.block(beta.block_of(0)).size()) - 1;
  if (k <= 0) return 1.0;
  double fact = 1.0;
  for (int i = 2; i <= k; ++i) fact *= i;
  double total = 1.0;
  for (const auto& gblk : gamma.blocks()) {
    for (std::size_t i = 1; i < gblk.size(); ++i) {
      total *= fact;
      if (total > 1e18) return total;
    }
  }
  return total;
}

}  // namespace

CenteringSearch centralizes(const RightLoopTable& loop, const Partition& gamma,
                            const Partition& beta, std::size_t search_cap,
                            bool use_candidate) {
  if (!is_congruence(loop, gamma).ok) throw ValidationError("gamma is not a congruence");
  if (!is_congruence(loop, beta).ok) throw ValidationError("beta is not a congruence");

  std::string why;
  if (!necessity_conditions(loop, gamma, beta, &why))
    return {CenteringOutcome::None, std::nullopt, why};

  BetaAlgebra algebra = BetaAlgebra::build(loop, beta);

  if (use_candidate) {
    CenteringWitness w;
    w.beta = algebra;
    w.gamma = gamma;
    w.relation = candidate_relation(algebra, gamma);
    w.via_candidate = true;
    if (relation_shape_ok(w) && structural_conditions(w))
      return {CenteringOutcome::Found, std::move(w), "candidate"};
  }

  if (forced_space_estimate(gamma, beta) <= static_cast<double>(search_cap)) {
    // complete enumeration of the forced class layouts; returns the least
    // certified relation so the result does not depend on visit order
    std::optional<Partition> best;
    ForcedEnumerator en{algebra, gamma, search_cap};
    en.run([&](const std::vector<int>& class_of) {
      CenteringWitness w;
      w.beta = algebra;
      w.gamma = gamma;
      w.relation = Partition::from_block_ids(class_of);
      if (structural_conditions(w) && (!best || w.relation < *best)) best = w.relation;
    });
    if (en.capped) return {CenteringOutcome::Undecided, std::nullopt, "layout cap hit"};
    if (best) {
      CenteringWitness w;
      w.beta = algebra;
      w.gamma = gamma;
      w.relation = *best;
      w.via_candidate = false;
      return {CenteringOutcome::Found, std::move(w), "search"};
    }
    return {CenteringOutcome::None, std::nullopt, "no centering congruence exists"};
  }

  // the layout space is too large to sweep; fall back to the congruences of
  // the pair algebra, which cover the operation-compatible relations
  try {
    for (const auto& sub : subloops(algebra.pair_table(), search_cap)) {
      if (sub.size() != identity_block(gamma).size()) continue;
      if (!is_invariant_subloop(algebra.pair_table(), sub)) continue;
      CenteringWitness w;
      w.beta = algebra;
      w.gamma = gamma;
      w.relation = congruence_of_subloop(algebra.pair_table(), sub);
      w.via_candidate = false;
      if (structural_conditions(w))
        return {CenteringOutcome::Found, std::move(w), "search-compatible"};
    }
  } catch (const CapError& e) {
    return {CenteringOutcome::Undecided, std::nullopt, e.what()};
  }
  return {CenteringOutcome::Undecided, std::nullopt,
          "layout space too large; compatible relations exhausted"};
}

std::vector<Partition> all_centering_relations(const RightLoopTable& loop,
                                               const Partition& gamma,
                                               const Partition& beta, std::size_t cap) {
  if (!is_congruence(loop, gamma).ok) throw ValidationError("gamma is not a congruence");
  if (!is_congruence(loop, beta).ok) throw ValidationError("beta is not a congruence");
  if (!necessity_conditions(loop, gamma, beta, nullptr)) return {};
  if (forced_space_estimate(gamma, beta) > static_cast<double>(cap))
    throw CapError("centering layout space exceeds the cap");
  BetaAlgebra algebra = BetaAlgebra::build(loop, beta);
  std::vector<Partition> out;
  ForcedEnumerator en{algebra, gamma, cap};
  en.run([&](const std::vector<int>& class_of) {
    CenteringWitness w;
    w.beta = algebra;
    w.gamma = gamma;
    w.relation = Partition::from_block_ids(class_of);
    if (structural_conditions(w)) out.push_back(w.relation);
  });
  if (en.capped) throw CapError("centering layout enumeration capped");
  return out;
}

CenterResult center_congruence(const RightLoopTable& loop, std::size_t seed_cap,
                               std::size_t search_cap) {
  Partition full = Partition::full(loop.size());
  CenterResult result;
  result.zeta = Partition::discrete(loop.size());
  result.exact = true;
  for (const auto& beta : all_congruences(loop, seed_cap)) {
    CenteringSearch s = centralizes(loop, full, beta, search_cap);
    if (s.outcome == CenteringOutcome::Found)
      result.zeta = join(result.zeta, beta);
    else if (s.outcome == CenteringOutcome::Undecided)
      result.exact = false;
  }
  if (result.exact) {
    CenteringSearch s = centralizes(loop, full, result.zeta, search_cap);
    if (s.outcome == CenteringOutcome::Undecided)
      result.exact = false;
    else if (s.outcome == CenteringOutcome::None)
      throw Error("join of centralized congruences is not centralized");
  }
  result.center = result.zeta.block(result.zeta.block_of(0));
  return result;
}

std::vector<int> center(const RightLoopTable& loop) {
  return center_congruence(loop).center;
}

namespace {

std::string triple_label(const RightLoopTable& loop, int x, int y, int z) {
  return "(" + loop.label(x) + "," + loop.label(y) + "," + loop.label(z) + ")";
}

}  // namespace

std::vector<StatementReport> verify_statements(const RightLoopTable& loop) {
  int n = loop.size();
  TorsionData td = torsion_data(loop);
  StabilityRelation sigma = stability(loop, td);
  const std::vector<int>& sigma1 = sigma.identity_class;
  SigmaCongruenceReport sigma_cong = sigma_is_congruence(loop, td);
  CenterResult zeta = center_congruence(loop);
  PermGroup z_gss = center_of_group(td.gss);
  PermGroup norm = gs_normalizer(loop, td);

  std::set<Perm> sigma_translations;
  for (int u : sigma1) sigma_translations.insert(loop.right_translation(u));
  bool sigma1_is_zgss = sigma_translations.size() == z_gss.order() &&
                        std::all_of(z_gss.elements().begin(), z_gss.elements().end(),
                                    [&](const Perm& p) { return sigma_translations.count(p); });

  bool middle_assoc = true;
  std::string middle_witness;
  for (int u : sigma1)
    for (int v = 0; v < n && middle_assoc; ++v)
      for (int w = 0; w < n && middle_assoc; ++w)
        if (loop.mul(loop.mul(v, u), w) != loop.mul(v, loop.mul(u, w))) {
          middle_assoc = false;
          middle_witness = triple_label(loop, v, u, w);
        }

  std::vector<StatementReport> out;
  auto add = [&](std::string id, bool hyp, bool pass, std::string detail) {
    ConclusionStatus status = !hyp ? ConclusionStatus::Vacuous
                                   : (pass ? ConclusionStatus::Pass : ConclusionStatus::Fail);
    if (status != ConclusionStatus::Fail) detail.clear();
    out.push_back({std::move(id), hyp, status, std::move(detail)});
  };

  {
    bool ok = true;
    std::string detail;
    for (int u : sigma1)
      if (!loop.is_left_nonsingular(u)) {
        ok = false;
        detail = "element " + loop.label(u) + " has a singular left translation";
      }
    add("sigma1-left-nonsingular", true, ok, detail);
  }

  {
    bool ok = std::includes(sigma1.begin(), sigma1.end(), zeta.center.begin(),
                            zeta.center.end());
    add("center-within-sigma1", true, ok,
        ok ? "" : "center " + loop.label_set(zeta.center) + " escapes sigma1");
  }

  {
    const auto& c = zeta.center;
    auto in_center = [&](int x) { return std::binary_search(c.begin(), c.end(), x); };
    bool ok = true;
    std::string detail;
    for (int a : c)
      for (int b : c) {
        if (!in_center(loop.mul(a, b)) || !in_center(loop.rdiv(a, b))) ok = false;
        if (loop.mul(a, b) != loop.mul(b, a)) ok = false;
        for (int d : c)
          if (loop.mul(loop.mul(a, b), d) != loop.mul(a, loop.mul(b, d))) ok = false;
      }
    for (int a : c) {
      int ap = loop.left_inverse(a);
      if (!in_center(ap) || loop.mul(a, ap) != 0 || loop.mul(ap, a) != 0) ok = false;
    }
    if (!ok) detail = "center is not an abelian group under the loop operation";
    add("center-abelian-group", true, ok, detail);
  }

  {
    // commutation consequences of centering across every centralized pair
    auto congs = all_congruences(loop);
    bool any_found = false;
    bool inverse_comm = true, global_comm = true;
    std::string d1, d2;
    for (const auto& gamma : congs)
      for (const auto& beta : congs) {
        CenteringSearch s = centralizes(loop, gamma, beta);
        if (s.outcome != CenteringOutcome::Found) continue;
        any_found = true;
        for (int b : identity_block(beta)) {
          int bp = loop.left_inverse(b);
          for (int cc : identity_block(gamma))
            if (loop.mul(cc, bp) != loop.mul(bp, cc)) {
              inverse_comm = false;
              d1 = "b=" + loop.label(b) + ", c=" + loop.label(cc);
            }
          if (gamma.is_full())
            for (int cc = 0; cc < n; ++cc)
              if (loop.mul(b, cc) != loop.mul(cc, b)) {
                global_comm = false;
                d2 = "b=" + loop.label(b) + ", c=" + loop.label(cc);
              }
        }
      }
    add("centralized-left-inverse-commutes", any_found, inverse_comm, d1);
    add("centralized-block-commutes-globally", any_found, global_comm, d2);
  }

  {
    bool ok = true;
    std::string detail;
    for (int x : sigma1)
      for (int y = 0; y < n && ok; ++y)
        for (int z = 0; z < n && ok; ++z)
          if (loop.rdiv(loop.mul(x, y), z) != loop.mul(x, loop.rdiv(y, z))) {
            ok = false;
            detail = triple_label(loop, x, y, z);
          }
    add("sigma1-mul-div-assoc", true, ok, detail);
  }

  {
    bool ok = true;
    std::string detail;
    for (int x : sigma1)
      for (int y = 0; y < n && ok; ++y)
        if (loop.rdiv(x, y) != loop.mul(x, loop.left_inverse(y))) {
          ok = false;
          detail = "x=" + loop.label(x) + ", y=" + loop.label(y);
        }
    add("sigma1-div-by-left-inverse", true, ok, detail);
  }

  {
    bool ok = true;
    std::string detail;
    for (int x : sigma1)
      for (int y = 0; y < n && ok; ++y)
        for (int z = 0; z < n && ok; ++z)
          if (loop.mul(x, loop.mul(y, z)) != loop.mul(loop.mul(y, x), z)) {
            ok = false;
            detail = triple_label(loop, x, y, z);
          }
    add("sigma1-central-twist", sigma1_is_zgss, ok, detail);
  }

  {
    bool ok = true;
    std::string detail;
    for (int x : sigma1) {
      int xp = loop.left_inverse(x);
      for (int y = 0; y < n && ok; ++y)
        for (int z = 0; z < n && ok; ++z)
          if (loop.rdiv(y, loop.mul(x, z)) != loop.mul(xp, loop.rdiv(y, z))) {
            ok = false;
            detail = triple_label(loop, y, x, z);
          }
    }
    add("sigma1-central-div-shift", sigma1_is_zgss && middle_assoc, ok, detail);
  }

  {
    bool hyp = sigma_cong.is_congruence && sigma1_is_zgss && middle_assoc;
    bool ok = sigma1 == zeta.center;
    add("sigma1-is-center-when-central", hyp, ok,
        ok ? "" : "sigma1 " + loop.label_set(sigma1) + " vs center " +
                      loop.label_set(zeta.center));
  }

  {
    bool hyp = sigma_cong.is_congruence && sigma1 == zeta.center;
    bool trans_central = true;
    for (int u : sigma1)
      if (!z_gss.contains(loop.right_translation(u))) trans_central = false;
    // N_{G_SS}(G_S) must factor as G_S * Z(G_SS)
    std::set<Perm> product;
    for (const auto& a : td.gs.elements())
      for (const auto& b : z_gss.elements()) product.insert(compose(a, b));
    bool factors = product.size() == norm.order() &&
                   std::all_of(product.begin(), product.end(),
                               [&](const Perm& p) { return norm.contains(p); });
    add("sigma1-center-forces-central-translations", hyp, trans_central && factors,
        trans_central ? (factors ? "" : "normalizer does not factor as G_S Z(G_SS)")
                      : "some sigma1 translation is not central");
  }

  return out;
}

}  // namespace rloop
