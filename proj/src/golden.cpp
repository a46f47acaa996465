#include "rloop/golden.hpp"

#include <algorithm>
#include <random>
#include <set>

#include "rloop/census.hpp"
#include "rloop/centering.hpp"
#include "rloop/congruence.hpp"
#include "rloop/error.hpp"
#include "rloop/fixtures.hpp"
#include "rloop/torsion.hpp"
#include "rloop/transversal.hpp"

namespace rloop {

namespace {

struct Suite {
  std::string prefix;
  std::vector<GoldenCheck> out;

  bool wants(const std::string& name) const {
    return prefix.empty() || name.rfind(prefix, 0) == 0;
  }
  void check(const std::string& name, bool pass, const std::string& detail = "") {
    if (wants(name)) out.push_back({name, pass, pass ? "" : detail});
  }
  template <typename F>
  void guarded(const std::string& name, F&& body) {
    if (!wants(name)) return;
    try {
      body();
    } catch (const std::exception& e) {
      out.push_back({name, false, e.what()});
    }
  }
};

void alt4_checks(Suite& s) {
  s.guarded("alt4-", [&] {
    TransversalSpec spec = fixtures::alt4_nrt();
    s.check("alt4-nrt", is_nrt(spec).ok, is_nrt(spec).diagnostic);
    RightLoopTable t = induced_table(spec);
    RightLoopTable expected = fixtures::alt4_expected_table();
    s.check("alt4-table", t.rows() == expected.rows(), "induced table differs");

    TorsionData td = torsion_data(t);
    s.check("alt4-gss-order", td.gss.order() == 12,
            "|G_SS| = " + std::to_string(td.gss.order()));
    s.check("alt4-gs-order", td.gs.order() == 2, "|G_S| = " + std::to_string(td.gs.order()));

    PermGroup norm = gs_normalizer(t, td);
    PermGroup z2z2 = PermGroup::closure(
        {Perm::from_cycles(4, {{0, 1}}), Perm::from_cycles(4, {{2, 3}})});
    s.check("alt4-normalizer-order", norm.order() == 4,
            "|N| = " + std::to_string(norm.order()));
    s.check("alt4-normalizer-type", same_fingerprint(norm, z2z2) && !is_cyclic(norm),
            "normalizer is not Z2 x Z2");
    s.check("alt4-normalizer-normal", is_normal_in(norm, td.gss), "N is not normal in G_SS");

    StabilityRelation sigma = stability(t, td);
    s.check("alt4-sigma1", sigma.identity_class == std::vector<int>{0, 5},
            "sigma1 = " + t.label_set(sigma.identity_class));
    s.check("alt4-sigma-congruence", sigma_is_congruence(t, td).is_congruence,
            "sigma is not a congruence here");

    s.check("alt4-center", center(t) == std::vector<int>{0}, "center is not trivial");
    s.check("alt4-noncommuting-pair", t.mul(5, 1) != t.mul(1, 5),
            "expected a non-commuting pair");

    s.check("alt4-invariant-subloop", is_invariant_subloop(t, {0, 5}),
            "{1,6} is not invariant");
    Partition c = congruence_of_subloop(t, {0, 5});
    s.check("alt4-quotient-order3", quotient(t, c).table.size() == 3, "quotient order wrong");
    s.check("alt4-not-simple", !is_simple(t), "table reported simple");

    PermGroup hs = h_subgroup(spec);
    s.check("alt4-h-subgroup", hs.order() == 2 && spec.subgroup.same_group(hs),
            "H_S differs from H");
    s.check("alt4-chi-kernel-trivial", chi_kernel(spec).order() == 1, "core is not trivial");
    s.check("alt4-chi-image", chi_image(spec).order() == 12,
            "chi image order wrong");
  });
}

void order36_checks(Suite& s) {
  s.guarded("order36-", [&] {
    TransversalSpec spec = fixtures::z3z3_z4_nrt();
    s.check("order36-group-order", spec.ambient.order() == 36,
            "|G| = " + std::to_string(spec.ambient.order()));
    NrtCheck nrt = is_nrt(spec);
    s.check("order36-nrt", nrt.ok && spec.transversal.size() == 18, nrt.diagnostic);

    RightLoopTable t = induced_table(spec);
    TorsionData td = torsion_data(t);
    s.check("order36-gss-order", td.gss.order() == 36,
            "|G_SS| = " + std::to_string(td.gss.order()));
    s.check("order36-gs-order", td.gs.order() == 2,
            "|G_S| = " + std::to_string(td.gs.order()));

    PermGroup norm = gs_normalizer(t, td);
    s.check("order36-normalizer-cyclic4", norm.order() == 4 && is_cyclic(norm),
            "normalizer is not cyclic of order 4");

    Perm marker = fixtures::z3z3_z4_marker();
    int marker_index = -1;
    for (std::size_t i = 0; i < spec.transversal.size(); ++i)
      if (spec.transversal[i] == marker) marker_index = static_cast<int>(i);
    StabilityRelation sigma = stability(t, td);
    std::vector<int> want = {0, marker_index};
    std::sort(want.begin(), want.end());
    s.check("order36-sigma1", marker_index > 0 && sigma.identity_class == want,
            "sigma1 = " + t.label_set(sigma.identity_class));

    SigmaCongruenceReport sc = sigma_is_congruence(t, td);
    s.check("order36-sigma-not-congruence", !sc.is_congruence && sc.violation.has_value(),
            "sigma unexpectedly a congruence");
  });
}

void census4_checks(Suite& s) {
  s.guarded("census4-", [&] {
    auto cases = classify_order4();
    std::set<std::pair<std::string, std::size_t>> keys;
    for (const auto& c : cases) keys.insert({c.gss_name, c.gs_order});
    std::set<std::pair<std::string, std::size_t>> expected = {
        {"Z4", 1}, {"Z2xZ2", 1}, {"Sym4", 6}, {"Alt4", 3}, {"D8", 2}};
    s.check("census4-buckets", keys == expected, "unexpected (G_SS, G_S) cases");

    bool centers_ok = true;
    std::string detail;
    std::size_t d8_center2_classes = 0;
    RightLoopTable bundled = fixtures::order4_center2();
    for (const auto& c : cases) {
      for (const auto& rec : c.records) {
        if (c.gss_name == "Z4" || c.gss_name == "Z2xZ2") {
          if (rec.center.size() != 4) centers_ok = false;
        } else if (c.gss_name == "Sym4" || c.gss_name == "Alt4") {
          if (rec.sigma1 != std::vector<int>{0} || rec.center != std::vector<int>{0})
            centers_ok = false;
        } else {  // D8: |sigma1| = 2; the center is sigma1 exactly when the
                  // sigma1 element commutes with the whole table
          if (rec.sigma1.size() != 2) centers_ok = false;
          int a = rec.sigma1.back();
          bool commutes = true;
          for (int u = 0; u < rec.table.size(); ++u)
            if (rec.table.mul(a, u) != rec.table.mul(u, a)) commutes = false;
          std::vector<int> want = commutes ? rec.sigma1 : std::vector<int>{0};
          if (rec.center != want) {
            centers_ok = false;
            detail = "D8 class with unexpected center";
          }
          if (rec.center.size() == 2) {
            ++d8_center2_classes;
            if (!isomorphism(rec.table, bundled).has_value()) {
              centers_ok = false;
              detail = "two-element-center class differs from the recorded table";
            }
          }
        }
      }
    }
    if (d8_center2_classes != 1) {
      centers_ok = false;
      detail = "expected exactly one D8 class with a two-element center";
    }
    s.check("census4-centers", centers_ok, detail);

    RightLoopTable t = fixtures::order4_center2();
    s.check("census4-casev-center", center(t) == std::vector<int>({0, 1}),
            "center of the explicit table is not {1,x}");

    Partition beta = Partition::from_blocks(4, {{0, 1}, {2, 3}});
    CenteringSearch found = centralizes(t, Partition::full(4), beta);
    bool relation_ok = false;
    if (found.outcome == CenteringOutcome::Found) {
      // pairs in scan order: (0,0),(0,1),(1,0),(1,1),(2,2),(2,3),(3,2),(3,3);
      // the diagonal pairs form one class, the off-diagonal pairs the other
      Partition expected_rel =
          Partition::from_blocks(8, {{0, 3, 4, 7}, {1, 2, 5, 6}});
      relation_ok = found.witness->relation == expected_rel;
    }
    s.check("census4-casev-relation", relation_ok,
            "centering congruence differs from the recorded one");

    RightLoopTable sibling = fixtures::order4_center2_sibling();
    std::vector<int> swap = {0, 1, 3, 2};
    s.check("census4-casev-isomorphic",
            is_isomorphism(t, sibling, swap) && isomorphism(t, sibling).has_value(),
            "the two completions are not isomorphic via the swap");
  });
}

void d18_checks(Suite& s) {
  s.guarded("d18-", [&] {
    TransversalSpec spec = fixtures::d18_nrt();
    RightLoopTable t = induced_table(spec);
    s.check("d18-table", t.rows() == fixtures::d18_expected_table().rows(),
            "induced table differs from the closed form");

    TorsionData td = torsion_data(t);
    s.check("d18-gss-order", td.gss.order() == 18,
            "|G_SS| = " + std::to_string(td.gss.order()));

    Perm theta = compose(t.right_translation(2), t.right_translation(1));
    s.check("d18-theta-order", theta.order() == 9,
            "theta has order " + std::to_string(theta.order()));

    Perm theta3 = compose(compose(theta, theta), theta);
    PermGroup n = PermGroup::closure({theta3});
    bool listed = false;
    for (const auto& sub : normal_subgroups(td.gss))
      if (sub.same_group(n)) listed = true;
    std::vector<std::vector<int>> want_orbits = {{0, 3, 6}, {1, 4, 7}, {2, 5, 8}};
    s.check("d18-normal-subgroup", n.order() == 3 && listed,
            "<theta^3> is not a normal subgroup of order 3");
    s.check("d18-orbits", orbits(n) == want_orbits, "orbit partition differs");
    s.check("d18-not-quasiprimitive", !is_quasiprimitive(td.gss),
            "G_SS reported quasiprimitive");

    s.check("d18-simple", all_congruences(t).size() == 2 && is_simple(t),
            "the right loop is not simple");

    Partition orbit_partition = Partition::from_blocks(9, want_orbits);
    s.check("d18-orbit-partition-not-congruence", !is_congruence(t, orbit_partition).ok,
            "orbit partition unexpectedly a congruence");
  });
}

void small_checks(Suite& s, std::uint64_t seed) {
  s.guarded("small-", [&] {
    auto order2 = enumerate_right_loops(2);
    s.check("small-order2-unique-group", order2.size() == 1 && order2[0].is_group(),
            "order-2 census is off");

    bool ok3 = true;
    bool has_group3 = false;
    for (const auto& t : enumerate_right_loops(3)) {
      if (t.is_group())
        has_group3 = true;
      else if (center(t) != std::vector<int>{0})
        ok3 = false;
    }
    s.check("small-order3-nongroup-trivial-center", ok3 && has_group3,
            "an order-3 non-group has nontrivial center");

    std::mt19937_64 rng(seed);
    bool malcev_ok = true;
    for (const RightLoopTable& t :
         {fixtures::alt4_expected_table(), fixtures::d18_expected_table(),
          fixtures::order4_center2()}) {
      std::uniform_int_distribution<int> pick(0, t.size() - 1);
      for (int trial = 0; trial < 200; ++trial) {
        int x = pick(rng), y = pick(rng);
        if (t.malcev(x, y, y) != x || t.malcev(x, x, y) != y) malcev_ok = false;
        if (t.rdiv(t.mul(x, y), y) != x || t.mul(t.rdiv(y, x), x) != y) malcev_ok = false;
      }
    }
    s.check("small-random-identities", malcev_ok, "a random spot check failed");
  });
}

}  // namespace

std::vector<GoldenCheck> run_golden_checks(const std::string& prefix, std::uint64_t seed) {
  Suite s{prefix, {}};
  alt4_checks(s);
  order36_checks(s);
  census4_checks(s);
  d18_checks(s);
  small_checks(s, seed);
  return s.out;
}

}  // namespace rloop
