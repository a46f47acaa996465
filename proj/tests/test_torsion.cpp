#include <doctest.h>

#include <set>

#include "rloop/fixtures.hpp"
#include "rloop/torsion.hpp"

using namespace rloop;

namespace {

std::vector<RightLoopTable> corpus() {
  return {
      fixtures::alt4_expected_table(),
      fixtures::d18_expected_table(),
      fixtures::order4_center2(),
      fixtures::order4_center2_sibling(),
      cayley_table(PermGroup::cyclic(4)),
      cayley_table(PermGroup::symmetric(3)),
      cayley_table(PermGroup::closure(
          {Perm::from_cycles(4, {{0, 1}}), Perm::from_cycles(4, {{2, 3}})})),
  };
}

}  // namespace

TEST_CASE("torsion orders") {
  for (const RightLoopTable& g :
       {cayley_table(PermGroup::cyclic(5)), cayley_table(PermGroup::symmetric(3))}) {
    TorsionData td = torsion_data(g);
    CHECK(td.gs.order() == 1);  // groups have trivial torsion
    CHECK(td.gss.order() == static_cast<std::size_t>(g.size()));
  }

  TorsionData alt4 = torsion_data(fixtures::alt4_expected_table());
  CHECK(alt4.gss.order() == 12);
  CHECK(alt4.gs.order() == 2);
  CHECK(same_fingerprint(alt4.gss, PermGroup::alternating(4)));

  TorsionData d18 = torsion_data(fixtures::d18_expected_table());
  CHECK(d18.gss.order() == 18);
  CHECK(same_fingerprint(d18.gss, PermGroup::dihedral_of_order(18)));
}

TEST_CASE("torsion group is transitive and stabilizes per the table") {
  for (const RightLoopTable& t : corpus()) {
    TorsionData td = torsion_data(t);
    CHECK(is_transitive(td.gss));
    CHECK(td.gs.same_group(stabilizer(td.gss, 0)));
    CHECK((td.gs.order() == 1) == t.is_group());
  }
}

TEST_CASE("cocycles") {
  RightLoopTable t = fixtures::alt4_expected_table();
  for (int z = 0; z < t.size(); ++z) CHECK(cocycle(t, 0, z).is_identity());

  RightLoopTable g = cayley_table(PermGroup::symmetric(3));
  for (int y = 0; y < g.size(); ++y)
    for (int z = 0; z < g.size(); ++z) CHECK(cocycle(g, y, z).is_identity());

  Perm f = cocycle(t, 1, 2);
  CHECK(f(0) == 0);
  CHECK(!f.is_identity());
  TorsionData td = torsion_data(t);
  CHECK(td.gs.contains(f));

  // every cocycle fixes the identity
  for (const RightLoopTable& table : corpus())
    for (int y = 0; y < table.size(); ++y)
      for (int z = 0; z < table.size(); ++z) CHECK(cocycle(table, y, z)(0) == 0);
}

TEST_CASE("stability relation") {
  RightLoopTable alt4 = fixtures::alt4_expected_table();
  StabilityRelation s = stability(alt4);
  CHECK(s.identity_class == std::vector<int>{0, 5});

  // group tables: regular action, one block
  for (const RightLoopTable& g :
       {cayley_table(PermGroup::cyclic(4)), cayley_table(PermGroup::symmetric(3))}) {
    StabilityRelation sg = stability(g);
    CHECK(sg.classes.is_full());
    CHECK(static_cast<int>(sg.identity_class.size()) == g.size());
  }
}

TEST_CASE("sigma1 is a group of left non-singular elements") {
  for (const RightLoopTable& t : corpus()) {
    StabilityRelation s = stability(t);
    const auto& sigma1 = s.identity_class;
    auto inside = [&](int x) {
      return std::binary_search(sigma1.begin(), sigma1.end(), x);
    };
    for (int a : sigma1) {
      CHECK(t.is_left_nonsingular(a));
      for (int b : sigma1) {
        CHECK(inside(t.mul(a, b)));
        CHECK(inside(t.rdiv(a, b)));
        for (int c : sigma1) CHECK(t.mul(t.mul(a, b), c) == t.mul(a, t.mul(b, c)));
      }
      int ap = t.left_inverse(a);
      CHECK(inside(ap));
      CHECK(t.mul(a, ap) == 0);
    }
  }
}

TEST_CASE("stabilizers are conjugation covariant along sigma") {
  for (const RightLoopTable& t : {fixtures::alt4_expected_table(), fixtures::order4_center2()}) {
    TorsionData td = torsion_data(t);
    StabilityRelation s = stability(t, td);
    auto stab_set = [&](int x) {
      std::set<Perm> out;
      for (const auto& e : td.gss.elements())
        if (e(x) == x) out.insert(e);
      return out;
    };
    for (int x = 0; x < t.size(); ++x)
      for (int y = 0; y < t.size(); ++y) {
        if (!s.classes.same_block(x, y)) continue;
        for (const auto& p : td.gss.elements()) {
          std::set<Perm> conj;
          for (const auto& q : stab_set(x)) conj.insert(conjugate(q, p));
          CHECK(conj == stab_set(p(x)));
          CHECK(stab_set(p(x)) == stab_set(p(y)));
        }
      }
  }
}

TEST_CASE("division agrees with the cocycle formula") {
  // x/y = f(y', y)^-1 (x) ∘ y'
  for (const RightLoopTable& t : corpus()) {
    for (int x = 0; x < t.size(); ++x)
      for (int y = 0; y < t.size(); ++y) {
        int yp = t.left_inverse(y);
        Perm f = cocycle(t, yp, y);
        CHECK(t.rdiv(x, y) == t.mul(f.inverse()(x), yp));
      }
  }
}

TEST_CASE("sigma congruence reports") {
  SigmaCongruenceReport alt4 = sigma_is_congruence(fixtures::alt4_expected_table());
  CHECK(alt4.is_congruence);
  CHECK(alt4.normalizer_is_normal);

  SigmaCongruenceReport group = sigma_is_congruence(cayley_table(PermGroup::symmetric(3)));
  CHECK(group.is_congruence);  // one block, always a congruence

  SigmaCongruenceReport casev = sigma_is_congruence(fixtures::order4_center2());
  CHECK(casev.is_congruence);
  CHECK(casev.normalizer_is_normal);
}
