#include <doctest.h>

#include <map>
#include <random>
#include <set>

#include "rloop/centering.hpp"
#include "rloop/error.hpp"
#include "rloop/fixtures.hpp"
#include "support/catalog.hpp"

using namespace rloop;

namespace {

CenteringWitness diagonal_witness(const RightLoopTable& t, const Partition& gamma) {
  CenteringWitness w;
  w.beta = BetaAlgebra::build(t, Partition::discrete(t.size()));
  w.gamma = gamma;
  std::vector<int> ids(w.beta.pair_count());
  for (int p = 0; p < w.beta.pair_count(); ++p)
    ids[p] = gamma.block_of(w.beta.pairs()[p].first);
  w.relation = Partition::from_block_ids(ids);
  return w;
}

CenteringWitness casev_witness() {
  RightLoopTable t = fixtures::order4_center2();
  CenteringWitness w;
  w.beta = BetaAlgebra::build(t, Partition::from_blocks(4, {{0, 1}, {2, 3}}));
  w.gamma = Partition::full(4);
  // pairs in scan order: (1,1),(1,x),(x,1),(x,x),(y,y),(y,z),(z,y),(z,z);
  // the diagonal pairs form one class and the off-diagonal pairs the other
  w.relation = Partition::from_blocks(8, {{0, 3, 4, 7}, {1, 2, 5, 6}});
  return w;
}

std::vector<CenteringWitness> witness_corpus() {
  std::vector<CenteringWitness> out;
  RightLoopTable z4 = rloop::testing::detail::cyclic(4);
  out.push_back(diagonal_witness(fixtures::alt4_expected_table(), Partition::full(6)));
  out.push_back(diagonal_witness(z4, Partition::from_blocks(4, {{0, 2}, {1, 3}})));
  out.push_back(casev_witness());
  out.push_back(group_centering_witness(z4, {0, 1, 2, 3}, {0, 1, 2, 3}));
  out.push_back(group_centering_witness(z4, {0, 2}, {0, 1, 2, 3}));
  RightLoopTable z2z2 = rloop::testing::detail::direct_product(
      rloop::testing::detail::cyclic(2), rloop::testing::detail::cyclic(2));
  out.push_back(group_centering_witness(z2z2, {0, 2}, {0, 2}));
  RightLoopTable s3 = rloop::testing::detail::dihedral(6);
  out.push_back(group_centering_witness(s3, {0, 1, 2}, {0}));
  RightLoopTable d8 = rloop::testing::detail::dihedral(8);
  out.push_back(group_centering_witness(d8, {0, 2}, {0, 1, 2, 3}));  // <r^2> by <r>
  return out;
}

}  // namespace

TEST_CASE("five axioms hold on reference witnesses") {
  for (const auto& w : witness_corpus()) {
    AxiomCheck check = check_centering_axioms(w);
    std::string first_failure = check.failures.empty() ? "" : check.failures.front();
    CHECK_MESSAGE(check.ok, first_failure);
    CHECK(check_centering_equiv(w));
  }
}

TEST_CASE("deliberate corruptions fail") {
  CenteringWitness w = casev_witness();

  // merging a diagonal pair (x,x) with (x,y), x != y, breaks the bijection
  CenteringWitness merged = w;
  merged.relation = Partition::full(8);
  AxiomCheck check = check_centering_axioms(merged);
  CHECK(!check.ok);
  CHECK(!check_centering_equiv(merged));

  // the full relation beta x beta on a nontrivial beta with gamma = S x S
  // fails the class-size discipline of condition (ii)
  CHECK(std::find(check.failures.begin(), check.failures.end(), "class-bijection") !=
        check.failures.end());

  // the discrete relation misses the diagonal linking of condition (iii)
  CenteringWitness split = w;
  split.relation = Partition::discrete(8);
  AxiomCheck split_check = check_centering_axioms(split);
  CHECK(!split_check.ok);
  CHECK(std::find(split_check.failures.begin(), split_check.failures.end(),
                  "diagonal-linking") != split_check.failures.end());
  CHECK(!check_centering_equiv(split));
}

TEST_CASE("reduced criterion matches the five axioms on corrupted mutants") {
  std::mt19937 rng(2024);
  for (const auto& base : witness_corpus()) {
    for (int trial = 0; trial < 100; ++trial) {
      CenteringWitness mutant = base;
      int m = mutant.beta.pair_count();
      std::vector<int> ids = mutant.relation.block_ids();
      switch (rng() % 3) {
        case 0: {  // merge two blocks
          int a = ids[rng() % m], b = ids[rng() % m];
          for (int& v : ids)
            if (v == b) v = a;
          break;
        }
        case 1: {  // split one element off its block
          ids[rng() % m] = static_cast<int>(m - 1);
          break;
        }
        default: {  // move one element into another block
          ids[rng() % m] = ids[rng() % m];
          break;
        }
      }
      mutant.relation = Partition::from_block_ids(ids);
      CHECK(check_centering_axioms(mutant).ok == check_centering_equiv(mutant));
    }
  }
}

TEST_CASE("group centering witness") {
  RightLoopTable z4 = rloop::testing::detail::cyclic(4);
  // K = G abelian, H = G: the identity class is the diagonal of G
  CenteringWitness w = group_centering_witness(z4, {0, 1, 2, 3}, {0, 1, 2, 3});
  const auto& id_class = w.relation.block(w.relation.block_of(w.beta.index_of(0, 0)));
  CHECK(id_class.size() == 4);
  for (int p : id_class) CHECK(w.beta.pairs()[p].first == w.beta.pairs()[p].second);

  // H trivial: beta is the diagonal, witness passes trivially
  CenteringWitness trivial = group_centering_witness(z4, {0}, {0, 1, 2, 3});
  CHECK(check_centering_axioms(trivial).ok);

  // Z2 x Z2 with H = K = first factor: all five axioms, exhaustively
  RightLoopTable z2z2 = rloop::testing::detail::direct_product(
      rloop::testing::detail::cyclic(2), rloop::testing::detail::cyclic(2));
  CenteringWitness klein = group_centering_witness(z2z2, {0, 2}, {0, 2});
  CHECK(check_centering_axioms(klein).ok);

  // hypotheses enforced: S3 has no commuting pair (subgroup A3, full group)
  RightLoopTable s3 = rloop::testing::detail::dihedral(6);
  CHECK_THROWS_AS(group_centering_witness(s3, {0, 1, 2}, {0, 1, 2, 3, 4, 5}),
                  ValidationError);
}

TEST_CASE("centralizes finds the recorded centering congruence") {
  RightLoopTable t = fixtures::order4_center2();
  Partition beta = Partition::from_blocks(4, {{0, 1}, {2, 3}});
  CenteringSearch s = centralizes(t, Partition::full(4), beta);
  REQUIRE(s.outcome == CenteringOutcome::Found);
  CHECK(s.witness->relation == casev_witness().relation);
  CHECK(check_centering_axioms(*s.witness).ok);
}

TEST_CASE("diagonal beta is always centralized") {
  for (const RightLoopTable& t :
       {fixtures::alt4_expected_table(), fixtures::d18_expected_table(),
        fixtures::order4_center2()}) {
    for (const auto& gamma : all_congruences(t)) {
      CenteringSearch s = centralizes(t, gamma, Partition::discrete(t.size()));
      CHECK(s.outcome == CenteringOutcome::Found);
    }
  }
}

TEST_CASE("no centering congruence for the six-element table's subloop") {
  RightLoopTable t = fixtures::alt4_expected_table();
  Partition beta = congruence_of_subloop(t, {0, 5});
  CenteringSearch s = centralizes(t, Partition::full(6), beta);
  CHECK(s.outcome == CenteringOutcome::None);
  // same verdict when the candidate shortcut is skipped
  CenteringSearch slow = centralizes(t, Partition::full(6), beta, kDefaultSubloopCap, false);
  CHECK(slow.outcome == CenteringOutcome::None);
  CHECK(all_centering_relations(t, Partition::full(6), beta).empty());
}

TEST_CASE("centers") {
  CHECK(center(fixtures::alt4_expected_table()) == std::vector<int>{0});
  CHECK(center(fixtures::order4_center2()) == std::vector<int>{0, 1});
  CHECK(center(fixtures::order4_center2_sibling()) == std::vector<int>{0, 1});
  CHECK(center(fixtures::d18_expected_table()) == std::vector<int>{0});

  RightLoopTable z6 = rloop::testing::detail::cyclic(6);
  CenterResult c = center_congruence(z6);
  CHECK(c.exact);
  CHECK(c.zeta.is_full());
  CHECK(c.center.size() == 6);
}

TEST_CASE("candidate path and pure search agree whenever both succeed") {
  std::vector<RightLoopTable> tables = {fixtures::order4_center2(),
                                        rloop::testing::detail::cyclic(4),
                                        rloop::testing::detail::dihedral(6),
                                        rloop::testing::detail::dicyclic(2)};
  for (const auto& t : tables) {
    auto congs = all_congruences(t);
    for (const auto& gamma : congs)
      for (const auto& beta : congs) {
        CenteringSearch fast = centralizes(t, gamma, beta);
        CenteringSearch slow = centralizes(t, gamma, beta, kDefaultSubloopCap, false);
        if (slow.outcome == CenteringOutcome::Undecided) continue;
        CHECK(fast.outcome == slow.outcome);
        if (fast.outcome == CenteringOutcome::Found)
          CHECK(fast.witness->relation == slow.witness->relation);
      }
  }
}

TEST_CASE("centering is unique") {
  // enumerate every admissible relation layout and count the ones that
  // certify centering: never more than one
  std::vector<RightLoopTable> tables = {fixtures::order4_center2(),
                                        rloop::testing::detail::cyclic(4),
                                        rloop::testing::detail::dihedral(6)};
  for (const auto& t : tables) {
    auto congs = all_congruences(t);
    for (const auto& gamma : congs)
      for (const auto& beta : congs) {
        std::vector<Partition> hits;
        try {
          hits = all_centering_relations(t, gamma, beta);
        } catch (const CapError&) {
          continue;
        }
        CHECK(hits.size() <= 1);
        CenteringSearch s = centralizes(t, gamma, beta);
        CHECK((s.outcome == CenteringOutcome::Found) == (hits.size() == 1));
        if (!hits.empty()) CHECK(s.witness->relation == hits.front());
      }
  }
}

TEST_CASE("centralized congruences are closed under joins") {
  for (const RightLoopTable& t :
       {rloop::testing::detail::direct_product(rloop::testing::detail::cyclic(2),
                                               rloop::testing::detail::cyclic(4)),
        rloop::testing::detail::dihedral(8), fixtures::order4_center2()}) {
    Partition full = Partition::full(t.size());
    auto congs = all_congruences(t);
    for (const auto& b1 : congs)
      for (const auto& b2 : congs) {
        bool c1 = centralizes(t, full, b1).outcome == CenteringOutcome::Found;
        bool c2 = centralizes(t, full, b2).outcome == CenteringOutcome::Found;
        if (c1 && c2)
          CHECK(centralizes(t, full, join(b1, b2)).outcome == CenteringOutcome::Found);
      }
  }
}

TEST_CASE("statement verifier on the six-element table") {
  auto reports = verify_statements(fixtures::alt4_expected_table());
  std::map<std::string, StatementReport> by_id;
  for (const auto& r : reports) by_id[r.id] = r;

  CHECK(by_id.at("sigma1-left-nonsingular").status == ConclusionStatus::Pass);
  CHECK(by_id.at("center-within-sigma1").status == ConclusionStatus::Pass);
  CHECK(by_id.at("center-abelian-group").status == ConclusionStatus::Pass);
  // Z(G_SS) is trivial while sigma1 has two elements: the central-twist
  // hypothesis fails
  CHECK(by_id.at("sigma1-central-twist").status == ConclusionStatus::Vacuous);
  CHECK(by_id.at("sigma1-is-center-when-central").status == ConclusionStatus::Vacuous);
  // sigma1 != center, so the necessity direction is vacuous too
  CHECK(by_id.at("sigma1-center-forces-central-translations").status ==
        ConclusionStatus::Vacuous);
  CHECK(by_id.at("sigma1-mul-div-assoc").status == ConclusionStatus::Pass);
  CHECK(by_id.at("sigma1-div-by-left-inverse").status == ConclusionStatus::Pass);
}

TEST_CASE("statement verifier on an abelian group") {
  auto reports = verify_statements(rloop::testing::detail::cyclic(4));
  for (const auto& r : reports) {
    CHECK(r.hypothesis_holds);
    CHECK(r.status == ConclusionStatus::Pass);
  }
}

TEST_CASE("statement verifier on the order-4 table with two-element center") {
  auto reports = verify_statements(fixtures::order4_center2());
  std::map<std::string, StatementReport> by_id;
  for (const auto& r : reports) by_id[r.id] = r;

  // sigma1 = center = {1, x}: the necessity statement has content here
  const auto& necessity = by_id.at("sigma1-center-forces-central-translations");
  CHECK(necessity.hypothesis_holds);
  CHECK(necessity.status == ConclusionStatus::Pass);
  // the middle-associativity hypothesis fails on this table
  CHECK(by_id.at("sigma1-is-center-when-central").status == ConclusionStatus::Vacuous);
  CHECK(by_id.at("sigma1-central-twist").status == ConclusionStatus::Pass);
  CHECK(by_id.at("center-within-sigma1").status == ConclusionStatus::Pass);
}

TEST_CASE("group oracle: centers and centralizing match group theory") {
  for (const auto& [name, table] : rloop::testing::small_group_catalog()) {
    INFO(name);
    // the loop-theoretic center equals the group-theoretic center of the
    // regular representation
    PermGroup regular = PermGroup::closure([&] {
      std::vector<Perm> gens;
      for (int x = 0; x < table.size(); ++x) gens.push_back(table.right_translation(x));
      return gens;
    }());
    PermGroup z = center_of_group(regular);
    std::vector<int> want;
    for (int x = 0; x < table.size(); ++x)
      if (z.contains(table.right_translation(x))) want.push_back(x);
    CHECK(center(table) == want);
  }
}

TEST_CASE("group oracle: centralizes is elementwise commuting") {
  for (const auto& [name, table] : rloop::testing::small_group_catalog()) {
    if (table.size() > 16) continue;
    INFO(name);
    auto congs = all_congruences(table);
    for (const auto& beta : congs) {
      std::vector<int> h = beta.block(beta.block_of(0));
      for (const auto& gamma : congs) {
        std::vector<int> k = gamma.block(gamma.block_of(0));
        bool commute = true;
        for (int a : h)
          for (int b : k)
            if (table.mul(a, b) != table.mul(b, a)) commute = false;
        CenteringSearch s = centralizes(table, gamma, beta);
        CHECK((s.outcome == CenteringOutcome::Found) == commute);
        if (commute) {
          CenteringWitness reference = group_centering_witness(table, h, k);
          CHECK(s.witness->relation == reference.relation);
        }
      }
    }
  }
}
