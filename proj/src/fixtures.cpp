#include "rloop/fixtures.hpp"

#include <algorithm>

#include "rloop/error.hpp"

namespace rloop::fixtures {

TransversalSpec alt4_nrt() {
  const int deg = 4;
  std::vector<Perm> s = {
      Perm(deg),
      Perm::parse(deg, "(1,3,2)"),
      Perm::parse(deg, "(2,4,3)"),
      Perm::parse(deg, "(1,2,3)"),
      Perm::parse(deg, "(1,4,3)"),
      Perm::parse(deg, "(1,3)(2,4)"),
  };
  PermGroup g = PermGroup::alternating(4);
  PermGroup h = PermGroup::closure({Perm::parse(deg, "(1,2)(3,4)")});
  return {std::move(g), std::move(h), std::move(s)};
}

RightLoopTable alt4_expected_table() {
  // 1-based entries transcribed to 0-based
  std::vector<std::vector<int>> rows = {
      {0, 1, 2, 3, 4, 5}, {1, 3, 0, 0, 2, 1}, {2, 5, 1, 4, 5, 3},
      {3, 0, 4, 1, 0, 2}, {4, 2, 5, 5, 3, 4}, {5, 4, 3, 2, 1, 0},
  };
  return RightLoopTable::validate(rows);
}

namespace {

// generators of the order-36 group on six points
Perm gen_u() { return Perm::parse(6, "(4,6,5)"); }
Perm gen_v() { return Perm::parse(6, "(1,3,2)"); }
Perm gen_w() { return Perm::parse(6, "(1,4)(2,6,3,5)"); }

}  // namespace

Perm z3z3_z4_marker() { return gen_w(); }

TransversalSpec z3z3_z4_nrt() {
  Perm u = gen_u(), v = gen_v(), w = gen_w();
  PermGroup g = PermGroup::closure({u, v, w});
  Perm w2 = compose(w, w);
  PermGroup h = PermGroup::closure({w2});
  PermGroup l = PermGroup::closure({u, v});

  // transversal: products t*l for t in {1, w}, l over L in sorted order,
  // with the slot holding u replaced by w^2 u
  std::vector<Perm> s;
  Perm w2u = compose(w2, u);
  for (const Perm& t : {Perm(6), w})
    for (const Perm& le : l.elements()) {
      Perm p = compose(t, le);
      s.push_back(p == u ? w2u : p);
    }
  return {std::move(g), std::move(h), std::move(s)};
}

namespace {

Perm d18_y() {
  std::vector<int> img(9);
  for (int i = 0; i < 9; ++i) img[i] = (i + 1) % 9;
  return Perm(std::move(img));
}

Perm d18_x() {
  std::vector<int> img(9);
  for (int i = 0; i < 9; ++i) img[i] = (9 - i) % 9;
  return Perm(std::move(img));
}

}  // namespace

TransversalSpec d18_nrt() {
  Perm x = d18_x(), y = d18_y();
  PermGroup g = PermGroup::closure({x, y});
  PermGroup h = PermGroup::closure({x});
  std::vector<Perm> s = {Perm(9)};
  Perm cur = x;
  for (int i = 1; i <= 8; ++i) {
    cur = compose(cur, y);  // x y^i
    s.push_back(cur);
  }
  return {std::move(g), std::move(h), std::move(s)};
}

RightLoopTable d18_expected_table() {
  // index 0 is the identity, index i >= 1 is x y^i
  std::vector<std::vector<int>> rows(9, std::vector<int>(9));
  for (int j = 0; j < 9; ++j) rows[0][j] = j;
  for (int i = 1; i <= 8; ++i) {
    rows[i][0] = i;
    for (int j = 1; j <= 8; ++j) rows[i][j] = i == j ? 0 : ((j - i) % 9 + 9) % 9;
  }
  std::vector<std::string> labels = {"1"};
  for (int i = 1; i <= 8; ++i) labels.push_back("xy" + std::to_string(i));
  return RightLoopTable::validate(rows, std::move(labels));
}

RightLoopTable order4_center2() {
  std::vector<std::vector<int>> rows = {
      {0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 0}, {3, 2, 1, 1}};
  return RightLoopTable::validate(rows, {"1", "x", "y", "z"});
}

RightLoopTable order4_center2_sibling() {
  std::vector<std::vector<int>> rows = {
      {0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 1, 1}, {3, 2, 0, 0}};
  return RightLoopTable::validate(rows, {"1", "x", "y", "z"});
}

}  // namespace rloop::fixtures
