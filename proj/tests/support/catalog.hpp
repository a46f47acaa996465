#ifndef RLOOP_TESTS_CATALOG_HPP
#define RLOOP_TESTS_CATALOG_HPP

#include <string>
#include <vector>

#include "rloop/error.hpp"
#include "rloop/right_loop.hpp"

namespace rloop::testing {

struct NamedGroup {
  std::string name;
  RightLoopTable table;
};

namespace detail {

inline RightLoopTable table_from_mul(int n, auto&& mul) {
  std::vector<std::vector<int>> rows(n, std::vector<int>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) rows[i][j] = mul(i, j);
  RightLoopTable t = RightLoopTable::validate(rows);
  if (!t.is_group()) throw Error("catalog table is not associative");
  return t;
}

inline RightLoopTable cyclic(int n) {
  return table_from_mul(n, [n](int i, int j) { return (i + j) % n; });
}

inline RightLoopTable direct_product(const RightLoopTable& a, const RightLoopTable& b) {
  int na = a.size(), nb = b.size();
  return table_from_mul(na * nb, [&, nb](int i, int j) {
    int ia = i / nb, ib = i % nb, ja = j / nb, jb = j % nb;
    return a.mul(ia, ja) * nb + b.mul(ib, jb);
  });
}

// Z_m ⋊ Z_k with the generator of Z_k acting as r -> r^a; needs a^k = 1 mod m.
// Element (i, j) is r^i s^j; (i,j)(p,q) = (i + a^j p, j + q).
inline RightLoopTable semidirect_cyclic(int m, int k, int a) {
  std::vector<long> apow(k);
  apow[0] = 1;
  for (int j = 1; j < k; ++j) apow[j] = (apow[j - 1] * a) % m;
  if ((apow[k - 1] * a) % m != 1) throw Error("semidirect action has wrong order");
  return table_from_mul(m * k, [=](int x, int y) {
    int i = x % m, j = x / m, p = y % m, q = y / m;
    int ii = static_cast<int>((i + apow[j] * p) % m);
    return ((j + q) % k) * m + ii;
  });
}

inline RightLoopTable dihedral(int order) {  // order = 2m, m >= 1
  int m = order / 2;
  if (m == 1) return direct_product(cyclic(2), cyclic(1));
  return semidirect_cyclic(m, 2, m - 1);
}

// Dic_n of order 4n: <a, b | a^(2n) = 1, b^2 = a^n, b a b^-1 = a^-1>.
// Element (i, j) is a^i b^j with i in Z_2n, j in {0, 1}.
inline RightLoopTable dicyclic(int n) {
  int two_n = 2 * n;
  return table_from_mul(4 * n, [=](int x, int y) {
    int i = x % two_n, j = x / two_n, p = y % two_n, q = y / two_n;
    int exp = j == 0 ? (i + p) % two_n : ((i - p) % two_n + two_n) % two_n;
    if (j == 1 && q == 1) exp = (exp + n) % two_n;
    return ((j + q) % 2) * two_n + exp;
  });
}

// <a, b, c | a^4, b^2, c^2, ab = ba, cac = ab, cbc = b>; element (i, j, k)
// is a^i b^j c^k.
inline RightLoopTable z4z2_twist() {
  auto enc = [](int i, int j, int k) { return k * 8 + j * 4 + i; };
  return table_from_mul(16, [=](int x, int y) {
    int i1 = x % 4, j1 = (x / 4) % 2, k1 = x / 8;
    int i2 = y % 4, j2 = (y / 4) % 2, k2 = y / 8;
    // c^k1 a^i2 b^j2 = a^i2 b^(j2 + k1*i2) c^k1
    return enc((i1 + i2) % 4, (j1 + j2 + k1 * i2) % 2, (k1 + k2) % 2);
  });
}

// central product D8 ∘ Z4 (the order-16 Pauli-type group): D8 x <c> with
// c^2 identified with r^2. Element (d, e) with d in D8, e in {0, 1}.
inline RightLoopTable d8_circ_z4() {
  RightLoopTable d8 = dihedral(8);
  // in semidirect_cyclic(4,2,3) coordinates, r = element 1, r^2 = element 2
  int r2 = d8.mul(1, 1);
  return table_from_mul(16, [=](int x, int y) {
    int d1 = x % 8, e1 = x / 8, d2 = y % 8, e2 = y / 8;
    int d = d8.mul(d1, d2);
    int e = e1 + e2;
    if (e == 2) return d8.mul(d, r2);
    return e * 8 + d;
  });
}

inline RightLoopTable alt4_table() {
  return cayley_table(PermGroup::alternating(4));
}

}  // namespace detail

/// Every group of order at most 16, one table per isomorphism type.
inline std::vector<NamedGroup> small_group_catalog() {
  using namespace detail;
  std::vector<NamedGroup> out;
  auto add = [&](std::string name, RightLoopTable t) {
    out.push_back({std::move(name), std::move(t)});
  };

  for (int n = 1; n <= 16; ++n) add("Z" + std::to_string(n), cyclic(n));

  add("Z2xZ2", direct_product(cyclic(2), cyclic(2)));
  add("S3", dihedral(6));
  add("Z2xZ4", direct_product(cyclic(2), cyclic(4)));
  add("Z2xZ2xZ2", direct_product(cyclic(2), direct_product(cyclic(2), cyclic(2))));
  add("D8", dihedral(8));
  add("Q8", dicyclic(2));
  add("Z3xZ3", direct_product(cyclic(3), cyclic(3)));
  add("D10", dihedral(10));
  add("Z2xZ6", direct_product(cyclic(2), cyclic(6)));
  add("D12", dihedral(12));
  add("A4", alt4_table());
  add("Dic3", dicyclic(3));
  add("D14", dihedral(14));

  // order 16: five abelian types
  add("Z2xZ8", direct_product(cyclic(2), cyclic(8)));
  add("Z4xZ4", direct_product(cyclic(4), cyclic(4)));
  add("Z2xZ2xZ4", direct_product(cyclic(2), direct_product(cyclic(2), cyclic(4))));
  add("Z2^4", direct_product(direct_product(cyclic(2), cyclic(2)),
                             direct_product(cyclic(2), cyclic(2))));
  // and nine nonabelian types
  add("D16", dihedral(16));
  add("SD16", semidirect_cyclic(8, 2, 3));
  add("M4(2)", semidirect_cyclic(8, 2, 5));
  add("Q16", dicyclic(4));
  add("Z2xD8", direct_product(cyclic(2), dihedral(8)));
  add("Z2xQ8", direct_product(cyclic(2), dicyclic(2)));
  add("Z4sZ4", semidirect_cyclic(4, 4, 3));
  add("(Z4xZ2)sZ2", z4z2_twist());
  add("D8oZ4", d8_circ_z4());
  return out;
}

}  // namespace rloop::testing

#endif
