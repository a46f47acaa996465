#ifndef RLOOP_PERM_GROUP_HPP
#define RLOOP_PERM_GROUP_HPP

#include <cstddef>
#include <vector>

#include "rloop/perm.hpp"

namespace rloop {

inline constexpr std::size_t kDefaultOrderCap = 1'000'000;

/// A finite permutation group with its element set fully enumerated.
///
/// Everything here is brute force over the element list. The groups this
/// library meets have order at most a few hundred, so auditability wins
/// over asymptotics.
class PermGroup {
 public:
  static PermGroup trivial(int degree);
  static PermGroup closure(std::vector<Perm> generators,
                           std::size_t order_cap = kDefaultOrderCap);
  /// Wrap an already-closed element set (verified).
  static PermGroup from_elements(std::vector<Perm> elements);

  static PermGroup cyclic(int n);            // Z_n on n points (n >= 1)
  static PermGroup symmetric(int n);         // Sym(n)
  static PermGroup alternating(int n);       // Alt(n)
  static PermGroup dihedral_of_order(int m); // order m = 2k, k >= 3

  int degree() const { return degree_; }
  std::size_t order() const { return elements_.size(); }
  const std::vector<Perm>& elements() const { return elements_; }  // sorted
  const std::vector<Perm>& generators() const { return generators_; }
  const Perm& identity() const;

  bool contains(const Perm& p) const;
  bool contains_group(const PermGroup& h) const;
  bool same_group(const PermGroup& other) const;
  bool is_abelian() const;

 private:
  PermGroup(int degree, std::vector<Perm> generators, std::vector<Perm> elements);

  int degree_ = 0;
  std::vector<Perm> generators_;
  std::vector<Perm> elements_;  // sorted, closed, contains identity
};

PermGroup stabilizer(const PermGroup& g, int x);

/// N_G(H) = {g in G : g H g^-1 = H}; requires H <= G.
PermGroup normalizer(const PermGroup& g, const PermGroup& h);

PermGroup center_of_group(const PermGroup& g);

bool is_normal_in(const PermGroup& h, const PermGroup& g);

std::vector<std::vector<Perm>> conjugacy_classes(const PermGroup& g);

/// All normal subgroups, found as subgroup-closed unions of conjugacy
/// classes containing the identity. Throws CapError past class_cap classes.
std::vector<PermGroup> normal_subgroups(const PermGroup& g, int class_cap = 20);

std::vector<std::vector<int>> orbits(const PermGroup& g);
bool is_transitive(const PermGroup& g);

/// True iff every normal subgroup of order > 1 is transitive.
bool is_quasiprimitive(const PermGroup& g, int class_cap = 20);

/// Coarse isomorphism invariant: order, abelian flag, element-order multiset.
struct GroupFingerprint {
  std::size_t order = 0;
  bool abelian = false;
  std::vector<int> element_orders;  // sorted
  auto operator<=>(const GroupFingerprint&) const = default;
};

GroupFingerprint fingerprint(const PermGroup& g);
bool same_fingerprint(const PermGroup& a, const PermGroup& b);
bool is_cyclic(const PermGroup& g);

}  // namespace rloop

#endif
