#ifndef RLOOP_TRANSVERSAL_HPP
#define RLOOP_TRANSVERSAL_HPP

#include <string>
#include <vector>

#include "rloop/perm.hpp"
#include "rloop/perm_group.hpp"
#include "rloop/right_loop.hpp"

namespace rloop {

/// A normalized right transversal: one representative per right coset Hx,
/// the identity among them, in a fixed display order.
struct TransversalSpec {
  PermGroup ambient;           // G
  PermGroup subgroup;          // H <= G
  std::vector<Perm> transversal;  // S, ordered
};

/// The right cosets Hx as element lists, each sorted, ordered by least element.
std::vector<std::vector<Perm>> right_cosets(const PermGroup& g, const PermGroup& h);

struct NrtCheck {
  bool ok = false;
  std::string diagnostic;
  explicit operator bool() const { return ok; }
};

NrtCheck is_nrt(const TransversalSpec& spec);

/// The least element of each coset, identity first: the canonical transversal.
std::vector<Perm> min_transversal(const PermGroup& g, const PermGroup& h);

/// The induced right loop: x∘y is the unique element of S in the coset Hxy.
/// Labels are the transversal elements' cycle strings.
RightLoopTable induced_table(const TransversalSpec& spec);

/// The coset action of g on transversal indices: x -> the S-representative
/// of Hxg.
Perm chi(const TransversalSpec& spec, const Perm& g);

/// chi applied to the whole of G (equals the closure of chi over generators).
PermGroup chi_image(const TransversalSpec& spec);

/// Core_G(H): the largest normal subgroup of G inside H, computed by
/// intersecting conjugates. Equals the kernel of chi.
PermGroup core(const PermGroup& g, const PermGroup& h);
PermGroup chi_kernel(const TransversalSpec& spec);

/// H_S = <{ xy(x∘y)^-1 : x, y in S }>. Also checks H_S · S = <S> elementwise.
PermGroup h_subgroup(const TransversalSpec& spec);

}  // namespace rloop

#endif
