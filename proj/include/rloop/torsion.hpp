#ifndef RLOOP_TORSION_HPP
#define RLOOP_TORSION_HPP

#include <optional>

#include "rloop/congruence.hpp"
#include "rloop/partition.hpp"
#include "rloop/perm_group.hpp"
#include "rloop/right_loop.hpp"

namespace rloop {

/// The intrinsic permutation groups of a right loop: G_SS = <R_u : u in S>
/// acting on the table's points, and the group torsion G_S, the stabilizer
/// of the identity in it. G_S is trivial exactly when the table is a group.
struct TorsionData {
  PermGroup gss;
  PermGroup gs;
};

/// Computes G_SS and G_S, and checks that G_S coincides with the closure of
/// all cocycles f(y,z) (the generating-set description of the torsion).
TorsionData torsion_data(const RightLoopTable& loop,
                         std::size_t order_cap = kDefaultOrderCap);

/// f(y,z) = R_y R_z R_{y∘z}^-1, the deviation of (·∘y)∘z from ·∘(y∘z).
/// Always fixes the identity.
Perm cocycle(const RightLoopTable& loop, int y, int z);

/// Embeds x as its right translation R_x (the identification of S with the
/// transversal {R_u} of G_S in G_SS).
Perm as_translation(const RightLoopTable& loop, int x);

/// N_{G_SS}(G_S).
PermGroup gs_normalizer(const RightLoopTable& loop, const TorsionData& td);

/// The stability relation: x ~ y iff stab(G_SS, x) = stab(G_SS, y).
/// identity_class is σ(S)₁, checked against its two other characterizations
/// (the fully associating elements, and N_{G_SS}(G_S) ∩ S).
struct StabilityRelation {
  Partition classes;
  std::vector<int> identity_class;
};

StabilityRelation stability(const RightLoopTable& loop, const TorsionData& td);
StabilityRelation stability(const RightLoopTable& loop);

/// Tests σ(S) against the congruence predicate; on failure carries the first
/// violating tuple. Also reports whether N_{G_SS}(G_S) is normal in G_SS
/// (a sufficient condition for σ(S) to be a congruence).
struct SigmaCongruenceReport {
  bool is_congruence = false;
  std::optional<CongruenceViolation> violation;
  bool normalizer_is_normal = false;
};

SigmaCongruenceReport sigma_is_congruence(const RightLoopTable& loop, const TorsionData& td);
SigmaCongruenceReport sigma_is_congruence(const RightLoopTable& loop);

}  // namespace rloop

#endif
