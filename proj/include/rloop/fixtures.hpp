#ifndef RLOOP_FIXTURES_HPP
#define RLOOP_FIXTURES_HPP

#include "rloop/right_loop.hpp"
#include "rloop/transversal.hpp"

namespace rloop::fixtures {

/// H = {(), (1,2)(3,4)} in Alt(4) with a six-element ordered transversal.
/// The induced table is alt4_expected_table().
TransversalSpec alt4_nrt();
RightLoopTable alt4_expected_table();

/// An 18-element transversal in a group of order 36 isomorphic to
/// (Z3 x Z3) ⋊ Z4, acting on six points. Its stability relation is not a
/// congruence. The distinguished transversal element returned by
/// z3z3_z4_marker() spans σ(S)₁ together with the identity.
TransversalSpec z3z3_z4_nrt();
Perm z3z3_z4_marker();

/// H = {1, x} in the dihedral group of order 18 = <x, y>, with the
/// reflections x y^i as transversal: a simple nine-element right loop whose
/// translation group is not quasiprimitive. The table follows
/// x y^i ∘ x y^j = x y^(j-i mod 9) for i != j.
TransversalSpec d18_nrt();
RightLoopTable d18_expected_table();

/// The order-4 right loop {1, x, y, z} with y∘y = y∘z = 1 and two-element
/// center {1, x}, and its sibling completion (y∘y = y∘z = x); the two are
/// isomorphic by swapping y and z.
RightLoopTable order4_center2();
RightLoopTable order4_center2_sibling();

}  // namespace rloop::fixtures

#endif
