#ifndef RLOOP_CONGRUENCE_HPP
#define RLOOP_CONGRUENCE_HPP

#include <cstddef>
#include <optional>
#include <vector>

#include "rloop/partition.hpp"
#include "rloop/right_loop.hpp"

namespace rloop {

inline constexpr std::size_t kDefaultSubloopCap = 200'000;

/// Two related pairs whose componentwise image under op ('*' or '/')
/// lands in different blocks.
struct CongruenceViolation {
  int x = 0, y = 0, u = 0, v = 0;
  char op = '*';
};

struct CongruenceCheck {
  bool ok = false;
  std::optional<CongruenceViolation> violation;
  explicit operator bool() const { return ok; }
};

/// A partition is a congruence iff its pair set is closed under
/// componentwise ∘ and /. The first violation in scan order is reported.
CongruenceCheck is_congruence(const RightLoopTable& loop, const Partition& p);

/// All right subloops (subsets containing the identity, closed under ∘ and /),
/// as sorted element lists, found by closure breadth-first search.
std::vector<std::vector<int>> subloops(const RightLoopTable& loop,
                                       std::size_t seed_cap = kDefaultSubloopCap);

/// T is invariant iff the pairs {(t∘y, y)} generate a congruence whose
/// identity block is exactly T.
bool is_invariant_subloop(const RightLoopTable& loop, const std::vector<int>& t);

std::vector<std::vector<int>> invariant_subloops(const RightLoopTable& loop,
                                                 std::size_t seed_cap = kDefaultSubloopCap);

/// The congruence determined by an invariant right subloop, with blocks T∘y.
/// Throws ValidationError if T is not invariant.
Partition congruence_of_subloop(const RightLoopTable& loop, const std::vector<int>& t);

/// Every congruence, one per invariant right subloop (a congruence is
/// determined by its identity class). Sorted, deterministic.
std::vector<Partition> all_congruences(const RightLoopTable& loop,
                                       std::size_t seed_cap = kDefaultSubloopCap);

bool is_simple(const RightLoopTable& loop, std::size_t seed_cap = kDefaultSubloopCap);

struct Quotient {
  RightLoopTable table;
  std::vector<int> block_of;  // the homomorphism x -> block index
};

/// Quotient right loop on the blocks of a certified congruence. Verifies the
/// block operation is well defined, the projection is a homomorphism, and
/// blocks share one size.
Quotient quotient(const RightLoopTable& loop, const Partition& congruence);

}  // namespace rloop

#endif
