#ifndef RLOOP_CENTERING_HPP
#define RLOOP_CENTERING_HPP

#include <optional>
#include <string>
#include <vector>

#include "rloop/congruence.hpp"
#include "rloop/partition.hpp"
#include "rloop/right_loop.hpp"

namespace rloop {

/// A congruence β viewed as an algebra in its own right: the right loop on
/// the related pairs under componentwise ∘ and /. The pair (1,1) is its
/// identity and lands at index 0.
class BetaAlgebra {
 public:
  BetaAlgebra() = default;  // empty placeholder; build through build()

  static BetaAlgebra build(const RightLoopTable& base, const Partition& beta);

  const RightLoopTable& base() const { return base_; }
  const Partition& beta() const { return beta_; }
  const RightLoopTable& pair_table() const { return pair_table_; }
  const std::vector<std::pair<int, int>>& pairs() const { return pairs_; }
  int pair_count() const { return static_cast<int>(pairs_.size()); }
  /// Index of (x, y) among the pairs, or -1 when x, y are unrelated.
  int index_of(int x, int y) const { return index_[x * base_.size() + y]; }

 private:
  RightLoopTable base_;
  Partition beta_;
  std::vector<std::pair<int, int>> pairs_;
  std::vector<int> index_;
  RightLoopTable pair_table_;
};

/// A candidate certificate that gamma centralizes beta: an equivalence
/// `relation` on the pairs of beta, meant to satisfy the centering axioms.
struct CenteringWitness {
  BetaAlgebra beta;
  Partition gamma;     // on the base points
  Partition relation;  // on beta's pair indices
  bool via_candidate = false;
};

struct AxiomCheck {
  bool ok = false;
  std::vector<std::string> failures;
  explicit operator bool() const { return ok; }
};

/// The centering axioms, evaluated literally:
///   (i)   related pairs have gamma-related first components,
///   (ii)  each relation class projects bijectively onto a gamma class,
///   (iii) (x,x) ~ (y,y) whenever x gamma y,
///   (iv)  the relation is stable under swapping both pairs,
///   (v)   (x,y)~(u,v) and (y,z)~(v,w) imply (x,z)~(u,w),
/// together with the two commutation consequences of centering, which the
/// toolkit treats as part of the certification: every element of beta's
/// identity block has its left inverse commuting with gamma's identity
/// block, and, when gamma is the full relation, fully associates.
AxiomCheck check_centering_axioms(const CenteringWitness& w);

/// The reduced criterion: conditions (i)-(iii) plus "(x,x) ~ (x,y) forces
/// x = y", with the same commutation requirements. Agrees with
/// check_centering_axioms (the swap and composition conditions follow).
bool check_centering_equiv(const CenteringWitness& w);

/// The standard witness for a group table: with H, K normal and elementwise
/// commuting, relate (x,y) to (u,v) when y x^-1 = v u^-1 and x^-1 u lies
/// in K. H and K are element index sets. Throws if the hypotheses fail.
CenteringWitness group_centering_witness(const RightLoopTable& group_table,
                                         const std::vector<int>& h,
                                         const std::vector<int>& k);

enum class CenteringOutcome { Found, None, Undecided };

struct CenteringSearch {
  CenteringOutcome outcome = CenteringOutcome::None;
  std::optional<CenteringWitness> witness;
  std::string note;  // reason for None / Undecided
};

/// Decides whether gamma centralizes beta. Tries the division-compatible
/// candidate relation ((x,y) ~ (u,v) iff x/y = u/v and x gamma u) first,
/// then enumerates the relations with the class structure the axioms force
/// (or, past the cap, the congruences of the pair algebra, reporting
/// Undecided when that cannot settle the question). `use_candidate = false`
/// skips the candidate so the search path can be exercised on its own.
CenteringSearch centralizes(const RightLoopTable& loop, const Partition& gamma,
                            const Partition& beta,
                            std::size_t search_cap = kDefaultSubloopCap,
                            bool use_candidate = true);

/// Every certified centering relation for (gamma, beta), by complete
/// enumeration of the forced class structure. Throws CapError when the
/// space exceeds the cap. There is never more than one.
std::vector<Partition> all_centering_relations(const RightLoopTable& loop,
                                               const Partition& gamma,
                                               const Partition& beta,
                                               std::size_t cap = kDefaultSubloopCap);

/// The center congruence ζ: the join of all congruences centralized by
/// S x S. `exact` is false when some centering search hit a cap, making
/// ζ only a certified lower bound.
struct CenterResult {
  Partition zeta;
  std::vector<int> center;  // identity block of zeta
  bool exact = true;
};

CenterResult center_congruence(const RightLoopTable& loop,
                               std::size_t seed_cap = kDefaultSubloopCap,
                               std::size_t search_cap = kDefaultSubloopCap);

std::vector<int> center(const RightLoopTable& loop);

enum class ConclusionStatus { Pass, Vacuous, Fail };

struct StatementReport {
  std::string id;
  bool hypothesis_holds = false;
  ConclusionStatus status = ConclusionStatus::Vacuous;
  std::string detail;
};

/// Evaluates the structural statements about σ(S)₁, the center and the
/// translation group on one concrete table: each conditional statement is
/// checked when its hypothesis holds and reported vacuous otherwise.
std::vector<StatementReport> verify_statements(const RightLoopTable& loop);

}  // namespace rloop

#endif
