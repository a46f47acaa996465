#ifndef RLOOP_PARTITION_HPP
#define RLOOP_PARTITION_HPP

#include <utility>
#include <vector>

namespace rloop {

/// An equivalence relation on {0..n-1}, stored both as block ids and as the
/// block list. Blocks are ordered by their least element, elements sorted,
/// so equal relations compare equal.
class Partition {
 public:
  Partition() = default;

  static Partition discrete(int n);
  static Partition full(int n);
  static Partition from_block_ids(const std::vector<int>& ids);
  static Partition from_blocks(int n, const std::vector<std::vector<int>>& blocks);
  /// Equivalence closure of the given pairs.
  static Partition from_pairs(int n, const std::vector<std::pair<int, int>>& pairs);

  int size() const { return static_cast<int>(block_id_.size()); }
  int block_count() const { return static_cast<int>(blocks_.size()); }
  int block_of(int x) const { return block_id_[x]; }
  bool same_block(int x, int y) const { return block_id_[x] == block_id_[y]; }
  const std::vector<std::vector<int>>& blocks() const { return blocks_; }
  const std::vector<int>& block(int b) const { return blocks_[b]; }
  const std::vector<int>& block_ids() const { return block_id_; }

  bool is_discrete() const { return block_count() == size(); }
  bool is_full() const { return block_count() <= 1; }
  /// True iff every block of *this lies inside a block of coarser.
  bool refines(const Partition& coarser) const;

  /// All related ordered pairs, in (x, y) scan order.
  std::vector<std::pair<int, int>> pairs() const;

  bool operator==(const Partition&) const = default;
  bool operator<(const Partition& o) const { return block_id_ < o.block_id_; }

 private:
  std::vector<int> block_id_;
  std::vector<std::vector<int>> blocks_;

  void rebuild_from_ids(std::vector<int> raw_ids);
};

/// Join (smallest common coarsening) of two partitions.
Partition join(const Partition& a, const Partition& b);

/// The relational product a o b = {(x, z) : exists y with x a y and y b z},
/// as a sorted pair list. Not necessarily an equivalence relation.
std::vector<std::pair<int, int>> relational_product(const Partition& a, const Partition& b);

}  // namespace rloop

#endif
