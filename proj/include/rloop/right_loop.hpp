#ifndef RLOOP_RIGHT_LOOP_HPP
#define RLOOP_RIGHT_LOOP_HPP

#include <optional>
#include <string>
#include <vector>

#include "rloop/perm.hpp"
#include "rloop/perm_group.hpp"

namespace rloop {

/// A finite right loop as a validated Cayley table.
///
/// Entry (i, j) is i∘j. The identity sits at index 0: row 0 and column 0 are
/// the identity map, and every column is a permutation (the equation X∘y = x
/// has a unique solution). Rows carry no constraint: left translations of a
/// right loop can be singular.
class RightLoopTable {
 public:
  RightLoopTable() = default;  // empty placeholder; build through validate()

  /// Certify a raw matrix, or throw ValidationError naming the first
  /// violated axiom. Labels default to "1".."n".
  static RightLoopTable validate(const std::vector<std::vector<int>>& table,
                                 std::vector<std::string> labels = {});

  int size() const { return n_; }
  int mul(int x, int y) const { return table_[x][y]; }
  /// The unique z with z∘y = x (column inversion).
  int rdiv(int x, int y) const { return col_inverse_[y][x]; }
  /// y' with y'∘y = identity.
  int left_inverse(int y) const { return col_inverse_[y][0]; }
  /// Mal'cev operation P(x,y,z) = (x/y)∘z.
  int malcev(int x, int y, int z) const { return mul(rdiv(x, y), z); }

  /// R_y as a permutation of the table's points.
  Perm right_translation(int y) const;
  /// L_a as a raw image list; possibly not a bijection.
  std::vector<int> left_translation(int a) const;
  bool is_left_nonsingular(int a) const;

  /// True iff every left translation is bijective (the table is a loop).
  bool is_loop() const;
  /// True iff ∘ is associative (then the table is a group).
  bool is_group() const;

  const std::vector<std::vector<int>>& rows() const { return table_; }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::string& label(int x) const { return labels_[x]; }
  std::string label_set(const std::vector<int>& xs) const;

  bool operator==(const RightLoopTable& o) const { return table_ == o.table_; }

 private:
  int n_ = 0;
  std::vector<std::vector<int>> table_;
  std::vector<std::vector<int>> col_inverse_;  // col_inverse_[y][x] = x/y
  std::vector<std::string> labels_;
};

/// Identity-preserving isomorphism search by backtracking; returns the image
/// list of one isomorphism a -> b, if any exists.
std::optional<std::vector<int>> isomorphism(const RightLoopTable& a, const RightLoopTable& b);

bool is_isomorphism(const RightLoopTable& a, const RightLoopTable& b,
                    const std::vector<int>& map);

/// Cayley table of a permutation group in its element order (the identity is
/// first, so it lands at index 0). Labels are cycle strings.
RightLoopTable cayley_table(const PermGroup& g);

}  // namespace rloop

#endif
