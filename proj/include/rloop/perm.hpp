#ifndef RLOOP_PERM_HPP
#define RLOOP_PERM_HPP

#include <compare>
#include <string>
#include <string_view>
#include <vector>

namespace rloop {

/// A permutation of the points {0..n-1}, stored as its image list.
///
/// Products are read left to right everywhere in this library:
/// compose(p, q) maps x to q(p(x)).
class Perm {
 public:
  Perm() = default;
  explicit Perm(int degree);               // identity
  explicit Perm(std::vector<int> images);  // throws ValidationError if not a bijection

  /// Build from 0-based cycles, e.g. {{0,3},{1,4,2,5}}.
  static Perm from_cycles(int degree, const std::vector<std::vector<int>>& cycles);

  /// Parse cycle notation with 1-based points, e.g. "(1,4)(2,5,3,6)" or "()".
  static Perm parse(int degree, std::string_view text);

  int degree() const { return static_cast<int>(images_.size()); }
  int operator()(int x) const { return images_[x]; }
  const std::vector<int>& images() const { return images_; }

  bool is_identity() const;
  Perm inverse() const;
  int order() const;

  /// Cycle notation with 1-based points; "()" for the identity.
  std::string str() const;

  auto operator<=>(const Perm&) const = default;

 private:
  std::vector<int> images_;
};

/// Left-to-right product: x -> q(p(x)).
Perm compose(const Perm& p, const Perm& q);

/// q^-1 p q.
Perm conjugate(const Perm& p, const Perm& q);

}  // namespace rloop

#endif
