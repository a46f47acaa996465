#include "rloop/congruence.hpp"

#include <algorithm>
#include <cassert>
#include <queue>
#include <set>

#include "rloop/error.hpp"

namespace rloop {

CongruenceCheck is_congruence(const RightLoopTable& loop, const Partition& p) {
  int n = loop.size();
  if (p.size() != n) throw ValidationError("partition size does not match table");
  // compatibility: the block of x*u (and x/u) must depend only on
  // (block(x), block(u)); checked against the block representatives
  for (char op : {'*', '/'}) {
    for (const auto& bx : p.blocks()) {
      for (const auto& bu : p.blocks()) {
        int rep = op == '*' ? loop.mul(bx[0], bu[0]) : loop.rdiv(bx[0], bu[0]);
        int want = p.block_of(rep);
        for (int x : bx)
          for (int u : bu) {
            int got = op == '*' ? loop.mul(x, u) : loop.rdiv(x, u);
            if (p.block_of(got) != want)
              return {false, CongruenceViolation{bx[0], x, bu[0], u, op}};
          }
      }
    }
  }
#ifndef NDEBUG
  // closure under the derived unary/nullary operations is implied
  for (const auto& blk : p.blocks())
    for (int x : blk) {
      assert(p.same_block(loop.left_inverse(blk[0]), loop.left_inverse(x)));
      (void)x;
    }
#endif
  return {true, std::nullopt};
}

namespace {

std::vector<int> close_subset(const RightLoopTable& loop, std::vector<int> seed) {
  std::set<int> set(seed.begin(), seed.end());
  set.insert(0);
  std::vector<int> work(set.begin(), set.end());
  while (!work.empty()) {
    int x = work.back();
    work.pop_back();
    std::vector<int> snapshot(set.begin(), set.end());
    for (int y : snapshot) {
      for (int v : {loop.mul(x, y), loop.mul(y, x), loop.rdiv(x, y), loop.rdiv(y, x)})
        if (set.insert(v).second) work.push_back(v);
    }
  }
  return {set.begin(), set.end()};
}

}  // namespace

std::vector<std::vector<int>> subloops(const RightLoopTable& loop, std::size_t seed_cap) {
  std::set<std::vector<int>> found;
  std::queue<std::vector<int>> todo;
  std::size_t closures = 0;
  auto push = [&](std::vector<int> t) {
    if (found.insert(t).second) todo.push(std::move(t));
  };
  push(close_subset(loop, {0}));
  while (!todo.empty()) {
    std::vector<int> base = std::move(todo.front());
    todo.pop();
    if (static_cast<int>(base.size()) == loop.size()) continue;
    for (int x = 1; x < loop.size(); ++x) {
      if (std::binary_search(base.begin(), base.end(), x)) continue;
      if (++closures > seed_cap)
        throw CapError("subloop seed cap " + std::to_string(seed_cap) + " exceeded");
      std::vector<int> seed = base;
      seed.push_back(x);
      push(close_subset(loop, std::move(seed)));
    }
  }
  std::vector<std::vector<int>> result(found.begin(), found.end());
  std::sort(result.begin(), result.end(), [](const auto& a, const auto& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  });
  return result;
}

namespace {

// The congruence candidate generated by T: equivalence closure of {(t∘y, y)}.
Partition subloop_relation(const RightLoopTable& loop, const std::vector<int>& t) {
  std::vector<std::pair<int, int>> pairs;
  for (int x : t)
    for (int y = 0; y < loop.size(); ++y) pairs.emplace_back(loop.mul(x, y), y);
  return Partition::from_pairs(loop.size(), pairs);
}

bool block_equals(const Partition& p, int block, const std::vector<int>& want) {
  const auto& blk = p.block(block);
  return blk.size() == want.size() && std::equal(blk.begin(), blk.end(), want.begin());
}

}  // namespace

bool is_invariant_subloop(const RightLoopTable& loop, const std::vector<int>& t) {
  std::vector<int> sorted = t;
  std::sort(sorted.begin(), sorted.end());
  if (sorted.empty() || sorted[0] != 0) return false;
  if (close_subset(loop, sorted) != sorted) return false;  // not even a subloop
  if (loop.size() % static_cast<int>(sorted.size()) != 0) return false;
  Partition p = subloop_relation(loop, sorted);
  return block_equals(p, p.block_of(0), sorted) && is_congruence(loop, p).ok;
}

std::vector<std::vector<int>> invariant_subloops(const RightLoopTable& loop,
                                                 std::size_t seed_cap) {
  std::vector<std::vector<int>> result;
  for (auto& t : subloops(loop, seed_cap))
    if (is_invariant_subloop(loop, t)) result.push_back(std::move(t));
  return result;
}

Partition congruence_of_subloop(const RightLoopTable& loop, const std::vector<int>& t) {
  std::vector<int> sorted = t;
  std::sort(sorted.begin(), sorted.end());
  Partition p = subloop_relation(loop, sorted);
  if (!block_equals(p, p.block_of(0), sorted) || !is_congruence(loop, p).ok)
    throw ValidationError("subloop " + loop.label_set(sorted) + " is not invariant");
  return p;
}

std::vector<Partition> all_congruences(const RightLoopTable& loop, std::size_t seed_cap) {
  std::vector<Partition> result;
  for (const auto& t : invariant_subloops(loop, seed_cap))
    result.push_back(congruence_of_subloop(loop, t));
  std::sort(result.begin(), result.end());
  return result;
}

bool is_simple(const RightLoopTable& loop, std::size_t seed_cap) {
  for (const auto& c : all_congruences(loop, seed_cap))
    if (!c.is_discrete() && !c.is_full()) return false;
  return true;
}

Quotient quotient(const RightLoopTable& loop, const Partition& congruence) {
  auto check = is_congruence(loop, congruence);
  if (!check.ok) throw ValidationError("partition is not a congruence");
  int m = congruence.block_count();
  std::size_t block_size = congruence.block(0).size();
  for (const auto& blk : congruence.blocks())
    if (blk.size() != block_size)
      throw ValidationError("congruence blocks are not of constant size");

  std::vector<std::vector<int>> table(m, std::vector<int>(m, -1));
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b) {
      for (int x : congruence.block(a))
        for (int y : congruence.block(b)) {
          int v = congruence.block_of(loop.mul(x, y));
          if (table[a][b] < 0)
            table[a][b] = v;
          else if (table[a][b] != v)
            throw ValidationError("block product is not well defined");
        }
    }

  std::vector<std::string> labels;
  for (const auto& blk : congruence.blocks()) {
    std::string l;
    for (std::size_t i = 0; i < blk.size(); ++i) {
      if (i) l += '|';
      l += loop.label(blk[i]);
    }
    labels.push_back(std::move(l));
  }

  Quotient q{RightLoopTable::validate(table, std::move(labels)), congruence.block_ids()};
  // the projection is a homomorphism by construction; keep the cross-check
  for (int x = 0; x < loop.size(); ++x)
    for (int y = 0; y < loop.size(); ++y)
      if (q.block_of[loop.mul(x, y)] != q.table.mul(q.block_of[x], q.block_of[y]))
        throw ValidationError("quotient projection is not a homomorphism");
  return q;
}

}  // namespace rloop
