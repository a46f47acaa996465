#include "rloop/partition.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "rloop/error.hpp"

namespace rloop {

namespace {

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(int a, int b) { parent[find(a)] = find(b); }
};

}  // namespace

void Partition::rebuild_from_ids(std::vector<int> raw_ids) {
  int n = static_cast<int>(raw_ids.size());
  // renumber blocks by first appearance, which orders them by least element
  std::vector<int> remap(n, -1);
  block_id_.assign(n, -1);
  blocks_.clear();
  for (int x = 0; x < n; ++x) {
    int raw = raw_ids[x];
    if (remap[raw] < 0) {
      remap[raw] = static_cast<int>(blocks_.size());
      blocks_.emplace_back();
    }
    block_id_[x] = remap[raw];
    blocks_[remap[raw]].push_back(x);
  }
}

Partition Partition::discrete(int n) {
  std::vector<int> ids(n);
  std::iota(ids.begin(), ids.end(), 0);
  return from_block_ids(ids);
}

Partition Partition::full(int n) {
  return from_block_ids(std::vector<int>(n, 0));
}

Partition Partition::from_block_ids(const std::vector<int>& ids) {
  for (int v : ids)
    if (v < 0 || v >= static_cast<int>(ids.size()))
      throw ValidationError("block id out of range");
  Partition p;
  p.rebuild_from_ids(ids);
  return p;
}

Partition Partition::from_blocks(int n, const std::vector<std::vector<int>>& blocks) {
  std::vector<int> ids(n, -1);
  for (std::size_t b = 0; b < blocks.size(); ++b)
    for (int x : blocks[b]) {
      if (x < 0 || x >= n) throw ValidationError("partition element out of range");
      if (ids[x] >= 0) throw ValidationError("element in two blocks");
      ids[x] = static_cast<int>(b);
    }
  for (int x = 0; x < n; ++x)
    if (ids[x] < 0) throw ValidationError("element missing from all blocks");
  Partition p;
  p.rebuild_from_ids(std::move(ids));
  return p;
}

Partition Partition::from_pairs(int n, const std::vector<std::pair<int, int>>& pairs) {
  UnionFind uf(n);
  for (auto [a, b] : pairs) {
    if (a < 0 || a >= n || b < 0 || b >= n) throw ValidationError("pair element out of range");
    uf.unite(a, b);
  }
  std::vector<int> ids(n);
  for (int x = 0; x < n; ++x) ids[x] = uf.find(x);
  Partition p;
  p.rebuild_from_ids(std::move(ids));
  return p;
}

bool Partition::refines(const Partition& coarser) const {
  if (size() != coarser.size()) return false;
  for (const auto& blk : blocks_) {
    int target = coarser.block_of(blk.front());
    for (int x : blk)
      if (coarser.block_of(x) != target) return false;
  }
  return true;
}

std::vector<std::pair<int, int>> Partition::pairs() const {
  std::vector<std::pair<int, int>> out;
  for (int x = 0; x < size(); ++x)
    for (int y = 0; y < size(); ++y)
      if (same_block(x, y)) out.emplace_back(x, y);
  return out;
}

Partition join(const Partition& a, const Partition& b) {
  if (a.size() != b.size()) throw ValidationError("partition sizes differ");
  UnionFind uf(a.size());
  for (const auto& blk : a.blocks())
    for (std::size_t i = 1; i < blk.size(); ++i) uf.unite(blk[0], blk[i]);
  for (const auto& blk : b.blocks())
    for (std::size_t i = 1; i < blk.size(); ++i) uf.unite(blk[0], blk[i]);
  std::vector<int> ids(a.size());
  for (int x = 0; x < a.size(); ++x) ids[x] = uf.find(x);
  return Partition::from_block_ids(ids);
}

std::vector<std::pair<int, int>> relational_product(const Partition& a, const Partition& b) {
  if (a.size() != b.size()) throw ValidationError("partition sizes differ");
  std::set<std::pair<int, int>> out;
  for (int x = 0; x < a.size(); ++x)
    for (int y : a.block(a.block_of(x)))
      for (int z : b.block(b.block_of(y))) out.emplace(x, z);
  return {out.begin(), out.end()};
}

}  // namespace rloop
