#include "rloop/right_loop.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "rloop/error.hpp"

namespace rloop {

RightLoopTable RightLoopTable::validate(const std::vector<std::vector<int>>& table,
                                        std::vector<std::string> labels) {
  int n = static_cast<int>(table.size());
  if (n == 0) throw ValidationError("empty table");
  for (const auto& row : table)
    if (static_cast<int>(row.size()) != n) throw ValidationError("table is not square");
  for (const auto& row : table)
    for (int v : row)
      if (v < 0 || v >= n) throw ValidationError("table entry out of range");

  for (int x = 0; x < n; ++x) {
    if (table[0][x] != x)
      throw ValidationError("identity row violated: 1∘" + std::to_string(x + 1) +
                            " != " + std::to_string(x + 1));
    if (table[x][0] != x)
      throw ValidationError("identity column violated: " + std::to_string(x + 1) +
                            "∘1 != " + std::to_string(x + 1));
  }
  for (int y = 0; y < n; ++y) {
    std::vector<bool> seen(n, false);
    for (int x = 0; x < n; ++x) {
      int v = table[x][y];
      if (seen[v])
        throw ValidationError("column " + std::to_string(y + 1) +
                              " is not a permutation: value " + std::to_string(v + 1) +
                              " repeats");
      seen[v] = true;
    }
  }

  if (labels.empty()) {
    for (int i = 0; i < n; ++i) labels.push_back(std::to_string(i + 1));
  }
  if (static_cast<int>(labels.size()) != n)
    throw ValidationError("label count does not match table order");
  std::set<std::string> uniq(labels.begin(), labels.end());
  if (static_cast<int>(uniq.size()) != n) throw ValidationError("labels are not distinct");

  RightLoopTable t;
  t.n_ = n;
  t.table_ = table;
  t.labels_ = std::move(labels);
  t.col_inverse_.assign(n, std::vector<int>(n));
  for (int y = 0; y < n; ++y)
    for (int x = 0; x < n; ++x) t.col_inverse_[y][table[x][y]] = x;
  return t;
}

Perm RightLoopTable::right_translation(int y) const {
  std::vector<int> img(n_);
  for (int x = 0; x < n_; ++x) img[x] = table_[x][y];
  return Perm(std::move(img));
}

std::vector<int> RightLoopTable::left_translation(int a) const { return table_[a]; }

bool RightLoopTable::is_left_nonsingular(int a) const {
  std::vector<bool> seen(n_, false);
  for (int v : table_[a]) {
    if (seen[v]) return false;
    seen[v] = true;
  }
  return true;
}

bool RightLoopTable::is_loop() const {
  for (int a = 0; a < n_; ++a)
    if (!is_left_nonsingular(a)) return false;
  return true;
}

bool RightLoopTable::is_group() const {
  for (int x = 0; x < n_; ++x)
    for (int y = 0; y < n_; ++y)
      for (int z = 0; z < n_; ++z)
        if (mul(mul(x, y), z) != mul(x, mul(y, z))) return false;
  return true;
}

std::string RightLoopTable::label_set(const std::vector<int>& xs) const {
  std::string out = "{";
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) out += ",";
    out += labels_[xs[i]];
  }
  return out + "}";
}

bool is_isomorphism(const RightLoopTable& a, const RightLoopTable& b,
                    const std::vector<int>& map) {
  int n = a.size();
  if (b.size() != n || static_cast<int>(map.size()) != n) return false;
  std::vector<bool> seen(n, false);
  for (int v : map) {
    if (v < 0 || v >= n || seen[v]) return false;
    seen[v] = true;
  }
  if (map[0] != 0) return false;
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      if (map[a.mul(x, y)] != b.mul(map[x], map[y])) return false;
  return true;
}

namespace {

bool extend_iso(const RightLoopTable& a, const RightLoopTable& b, std::vector<int>& map,
                std::vector<bool>& used, int pos) {
  int n = a.size();
  if (pos == n) return is_isomorphism(a, b, map);
  for (int target = 1; target < n; ++target) {
    if (used[target]) continue;
    map[pos] = target;
    used[target] = true;
    bool consistent = true;
    for (int i = 0; i <= pos && consistent; ++i)
      for (int j = 0; j <= pos && consistent; ++j) {
        int ab = a.mul(i, j);
        if (ab <= pos || ab == 0) {
          if (map[ab] != b.mul(map[i], map[j])) consistent = false;
        }
      }
    if (consistent && extend_iso(a, b, map, used, pos + 1)) return true;
    used[target] = false;
    map[pos] = -1;
  }
  return false;
}

}  // namespace

std::optional<std::vector<int>> isomorphism(const RightLoopTable& a, const RightLoopTable& b) {
  if (a.size() != b.size()) return std::nullopt;
  int n = a.size();
  std::vector<int> map(n, -1);
  std::vector<bool> used(n, false);
  map[0] = 0;
  used[0] = true;
  if (n == 1) return map;
  if (extend_iso(a, b, map, used, 1)) return map;
  return std::nullopt;
}

RightLoopTable cayley_table(const PermGroup& g) {
  const auto& elems = g.elements();
  int n = static_cast<int>(elems.size());
  std::map<Perm, int> index;
  for (int i = 0; i < n; ++i) index[elems[i]] = i;
  std::vector<std::vector<int>> table(n, std::vector<int>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) table[i][j] = index.at(compose(elems[i], elems[j]));
  std::vector<std::string> labels;
  for (const auto& e : elems) labels.push_back(e.str());
  return RightLoopTable::validate(table, std::move(labels));
}

}  // namespace rloop
