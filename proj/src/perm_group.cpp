#include "rloop/perm_group.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "rloop/error.hpp"

namespace rloop {

PermGroup::PermGroup(int degree, std::vector<Perm> generators, std::vector<Perm> elements)
    : degree_(degree), generators_(std::move(generators)), elements_(std::move(elements)) {
  std::sort(elements_.begin(), elements_.end());
  elements_.erase(std::unique(elements_.begin(), elements_.end()), elements_.end());
}

PermGroup PermGroup::trivial(int degree) {
  return PermGroup(degree, {}, {Perm(degree)});
}

PermGroup PermGroup::closure(std::vector<Perm> generators, std::size_t order_cap) {
  if (generators.empty()) throw ValidationError("closure needs at least one generator");
  int degree = generators[0].degree();
  for (const auto& g : generators)
    if (g.degree() != degree) throw ValidationError("generators have mixed degrees");

  std::set<Perm> seen;
  std::vector<Perm> todo;
  auto push = [&](Perm p) {
    if (seen.insert(p).second) {
      if (seen.size() > order_cap)
        throw CapError("group order cap " + std::to_string(order_cap) + " exceeded");
      todo.push_back(std::move(p));
    }
  };
  push(Perm(degree));
  for (const auto& g : generators) push(g);
  while (!todo.empty()) {
    Perm cur = std::move(todo.back());
    todo.pop_back();
    for (const auto& g : generators) {
      push(compose(cur, g));
      push(compose(g, cur));
    }
  }
  return PermGroup(degree, std::move(generators),
                   std::vector<Perm>(seen.begin(), seen.end()));
}

PermGroup PermGroup::from_elements(std::vector<Perm> elements) {
  if (elements.empty()) throw ValidationError("element set is empty");
  int degree = elements[0].degree();
  std::set<Perm> set(elements.begin(), elements.end());
  if (!set.count(Perm(degree))) throw ValidationError("element set lacks the identity");
  for (const auto& a : set)
    for (const auto& b : set)
      if (!set.count(compose(a, b)))
        throw ValidationError("element set is not closed under composition");
  std::vector<Perm> sorted(set.begin(), set.end());
  return PermGroup(degree, sorted, std::move(elements));
}

PermGroup PermGroup::cyclic(int n) {
  if (n < 1) throw ValidationError("cyclic group order must be positive");
  if (n == 1) return trivial(1);
  std::vector<int> img(n);
  for (int i = 0; i < n; ++i) img[i] = (i + 1) % n;
  return closure({Perm(std::move(img))});
}

PermGroup PermGroup::symmetric(int n) {
  if (n < 1) throw ValidationError("degree must be positive");
  if (n == 1) return trivial(1);
  std::vector<Perm> gens = {Perm::from_cycles(n, {{0, 1}})};
  if (n > 2) {
    std::vector<int> cyc(n);
    for (int i = 0; i < n; ++i) cyc[i] = i;
    gens.push_back(Perm::from_cycles(n, {cyc}));
  }
  return closure(std::move(gens));
}

PermGroup PermGroup::alternating(int n) {
  if (n < 3) return trivial(std::max(n, 1));
  std::vector<Perm> gens;
  for (int i = 2; i < n; ++i) gens.push_back(Perm::from_cycles(n, {{0, 1, i}}));
  return closure(std::move(gens));
}

PermGroup PermGroup::dihedral_of_order(int m) {
  if (m < 6 || m % 2 != 0) throw ValidationError("dihedral_of_order needs even order >= 6");
  int k = m / 2;
  std::vector<int> rot(k), refl(k);
  for (int i = 0; i < k; ++i) {
    rot[i] = (i + 1) % k;
    refl[i] = (k - i) % k;
  }
  return closure({Perm(std::move(rot)), Perm(std::move(refl))});
}

const Perm& PermGroup::identity() const {
  // elements are sorted; the identity image list is lexicographically least
  return elements_.front();
}

bool PermGroup::contains(const Perm& p) const {
  return std::binary_search(elements_.begin(), elements_.end(), p);
}

bool PermGroup::contains_group(const PermGroup& h) const {
  if (h.degree() != degree_) return false;
  for (const auto& e : h.elements())
    if (!contains(e)) return false;
  return true;
}

bool PermGroup::same_group(const PermGroup& other) const {
  return order() == other.order() && contains_group(other);
}

bool PermGroup::is_abelian() const {
  for (const auto& a : generators_.empty() ? elements_ : generators_)
    for (const auto& b : generators_.empty() ? elements_ : generators_)
      if (compose(a, b) != compose(b, a)) return false;
  return true;
}

PermGroup stabilizer(const PermGroup& g, int x) {
  if (x < 0 || x >= g.degree()) throw ValidationError("stabilizer point out of range");
  std::vector<Perm> fixed;
  for (const auto& e : g.elements())
    if (e(x) == x) fixed.push_back(e);
  return PermGroup::from_elements(std::move(fixed));
}

PermGroup normalizer(const PermGroup& g, const PermGroup& h) {
  if (!g.contains_group(h)) throw ValidationError("normalizer: H is not a subgroup of G");
  std::vector<Perm> result;
  for (const auto& e : g.elements()) {
    bool norm = true;
    for (const auto& x : h.elements())
      if (!h.contains(conjugate(x, e))) {
        norm = false;
        break;
      }
    if (norm) result.push_back(e);
  }
  return PermGroup::from_elements(std::move(result));
}

PermGroup center_of_group(const PermGroup& g) {
  const auto& gens = g.generators().empty() ? g.elements() : g.generators();
  std::vector<Perm> central;
  for (const auto& e : g.elements()) {
    bool ok = true;
    for (const auto& x : gens)
      if (compose(e, x) != compose(x, e)) {
        ok = false;
        break;
      }
    if (ok) central.push_back(e);
  }
  return PermGroup::from_elements(std::move(central));
}

bool is_normal_in(const PermGroup& h, const PermGroup& g) {
  if (!g.contains_group(h)) return false;
  const auto& gens = g.generators().empty() ? g.elements() : g.generators();
  for (const auto& e : gens)
    for (const auto& x : h.elements())
      if (!h.contains(conjugate(x, e))) return false;
  return true;
}

std::vector<std::vector<Perm>> conjugacy_classes(const PermGroup& g) {
  const auto& gens = g.generators().empty() ? g.elements() : g.generators();
  std::set<Perm> unassigned(g.elements().begin(), g.elements().end());
  std::vector<std::vector<Perm>> classes;
  while (!unassigned.empty()) {
    Perm seed = *unassigned.begin();
    std::set<Perm> cls = {seed};
    std::vector<Perm> todo = {seed};
    while (!todo.empty()) {
      Perm cur = std::move(todo.back());
      todo.pop_back();
      for (const auto& e : gens) {
        Perm c = conjugate(cur, e);
        if (cls.insert(c).second) todo.push_back(c);
      }
    }
    for (const auto& p : cls) unassigned.erase(p);
    classes.emplace_back(cls.begin(), cls.end());
  }
  // identity class first, then by size and least element
  std::sort(classes.begin(), classes.end(), [](const auto& a, const auto& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a.front() < b.front();
  });
  return classes;
}

std::vector<PermGroup> normal_subgroups(const PermGroup& g, int class_cap) {
  auto classes = conjugacy_classes(g);
  int k = static_cast<int>(classes.size());
  if (k > class_cap)
    throw CapError("too many conjugacy classes (" + std::to_string(k) + " > cap " +
                   std::to_string(class_cap) + ")");
  // locate the identity class
  int id_idx = -1;
  for (int i = 0; i < k; ++i)
    if (classes[i].size() == 1 && classes[i][0].is_identity()) id_idx = i;
  std::vector<int> others;
  for (int i = 0; i < k; ++i)
    if (i != id_idx) others.push_back(i);

  std::vector<PermGroup> result;
  std::size_t n_subsets = std::size_t{1} << others.size();
  for (std::size_t mask = 0; mask < n_subsets; ++mask) {
    std::size_t total = 1;
    for (std::size_t b = 0; b < others.size(); ++b)
      if (mask >> b & 1) total += classes[others[b]].size();
    if (g.order() % total != 0) continue;  // Lagrange prune
    std::set<Perm> u = {g.identity()};
    for (std::size_t b = 0; b < others.size(); ++b)
      if (mask >> b & 1)
        u.insert(classes[others[b]].begin(), classes[others[b]].end());
    bool closed = true;
    for (const auto& a : u) {
      for (const auto& b : u)
        if (!u.count(compose(a, b))) {
          closed = false;
          break;
        }
      if (!closed) break;
    }
    if (closed) result.push_back(PermGroup::from_elements({u.begin(), u.end()}));
  }
  std::sort(result.begin(), result.end(), [](const PermGroup& a, const PermGroup& b) {
    if (a.order() != b.order()) return a.order() < b.order();
    return a.elements() < b.elements();
  });
  return result;
}

std::vector<std::vector<int>> orbits(const PermGroup& g) {
  std::vector<bool> seen(g.degree(), false);
  std::vector<std::vector<int>> result;
  const auto& gens = g.generators().empty() ? g.elements() : g.generators();
  for (int start = 0; start < g.degree(); ++start) {
    if (seen[start]) continue;
    std::vector<int> orbit = {start};
    seen[start] = true;
    for (std::size_t i = 0; i < orbit.size(); ++i)
      for (const auto& e : gens) {
        int y = e(orbit[i]);
        if (!seen[y]) {
          seen[y] = true;
          orbit.push_back(y);
        }
      }
    std::sort(orbit.begin(), orbit.end());
    result.push_back(std::move(orbit));
  }
  return result;
}

bool is_transitive(const PermGroup& g) { return orbits(g).size() == 1; }

bool is_quasiprimitive(const PermGroup& g, int class_cap) {
  for (const auto& n : normal_subgroups(g, class_cap))
    if (n.order() > 1 && !is_transitive(n)) return false;
  return true;
}

GroupFingerprint fingerprint(const PermGroup& g) {
  GroupFingerprint fp;
  fp.order = g.order();
  fp.abelian = g.is_abelian();
  for (const auto& e : g.elements()) fp.element_orders.push_back(e.order());
  std::sort(fp.element_orders.begin(), fp.element_orders.end());
  return fp;
}

bool same_fingerprint(const PermGroup& a, const PermGroup& b) {
  return fingerprint(a) == fingerprint(b);
}

bool is_cyclic(const PermGroup& g) {
  for (const auto& e : g.elements())
    if (static_cast<std::size_t>(e.order()) == g.order()) return true;
  return false;
}

}  // namespace rloop
