#include "rloop/transversal.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "rloop/error.hpp"

namespace rloop {

std::vector<std::vector<Perm>> right_cosets(const PermGroup& g, const PermGroup& h) {
  if (!g.contains_group(h)) throw ValidationError("right_cosets: H is not a subgroup of G");
  std::map<Perm, std::vector<Perm>> by_rep;  // least coset element -> coset
  for (const auto& x : g.elements()) {
    Perm rep = compose(h.elements().front(), x);
    std::vector<Perm> coset;
    for (const auto& e : h.elements()) {
      Perm hx = compose(e, x);
      coset.push_back(hx);
      rep = std::min(rep, hx);
    }
    std::sort(coset.begin(), coset.end());
    by_rep.emplace(rep, std::move(coset));
  }
  std::vector<std::vector<Perm>> out;
  for (auto& [rep, coset] : by_rep) out.push_back(std::move(coset));
  return out;
}

namespace {

// least element of the coset Hx
Perm coset_key(const PermGroup& h, const Perm& x) {
  Perm best = compose(h.elements().front(), x);
  for (const auto& e : h.elements()) best = std::min(best, compose(e, x));
  return best;
}

}  // namespace

NrtCheck is_nrt(const TransversalSpec& spec) {
  const auto& g = spec.ambient;
  const auto& h = spec.subgroup;
  if (!g.contains_group(h)) return {false, "subgroup is not contained in the ambient group"};
  if (g.order() % h.order() != 0) return {false, "subgroup order does not divide group order"};
  std::size_t index = g.order() / h.order();
  if (spec.transversal.size() != index)
    return {false, "transversal has " + std::to_string(spec.transversal.size()) +
                       " elements, expected [G:H] = " + std::to_string(index)};
  bool has_identity = false;
  std::set<Perm> keys;
  for (const auto& x : spec.transversal) {
    if (!g.contains(x)) return {false, "transversal element " + x.str() + " is not in G"};
    if (x.is_identity()) has_identity = true;
    if (!keys.insert(coset_key(h, x)).second)
      return {false, "coset H" + x.str() + " is represented twice"};
  }
  if (!has_identity) return {false, "transversal does not contain the identity"};
  return {true, ""};
}

std::vector<Perm> min_transversal(const PermGroup& g, const PermGroup& h) {
  std::vector<Perm> reps;
  for (const auto& coset : right_cosets(g, h)) reps.push_back(coset.front());
  std::sort(reps.begin(), reps.end());  // identity is the least element overall
  return reps;
}

RightLoopTable induced_table(const TransversalSpec& spec) {
  auto check = is_nrt(spec);
  if (!check.ok) throw ValidationError("not an NRT: " + check.diagnostic);
  const auto& s = spec.transversal;
  int n = static_cast<int>(s.size());
  std::map<Perm, int> key_to_index;
  for (int i = 0; i < n; ++i) key_to_index[coset_key(spec.subgroup, s[i])] = i;
  std::vector<std::vector<int>> table(n, std::vector<int>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      table[i][j] = key_to_index.at(coset_key(spec.subgroup, compose(s[i], s[j])));
  std::vector<std::string> labels;
  for (const auto& x : s) labels.push_back(x.str());
  return RightLoopTable::validate(table, std::move(labels));
}

Perm chi(const TransversalSpec& spec, const Perm& g) {
  if (!spec.ambient.contains(g)) throw ValidationError("chi: element is not in G");
  const auto& s = spec.transversal;
  int n = static_cast<int>(s.size());
  std::map<Perm, int> key_to_index;
  for (int i = 0; i < n; ++i) key_to_index[coset_key(spec.subgroup, s[i])] = i;
  std::vector<int> img(n);
  for (int i = 0; i < n; ++i)
    img[i] = key_to_index.at(coset_key(spec.subgroup, compose(s[i], g)));
  return Perm(std::move(img));
}

PermGroup chi_image(const TransversalSpec& spec) {
  std::vector<Perm> gens;
  const auto& source =
      spec.ambient.generators().empty() ? spec.ambient.elements() : spec.ambient.generators();
  for (const auto& g : source) gens.push_back(chi(spec, g));
  return PermGroup::closure(std::move(gens));
}

PermGroup core(const PermGroup& g, const PermGroup& h) {
  if (!g.contains_group(h)) throw ValidationError("core: H is not a subgroup of G");
  const auto& gens = g.generators().empty() ? g.elements() : g.generators();
  std::set<Perm> current(h.elements().begin(), h.elements().end());
  bool changed = true;
  while (changed) {
    changed = false;
    for (const auto& e : gens) {
      std::set<Perm> kept;
      for (const auto& x : current)
        if (current.count(conjugate(x, e))) kept.insert(x);
      if (kept.size() != current.size()) {
        current = std::move(kept);
        changed = true;
      }
    }
  }
  // the surviving set is conjugation-invariant; it is a subgroup since the
  // intersection of subgroups g^-1 H g is one
  return PermGroup::from_elements({current.begin(), current.end()});
}

PermGroup chi_kernel(const TransversalSpec& spec) {
  return core(spec.ambient, spec.subgroup);
}

PermGroup h_subgroup(const TransversalSpec& spec) {
  RightLoopTable t = induced_table(spec);
  const auto& s = spec.transversal;
  int n = static_cast<int>(s.size());
  std::vector<Perm> gens = {Perm(spec.ambient.degree())};
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      gens.push_back(compose(compose(s[i], s[j]), s[t.mul(i, j)].inverse()));
  PermGroup hs = PermGroup::closure(std::move(gens));

  // H_S · S must fill <S>
  PermGroup span = PermGroup::closure({s.begin(), s.end()});
  std::set<Perm> product;
  for (const auto& e : hs.elements())
    for (const auto& x : s) product.insert(compose(e, x));
  if (product.size() != span.order())
    throw Error("H_S · S does not equal <S>");
  for (const auto& p : product)
    if (!span.contains(p)) throw Error("H_S · S escapes <S>");
  return hs;
}

}  // namespace rloop
