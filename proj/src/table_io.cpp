#include "rloop/table_io.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <sstream>

#include "rloop/error.hpp"

namespace rloop {

namespace {

std::vector<std::string> data_lines(std::istream& in) {
  std::vector<std::string> lines;
  std::string line;
  while (std::getline(in, line)) {
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream probe(line);
    std::string tok;
    if (probe >> tok) lines.push_back(line);
  }
  return lines;
}

std::vector<std::string> tokens(const std::string& line) {
  std::istringstream in(line);
  std::vector<std::string> out;
  std::string tok;
  while (in >> tok) out.push_back(tok);
  return out;
}

}  // namespace

RightLoopTable read_table(std::istream& in) {
  auto lines = data_lines(in);
  if (lines.empty()) throw ParseError("empty table file");
  auto header = tokens(lines[0]);
  if (header.size() != 3 || header[0] != "rightloop" ||
      header[2].rfind("identity=", 0) != 0)
    throw ParseError("expected header 'rightloop <n> identity=<label>'");
  int n = 0;
  try {
    n = std::stoi(header[1]);
  } catch (...) {
    throw ParseError("bad order in header: " + header[1]);
  }
  if (n < 1) throw ParseError("order must be positive");
  std::string identity = header[2].substr(9);
  if (identity.empty()) throw ParseError("empty identity label");
  if (static_cast<int>(lines.size()) != n + 1)
    throw ParseError("expected " + std::to_string(n) + " table rows, found " +
                     std::to_string(lines.size() - 1));

  std::vector<std::vector<std::string>> cells;
  for (int i = 1; i <= n; ++i) {
    cells.push_back(tokens(lines[i]));
    if (static_cast<int>(cells.back().size()) != n)
      throw ParseError("row " + std::to_string(i) + " has " +
                       std::to_string(cells.back().size()) + " entries, expected " +
                       std::to_string(n));
  }

  // The element order is the identity's row: find the row k that can serve
  // as it (table[k][k] = identity, row k = column k = the label order). A
  // row can look like the identity's and still fail downstream, so failed
  // candidates are skipped rather than fatal.
  std::string first_error;
  for (int k = 0; k < n; ++k) {
    if (cells[k][k] != identity) continue;
    const auto& order = cells[k];
    std::map<std::string, int> pos;
    bool ok = true;
    for (int i = 0; i < n && ok; ++i)
      if (!pos.emplace(order[i], i).second) ok = false;  // duplicate label
    if (!ok || pos.size() != static_cast<std::size_t>(n)) continue;
    for (int i = 0; i < n && ok; ++i)
      if (cells[i][k] != order[i]) ok = false;  // column k must repeat the order
    if (!ok) continue;

    try {
      std::vector<std::vector<int>> matrix(n, std::vector<int>(n));
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
          auto it = pos.find(cells[i][j]);
          if (it == pos.end())
            throw ValidationError("unknown label '" + cells[i][j] + "' in table body");
          matrix[i][j] = it->second;
        }

      // move the identity to index 0, keeping the other elements' order
      std::vector<int> new_of_old(n);
      std::vector<int> old_of_new;
      old_of_new.push_back(k);
      for (int i = 0; i < n; ++i)
        if (i != k) old_of_new.push_back(i);
      for (int i = 0; i < n; ++i) new_of_old[old_of_new[i]] = i;
      std::vector<std::vector<int>> reordered(n, std::vector<int>(n));
      std::vector<std::string> labels(n);
      for (int i = 0; i < n; ++i) {
        labels[i] = order[old_of_new[i]];
        for (int j = 0; j < n; ++j)
          reordered[i][j] = new_of_old[matrix[old_of_new[i]][old_of_new[j]]];
      }
      return RightLoopTable::validate(reordered, std::move(labels));
    } catch (const ValidationError& e) {
      if (first_error.empty()) first_error = e.what();
    }
  }
  if (!first_error.empty()) throw ValidationError(first_error);
  throw ValidationError("no row/column acts as the identity '" + identity + "'");
}

RightLoopTable read_table_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  return read_table(in);
}

void write_table(std::ostream& out, const RightLoopTable& t) {
  out << "rightloop " << t.size() << " identity=" << t.label(0) << "\n";
  for (int i = 0; i < t.size(); ++i) {
    for (int j = 0; j < t.size(); ++j) {
      if (j) out << ' ';
      out << t.label(t.mul(i, j));
    }
    out << "\n";
  }
}

std::string table_to_string(const RightLoopTable& t) {
  std::ostringstream out;
  write_table(out, t);
  return out.str();
}

GroupSpec read_group_spec(std::istream& in) {
  GroupSpec spec;
  bool saw_degree = false;
  for (const auto& line : data_lines(in)) {
    auto toks = tokens(line);
    const std::string& key = toks[0];
    if (key == "degree") {
      if (toks.size() != 2) throw ParseError("degree takes one number");
      try {
        spec.degree = std::stoi(toks[1]);
      } catch (...) {
        throw ParseError("bad degree: " + toks[1]);
      }
      if (spec.degree < 1) throw ParseError("degree must be positive");
      saw_degree = true;
      continue;
    }
    if (!saw_degree) throw ParseError("degree must come first");
    std::vector<Perm>* target = nullptr;
    if (key == "generators")
      target = &spec.generators;
    else if (key == "subgroup")
      target = &spec.subgroup_generators;
    else if (key == "transversal")
      target = &spec.transversal;
    else
      throw ParseError("unknown keyword '" + key + "'");
    for (std::size_t i = 1; i < toks.size(); ++i)
      target->push_back(Perm::parse(spec.degree, toks[i]));
  }
  if (!saw_degree) throw ParseError("missing degree");
  if (spec.generators.empty()) throw ParseError("missing generators");
  return spec;
}

GroupSpec read_group_spec_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  return read_group_spec(in);
}

TransversalSpec build_transversal(const GroupSpec& spec, std::size_t order_cap) {
  PermGroup g = PermGroup::closure(spec.generators, order_cap);
  PermGroup h = spec.subgroup_generators.empty()
                    ? PermGroup::trivial(spec.degree)
                    : PermGroup::closure(spec.subgroup_generators, order_cap);
  if (!g.contains_group(h))
    throw ValidationError("subgroup generators fall outside the generated group");
  std::vector<Perm> s = spec.transversal;
  if (s.empty())
    s = min_transversal(g, h);
  else
    for (const auto& x : s)
      if (!g.contains(x))
        throw ValidationError("transversal element " + x.str() +
                              " is not in the generated group");
  return {std::move(g), std::move(h), std::move(s)};
}

}  // namespace rloop
