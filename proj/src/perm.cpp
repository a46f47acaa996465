#include "rloop/perm.hpp"

#include <numeric>

#include "rloop/error.hpp"

namespace rloop {

Perm::Perm(int degree) : images_(degree) {
  std::iota(images_.begin(), images_.end(), 0);
}

Perm::Perm(std::vector<int> images) : images_(std::move(images)) {
  std::vector<bool> seen(images_.size(), false);
  for (int v : images_) {
    if (v < 0 || v >= degree() || seen[v])
      throw ValidationError("image list is not a bijection of {0.." +
                            std::to_string(degree() - 1) + "}");
    seen[v] = true;
  }
}

Perm Perm::from_cycles(int degree, const std::vector<std::vector<int>>& cycles) {
  std::vector<int> img(degree);
  std::iota(img.begin(), img.end(), 0);
  for (const auto& c : cycles) {
    for (std::size_t i = 0; i < c.size(); ++i) {
      int from = c[i], to = c[(i + 1) % c.size()];
      if (from < 0 || from >= degree)
        throw ValidationError("cycle point " + std::to_string(from) + " out of range");
      if (img[from] != from) throw ValidationError("cycles are not disjoint");
      img[from] = to;
    }
  }
  return Perm(std::move(img));
}

Perm Perm::parse(int degree, std::string_view text) {
  std::vector<std::vector<int>> cycles;
  std::size_t i = 0;
  auto skip_ws = [&] {
    while (i < text.size() && (text[i] == ' ' || text[i] == '\t')) ++i;
  };
  skip_ws();
  if (i == text.size()) throw ParseError("empty permutation");
  while (i < text.size()) {
    skip_ws();
    if (i == text.size()) break;
    if (text[i] != '(') throw ParseError("expected '(' in cycle notation: " + std::string(text));
    ++i;
    std::vector<int> cycle;
    skip_ws();
    while (i < text.size() && text[i] != ')') {
      int v = 0;
      bool any = false;
      while (i < text.size() && text[i] >= '0' && text[i] <= '9') {
        v = v * 10 + (text[i] - '0');
        ++i;
        any = true;
      }
      if (!any) throw ParseError("expected point number in cycle: " + std::string(text));
      if (v < 1 || v > degree)
        throw ParseError("point " + std::to_string(v) + " outside 1.." + std::to_string(degree));
      cycle.push_back(v - 1);
      skip_ws();
      if (i < text.size() && (text[i] == ',' || text[i] == ' ')) {
        ++i;
        skip_ws();
      }
    }
    if (i == text.size()) throw ParseError("unterminated cycle: " + std::string(text));
    ++i;  // ')'
    if (!cycle.empty()) cycles.push_back(std::move(cycle));
  }
  return from_cycles(degree, cycles);
}

bool Perm::is_identity() const {
  for (int i = 0; i < degree(); ++i)
    if (images_[i] != i) return false;
  return true;
}

Perm Perm::inverse() const {
  std::vector<int> img(images_.size());
  for (int i = 0; i < degree(); ++i) img[images_[i]] = i;
  return Perm(std::move(img));
}

int Perm::order() const {
  int ord = 1;
  std::vector<bool> done(images_.size(), false);
  for (int i = 0; i < degree(); ++i) {
    if (done[i]) continue;
    int len = 0, j = i;
    while (!done[j]) {
      done[j] = true;
      j = images_[j];
      ++len;
    }
    ord = std::lcm(ord, len);
  }
  return ord;
}

std::string Perm::str() const {
  std::string out;
  std::vector<bool> done(images_.size(), false);
  for (int i = 0; i < degree(); ++i) {
    if (done[i] || images_[i] == i) continue;
    out += '(';
    int j = i;
    while (!done[j]) {
      done[j] = true;
      out += std::to_string(j + 1);
      j = images_[j];
      if (!done[j]) out += ',';
    }
    out += ')';
  }
  return out.empty() ? "()" : out;
}

Perm compose(const Perm& p, const Perm& q) {
  if (p.degree() != q.degree())
    throw ValidationError("degree mismatch: " + std::to_string(p.degree()) + " vs " +
                          std::to_string(q.degree()));
  std::vector<int> img(p.degree());
  for (int x = 0; x < p.degree(); ++x) img[x] = q(p(x));
  return Perm(std::move(img));
}

Perm conjugate(const Perm& p, const Perm& q) {
  return compose(compose(q.inverse(), p), q);
}

}  // namespace rloop
