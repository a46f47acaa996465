#ifndef RLOOP_GOLDEN_HPP
#define RLOOP_GOLDEN_HPP

#include <cstdint>
#include <string>
#include <vector>

namespace rloop {

struct GoldenCheck {
  std::string name;
  bool pass = false;
  std::string detail;
};

/// The built-in golden suite: re-derives the bundled example structures and
/// checks every recorded fact about them. `prefix` filters by check-name
/// prefix ("alt4-", "order36-", "census4-", "d18-", "small-"); empty runs
/// everything. The seed drives the randomized spot checks.
std::vector<GoldenCheck> run_golden_checks(const std::string& prefix = "",
                                           std::uint64_t seed = 0);

}  // namespace rloop

#endif
