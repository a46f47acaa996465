#ifndef RLOOP_TESTS_CORPUS_HPP
#define RLOOP_TESTS_CORPUS_HPP

#include <vector>

#include "rloop/census.hpp"
#include "rloop/fixtures.hpp"
#include "rloop/right_loop.hpp"
#include "rloop/transversal.hpp"
#include "support/catalog.hpp"

namespace rloop::testing {

/// Small tables exercised by the property suites: the bundled examples, the
/// full census up to order 4, a deterministic slice of order 5, and the
/// group catalog up to order 12.
inline std::vector<RightLoopTable> property_corpus(int order5_stride = 20) {
  std::vector<RightLoopTable> out = {
      fixtures::alt4_expected_table(),
      fixtures::d18_expected_table(),
      fixtures::order4_center2(),
      fixtures::order4_center2_sibling(),
  };
  for (int n = 2; n <= 4; ++n)
    for (auto& t : enumerate_right_loops(n)) out.push_back(std::move(t));
  auto five = enumerate_right_loops(5);
  for (std::size_t i = 0; i < five.size(); i += order5_stride) out.push_back(five[i]);
  for (auto& [name, table] : small_group_catalog())
    if (table.size() <= 12) out.push_back(table);
  return out;
}

}  // namespace rloop::testing

#endif
